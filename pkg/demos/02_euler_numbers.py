"""Euler numbers of the two known families of compact hyper-Kähler manifolds."""

from qinv.rw import euler_hilb, euler_kummer

print("n  e(K3^[n])  e(K_n)")
for n in range(8):
    kummer = euler_kummer(n) if n else "-"
    print(f"{n}  {euler_hilb(n):>9}  {kummer}")
