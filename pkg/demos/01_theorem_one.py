"""LMO series from classical data, and their Rozansky-Witten weights.

For b1 = 3 and b1 = 2 the series is a geometric series in the Lescop
invariant; for b1 = 1 it is an exponential of wheels built from the
Alexander polynomial.  Pairing either one against a hyper-Kähler weight
system gives the same number as the direct formula.
"""

from qinv import K3, product_x, w_pair, z_lmo, z_rw
from qinv.io import load_manifold

K3K3 = product_x(K3, K3)

for name in ("b1-5", "t3", "b3-sample", "b2-sample", "s2xs1", "trefoil-surgery"):
    d = load_manifold(name)
    series = z_lmo(d, 2)
    print(f"{name:16s} b1={d.b1}  Z_LMO = {series}")
    if 1 <= d.b1 <= 3:
        for x in (K3, K3K3):
            direct = z_rw(d, x)
            paired = w_pair(z_lmo(d, x.n), x)
            print(f"{'':16s} {x.name:6s} direct {direct}, paired {paired}")
