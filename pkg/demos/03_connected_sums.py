"""The lambda^k invariants of rational homology spheres.

The unknown values Z[S^3, O(s)] stay symbolic.  Recovering lambda from the
Heegaard pairing of a connected sum gives the Cauchy product of the two
lambda vectors, whatever those values are.
"""

from qinv.lam import GData, lambda_from_z, verify_consum
from qinv.series import MultiPoly

a, z, h = MultiPoly.var("a"), MultiPoly.var("Z"), MultiPoly.var("h")
lam = lambda_from_z([z, 0, h**2], GData((a, 0, 1)))
print("n = 2 rational homology sphere:")
for k, v in enumerate(lam.values):
    print(f"  lambda^{k} = {v}")

for n in (1, 2, 3):
    report = verify_consum(n)
    print(f"\nconnected sum at n = {n}: {'holds' if report.holds else 'FAILS'}")
    for line in report.lines():
        print("  " + line)
