"""Grassmann integrals behind the b1 = 3 and b1 = 2 evaluations.

A random totally symmetric curvature tensor on a 2-dimensional symplectic
space stands in for a hyper-Kähler manifold of dimension 4.  The three-flavour
vertex, the two-flavour vertex with an auxiliary odd field, and the
four-flavour Euler density all integrate to the same rational number.
"""

import random

from qinv import berezin

rng = random.Random(1)
for trial in range(5):
    c = berezin.SyntheticCurvature.random(1, rng, eps=berezin.random_antisym(2, rng))
    b3 = berezin.vertex_integral_b3(c)
    b2 = berezin.vertex_integral_b2(c)
    e = berezin.euler_density(c)
    print(f"trial {trial}: b3 {b3}  b2 {b2}  euler {e}")

a = berezin.AntisymMatrix.from_upper(2, {(0, 1): 5})
print("\nPfaffian of [[0, 5], [-5, 0]] in the Berezin convention:", berezin.pfaffian(a))
