import random
from fractions import Fraction as F
from itertools import permutations
from math import factorial

import pytest
import sympy

from qinv.berezin import (
    AntisymMatrix,
    GrassmannElement,
    SyntheticCurvature,
    berezin_integral,
    change_of_variables,
    euler_density,
    gaussian_norm_check,
    levi_civita,
    pfaffian,
    random_antisym,
    tadpole_contract,
    vertex_integral_b2,
    vertex_integral_b2_direct,
    vertex_integral_b3,
)
from qinv.series import MultiPoly


# --- independent oracles ------------------------------------------------------


def pf_by_permutations(a: AntisymMatrix):
    """(-1)^k / (2^k k!) sum_sigma sgn(sigma) prod A[s(2i)][s(2i+1)]."""
    size = a.size
    k = size // 2
    total = F(0)
    for perm in permutations(range(size)):
        term = F(levi_civita(perm))
        for i in range(k):
            term *= a[perm[2 * i], perm[2 * i + 1]]
            if not term:
                break
        total += term
    return (-1) ** k * total / (2**k * factorial(k))


def sympy_det(a: AntisymMatrix):
    d = sympy.Matrix([[sympy.Rational(x.numerator, x.denominator) for x in r] for r in a.entries]).det()
    return F(int(d.p), int(d.q))


class Words:
    """Grassmann elements as {tuple of generator indices: coeff}, sorted by bubble sort."""

    @staticmethod
    def normalize(word):
        w = list(word)
        if len(set(w)) != len(w):
            return None, 0
        sign = 1
        for i in range(len(w)):
            for j in range(len(w) - 1 - i):
                if w[j] > w[j + 1]:
                    w[j], w[j + 1] = w[j + 1], w[j]
                    sign = -sign
        return tuple(w), sign

    @classmethod
    def mul(cls, x, y):
        out = {}
        for a, ca in x.items():
            for b, cb in y.items():
                key, sign = cls.normalize(a + b)
                if sign:
                    out[key] = out.get(key, 0) + sign * ca * cb
        return {k: v for k, v in out.items() if v}

    @staticmethod
    def to_element(m, x):
        return GrassmannElement(m, {sum(1 << i for i in k): v for k, v in x.items()})


# --- Grassmann algebra -----------------------------------------------------------


def test_anticommutation():
    e0, e1 = GrassmannElement.generator(3, 0), GrassmannElement.generator(3, 1)
    assert e0 * e1 == -(e1 * e0)
    assert not e0 * e0


def test_berezin_examples():
    assert berezin_integral(GrassmannElement.monomial(2, [0, 1])) == 1
    assert berezin_integral(GrassmannElement.scalar(3, 5)) == 0
    assert berezin_integral(GrassmannElement.monomial(2, [1, 0])) == -1


@pytest.mark.parametrize("seed", range(10))
def test_multiplication_matches_word_oracle(seed):
    rng = random.Random(seed)
    m = 5

    def rand_words():
        out = {}
        for _ in range(rng.randint(1, 6)):
            w = tuple(rng.sample(range(m), rng.randint(0, 3)))
            key, sign = Words.normalize(w)
            out[key] = out.get(key, 0) + sign * F(rng.randint(-5, 5), rng.randint(1, 4))
        return {k: v for k, v in out.items() if v}

    x, y, z = rand_words(), rand_words(), rand_words()
    ex, ey, ez = (Words.to_element(m, w) for w in (x, y, z))
    assert ex * ey == Words.to_element(m, Words.mul(x, y))
    assert (ex * ey) * ez == ex * (ey * ez)


def test_exp_requires_even_nilpotent():
    with pytest.raises(ValueError):
        GrassmannElement.generator(2, 0).exp()
    with pytest.raises(ValueError):
        GrassmannElement.scalar(2, 1).exp()


# --- Pfaffians -------------------------------------------------------------------------


def test_pfaffian_two_by_two():
    a = AntisymMatrix.from_upper(2, {(0, 1): 7})
    assert pfaffian(a) == pfaffian(a, "combinatorial") == pf_by_permutations(a) == -7


def test_pfaffian_two_by_two_symbolic():
    a = AntisymMatrix.from_upper(2, {(0, 1): MultiPoly.var("a")})
    assert pfaffian(a) == -MultiPoly.var("a")
    assert pfaffian(a, "combinatorial") == -MultiPoly.var("a")


def test_pfaffian_blocks():
    a = AntisymMatrix.from_upper(4, {(0, 1): 2, (2, 3): 5})
    assert pfaffian(a) == pfaffian(a, "combinatorial") == 10


def test_pfaffian_odd_size():
    a = AntisymMatrix.from_upper(3, {(0, 1): 1})
    with pytest.raises(ValueError):
        pfaffian(a)


def test_antisymmetry_enforced():
    with pytest.raises(ValueError):
        AntisymMatrix(((0, 1), (1, 0)))


@pytest.mark.parametrize("size", [2, 4, 6])
def test_methods_agree_with_permutation_oracle(size):
    rng = random.Random(size)
    for _ in range(5):
        a = random_antisym(size, rng)
        want = pf_by_permutations(a)
        assert pfaffian(a, "berezin") == want
        assert pfaffian(a, "combinatorial") == want


@pytest.mark.parametrize("size", [2, 4, 6, 8])
def test_pfaffian_squared_is_det(size):
    rng = random.Random(10 + size)
    for _ in range(5):
        a = random_antisym(size, rng)
        assert pfaffian(a) ** 2 == sympy_det(a)


# --- measure and change of variables --------------------------------------------


def test_gaussian_norm():
    assert gaussian_norm_check(AntisymMatrix.standard(1)) == 1
    assert gaussian_norm_check(AntisymMatrix.standard(2, F(7, 3))) == 1
    assert gaussian_norm_check(random_antisym(4, random.Random(5))) == 1
    with pytest.raises(ValueError):
        gaussian_norm_check(AntisymMatrix.from_upper(2, {}))


def generic_f(m, rng=None):
    if rng is None:
        return GrassmannElement(m, {mask: MultiPoly.var(f"c{mask}") for mask in range(1 << m)})
    return GrassmannElement(m, {mask: F(rng.randint(-9, 9), rng.randint(1, 5)) for mask in range(1 << m)})


@pytest.mark.parametrize("n", [1, 2])
def test_change_of_variables_symbolic(n):
    d = 2 * n
    eps = AntisymMatrix.from_upper(d, {(i, j): MultiPoly.var(f"e{i}{j}") for i in range(d) for j in range(i + 1, d)})
    lhs, rhs = change_of_variables(eps, generic_f(d))
    assert lhs == rhs


@pytest.mark.parametrize("seed", range(5))
def test_change_of_variables_normalized_form(seed):
    rng = random.Random(seed)
    eps = random_antisym(4, rng)
    f = generic_f(4, rng)
    pf = pfaffian(eps)
    # int dmu(eta) f(eps eta) = Pfaff(eps) int d^4 eta f(eta)
    lhs = berezin_integral(f.linear_substitute(eps.entries)) / pf
    assert lhs == pf * berezin_integral(f)


# --- curvature and vertex integrals -----------------------------------------------


def test_curvature_symmetry_enforced():
    with pytest.raises(ValueError):
        SyntheticCurvature(1, {(0, 0, 0, 1): 1}, AntisymMatrix.standard(1))


@pytest.mark.parametrize("seed", range(3))
def test_tadpole_vanishes(seed):
    rng = random.Random(seed)
    c = SyntheticCurvature.random(2, rng, eps=random_antisym(4, rng))
    assert all(v == 0 for v in tadpole_contract(c).values())


def one_parameter(n_value):
    """Omega whose only nonzero entries are the permutations of (0, 0, 1, 1)."""
    return SyntheticCurvature.from_sorted(1, {(0, 0, 1, 1): n_value})


def brute_force_b3(c: SyntheticCurvature, coupling=1):
    """Expand exp(V) with the word oracle over 8 generators (n = 1 only)."""
    dim = 2
    vertex = {}
    for perm in permutations(range(3)):
        s = levi_civita(perm)
        for (i, j, k, l), w in c.omega.items():
            if not w:
                continue
            word = (perm[0] * dim + i, perm[1] * dim + j, perm[2] * dim + k, 3 * dim + l)
            key, sign = Words.normalize(word)
            if sign:
                vertex[key] = vertex.get(key, 0) + sign * s * w * F(coupling) / 6
    sq = Words.mul(vertex, vertex)
    top = sq.get(tuple(range(8)), 0) / 2
    return top / pfaffian(c.eps) ** 4


def test_b3_one_parameter_against_oracle():
    c = one_parameter(F(3))
    assert vertex_integral_b3(c) == brute_force_b3(c)
    assert vertex_integral_b3(c) != 0


def test_b3_zero_omega():
    c = SyntheticCurvature.from_sorted(1, {})
    assert vertex_integral_b3(c) == 0
    assert vertex_integral_b2(c) == 0


@pytest.mark.parametrize("seed", range(4))
def test_b3_random_against_oracle(seed):
    rng = random.Random(seed)
    c = SyntheticCurvature.random(1, rng, eps=random_antisym(2, rng))
    assert vertex_integral_b3(c) == brute_force_b3(c)


@pytest.mark.parametrize("coupling", [F(2), F(-1, 3), F(5, 2)])
def test_b3_scaling(coupling):
    c = SyntheticCurvature.random(1, random.Random(7))
    assert vertex_integral_b3(c, coupling) == coupling**2 * vertex_integral_b3(c, 1)


def test_b2_one_parameter():
    c = one_parameter(F(-4, 3))
    assert vertex_integral_b2(c) == brute_force_b3(c)


@pytest.mark.parametrize("seed", range(5))
def test_b2_routes_and_euler_density_agree(seed):
    rng = random.Random(seed)
    c = SyntheticCurvature.random(1, rng, eps=random_antisym(2, rng))
    b3 = vertex_integral_b3(c)
    assert vertex_integral_b2(c) == b3
    assert vertex_integral_b2_direct(c) == b3
    assert euler_density(c) == b3


def test_n2_instance():
    c = SyntheticCurvature.random(2, random.Random(3), bound=3)
    b3 = vertex_integral_b3(c)
    assert vertex_integral_b2_direct(c) == b3
    assert vertex_integral_b3(c, 2) == 16 * b3
