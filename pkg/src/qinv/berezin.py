"""Finite Grassmann algebras and Berezin integration.

Monomials are bitmasks over generators ``0 .. m-1``; a set bit means the
generator is present, and the monomial is read in ascending generator order.
Coefficients can be Fractions or :class:`~qinv.series.MultiPoly` values.

Pfaffian convention: ``Pfaff(A) = int d^{2k}theta exp(-1/2 theta A theta)``,
which gives ``-a`` on the 2x2 block ``[[0, a], [-a, 0]]``.  This equals
``(-1)^k`` times the textbook Pfaffian; ``Pfaff(A)^2 = det(A)`` either way.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations, product
from typing import Mapping, Sequence

import sympy

from .series import as_fraction

__all__ = [
    "GrassmannElement",
    "AntisymMatrix",
    "SyntheticCurvature",
    "berezin_integral",
    "pfaffian",
    "gaussian_norm_check",
    "change_of_variables",
    "tadpole_contract",
    "vertex_integral_b3",
    "vertex_integral_b2",
    "vertex_integral_b2_direct",
    "euler_density",
    "random_antisym",
    "random_symmetric_omega",
    "levi_civita",
]


def _coerce(c):
    if isinstance(c, (int, Fraction, str)) and not isinstance(c, bool):
        return as_fraction(c)
    return c


def _reorder_sign(a: int, b: int) -> int:
    """Sign of bringing ``e_A e_B`` into ascending order (A, B disjoint)."""
    swaps = 0
    rest = b
    while rest:
        j = (rest & -rest).bit_length() - 1
        swaps += bin(a >> (j + 1)).count("1")
        rest &= rest - 1
    return -1 if swaps & 1 else 1


class GrassmannElement:
    """Element of the Grassmann algebra on ``m`` generators."""

    __slots__ = ("m", "_terms")

    def __init__(self, m: int, terms: Mapping[int, object] | None = None):
        if m < 0:
            raise ValueError("generator count must be non-negative")
        self.m = m
        full = (1 << m) - 1
        clean = {}
        for mask, c in (terms or {}).items():
            if mask & ~full:
                raise ValueError(f"monomial {mask:b} uses generators beyond {m}")
            c = _coerce(c)
            if c:
                clean[mask] = c
        self._terms = clean

    @classmethod
    def generator(cls, m: int, i: int) -> "GrassmannElement":
        if not 0 <= i < m:
            raise IndexError(f"generator {i} out of range for m = {m}")
        return cls(m, {1 << i: 1})

    @classmethod
    def scalar(cls, m: int, c) -> "GrassmannElement":
        return cls(m, {0: c})

    @classmethod
    def monomial(cls, m: int, indices: Sequence[int], c=1) -> "GrassmannElement":
        """``c * e_{i_1} e_{i_2} ...`` in the order given (zero on repeats)."""
        out = cls.scalar(m, c)
        for i in indices:
            out = out * cls.generator(m, i)
        return out

    @property
    def terms(self) -> dict[int, object]:
        return dict(self._terms)

    def coefficient(self, mask: int):
        return self._terms.get(mask, 0)

    def _check(self, other: "GrassmannElement"):
        if self.m != other.m:
            raise ValueError(f"generator counts differ: {self.m} vs {other.m}")

    def _lift(self, other):
        if isinstance(other, GrassmannElement):
            self._check(other)
            return other
        return GrassmannElement.scalar(self.m, other)

    def __add__(self, other):
        other = self._lift(other)
        out = dict(self._terms)
        for k, c in other._terms.items():
            out[k] = out[k] + c if k in out else c
        return GrassmannElement(self.m, out)

    __radd__ = __add__

    def __neg__(self):
        return GrassmannElement(self.m, {k: -c for k, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, GrassmannElement):
            other = _coerce(other)
            return GrassmannElement(self.m, {k: c * other for k, c in self._terms.items()})
        self._check(other)
        out: dict[int, object] = {}
        for a, ca in self._terms.items():
            for b, cb in other._terms.items():
                if a & b:
                    continue
                term = ca * cb if _reorder_sign(a, b) > 0 else -(ca * cb)
                k = a | b
                out[k] = out[k] + term if k in out else term
        return GrassmannElement(self.m, out)

    def __rmul__(self, other):
        # scalars commute with everything
        return self * other

    def __eq__(self, other):
        if not isinstance(other, GrassmannElement):
            return NotImplemented
        return self.m == other.m and (self - other)._terms == {}

    __hash__ = None

    def __bool__(self):
        return bool(self._terms)

    def is_even(self) -> bool:
        return all(bin(k).count("1") % 2 == 0 for k in self._terms)

    def exp(self) -> "GrassmannElement":
        """``exp(f)`` for an even element with zero body (so f is nilpotent)."""
        if self._terms.get(0):
            raise ValueError("exp needs an element with vanishing constant term")
        if not self.is_even():
            raise ValueError("exp is only defined here for even elements")
        result = GrassmannElement.scalar(self.m, 1)
        power = GrassmannElement.scalar(self.m, 1)
        k = 0
        while True:
            k += 1
            power = power * self * Fraction(1, k)
            if not power:
                return result
            result = result + power

    def substitute(self, images: Sequence["GrassmannElement"]) -> "GrassmannElement":
        """Replace generator ``i`` by ``images[i]`` (odd images keep signs right)."""
        if len(images) != self.m:
            raise ValueError("need one image per generator")
        m_out = images[0].m if images else self.m
        result = GrassmannElement(m_out)
        for mask, c in self._terms.items():
            term = GrassmannElement.scalar(m_out, c)
            for i in range(self.m):
                if mask >> i & 1:
                    term = term * images[i]
            result = result + term
        return result

    def linear_substitute(self, matrix: Sequence[Sequence]) -> "GrassmannElement":
        """``e_i -> sum_j matrix[i][j] e_j``."""
        images = []
        for i in range(self.m):
            images.append(
                GrassmannElement(self.m, {1 << j: matrix[i][j] for j in range(self.m)})
            )
        return self.substitute(images)

    def top(self):
        return self._terms.get((1 << self.m) - 1, 0)

    def __repr__(self):
        if not self._terms:
            return "0"
        parts = []
        for mask in sorted(self._terms, key=lambda k: (bin(k).count("1"), k)):
            gens = "".join(f"e{i}" for i in range(self.m) if mask >> i & 1)
            parts.append(f"({self._terms[mask]}){gens}" if gens else f"({self._terms[mask]})")
        return " + ".join(parts)


def berezin_integral(f: GrassmannElement):
    """Coefficient of the full monomial ``e_0 e_1 ... e_{m-1}``."""
    return f.top()


@dataclass(frozen=True)
class AntisymMatrix:
    entries: tuple

    def __post_init__(self):
        rows = tuple(tuple(_coerce(x) for x in row) for row in self.entries)
        size = len(rows)
        if any(len(r) != size for r in rows):
            raise ValueError("matrix must be square")
        for i in range(size):
            for j in range(size):
                if rows[i][j] != -rows[j][i]:
                    raise ValueError(f"not antisymmetric at ({i}, {j})")
        object.__setattr__(self, "entries", rows)

    @property
    def size(self) -> int:
        return len(self.entries)

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    @classmethod
    def from_upper(cls, size: int, upper: Mapping[tuple[int, int], object]) -> "AntisymMatrix":
        rows = [[0] * size for _ in range(size)]
        for (i, j), v in upper.items():
            if not i < j:
                raise ValueError("upper entries need i < j")
            rows[i][j] = v
            rows[j][i] = -_coerce(v)
        return cls(tuple(map(tuple, rows)))

    @classmethod
    def standard(cls, n: int, scale=1) -> "AntisymMatrix":
        """Block-diagonal symplectic form with ``scale`` in each (2i, 2i+1) slot."""
        return cls.from_upper(2 * n, {(2 * i, 2 * i + 1): scale for i in range(n)})

    def inverse(self) -> list[list[Fraction]]:
        inv = sympy.Matrix([[sympy.Rational(x.numerator, x.denominator) for x in row] for row in self.entries]).inv()
        return [[Fraction(int(v.p), int(v.q)) for v in inv.row(i)] for i in range(self.size)]


def _quadratic_form(a: AntisymMatrix, offset: int, m: int, scale=Fraction(-1, 2)) -> GrassmannElement:
    """``scale * sum_{ij} a_ij theta_i theta_j`` on generators offset..offset+size-1."""
    terms = {}
    for i in range(a.size):
        for j in range(i + 1, a.size):
            if a[i, j]:
                # theta_i theta_j a_ij + theta_j theta_i a_ji = 2 a_ij theta_i theta_j
                terms[(1 << (offset + i)) | (1 << (offset + j))] = 2 * scale * a[i, j]
    return GrassmannElement(m, terms)


def _pfaffian_matching(a: AntisymMatrix):
    """Sum over perfect matchings, times (-1)^k for this module's convention."""
    size = a.size

    def textbook(indices: tuple[int, ...]):
        if not indices:
            return 1
        first, rest = indices[0], indices[1:]
        total = 0
        for pos, partner in enumerate(rest):
            entry = a[first, partner]
            if not entry:
                continue
            sub = textbook(rest[:pos] + rest[pos + 1:])
            term = entry * sub
            total = total + term if pos % 2 == 0 else total - term
        return total

    value = textbook(tuple(range(size)))
    return -value if (size // 2) % 2 else value


def pfaffian(a: AntisymMatrix, method: str = "berezin"):
    """Pfaffian in the Berezin convention (``-a`` on the standard 2x2 block).

    ``method="berezin"`` integrates ``exp(-1/2 theta A theta)``;
    ``method="combinatorial"`` expands over perfect matchings.
    """
    if a.size % 2:
        raise ValueError(f"Pfaffian needs an even-size matrix, got {a.size}")
    if method == "berezin":
        return berezin_integral(_quadratic_form(a, 0, a.size).exp()) if a.size else Fraction(1)
    if method == "combinatorial":
        return _pfaffian_matching(a)
    raise ValueError(f"unknown method {method!r}")


def gaussian_norm_check(eps: AntisymMatrix) -> Fraction:
    """``int dmu(eta) exp(-1/2 eta eps eta)`` with ``dmu = d^{2n}eta / Pfaff(eps)``."""
    pf = pfaffian(eps, "combinatorial")
    if not pf:
        raise ValueError("eps is singular")
    return pfaffian(eps, "berezin") / pf


def change_of_variables(eps: AntisymMatrix, f: GrassmannElement):
    """Both sides of ``int d^{2n}eta f(eps eta) = Pfaff(eps)^2 int d^{2n}eta f(eta)``.

    Dividing through by ``Pfaff(eps)`` gives the normalized-measure form
    ``int dmu(eta) f(eps eta) = Pfaff(eps) int d^{2n}eta f(eta)``; the form
    above avoids division so it also holds for symbolic entries.
    """
    if f.m != eps.size:
        raise ValueError("f must live on as many generators as eps has rows")
    lhs = berezin_integral(f.linear_substitute(eps.entries))
    pf = pfaffian(eps, "combinatorial")
    return lhs, pf * pf * berezin_integral(f)


def levi_civita(perm: Sequence[int]) -> int:
    sign = 1
    for i in range(len(perm)):
        for j in range(i + 1, len(perm)):
            if perm[i] == perm[j]:
                return 0
            if perm[i] > perm[j]:
                sign = -sign
    return sign


@dataclass(frozen=True)
class SyntheticCurvature:
    """A totally symmetric 4-tensor Omega on 2n indices with a symplectic eps."""

    n: int
    omega: Mapping[tuple[int, int, int, int], Fraction]
    eps: AntisymMatrix

    def __post_init__(self):
        dim = 2 * self.n
        if self.eps.size != dim:
            raise ValueError(f"eps must be {dim}x{dim}")
        if not pfaffian(self.eps, "combinatorial"):
            raise ValueError("eps must be nondegenerate")
        full = {}
        for idx in product(range(dim), repeat=4):
            full[idx] = _coerce(self.omega.get(idx, 0))
        for idx, v in full.items():
            for p in set(permutations(idx)):
                if full[p] != v:
                    raise ValueError(f"Omega is not totally symmetric: {idx} vs {p}")
        object.__setattr__(self, "omega", full)

    @property
    def dim(self) -> int:
        return 2 * self.n

    @classmethod
    def from_sorted(cls, n: int, values: Mapping[tuple[int, ...], object], eps: AntisymMatrix | None = None):
        """Build from entries on non-decreasing index tuples; symmetrizes."""
        omega = {}
        for key, v in values.items():
            for p in set(permutations(tuple(sorted(key)))):
                omega[p] = v
        return cls(n, omega, eps if eps is not None else AntisymMatrix.standard(n))

    @classmethod
    def random(cls, n: int, rng: random.Random, eps: AntisymMatrix | None = None, bound: int = 5):
        return cls.from_sorted(n, random_symmetric_omega(2 * n, rng, bound), eps)


def random_symmetric_omega(dim: int, rng: random.Random, bound: int = 5) -> dict:
    out = {}
    for i in range(dim):
        for j in range(i, dim):
            for k in range(j, dim):
                for l in range(k, dim):
                    out[(i, j, k, l)] = Fraction(rng.randint(-bound, bound), rng.randint(1, bound))
    return out


def random_antisym(size: int, rng: random.Random, bound: int = 9) -> AntisymMatrix:
    return AntisymMatrix.from_upper(
        size,
        {(i, j): Fraction(rng.randint(-bound, bound), rng.randint(1, bound)) for i in range(size) for j in range(i + 1, size)},
    )


def tadpole_contract(c: SyntheticCurvature) -> dict[tuple[int, int], Fraction]:
    """``T_{KL} = sum_{IJ} Omega_{IJKL} eps^{IJ}`` with eps^{IJ} the inverse matrix."""
    inv = c.eps.inverse()
    dim = c.dim
    out = {}
    for k, l in product(range(dim), repeat=2):
        out[(k, l)] = sum(
            (c.omega[(i, j, k, l)] * inv[i][j] for i in range(dim) for j in range(dim)), Fraction(0)
        )
    return out


def _flavor(block: int, index: int, dim: int) -> int:
    return block * dim + index


def _odd_product(m: int, gens: Sequence[int], coeff) -> GrassmannElement:
    return GrassmannElement.monomial(m, gens, coeff)


def _measure_norm(c: SyntheticCurvature, flavors: int):
    pf = pfaffian(c.eps, "combinatorial")
    return Fraction(1) / pf**flavors


def _top_of_exp(vertex: GrassmannElement, power: int):
    """Top coefficient of exp(vertex) when only ``vertex^power / power!`` reaches it."""
    term = GrassmannElement.scalar(vertex.m, 1)
    for k in range(1, power + 1):
        term = term * vertex * Fraction(1, k)
    return berezin_integral(term)


def vertex_integral_b3(c: SyntheticCurvature, coupling=1):
    """Zero-mode integral for b1 = 3.

    Generators are three chi flavors and eta, each a block of 2n; every block
    carries the normalized measure ``d^{2n} / Pfaff(eps)``.  The vertex is
    ``coupling/6 * Omega_{IJKL} eps^{abc} chi^I_a chi^J_b chi^K_c eta^L``.
    """
    dim, m = c.dim, 4 * c.dim
    coupling = _coerce(coupling)
    vertex_terms = GrassmannElement(m)
    for perm in permutations(range(3)):
        sign = levi_civita(perm)
        for (i, j, k, l), w in c.omega.items():
            if not w:
                continue
            gens = [
                _flavor(perm[0], i, dim),
                _flavor(perm[1], j, dim),
                _flavor(perm[2], k, dim),
                _flavor(3, l, dim),
            ]
            vertex_terms = vertex_terms + _odd_product(m, gens, sign * w * coupling / 6)
    # 8n generators, 4 per vertex
    return _top_of_exp(vertex_terms, 2 * c.n) * _measure_norm(c, 4)


def _h_lambda(c: SyntheticCurvature, m: int) -> list[GrassmannElement]:
    """``Lambda_I = 1/2 Omega_{IJKL} eps^{ab} chi^J_a chi^K_b eta^L`` on blocks 0, 1, 2."""
    dim = c.dim
    out = []
    for i in range(dim):
        acc = GrassmannElement(m)
        for a, b in ((0, 1), (1, 0)):
            sign = 1 if a < b else -1
            for j, k, l in product(range(dim), repeat=3):
                w = c.omega[(i, j, k, l)]
                if w:
                    gens = [_flavor(a, j, dim), _flavor(b, k, dim), _flavor(2, l, dim)]
                    acc = acc + _odd_product(m, gens, sign * w / 2)
        out.append(acc)
    return out


def vertex_integral_b2(c: SyntheticCurvature):
    """Zero-mode integral for b1 = 2 through an auxiliary odd field psi.

    Blocks: chi_1, chi_2, eta, psi.  The integrand is
    ``exp(-1/2 psi eps psi + Lambda_I psi^I)``, all four blocks with the
    normalized measure.
    """
    dim, m = c.dim, 4 * c.dim
    lam = _h_lambda(c, m)
    action = _quadratic_form(c.eps, 3 * dim, m)
    for i in range(dim):
        action = action + lam[i] * GrassmannElement.generator(m, _flavor(3, i, dim))
    return berezin_integral(action.exp()) * _measure_norm(c, 4)


def vertex_integral_b2_direct(c: SyntheticCurvature):
    """Same integral after doing psi first: the H vertex ``1/2 Lambda_I eps^{IJ} Lambda_J``.

    Integrating psi against ``exp(-1/2 psi eps psi + Lambda psi)`` with the
    normalized measure leaves ``exp(-1/2 Lambda_I eps^{IJ} Lambda_J)`` with
    ``eps^{IJ}`` the inverse matrix.
    """
    dim, m = c.dim, 3 * c.dim
    lam = _h_lambda(c, m)
    inv = c.eps.inverse()
    vertex = GrassmannElement(m)
    for i, j in product(range(dim), repeat=2):
        if inv[i][j]:
            vertex = vertex + lam[i] * lam[j] * (_H_SIGN * inv[i][j] / 2)
    # 6n generators, 6 per H vertex
    return _top_of_exp(vertex, c.n) * _measure_norm(c, 3)


# Sign of the H vertex after eliminating psi.
_H_SIGN = Fraction(-1)


def euler_density(c: SyntheticCurvature):
    """Four chi flavors with ``1/24 Omega eps^{abcd} chi_a chi_b chi_c chi_d``."""
    dim, m = c.dim, 4 * c.dim
    vertex = GrassmannElement(m)
    for perm in permutations(range(4)):
        sign = levi_civita(perm)
        for (i, j, k, l), w in c.omega.items():
            if w:
                gens = [_flavor(perm[0], i, dim), _flavor(perm[1], j, dim), _flavor(perm[2], k, dim), _flavor(perm[3], l, dim)]
                vertex = vertex + _odd_product(m, gens, sign * w / 24)
    return _top_of_exp(vertex, 2 * c.n) * _measure_norm(c, 4)
