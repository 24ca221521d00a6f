"""Rozansky-Witten evaluations from hyper-Kähler weight data.

A hyper-Kähler manifold X of real dimension 4n enters only through its Euler
number and the integrals ``<P_{m_1} ... P_{m_r}>`` over partitions of n, where
``P_m = sum_{i=1..n} x_i^{2m}`` over the Cartan eigenvalues.

Sign convention for the b1 = 1 (wheel) family: the degree-n contraction is
multiplied by ``(-1)^n``.  At n = 1 this is the familiar overall minus sign
(``Z[S^2 x S^1, K3] = -2``) and for products it keeps ``Z`` multiplicative.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from math import comb
from typing import Mapping

from .alexander import alpha, partitions, symmetry_factor
from .errors import DataInvariantError, UnsupportedCaseError
from .lmo import FormalDiagramSeries
from .manifold import ClassicalData, lescop
from .series import as_fraction

__all__ = [
    "HyperKahlerWeightData",
    "K3",
    "T4",
    "product_x",
    "feasible_vertex_counts",
    "z_rw",
    "w_pair",
    "wheel_sign",
    "z_rw_observable",
    "orev_sign",
    "euler_hilb",
    "euler_kummer",
    "sigma1",
    "parse_partition",
    "format_partition",
]


def parse_partition(text: str) -> tuple[int, ...]:
    """``"2+1+1"`` -> ``(2, 1, 1)``."""
    parts = tuple(sorted((int(p) for p in text.split("+")), reverse=True))
    if not parts or any(p < 1 for p in parts):
        raise ValueError(f"bad partition {text!r}")
    return parts


def format_partition(parts: tuple[int, ...]) -> str:
    return "+".join(map(str, parts))


@dataclass(frozen=True)
class HyperKahlerWeightData:
    """X reduced to ``(n, e(X), {partition of n: <prod P_{m_i}>})``."""

    name: str
    n: int
    euler_char: Fraction
    pairing: Mapping[tuple[int, ...], Fraction] = field(default_factory=dict)

    def __post_init__(self):
        if self.n < 1:
            raise DataInvariantError("quaternionic dimension n must be positive")
        object.__setattr__(self, "euler_char", as_fraction(self.euler_char))
        clean = {}
        for key, value in self.pairing.items():
            parts = parse_partition(key) if isinstance(key, str) else tuple(sorted(key, reverse=True))
            clean[parts] = as_fraction(value)
        expected = set(partitions(self.n))
        if set(clean) != expected:
            missing = sorted(expected - set(clean))
            extra = sorted(set(clean) - expected)
            raise DataInvariantError(
                f"pairing keys must be the partitions of {self.n}; missing {missing}, unexpected {extra}"
            )
        object.__setattr__(self, "pairing", dict(sorted(clean.items(), reverse=True)))


K3 = HyperKahlerWeightData("k3", 1, 24, {(1,): -24})
T4 = HyperKahlerWeightData("t4", 1, 0, {(1,): 0})


def _sub_multisets(parts: tuple[int, ...], size: int):
    """Yield ``(sub, complement, multiplicity)`` with ``sum(sub) == size``.

    ``multiplicity`` counts the positions in ``parts`` that realize the split.
    """
    counts = sorted(Counter(parts).items(), reverse=True)
    for choice in product(*(range(mult + 1) for _, mult in counts)):
        if sum(c * m for (m, _), c in zip(counts, choice)) != size:
            continue
        sub, rest, mult = [], [], 1
        for (m, total), c in zip(counts, choice):
            sub += [m] * c
            rest += [m] * (total - c)
            mult *= comb(total, c)
        yield tuple(sub), tuple(rest), mult


def product_x(x1: HyperKahlerWeightData, x2: HyperKahlerWeightData) -> HyperKahlerWeightData:
    """Weight data of X1 x X2: P_m adds, integrals factor over the two sides."""
    n = x1.n + x2.n
    pairing = {}
    for lam in partitions(n):
        total = Fraction(0)
        for lam1, lam2, mult in _sub_multisets(lam, x1.n):
            total += mult * x1.pairing[lam1] * x2.pairing[lam2]
        pairing[lam] = total
    return HyperKahlerWeightData(f"{x1.name}x{x2.name}", n, x1.euler_char * x2.euler_char, pairing)


def feasible_vertex_counts(n: int, b1: int) -> frozenset[tuple[int, int]]:
    """Vertex counts (p, q) of the two interaction types that can saturate
    the zero modes: p + q = 2n, p >= n(b1 - 1), and q = 0 once b1 >= 2."""
    if n < 1 or b1 < 0:
        raise ValueError("need n >= 1 and b1 >= 0")
    if b1 >= 4:
        return frozenset()
    if b1 in (2, 3):
        return frozenset({(2 * n, 0)})
    return frozenset((p, 2 * n - p) for p in range(2 * n + 1))


def wheel_sign(n: int) -> int:
    return -1 if n % 2 else 1


def _wheel_contraction(alpha_vec, x: HyperKahlerWeightData) -> Fraction:
    # degree-n part of exp(-2 sum alpha_m P_m), integrated over X
    total = Fraction(0)
    for lam, value in x.pairing.items():
        if not value:
            continue
        coeff = Fraction((-2) ** len(lam), symmetry_factor(lam))
        for m in lam:
            coeff *= alpha_vec[m]
        total += coeff * value
    return total


def z_rw(d: ClassicalData, x: HyperKahlerWeightData, torsion_factor: bool = False) -> Fraction:
    """Rozansky-Witten invariant of M (b1 >= 1) for the weight data of X.

    For b1 = 1 the torsion order must be 1 unless ``torsion_factor`` is set,
    in which case the result is multiplied by ``tor^n``.
    """
    if d.b1 == 0:
        raise UnsupportedCaseError("b1 = 0 has no closed form; use the lambda algebra with supplied Z data")
    if not feasible_vertex_counts(x.n, d.b1):
        return Fraction(0)
    if d.b1 in (2, 3):
        return x.euler_char * lescop(d) ** x.n
    # b1 == 1
    if d.tor_order != 1 and not torsion_factor:
        raise UnsupportedCaseError("b1 = 1 with torsion needs torsion_factor=True")
    value = wheel_sign(x.n) * _wheel_contraction(alpha(d.alexander, 2 * x.n), x)
    return value * d.tor_order**x.n if torsion_factor else value


def w_pair(s: FormalDiagramSeries, x: HyperKahlerWeightData) -> Fraction:
    """Rozansky-Witten weight of the degree-n part of a diagram series.

    gamma_n and H_n both weigh e(X); a wheel monomial {m_i} weighs
    ``(-1)^n (-2)^r <prod P_{m_i}>``.
    """
    total = Fraction(0)
    for sym, c in s.degree_part(x.n).items():
        if sym.kind in ("gamma", "H"):
            total += c * x.euler_char
        elif sym.kind == "wheels":
            total += c * wheel_sign(x.n) * (-2) ** len(sym.parts) * x.pairing[sym.parts]
    return total


def z_rw_observable(n: int, k: int, h1: int, z_k):
    """``Z_n[M, O(n-k)] = |H_1|^{n-k} Z_k[M]``; works for rationals and MultiPoly."""
    if not 0 <= k <= n:
        raise ValueError("need 0 <= k <= n")
    return (h1 ** (n - k)) * z_k


def orev_sign(n: int, k: int, b1: int) -> int:
    """Orientation-reversal sign ``(-1)^{(n-k)(1+b1)}`` of ``Z[M, O(k)]``."""
    if not 0 <= k <= n:
        raise ValueError("need 0 <= k <= n")
    return -1 if ((n - k) * (1 + b1)) % 2 else 1


def euler_hilb(n: int) -> int:
    """Euler number of the Hilbert scheme S^[n]: t^n coefficient of prod (1-t^k)^-24."""
    if n < 0:
        raise ValueError("n must be non-negative")
    coeffs = [1] + [0] * n
    for k in range(1, n + 1):
        for _ in range(24):
            # multiply by 1/(1 - t^k)
            for j in range(k, n + 1):
                coeffs[j] += coeffs[j - k]
    return coeffs[n]


def sigma1(n: int) -> int:
    return sum(d for d in range(1, n + 1) if n % d == 0)


def euler_kummer(n: int) -> int:
    """Euler number of the generalized Kummer variety K_n: (n+1)^3 sigma_1(n+1)."""
    if n < 1:
        raise ValueError("n must be at least 1")
    return (n + 1) ** 3 * sigma1(n + 1)
