"""Alexander polynomial data: torsion series and wheel coefficients.

Wheels are indexed by their half-degree ``m`` (the wheel with ``2m`` spokes
has degree ``m``), so a multiset of wheel indices has degree ``sum(m_i)``.
Multisets are stored as non-increasing tuples.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Iterable, Mapping

from .errors import DataInvariantError
from .series import (
    SymmetricLaurent,
    TruncatedSeries,
    as_fraction,
    series_exp,
    series_log,
    sinh_kernel_b,
    substitute_exp,
)

__all__ = [
    "AlexanderPolynomial",
    "WheelVector",
    "WheelExponential",
    "a_coeffs",
    "alpha",
    "wheel_exp",
    "torsion_series",
    "symmetry_factor",
    "partitions",
]


@dataclass(frozen=True)
class AlexanderPolynomial:
    """Symmetric Alexander polynomial normalized by ``Delta(1) = 1``."""

    body: SymmetricLaurent

    def __post_init__(self):
        if self.body.at_one() != 1:
            raise DataInvariantError(f"Alexander polynomial must satisfy Delta(1) = 1, got {self.body.at_one()}")

    @classmethod
    def from_half(cls, coeffs: Iterable) -> "AlexanderPolynomial":
        """From the coefficients of ``t^0, t^1, ..., t^d``."""
        return cls(SymmetricLaurent.from_half(coeffs))

    @classmethod
    def trivial(cls) -> "AlexanderPolynomial":
        return cls.from_half([1])

    def __str__(self):
        return str(self.body)


@dataclass(frozen=True)
class WheelVector:
    """Coefficients of the wheels ``omega_{2m}``, keyed by ``m``.

    ``order`` is the largest power of x (= 2m) the entries were computed to.
    """

    coeffs: Mapping[int, Fraction]
    order: int

    def __post_init__(self):
        clean = {}
        for m, c in self.coeffs.items():
            if m < 1:
                raise ValueError(f"wheel index must be >= 1, got {m}")
            if 2 * m > self.order:
                raise ValueError(f"wheel omega_{2 * m} exceeds order {self.order}")
            c = as_fraction(c)
            if c:
                clean[m] = c
        object.__setattr__(self, "coeffs", dict(sorted(clean.items())))

    def __getitem__(self, m: int) -> Fraction:
        return self.coeffs.get(m, Fraction(0))


@dataclass(frozen=True)
class WheelExponential:
    """Disjoint-union exponential of a :class:`WheelVector`.

    Keys are multisets of wheel indices (non-increasing tuples); ``()`` is the
    empty diagram.  Coefficients already include the ``1/prod(mult!)``
    symmetry factor.
    """

    coeffs: Mapping[tuple[int, ...], Fraction]
    order: int

    def degree_part(self, n: int) -> dict[tuple[int, ...], Fraction]:
        return {k: v for k, v in self.coeffs.items() if sum(k) == n}


def symmetry_factor(parts: tuple[int, ...]) -> int:
    """``prod_j mult_j!`` for a multiset of wheel indices."""
    out = 1
    for mult in Counter(parts).values():
        out *= factorial(mult)
    return out


def partitions(n: int, largest: int | None = None):
    """Non-increasing tuples of positive ints summing to n."""
    if n == 0:
        yield ()
        return
    largest = n if largest is None else min(largest, n)
    for first in range(largest, 0, -1):
        for rest in partitions(n - first, first):
            yield (first,) + rest


def a_coeffs(delta: AlexanderPolynomial, order: int) -> dict[int, Fraction]:
    """``a'_{2m}`` from ``-1/2 log Delta(e^x) = sum_m a'_{2m} x^{2m}``, keyed by m."""
    if order < 2:
        raise ValueError("order must be at least 2")
    if not isinstance(delta, AlexanderPolynomial):
        delta = AlexanderPolynomial(delta)
    log_delta = series_log(substitute_exp(delta.body, order))
    return {m: -log_delta[2 * m] / 2 for m in range(1, order // 2 + 1)}


def alpha(delta: AlexanderPolynomial, order: int) -> WheelVector:
    """Wheel coefficients ``2 b_{2m} + a'_{2m}`` for ``2m <= order``."""
    b = sinh_kernel_b(order)
    a = a_coeffs(delta, order)
    return WheelVector({m: 2 * b[m] + a[m] for m in a}, order)


def wheel_exp(alpha_vec: WheelVector, order: int) -> WheelExponential:
    """Expand ``exp(alpha)`` in the disjoint-union product up to degree ``order``.

    The multiset ``{m_1, ..., m_r}`` gets ``prod alpha_{m_i} / prod mult_j!``.
    Wheels beyond the vector's own order are treated as unknown, so the
    expansion is capped at ``alpha_vec.order // 2``.
    """
    if order < 0:
        raise ValueError("order must be non-negative")
    if order > alpha_vec.order // 2:
        raise ValueError(
            f"wheel vector computed to x^{alpha_vec.order} cannot be expanded to degree {order}"
        )
    coeffs: dict[tuple[int, ...], Fraction] = {}
    for n in range(order + 1):
        for parts in partitions(n):
            c = Fraction(1, symmetry_factor(parts))
            for m in parts:
                c *= alpha_vec[m]
            if c:
                coeffs[parts] = c
    return WheelExponential(coeffs, order)


def torsion_series(delta: AlexanderPolynomial, order: int) -> TruncatedSeries:
    """``x^2 tau_RF(M; e^x) = ((x/2)/sinh(x/2))^2 Delta(e^x)`` to ``x^order``."""
    if order < 0:
        raise ValueError("order must be non-negative")
    if not isinstance(delta, AlexanderPolynomial):
        delta = AlexanderPolynomial(delta)
    # (x/2)/sinh(x/2) = exp(-sum 2 b_{2m} x^{2m})
    if order >= 1:
        b = sinh_kernel_b(order)
        log_kernel = TruncatedSeries.from_coeffs(
            [0] + [2 * b[k // 2] if k % 2 == 0 else 0 for k in range(1, order + 1)], order
        )
        kernel = series_exp(-log_kernel)
    else:
        kernel = TruncatedSeries.constant(1, order)
    return kernel * kernel * substitute_exp(delta.body, order)
