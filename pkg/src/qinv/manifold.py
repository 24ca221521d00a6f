"""Classical data of a closed oriented 3-manifold."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .alexander import AlexanderPolynomial
from .errors import DataInvariantError, UnsupportedCaseError
from .series import as_fraction

__all__ = ["ClassicalData", "h1_order", "lescop", "connected_sum_data", "S3"]


@dataclass(frozen=True)
class ClassicalData:
    """First Betti number, torsion order of H_1, and the one structural field
    that matters for that Betti number.

    ``cup_triple`` (b1 = 3) is the integer whose square, times the torsion
    order, is the Lescop invariant.  ``linking_mu`` (b1 = 2) is the rational
    self-linking integral of the one-form g with dg = w1 ^ w2.
    ``alexander`` is required when b1 = 1.
    """

    b1: int
    tor_order: int = 1
    cup_triple: Optional[int] = None
    linking_mu: Optional[Fraction] = None
    alexander: Optional[AlexanderPolynomial] = None
    name: str = ""

    def __post_init__(self):
        if self.b1 < 0:
            raise DataInvariantError("b1 must be non-negative")
        if self.tor_order < 1:
            raise DataInvariantError("torsion order must be a positive integer")
        if self.linking_mu is not None:
            object.__setattr__(self, "linking_mu", as_fraction(self.linking_mu))
        expected = {3: "cup_triple", 2: "linking_mu", 1: "alexander"}.get(self.b1)
        for fname in ("cup_triple", "linking_mu", "alexander"):
            present = getattr(self, fname) is not None
            if fname == expected and not present:
                raise DataInvariantError(f"b1 = {self.b1} requires {fname}")
            if fname != expected and present:
                raise DataInvariantError(f"{fname} is only meaningful for b1 = {_b1_of(fname)}, got b1 = {self.b1}")

    @property
    def h1_order(self) -> int:
        return h1_order(self)


def _b1_of(fname: str) -> int:
    return {"cup_triple": 3, "linking_mu": 2, "alexander": 1}[fname]


S3 = ClassicalData(b1=0, tor_order=1, name="s3")


def h1_order(d: ClassicalData) -> int:
    """|H_1(M; Z)|, with the convention that an infinite group counts as 0."""
    return d.tor_order if d.b1 == 0 else 0


def lescop(d: ClassicalData) -> Fraction:
    """Lescop invariant for b1 = 3 (tor * mu^2) and b1 = 2 (tor * linking_mu).

    The b1 = 2 value uses the positive sign convention ``+|Tor H_1| mu(M)``.
    """
    if d.b1 == 3:
        return Fraction(d.tor_order * d.cup_triple**2)
    if d.b1 == 2:
        return d.tor_order * d.linking_mu
    raise UnsupportedCaseError(f"Lescop closed form only implemented for b1 in {{2, 3}}, got {d.b1}")


def connected_sum_data(d1: ClassicalData, d2: ClassicalData) -> ClassicalData:
    """Classical data of M1 # M2 when at least one summand is a QHS."""
    if d1.b1 > 0 and d2.b1 > 0:
        raise UnsupportedCaseError("connected sum of two manifolds with b1 > 0 is not supported")
    main, other = (d1, d2) if d1.b1 >= d2.b1 else (d2, d1)
    name = f"{d1.name}#{d2.name}" if d1.name and d2.name else ""
    return ClassicalData(
        b1=main.b1,
        tor_order=main.tor_order * other.tor_order,
        cup_triple=main.cup_triple,
        linking_mu=main.linking_mu,
        alexander=main.alexander,
        name=name,
    )
