"""Closed-form LMO series for b1 >= 1 and the Omega^{(k)} algebra.

Diagram classes are kept opaque: gamma_n (b1 = 3), H_n (b1 = 2) and wheel
monomials (b1 = 1).  Nothing here expands them into trivalent graphs.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Sequence

from .alexander import alpha, wheel_exp
from .errors import UnsupportedCaseError
from .manifold import ClassicalData, lescop
from .series import as_fraction

__all__ = [
    "Diagram",
    "EMPTY",
    "Gamma",
    "H",
    "Wheels",
    "FormalDiagramSeries",
    "z_lmo",
    "omega_rescale",
    "connected_sum_omega",
]

_KIND_ORDER = {"empty": 0, "gamma": 1, "H": 2, "wheels": 3}


@dataclass(frozen=True)
class Diagram:
    kind: str
    n: int = 0
    parts: tuple[int, ...] = ()

    @property
    def degree(self) -> int:
        if self.kind == "wheels":
            return sum(self.parts)
        return self.n

    def sort_key(self):
        return (self.degree, _KIND_ORDER[self.kind], self.n, self.parts)

    def __str__(self):
        if self.kind == "empty":
            return "1"
        if self.kind == "gamma":
            return f"γ{self.n}"
        if self.kind == "H":
            return f"H{self.n}"
        return "w[" + ",".join(map(str, self.parts)) + "]"


EMPTY = Diagram("empty")


def Gamma(n: int) -> Diagram:
    return EMPTY if n == 0 else Diagram("gamma", n)


def H(n: int) -> Diagram:
    return EMPTY if n == 0 else Diagram("H", n)


def Wheels(parts) -> Diagram:
    parts = tuple(sorted(parts, reverse=True))
    if any(m < 1 for m in parts):
        raise ValueError("wheel indices are positive")
    return EMPTY if not parts else Diagram("wheels", parts=parts)


@dataclass(frozen=True)
class FormalDiagramSeries:
    """Finite rational combination of diagram symbols of degree <= ``order``."""

    order: int
    coeffs: Mapping[Diagram, Fraction]

    def __post_init__(self):
        clean = {}
        for sym, c in self.coeffs.items():
            if sym.degree > self.order:
                raise ValueError(f"{sym} has degree {sym.degree} > order {self.order}")
            c = as_fraction(c)
            if c:
                clean[sym] = c
        object.__setattr__(self, "coeffs", dict(sorted(clean.items(), key=lambda kv: kv[0].sort_key())))

    def __getitem__(self, sym: Diagram) -> Fraction:
        return self.coeffs.get(sym, Fraction(0))

    def degree_part(self, n: int) -> dict[Diagram, Fraction]:
        return {s: c for s, c in self.coeffs.items() if s.degree == n}

    def render(self) -> str:
        """Canonical text form, e.g. ``1 + 4·γ1 + 16·γ2``."""
        if not self.coeffs:
            return "0"
        out = ""
        for i, (sym, c) in enumerate(self.coeffs.items()):
            body = str(abs(c)) if sym is EMPTY or sym.kind == "empty" else f"{abs(c)}·{sym}"
            if i == 0:
                out = ("-" if c < 0 else "") + body
            else:
                out += (" - " if c < 0 else " + ") + body
        return out

    def __str__(self):
        return self.render()


def z_lmo(d: ClassicalData, order: int) -> FormalDiagramSeries:
    """LMO invariant truncated at degree ``order`` from classical data.

    b1 > 3 gives 1; b1 = 3 and b1 = 2 give ``sum lambda^n gamma_n`` and
    ``sum lambda^n H_n``; b1 = 1 (with H_1 = Z) gives the wheels exponential
    of the Alexander data, left uncontracted.
    """
    if order < 0:
        raise ValueError("order must be non-negative")
    if d.b1 > 3:
        return FormalDiagramSeries(order, {EMPTY: 1})
    if d.b1 in (2, 3):
        lam = lescop(d)
        sym = Gamma if d.b1 == 3 else H
        return FormalDiagramSeries(order, {sym(n): lam**n for n in range(order + 1)})
    if d.b1 == 1:
        if d.tor_order != 1:
            raise UnsupportedCaseError("the b1 = 1 closed form needs H_1(M) = Z (torsion order 1)")
        wexp = wheel_exp(alpha(d.alexander, max(2, 2 * order)), order)
        return FormalDiagramSeries(order, {Wheels(k): c for k, c in wexp.coeffs.items()})
    raise UnsupportedCaseError("no closed form for b1 = 0; use the lambda algebra instead")


def omega_rescale(lam_kk, m: int, n: int, k: int):
    """``Omega_n^{(k)} = m^{n-k} Omega_k^{(k)}`` with m = |H_1| (0 if infinite)."""
    if not 0 <= k <= n:
        raise ValueError("need 0 <= k <= n")
    return (m ** (n - k)) * lam_kk


def connected_sum_omega(v1: Sequence, v2: Sequence):
    """Degree-n coefficient of the Cauchy product of two Omega^{(d)} vectors."""
    if len(v1) != len(v2):
        raise ValueError(f"length mismatch: {len(v1)} vs {len(v2)}")
    n = len(v1) - 1
    total = 0
    for d1 in range(n + 1):
        total = total + v1[d1] * v2[n - d1]
    return total
