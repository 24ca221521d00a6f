"""The lambda^k invariants of a rational homology sphere.

``g_s = Z[S^3, O(s)]`` fixes the pairing matrix ``G_{k,l} = g_{k+l}``
(zero past the anti-diagonal, ``g_n = 1`` on it).  Entries may be Fractions
or :class:`~qinv.series.MultiPoly`; every routine uses only ring operations,
so unknown S^3 constants can stay symbolic throughout.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .series import MultiPoly

__all__ = [
    "GData",
    "LambdaVector",
    "ConsumReport",
    "lambda_from_z",
    "z_from_lambda",
    "z_heegaard_pair",
    "connected_sum_lambda",
    "verify_consum",
    "reverse_lambda",
    "casson_g",
    "s3_lambda",
    "ring_det",
    "CONSUM_MAX_N",
]

CONSUM_MAX_N = 6


def _is_one(x) -> bool:
    return x == 1


@dataclass(frozen=True)
class GData:
    """``g_0 .. g_n`` with ``g_n = 1``."""

    g: tuple

    def __post_init__(self):
        g = tuple(self.g)
        if not g:
            raise ValueError("GData needs at least g_0")
        if not _is_one(g[-1]):
            raise ValueError(f"the anti-diagonal entry g_n must be 1, got {g[-1]}")
        object.__setattr__(self, "g", g)

    @property
    def n(self) -> int:
        return len(self.g) - 1

    def entry(self, k: int, l: int):
        s = k + l
        return self.g[s] if s <= self.n else 0

    def matrix(self) -> list[list]:
        return [[self.entry(k, l) for l in range(self.n + 1)] for k in range(self.n + 1)]

    @classmethod
    def symbolic(cls, n: int, prefix: str = "g") -> "GData":
        """Every ``g_s`` (s < n) an independent indeterminate ``{prefix}{s}``."""
        return cls(tuple(MultiPoly.var(f"{prefix}{s}") for s in range(n)) + (1,))

    @classmethod
    def s3(cls, n: int, prefix: str = "a") -> "GData":
        """S^3 data with the orientation-reversal zeros built in.

        ``Z[S^3, O(s)]`` must vanish when ``n - s`` is odd; the remaining
        ``s < n`` entries are unknown and stay symbolic as ``{prefix}{s}``.
        """
        g = []
        for s in range(n):
            g.append(0 if (n - s) % 2 else MultiPoly.var(f"{prefix}{s}"))
        return cls(tuple(g) + (1,))


@dataclass(frozen=True)
class LambdaVector:
    values: tuple
    b1: int = 0

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(self.values))

    @property
    def n(self) -> int:
        return len(self.values) - 1

    def __getitem__(self, k):
        return self.values[k]

    def __len__(self):
        return len(self.values)

    def __eq__(self, other):
        if not isinstance(other, LambdaVector):
            return NotImplemented
        return self.b1 == other.b1 and len(self) == len(other) and all(
            a == b for a, b in zip(self.values, other.values)
        )

    __hash__ = None


def s3_lambda(n: int) -> LambdaVector:
    """``(1, 0, ..., 0)``: lambda^0 = |H_1(S^3)| = 1 and the rest vanish."""
    return LambdaVector((1,) + (0,) * n)


def lambda_from_z(z: Sequence, g: GData) -> LambdaVector:
    """Solve ``z_p = sum_k lambda^k g_{k+p}`` from p = n down to p = 0."""
    if len(z) != len(g.g):
        raise ValueError(f"length mismatch: {len(z)} Z-values for n = {g.n}")
    n = g.n
    lam: list = [None] * (n + 1)
    for p in range(n, -1, -1):
        value = z[p]
        for k in range(n - p):
            value = value - lam[k] * g.g[k + p]
        lam[n - p] = value
    return LambdaVector(tuple(lam))


def z_from_lambda(lam: LambdaVector | Sequence, g: GData) -> tuple:
    """Inverse of :func:`lambda_from_z`."""
    lam = tuple(lam.values if isinstance(lam, LambdaVector) else lam)
    if len(lam) != len(g.g):
        raise ValueError("length mismatch")
    return tuple(
        sum((lam[k] * g.g[k + p] for k in range(g.n - p + 1)), 0) for p in range(g.n + 1)
    )


def z_heegaard_pair(l1: LambdaVector, l2: LambdaVector, g: GData, s: int):
    """``Z[M1 # M2, O(s)] = sum_{k,l} lambda^k(M1) lambda^l(M2) G_{k, l+s}``."""
    if not 0 <= s <= g.n:
        raise ValueError("need 0 <= s <= n")
    if len(l1) != len(g.g) or len(l2) != len(g.g):
        raise ValueError("length mismatch")
    total = 0
    for k, a in enumerate(l1.values):
        for l, b in enumerate(l2.values):
            if k + l + s <= g.n:
                total = total + a * b * g.g[k + l + s]
    return total


def connected_sum_lambda(l1: LambdaVector, l2: LambdaVector) -> LambdaVector:
    """``lambda^p(M1 # M2) = sum_{k+l=p} lambda^k(M1) lambda^l(M2)``."""
    if len(l1) != len(l2):
        raise ValueError("both vectors need the same n")
    n = l1.n
    out = []
    for p in range(n + 1):
        total = 0
        for k in range(p + 1):
            total = total + l1[k] * l2[p - k]
        out.append(total)
    return LambdaVector(tuple(out), b1=max(l1.b1, l2.b1))


@dataclass(frozen=True)
class ConsumReport:
    n: int
    # (p, lambda^p from the Heegaard pairing, lambda^p from the Cauchy product)
    identities: tuple
    holds: bool

    def lines(self) -> list[str]:
        out = []
        for p, lhs, rhs in self.identities:
            mark = "==" if lhs == rhs else "!="
            out.append(f"lambda^{p}(M1#M2) = {lhs}  {mark}  {rhs}")
        return out


def verify_consum(n: int, max_n: int = CONSUM_MAX_N) -> ConsumReport:
    """Check the connected-sum law as a polynomial identity.

    lambda^k(M1) = x_k, lambda^l(M2) = y_l and g_s are all indeterminates.
    The Z-values of the sum come from the Heegaard pairing; recovering lambda
    from them must reproduce the Cauchy product of x and y.
    """
    if n < 0 or n > max_n:
        raise ValueError(f"n must lie in [0, {max_n}]")
    g = GData.symbolic(n)
    l1 = LambdaVector(tuple(MultiPoly.var(f"x{k}") for k in range(n + 1)))
    l2 = LambdaVector(tuple(MultiPoly.var(f"y{k}") for k in range(n + 1)))
    z_sum = [z_heegaard_pair(l1, l2, g, s) for s in range(n + 1)]
    via_pairing = lambda_from_z(z_sum, g)
    via_cauchy = connected_sum_lambda(l1, l2)
    ids = tuple((p, via_pairing[p], via_cauchy[p]) for p in range(n + 1))
    return ConsumReport(n, ids, all(lhs == rhs for _, lhs, rhs in ids))


def reverse_lambda(lam: LambdaVector) -> LambdaVector:
    """Orientation reversal: ``lambda^k -> (-1)^{k(b1+1)} lambda^k``."""
    out = []
    for k, v in enumerate(lam.values):
        out.append(-v if (k * (lam.b1 + 1)) % 2 else v)
    return LambdaVector(tuple(out), lam.b1)


def casson_g(z_m, z_s3, h1: int):
    """``Z[M] - |H_1| Z[S^3]``, the trivial-connection-subtracted invariant."""
    return z_m - h1 * z_s3


def ring_det(matrix: Sequence[Sequence]):
    """Determinant over any commutative ring, by cofactor expansion with memo."""
    size = len(matrix)
    memo: dict[tuple[int, int], object] = {}

    def minor(row: int, cols: int):
        if row == size:
            return 1
        key = (row, cols)
        if key in memo:
            return memo[key]
        total = 0
        sign = 1
        for c in range(size):
            if cols >> c & 1:
                continue
            entry = matrix[row][c]
            if entry != 0:
                # sign = (-1)^(number of unused columns left of c)
                term = entry * minor(row + 1, cols | (1 << c))
                total = total + term if sign > 0 else total - term
            sign = -sign
        memo[key] = total
        return total

    return minor(0, 0)
