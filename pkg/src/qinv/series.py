"""Exact rational series and polynomials.

Everything here works over :class:`fractions.Fraction`.  Truncated series
carry their order explicitly; mixing orders truncates to the smaller one.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Iterable, Mapping, Union

__all__ = [
    "TruncatedSeries",
    "SymmetricLaurent",
    "MultiPoly",
    "series_exp",
    "series_log",
    "substitute_exp",
    "sinh_kernel_b",
    "as_fraction",
]

Number = Union[int, Fraction]


def as_fraction(value) -> Fraction:
    """Coerce ints, Fractions and strings like ``"3/4"`` to a Fraction.

    Floats are refused: every quantity in this package is exact.
    """
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    raise TypeError(f"expected an exact rational, got {type(value).__name__}")


# ---------------------------------------------------------------------------
# truncated univariate series
# ---------------------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class TruncatedSeries:
    """Power series ``c_0 + c_1 x + ... + c_N x^N`` known up to order N."""

    coeffs: tuple[Fraction, ...]
    var: str = "x"

    def __post_init__(self):
        if not self.coeffs:
            raise ValueError("a truncated series needs at least c_0")
        object.__setattr__(self, "coeffs", tuple(as_fraction(c) for c in self.coeffs))

    @classmethod
    def from_coeffs(cls, coeffs: Iterable, order: int, var: str = "x") -> "TruncatedSeries":
        cs = list(coeffs)[: order + 1]
        cs += [Fraction(0)] * (order + 1 - len(cs))
        return cls(tuple(cs), var)

    @classmethod
    def constant(cls, c, order: int, var: str = "x") -> "TruncatedSeries":
        return cls.from_coeffs([c], order, var)

    @classmethod
    def monomial(cls, power: int, order: int, c=1, var: str = "x") -> "TruncatedSeries":
        cs = [Fraction(0)] * (order + 1)
        if power <= order:
            cs[power] = as_fraction(c)
        return cls(tuple(cs), var)

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, k: int) -> Fraction:
        if k < 0:
            raise IndexError(k)
        if k > self.order:
            raise IndexError(f"coefficient {k} lies beyond truncation order {self.order}")
        return self.coeffs[k]

    def truncate(self, order: int) -> "TruncatedSeries":
        if order > self.order:
            raise ValueError("cannot extend a truncated series")
        return TruncatedSeries(self.coeffs[: order + 1], self.var)

    def _common(self, other: "TruncatedSeries") -> int:
        if self.var != other.var:
            raise ValueError(f"variable mismatch: {self.var!r} vs {other.var!r}")
        return min(self.order, other.order)

    def _coerce(self, other) -> "TruncatedSeries":
        if isinstance(other, TruncatedSeries):
            return other
        return TruncatedSeries.constant(as_fraction(other), self.order, self.var)

    def __add__(self, other):
        other = self._coerce(other)
        n = self._common(other)
        return TruncatedSeries(tuple(self.coeffs[k] + other.coeffs[k] for k in range(n + 1)), self.var)

    __radd__ = __add__

    def __neg__(self):
        return TruncatedSeries(tuple(-c for c in self.coeffs), self.var)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, TruncatedSeries):
            c = as_fraction(other)
            return TruncatedSeries(tuple(c * a for a in self.coeffs), self.var)
        n = self._common(other)
        a, b = self.coeffs, other.coeffs
        out = []
        for k in range(n + 1):
            out.append(sum((a[i] * b[k - i] for i in range(k + 1)), Fraction(0)))
        return TruncatedSeries(tuple(out), self.var)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative powers need series inversion")
        result = TruncatedSeries.constant(1, self.order, self.var)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def agrees_with(self, other: "TruncatedSeries") -> tuple[bool, int]:
        """Compare up to the common order; returns ``(equal, common_order)``."""
        n = self._common(other)
        return self.coeffs[: n + 1] == other.coeffs[: n + 1], n

    def __eq__(self, other):
        if isinstance(other, TruncatedSeries):
            return self.agrees_with(other)[0]
        return NotImplemented

    __hash__ = None

    def derivative(self) -> "TruncatedSeries":
        if self.order == 0:
            return TruncatedSeries((Fraction(0),), self.var)
        return TruncatedSeries(tuple(k * self.coeffs[k] for k in range(1, self.order + 1)), self.var)

    def is_even(self) -> bool:
        return all(c == 0 for c in self.coeffs[1::2])

    def __repr__(self):
        return f"TruncatedSeries({self}, order={self.order})"

    def __str__(self):
        parts = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mono = "" if k == 0 else (self.var if k == 1 else f"{self.var}^{k}")
            if mono and abs(c) == 1:
                term = mono
            else:
                term = f"{abs(c)}" + (f"*{mono}" if mono else "")
            parts.append(("-" if c < 0 else "+", term))
        if not parts:
            return "0"
        head_sign, head = parts[0]
        text = ("-" if head_sign == "-" else "") + head
        for sign, term in parts[1:]:
            text += f" {sign} {term}"
        return text


def series_exp(f: TruncatedSeries) -> TruncatedSeries:
    """Exponential of a series with zero constant term.

    Uses ``h' = f' h``, i.e. ``k h_k = sum_j j f_j h_{k-j}``.
    """
    if f[0] != 0:
        raise ValueError("series_exp needs f(0) = 0")
    n = f.order
    h = [Fraction(1)] + [Fraction(0)] * n
    for k in range(1, n + 1):
        h[k] = sum((j * f.coeffs[j] * h[k - j] for j in range(1, k + 1)), Fraction(0)) / k
    return TruncatedSeries(tuple(h), f.var)


def series_log(f: TruncatedSeries) -> TruncatedSeries:
    """Logarithm of a series with ``f(0) = 1`` by Newton iteration on exp.

    Each step ``g <- g + f exp(-g) - 1`` doubles the number of correct
    coefficients, so the loop stops after about log2(N) rounds.  The result is
    checked against :func:`series_exp` before being returned.
    """
    if f[0] != 1:
        raise ValueError("series_log needs f(0) = 1")
    g = TruncatedSeries.constant(0, f.order, f.var)
    correct = 1
    while True:
        step = f * series_exp(-g) - 1
        g = g + step
        if all(c == 0 for c in step.coeffs):
            break
        correct *= 2
        if correct > 4 * (f.order + 1):
            raise ArithmeticError("Newton iteration for series_log did not converge")
    if not series_exp(g) == f:
        raise ArithmeticError("series_log round trip failed")
    return g


# ---------------------------------------------------------------------------
# symmetric Laurent polynomials in t
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SymmetricLaurent:
    """Laurent polynomial ``sum_k a_k t^k`` with ``a_k = a_{-k}``.

    Stored by its non-negative half ``(a_0, a_1, ..., a_d)``.
    """

    half: tuple[Fraction, ...]

    def __post_init__(self):
        cs = [as_fraction(c) for c in self.half] or [Fraction(0)]
        while len(cs) > 1 and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "half", tuple(cs))

    @classmethod
    def from_half(cls, coeffs: Iterable) -> "SymmetricLaurent":
        """Build from ``a_0..a_d``; negative powers mirror the positive ones."""
        return cls(tuple(coeffs))

    @classmethod
    def from_full(cls, coeffs: Mapping[int, object]) -> "SymmetricLaurent":
        """Build from an exponent -> coefficient map; asymmetric input is an error."""
        cs = {int(k): as_fraction(v) for k, v in coeffs.items()}
        for k, v in cs.items():
            if cs.get(-k, Fraction(0)) != v:
                raise ValueError(f"not symmetric in t and 1/t: a_{k} = {v}, a_{-k} = {cs.get(-k, 0)}")
        d = max((abs(k) for k in cs), default=0)
        return cls(tuple(cs.get(k, Fraction(0)) for k in range(d + 1)))

    @property
    def degree(self) -> int:
        return len(self.half) - 1

    def coefficient(self, k: int) -> Fraction:
        k = abs(k)
        return self.half[k] if k <= self.degree else Fraction(0)

    def full(self) -> dict[int, Fraction]:
        out = {}
        for k, c in enumerate(self.half):
            if c:
                out[k] = c
                out[-k] = c
        return out

    def at_one(self) -> Fraction:
        return self.half[0] + 2 * sum(self.half[1:], Fraction(0))

    def __mul__(self, other: "SymmetricLaurent") -> "SymmetricLaurent":
        prod: dict[int, Fraction] = {}
        for i, a in self.full().items():
            for j, b in other.full().items():
                prod[i + j] = prod.get(i + j, Fraction(0)) + a * b
        if not prod:
            return SymmetricLaurent((Fraction(0),))
        return SymmetricLaurent.from_full(prod)

    def __pow__(self, e: int) -> "SymmetricLaurent":
        out = SymmetricLaurent((Fraction(1),))
        for _ in range(e):
            out = out * self
        return out

    def __str__(self):
        terms = []
        for k in range(self.degree, -self.degree - 1, -1):
            c = self.coefficient(k)
            if c == 0:
                continue
            mono = "" if k == 0 else ("t" if k == 1 else f"t^{k}")
            terms.append(f"{c}" if not mono else (mono if c == 1 else f"{c}*{mono}"))
        return " + ".join(terms) if terms else "0"


def substitute_exp(delta: SymmetricLaurent, order: int) -> TruncatedSeries:
    """The series of ``delta(e^x)`` in x up to ``x^order``.

    Computed as ``a_0 + sum_k a_k (e^{kx} + e^{-kx})``; odd powers cancel.
    """
    if order < 0:
        raise ValueError("order must be non-negative")
    coeffs = [Fraction(0)] * (order + 1)
    coeffs[0] = delta.at_one()
    for j in range(2, order + 1, 2):
        s = sum((2 * c * Fraction(k) ** j for k, c in enumerate(delta.half) if k), Fraction(0))
        coeffs[j] = s / factorial(j)
    return TruncatedSeries(tuple(coeffs))


def sinh_kernel_b(order: int) -> dict[int, Fraction]:
    """Coefficients of ``-log((x/2)/sinh(x/2)) = sum_m 2 b_{2m} x^{2m}``.

    Returns ``{m: b_{2m}}`` for ``2m <= order``.  Only even powers occur.
    """
    if order < 1:
        raise ValueError("order must be at least 1")
    # sinh(x/2)/(x/2) = sum_k (x/2)^{2k} / (2k+1)!
    cs = [Fraction(0)] * (order + 1)
    for k in range(0, order // 2 + 1):
        cs[2 * k] = Fraction(1, 4**k * factorial(2 * k + 1))
    log_kernel = series_log(TruncatedSeries(tuple(cs)))
    return {m: log_kernel[2 * m] / 2 for m in range(1, order // 2 + 1)}


# ---------------------------------------------------------------------------
# multivariate polynomials
# ---------------------------------------------------------------------------

Monomial = tuple[tuple[str, int], ...]


def _mono_mul(a: Monomial, b: Monomial) -> Monomial:
    exps = dict(a)
    for name, e in b:
        exps[name] = exps.get(name, 0) + e
    return tuple(sorted(exps.items()))


class MultiPoly:
    """Polynomial over the rationals in named indeterminates.

    Monomials are sorted tuples of ``(name, exponent)``; zero coefficients are
    never stored.  Instances are treated as immutable.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[Monomial, object] | None = None):
        clean: dict[Monomial, Fraction] = {}
        for mono, c in (terms or {}).items():
            c = as_fraction(c)
            if c:
                key = tuple(sorted((n, e) for n, e in mono if e))
                clean[key] = clean.get(key, Fraction(0)) + c
        self._terms = {k: v for k, v in clean.items() if v}

    @classmethod
    def var(cls, name: str) -> "MultiPoly":
        return cls({((name, 1),): 1})

    @classmethod
    def const(cls, c) -> "MultiPoly":
        return cls({(): c})

    @classmethod
    def parse(cls, text: str) -> "MultiPoly":
        """Parse a polynomial such as ``"Z - a0*h^2 + 3/2"``."""
        import sympy

        expr = sympy.sympify(text.replace("^", "**"), rational=True)
        symbols = sorted(expr.free_symbols, key=lambda s: s.name)
        if not symbols:
            value = sympy.Rational(expr)
            return cls.const(Fraction(int(value.p), int(value.q)))
        poly = sympy.Poly(sympy.expand(expr), *symbols)
        if poly.domain not in (sympy.ZZ, sympy.QQ):
            raise ValueError(f"not a polynomial with rational coefficients: {text!r}")
        terms = {}
        for exps, c in poly.terms():
            mono = tuple((s.name, e) for s, e in zip(symbols, exps) if e)
            c = sympy.Rational(c)
            terms[mono] = Fraction(int(c.p), int(c.q))
        return cls(terms)

    @property
    def terms(self) -> dict[Monomial, Fraction]:
        return dict(self._terms)

    def variables(self) -> set[str]:
        return {n for mono in self._terms for n, _ in mono}

    def is_constant(self) -> bool:
        return all(not mono for mono in self._terms)

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise ValueError(f"{self} is not constant")
        return self._terms.get((), Fraction(0))

    @staticmethod
    def _lift(other) -> "MultiPoly":
        if isinstance(other, MultiPoly):
            return other
        return MultiPoly.const(other)

    def __add__(self, other):
        other = self._lift(other)
        terms = dict(self._terms)
        for k, v in other._terms.items():
            terms[k] = terms.get(k, Fraction(0)) + v
        return MultiPoly(terms)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly({k: -v for k, v in self._terms.items()})

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        other = self._lift(other)
        terms: dict[Monomial, Fraction] = {}
        for ka, va in self._terms.items():
            for kb, vb in other._terms.items():
                k = _mono_mul(ka, kb)
                terms[k] = terms.get(k, Fraction(0)) + va * vb
        return MultiPoly(terms)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative powers are not polynomials")
        out = MultiPoly.const(1)
        for _ in range(e):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, MultiPoly)):
            return self._terms == self._lift(other)._terms
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __bool__(self):
        return bool(self._terms)

    def evaluate(self, values: Mapping[str, object]) -> Union[Fraction, "MultiPoly"]:
        """Substitute numbers (or polynomials) for some or all variables."""
        total = MultiPoly()
        for mono, c in self._terms.items():
            term = MultiPoly.const(c)
            for name, e in mono:
                term = term * ((self._lift(values[name]) ** e) if name in values else MultiPoly.var(name) ** e)
            total = total + term
        return total.constant_value() if total.is_constant() else total

    def __repr__(self):
        return f"MultiPoly({str(self)!r})"

    def __str__(self):
        if not self._terms:
            return "0"

        def key(item):
            mono, _ = item
            return (-sum(e for _, e in mono), mono)

        pieces = []
        for mono, c in sorted(self._terms.items(), key=key):
            factors = [n if e == 1 else f"{n}^{e}" for n, e in mono]
            mag = abs(c)
            if factors and mag == 1:
                body = "*".join(factors)
            else:
                body = "*".join([str(mag)] + factors)
            pieces.append(("-" if c < 0 else "+", body))
        text = ("-" if pieces[0][0] == "-" else "") + pieces[0][1]
        for sign, body in pieces[1:]:
            text += f" {sign} {body}"
        return text
