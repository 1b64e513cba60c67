"""Sparse multivariate symbol algebra over the rationals.

Implements the Bernoulli symbols B_i (n-th power evaluates to the Bernoulli
number B_n), the uniform symbols U_j (n-th power evaluates to 1/(n+1), the
n-th moment of the uniform law on [0,1]), the formal variable z, and the
linear evaluation functional sending a monomial to the product of moments of
its independent symbols.

Expressions are immutable once built; all operations are pure functions.
Negative symbol powers are not representable here; negative moments are the
business of the numerical layer.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping

from .exact import ZPolynomial, bernoulli_number

__all__ = [
    "Symbol",
    "bernoulli_symbol",
    "uniform_symbol",
    "Z",
    "UmbralExpression",
    "ExpansionCapError",
    "DEFAULT_EXPANSION_CAP",
    "expect",
    "expr_power",
    "shift_substitute",
    "poly_symbol",
    "c_symbol",
]

DEFAULT_EXPANSION_CAP = 5_000_000
_expansion_cap = DEFAULT_EXPANSION_CAP


def set_expansion_cap(cap: int) -> None:
    """Set the process-wide monomial-count cap used when expr_power is called
    without an explicit cap."""
    global _expansion_cap
    if cap < 1:
        raise ValueError("cap must be >= 1")
    _expansion_cap = cap


def get_expansion_cap() -> int:
    return _expansion_cap


class ExpansionCapError(Exception):
    """Raised when a power expansion would exceed the monomial-count cap."""


@dataclass(frozen=True, order=True)
class Symbol:
    """A formal symbol: kind 'B' (Bernoulli), 'U' (uniform) or 'z' (formal variable).

    Distinct (kind, index) pairs denote independent symbols.
    """

    kind: str
    index: int = 0

    def __post_init__(self):
        if self.kind not in ("B", "U", "z"):
            raise ValueError(f"unknown symbol kind {self.kind!r}")
        if self.kind != "z" and self.index < 1:
            raise ValueError("symbol index must be >= 1")

    def __repr__(self):
        return "z" if self.kind == "z" else f"{self.kind}{self.index}"


def bernoulli_symbol(i: int) -> Symbol:
    return Symbol("B", i)


def uniform_symbol(j: int) -> Symbol:
    return Symbol("U", j)


Z = Symbol("z")

# A monomial is a tuple of (Symbol, exponent) pairs sorted by symbol; the
# empty tuple is the constant monomial 1.
Monomial = tuple


def _mono_mul(a: Monomial, b: Monomial) -> Monomial:
    if not a:
        return b
    if not b:
        return a
    merged = dict(a)
    for s, e in b:
        merged[s] = merged.get(s, 0) + e
    return tuple(sorted(merged.items()))


def _mono_pow(m: Monomial, n: int) -> Monomial:
    if n == 0:
        return ()
    if n == 1:
        return m
    return tuple((s, e * n) for s, e in m)


def _mono_moment(m: Monomial) -> Fraction | None:
    """Moment of a monomial with the z part stripped; None if it vanishes."""
    out = Fraction(1)
    for s, e in m:
        if s.kind == "B":
            b = bernoulli_number(e)
            if b == 0:
                return None
            out *= b
        elif s.kind == "U":
            out *= Fraction(1, e + 1)
    return out


class UmbralExpression:
    """Sparse polynomial in Bernoulli/uniform symbols and z over the rationals."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Monomial, Fraction] | None = None):
        t = {}
        if terms:
            for m, c in terms.items():
                if c:
                    t[m] = Fraction(c)
        self.terms = t

    @classmethod
    def constant(cls, c) -> "UmbralExpression":
        c = Fraction(c)
        return cls({(): c} if c else {})

    @classmethod
    def symbol(cls, s: Symbol) -> "UmbralExpression":
        return cls({((s, 1),): Fraction(1)})

    @classmethod
    def monomial(cls, exponents: Mapping[Symbol, int], coeff=Fraction(1)) -> "UmbralExpression":
        for e in exponents.values():
            if e < 0:
                raise ValueError("negative symbol powers are not representable")
        mono = tuple(sorted((s, e) for s, e in exponents.items() if e))
        return cls({mono: Fraction(coeff)})

    @property
    def term_count(self) -> int:
        return len(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def constant_value(self) -> Fraction:
        """The coefficient of the empty monomial."""
        return self.terms.get((), Fraction(0))

    def __add__(self, other):
        other = _as_expr(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            v = out.get(m, Fraction(0)) + c
            if v:
                out[m] = v
            elif m in out:
                del out[m]
        r = UmbralExpression.__new__(UmbralExpression)
        r.terms = out
        return r

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-_as_expr(other))

    def __rsub__(self, other):
        return _as_expr(other) + (-self)

    def __neg__(self):
        r = UmbralExpression.__new__(UmbralExpression)
        r.terms = {m: -c for m, c in self.terms.items()}
        return r

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            q = Fraction(other)
            if not q:
                return UmbralExpression()
            r = UmbralExpression.__new__(UmbralExpression)
            r.terms = {m: c * q for m, c in self.terms.items()}
            return r
        if not isinstance(other, UmbralExpression):
            return NotImplemented
        out: dict = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = _mono_mul(m1, m2)
                v = out.get(m, Fraction(0)) + c1 * c2
                if v:
                    out[m] = v
                elif m in out:
                    del out[m]
        r = UmbralExpression.__new__(UmbralExpression)
        r.terms = out
        return r

    __rmul__ = __mul__

    def __pow__(self, n: int):
        return expr_power(self, n)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = UmbralExpression.constant(other)
        if not isinstance(other, UmbralExpression):
            return NotImplemented
        return self.terms == other.terms

    def substitute(self, symbol: Symbol, replacement: "UmbralExpression") -> "UmbralExpression":
        """Ring substitution symbol -> replacement, exponents expanded."""
        out = UmbralExpression()
        powers = {0: UmbralExpression.constant(1)}
        for m, c in self.terms.items():
            e = 0
            rest = []
            for s, ex in m:
                if s == symbol:
                    e = ex
                else:
                    rest.append((s, ex))
            if e not in powers:
                powers[e] = expr_power(replacement, e)
            base = UmbralExpression({tuple(rest): c})
            out = out + base * powers[e]
        return out

    def expect(self) -> ZPolynomial:
        """Apply the evaluation functional; the z symbol survives as the variable."""
        coeffs: dict[int, Fraction] = {}
        for m, c in self.terms.items():
            zdeg = 0
            rest = []
            for s, e in m:
                if s.kind == "z":
                    zdeg = e
                else:
                    rest.append((s, e))
            mom = _mono_moment(tuple(rest))
            if mom is None:
                continue
            coeffs[zdeg] = coeffs.get(zdeg, Fraction(0)) + c * mom
        if not coeffs:
            return ZPolynomial()
        top = max(coeffs)
        return ZPolynomial([coeffs.get(i, Fraction(0)) for i in range(top + 1)])

    def expect_kind(self, kind: str) -> "UmbralExpression":
        """Evaluate only symbols of one kind, leaving the rest formal.

        Valid because distinct symbols are independent, so the functional
        factorizes over them.
        """
        out: dict = {}
        for m, c in self.terms.items():
            mom = Fraction(1)
            rest = []
            dead = False
            for s, e in m:
                if s.kind != kind:
                    rest.append((s, e))
                elif s.kind == "B":
                    b = bernoulli_number(e)
                    if b == 0:
                        dead = True
                        break
                    mom *= b
                else:
                    mom *= Fraction(1, e + 1)
            if dead:
                continue
            key = tuple(rest)
            v = out.get(key, Fraction(0)) + c * mom
            if v:
                out[key] = v
            elif key in out:
                del out[key]
        r = UmbralExpression.__new__(UmbralExpression)
        r.terms = out
        return r

    def symbols(self) -> set[Symbol]:
        return {s for m in self.terms for s, _ in m}

    def render(self) -> str:
        """Canonical text form: monomials sorted, exponents explicit."""
        if not self.terms:
            return "0"
        parts = []
        for m in sorted(self.terms):
            c = self.terms[m]
            if not m:
                parts.append(str(c))
                continue
            body = "*".join(f"{s}^{e}" for s, e in m)
            if c == 1:
                parts.append(body)
            elif c == -1:
                parts.append(f"-{body}")
            else:
                parts.append(f"{c}*{body}")
        return " + ".join(parts).replace("+ -", "- ")

    def __repr__(self):
        return self.render()


def _as_expr(x) -> UmbralExpression:
    if isinstance(x, UmbralExpression):
        return x
    return UmbralExpression.constant(Fraction(x))


def expr_power(expr: UmbralExpression, n: int, cap: int | None = None) -> UmbralExpression:
    """expr**n by multinomial expansion over the sparse term list.

    The predicted worst-case term count C(n + t - 1, t - 1) for a t-term base
    is checked against the cap before any work happens; cap=None uses the
    process-wide setting (default 5e6 monomials).
    """
    if n < 0:
        raise ValueError("negative expression power")
    if cap is None:
        cap = _expansion_cap
    if n == 0:
        return UmbralExpression.constant(1)
    items = sorted(expr.terms.items())
    t = len(items)
    if t == 0:
        return UmbralExpression()
    if math.comb(n + t - 1, t - 1) > cap:
        raise ExpansionCapError(
            f"expansion of a {t}-term expression to power {n} exceeds cap {cap}"
        )
    monos = [m for m, _ in items]
    coeffs = [c for _, c in items]
    out: dict = {}

    def descend(i: int, rem: int, coef: Fraction, mono: Monomial):
        if i == t - 1:
            c = coef * coeffs[i] ** rem
            m = _mono_mul(mono, _mono_pow(monos[i], rem))
            v = out.get(m, Fraction(0)) + c
            if v:
                out[m] = v
            elif m in out:
                del out[m]
            return
        for e in range(rem + 1):
            c = coef * math.comb(rem, e) * coeffs[i] ** e
            descend(i + 1, rem - e, c, _mono_mul(mono, _mono_pow(monos[i], e)))

    descend(0, n, Fraction(1), ())
    r = UmbralExpression.__new__(UmbralExpression)
    r.terms = out
    return r


def expect(expr: UmbralExpression) -> ZPolynomial:
    """Linear evaluation functional: B_i^n -> B_n, U_j^n -> 1/(n+1), z^n -> z^n."""
    return expr.expect()


def shift_substitute(expr: UmbralExpression, symbol: Symbol, replacement: UmbralExpression) -> UmbralExpression:
    return expr.substitute(symbol, replacement)


def poly_symbol(k: int) -> UmbralExpression:
    """The order-k poly-Bernoulli symbol 1 + sum_{l=1}^{k} B_l prod_{j=l}^{k-1} U_j.

    Always uses symbol indices B_1..B_k and U_1..U_{k-1}; callers needing an
    independent copy must re-index through shift_substitute.  For k = 1 the
    empty product is 1 and the result is 1 + B_1.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    out = UmbralExpression.constant(1)
    for l in range(1, k + 1):
        expos = {bernoulli_symbol(l): 1}
        for j in range(l, k):
            expos[uniform_symbol(j)] = 1
        out = out + UmbralExpression.monomial(expos)
    return out


def c_symbol(k: int) -> UmbralExpression:
    """The companion symbol: poly_symbol(k) - 1; satisfies
    c_symbol(k) = B_k + U_{k-1} * c_symbol(k-1) with c_symbol(1) = B_1."""
    return poly_symbol(k) - UmbralExpression.constant(1)
