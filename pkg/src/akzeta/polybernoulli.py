"""Poly-Bernoulli polynomials B_n^{(k)}(z) and the companion family C_n^{(k)}(z)
computed along three independent routes (generating-function coefficients,
symbolic moment expansion, Stirling-number closed form), plus the exact
integral-transform representations through Bernoulli-Barnes polynomials on
the unit cube and on the ordered simplex.

Route agreement across all of these is the central correctness invariant of
the package.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Union

from .exact import (
    ZPolynomial,
    binomial,
    expm1_series,
    one_minus_exp_neg_series,
    polylog_series,
    series_compose,
    stirling2,
)
from .umbral import (
    UmbralExpression,
    Z,
    bernoulli_symbol,
    c_symbol,
    expect,
    expr_power,
    poly_symbol,
    uniform_symbol,
)

__all__ = [
    "PolyBernoulliTable",
    "BarnesParameters",
    "BarnesPolynomial",
    "InternalInvariantError",
    "poly_bernoulli_series",
    "poly_bernoulli_umbral",
    "poly_bernoulli_umbral_at",
    "poly_bernoulli_stirling",
    "stirling_table",
    "umbral_numbers",
    "bc_convert",
    "bernoulli_barnes",
    "barnes_transform_cube",
    "simplex_transform",
]

VARIANTS = ("B", "C")
ROUTES = ("series", "umbral", "stirling", "barnes-cube", "barnes-simplex")


class InternalInvariantError(Exception):
    """An internal algebraic invariant was violated; indicates a bug, not bad input."""


@dataclass
class PolyBernoulliTable:
    """Polynomials indexed by n for one (k, variant), tagged with their route."""

    k: int
    variant: str
    route: str
    entries: list[ZPolynomial] = field(default_factory=list)

    def __post_init__(self):
        if self.variant not in VARIANTS:
            raise ValueError(f"variant must be one of {VARIANTS}")
        if self.route not in ROUTES:
            raise ValueError(f"unknown route {self.route!r}")

    @property
    def n_max(self) -> int:
        return len(self.entries) - 1

    def value(self, n: int) -> ZPolynomial:
        return self.entries[n]

    def number(self, n: int) -> Fraction:
        """The number at z = 0 (B_n^{(k)} for the B variant, C_n^{(k)} for C)."""
        return self.entries[n](Fraction(0))

    def to_csv(self) -> str:
        lines = ["n,k,variant,num,den"]
        for n in range(len(self.entries)):
            q = self.number(n)
            lines.append(f"{n},{self.k},{self.variant},{q.numerator},{q.denominator}")
        return "\n".join(lines) + "\n"

    def to_json(self) -> dict:
        return {
            "k": self.k,
            "variant": self.variant,
            "route": self.route,
            "entries": [p.to_json() for p in self.entries],
        }


def _lift_numbers(numbers: list[Fraction]) -> list[ZPolynomial]:
    """Polynomial entries from the z = 0 numbers via the e^{zt} product:
    entry_n(z) = sum_m C(n,m) b_m z^{n-m}."""
    out = []
    for n in range(len(numbers)):
        coeffs = [Fraction(0)] * (n + 1)
        for m in range(n + 1):
            coeffs[n - m] = binomial(n, m) * numbers[m]
        out.append(ZPolynomial(coeffs))
    return out


def poly_bernoulli_series(n_max: int, k: int, variant: str = "B") -> PolyBernoulliTable:
    """Coefficient extraction from Li_k(1-e^{-t})/(1-e^{-t}) (B variant) or
    Li_k(1-e^{-t})/(e^t-1) (C variant); entries are n! times the t^n
    coefficient, extended to polynomials by the e^{zt} factor.
    """
    if n_max < 0:
        raise ValueError("n_max must be >= 0")
    if k < 1:
        raise ValueError("k must be >= 1")
    if variant not in VARIANTS:
        raise ValueError(f"variant must be one of {VARIANTS}")
    # one extra order so the valuation-shifted quotient still covers t^n_max
    order = n_max + 1
    w = one_minus_exp_neg_series(order)
    num = series_compose(polylog_series(k, order), w)
    den = w if variant == "B" else expm1_series(order)
    gf = num.divide(den)
    numbers = [gf.factorial_coefficient(n) for n in range(n_max + 1)]
    return PolyBernoulliTable(k, variant, "series", _lift_numbers(numbers))


def poly_bernoulli_umbral(n: int, k: int, variant: str = "B") -> ZPolynomial:
    """B_n^{(k)}(z) or C_n^{(k)}(z) as the expectation of (z + symbol)^n."""
    if n < 0:
        raise ValueError("n must be >= 0")
    sym = poly_symbol(k) if variant == "B" else c_symbol(k)
    base = UmbralExpression.symbol(Z) + sym
    return expect(expr_power(base, n))


def poly_bernoulli_umbral_at(n: int, k: int, variant: str = "B", z: Fraction = Fraction(0)) -> Fraction:
    """Same as poly_bernoulli_umbral but with z folded in as a constant up
    front, which keeps the expansion one symbol smaller."""
    sym = poly_symbol(k) if variant == "B" else c_symbol(k)
    base = UmbralExpression.constant(z) + sym
    return expect(expr_power(base, n)).coefficient(0)


def umbral_numbers(n_max: int, k: int, variant: str = "B") -> list[Fraction]:
    return [poly_bernoulli_umbral_at(n, k, variant) for n in range(n_max + 1)]


def poly_bernoulli_stirling(n: int, k: int) -> Fraction:
    """Closed form B_n^{(k)} = (-1)^n sum_m (-1)^m m! S(n,m) / (m+1)^k."""
    if n < 0 or k < 1:
        raise ValueError("need n >= 0 and k >= 1")
    s = Fraction(0)
    for m in range(n + 1):
        s += Fraction((-1) ** m * math.factorial(m) * stirling2(n, m), (m + 1) ** k)
    return (-1) ** n * s


def stirling_table(n_max: int, k: int) -> PolyBernoulliTable:
    numbers = [poly_bernoulli_stirling(n, k) for n in range(n_max + 1)]
    return PolyBernoulliTable(k, "B", "stirling", _lift_numbers(numbers))


def bc_convert(table: PolyBernoulliTable, direction: str) -> PolyBernoulliTable:
    """Binomial transform between the B and C families, entry-wise:

      C_n = sum_l C(n,l) (-1)^{n-l} B_l      (direction "B->C")
      B_n = sum_l C(n,l) C_l                 (direction "C->B")

    Exact, and an involution pair (B->C then C->B is the identity).
    """
    if direction == "B->C":
        if table.variant != "B":
            raise ValueError("B->C conversion needs a B-variant table")
        sign = -1
        new_variant = "C"
    elif direction == "C->B":
        if table.variant != "C":
            raise ValueError("C->B conversion needs a C-variant table")
        sign = 1
        new_variant = "B"
    else:
        raise ValueError("direction must be 'B->C' or 'C->B'")
    entries = []
    for n in range(len(table.entries)):
        acc = ZPolynomial()
        for l in range(n + 1):
            c = binomial(n, l) if sign > 0 else binomial(n, l) * (-1) ** (n - l)
            acc = acc + table.entries[l] * Fraction(c)
        entries.append(acc)
    return PolyBernoulliTable(table.k, new_variant, table.route, entries)


@dataclass
class BarnesParameters:
    """Parameters of the Bernoulli-Barnes generating function e^{zt} prod t/(e^{a_i t}-1).

    Each a_i is a positive rational or a monomial in the uniform symbols;
    z is a rational shift or None for the formal variable.
    """

    a: list
    z: Union[Fraction, None] = None

    def __post_init__(self):
        if not self.a:
            raise ValueError("parameter list must be nonempty")
        for ai in self.a:
            if isinstance(ai, UmbralExpression):
                if len(ai.terms) != 1:
                    raise ValueError("symbolic parameters must be single monomials")
                mono, coeff = next(iter(ai.terms.items()))
                if coeff <= 0 or any(s.kind != "U" for s, _ in mono):
                    raise ValueError("symbolic parameters must be monomials in the u-variables")
            elif Fraction(ai) == 0:
                raise ValueError("parameters must be nonzero")


@dataclass
class BarnesPolynomial:
    """A Bernoulli-Barnes polynomial with the 1/prod(a_i) prefactor tracked
    symbolically: value = numerator / denominator, where denominator is a
    single u-monomial (possibly 1)."""

    numerator: UmbralExpression
    denominator: UmbralExpression

    def as_polynomial(self) -> ZPolynomial:
        """Collapse to a polynomial in z; only valid when the denominator is 1."""
        if self.denominator != UmbralExpression.constant(1):
            raise ValueError("denominator is symbolic; cannot collapse")
        return self.numerator.expect()


def bernoulli_barnes(n: int, params: BarnesParameters) -> BarnesPolynomial:
    """(1/prod a_i) * E[(z + sum a_i B_i)^n] over independent Bernoulli symbols.

    The Bernoulli expectation is applied immediately, so the numerator is a
    polynomial in z and the u-variables only.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    k = len(params.a)
    if params.z is None:
        base = UmbralExpression.symbol(Z)
    else:
        base = UmbralExpression.constant(params.z)
    scalar = Fraction(1)
    denom = UmbralExpression.constant(1)
    for i, ai in enumerate(params.a, start=1):
        bi = UmbralExpression.symbol(bernoulli_symbol(i))
        if isinstance(ai, UmbralExpression):
            base = base + ai * bi
            denom = denom * ai
        else:
            q = Fraction(ai)
            base = base + bi * q
            scalar *= q
    numerator = expr_power(base, n).expect_kind("B") * (Fraction(1) / scalar)
    return BarnesPolynomial(numerator, denom)


def _u_weight_monomial(k: int) -> UmbralExpression:
    """u_1 u_2^2 ... u_{k-1}^{k-1}, the unit-cube transform weight."""
    expos = {uniform_symbol(j): j for j in range(1, k)}
    return UmbralExpression.monomial(expos) if expos else UmbralExpression.constant(1)


def barnes_transform_cube(n: int, k: int, z: Union[Fraction, None] = None):
    """Exact unit-cube integral transform of the Bernoulli-Barnes polynomial:

    integrates 𝔅_n^{(k)}(u_{k-1}...u_1, ..., u_{k-1}, 1; z+1) u_1 u_2^2 ... u_{k-1}^{k-1}
    over [0,1]^{k-1}; the prefactor 1/prod(a_i) cancels the weight exactly and
    each u-monomial integrates to 1/(exponent+1).  Returns B_n^{(k)}(z) as a
    polynomial for z=None, else the rational value.
    """
    if n < 0 or k < 1:
        raise ValueError("need n >= 0 and k >= 1")
    a = []
    for i in range(1, k + 1):
        expos = {uniform_symbol(j): 1 for j in range(i, k)}
        a.append(UmbralExpression.monomial(expos) if expos else UmbralExpression.constant(1))
    shift = None if z is None else Fraction(z) + 1
    bp = bernoulli_barnes(n, BarnesParameters(a, shift))
    weight = _u_weight_monomial(k)
    if bp.denominator != weight:
        raise InternalInvariantError("cube weight does not cancel the Barnes prefactor")
    integrand = bp.numerator  # weight/denominator == 1
    if z is None:
        # the formal route built the argument as bare z; the transform needs z+1
        integrand = integrand.substitute(
            Z, UmbralExpression.symbol(Z) + UmbralExpression.constant(1)
        )
        return integrand.expect()
    return integrand.expect().coefficient(0)


def simplex_transform(n: int, k: int, z: Union[Fraction, None] = None):
    """Exact ordered-simplex representation: iterated integral over
    0 <= v_1 <= ... <= v_{k-1} <= 1 of

        E[(1 + z + B_k + v_{k-1} B_{k-1} + ... + v_1 B_1)^n] / (v_2 ... v_{k-1})

    carried out one variable at a time; the inner integrations raise each
    exponent so the single division per variable never goes negative, keeping
    every step exact.  Returns B_n^{(k)}(z).
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    if k < 2:
        raise ValueError("simplex transform requires k >= 2")
    zt = UmbralExpression.symbol(Z) if z is None else UmbralExpression.constant(z)
    base = UmbralExpression.constant(1) + zt + UmbralExpression.symbol(bernoulli_symbol(k))
    for l in range(1, k):
        base = base + UmbralExpression.monomial(
            {uniform_symbol(l): 1, bernoulli_symbol(l): 1}
        )
    expr = expr_power(base, n).expect_kind("B")  # polynomial in v's (U symbols) and z
    for j in range(1, k):
        vj = uniform_symbol(j)
        nxt = uniform_symbol(j + 1)
        out: dict = {}
        for mono, coeff in expr.terms.items():
            e = 0
            rest = []
            for s, ex in mono:
                if s == vj:
                    e = ex
                else:
                    rest.append((s, ex))
            if j >= 2:
                e -= 1  # the 1/v_j density factor
                if e < 0:
                    raise InternalInvariantError(
                        f"negative exponent for v_{j} during simplex integration"
                    )
            if j < k - 1:
                # int_0^{v_{j+1}} v_j^e dv_j = v_{j+1}^{e+1}/(e+1)
                newmono = dict(rest)
                newmono[nxt] = newmono.get(nxt, 0) + e + 1
                key = tuple(sorted(newmono.items()))
            else:
                key = tuple(rest)  # int_0^1 v^e dv = 1/(e+1)
            c = coeff / (e + 1)
            v = out.get(key, Fraction(0)) + c
            if v:
                out[key] = v
            elif key in out:
                del out[key]
        nxt_expr = UmbralExpression.__new__(UmbralExpression)
        nxt_expr.terms = out
        expr = nxt_expr
    poly = expr.expect()
    if z is None:
        return poly
    return poly.coefficient(0)


def cube_table(n_max: int, k: int) -> PolyBernoulliTable:
    """B-variant table built entirely through the unit-cube transform."""
    entries = [barnes_transform_cube(n, k) for n in range(n_max + 1)]
    return PolyBernoulliTable(k, "B", "barnes-cube", entries)


def simplex_table(n_max: int, k: int) -> PolyBernoulliTable:
    """B-variant table built entirely through the ordered-simplex transform."""
    entries = [simplex_transform(n, k) for n in range(n_max + 1)]
    return PolyBernoulliTable(k, "B", "barnes-simplex", entries)


def route_numbers(n_max: int, k: int, variant: str = "B") -> dict:
    """Numbers at z = 0 from all three primary routes, for cross-checking."""
    series = poly_bernoulli_series(n_max, k, variant)
    umbral = umbral_numbers(n_max, k, variant)
    out = {
        "series": [series.number(n) for n in range(n_max + 1)],
        "umbral": umbral,
    }
    if variant == "B":
        out["stirling"] = [poly_bernoulli_stirling(n, k) for n in range(n_max + 1)]
    else:
        # the Stirling closed form is for the B family; transform it
        b = [poly_bernoulli_stirling(n, k) for n in range(n_max + 1)]
        out["stirling"] = [
            sum(
                (binomial(n, l) * (-1) ** (n - l) * b[l] for l in range(n + 1)),
                Fraction(0),
            )
            for n in range(n_max + 1)
        ]
    return out
