"""Exact arithmetic layer: rationals, dense polynomials over the rationals,
truncated formal power series, and the combinatorial generators (Bernoulli
numbers, Stirling numbers, binomials) everything else is built from.

All values are immutable after construction and every operation is a pure
function, so everything here is safe to share across threads.
"""
from __future__ import annotations

import math
from fractions import Fraction
from typing import Sequence, Union

Rational = Fraction

__all__ = [
    "Rational",
    "ZPolynomial",
    "PowerSeries",
    "bernoulli_numbers",
    "bernoulli_number",
    "bernoulli_polynomial",
    "binomial",
    "stirling2",
    "series_compose",
    "exp_series",
    "expm1_series",
    "one_minus_exp_neg_series",
    "log1p_series",
    "polylog_series",
    "bernoulli_gf_series",
    "rational_to_json",
    "rational_from_json",
]


def rational_to_json(q: Fraction) -> dict:
    """Serialize a rational as decimal strings, {"num": ..., "den": ...}."""
    return {"num": str(q.numerator), "den": str(q.denominator)}


def rational_from_json(obj: dict) -> Fraction:
    return Fraction(int(obj["num"]), int(obj["den"]))


def binomial(n: int, m: int) -> int:
    """Binomial coefficient C(n, m); zero outside 0 <= m <= n."""
    if n < 0:
        raise ValueError("binomial requires n >= 0")
    if m < 0 or m > n:
        return 0
    return math.comb(n, m)


_STIRLING_ROWS: list[list[int]] = [[1]]


def stirling2(n: int, m: int) -> int:
    """Stirling number of the second kind S(n, m).

    Built by the triangular recurrence S(n,m) = m*S(n-1,m) + S(n-1,m-1);
    returns 0 when m < 0 or m > n.
    """
    if n < 0:
        raise ValueError("stirling2 requires n >= 0")
    if m < 0 or m > n:
        return 0
    while len(_STIRLING_ROWS) <= n:
        prev = _STIRLING_ROWS[-1]
        r = len(_STIRLING_ROWS)
        row = [0] * (r + 1)
        for j in range(1, r + 1):
            row[j] = j * (prev[j] if j < r else 0) + prev[j - 1]
        _STIRLING_ROWS.append(row)
    return _STIRLING_ROWS[n][m]


_BERNOULLI: list[Fraction] = [Fraction(1)]


def bernoulli_numbers(n_max: int) -> list[Fraction]:
    """Bernoulli numbers B_0..B_n_max from t/(e^t - 1), convention B_1 = -1/2."""
    if n_max < 0:
        raise ValueError("n_max must be >= 0")
    while len(_BERNOULLI) <= n_max:
        n = len(_BERNOULLI)
        # sum_{j<n} C(n+1, j) B_j + (n+1) B_n = 0
        s = Fraction(0)
        for j in range(n):
            s += math.comb(n + 1, j) * _BERNOULLI[j]
        _BERNOULLI.append(-s / (n + 1))
    return list(_BERNOULLI[: n_max + 1])


def bernoulli_number(n: int) -> Fraction:
    return bernoulli_numbers(n)[n]


class ZPolynomial:
    """Dense univariate polynomial in the formal variable z over the rationals.

    Coefficients are stored low degree to high with trailing zeros trimmed;
    evaluation at a rational point is exact.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Sequence[Union[Fraction, int]] = ()):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def constant(cls, c) -> "ZPolynomial":
        return cls([Fraction(c)])

    @classmethod
    def variable(cls) -> "ZPolynomial":
        return cls([0, 1])

    @property
    def degree(self) -> int:
        """Degree of the polynomial, -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def coefficient(self, i: int) -> Fraction:
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return Fraction(0)

    def leading_coefficient(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def __add__(self, other):
        other = _as_poly(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return ZPolynomial(
            [self.coefficient(i) + other.coefficient(i) for i in range(n)]
        )

    __radd__ = __add__

    def __sub__(self, other):
        other = _as_poly(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return ZPolynomial(
            [self.coefficient(i) - other.coefficient(i) for i in range(n)]
        )

    def __rsub__(self, other):
        return _as_poly(other) - self

    def __neg__(self):
        return ZPolynomial([-c for c in self.coeffs])

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            q = Fraction(other)
            return ZPolynomial([c * q for c in self.coeffs])
        if not isinstance(other, ZPolynomial):
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return ZPolynomial()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    if b:
                        out[i + j] += a * b
        return ZPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative polynomial power")
        out = ZPolynomial.constant(1)
        for _ in range(n):
            out = out * self
        return out

    def __call__(self, x):
        """Evaluate by Horner; x may be a Fraction, int, or another polynomial."""
        if isinstance(x, ZPolynomial):
            acc = ZPolynomial()
            for c in reversed(self.coeffs):
                acc = acc * x + ZPolynomial.constant(c)
            return acc
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def shift(self, a) -> "ZPolynomial":
        """Return p(z + a)."""
        return self(ZPolynomial([Fraction(a), Fraction(1)]))

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = ZPolynomial.constant(other)
        if not isinstance(other, ZPolynomial):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def to_json(self) -> list:
        return [rational_to_json(c) for c in self.coeffs]

    def __repr__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            mag = abs(c)
            if i == 0:
                term = str(mag)
            elif i == 1:
                term = "z" if mag == 1 else f"{mag}*z"
            else:
                term = f"z^{i}" if mag == 1 else f"{mag}*z^{i}"
            if not parts:
                parts.append(term if c > 0 else f"-{term}")
            else:
                parts.append(f"+ {term}" if c > 0 else f"- {term}")
        return " ".join(parts)


def _as_poly(x) -> ZPolynomial:
    if isinstance(x, ZPolynomial):
        return x
    return ZPolynomial.constant(Fraction(x))


class PowerSeries:
    """Truncated formal power series with explicit trusted order.

    Coefficients of t^0..t^order are trusted; binary operations return the
    minimum of the operand orders and never silently extend it.  Coefficients
    are rationals by default but any commutative-ring element supporting
    +, -, * works for addition and multiplication (polynomial or symbolic
    coefficients are used elsewhere in the package); composition, reciprocal
    and division require rational coefficients.
    """

    __slots__ = ("coeffs", "order", "zero")

    def __init__(self, coeffs: Sequence, order: int | None = None, zero=Fraction(0)):
        cs = list(coeffs)
        if order is None:
            order = len(cs) - 1
        if order < 0:
            raise ValueError("order must be >= 0")
        if len(cs) < order + 1:
            cs.extend([zero] * (order + 1 - len(cs)))
        self.coeffs = cs[: order + 1]
        self.order = order
        self.zero = zero

    def coefficient(self, i: int):
        if i > self.order:
            raise IndexError(f"coefficient {i} beyond trusted order {self.order}")
        return self.coeffs[i]

    def factorial_coefficient(self, n: int):
        """n! times the coefficient of t^n."""
        return self.coefficient(n) * math.factorial(n)

    def truncate(self, order: int) -> "PowerSeries":
        if order > self.order:
            raise ValueError("cannot extend trusted order")
        return PowerSeries(self.coeffs[: order + 1], order, self.zero)

    def valuation(self) -> int | None:
        """Index of the first nonzero coefficient, None if all trusted ones vanish."""
        for i, c in enumerate(self.coeffs):
            if not _ring_is_zero(c):
                return i
        return None

    def __add__(self, other: "PowerSeries") -> "PowerSeries":
        n = min(self.order, other.order)
        return PowerSeries(
            [self.coeffs[i] + other.coeffs[i] for i in range(n + 1)], n, self.zero
        )

    def __sub__(self, other: "PowerSeries") -> "PowerSeries":
        n = min(self.order, other.order)
        return PowerSeries(
            [self.coeffs[i] - other.coeffs[i] for i in range(n + 1)], n, self.zero
        )

    def __neg__(self) -> "PowerSeries":
        return PowerSeries([-c for c in self.coeffs], self.order, self.zero)

    def scale(self, c) -> "PowerSeries":
        return PowerSeries([a * c for a in self.coeffs], self.order, self.zero)

    def __mul__(self, other: "PowerSeries") -> "PowerSeries":
        n = min(self.order, other.order)
        out = [self.zero for _ in range(n + 1)]
        for i in range(n + 1):
            a = self.coeffs[i]
            if _ring_is_zero(a):
                continue
            for j in range(n + 1 - i):
                b = other.coeffs[j]
                if not _ring_is_zero(b):
                    out[i + j] = out[i + j] + a * b
        return PowerSeries(out, n, self.zero)

    def compose(self, inner: "PowerSeries") -> "PowerSeries":
        """Truncated composition self(inner); inner must have zero constant term."""
        if not _ring_is_zero(inner.coeffs[0]):
            raise ValueError("composition requires inner constant term zero")
        n = min(self.order, inner.order)
        inner_t = inner.truncate(n)
        acc = PowerSeries([self.coeffs[n]], n, self.zero)
        for j in range(n - 1, -1, -1):
            acc = acc * inner_t
            acc.coeffs[0] = acc.coeffs[0] + self.coeffs[j]
        return acc

    def reciprocal(self) -> "PowerSeries":
        """Multiplicative inverse; requires a nonzero (invertible) constant term."""
        c0 = self.coeffs[0]
        if _ring_is_zero(c0):
            raise ValueError("reciprocal requires nonzero constant term")
        inv0 = Fraction(1) / c0
        out = [inv0]
        for n in range(1, self.order + 1):
            s = self.zero
            for j in range(1, n + 1):
                s = s + self.coeffs[j] * out[n - j]
            out.append(-s * inv0)
        return PowerSeries(out, self.order, self.zero)

    def divide(self, den: "PowerSeries") -> "PowerSeries":
        """Quotient self/den.

        When den has valuation v > 0 the numerator valuation must be >= v;
        both are shifted down by t^v and the result order drops by v.
        """
        v = den.valuation()
        if v is None:
            raise ZeroDivisionError("division by zero series")
        if v > 0:
            nv = self.valuation()
            if nv is not None and nv < v:
                raise ValueError(
                    f"numerator valuation {nv} below denominator valuation {v}"
                )
            num = PowerSeries(self.coeffs[v:], self.order - v, self.zero)
            dd = PowerSeries(den.coeffs[v:], den.order - v, self.zero)
            return num * dd.reciprocal()
        return self * den.reciprocal()

    def __eq__(self, other):
        if not isinstance(other, PowerSeries):
            return NotImplemented
        return self.order == other.order and all(
            a == b for a, b in zip(self.coeffs, other.coeffs)
        )

    def __repr__(self):
        return f"PowerSeries({self.coeffs!r}, order={self.order})"


def _ring_is_zero(c) -> bool:
    if isinstance(c, Fraction):
        return c == 0
    if isinstance(c, ZPolynomial):
        return c.is_zero()
    z = getattr(c, "is_zero", None)
    if z is not None:
        return c.is_zero()
    return c == 0


def series_compose(outer: PowerSeries, inner: PowerSeries) -> PowerSeries:
    """Truncated composition outer(inner); rejects a nonzero inner constant term."""
    return outer.compose(inner)


def exp_series(order: int) -> PowerSeries:
    """e^t to the given order."""
    return PowerSeries(
        [Fraction(1, math.factorial(n)) for n in range(order + 1)], order
    )


def expm1_series(order: int) -> PowerSeries:
    """e^t - 1."""
    s = exp_series(order)
    s.coeffs[0] = Fraction(0)
    return s


def one_minus_exp_neg_series(order: int) -> PowerSeries:
    """1 - e^{-t}."""
    return PowerSeries(
        [Fraction(0)]
        + [Fraction((-1) ** (n + 1), math.factorial(n)) for n in range(1, order + 1)],
        order,
    )


def log1p_series(order: int) -> PowerSeries:
    """log(1 + t)."""
    return PowerSeries(
        [Fraction(0)] + [Fraction((-1) ** (n + 1), n) for n in range(1, order + 1)],
        order,
    )


def polylog_series(k: int, order: int) -> PowerSeries:
    """The weight-k polylogarithm series sum_{n>=1} t^n / n^k."""
    if k < 1:
        raise ValueError("polylog weight must be >= 1")
    return PowerSeries(
        [Fraction(0)] + [Fraction(1, n**k) for n in range(1, order + 1)], order
    )


def bernoulli_gf_series(order: int) -> PowerSeries:
    """t/(e^t - 1) as a series, i.e. the Bernoulli number generating function."""
    # (e^t - 1)/t has coefficients 1/(i+1)!; invert it.
    body = PowerSeries(
        [Fraction(1, math.factorial(i + 1)) for i in range(order + 1)], order
    )
    return body.reciprocal()


def bernoulli_polynomial(n: int) -> ZPolynomial:
    """The Bernoulli polynomial B_n(z), exactly.

    B_n(0) = B_n and B_n(1) = (-1)^n B_n under the B_1 = -1/2 convention.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    B = bernoulli_numbers(n)
    coeffs = [Fraction(0)] * (n + 1)
    for j in range(n + 1):
        # coefficient of z^{n-j} is C(n,j) B_j
        coeffs[n - j] = math.comb(n, j) * B[j]
    return ZPolynomial(coeffs)
