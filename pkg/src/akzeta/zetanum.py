"""Double-precision numerical layer.

Realizes symbol expectations of non-polynomial functions (negative moments)
as sech^2-weighted tensor-product quadrature, provides polylogarithm /
Hurwitz-zeta / polygamma evaluation, the Mellin-integral route to the
Arakawa-Kaneko zeta function zeta_k(s), Barnes zeta cross-checks, and
truncated multiple-zeta sums with conservative tail bounds.

Quadrature scheme: each sech^2 axis is truncated to [-w_cutoff, w_cutoff]
(the weight (pi/2) sech^2(pi w) carries mass 1 - tanh(pi W) < 2 e^{-2 pi W}
outside, which is reported as an analytic tail bound) and integrated by
composite Gauss-Legendre panels; refinement doubles the panel count per
w-axis, and convergence is declared when successive refinement levels agree
within the target tolerance.  Unit-interval axes use a fixed Gauss-Legendre
rule.  Summation order is fixed (chunks ascending, compensated combination),
so results are bit-reproducible.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence, Union

import numpy as np

from .exact import bernoulli_numbers

__all__ = [
    "QuadratureSpec",
    "QuadratureResult",
    "ConvergenceError",
    "MzSignature",
    "default_spec",
    "negative_moment",
    "negative_moment_batch",
    "bernoulli_moment_quadrature",
    "polygamma",
    "hurwitz_zeta",
    "polylog",
    "ak_zeta_mellin",
    "ak_zeta_moment",
    "barnes_zeta_mellin",
    "barnes_zeta_sech",
    "mz_truncated",
    "telescoping_check",
    "zeta_star_3_1_double",
]

# Reject denominators whose real part at w = 0 can come this close to zero.
_RE_GUARD = 0.1


@dataclass(frozen=True)
class QuadratureSpec:
    """Controls for the sech^2 tensor quadrature.

    panels/nodes set the starting composite Gauss-Legendre rule per w-axis;
    each refinement level doubles the panel count, up to `levels` levels.
    u-axes (unit interval) use a fixed `u_nodes`-point rule: their integrands
    are analytic with comfortable margins, so refining them buys nothing and
    multiplies the tensor cost.
    """

    panels: int = 8
    nodes: int = 32
    levels: int = 3
    tolerance: float = 1e-8
    w_cutoff: float = 6.0
    u_nodes: int = 24

    def __post_init__(self):
        if min(self.panels, self.nodes, self.u_nodes) < 1:
            raise ValueError("panels, nodes and u_nodes must be >= 1")
        if self.levels < 2:
            raise ValueError("need at least 2 levels to declare convergence")
        if not (0 < self.tolerance < 1) or self.w_cutoff <= 0:
            raise ValueError("tolerance must be in (0,1) and w_cutoff positive")


def default_spec(k: int) -> QuadratureSpec:
    """Dimension-aware defaults: the tensor grid must shrink as 2k-1 grows."""
    if k <= 1:
        return QuadratureSpec(panels=8, nodes=32, levels=3, tolerance=1e-9, w_cutoff=7.0)
    if k == 2:
        return QuadratureSpec(panels=8, nodes=32, levels=3, tolerance=1e-8, w_cutoff=5.0)
    return QuadratureSpec(
        panels=2, nodes=20, levels=3, tolerance=1e-6, w_cutoff=3.2, u_nodes=16
    )


@dataclass
class QuadratureResult:
    """A quadrature estimate; the imaginary residue is reported, never dropped."""

    value: float
    imag_residue: float
    convergence_delta: float
    levels_used: int
    tail_bound: float | None = None

    def to_json(self) -> dict:
        out = {
            "value": self.value,
            "imag_residue": self.imag_residue,
            "convergence_delta": self.convergence_delta,
        }
        if self.tail_bound is not None:
            out["tail_bound"] = self.tail_bound
        return out


class ConvergenceError(RuntimeError):
    """Quadrature refinement exhausted without meeting the tolerance."""

    def __init__(self, last_delta: float, levels: int):
        super().__init__(
            f"no convergence after {levels} refinement levels (last delta {last_delta:.3e})"
        )
        self.last_delta = last_delta
        self.levels = levels


_GL_CACHE: dict[int, tuple[np.ndarray, np.ndarray]] = {}


def _gl(nodes: int) -> tuple[np.ndarray, np.ndarray]:
    if nodes not in _GL_CACHE:
        _GL_CACHE[nodes] = np.polynomial.legendre.leggauss(nodes)
    return _GL_CACHE[nodes]


def _panel_axis(a: float, b: float, panels: int, nodes: int) -> tuple[np.ndarray, np.ndarray]:
    x, w = _gl(nodes)
    edges = np.linspace(a, b, panels + 1)
    mid = 0.5 * (edges[:-1] + edges[1:])
    half = 0.5 * (edges[1:] - edges[:-1])
    xs = (mid[:, None] + half[:, None] * x[None, :]).ravel()
    ws = (half[:, None] * w[None, :]).ravel()
    return xs, ws


def _sech_axis(cutoff: float, panels: int, nodes: int) -> tuple[np.ndarray, np.ndarray]:
    """Nodes and weights for (pi/2) sech^2(pi w) dw on [-cutoff, cutoff]."""
    x, w = _panel_axis(-cutoff, cutoff, panels, nodes)
    return x, w * (np.pi / 2) / np.cosh(np.pi * x) ** 2


def _sech_tail_mass(cutoff: float) -> float:
    """Mass of the sech^2 law outside [-cutoff, cutoff]."""
    return max(1.0 - math.tanh(math.pi * cutoff), 0.0)


def _weighted_sum(arr: np.ndarray, weights: Sequence[np.ndarray]) -> complex:
    """Contract a tensor against separable per-axis weight vectors (last axis first)."""
    v = arr
    for wv in reversed(weights):
        v = np.tensordot(v, wv, axes=([-1], [0]))
    return complex(v)


def _fsum_complex(parts: Iterable[complex]) -> complex:
    parts = list(parts)
    return complex(math.fsum(p.real for p in parts), math.fsum(p.imag for p in parts))


def _powers_sums(
    den: np.ndarray, ms: Sequence[int], weights: Sequence[np.ndarray]
) -> dict[int, complex]:
    """Weighted sums of den^{-m} for each m (ms ascending)."""
    r = 1.0 / den
    out = {}
    cur = r
    last = 1
    for m in ms:
        for _ in range(m - last):
            cur = cur * r
        last = m
        out[m] = _weighted_sum(cur, weights)
    return out


def _moment_level(
    k: int,
    powers: Sequence[int],
    panels: int,
    spec: QuadratureSpec,
    const: float,
    inner_shift: float,
) -> dict[int, complex]:
    """One refinement level of E[(const + V_k + sum_{l<k} p_l V_l)^{-m}] for
    every m in `powers`, where V_l = (i w_l - 1/2) + inner_shift for l < k,
    V_k = i w_k - 1/2 and p_l = prod_{j=l}^{k-1} u_j.

    The tensor grid has 2k-1 axes; the k = 2 and k = 3 paths iterate over one
    or two w-axes with scalar updates so the inner arrays stay cache-resident.
    Iteration order is fixed and partial sums are combined with fsum, so the
    result is reproducible bit for bit.
    """
    X, WX = _sech_axis(spec.w_cutoff, panels, spec.nodes)
    C = 1j * X - 0.5
    ms = sorted(powers)
    if k == 1:
        sums = _powers_sums(const + C, ms, [WX])
        return sums
    if k > 3:
        raise ValueError(
            "moment quadrature is limited to k <= 3: the tensor grid has 2k-1 "
            "axes and is not tractable beyond that"
        )

    U, WU = _panel_axis(0.0, 1.0, 1, spec.u_nodes)
    nw = len(X)
    V1 = C + inner_shift
    partials: dict[int, list[complex]] = {m: [] for m in ms}
    if k == 2:
        # dims (w_2, u_1); w_1 scanned.  den = const + C_2 + u V_1
        base = (const + 0j) + C[:, None] + np.zeros((1, len(U)))
        urow = U[None, :]
        for i1 in range(nw):
            sums = _powers_sums(base + V1[i1] * urow, ms, [WX, WU])
            for m in ms:
                partials[m].append(WX[i1] * sums[m])
        return {m: _fsum_complex(partials[m]) for m in ms}

    # k == 3: dims (w_2, u_1, u_2); w_1 and w_3 scanned.
    # den = const + C_3 + V_2 u_2 + V_1 u_1 u_2
    nu = len(U)
    mid = (C + inner_shift)[:, None, None] * U[None, None, :]  # V_2 u_2
    p1 = (U[:, None] * U[None, :])[None, :, :]  # u_1 u_2
    weights = [WX, WU, WU]
    for i1 in range(nw):
        block = mid + V1[i1] * p1
        for i3 in range(nw):
            sums = _powers_sums(block + (const + C[i3]), ms, weights)
            wgt = WX[i1] * WX[i3]
            for m in ms:
                partials[m].append(wgt * sums[m])
    return {m: _fsum_complex(partials[m]) for m in ms}


def _converge(level_fn, spec: QuadratureSpec):
    """Run refinement levels until successive values agree within tolerance.

    level_fn(panels) -> dict of complex values; the delta is the max over keys.
    """
    prev = None
    delta = math.inf
    for lev in range(spec.levels):
        cur = level_fn(spec.panels << lev)
        if prev is not None:
            delta = max(abs(cur[m] - prev[m]) for m in cur)
            if delta < spec.tolerance:
                return cur, delta, lev + 1
        prev = cur
    raise ConvergenceError(delta, spec.levels)


def _re_interval(k: int, z: float) -> tuple[float, float]:
    """Range of the denominator's real part at w = 0 over the u-cube."""
    return z - k / 2.0, z - 0.5


def negative_moment_batch(
    k: int, ms: Sequence[int], z: float = 0.0, spec: QuadratureSpec | None = None
) -> dict[int, QuadratureResult]:
    """E[(z + C^{(k)}-kernel)^{-m}] for every m in ms, sharing one tensor sweep.

    The kernel is sum_l (i w_l - 1/2) prod_{j=l}^{k-1} u_j; by the symbolic
    representation of the Arakawa-Kaneko zeta, zeta_k(m) = (-1)^m times the
    m-th result at z = 0.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    if not ms or any(m < 1 for m in ms):
        raise ValueError("moment orders must be >= 1")
    spec = spec or default_spec(k)
    lo, hi = _re_interval(k, z)
    if hi > -_RE_GUARD and lo < _RE_GUARD:
        raise ValueError(
            f"z = {z} puts the denominator's real part within {_RE_GUARD} of zero "
            f"(interval [{lo}, {hi}]); the integrand is singular or near-singular"
        )
    min_abs_re = min(abs(lo), abs(hi))
    vals, delta, levels = _converge(
        lambda panels: _moment_level(k, ms, panels, spec, const=z, inner_shift=0.0),
        spec,
    )
    tail = k * _sech_tail_mass(spec.w_cutoff)
    out = {}
    for m in ms:
        v = vals[m]
        out[m] = QuadratureResult(
            value=v.real,
            imag_residue=abs(v.imag),
            convergence_delta=delta,
            levels_used=levels,
            tail_bound=tail * min_abs_re ** (-m),
        )
    return out


def negative_moment(
    k: int, m: int, z: float = 0.0, spec: QuadratureSpec | None = None
) -> QuadratureResult:
    """Negative moment E[(z + C^{(k)})^{-m}] by sech^2-weighted quadrature."""
    return negative_moment_batch(k, [m], z, spec)[m]


def bernoulli_moment_quadrature(n: int, spec: QuadratureSpec | None = None) -> QuadratureResult:
    """(pi/2) int (i w - 1/2)^n sech^2(pi w) dw, which equals B_n exactly.

    Validates that the quadrature realizes symbol expectations; the cutoff
    default is generous because the integrand grows like w^n.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    spec = spec or QuadratureSpec(panels=8, nodes=32, levels=3, tolerance=1e-11, w_cutoff=9.0)

    def level(panels: int) -> dict[int, complex]:
        X, W = _sech_axis(spec.w_cutoff, panels, spec.nodes)
        base = 1j * X - 0.5
        cur = np.ones_like(base)
        for _ in range(n):
            cur = cur * base
        return {0: complex(np.dot(W, cur))}

    vals, delta, levels = _converge(level, spec)
    v = vals[0]
    return QuadratureResult(v.real, abs(v.imag), delta, levels)


def telescoping_check(
    k: int, spec: QuadratureSpec | None = None
) -> tuple[QuadratureResult, QuadratureResult]:
    """Two quadrature evaluations of zeta(k+1).

    First: E[1/(1 + B_k-kernel + sum_l p_l (1 + B_l-kernel))], the telescoped
    sum with every inner symbol shifted by one (a realization of
    zeta(2, {1}^{k-1})).  Second: -E[1/C^{(k)}].  Both must agree with
    zeta(k+1); their coincidence is the duality identity.
    """
    if k < 2:
        raise ValueError("telescoping check requires k >= 2")
    spec = spec or default_spec(k)
    vals, delta, levels = _converge(
        lambda panels: _moment_level(k, [1], panels, spec, const=1.0, inner_shift=1.0),
        spec,
    )
    v = vals[1]
    tail = k * _sech_tail_mass(spec.w_cutoff) * 2.0  # |den| >= 1/2 on the shifted kernel
    first = QuadratureResult(v.real, abs(v.imag), delta, levels, tail_bound=tail)
    base = negative_moment(k, 1, 0.0, spec)
    second = QuadratureResult(
        -base.value, base.imag_residue, base.convergence_delta, base.levels_used, base.tail_bound
    )
    return first, second


def zeta_star_3_1_double(spec: QuadratureSpec | None = None) -> QuadratureResult:
    """The weight-(3,1) starred value as a two-dimensional sech^2 integral.

    Integrating the unit-interval variable of E[(B_2 + U_1 B_1)^{-2}] in
    closed form (int_0^1 (A + uB)^{-2} du = 1/(A(A+B))) collapses the triple
    integral to two w-axes.
    """
    spec = spec or default_spec(2)

    def level(panels: int) -> dict[int, complex]:
        X, W = _sech_axis(spec.w_cutoff, panels, spec.nodes)
        C = 1j * X - 0.5
        A = C[None, :]
        B = C[:, None]
        vals = 1.0 / (A * (A + B))
        return {0: _weighted_sum(vals, [W, W])}

    vals, delta, levels = _converge(level, spec)
    v = vals[0]
    tail = 2 * _sech_tail_mass(spec.w_cutoff) * 4.0
    return QuadratureResult(v.real, abs(v.imag), delta, levels, tail_bound=tail)


# ---------------------------------------------------------------------------
# scalar special functions


def hurwitz_zeta(s: float, a: float, tol: float = 1e-12) -> float:
    """Hurwitz zeta sum_{n>=0} (a+n)^{-s} for s > 1, a > 0.

    Direct sum to N plus the Euler-Maclaurin tail correction; N is grown until
    the first omitted correction term is below tol.
    """
    if s <= 1:
        raise ValueError("hurwitz_zeta requires s > 1")
    if a <= 0:
        raise ValueError("hurwitz_zeta requires a > 0")
    B = [float(b) for b in bernoulli_numbers(14)]
    N = 16
    for _ in range(40):
        x = a + N
        tail = x ** (1.0 - s) / (s - 1.0) + 0.5 * x ** (-s)
        rising = s  # s (s+1) ... (s+2j-2)
        powx = x ** (-s - 1.0)
        err = math.inf
        for j in range(1, 7):
            term = B[2 * j] / math.factorial(2 * j) * rising * powx
            tail += term
            rising *= (s + 2 * j - 1) * (s + 2 * j)
            powx /= x * x
            err = abs(B[2 * j + 2] / math.factorial(2 * j + 2) * rising * powx)
            if err < tol / 4:
                break
        if err < tol / 4:
            head = math.fsum((a + n) ** (-s) for n in range(N))
            return head + tail
        N *= 2
    raise ArithmeticError("hurwitz_zeta failed to meet tolerance")


def polygamma(m: int, x: float, tol: float = 1e-12) -> float:
    """Polygamma psi^{(m)}(x) = (-1)^{m+1} m! zeta(m+1, x) for m >= 1, x > 0."""
    if m < 1:
        raise ValueError("polygamma order must be >= 1")
    if x <= 0:
        raise ValueError("polygamma requires x > 0")
    fact = math.factorial(m)
    return (-1) ** (m + 1) * fact * hurwitz_zeta(m + 1, x, tol / fact)


def polylog(k: int, x: float, tol: float = 1e-10) -> float:
    """Polylogarithm Li_k(x) for k >= 2 and 0 <= x < 1.

    k = 2 uses the reflection Li_2(x) = pi^2/6 - ln x ln(1-x) - Li_2(1-x) for
    x > 1/2; otherwise the direct series, truncated where either the geometric
    bound x^{N+1}/((1-x) N^k) or the polynomial bound N^{1-k}/(k-1) drops
    below tol.
    """
    if k < 2:
        raise ValueError("polylog weight must be >= 2")
    if not (0.0 <= x < 1.0):
        raise ValueError("polylog argument must lie in [0, 1)")
    if x == 0.0:
        return 0.0
    if k == 2 and x > 0.5:
        y = 1.0 - x
        return math.pi**2 / 6 - math.log(x) * math.log(y) - polylog(2, y, tol)
    n_poly = int(math.ceil((1.0 / (tol * (k - 1))) ** (1.0 / (k - 1))))
    s = 0.0
    xp = 1.0
    for n in range(1, n_poly + 1):
        xp *= x
        s += xp / n**k
        if xp / ((1.0 - x) * (n + 1) ** k) < tol:
            break
    return s


def _polylog_one_minus(k: int, t: np.ndarray, tol: float) -> np.ndarray:
    """Li_k(1 - e^{-t}) for an array of t >= 0, stable for large t."""
    y = np.exp(-t)
    x = -np.expm1(-t)
    if k == 2:
        out = np.empty_like(x)
        lo = x <= 0.5
        out[lo] = _li_series(2, x[lo], tol)
        hi = ~lo
        # reflection with ln(1-x) = -t and ln(x) = log1p(-y)
        out[hi] = math.pi**2 / 6 + t[hi] * np.log1p(-y[hi]) - _li_series(2, y[hi], tol)
        return out
    return _li_series(k, x, tol)


def _li_series(k: int, x: np.ndarray, tol: float) -> np.ndarray:
    """Direct polylog series on an array; N capped by the polynomial tail bound."""
    if x.size == 0:
        return np.zeros_like(x)
    n_poly = int(math.ceil((1.0 / (tol * (k - 1))) ** (1.0 / (k - 1))))
    xmax = float(np.max(x))
    out = np.zeros_like(x)
    xp = np.ones_like(x)
    gmax = 1.0
    for n in range(1, n_poly + 1):
        xp = xp * x
        out += xp / float(n) ** k
        gmax *= xmax
        if xmax < 1.0 and gmax / ((1.0 - xmax) * (n + 1) ** k) < tol:
            break
    return out


_LI_NODE_CACHE: dict[tuple, tuple[np.ndarray, np.ndarray, np.ndarray]] = {}


def _mellin_nodes(k: int, T: float, panels: int, nodes: int, li_tol: float):
    """Cached (t, weights, Li_k(1-e^{-t})) on the composite rule for [0, T]."""
    key = (k, round(T, 12), panels, nodes, li_tol)
    if key not in _LI_NODE_CACHE:
        t, w = _panel_axis(0.0, T, panels, nodes)
        li = _polylog_one_minus(k, t, li_tol)
        if len(_LI_NODE_CACHE) > 64:
            _LI_NODE_CACHE.clear()
        _LI_NODE_CACHE[key] = (t, w, li)
    return _LI_NODE_CACHE[key]


def _gamma_upper_int(m: int, x: float) -> float:
    """Upper incomplete gamma for integer shape: (m-1)! e^{-x} sum_{j<m} x^j/j!."""
    s = 0.0
    term = 1.0
    for j in range(m):
        if j:
            term *= x / j
        s += term
    return math.factorial(m - 1) * math.exp(-x) * s


def ak_zeta_mellin(k: int, m: int, tol: float = 1e-8) -> float:
    """zeta_k(m) = (1/(m-1)!) int_0^inf t^{m-1}/(e^t - 1) Li_k(1-e^{-t}) dt.

    k = 1 reduces in closed form: Li_1(1-e^{-t}) = t, so the integral is
    m zeta(m+1).  For k >= 2 the integral is cut at T with the analytic bound
    Li_k <= zeta(k) <= pi^2/6 on the discarded tail, and paneled
    Gauss-Legendre is refined until two levels agree within tol/2.
    """
    if m < 1:
        raise ValueError("m must be >= 1")
    if k < 1:
        raise ValueError("k must be >= 1")
    if k == 1:
        return m * hurwitz_zeta(m + 1, 1.0, tol / (2 * m))
    zk_bound = math.pi**2 / 6
    T = 20.0
    while zk_bound * _gamma_upper_int(m, T) / math.factorial(m - 1) > tol / 2:
        T *= 1.5
    li_tol = tol / (6 * max(T, 1.0))
    prev = None
    panels = max(8, int(T / 2))
    for _ in range(4):
        t, w, li = _mellin_nodes(k, T, panels, 24, li_tol)
        integrand = t ** (m - 1) / np.expm1(t) * li
        cur = float(np.dot(w, integrand)) / math.factorial(m - 1)
        if prev is not None and abs(cur - prev) < tol / 2:
            return cur
        prev = cur
        panels *= 2
    raise ConvergenceError(abs(cur - prev), 4)


def ak_zeta_moment(k: int, m: int, spec: QuadratureSpec | None = None) -> QuadratureResult:
    """zeta_k(m) through the symbolic route: (-1)^m E[(C^{(k)})^{-m}]."""
    base = negative_moment(k, m, 0.0, spec)
    sign = (-1) ** m
    return QuadratureResult(
        sign * base.value,
        base.imag_residue,
        base.convergence_delta,
        base.levels_used,
        base.tail_bound,
    )


def barnes_zeta_mellin(m: int, w: float, a: Sequence[float], tol: float = 1e-10) -> float:
    """Barnes zeta zeta_k(m, w | a) = (1/Gamma(m)) int_0^inf prod_j
    (1 - e^{-a_j t})^{-1} t^{m-1} e^{-w t} dt, for integer m > k and w > 0."""
    k = len(a)
    if k == 0:
        raise ValueError("parameter list must be nonempty")
    if m <= k:
        raise ValueError("barnes_zeta_mellin requires m > len(a)")
    if w <= 0 or any(ai <= 0 for ai in a):
        raise ValueError("requires w > 0 and all a_j > 0")
    T = max(20.0, 20.0 / w)
    prod_bound = 1.0
    for ai in a:
        prod_bound /= -math.expm1(-ai * T)
    while prod_bound * _gamma_upper_int(m, w * T) / w**m > tol * math.factorial(m - 1) / 2:
        T *= 1.5
    panels = max(8, int(T / 2))
    prev = None
    for _ in range(4):
        t, wts = _panel_axis(0.0, T, panels, 24)
        integrand = t ** (m - 1.0) * np.exp(-w * t)
        for ai in a:
            integrand = integrand / (-np.expm1(-ai * t))
        cur = float(np.dot(wts, integrand)) / math.factorial(m - 1)
        if prev is not None and abs(cur - prev) < tol / 2:
            return cur
        prev = cur
        panels *= 2
    raise ConvergenceError(abs(cur - prev), 4)


def barnes_zeta_sech(
    m: int, w: float, a: Sequence[float], spec: QuadratureSpec | None = None
) -> QuadratureResult:
    """Barnes zeta at the shifted argument, zeta_k(m, w + (1/2) sum a_i | a),
    as the k-dimensional sech^2 integral

      (pi/2)^k Gamma(m-k)/Gamma(m) int prod (1/a_n^2) sech^2(pi u_n / a_n)
                                        (w - i sum u_n)^{-(m-k)} du.

    Requires m - k >= 1 and w > 0; each axis is rescaled by its a_n.
    """
    k = len(a)
    if k == 0:
        raise ValueError("parameter list must be nonempty")
    if m - k < 1:
        raise ValueError("requires m - len(a) >= 1")
    if w <= 0:
        raise ValueError("requires w > 0")
    spec = spec or default_spec(k)
    power = m - k
    pref = math.factorial(m - k - 1) / math.factorial(m - 1)

    def level(panels: int) -> dict[int, complex]:
        axes = []
        for an in a:
            x, wt = _sech_axis(spec.w_cutoff, panels, spec.nodes)
            axes.append((an * x, wt / an))
        dims = k
        den = w + 0j
        for slot, (vals, _) in enumerate(axes):
            shape = [1] * dims
            shape[slot] = len(vals)
            den = den - 1j * vals.reshape(shape)
        r = 1.0 / den
        cur = r
        for _ in range(power - 1):
            cur = cur * r
        return {0: pref * _weighted_sum(cur, [wt for _, wt in axes])}

    vals, delta, levels = _converge(level, spec)
    v = vals[0]
    tail = k * _sech_tail_mass(spec.w_cutoff) * w ** (-power) * pref
    return QuadratureResult(v.real, abs(v.imag), delta, levels, tail_bound=tail)


# ---------------------------------------------------------------------------
# truncated multiple zeta sums


@dataclass(frozen=True)
class MzSignature:
    """Exponent signature (s_1, ..., s_d) of a multiple zeta (starred) value."""

    exponents: tuple[int, ...]
    starred: bool = False

    def __post_init__(self):
        if not self.exponents:
            raise ValueError("signature must be nonempty")
        if any(int(s) != s or s < 1 for s in self.exponents):
            raise ValueError("exponents must be positive integers")
        if self.exponents[0] < 2:
            raise ValueError("admissibility requires s_1 >= 2")

    @property
    def depth(self) -> int:
        return len(self.exponents)


def mz_truncated(
    sig: Union[MzSignature, Sequence[int]], N: int, starred: bool | None = None
) -> tuple[float, float]:
    """Truncated multiple zeta (starred) value with a conservative tail bound.

    The nested sum is evaluated with outer index n_1 <= N by cumulative prefix
    sums, O(depth * N).  Tail bound: with H = H_N and s = s_1, the inner
    (depth-1)-fold sum is at most H_n^{depth-1}, and with H_n <= H + ln(n/N),

        sum_{n>N} n^{-s} (H + ln(n/N))^j
          <= N^{1-s}/(s-1) * sum_i C(j,i) H^{j-i} i!/(s-1)^i
          <= N^{1-s}/(s-1) * (H + 2)^j        (s >= 2),

    so the returned bound is N^{1-s_1}/(s_1 - 1) * (H_N + 2)^{depth-1}.
    The true value lies within value +- bound.
    """
    if isinstance(sig, MzSignature):
        exps = sig.exponents
        star = sig.starred if starred is None else starred
    else:
        exps = tuple(int(s) for s in sig)
        star = bool(starred)
        sig = MzSignature(exps, star)
    if N < 1:
        raise ValueError("N must be >= 1")
    n = np.arange(0, N + 1, dtype=np.float64)
    n[0] = 1.0  # avoid 0^-s; slot 0 is masked below
    cum = None
    for d in range(len(exps) - 1, -1, -1):
        f = n ** (-float(exps[d]))
        f[0] = 0.0
        if cum is not None:
            inner = np.cumsum(cum)
            if star:
                f = f * inner  # indices n_{d+1} <= n_d
            else:
                f = f * np.concatenate(([0.0], inner[:-1]))  # strict <
        cum = f
    value = float(np.sum(cum))
    s1 = exps[0]
    h_n = float(np.sum(1.0 / np.arange(1, N + 1)))
    bound = N ** (1.0 - s1) / (s1 - 1.0) * (h_n + 2.0) ** (len(exps) - 1)
    return value, bound
