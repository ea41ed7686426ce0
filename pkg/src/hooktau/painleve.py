"""Residual checks for the third-order equations and their first integrals.

A candidate solution enters as a SampledFunction: a grid together with
derivative rows up to some order, however they were produced (closed
form, tau-function log-derivatives, or a formal power series).  The
residual of a named equation is then evaluated pointwise with no hidden
smoothing, so an identically wrong candidate shows up at full size.

Exactness is preserved whenever the inputs are exact: every equation is
written so that integer and Fraction samples stay rational, and a zero
numerator never turns into a float.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from mpmath import mp

from .errors import (
    DerivativeOrderError,
    MasterEquationError,
    ParameterOrderError,
)
from .measures import StripFunctionalParams, generating_series_identity
from .tau import (
    TauEvaluator,
    WeightSpec,
    _GUARD_DIGITS,
    _to_mp,
    matrix_integral_h,
    matrix_integral_k,
    shifted_gaussian_evaluator,
    unit_interval_evaluator,
)


# -- small exact polynomial and power-series helpers -------------------------


def _div(num, den):
    """num / den staying rational for integer inputs; exact zero stays int."""
    if num == 0:
        return 0
    if isinstance(num, int) and isinstance(den, int):
        return Fraction(num, den)
    return num / den


def poly_eval(coeffs, x):
    """Evaluate sum coeffs[i] x^i by Horner's rule."""
    out = 0
    for c in reversed(tuple(coeffs)):
        out = out * x + c
    return out


def poly_derivative(coeffs):
    return tuple(i * c for i, c in enumerate(coeffs) if i > 0)


def _series_mul(a, b, length):
    out = [0] * length
    for i, ai in enumerate(a):
        if ai == 0 or i >= length:
            continue
        for j, bj in enumerate(b):
            if i + j >= length:
                break
            out[i + j] += ai * bj
    return out


def _series_diff(a):
    return [i * c for i, c in enumerate(a)][1:]


def _series_div(a, b, length):
    if b[0] == 0:
        raise ZeroDivisionError("series division needs a unit constant term")
    out = []
    for k in range(length):
        acc = a[k] if k < len(a) else 0
        for i in range(k):
            acc -= out[i] * (b[k - i] if k - i < len(b) else 0)
        out.append(_div(acc, b[0]) if acc else Fraction(0))
    return out


def _series_shift(a, by, length):
    return [0] * by + list(a[: max(length - by, 0)])


# -- sampled candidates ------------------------------------------------------


@dataclass(frozen=True)
class SampledFunction:
    """A function known on a grid through derivative rows.

    ``values[j][i]`` is the j-th derivative at ``grid[i]``.  The entries
    may be exact (int, Fraction) or mpmath floats; the residual routines
    preserve whichever arithmetic they are given.
    """

    grid: tuple
    values: tuple
    provenance: str = ""

    def __post_init__(self):
        if not self.values:
            raise ValueError("need at least the order-zero value row")
        for row in self.values:
            if len(row) != len(self.grid):
                raise ValueError("every derivative row must match the grid length")

    @property
    def order(self):
        return len(self.values) - 1

    def point(self, i):
        return self.grid[i], tuple(row[i] for row in self.values)


def sample_function(func, grid, order, provenance=""):
    """Build a SampledFunction from func(x, derivative_order)."""
    grid = tuple(grid)
    values = tuple(
        tuple(func(x, j) for x in grid) for j in range(order + 1)
    )
    return SampledFunction(grid=grid, values=values, provenance=provenance)


# -- the equations -----------------------------------------------------------


def _take(params, *names):
    unknown = set(params) - set(names)
    if unknown:
        raise ValueError(f"unexpected parameters {sorted(unknown)}; expected {names}")
    missing = [nm for nm in names if nm not in params]
    if missing:
        raise ValueError(f"missing parameters {missing}")
    return [params[nm] for nm in names]


def _chazy_point(P, Q, R):
    dP, ddP = poly_derivative(P), poly_derivative(poly_derivative(P))
    dQ = poly_derivative(Q)

    def point(x, y, y1, y2, y3):
        Pv = poly_eval(P, x)
        if Pv == 0:
            raise ValueError(f"grid touches a zero of the leading polynomial at x={x}")
        Pp, Ppp = poly_eval(dP, x), poly_eval(ddP, x)
        Qv, Qp, Rv = poly_eval(Q, x), poly_eval(dQ, x), poly_eval(R, x)
        P2 = Pv * Pv
        return (
            y3
            + _div(Pp * y2, Pv)
            + _div(6 * y1 * y1, Pv)
            - _div(4 * Pp * y * y1, P2)
            + _div(Ppp * y * y, P2)
            + _div(4 * Qv * y1, P2)
            - _div(2 * Qp * y, P2)
            + _div(2 * Rv, P2)
        )

    return point, 3


def _cosgrove_point(P, Q, R, delta):
    dP = poly_derivative(P)
    ddP = poly_derivative(dP)
    dddP = poly_derivative(ddP)
    dQ = poly_derivative(Q)
    ddQ = poly_derivative(dQ)
    dR = poly_derivative(R)

    def point(x, y, y1, y2, y3):
        Pv = poly_eval(P, x)
        if Pv == 0:
            raise ValueError(f"grid touches a zero of the leading polynomial at x={x}")
        Pp, Ppp, Pppp = poly_eval(dP, x), poly_eval(ddP, x), poly_eval(dddP, x)
        Qv, Qp, Qpp = poly_eval(Q, x), poly_eval(dQ, x), poly_eval(ddQ, x)
        Rv, Rp = poly_eval(R, x), poly_eval(dR, x)
        bracket = (
            (Pv * y1 * y1 + Qv * y1 + Rv) * y1
            - (Pp * y1 * y1 + Qp * y1 + Rp) * y
            + _div((Ppp * y1 + Qpp) * y * y, 2)
            - _div(Pppp * y * y * y, 6)
            + delta
        )
        return y2 * y2 + _div(4 * bracket, Pv * Pv)

    return point, 2


def _third_order_g_point(a_coeffs, b_coeffs, n):
    a0, a1, a2 = a_coeffs
    b0, b1, b2 = b_coeffs
    P2 = (
        -4 * a2**2 * n**2 - 4 * (2 * a1 * b2 - a2 * b1) * n
        + 4 * b0 * b2 - b1**2 + 2 * a2**2,
        2 * (2 * a1 * a2 * n - 2 * a0 * b2 + a1 * b1 - 2 * a2 * b0),
        4 * a0 * a2 - a1**2,
    )
    P1 = (
        -4 * a2**3 * n**2 + (-6 * a1 * a2 * b2 + 4 * a2**2 * b1) * n
        - 2 * a0 * b2**2 + a1 * b1 * b2 + 2 * a2 * b0 * b2 - a2 * b1**2,
        2 * a1 * a2**2 * n + 2 * a0 * a2 * b2 - a1**2 * b2
        + a1 * a2 * b1 - 2 * a2**2 * b0,
    )
    Q1 = (
        2 * a1 * a2**2 * n**2 + (2 * a1**2 * b2 - a1 * a2 * b1 - 2 * a2**2 * b0) * n
        + a0 * b1 * b2 - 2 * a1 * b0 * b2 + a2 * b0 * b1,
        2 * a0 * a2**2 * n - a1**2 * a2 * n + a0 * a1 * b2
        - 2 * a0 * a2 * b1 + a1 * a2 * b0,
    )

    def point(x, y, y1, y2, y3):
        den = a2 * x - b2
        if den == 0:
            raise ValueError(f"grid touches the singular abscissa a2 x = b2 at x={x}")
        return (
            y3
            + 6 * y1 * y1
            + _div(4 * a2 * (y2 + 2 * y * y1), den)
            + _div(2 * a2**2 * y * y + poly_eval(P2, x) * y1, den * den)
            + _div(poly_eval(P1, x) * y - n * poly_eval(Q1, x), den**3)
        )

    return point, 3


def _pv_u_coefficients(p, q, n):
    StripFunctionalParams(n=n, p=p, q=q)
    four_q = (-((n - 2 * p) ** 2), 2 * (n + 2 * (p - q)), -1)
    two_r = (p * (p - q) * (n - 2 * p), p * (p - q))
    return four_q, two_r


def _pv_u_point(p, q, n):
    four_q, two_r = _pv_u_coefficients(p, q, n)
    four_qp = poly_derivative(four_q)

    def point(x, y, y1, y2, y3):
        return (
            x * x * y3
            + x * y2
            + 6 * x * y1 * y1
            - 4 * y * y1
            + poly_eval(four_q, x) * y1
            - _div(poly_eval(four_qp, x) * y, 2)
            + poly_eval(two_r, x)
        )

    return point, 3


def _piv_h_point(n, a):
    def point(x, y, y1, y2, y3):
        return (
            y3 + 6 * y1 * y1
            - 4 * (x * x + 2 * (a - n)) * y1
            + 4 * x * y - 8 * a * n
        )

    return point, 3


def _piv_h_scaled_point(p, q):
    if not q >= p >= 1:
        raise ParameterOrderError(f"need q >= p >= 1, got p={p}, q={q}")
    return _piv_h_point(n=p, a=q - p)


def _pv_k_point(n, a, b):
    def point(x, y, y1, y2, y3):
        if x == 0:
            raise ValueError("grid touches the singular abscissa x = 0")
        x2 = x * x
        return (
            y3
            + _div(y2, x)
            + _div(6 * y1 * y1, x)
            - _div(4 * y * y1, x2)
            - _div((x2 - 2 * x * (2 * n + a - b) + (a + b) ** 2) * y1, x2)
            + _div((x - 2 * n - a + b) * y, x2)
            - _div(b * n * (x + a + b), x2)
        )

    return point, 3


def pv_polynomials(n, alpha, beta):
    """Exact (P, Q, R) for the unit-interval first integral in f."""
    P = (0, 1)
    Q = (
        _div(-((alpha + beta) ** 2), 4),
        _div(2 * n + alpha - beta, 2),
        Fraction(-1, 4),
    )
    R = (_div(-beta * n * (alpha + beta), 2), _div(-beta * n, 2))
    return P, Q, R


def piv_polynomials(n, a):
    """Exact (P, Q, R) for the shifted-Gaussian equation in h."""
    return (1,), (2 * (n - a), 0, -1), (-4 * a * n,)


def pvk_polynomials(n, a, b):
    """Exact (P, Q, R) for the unit-interval equation in k."""
    P = (0, 1)
    Q = (
        _div(-((a + b) ** 2), 4),
        _div(2 * n + a - b, 2),
        Fraction(-1, 4),
    )
    R = (_div(-b * n * (a + b), 2), _div(-b * n, 2))
    return P, Q, R


def _pv_f_point(n, alpha, beta, delta=None):
    P, Q, R = pv_polynomials(n, alpha, beta)
    if delta is None:
        delta = _div(-(beta * beta * n * n), 4)
    return _cosgrove_point(P, Q, R, delta)


_EQUATIONS = {
    "chazy-master": (_chazy_point, ("P", "Q", "R")),
    "cosgrove-integral": (_cosgrove_point, ("P", "Q", "R", "delta")),
    "third-order-g": (_third_order_g_point, ("a_coeffs", "b_coeffs", "n")),
    "pv-u": (_pv_u_point, ("p", "q", "n")),
    "piv-h": (_piv_h_point, ("n", "a")),
    "piv-h-scaled": (_piv_h_scaled_point, ("p", "q")),
    "pv-k": (_pv_k_point, ("n", "a", "b")),
    "pv-f": (_pv_f_point, ("n", "alpha", "beta", "delta?")),
}


@dataclass(frozen=True)
class OdeResidualSpec:
    """A named equation together with its parameter values."""

    equation: str
    params: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.equation not in _EQUATIONS:
            raise ValueError(
                f"unknown equation {self.equation!r}; known: {sorted(_EQUATIONS)}"
            )

    def point_function(self):
        builder, names = _EQUATIONS[self.equation]
        required = [nm for nm in names if not nm.endswith("?")]
        optional = [nm[:-1] for nm in names if nm.endswith("?")]
        unknown = set(self.params) - set(required) - set(optional)
        if unknown:
            raise ValueError(
                f"unexpected parameters {sorted(unknown)} for {self.equation}"
            )
        missing = [nm for nm in required if nm not in self.params]
        if missing:
            raise ValueError(f"missing parameters {missing} for {self.equation}")
        return builder(**self.params)


@dataclass(frozen=True)
class ResidualReport:
    equation: str
    grid: tuple
    values: tuple

    @property
    def max_abs(self):
        return max(abs(v) for v in self.values)


def _sample_bit_width(fn):
    """Widest mantissa among mpf samples, or None if none are mpf."""
    widest = None
    for row in fn.values:
        for v in row:
            if isinstance(v, mp.mpf):
                bits = v._mpf_[3]
                widest = bits if widest is None else max(widest, bits)
    return widest


def residual(spec, fn):
    """Pointwise residual of the named equation on a sampled candidate.

    Rational samples are combined exactly; mpf samples are combined at
    their own mantissa width plus guard bits, so the report is never
    limited by the ambient mpmath context.
    """
    if not isinstance(spec, OdeResidualSpec):
        spec = OdeResidualSpec(*spec)
    point, needed = spec.point_function()
    if fn.order < needed:
        raise DerivativeOrderError(
            f"{spec.equation} needs derivative order {needed}, "
            f"the sample carries {fn.order}"
        )
    bits = _sample_bit_width(fn)
    with mp.workprec(max(bits or 0, mp.prec) + 30):
        vals = []
        for i in range(len(fn.grid)):
            x, ys = fn.point(i)
            y, y1, y2 = ys[0], ys[1], ys[2]
            y3 = ys[3] if needed >= 3 else 0
            vals.append(point(x, y, y1, y2, y3))
    return ResidualReport(equation=spec.equation, grid=fn.grid, values=tuple(vals))


def cosgrove_delta(P, Q, R, f0, f0_prime):
    """Integration constant forced by the first integral at x = 0.

    Requires P(0) = 0; then
    delta = -(Q(0) f' + R(0)) f' + (P'(0) f'^2 + Q'(0) f' + R'(0)) f
            - (P''(0) f' + Q''(0)) f^2 / 2 + P'''(0) f^3 / 6.
    """
    if poly_eval(P, 0) != 0:
        raise ValueError("the boundary identity needs P(0) = 0")
    dP = poly_derivative(P)
    ddP = poly_derivative(dP)
    dddP = poly_derivative(ddP)
    dQ = poly_derivative(Q)
    ddQ = poly_derivative(dQ)
    dR = poly_derivative(R)
    c = lambda poly: poly_eval(poly, 0)
    f, fp = f0, f0_prime
    return (
        -(c(Q) * fp + c(R)) * fp
        + (c(dP) * fp * fp + c(dQ) * fp + c(dR)) * f
        - _div((c(ddP) * fp + c(ddQ)) * f * f, 2)
        + _div(c(dddP) * f * f * f, 6)
    )


@dataclass(frozen=True)
class FirstIntegralReport:
    master_max_abs: object
    integral_max_abs: object
    integral_drift: object


def first_integral_consistency(P, Q, R, delta, fn, master_tol=None):
    """Check a first integral after confirming the third-order equation.

    Raises MasterEquationError when the chazy-master residual exceeds
    ``master_tol`` (default 1e-6), since the first integral is only
    meaningful on solutions of the master equation.  The report carries
    both the pointwise first-integral residual and its drift across the
    grid.
    """
    if master_tol is None:
        master_tol = mp.mpf("1e-6")
    master = residual(
        OdeResidualSpec("chazy-master", {"P": P, "Q": Q, "R": R}), fn
    )
    if master.max_abs > master_tol:
        raise MasterEquationError(
            f"master equation residual {master.max_abs} exceeds {master_tol}"
        )
    integral = residual(
        OdeResidualSpec("cosgrove-integral", {"P": P, "Q": Q, "R": R, "delta": delta}),
        fn,
    )
    drift = max(integral.values) - min(integral.values)
    return FirstIntegralReport(
        master_max_abs=master.max_abs,
        integral_max_abs=integral.max_abs,
        integral_drift=drift,
    )


# -- candidates built from the tau machinery ---------------------------------


def sample_matrix_integral_h(n, grid, power=0, side="left", precision=None,
                             fd_step=None):
    """Sampled h(s) with derivatives 0..3 from the shifted Gaussian tau."""
    ev = shifted_gaussian_evaluator(n, power, side, precision)

    def func(s, j):
        return matrix_integral_h(
            n, s, power, side, order=j, evaluator=ev, fd_step=fd_step
        )

    return sample_function(
        func, grid, 3, provenance=f"gaussian tau log-derivative, n={n}, power={power}"
    )


def sample_matrix_integral_k(n, grid, power_zero=0, power_one=0, precision=None,
                             fd_step=None):
    """Sampled k(s) with derivatives 0..3 from the unit-interval tau."""
    ev = unit_interval_evaluator(n, power_zero, power_one, precision)

    def func(s, j):
        return matrix_integral_k(
            n, s, power_zero, power_one, order=j, evaluator=ev, fd_step=fd_step
        )

    return sample_function(
        func, grid, 3,
        provenance=f"unit-interval tau log-derivative, n={n}, "
                   f"powers=({power_zero}, {power_one})",
    )


def pv_candidate_f(n, alpha, beta, gamma, a, b, grid, precision=None,
                   fd_step=None):
    """Sampled first-integral candidate f built from the jacobi-exp tau.

    f(y) = n (n + alpha + beta) - (y / d) (g(-y / d - gamma) - n a) with
    d = b - a and g the tau log-derivative; derivatives follow by the
    chain rule, with orders two and three of g Richardson-extrapolated.
    The reflected argument matches the unit-interval route, where
    k(s) = n (n + a + b) - s g(-s) solves the same equation; evaluating
    g at +y/d - gamma instead satisfies nothing (the two variants agree
    at y = 0 through first order, so only an off-axis residual can tell
    them apart).
    """
    d = b - a
    if d == 0:
        raise ValueError("need distinct interval endpoints")
    weight = WeightSpec.jacobi_exp(a, b, alpha, beta, gamma)
    ev = TauEvaluator(weight, n, precision)
    const = n * (n + alpha + beta)
    grid = tuple(grid)
    rows = [[], [], [], []]
    with mp.workdps(ev.precision + _GUARD_DIGITS):
        dm = _to_mp(d)
        am = _to_mp(a)
        for y in grid:
            ym = _to_mp(y)
            xx = -ym / dm - _to_mp(gamma)
            g = [ev.log_derivative(xx, j, fd_step=fd_step) for j in range(4)]
            rows[0].append(_to_mp(const) - (ym / dm) * (g[0] - n * am))
            rows[1].append(-(g[0] - n * am) / dm + (ym / dm**2) * g[1])
            rows[2].append(2 * g[1] / dm**2 - (ym / dm**3) * g[2])
            rows[3].append(-3 * g[2] / dm**3 + (ym / dm**4) * g[3])
    return SampledFunction(
        grid=grid,
        values=tuple(tuple(r) for r in rows),
        provenance=f"jacobi-exp tau log-derivative, n={n}",
    )


# -- the series route --------------------------------------------------------


@dataclass(frozen=True)
class USeriesReport:
    """Taylor data for the series solution of the equation in u.

    ``coefficients`` lists u_0 .. u_order exactly; ``residual_coefficients``
    are the Taylor coefficients of the equation residual as far as they
    are determined by that data.  ``series`` is the underlying
    generating-series identity report.
    """

    p: int
    q: int
    n: int
    order: int
    coefficients: tuple
    residual_coefficients: tuple
    residual_zero_through: int
    series: object

    @property
    def next_coefficient(self):
        """u_{n+1}, the first coefficient past the guaranteed pattern."""
        return self.coefficients[self.n + 1] if self.order >= self.n + 1 else None


def u_from_generating_series(p, q, n, order):
    """Exact Taylor coefficients of u = x (log S)' - p x + p (n - p).

    S is the strip generating function; the report also carries the
    residual series of the third-order equation in u.
    """
    if order < 3:
        raise ValueError(f"need order >= 3 to form a residual, got {order}")
    params = StripFunctionalParams(n=n, p=p, q=q)
    series = generating_series_identity(params, order)
    T = [Fraction(c) for c in series.lhs_coefficients]
    Tp = _series_diff(T) or [Fraction(0)]
    D = _series_div(Tp, T, order)
    u = [Fraction(p * (n - p))]
    u.append(Fraction(-p) + D[0])
    u.extend(D[1:order])

    length = order
    u1 = _series_diff(u)
    u2 = _series_diff(u1)
    u3 = _series_diff(u2)
    four_q, two_r = _pv_u_coefficients(p, q, n)
    four_qp = poly_derivative(four_q)
    res = [Fraction(0)] * length
    for term in (
        _series_shift(u3, 2, length),
        _series_shift(u2, 1, length),
        [6 * c for c in _series_shift(_series_mul(u1, u1, length), 1, length)],
        [-4 * c for c in _series_mul(u, u1, length)],
        _series_mul(four_q, u1, length),
        [_div(-c, 2) for c in _series_mul(four_qp, u, length)],
        list(two_r) + [0] * (length - len(two_r)),
    ):
        for i, c in enumerate(term[:length]):
            res[i] += c
    zero_through = -1
    for i, c in enumerate(res):
        if c != 0:
            break
        zero_through = i
    return USeriesReport(
        p=p, q=q, n=n, order=order,
        coefficients=tuple(u),
        residual_coefficients=tuple(res),
        residual_zero_through=zero_through,
        series=series,
    )


# -- locus rows and the bilinear identity ------------------------------------


@dataclass(frozen=True)
class VirasoroReport:
    row_minus_one: object
    row_zero: object
    partials: dict


def virasoro_locus_check(weight, n, x, precision=None, step=None, coeffs=None):
    """Evaluate the two constraint rows at the locus t = (x, 0, 0, ...).

    ``coeffs`` overrides the weight's coefficient pair (the pair is not
    unique; a reduced pair can avoid deformations that diverge on an
    unbounded interval).  Partial derivatives of log tau in t2, t3 are
    only taken when their row coefficient is nonzero.
    """
    (a0, a1, a2), (b0, b1, b2) = (
        coeffs if coeffs is not None else weight.virasoro_coefficients()
    )
    ev = TauEvaluator(weight, n, precision)
    with mp.workdps(ev.precision + _GUARD_DIGITS):
        xm = _to_mp(x)
        h = _to_mp(step) if step is not None else mp.mpf("1e-3")
        F = lambda t1, t2, t3: ev.generalized_log_tau(t1, t2, t3)

        def extrapolated(diff):
            return (4 * diff(h / 2) - diff(h)) / 3

        F0 = F(xm, 0, 0)
        F1 = extrapolated(lambda hh: (F(xm + hh, 0, 0) - F(xm - hh, 0, 0)) / (2 * hh))
        partials = {"F1": F1}

        c_m1_2 = _to_mp(a2) * xm - _to_mp(b2)
        c_m1_1 = _to_mp(a1) * xm + 2 * n * _to_mp(a2) - _to_mp(b1)
        c_0_1 = _to_mp(a0) * xm + 2 * n * _to_mp(a1) - _to_mp(b0)

        need_f2 = c_m1_1 != 0 or c_m1_2 != 0
        if need_f2:
            F2 = extrapolated(
                lambda hh: (F(xm, hh, 0) - F(xm, -hh, 0)) / (2 * hh)
            )
            partials["F2"] = F2
        else:
            F2 = mp.mpf(0)
        if c_m1_2 != 0:
            F3 = extrapolated(
                lambda hh: (F(xm, 0, hh) - F(xm, 0, -hh)) / (2 * hh)
            )
            partials["F3"] = F3
        else:
            F3 = mp.mpf(0)
        if a2 != 0:
            F11 = extrapolated(
                lambda hh: (F(xm + hh, 0, 0) - 2 * F0 + F(xm - hh, 0, 0)) / hh**2
            )
            partials["F11"] = F11
        else:
            F11 = mp.mpf(0)

        row_m1 = (
            n * (_to_mp(a0) * xm + _to_mp(a1) * n - _to_mp(b0))
            + c_m1_1 * F1
            + c_m1_2 * F2
        )
        row_0 = (
            _to_mp(a0) * n**2
            + c_0_1 * F1
            + _to_mp(a2) * (F1 * F1 + F11)
            + c_m1_1 * F2
            + c_m1_2 * F3
        )
    return VirasoroReport(row_minus_one=row_m1, row_zero=row_0, partials=partials)


def kp_residual_check(weight, n, x, precision=None, step=None, richardson=True):
    """|KP residual| of log tau at t = (x, 0, 0): D1^4 + 3 D2^2 - 4 D1 D3.

    Stencils are second order in the step; with ``richardson`` one
    extrapolation level removes the leading error term, so halving the
    step should shrink the reported value by roughly sixteen.
    """
    ev = TauEvaluator(weight, n, precision)
    with mp.workdps(ev.precision + _GUARD_DIGITS):
        xm = _to_mp(x)
        h0 = _to_mp(step) if step is not None else mp.mpf("1e-3")
        F = lambda t1, t2, t3: ev.generalized_log_tau(t1, t2, t3)
        F0 = F(xm, 0, 0)

        def stencil(h):
            fp, fm = F(xm + h, 0, 0), F(xm - h, 0, 0)
            fpp, fmm = F(xm + 2 * h, 0, 0), F(xm - 2 * h, 0, 0)
            f1111 = (fmm - 4 * fm + 6 * F0 - 4 * fp + fpp) / h**4
            f11 = (fp - 2 * F0 + fm) / h**2
            f22 = (F(xm, h, 0) - 2 * F0 + F(xm, -h, 0)) / h**2
            f13 = (
                F(xm + h, 0, h) - F(xm + h, 0, -h)
                - F(xm - h, 0, h) + F(xm - h, 0, -h)
            ) / (4 * h * h)
            return f1111 + 3 * f22 - 4 * f13 + 6 * f11 * f11

        if richardson:
            value = (4 * stencil(h0 / 2) - stencil(h0)) / 3
        else:
            value = stencil(h0)
        return abs(value)
