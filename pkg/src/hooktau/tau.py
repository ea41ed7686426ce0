"""Hankel determinant tau functions for moment weights.

A weight here is a density rho on an interval whose logarithmic
derivative is rational of low degree: -A rho' = B rho with deg A <= 2 and
deg B <= 2.  The tau function of size n attached to rho is

    tau_n(x) = integral over the n-box of
               Vandermonde(z)^2 * prod_i e^(x z_i) rho(z_i) dz,

computed as n! times the Hankel determinant of the exponential moments
mu_k(x).  Everything runs in mpmath arbitrary precision; first and second
x-derivatives use the exact row-shift identity mu_k' = mu_{k+1}, while
third and fourth log-derivative orders use Richardson-extrapolated
central differences on the exact lower orders.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from mpmath import mp

from .errors import (
    DivergentDeformationError,
    DivergentIntegralError,
    ParameterOrderError,
    PrecisionNotReachedError,
    StepSizeUnderflowError,
)

PRECISION_ENV = "HOOKTAU_PRECISION"
_GUARD_DIGITS = 15
_INF = float("inf")

_GAUSSIAN_SIDES = {"left": (-_INF, 0.0), "right": (0.0, _INF), "full": (-_INF, _INF)}
_UNIT_SIDES = {"unit": (0.0, 1.0), "tail": (1.0, _INF), "half": (0.0, _INF)}


def default_precision():
    """Working precision in decimal digits, overridable by environment."""
    raw = os.environ.get(PRECISION_ENV)
    if raw is None:
        return 60
    value = int(raw)
    if value < 10:
        raise ValueError(f"{PRECISION_ENV} must be at least 10, got {value}")
    return value


def _to_mp(v):
    if isinstance(v, Fraction):
        return mp.mpf(v.numerator) / mp.mpf(v.denominator)
    return mp.mpf(v)


def _is_integer(v):
    if isinstance(v, int):
        return True
    if isinstance(v, Fraction):
        return v.denominator == 1
    return float(v).is_integer()


@dataclass(frozen=True)
class WeightSpec:
    """A moment weight rho on an interval, with rational log-derivative.

    Supported families:

    - ``jacobi-exp``: (z - lo)^alpha (hi - z)^beta e^(gamma z) on a
      finite interval [lo, hi];
    - ``gaussian-power``: z^alpha e^(-z^2) on (-inf, 0], [0, inf) or the
      full line;
    - ``laguerre-jacobi``: z^alpha (1 - z)^beta on [0, 1], [1, inf) or
      [0, inf); on the unbounded intervals the bare weight has divergent
      moments and only tau arguments x < 0 are admissible.
    """

    family: str
    lo: object
    hi: object
    alpha: object = 0
    beta: object = 0
    gamma: object = 0

    def __post_init__(self):
        fam = self.family
        if fam == "jacobi-exp":
            if math.isinf(self.lo) or math.isinf(self.hi) or not self.hi > self.lo:
                raise ValueError(
                    f"jacobi-exp needs a finite interval lo < hi, got [{self.lo}, {self.hi}]"
                )
            if self.alpha <= -1 or self.beta <= -1:
                raise ValueError("edge exponents must exceed -1")
        elif fam == "gaussian-power":
            if (self.lo, self.hi) not in _GAUSSIAN_SIDES.values():
                raise ValueError(
                    f"gaussian-power interval must be one of {sorted(_GAUSSIAN_SIDES)}"
                )
            if self.beta != 0 or self.gamma != 0:
                raise ValueError("gaussian-power uses only the alpha exponent")
            if self.lo < 0:
                if not (_is_integer(self.alpha) and self.alpha >= 0):
                    raise ValueError(
                        "a fractional power needs the interval on the right of zero"
                    )
            elif self.alpha <= -1:
                raise ValueError("edge exponent must exceed -1")
        elif fam == "laguerre-jacobi":
            if (self.lo, self.hi) not in _UNIT_SIDES.values():
                raise ValueError(
                    f"laguerre-jacobi interval must be one of {sorted(_UNIT_SIDES)}"
                )
            if self.gamma != 0:
                raise ValueError("laguerre-jacobi carries no exponential factor")
            if self.lo == 0 and self.alpha <= -1:
                raise ValueError("edge exponent at zero must exceed -1")
            if self.hi == 1.0 and self.beta <= -1:
                raise ValueError("edge exponent at one must exceed -1")
            if self.hi > 1.0 and not _is_integer(self.beta):
                raise ValueError(
                    "crossing z = 1 needs an integer exponent there"
                )
        else:
            raise ValueError(f"unknown weight family {fam!r}")

    @classmethod
    def jacobi_exp(cls, a, b, alpha, beta, gamma=0):
        return cls("jacobi-exp", a, b, alpha, beta, gamma)

    @classmethod
    def gaussian_power(cls, power=0, side="right"):
        if side not in _GAUSSIAN_SIDES:
            raise ValueError(
                f"side must be one of {sorted(_GAUSSIAN_SIDES)}, got {side!r}"
            )
        lo, hi = _GAUSSIAN_SIDES[side]
        return cls("gaussian-power", lo, hi, power)

    @classmethod
    def laguerre_jacobi(cls, power_zero=0, power_one=0, side="unit"):
        if side not in _UNIT_SIDES:
            raise ValueError(
                f"side must be one of {sorted(_UNIT_SIDES)}, got {side!r}"
            )
        lo, hi = _UNIT_SIDES[side]
        return cls("laguerre-jacobi", lo, hi, power_zero, power_one)

    @property
    def is_compact(self):
        return not (math.isinf(self.lo) or math.isinf(self.hi))

    def virasoro_coefficients(self, reduce=True):
        """Coefficient triples (a0, a1, a2), (b0, b1, b2) with -A rho' = B rho.

        The pair is not unique; any common polynomial factor can be
        dropped.  For the pure Gaussian (alpha = 0) the reduced pair
        A = 1, B = 2z is returned unless ``reduce`` is false, in which
        case the family-wide pair A = z, B = 2z^2 - alpha is used.
        """
        if self.family == "jacobi-exp":
            a, b = self.lo, self.hi
            al, be, ga = self.alpha, self.beta, self.gamma
            return ((-a * b, a + b, -1), (ga * a * b - al * b - be * a, al + be - ga * (a + b), ga))
        if self.family == "gaussian-power":
            if reduce and self.alpha == 0:
                return ((1, 0, 0), (0, 2, 0))
            return ((0, 1, 0), (-self.alpha, 0, 2))
        return ((0, -1, 1), (self.alpha, -(self.alpha + self.beta), 0))

    def _exponents_mp(self):
        return _to_mp(self.alpha), _to_mp(self.beta), _to_mp(self.gamma)

    def density(self, z):
        """rho(z) under the current mpmath context."""
        z = _to_mp(z)
        al, be, ga = self._exponents_mp()
        if self.family == "jacobi-exp":
            lo, hi = _to_mp(self.lo), _to_mp(self.hi)
            out = mp.power(z - lo, al) * mp.power(hi - z, be)
            return out * mp.exp(ga * z) if ga else out
        if self.family == "gaussian-power":
            out = mp.exp(-z * z)
            return out * mp.power(z, al) if al else out
        out = mp.power(z, al) if al else mp.mpf(1)
        return out * mp.power(1 - z, be) if be else out

    def _check_integrable(self, t1, t2, t3):
        """Reject parameter combinations with a divergent moment integral."""
        if self.is_compact:
            return
        if self.family == "gaussian-power":
            quad_ok = t2 < 1
            if self.lo == -_INF and self.hi == _INF:
                ok = t3 == 0 and quad_ok
            elif self.hi == _INF:
                ok = t3 < 0 or (t3 == 0 and quad_ok)
            else:
                ok = t3 > 0 or (t3 == 0 and quad_ok)
            if not ok:
                raise DivergentDeformationError(
                    f"deformation (t2={t2}, t3={t3}) diverges on [{self.lo}, {self.hi}]"
                )
            return
        ok = t3 < 0 or (t3 == 0 and (t2 < 0 or (t2 == 0 and t1 < 0)))
        if ok:
            return
        if t2 == 0 and t3 == 0:
            raise DivergentIntegralError(
                "this weight needs a negative exponential argument on an unbounded interval"
            )
        raise DivergentDeformationError(
            f"deformation (t1={t1}, t2={t2}, t3={t3}) diverges on [{self.lo}, {self.hi}]"
        )

    def _integrand(self, k, t1, t2, t3):
        al, be, ga = self._exponents_mp()
        fam = self.family
        lo = None if math.isinf(self.lo) else _to_mp(self.lo)
        hi = None if math.isinf(self.hi) else _to_mp(self.hi)

        def f(z):
            if t3:
                arg = (t1 + ga) * z + t2 * z * z + t3 * z**3
            elif t2:
                arg = (t1 + ga) * z + t2 * z * z
            else:
                arg = (t1 + ga) * z
            if fam == "gaussian-power":
                arg -= z * z
                base = mp.power(z, al) if al else 1
            elif fam == "jacobi-exp":
                base = mp.power(z - lo, al) * mp.power(hi - z, be)
            else:
                base = mp.power(z, al) if al else mp.mpf(1)
                if be:
                    base *= mp.power(1 - z, be)
            if k:
                base = base * mp.power(z, k)
            return base * mp.exp(arg)

        return f

    def _quad_points(self, t1, t2):
        lo = -mp.inf if math.isinf(self.lo) else _to_mp(self.lo)
        hi = mp.inf if math.isinf(self.hi) else _to_mp(self.hi)
        pts = [lo, hi]
        if self.family == "gaussian-power":
            c2 = _to_mp(t2) - 1
            peak = _to_mp(t1) / (-2 * c2)
            if lo < peak < hi and abs(peak) > mp.mpf("0.1"):
                pts = [lo, peak, hi]
        return pts


def _richardson(estimates, factor=4):
    """Extrapolate estimates whose error is an even power series in h."""
    table = [mp.mpf(v) for v in estimates]
    m = len(table)
    for level in range(1, m):
        fac = mp.mpf(factor) ** level
        table = [
            (fac * table[i + 1] - table[i]) / (fac - 1)
            for i in range(m - level)
        ]
    return table[0]


def _det(rows):
    """Determinant by Gaussian elimination with partial pivoting."""
    m = [list(r) for r in rows]
    n = len(m)
    det = mp.mpf(1)
    for c in range(n):
        piv = max(range(c, n), key=lambda r: abs(m[r][c]))
        if m[piv][c] == 0:
            return mp.mpf(0)
        if piv != c:
            m[c], m[piv] = m[piv], m[c]
            det = -det
        det *= m[c][c]
        inv = 1 / m[c][c]
        for r in range(c + 1, n):
            fac = m[r][c] * inv
            if fac:
                for cc in range(c + 1, n):
                    m[r][cc] -= fac * m[c][cc]
    return det


class TauEvaluator:
    """Evaluates tau_n and its logarithmic derivatives for one weight.

    Moment integrals are cached per deformation point, so sweeps in s or
    finite-difference stencils reuse work.  ``precision`` is the target
    decimal accuracy; integration runs with guard digits on top of it.
    """

    def __init__(self, weight, n, precision=None):
        if not isinstance(weight, WeightSpec):
            raise TypeError(f"expected a WeightSpec, got {type(weight).__name__}")
        if n < 0:
            raise ValueError(f"matrix size must be nonnegative, got {n}")
        self.weight = weight
        self.n = int(n)
        self.precision = default_precision() if precision is None else int(precision)
        if self.precision < 10:
            raise ValueError(f"precision must be at least 10 digits, got {self.precision}")
        self._moments = {}
        self._fd_tables = {}

    # -- moments -----------------------------------------------------------

    def _canon(self, v):
        if isinstance(v, (int, Fraction)):
            return v
        with mp.workdps(self.precision + _GUARD_DIGITS):
            return mp.mpf(v)

    def moment(self, k, x):
        """mu_k(x) = integral of z^k e^(x z) rho(z) dz."""
        return self.deformed_moment(k, x, 0, 0)

    def deformed_moment(self, k, t1, t2, t3):
        if k < 0:
            raise ValueError(f"moment index must be nonnegative, got {k}")
        key = (k, self._canon(t1), self._canon(t2), self._canon(t3))
        hit = self._moments.get(key)
        if hit is not None:
            return hit
        self.weight._check_integrable(
            float(_to_mp(t1)), float(_to_mp(t2)), float(_to_mp(t3))
        )
        dps = self.precision + _GUARD_DIGITS
        with mp.workdps(dps):
            tm = tuple(_to_mp(t) for t in (t1, t2, t3))
            f = self.weight._integrand(k, *tm)
            pts = self.weight._quad_points(tm[0], tm[1])
            target = mp.mpf(10) ** (5 - self.precision)
            val = err = None
            for maxdegree in (6, 8, 10):
                val, err = mp.quad(f, pts, error=True, maxdegree=maxdegree)
                if not mp.isfinite(val):
                    raise DivergentIntegralError(
                        f"moment {k} did not evaluate finitely at {t1}, {t2}, {t3}"
                    )
                scale = abs(val) + 1
                if err <= scale * target:
                    break
            else:
                achieved = float(-mp.log10(err / scale)) if err > 0 else None
                raise PrecisionNotReachedError(
                    f"moment {k} at ({t1}, {t2}, {t3}) reached only "
                    f"{achieved} of {self.precision} digits",
                    achieved_digits=achieved,
                )
        self._moments[key] = val
        return val

    # -- determinants ------------------------------------------------------

    def _hankel(self, x, shifts=()):
        n = self.n
        bump = dict(shifts)
        return [
            [self.moment(i + j + bump.get(i, 0), x) for j in range(n)]
            for i in range(n)
        ]

    def tau(self, x):
        """tau_n(x) = n! det(mu_{i+j}(x))."""
        if self.n == 0:
            return mp.mpf(1)
        with mp.workdps(self.precision + _GUARD_DIGITS):
            return factorial(self.n) * _det(self._hankel(x))

    def tau_derivative(self, x, order=1):
        """Exact d/dx derivatives of tau via the moment shift identity."""
        if order not in (1, 2):
            raise ValueError(f"exact derivatives available for orders 1 and 2, got {order}")
        if self.n == 0:
            return mp.mpf(0)
        n = self.n
        with mp.workdps(self.precision + _GUARD_DIGITS):
            if order == 1:
                total = mp.fsum(
                    _det(self._hankel(x, shifts={r: 1})) for r in range(n)
                )
            else:
                total = mp.fsum(
                    _det(self._hankel(x, shifts={r: 2})) for r in range(n)
                )
                total += 2 * mp.fsum(
                    _det(self._hankel(x, shifts={r: 1, s: 1}))
                    for r in range(n)
                    for s in range(r + 1, n)
                )
            return factorial(n) * total

    # -- logarithmic derivatives --------------------------------------------

    def _g_exact(self, x):
        return self.tau_derivative(x, 1) / self.tau(x)

    def _g_prime_exact(self, x):
        g = self._g_exact(x)
        return self.tau_derivative(x, 2) / self.tau(x) - g * g

    def _fd_step(self, x, fd_step):
        with mp.workdps(self.precision + _GUARD_DIGITS):
            scale = max(mp.mpf(1), abs(_to_mp(x)))
            h0 = _to_mp(fd_step) if fd_step is not None else mp.mpf("1e-2") * scale
            if h0 / 2**5 < scale * mp.mpf(10) ** (-(self.precision // 2)):
                raise StepSizeUnderflowError(
                    f"step {h0} underflows the cancellation floor at "
                    f"{self.precision} digits"
                )
            return h0

    def _fd_table(self, x, fd_step, levels=5):
        h0 = self._fd_step(x, fd_step)
        key = (self._canon(x), self._canon(h0))
        hit = self._fd_tables.get(key)
        if hit is not None:
            return hit
        with mp.workdps(self.precision + _GUARD_DIGITS):
            xm = _to_mp(x)
            hs = [h0 / 2**i for i in range(levels + 1)]
            gp = [self._g_exact(xm + h) for h in hs]
            gm = [self._g_exact(xm - h) for h in hs]
            g0 = self._g_exact(xm)
            d2 = [
                (gp[i] - 2 * g0 + gm[i]) / hs[i] ** 2
                for i in range(levels + 1)
            ]
            d3 = [
                (gp[i - 1] - 2 * gp[i] + 2 * gm[i] - gm[i - 1]) / (2 * hs[i] ** 3)
                for i in range(1, levels + 1)
            ]
            out = (_richardson(d2), _richardson(d3))
        self._fd_tables[key] = out
        return out

    def log_derivative(self, x, order=0, method="auto", fd_step=None):
        """d^order/dx^order of tau'(x)/tau(x), orders 0 through 3.

        Orders 0 and 1 default to the exact determinant route; pass
        method="fd" to cross-check them by central differences on
        log tau.  Orders 2 and 3 always use Richardson-extrapolated
        differences of the exact order zero.
        """
        if order not in (0, 1, 2, 3):
            raise ValueError(f"order must be 0..3, got {order}")
        if method not in ("auto", "fd"):
            raise ValueError(f"method must be 'auto' or 'fd', got {method!r}")
        if order == 0 and method == "auto":
            return self._g_exact(x)
        if order == 1 and method == "auto":
            return self._g_prime_exact(x)
        if order in (0, 1):
            h0 = self._fd_step(x, fd_step)
            with mp.workdps(self.precision + _GUARD_DIGITS):
                xm = _to_mp(x)
                hs = [h0 / 2**i for i in range(4)]
                logt = lambda t: mp.log(abs(self.tau(t)))
                if order == 0:
                    ests = [
                        (logt(xm + h) - logt(xm - h)) / (2 * h) for h in hs
                    ]
                else:
                    f0 = logt(xm)
                    ests = [
                        (logt(xm + h) - 2 * f0 + logt(xm - h)) / h**2
                        for h in hs
                    ]
                return _richardson(ests)
        table = self._fd_table(x, fd_step)
        return table[0] if order == 2 else table[1]

    # -- deformations -------------------------------------------------------

    def generalized_tau(self, t1, t2, t3):
        """tau_n with the weight deformed by e^(t1 z + t2 z^2 + t3 z^3)."""
        if self.n == 0:
            return mp.mpf(1)
        n = self.n
        with mp.workdps(self.precision + _GUARD_DIGITS):
            rows = [
                [self.deformed_moment(i + j, t1, t2, t3) for j in range(n)]
                for i in range(n)
            ]
            return factorial(n) * _det(rows)

    def generalized_log_tau(self, t1, t2, t3):
        val = self.generalized_tau(t1, t2, t3)
        if not val > 0:
            raise ValueError(
                "log tau needs a positive tau value; this weight or "
                "deformation produced a signed one"
            )
        with mp.workdps(self.precision + _GUARD_DIGITS):
            return mp.log(val)


# -- named integrals built on the tau machinery -----------------------------


def shifted_gaussian_evaluator(n, power=0, side="right", precision=None):
    """Evaluator for the weight z^power e^(-z^2) on the chosen side."""
    return TauEvaluator(WeightSpec.gaussian_power(power, side), n, precision)


def unit_interval_evaluator(n, power_zero=0, power_one=0, precision=None):
    """Evaluator for the weight z^a (1-z)^b on [0, 1]."""
    return TauEvaluator(
        WeightSpec.laguerre_jacobi(power_zero, power_one, "unit"), n, precision
    )


def matrix_integral_h(n, s, power=0, side="left", precision=None, order=0,
                      evaluator=None, fd_step=None):
    """h(s) = -2 n s - 2 g(-2 s) for the shifted Gaussian block integral.

    Here g is the log-derivative of tau_n for the weight
    z^power e^(-z^2) on the chosen side; ``order`` requests d^order/ds^order
    with the chain rule applied to the exact or extrapolated g orders.
    """
    ev = evaluator or shifted_gaussian_evaluator(n, power, side, precision)
    with mp.workdps(ev.precision + _GUARD_DIGITS):
        sm = _to_mp(s)
        if order == 0:
            return -2 * ev.n * sm - 2 * ev.log_derivative(-2 * sm, 0)
        if order == 1:
            return -2 * ev.n + 4 * ev.log_derivative(-2 * sm, 1)
        if order == 2:
            return -8 * ev.log_derivative(-2 * sm, 2, fd_step=fd_step)
        if order == 3:
            return 16 * ev.log_derivative(-2 * sm, 3, fd_step=fd_step)
    raise ValueError(f"order must be 0..3, got {order}")


def matrix_integral_k(n, s, power_zero=0, power_one=0, precision=None, order=0,
                      evaluator=None, fd_step=None):
    """k(s) = n (n + a + b) - s g(-s) for the unit-interval weight z^a (1-z)^b."""
    ev = evaluator or unit_interval_evaluator(n, power_zero, power_one, precision)
    a = ev.weight.alpha
    b = ev.weight.beta
    with mp.workdps(ev.precision + _GUARD_DIGITS):
        sm = _to_mp(s)
        g = lambda j: ev.log_derivative(-sm, j, fd_step=fd_step)
        if order == 0:
            return ev.n * (ev.n + _to_mp(a) + _to_mp(b)) - sm * g(0)
        if order == 1:
            return -g(0) + sm * g(1)
        if order == 2:
            return 2 * g(1) - sm * g(2)
        if order == 3:
            return -3 * g(2) + sm * g(3)
    raise ValueError(f"order must be 0..3, got {order}")


def gaussian_hankel_mass(p):
    """Closed form (2 pi)^(p/2) 2^(-p^2/2) prod_{j=1..p} j! at working precision."""
    if p < 1:
        raise ValueError(f"dimension must be positive, got {p}")
    out = mp.power(2 * mp.pi, mp.mpf(p) / 2) * mp.power(2, -mp.mpf(p * p) / 2)
    for j in range(1, p + 1):
        out *= factorial(j)
    return out


def hermitian_ratio(p, q, s, precision=None, evaluator=None):
    """Ratio of the [s, inf) block integral to the full-line Gaussian one.

    The numerator integrand is Vandermonde^2 prod (z - s)^(q-p) e^(-z^2)
    over [s, inf)^p; shifting by s turns it into e^(-p s^2) tau_p(-2s)
    for the weight y^(q-p) e^(-y^2) on [0, inf).
    """
    if not q >= p >= 1:
        raise ParameterOrderError(f"need q >= p >= 1, got p={p}, q={q}")
    ev = evaluator or shifted_gaussian_evaluator(p, q - p, "right", precision)
    with mp.workdps(ev.precision + _GUARD_DIGITS):
        sm = _to_mp(s)
        num = mp.exp(-p * sm * sm) * ev.tau(-2 * sm)
        return num / gaussian_hankel_mass(p)


@dataclass(frozen=True)
class SelbergMeanReport:
    """First-coordinate mean of a Selberg-type density, two ways."""

    estimate: object
    closed_form: object

    @property
    def gap(self):
        return abs(self.estimate - self.closed_form)


def selberg_aomoto_mean(n, alpha, beta, a=0, b=1, precision=None):
    """Mean of one coordinate under the (z-a)^alpha (b-z)^beta ensemble.

    The estimate comes from tau'(0)/(n tau(0)); the closed form is
    a + (b - a)(n + alpha) / (2n + alpha + beta).
    """
    weight = WeightSpec.jacobi_exp(a, b, alpha, beta, 0)
    ev = TauEvaluator(weight, n, precision)
    with mp.workdps(ev.precision + _GUARD_DIGITS):
        estimate = ev.log_derivative(0, 0) / n
        closed = _to_mp(a) + (_to_mp(b) - _to_mp(a)) * (n + _to_mp(alpha)) / (
            2 * n + _to_mp(alpha) + _to_mp(beta)
        )
    return SelbergMeanReport(estimate=estimate, closed_form=closed)


@dataclass(frozen=True)
class GaussianMassReport:
    """The full-line Gaussian Vandermonde mass, three ways plus a variant.

    ``hankel`` is p! times the moment determinant, ``reading_product`` is
    (2 pi)^(p/2) 2^(-p^2/2) prod_{j<=p} j!, and ``reading_variant`` drops
    half the power of two; ``matching`` names which reading agrees.
    """

    p: int
    hankel: object
    quadrature: float
    reading_product: float
    reading_variant: float
    matching: str


def gaussian_vandermonde_mass(p, precision=None):
    """Evaluate the Gaussian Vandermonde mass and arbitrate its closed form."""
    from . import quadrature as quadmod

    ev = TauEvaluator(WeightSpec.gaussian_power(0, "full"), p, precision)
    with mp.workdps(ev.precision + _GUARD_DIGITS):
        hankel = ev.tau(0)
        product = float(gaussian_hankel_mass(p))
    variant = (2.0 * math.pi) ** (p / 2.0) * 2.0 ** (-(p * (p - 1)) / 2.0)
    for j in range(1, p + 1):
        variant *= factorial(j)
    quad = quadmod.vandermonde_hermite_integral(p)
    h = float(hankel)
    if abs(h - product) <= 1e-8 * abs(product):
        matching = "product"
    elif abs(h - variant) <= 1e-8 * abs(variant):
        matching = "variant"
    else:
        matching = "neither"
    return GaussianMassReport(
        p=p,
        hankel=hankel,
        quadrature=quad,
        reading_product=product,
        reading_variant=variant,
        matching=matching,
    )
