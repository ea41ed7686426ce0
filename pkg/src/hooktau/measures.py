"""Exact probability measures on words and partitions, and their moments.

The central objects are the push-forward of the uniform measure on words
of length ell over a p-letter alphabet through row insertion, its
Poissonized version, and the expectation of a hook product over a column
strip against that measure.  All finite-parameter computations here are
exact rationals; floats only appear where a limit constant involves pi.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial

from .combinatorics import (
    _as_partition,
    count_standard,
    enumerate_partitions,
    hook_product,
    pochhammer_symbol,
    schur_at_ones,
    strip_hook_product,
)
from .errors import (
    OddParameterError,
    ParameterOrderError,
    SeriesPoleError,
    WeightMismatchError,
)


@dataclass(frozen=True)
class StripFunctionalParams:
    """Integer triple (n, p, q) with n >= q >= p >= 1.

    p is the alphabet size, q the outer column bound, and n the ambient
    column count; the strip covers columns n-q+1 through n-p and the
    anchor rectangle has p rows of length n-p.
    """

    n: int
    p: int
    q: int

    def __post_init__(self):
        if not (self.n >= self.q >= self.p >= 1):
            raise ParameterOrderError(
                f"need n >= q >= p >= 1, got n={self.n}, q={self.q}, p={self.p}"
            )

    @property
    def anchor_weight(self):
        """Weight of the p x (n-p) rectangle."""
        return self.p * (self.n - self.p)


def word_measure(lam, p, ell):
    """Probability that a uniform word of length ell inserts to this shape.

    Equals (standard count) * (principal Schur value at p ones) / p^ell.
    Zero when the shape has more than p rows.
    """
    lam = _as_partition(lam)
    if lam.weight != ell:
        raise WeightMismatchError(
            f"shape weighs {lam.weight}, word length is {ell}"
        )
    if p < 1:
        raise ValueError(f"alphabet size must be positive, got {p}")
    if ell < 0:
        raise ValueError(f"word length must be nonnegative, got {ell}")
    return Fraction(count_standard(lam) * schur_at_ones(lam, p), p**ell)


def poissonized_measure(lam, p, x):
    """Poisson mixture of the word measures with intensity p x.

    The ell-th measure is weighted by exp(-p x) (p x)^ell / ell!, where
    ell is the weight of the shape.  Returned as a float; the rational
    factor is evaluated in log space so large weights stay finite.
    """
    lam = _as_partition(lam)
    if x < 0:
        raise ValueError(f"intensity parameter must be nonnegative, got {x}")
    ell = lam.weight
    base = word_measure(lam, p, ell)
    if x == 0:
        return float(base) if ell == 0 else 0.0
    log_poisson = -p * x + ell * math.log(p * x) - math.lgamma(ell + 1)
    return math.exp(log_poisson) * float(base)


def poisson_truncation_bound(p, x):
    """Weight cutoff beyond which Poisson tails are negligible here."""
    if x < 0:
        raise ValueError(f"intensity parameter must be nonnegative, got {x}")
    mean = p * x
    return int(math.ceil(mean + 12.0 * math.sqrt(mean))) if mean > 0 else 0


def strip_expectation(ell, params):
    """Expectation of the strip hook product over shapes of weight ell.

    Sums measure(shape) * strip product over shapes containing the
    p x (n-p) anchor rectangle.  Exact rational; zero when ell is smaller
    than the anchor weight.
    """
    if not isinstance(params, StripFunctionalParams):
        params = StripFunctionalParams(*params)
    if ell < 0:
        raise ValueError(f"word length must be nonnegative, got {ell}")
    side = params.n - params.p
    total = Fraction(0)
    for lam in enumerate_partitions(ell, params.p, min_part=side if side else None):
        if side and lam.num_rows < params.p:
            continue
        total += word_measure(lam, params.p, ell) * strip_hook_product(
            lam, params.n, params.p, params.q
        )
    return total


def chi2_moment(m, k):
    """k-th moment of half a chi-square variable with m degrees of freedom.

    Closed form k! * C(m/2 - 1 + k, k), valid for positive even m.
    """
    if m <= 0 or m % 2:
        raise OddParameterError(
            f"degrees of freedom must be a positive even integer, got {m}"
        )
    if k < 0:
        raise ValueError(f"moment order must be nonnegative, got {k}")
    return Fraction(factorial(k) * comb(m // 2 - 1 + k, k))


@dataclass(frozen=True)
class LimitConstant:
    """A limit constant split into its rational part and a float value.

    ``value`` is rational * sqrt(p) / (2 pi)^((p-1)/2); for p = 1 the
    whole constant is the rational part.
    """

    p: int
    q: int
    k: int
    rational: Fraction
    value: float


def limit_constant(p, q, k):
    """Constant in the tail asymptotics of the strip expectation.

    The rational factor is C(p q - 1 + k, k) * prod_{j=1..p} (q - j)! and
    the transcendental factor is sqrt(p) / (2 pi)^((p-1)/2).
    """
    if not (q >= p >= 1):
        raise ParameterOrderError(f"need q >= p >= 1, got p={p}, q={q}")
    if k < 0:
        raise ValueError(f"k must be nonnegative, got {k}")
    rational = Fraction(comb(p * q - 1 + k, k))
    for j in range(1, p + 1):
        rational *= factorial(q - j)
    value = float(rational) * math.sqrt(p) / (2.0 * math.pi) ** ((p - 1) / 2.0)
    return LimitConstant(p=p, q=q, k=k, rational=rational, value=value)


def hypergeom_2f1_series(p, q, n, order):
    """Taylor coefficients of the row-restricted 2F1-type series.

    Coefficient k is the sum over partitions kappa of k of
    (p)_kappa (q)_kappa / (hook(kappa)^2 (n)_kappa), where (x)_kappa is
    the partition rising factorial.  Shapes with more than p rows drop
    out through the numerator.  A vanishing (n)_kappa against a nonzero
    numerator raises SeriesPoleError; with n >= q >= p this cannot occur.
    """
    StripFunctionalParams(n=n, p=p, q=q)
    if order < 0:
        raise ValueError(f"order must be nonnegative, got {order}")
    coeffs = []
    for k in range(order + 1):
        acc = Fraction(0)
        for kappa in enumerate_partitions(k, max_rows=max(k, 1)):
            num = pochhammer_symbol(p, kappa) * pochhammer_symbol(q, kappa)
            if num == 0:
                continue
            den = pochhammer_symbol(n, kappa)
            if den == 0:
                raise SeriesPoleError(
                    f"(n)_kappa vanished at kappa={tuple(kappa)} with n={n}"
                )
            h = hook_product(kappa)
            acc += Fraction(num, h * h * den)
        coeffs.append(acc)
    return coeffs


def cauchy_identity_check(p, q, order):
    """Largest k <= order with sum_kappa s(1^p) s(1^q) = C(p q + k - 1, k).

    The sum runs over partitions kappa of k; shapes taller than
    min(p, q) contribute zero.  Returns order when every level matches.
    """
    if p < 1 or q < 1:
        raise ValueError(f"need positive alphabet sizes, got p={p}, q={q}")
    if order < 0:
        raise ValueError(f"order must be nonnegative, got {order}")
    rows = max(min(p, q), 1)
    for k in range(order + 1):
        total = 0
        for kappa in enumerate_partitions(k, max_rows=rows):
            total += schur_at_ones(kappa, p) * schur_at_ones(kappa, q)
        if total != comb(p * q + k - 1, k):
            return k - 1
    return order


@dataclass(frozen=True)
class SeriesIdentityReport:
    """Outcome of matching the strip series against the restricted series.

    ``lhs_coefficients`` are the exact Taylor coefficients of
    sum_ell (p x)^ell / ell! * strip expectation, starting at the anchor
    weight.  ``series_coefficients`` are the restricted series levels.
    ``fitted_constant`` is the leading ratio between the two, compared
    against the closed-form product prod_{i=1..p} (q-i)!/(n-i)!.
    """

    params: StripFunctionalParams
    order: int
    leading_weight: int
    lhs_coefficients: tuple
    series_coefficients: tuple
    fitted_constant: Fraction
    product_constant: Fraction
    matches_product: bool
    identity_holds: bool
    low_orders_vanish: bool


def generating_series_identity(params, order):
    """Match the strip generating function with a constant times the series.

    Checks, exactly, that the coefficient of x^(anchor + k) on the left
    equals fitted_constant * series coefficient k for k = 0 .. order, and
    that nothing appears below the anchor weight.
    """
    if not isinstance(params, StripFunctionalParams):
        params = StripFunctionalParams(*params)
    if order < 0:
        raise ValueError(f"order must be nonnegative, got {order}")
    w0 = params.anchor_weight
    low = [
        Fraction(params.p**ell, factorial(ell)) * strip_expectation(ell, params)
        for ell in range(min(w0, 3))
    ]
    lhs = [
        Fraction(params.p ** (w0 + k), factorial(w0 + k))
        * strip_expectation(w0 + k, params)
        for k in range(order + 1)
    ]
    series = hypergeom_2f1_series(params.p, params.q, params.n, order)
    if lhs[0] == 0:
        raise ArithmeticError("leading strip coefficient vanished unexpectedly")
    fitted = lhs[0] / series[0]
    product = Fraction(1)
    for i in range(1, params.p + 1):
        product *= Fraction(factorial(params.q - i), factorial(params.n - i))
    return SeriesIdentityReport(
        params=params,
        order=order,
        leading_weight=w0,
        lhs_coefficients=tuple(lhs),
        series_coefficients=tuple(series),
        fitted_constant=fitted,
        product_constant=product,
        matches_product=fitted == product,
        identity_holds=all(
            lhs[k] == fitted * series[k] for k in range(order + 1)
        ),
        low_orders_vanish=all(c == 0 for c in low),
    )
