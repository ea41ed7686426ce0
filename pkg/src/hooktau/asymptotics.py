"""Finite-size studies of the limit statements, reported as data tables.

Each study pairs an exactly computed finite-size quantity (left side)
with its predicted limit (right side) over a sweep of the size
parameter, so convergence is visible as a ratio column drifting to one
or a gap column shrinking.  Studies return ConvergenceStudy tables that
serialize to CSV and JSON without timestamps, keeping reruns diffable.
"""

from __future__ import annotations

import csv
import math
from bisect import bisect_left, bisect_right
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction

from mpmath import mp

from .combinatorics import enumerate_partitions, iter_words
from .errors import ParameterOrderError
from .measures import (
    StripFunctionalParams,
    limit_constant,
    poisson_truncation_bound,
    strip_expectation,
    word_measure,
)
from .quadrature import gaussian_density_normalized
from .tau import _GUARD_DIGITS, _to_mp, default_precision, shifted_gaussian_evaluator


@dataclass
class ConvergenceStudy:
    """A table of finite-size values against their predicted limits."""

    name: str
    parameter_name: str
    parameters: list
    lhs: list
    rhs: list
    extras: dict = field(default_factory=dict)

    def ratios(self):
        return [
            (l / r) if r else float("nan") for l, r in zip(self.lhs, self.rhs)
        ]

    def gaps(self):
        return [abs(l - r) for l, r in zip(self.lhs, self.rhs)]

    @property
    def improving(self):
        """Whether the last gap beats the first one."""
        gaps = self.gaps()
        return len(gaps) >= 2 and gaps[-1] < gaps[0]

    @property
    def monotone(self):
        gaps = self.gaps()
        return all(b <= a for a, b in zip(gaps, gaps[1:]))

    def rows(self):
        out = []
        for i, param in enumerate(self.parameters):
            ratio = self.ratios()[i]
            out.append(
                {
                    "parameter": param,
                    "lhs": self.lhs[i],
                    "rhs": self.rhs[i],
                    "ratio": ratio,
                }
            )
        return out

    def write_csv(self, path):
        with open(path, "w", newline="") as fh:
            writer = csv.DictWriter(
                fh, fieldnames=["parameter", "lhs", "rhs", "ratio"]
            )
            writer.writeheader()
            for row in self.rows():
                writer.writerow({k: repr(v) for k, v in row.items()})

    def to_json_dict(self):
        return {
            "name": self.name,
            "parameter_name": self.parameter_name,
            "parameters": list(self.parameters),
            "lhs": list(self.lhs),
            "rhs": list(self.rhs),
            "ratios": self.ratios(),
            "gaps": self.gaps(),
            "improving": self.improving,
            "monotone": self.monotone,
            "extras": self.extras,
        }


# -- word-level machinery for the row-tail event ------------------------------


def _insertion_rows_and_d1(word):
    """Row lengths of the insertion tableau and, independently, the
    longest strictly decreasing subsequence length by patience sorting."""
    rows = []
    for letter in word:
        x = letter
        placed = False
        for row in rows:
            k = bisect_right(row, x)
            if k == len(row):
                row.append(x)
                placed = True
                break
            x, row[k] = row[k], x
        if not placed:
            rows.append([x])
    tails = []
    for v in reversed(word):
        k = bisect_left(tails, v)
        if k == len(tails):
            tails.append(v)
        else:
            tails[k] = v
    return [len(r) for r in rows], len(tails)


def _sweep_chunk(args):
    p, weight, prefix = args
    failures = 0
    words = 0
    import itertools

    for suffix in itertools.product(range(1, p + 1), repeat=weight - len(prefix)):
        word = prefix + suffix
        shape, dec = _insertion_rows_and_d1(word)
        words += 1
        if len(shape) != dec:
            failures += 1
            continue
        lam_p = shape[p - 1] if len(shape) >= p else 0
        head = weight - lam_p
        for upper in range(1, weight // p + 1):
            k = weight - upper * p
            lhs = lam_p >= upper
            rhs = dec == p and head <= upper * (p - 1) + k
            if lhs != rhs:
                failures += 1
    return words, failures


@dataclass(frozen=True)
class SweepReport:
    p: int
    max_weight: int
    words: int
    failures: int


def event_identity_sweep(p, max_weight, jobs=1):
    """Check the row-tail event identity on every word up to a weight.

    For each word w of weight N p + k the event part_p >= N must agree
    with: the decreasing-subsequence statistic equals p and the first
    p - 1 parts weigh at most N (p - 1) + k.  The insertion shape and the
    decreasing statistic are computed by separate routes, and their
    agreement is counted as part of the check.
    """
    if p < 1 or max_weight < 1:
        raise ValueError("need p >= 1 and max_weight >= 1")
    tasks = []
    for weight in range(1, max_weight + 1):
        if jobs > 1 and weight > 6:
            tasks.extend(
                (p, weight, (first,)) for first in range(1, p + 1)
            )
        else:
            tasks.append((p, weight, ()))
    total_words = failures = 0
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            for words, bad in pool.map(_sweep_chunk, tasks):
                total_words += words
                failures += bad
    else:
        for task in tasks:
            words, bad = _sweep_chunk(task)
            total_words += words
            failures += bad
    return SweepReport(p=p, max_weight=max_weight, words=total_words, failures=failures)


def row_tail_word_check(p, upper, k):
    """Exact tail count of the insertion measure by full word enumeration.

    Returns (tail_count, total_words, identity_failures) for words of
    weight upper * p + k.
    """
    weight = upper * p + k
    tail = 0
    failures = 0
    total = 0
    for word in iter_words(p, weight):
        shape, dec = _insertion_rows_and_d1(word)
        total += 1
        lam_p = shape[p - 1] if len(shape) >= p else 0
        if lam_p >= upper:
            tail += 1
        rhs = dec == p and (weight - lam_p) <= upper * (p - 1) + k
        if (lam_p >= upper) != rhs:
            failures += 1
    return tail, total, failures


# -- the studies --------------------------------------------------------------


def chi2_limit_study(p, q, k, n_values):
    """Scaled strip expectations against the chi-square moment limit.

    The left side is n^((p^2 - 1)/2) times the exact expectation at word
    length p (n - p) + k; the right side is the limit constant.
    """
    params_list = list(n_values)
    if not params_list:
        raise ValueError("need at least one n value")
    rhs_const = limit_constant(p, q, k).value
    lhs = []
    exact = []
    for n in params_list:
        if n <= p:
            raise ParameterOrderError(f"the study needs n > p, got n={n}, p={p}")
        params = StripFunctionalParams(n=n, p=p, q=q)
        ell = p * (n - p) + k
        expectation = strip_expectation(ell, params)
        exact.append(str(expectation))
        scale_exp = (p * p - 1) / 2.0
        lhs.append(float(expectation) * float(n) ** scale_exp)
    return ConvergenceStudy(
        name="chi2-limit",
        parameter_name="n",
        parameters=params_list,
        lhs=lhs,
        rhs=[rhs_const] * len(params_list),
        extras={"expectation_exact": exact, "k": k, "p": p, "q": q},
    )


def row_tail_study(p, k, upper_values, word_bound=13):
    """Scaled row-tail probabilities against their limit constant.

    The left side is N^((p^2 - 1)/2) P(part_p >= N) at word length
    N p + k, computed from the exact partition sum; where the word count
    allows it the probability is re-derived by full enumeration and the
    event identity is checked on every word.
    """
    uppers = list(upper_values)
    const = limit_constant(p, p, k).value
    lhs = []
    exact = []
    word_checked = []
    word_ok = []
    for upper in uppers:
        if upper < 1:
            raise ValueError(f"the row bound must be positive, got {upper}")
        ell = upper * p + k
        prob = strip_expectation(ell, StripFunctionalParams(n=upper + p, p=p, q=p))
        exact.append(str(prob))
        lhs.append(float(prob) * float(upper) ** ((p * p - 1) / 2.0))
        if ell <= word_bound and p**ell <= 2_000_000:
            tail, total, failures = row_tail_word_check(p, upper, k)
            word_checked.append(True)
            word_ok.append(
                failures == 0 and Fraction(tail, total) == prob
            )
        else:
            word_checked.append(False)
            word_ok.append(None)
    return ConvergenceStudy(
        name="row-tail",
        parameter_name="N",
        parameters=uppers,
        lhs=lhs,
        rhs=[const] * len(uppers),
        extras={
            "probability_exact": exact,
            "word_checked": word_checked,
            "word_agrees": word_ok,
            "p": p,
            "k": k,
        },
    )


def _poissonized_tail_value(p, q, s, n, precision):
    """Prefactored Poisson mixture of strip expectations at the matched x."""
    params = StripFunctionalParams(n=n, p=p, q=q)
    with mp.workdps(precision + _GUARD_DIGITS):
        t = -_to_mp(s) + mp.sqrt(_to_mp(s) ** 2 + 2 * (n - p))
        x = t * t / 2
        bound = poisson_truncation_bound(p, float(x)) + 10
        log_px = mp.log(p * x)
        total = mp.mpf(0)
        for ell in range(params.anchor_weight, bound + 1):
            e_val = strip_expectation(ell, params)
            if e_val == 0:
                continue
            weight = mp.exp(-p * x + ell * log_px - mp.loggamma(ell + 1))
            total += weight * mp.mpf(e_val.numerator) / mp.mpf(e_val.denominator)
        pref = mp.power(2 * x, -mp.mpf(p * (q - p)) / 2)
        return float(pref * total), float(x)


def poissonized_ratio_study(p, q, s, x_values, precision=None):
    """Poissonized strip tails against the Gaussian block-integral ratio.

    Each requested intensity is snapped to the nearest admissible n via
    n = round(p + x + s sqrt(2 x)), then the exact intensity for that n
    is used, so the comparison point sits exactly on the matching locus.
    """
    precision = default_precision() if precision is None else precision
    from .tau import hermitian_ratio

    xs = list(x_values)
    if not xs:
        raise ValueError("need at least one intensity value")
    rhs_val = float(hermitian_ratio(p, q, s, precision=precision))
    lhs = []
    actual_x = []
    ns = []
    for x_req in xs:
        n = round(p + x_req + s * math.sqrt(2 * x_req))
        if n <= p or n < q:
            raise ParameterOrderError(
                f"intensity {x_req} gives n={n}, need n > p and n >= q"
            )
        val, x_act = _poissonized_tail_value(p, q, s, n, precision)
        lhs.append(val)
        actual_x.append(x_act)
        ns.append(n)
    return ConvergenceStudy(
        name="poissonized-ratio",
        parameter_name="x",
        parameters=actual_x,
        lhs=lhs,
        rhs=[rhs_val] * len(xs),
        extras={"n": ns, "s": s, "p": p, "q": q},
    )


def density_limit_point(p, x, power=0, s=0.0):
    """One Poissonized coordinate-probe expectation and its Gaussian limit.

    The probe is prod_i (eps_i - s)^power on the event all eps_i >= s,
    where eps_i = (part_i - x) / sqrt(2 x); the limit side integrates the
    same probe against the normalized squared-Vandermonde Gaussian
    density over [s, inf)^p.
    """
    if x <= 0:
        raise ValueError(f"need a positive intensity, got {x}")
    if power < 0:
        raise ValueError(f"power must be nonnegative, got {power}")
    root = math.sqrt(2 * x)
    threshold = x + s * root
    # Shapes failing the probe contribute nothing, so when the threshold
    # is positive the enumeration can skip straight to parts above it.
    prune = math.ceil(threshold) if threshold > 0 else None
    min_ell = p * prune if prune else 0
    bound = poisson_truncation_bound(p, x) + 10
    log_px = math.log(p * x)
    lhs = 0.0
    for ell in range(min_ell, bound + 1):
        inner = 0.0
        for lam in enumerate_partitions(ell, p, min_part=prune):
            if prune and lam.num_rows < p:
                continue
            probe = 1.0
            ok = True
            for i in range(1, p + 1):
                eps = (lam.part(i) - x) / root
                if eps < s:
                    ok = False
                    break
                probe *= (eps - s) ** power
            if not ok or probe == 0.0:
                continue
            inner += float(word_measure(lam, p, ell)) * probe
        if inner:
            lhs += math.exp(-p * x + ell * log_px - math.lgamma(ell + 1)) * inner
    rhs = gaussian_density_normalized(p, power, s)
    return lhs, rhs


def density_limit_study(p, x_values, power=0, s=0.0):
    xs = list(x_values)
    lhs = []
    rhs = []
    for x in xs:
        left, right = density_limit_point(p, x, power=power, s=s)
        lhs.append(left)
        rhs.append(right)
    return ConvergenceStudy(
        name="density-limit",
        parameter_name="x",
        parameters=xs,
        lhs=lhs,
        rhs=rhs,
        extras={"power": power, "s": s, "p": p},
    )


# -- the scaling limit ---------------------------------------------------------


@dataclass(frozen=True)
class ScalingReport:
    """Sup-norm gaps between the rescaled series slope and its limit."""

    p: int
    q: int
    n_values: tuple
    s_values: tuple
    scaled_values: tuple
    limit_values: tuple
    sup_gaps: tuple

    @property
    def decreasing(self):
        return all(
            b < a for a, b in zip(self.sup_gaps, self.sup_gaps[1:])
        )

    def to_study(self):
        first = self.sup_gaps[0] if self.sup_gaps else float("nan")
        return ConvergenceStudy(
            name="scaling-limit",
            parameter_name="n",
            parameters=list(self.n_values),
            lhs=list(self.sup_gaps),
            rhs=[0.0] * len(self.n_values),
            extras={
                "normalized": [g / first if first else float("nan") for g in self.sup_gaps],
                "s_values": list(self.s_values),
                "p": self.p,
                "q": self.q,
            },
        )


def _slope_from_series(p, q, n, s, expectations, precision):
    """u at the rescaled abscissa from the exact generating function.

    u(x) = x S'(x)/S(x) - p x reduces to a weighted mean of the word
    length against the Poisson-tilted strip terms, evaluated in mpmath
    so the huge factorials cancel stably.
    """
    with mp.workdps(precision + _GUARD_DIGITS):
        x = n - _to_mp(s) * mp.sqrt(2 * n)
        if x <= 0:
            raise ValueError(f"the rescaled abscissa must be positive, got {x}")
        log_px = mp.log(p * x)
        num = mp.mpf(0)
        den = mp.mpf(0)
        for ell, e_val in expectations:
            term = mp.exp(ell * log_px - mp.loggamma(ell + 1))
            term *= mp.mpf(e_val.numerator) / mp.mpf(e_val.denominator)
            num += ell * term
            den += term
        if den == 0:
            raise ArithmeticError("the generating function vanished on the grid")
        u = num / den - p * x
        return -mp.sqrt(mp.mpf(2) / n) * u


def scaling_limit_check(p, q, n_values, s_values, precision=None):
    """Compare -sqrt(2/n) u(n - s sqrt(2n)) with the block-integral slope.

    The left side comes from the exact strip generating function, the
    right side from the shifted Gaussian tau function on [0, inf) with
    the power q - p.  Reported per n as a sup over the s grid.
    """
    precision = default_precision() if precision is None else precision
    ns = sorted(set(int(n) for n in n_values))
    ss = list(s_values)
    if not ns or not ss:
        raise ValueError("need at least one n and one s")
    ev = shifted_gaussian_evaluator(p, q - p, "right", precision)
    limits = []
    with mp.workdps(precision + _GUARD_DIGITS):
        for s in ss:
            sm = _to_mp(s)
            limits.append(-2 * p * sm - 2 * ev.log_derivative(-2 * sm, 0))
    scaled_all = []
    sup_gaps = []
    for n in ns:
        params = StripFunctionalParams(n=n, p=p, q=q)
        x_hi = n + max(0.0, -min(float(s) for s in ss)) * math.sqrt(2 * n)
        bound = poisson_truncation_bound(p, x_hi) + 10
        expectations = []
        for ell in range(params.anchor_weight, bound + 1):
            e_val = strip_expectation(ell, params)
            if e_val:
                expectations.append((ell, e_val))
        row = []
        gap = mp.mpf(0)
        for s, lim in zip(ss, limits):
            val = _slope_from_series(p, q, n, s, expectations, precision)
            row.append(val)
            gap = max(gap, abs(val - lim))
        scaled_all.append(tuple(float(v) for v in row))
        sup_gaps.append(float(gap))
    return ScalingReport(
        p=p,
        q=q,
        n_values=tuple(ns),
        s_values=tuple(float(s) for s in ss),
        scaled_values=tuple(scaled_all),
        limit_values=tuple(float(v) for v in limits),
        sup_gaps=tuple(sup_gaps),
    )


@dataclass(frozen=True)
class StirlingReport:
    """Ratios of exact factorial clusters to their Stirling replacements."""

    factorial_ratio: float
    product_ratio: float


def stirling_factors(n, p, k=0):
    """Exact-to-approximate ratios for the two factorial clusters.

    The first compares (p n + k - p^2)! with
    (n! p^n)^p (2 pi n)^(-(p-1)/2) sqrt(p) (p n)^(k - p^2); the second
    compares prod_{j=1..p} (n-j)! with (n!)^p n^(-p(p+1)/2).  Both drift
    to one as n grows.
    """
    if n <= p or p < 1:
        raise ParameterOrderError(f"need n > p >= 1, got n={n}, p={p}")
    if p * n + k - p * p < 0:
        raise ValueError("the shifted factorial argument must be nonnegative")
    with mp.workdps(40):
        nn, pp = mp.mpf(n), mp.mpf(p)
        log_exact = mp.loggamma(pp * nn + k - p * p + 1)
        log_apx = (
            p * (mp.loggamma(nn + 1) + nn * mp.log(pp))
            - (pp - 1) / 2 * mp.log(2 * mp.pi * nn)
            + mp.log(pp) / 2
            + (k - p * p) * mp.log(pp * nn)
        )
        factorial_ratio = float(mp.exp(log_exact - log_apx))
        log_prod = mp.fsum(mp.loggamma(nn - j + 1) for j in range(1, p + 1))
        log_prod_apx = p * mp.loggamma(nn + 1) - pp * (pp + 1) / 2 * mp.log(nn)
        product_ratio = float(mp.exp(log_prod - log_prod_apx))
    return StirlingReport(
        factorial_ratio=factorial_ratio, product_ratio=product_ratio
    )
