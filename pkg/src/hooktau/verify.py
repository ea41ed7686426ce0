"""Named self-check suites behind the command line verify subcommand.

Each suite re-derives a handful of known values through at least two
routes and reports one CheckResult per named check.  These are smoke
level: small parameters, quick runs.  The full battery lives in the
test suite.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from mpmath import mp

from . import asymptotics, measures, painleve, quadrature, tau
from .combinatorics import (
    Partition,
    conjugate,
    count_standard,
    d1,
    enumerate_partitions,
    hook_length,
    i_k,
    iter_words,
    rsk_shape,
    schur_at_ones,
    strip_hook_product,
)


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str = ""


def _check(name, condition, detail=""):
    return CheckResult(name=name, passed=bool(condition), detail=detail)


def combinatorics_suite(precision=None):
    out = []
    lam = Partition((4, 3))
    out.append(
        _check(
            "conjugate-involution",
            conjugate(lam) == (2, 2, 2, 1)
            and all(
                conjugate(conjugate(m)) == m
                for w in range(7)
                for m in enumerate_partitions(w, w or 1)
            ),
        )
    )
    out.append(
        _check(
            "hook-values",
            hook_length(lam, 1, 1) == 5 and count_standard(lam) == 14,
            "shape (4,3)",
        )
    )
    out.append(
        _check(
            "principal-schur",
            schur_at_ones((2, 1), 2) == 2 and schur_at_ones((1, 1, 1), 2) == 0,
        )
    )
    ok = True
    for word in iter_words(2, 5):
        shape = rsk_shape(word)
        if d1(word) != shape.conjugate().part(1):
            ok = False
            break
        if i_k(word, 1, method="exhaustive") != shape.part(1):
            ok = False
            break
    out.append(_check("insertion-statistics", ok, "p=2, weight 5 words"))
    norm = all(
        sum(
            count_standard(m) * schur_at_ones(m, p)
            for m in enumerate_partitions(ell, p)
        )
        == p**ell
        for p in (1, 2, 3)
        for ell in range(7)
    )
    out.append(_check("shape-measure-normalization", norm, "p <= 3, ell <= 6"))
    out.append(
        _check(
            "strip-products",
            strip_hook_product((6,), 5, 1, 3) == 12
            and strip_hook_product((3, 2), 4, 2, 3) == 3,
        )
    )
    return out


def measures_suite(precision=None):
    out = []
    out.append(
        _check(
            "chi2-moments",
            measures.chi2_moment(8, 1) == 4 and measures.chi2_moment(4, 2) == 6,
        )
    )
    out.append(
        _check(
            "limit-constant-p1",
            measures.limit_constant(1, 3, 2).rational == Fraction(12)
            and abs(measures.limit_constant(2, 2, 0).value - 1 / 3.14159265358979**0.5)
            < 1e-12,
        )
    )
    coeffs = measures.hypergeom_2f1_series(2, 3, 4, 4)
    out.append(
        _check(
            "series-first-level",
            coeffs[0] == 1 and coeffs[1] == Fraction(2 * 3, 4),
            "c1 must be p q / n",
        )
    )
    out.append(
        _check(
            "cauchy-levels",
            measures.cauchy_identity_check(2, 3, 6) == 6,
        )
    )
    rep = measures.generating_series_identity(
        measures.StripFunctionalParams(n=4, p=2, q=2), 5
    )
    out.append(
        _check(
            "series-identity",
            rep.identity_holds and rep.matches_product
            and rep.fitted_constant == Fraction(1, 12),
            "n=4, p=q=2",
        )
    )
    tail = measures.strip_expectation(
        7, measures.StripFunctionalParams(n=5, p=2, q=2)
    )
    out.append(
        _check("row-tail-value", tail == Fraction(7, 32), "P(part_2 >= 3) at ell=7")
    )
    return out


def tau_suite(precision=None):
    precision = precision or 30
    out = []
    ev = tau.TauEvaluator(tau.WeightSpec.gaussian_power(0, "full"), 1, precision)
    with mp.workdps(precision):
        gauss_ok = abs(ev.tau(1) - mp.sqrt(mp.pi) * mp.exp(mp.mpf(1) / 4)) < mp.mpf(
            10
        ) ** (5 - precision)
    out.append(_check("gaussian-tau-closed-form", gauss_ok, "sqrt(pi) e^(x^2/4)"))
    ev2 = tau.TauEvaluator(tau.WeightSpec.gaussian_power(0, "full"), 2, precision)
    with mp.workdps(precision):
        out.append(
            _check(
                "gaussian-tau-n2",
                abs(ev2.tau(0) - mp.pi) < mp.mpf(10) ** (5 - precision),
                "tau_2(0) = pi",
            )
        )
    evj = tau.unit_interval_evaluator(2, 0, 0, precision)
    direct = quadrature.vandermonde_unit_integral(2, 0, 0, x=0.4)
    out.append(
        _check(
            "unit-interval-vs-quadrature",
            abs(float(evj.tau(0.4)) - direct) < 1e-9 * abs(direct),
            "n=2 against the float tensor rule",
        )
    )
    g_exact = evj.log_derivative(0.3, 0)
    g_fd = evj.log_derivative(0.3, 0, method="fd")
    out.append(
        _check("log-derivative-routes", abs(g_exact - g_fd) < 1e-8, "exact vs fd")
    )
    rep = tau.selberg_aomoto_mean(2, 1, Fraction(1, 2), 0, 1, precision)
    out.append(
        _check("coordinate-mean", rep.gap < 1e-10, "n=2, exponents (1, 1/2)")
    )
    mass = tau.gaussian_vandermonde_mass(2, precision)
    out.append(
        _check(
            "gaussian-mass-reading",
            mass.matching == "product"
            and abs(mass.quadrature - mass.reading_product) < 1e-8,
        )
    )
    ratio = tau.hermitian_ratio(1, 1, 0, precision)
    out.append(
        _check(
            "block-ratio-half",
            abs(ratio - mp.mpf(1) / 2) < 1e-10,
            "p=q=1 at s=0",
        )
    )
    return out


def painleve_suite(precision=None):
    precision = precision or 30
    out = []
    grid = [Fraction(k, 7) for k in (-3, -1, 2, 5)]
    fn = painleve.SampledFunction(
        grid=tuple(grid),
        values=(
            tuple(x / 2 for x in grid),
            tuple(Fraction(1, 2) for _ in grid),
            tuple(Fraction(0) for _ in grid),
            tuple(Fraction(0) for _ in grid),
        ),
        provenance="closed form x/2",
    )
    rep = painleve.residual(
        painleve.OdeResidualSpec(
            "third-order-g",
            {"a_coeffs": (0, 1, 0), "b_coeffs": (0, 0, 2), "n": 1},
        ),
        fn,
    )
    out.append(
        _check(
            "exact-gaussian-row",
            all(v == 0 for v in rep.values),
            "g = x/2 in rational arithmetic",
        )
    )
    useries = painleve.u_from_generating_series(2, 3, 4, 8)
    out.append(
        _check(
            "series-residual",
            useries.residual_zero_through >= 5
            and useries.coefficients[0] == 4
            and useries.coefficients[1] == Fraction(-2 * (4 - 3), 4),
            "p=2, q=3, n=4 through order 8",
        )
    )
    with mp.workdps(precision):
        sgrid = [mp.mpf(s) / 4 for s in range(2, 17, 5)]
        closed = painleve.sample_function(
            lambda s, j: mp.diff(lambda t: t / mp.expm1(t), s, j)
            if j
            else s / mp.expm1(s),
            sgrid,
            3,
            provenance="closed form s/(e^s - 1)",
        )
        krep = painleve.residual(
            painleve.OdeResidualSpec("pv-k", {"n": 1, "a": 0, "b": 0}), closed
        )
        out.append(
            _check(
                "unit-interval-closed-form",
                float(krep.max_abs) < 1e-6,
                "n=1 exponents zero",
            )
        )
    delta = painleve.cosgrove_delta(
        *painleve.pv_polynomials(1, 0, 1),
        Fraction(2),
        Fraction(-1, 3),
    )
    out.append(
        _check(
            "first-integral-constant",
            delta == Fraction(-1, 4),
            "matches -beta^2 n^2 / 4",
        )
    )
    weight = tau.WeightSpec.laguerre_jacobi(0, 0, "unit")
    vrep = painleve.virasoro_locus_check(weight, 1, 0.0, precision)
    out.append(
        _check(
            "locus-rows",
            abs(vrep.row_minus_one) < 1e-8 and abs(vrep.row_zero) < 1e-8,
            "unit interval, n=1 at x=0",
        )
    )
    kp = painleve.kp_residual_check(weight, 1, 0.5, precision)
    out.append(_check("bilinear-identity", float(kp) < 1e-5, "n=1 at x=1/2"))
    return out


def asymptotics_suite(precision=None):
    precision = precision or 30
    out = []
    study = asymptotics.chi2_limit_study(1, 2, 1, [6, 12, 24])
    out.append(
        _check(
            "chi2-study-exact-at-p1",
            all(abs(r - 1) < 1e-12 for r in study.ratios()),
            "p=1 collapses to an identity",
        )
    )
    study2 = asymptotics.chi2_limit_study(2, 2, 0, [6, 10, 14])
    out.append(
        _check(
            "chi2-study-trend",
            study2.improving,
            "p=q=2 ratio moves toward 1",
        )
    )
    tail = asymptotics.row_tail_study(2, 1, [2, 3])
    out.append(
        _check(
            "row-tail-word-agreement",
            all(ok for ok in tail.extras["word_agrees"]),
            "enumeration matches the partition sum",
        )
    )
    sweep = asymptotics.event_identity_sweep(2, 8)
    out.append(
        _check(
            "event-identity-sweep",
            sweep.failures == 0,
            f"{sweep.words} words checked",
        )
    )
    stir = asymptotics.stirling_factors(60, 2, 1)
    out.append(
        _check(
            "stirling-ratios",
            abs(stir.factorial_ratio - 1) < 0.05
            and abs(stir.product_ratio - 1) < 0.05,
        )
    )
    pois = asymptotics.poissonized_ratio_study(1, 1, 0.0, [12.0, 30.0], precision)
    out.append(
        _check(
            "poissonized-gap-shrinks",
            pois.improving,
            "p=q=1 toward the erfc value",
        )
    )
    dens = asymptotics.density_limit_point(1, 40.0, power=0, s=0.0)
    out.append(
        _check(
            "density-probe",
            abs(dens[0] - dens[1]) < 0.1,
            "indicator probe, p=1",
        )
    )
    return out


SUITES = {
    "combinatorics": combinatorics_suite,
    "measures": measures_suite,
    "tau": tau_suite,
    "painleve": painleve_suite,
    "asymptotics": asymptotics_suite,
}


def run_suite(name, precision=None):
    if name == "all":
        out = []
        for key in SUITES:
            out.extend(run_suite(key, precision))
        return out
    try:
        suite = SUITES[name]
    except KeyError:
        raise ValueError(f"unknown suite {name!r}; known: {sorted(SUITES)} or 'all'")
    results = suite(precision)
    return [
        CheckResult(name=f"{name}.{r.name}", passed=r.passed, detail=r.detail)
        for r in results
    ]
