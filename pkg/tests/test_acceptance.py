"""Acceptance gate: fifteen checks, one test each, tolerances as stated.

Run with ``pytest -v tests/test_acceptance.py`` to get a pass/fail line
per criterion.  Exact criteria assert rational equality with zero
tolerance; numeric criteria assert the stated bound; trend criteria
assert the stated direction, not a rate.
"""

import math
from collections import Counter
from fractions import Fraction
from math import factorial

from mpmath import mp

from hooktau.asymptotics import (
    chi2_limit_study,
    event_identity_sweep,
    poissonized_ratio_study,
    row_tail_word_check,
    scaling_limit_check,
)
from hooktau.combinatorics import enumerate_partitions, iter_words, rsk_shape
from hooktau.measures import (
    StripFunctionalParams,
    generating_series_identity,
    strip_expectation,
    word_measure,
)
from hooktau.painleve import (
    OdeResidualSpec,
    kp_residual_check,
    residual,
    sample_function,
    sample_matrix_integral_h,
    u_from_generating_series,
    virasoro_locus_check,
)
from hooktau.tau import (
    WeightSpec,
    gaussian_vandermonde_mass,
    selberg_aomoto_mean,
)


def test_criterion_01_rsk_measure_exactness():
    """Shape frequencies over all p^ell words equal the measure exactly."""
    for p in (1, 2, 3):
        for ell in range(1, 9):
            tally = Counter()
            for word in iter_words(p, ell):
                tally[rsk_shape(word).parts] += 1
            total = p**ell
            assert sum(tally.values()) == total
            for lam in enumerate_partitions(ell, p):
                empirical = Fraction(tally.get(lam.parts, 0), total)
                assert empirical == word_measure(lam, p, ell), (p, ell, lam)


def test_criterion_02_normalization():
    """The measure sums to one exactly for p <= 4, ell <= 12."""
    for p in range(1, 5):
        for ell in range(1, 13):
            mass = sum(
                word_measure(lam, p, ell) for lam in enumerate_partitions(ell, p)
            )
            assert mass == Fraction(1), (p, ell)


def test_criterion_03_desk_instance_and_event_identity():
    """7/32 by both routes; the event identity on every word, p <= 3."""
    partition_route = strip_expectation(7, StripFunctionalParams(n=5, p=2, q=2))
    assert partition_route == Fraction(7, 32)
    tail, total, failures = row_tail_word_check(2, 3, 1)
    assert failures == 0
    assert Fraction(tail, total) == Fraction(7, 32)
    for p in (1, 2, 3):
        report = event_identity_sweep(p, 12)
        assert report.failures == 0, report
        assert report.words == sum(p**w for w in range(1, 13))


def test_criterion_04_one_letter_exact():
    """n^0 E^((n-1)+k,1) = (k+q-1)!/k! exactly for n <= 30, q <= 5, k <= 5."""
    for n in range(2, 31):
        for q in range(1, min(5, n) + 1):
            for k in range(6):
                value = strip_expectation(
                    (n - 1) + k, StripFunctionalParams(n=n, p=1, q=q)
                )
                assert value == Fraction(
                    factorial(k + q - 1), factorial(k)
                ), (n, q, k)


def test_criterion_05_two_letter_chi2_trend():
    """p = q = 2, k in {0, 1}: n = 40 strictly closer to 1, and within 25%."""
    for k in (0, 1):
        study = chi2_limit_study(2, 2, k, [10, 20, 40])
        ratios = study.ratios()
        assert abs(ratios[2] - 1) < abs(ratios[0] - 1), (k, ratios)
        assert abs(ratios[2] - 1) <= 0.25, (k, ratios)


def test_criterion_06_series_identity_six_orders():
    """Generating function equals constant times series, exactly, 6 orders."""
    for p in (1, 2):
        for q in range(p, 5):
            for n in range(q, 7):
                report = generating_series_identity(
                    StripFunctionalParams(n=n, p=p, q=q), 5
                )
                assert report.identity_holds, (p, q, n)
                assert report.matches_product, (p, q, n)
                assert report.low_orders_vanish, (p, q, n)


def test_criterion_07_u_series_residual():
    """u from the exact series: residual zero through order 5, exact u0, u1."""
    for p in (1, 2):
        for q in range(p, 4):
            for n in range(q, 6):
                report = u_from_generating_series(p, q, n, 8)
                assert report.residual_zero_through >= 5, (p, q, n)
                assert report.coefficients[0] == p * (n - p)
                assert report.coefficients[1] == Fraction(-p * (n - q), n)


def test_criterion_08_quartic_equation_from_gaussian_integral():
    """h(s) from the n=1 shifted Gaussian integral: residual <= 1e-6 on
    [-2, 2] at 60 digits, decreasing under step halving."""
    spec = OdeResidualSpec("piv-h", {"n": 1, "a": 0})
    grid = [mp.mpf(i) / 2 for i in range(-4, 5)]
    fn = sample_matrix_integral_h(1, grid, precision=60)
    report = residual(spec, fn)
    assert float(report.max_abs) <= 1e-6, float(report.max_abs)
    sub = [mp.mpf(i) for i in (-1, 0, 1)]
    coarse = residual(
        spec, sample_matrix_integral_h(1, sub, precision=60, fd_step=mp.mpf("1e-2"))
    )
    fine = residual(
        spec, sample_matrix_integral_h(1, sub, precision=60, fd_step=mp.mpf("5e-3"))
    )
    assert fine.max_abs < coarse.max_abs, (
        float(coarse.max_abs), float(fine.max_abs)
    )


def test_criterion_09_quintic_equation_closed_form():
    """k(s) = s e^(-s) / (1 - e^(-s)) satisfies its equation on [0.5, 4]."""
    with mp.workdps(40):
        closed = lambda s: s / mp.expm1(s)
        grid = [mp.mpf(1) / 2 + mp.mpf(i) / 2 for i in range(8)]
        fn = sample_function(
            lambda s, j: mp.diff(closed, s, j) if j else closed(s),
            grid,
            3,
            provenance="closed form s/(e^s - 1)",
        )
        report = residual(OdeResidualSpec("pv-k", {"n": 1, "a": 0, "b": 0}), fn)
    assert float(report.max_abs) <= 1e-6, float(report.max_abs)


def test_criterion_10_gaussian_third_order_rational():
    """g(x) = x/2 solves the Gaussian third-order equation in exact rationals."""
    grid = [Fraction(k, 4) for k in range(-6, 7) if k]
    fn = sample_function(
        lambda x, j: (
            x / 2 if j == 0 else Fraction(1, 2) if j == 1 else Fraction(0)
        ),
        grid,
        3,
        provenance="half-coordinate line",
    )
    spec = OdeResidualSpec(
        "third-order-g",
        {"a_coeffs": (0, 1, 0), "b_coeffs": (0, 0, 2), "n": 1},
    )
    report = residual(spec, fn)
    for value in report.values:
        assert isinstance(value, Fraction)
        assert value == 0
    assert report.max_abs == 0


def test_criterion_11_coordinate_mean_closed_form():
    """<z_1> matches a + (b-a)(n+alpha)/(2n+alpha+beta) to 1e-10."""
    for n in (1, 2, 3):
        for alpha in (-0.5, 0, 1, 2):
            for beta in (-0.5, 0, 1, 2):
                report = selberg_aomoto_mean(n, alpha, beta, precision=30)
                gap = abs(float(report.estimate - report.closed_form))
                assert gap <= 1e-10, (n, alpha, beta, gap)


def test_criterion_12_gaussian_vandermonde_mass():
    """Quadrature of the squared-Vandermonde Gaussian mass matches
    (2 pi)^(p/2) 2^(-p^2/2) prod j! to 1e-8, settling which reading holds."""
    for p in (1, 2, 3):
        report = gaussian_vandermonde_mass(p, precision=30)
        assert abs(report.quadrature - report.reading_product) <= 1e-8, p
        assert report.matching == "product", report


def test_criterion_13_scalar_poissonized_ratio():
    """p = q = 1, s in {-1, 0, 1}: gap < 0.05 at x = 50 and below the x = 25 gap."""
    for s in (-1, 0, 1):
        study = poissonized_ratio_study(1, 1, s, [25, 50], precision=30)
        gaps = study.gaps()
        assert gaps[1] < 0.05, (s, gaps)
        assert gaps[1] < gaps[0], (s, gaps)


def test_criterion_14_scaling_limit():
    """Rescaled slope approaches the block-integral slope monotonically
    along n in {50, 100, 200}; the limit satisfies the scaled equation."""
    s_grid = [x / 4.0 for x in range(-4, 5)]
    report = scaling_limit_check(1, 2, [50, 100, 200], s_grid, precision=30)
    assert report.decreasing, report.sup_gaps
    limit_fn = sample_matrix_integral_h(
        1, [mp.mpf(x) / 4 for x in range(-4, 5)], power=1, side="right",
        precision=30,
    )
    limit_residual = residual(
        OdeResidualSpec("piv-h-scaled", {"p": 1, "q": 2}), limit_fn
    )
    assert float(limit_residual.max_abs) <= 1e-4, float(limit_residual.max_abs)


def test_criterion_15_bilinear_and_locus_rows():
    """KP residual <= 1e-4 with >= 4x step-halving gain; locus rows to 1e-6."""
    weight = WeightSpec.laguerre_jacobi(0, 0, "unit")
    for n in (1, 2):
        rows = virasoro_locus_check(weight, n, 0.3, precision=40)
        assert abs(float(rows.row_minus_one)) <= 1e-6, n
        assert abs(float(rows.row_zero)) <= 1e-6, n
        coarse = kp_residual_check(weight, n, 0.5, precision=40, step=mp.mpf("1e-3"))
        fine = kp_residual_check(weight, n, 0.5, precision=40, step=mp.mpf("5e-4"))
        assert float(coarse) <= 1e-4, (n, float(coarse))
        assert coarse / fine >= 4, (n, float(coarse / fine))
