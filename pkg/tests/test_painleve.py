"""Equation table, series route, and sampled residuals.

The named equations are cross-checked against the master form on random
rational samples before anything numeric enters, so the specialized
point functions cannot drift from the polynomial data that defines them.
"""

import random
from fractions import Fraction

import pytest
from mpmath import mp

from hooktau.errors import (
    DerivativeOrderError,
    DivergentDeformationError,
    MasterEquationError,
    ParameterOrderError,
)
from hooktau.painleve import (
    OdeResidualSpec,
    SampledFunction,
    cosgrove_delta,
    first_integral_consistency,
    kp_residual_check,
    piv_polynomials,
    poly_derivative,
    poly_eval,
    pv_candidate_f,
    pv_polynomials,
    pvk_polynomials,
    residual,
    sample_function,
    sample_matrix_integral_h,
    sample_matrix_integral_k,
    u_from_generating_series,
    virasoro_locus_check,
)
from hooktau.tau import WeightSpec

PREC = 30


def random_rational_samples(count, seed, span=3):
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        x = Fraction(rng.randint(1, 6 * span), 6)  # keep clear of x = 0
        ys = tuple(Fraction(rng.randint(-24, 24), 8) for _ in range(4))
        out.append((x, ys))
    return out


def point_of(equation, params):
    return OdeResidualSpec(equation, params).point_function()[0]


# -- polynomial helpers -----------------------------------------------------------


def test_poly_eval_and_derivative():
    poly = (Fraction(1), Fraction(-3), Fraction(2))  # 1 - 3x + 2x^2
    assert poly_eval(poly, Fraction(2)) == 1 - 6 + 8
    assert poly_derivative(poly) == (Fraction(-3), Fraction(4))
    assert poly_derivative((5,)) == ()
    assert poly_eval((), 7) == 0


# -- the equation table -----------------------------------------------------------


def test_pv_k_specializes_the_master_form():
    for n, a, b in [(1, 0, 0), (1, 0, 1), (2, 1, 1), (3, 2, 1)]:
        special = point_of("pv-k", {"n": n, "a": a, "b": b})
        master = point_of(
            "chazy-master",
            dict(zip("PQR", pvk_polynomials(n, a, b))),
        )
        for x, ys in random_rational_samples(8, seed=n * 100 + a * 10 + b):
            assert special(x, *ys) == master(x, *ys)


def test_piv_h_specializes_the_master_form():
    for n, a in [(1, 0), (1, 1), (2, 0), (3, 2)]:
        special = point_of("piv-h", {"n": n, "a": a})
        master = point_of(
            "chazy-master", dict(zip("PQR", piv_polynomials(n, a)))
        )
        for x, ys in random_rational_samples(8, seed=n * 10 + a):
            assert special(x, *ys) == master(x, *ys)


def test_scaled_equation_reindexes_piv():
    scaled = point_of("piv-h-scaled", {"p": 2, "q": 3})
    direct = point_of("piv-h", {"n": 2, "a": 1})
    for x, ys in random_rational_samples(6, seed=23):
        assert scaled(x, *ys) == direct(x, *ys)
    with pytest.raises(ParameterOrderError):
        point_of("piv-h-scaled", {"p": 3, "q": 2})


def test_pv_f_is_the_first_integral_with_forced_constant():
    n, alpha, beta = 2, 1, 1
    P, Q, R = pv_polynomials(n, alpha, beta)
    delta = Fraction(-(beta * n) ** 2, 4)
    forced = point_of("pv-f", {"n": n, "alpha": alpha, "beta": beta})
    explicit = point_of(
        "cosgrove-integral", {"P": P, "Q": Q, "R": R, "delta": delta}
    )
    for x, ys in random_rational_samples(6, seed=7):
        assert forced(x, *ys) == explicit(x, *ys)
    # an explicit delta wins over the default
    other = point_of(
        "pv-f", {"n": n, "alpha": alpha, "beta": beta, "delta": Fraction(1)}
    )
    x, ys = random_rational_samples(1, seed=8)[0]
    assert other(x, *ys) != forced(x, *ys)


def test_polynomial_tables_frozen_values():
    assert piv_polynomials(1, 0) == ((1,), (2, 0, -1), (0,))
    P, Q, R = pv_polynomials(1, 0, 1)
    assert P == (0, 1)
    assert Q == (Fraction(-1, 4), Fraction(1, 2), Fraction(-1, 4))
    assert R == (Fraction(-1, 2), Fraction(-1, 2))
    assert pvk_polynomials(1, 0, 1) == pv_polynomials(1, 0, 1)


def test_spec_validation():
    with pytest.raises(ValueError):
        OdeResidualSpec("no-such-equation", {})
    with pytest.raises(ValueError):
        point_of("piv-h", {"n": 1})  # missing a
    with pytest.raises(ValueError):
        point_of("piv-h", {"n": 1, "a": 0, "extra": 2})


# -- sampled functions and the residual frame ---------------------------------------


def test_sample_function_layout():
    fn = sample_function(lambda x, j: x + j, (1, 2, 3), 2, provenance="toy")
    assert fn.order == 2
    assert fn.grid == (1, 2, 3)
    x, ys = fn.point(1)
    assert x == 2 and ys == (2, 3, 4)
    assert fn.provenance == "toy"


def test_residual_requires_enough_derivatives():
    fn = sample_function(lambda x, j: Fraction(0), (Fraction(1),), 2)
    with pytest.raises(DerivativeOrderError):
        residual(OdeResidualSpec("piv-h", {"n": 1, "a": 0}), fn)


def test_rational_solution_stays_rational():
    # g = x/2 solves the third-order equation for the plain square weight
    grid = tuple(Fraction(k, 7) for k in range(-3, 4))
    fn = SampledFunction(
        grid=grid,
        values=(
            tuple(x / 2 for x in grid),
            tuple(Fraction(1, 2) for _ in grid),
            tuple(Fraction(0) for _ in grid),
            tuple(Fraction(0) for _ in grid),
        ),
        provenance="exact line",
    )
    report = residual(
        OdeResidualSpec(
            "third-order-g",
            {"a_coeffs": (0, 1, 0), "b_coeffs": (0, 0, 2), "n": 1},
        ),
        fn,
    )
    assert report.max_abs == 0
    assert all(isinstance(v, Fraction) and v == 0 for v in report.values)


def test_piv_line_solutions_only_at_special_slopes():
    # h = c x solves the n=1, a=0 equation only for c in {0, -4, 2}:
    # 6c^2 - 4c(x^2 - 2) + 4x(cx) = c(6c - 4c + 4)x... expanded below
    for c, is_solution in [(Fraction(0), True), (Fraction(-2), False)]:
        grid = tuple(Fraction(k, 3) for k in range(1, 5))
        fn = SampledFunction(
            grid=grid,
            values=(
                tuple(c * x for x in grid),
                tuple(c for _ in grid),
                tuple(Fraction(0) for _ in grid),
                tuple(Fraction(0) for _ in grid),
            ),
            provenance="line probe",
        )
        report = residual(OdeResidualSpec("piv-h", {"n": 1, "a": 0}), fn)
        assert (report.max_abs == 0) == is_solution, c


# -- the series route ----------------------------------------------------------------


def test_u_series_scalar_case_is_bernoulli_like():
    report = u_from_generating_series(1, 1, 2, 8)
    expect = [
        Fraction(1),
        Fraction(-1, 2),
        Fraction(1, 12),
        Fraction(0),
        Fraction(-1, 720),
        Fraction(0),
        Fraction(1, 30240),
        Fraction(0),
        Fraction(-1, 1209600),
    ]
    assert list(report.coefficients) == expect
    assert report.residual_zero_through >= 6
    assert all(v == 0 for v in report.residual_coefficients[: report.residual_zero_through + 1])


def test_u_series_leading_coefficients_and_residual():
    for p, q, n in [(1, 1, 2), (1, 2, 3), (2, 2, 4), (2, 3, 5)]:
        report = u_from_generating_series(p, q, n, 8)
        assert report.coefficients[0] == p * (n - p)
        assert report.coefficients[1] == Fraction(-p * (n - q), n)
        assert report.residual_zero_through >= 6
        assert isinstance(report.next_coefficient, Fraction)


def test_u_series_rejects_short_orders():
    with pytest.raises(ValueError):
        u_from_generating_series(1, 1, 2, 2)


# -- first integrals -------------------------------------------------------------------


def test_cosgrove_delta_frozen_and_formula():
    P, Q, R = pv_polynomials(1, 0, 1)
    delta = cosgrove_delta(P, Q, R, Fraction(2), Fraction(-1, 3))
    assert delta == Fraction(-1, 4)
    # agrees with the forced constant -(beta n)^2 / 4 for the series data
    assert delta == Fraction(-(1 * 1) ** 2, 4)
    with pytest.raises(ValueError):
        cosgrove_delta((1, 1), Q, R, Fraction(1), Fraction(1))


def test_first_integral_on_the_closed_form():
    # k(s) = s / (e^s - 1) solves the n=1, a=b=0 equation; its first
    # integral must then be flat at the forced constant
    P, Q, R = pvk_polynomials(1, 0, 0)

    def kfun(s, j):
        f = lambda t: t / mp.expm1(t)
        return f(s) if j == 0 else mp.diff(f, s, j)

    with mp.workdps(PREC + 10):
        grid = [mp.mpf(v) / 2 for v in range(1, 9)]
        fn = sample_function(kfun, grid, 3, provenance="closed form")
        delta = cosgrove_delta(P, Q, R, mp.mpf(1), mp.mpf("-0.5"))
        report = first_integral_consistency(P, Q, R, delta, fn)
    assert report.master_max_abs < mp.mpf("1e-12")
    assert report.integral_max_abs < mp.mpf("1e-10")
    assert report.integral_drift < mp.mpf("1e-10")


def test_first_integral_rejects_non_solutions():
    P, Q, R = pvk_polynomials(1, 0, 0)
    fn = sample_function(
        lambda s, j: mp.mpf(1) if j == 0 else mp.mpf(0),
        [mp.mpf(1), mp.mpf(2)],
        3,
    )
    with pytest.raises(MasterEquationError):
        first_integral_consistency(P, Q, R, mp.mpf(0), fn)


# -- machinery-built candidates ---------------------------------------------------------


def test_shifted_gaussian_h_satisfies_its_equation():
    grid = [mp.mpf(k) / 2 for k in range(-3, 4)]
    fn = sample_matrix_integral_h(1, grid, precision=PREC)
    report = residual(OdeResidualSpec("piv-h", {"n": 1, "a": 0}), fn)
    assert report.max_abs < mp.mpf("1e-10")


def test_unit_interval_k_machinery_matches_closed_form():
    grid = [mp.mpf(1), mp.mpf(2)]
    fn = sample_matrix_integral_k(1, grid, precision=PREC)
    with mp.workdps(PREC):
        for i, s in enumerate(grid):
            assert abs(fn.values[0][i] - s / mp.expm1(s)) < mp.mpf("1e-20")
    report = residual(OdeResidualSpec("pv-k", {"n": 1, "a": 0, "b": 0}), fn)
    assert report.max_abs < mp.mpf("1e-10")


def test_jacobi_candidate_first_integral():
    n, alpha, beta = 1, 0, 1
    grid = [mp.mpf(k) / 4 for k in range(2, 8)]
    fn = pv_candidate_f(n, alpha, beta, 0, 0, 1, grid, precision=PREC)
    report = residual(
        OdeResidualSpec("pv-f", {"n": n, "alpha": alpha, "beta": beta}), fn
    )
    assert report.max_abs < mp.mpf("1e-8")


# -- locus rows and the bilinear identity --------------------------------------------------


def test_virasoro_rows_vanish_on_the_unit_interval():
    w = WeightSpec.jacobi_exp(0, 1, 0, 0)
    for n in (1, 2):
        report = virasoro_locus_check(w, n, 0.0, precision=PREC)
        assert abs(report.row_minus_one) < mp.mpf("1e-8")
        assert abs(report.row_zero) < mp.mpf("1e-8")
        assert isinstance(report.partials, dict) and report.partials


def test_virasoro_rows_off_locus_are_nonzero():
    # the rows are constraints on the deformation at the locus, not
    # identities in the coefficients: a wrong coefficient pair breaks them
    w = WeightSpec.jacobi_exp(0, 1, 0, 0)
    report = virasoro_locus_check(
        w, 1, 0.0, precision=PREC, coeffs=((1, 0, 0), (1, 1, 1))
    )
    assert abs(report.row_minus_one) > mp.mpf("1e-4")


def test_kp_residual_and_step_scaling():
    w = WeightSpec.jacobi_exp(0, 1, 0, 0)
    full = abs(kp_residual_check(w, 1, 0.5, precision=PREC, step=1e-3))
    half = abs(kp_residual_check(w, 1, 0.5, precision=PREC, step=5e-4))
    assert full < mp.mpf("1e-10")
    assert full / half > 4


def test_kp_without_richardson_still_converges():
    w = WeightSpec.jacobi_exp(0, 1, 0, 0)
    full = abs(kp_residual_check(w, 1, 0.5, precision=PREC, step=2e-3, richardson=False))
    half = abs(kp_residual_check(w, 1, 0.5, precision=PREC, step=1e-3, richardson=False))
    assert full / half > 3


def test_kp_rejects_divergent_gaussian_deformation():
    w = WeightSpec.gaussian_power(0, "full")
    with pytest.raises(DivergentDeformationError):
        kp_residual_check(w, 1, 0.0, precision=PREC)
