#!/usr/bin/env python3
"""Push tau log-derivatives through their differential equations.

Four residual walks: the exact rational series in u, the closed-form
unit-interval k, the shifted-Gaussian h with a finite-difference step
halving study, and the KP bilinear identity with its own step halving.
"""

from mpmath import mp

from hooktau.painleve import (
    OdeResidualSpec,
    kp_residual_check,
    residual,
    sample_function,
    sample_matrix_integral_h,
    u_from_generating_series,
    virasoro_locus_check,
)
from hooktau.tau import WeightSpec


def main():
    rep = u_from_generating_series(2, 3, 4, 8)
    print("series solution u for (p, q, n) = (2, 3, 4):")
    print(f"  u_0..u_{rep.order} = {[str(c) for c in rep.coefficients]}")
    print(f"  residual zero through order {rep.residual_zero_through}")

    with mp.workdps(40):
        closed = lambda s: s / mp.expm1(s)
        grid = [mp.mpf(1) / 2 + mp.mpf(i) / 2 for i in range(8)]
        fn = sample_function(
            lambda s, j: mp.diff(closed, s, j) if j else closed(s),
            grid, 3, provenance="closed form s/(e^s - 1)",
        )
        kres = residual(OdeResidualSpec("pv-k", {"n": 1, "a": 0, "b": 0}), fn)
    print(f"\nclosed-form k on [0.5, 4]: max residual {mp.nstr(kres.max_abs, 3)}")

    print("\nshifted-Gaussian h, n=1, step halving at 60 digits:")
    spec = OdeResidualSpec("piv-h", {"n": 1, "a": 0})
    sub = [mp.mpf(i) for i in (-1, 0, 1)]
    for step in ("1e-2", "5e-3", "2.5e-3"):
        fn = sample_matrix_integral_h(1, sub, precision=60, fd_step=mp.mpf(step))
        r = residual(spec, fn)
        print(f"  step {step}: max residual {mp.nstr(r.max_abs, 3)}")

    weight = WeightSpec.laguerre_jacobi(0, 0, "unit")
    print("\nKP bilinear identity and locus rows, unit interval:")
    for n in (1, 2):
        rows = virasoro_locus_check(weight, n, 0.3, precision=40)
        coarse = kp_residual_check(weight, n, 0.5, precision=40, step=mp.mpf("1e-3"))
        fine = kp_residual_check(weight, n, 0.5, precision=40, step=mp.mpf("5e-4"))
        print(f"  n={n}: rows ({mp.nstr(abs(rows.row_minus_one), 3)},"
              f" {mp.nstr(abs(rows.row_zero), 3)})"
              f"  KP {mp.nstr(coarse, 3)} -> {mp.nstr(fine, 3)}"
              f"  (ratio {mp.nstr(coarse / fine, 4)})")


if __name__ == "__main__":
    main()
