#!/usr/bin/env python3
"""Pin the Hankel tau evaluator against integrals a pencil can do.

Three spot checks: the n=1 Gaussian tau is sqrt(pi) e^(x^2/4), the
coordinate mean under a Jacobi-type ensemble has a closed form, and the
full-line Gaussian Vandermonde mass arbitrates between two candidate
constants (quadrature picks the right one).
"""

from mpmath import mp

from hooktau.tau import (
    TauEvaluator,
    WeightSpec,
    gaussian_vandermonde_mass,
    selberg_aomoto_mean,
)


def main():
    mp.dps = 30

    ev = TauEvaluator(WeightSpec.gaussian_power(0, "full"), 1, precision=30)
    print("n=1 Gaussian tau vs sqrt(pi) e^(x^2/4):")
    for x in (0, 1, 2):
        got = ev.tau(x)
        want = mp.sqrt(mp.pi) * mp.exp(mp.mpf(x) ** 2 / 4)
        print(f"  x={x}: tau={mp.nstr(got, 15)}  gap={mp.nstr(abs(got - want), 3)}")

    print("\ncoordinate mean <z_1> on [a, b] = [-1, 3], alpha=1, beta=2:")
    for n in (1, 2, 3):
        rep = selberg_aomoto_mean(n, 1, 2, a=-1, b=3, precision=30)
        print(f"  n={n}: estimate={mp.nstr(rep.estimate, 15)}"
              f"  closed={mp.nstr(rep.closed_form, 15)}"
              f"  gap={mp.nstr(abs(rep.estimate - rep.closed_form), 3)}")

    print("\nfull-line Gaussian Vandermonde mass, three routes:")
    for p in (1, 2, 3):
        rep = gaussian_vandermonde_mass(p, precision=30)
        print(f"  p={p}: hankel={mp.nstr(rep.hankel, 12)}"
              f"  quadrature={rep.quadrature:.12g}"
              f"  matches the '{rep.matching}' reading"
              f" ({rep.reading_product:.12g} vs variant {rep.reading_variant:.12g})")


if __name__ == "__main__":
    main()
