"""Fixed-order Gauss tensor rules over squared Vandermonde integrands.

These are deliberately plain double-precision cross-checks for the
arbitrary-precision Hankel route.  With the weight absorbed by the rule,
every integrand here is a polynomial (times an entire exponential factor
at worst), so moderate node counts are exact to rounding.  Dimension is
capped low: the point is independence, not scale.
"""

from __future__ import annotations

import math
from functools import reduce

import numpy as np
from numpy.polynomial.hermite import hermgauss
from numpy.polynomial.legendre import leggauss
from scipy.special import roots_jacobi

MAX_DIMENSION = 4


def _check_dim(n):
    if not 1 <= n <= MAX_DIMENSION:
        raise ValueError(f"direct tensor quadrature supports 1..{MAX_DIMENSION} dimensions, got {n}")


def _vandermonde_sq(coords):
    out = 1.0
    for i in range(len(coords)):
        for j in range(i + 1, len(coords)):
            out = out * (coords[i] - coords[j]) ** 2
    return out


def _tensor_sum(nodes, weights, n, extra):
    """Sum of weights * Vandermonde^2 * extra over the tensor grid."""
    coords = np.meshgrid(*([nodes] * n), indexing="ij")
    wgrid = reduce(np.multiply.outer, [weights] * n)
    vals = _vandermonde_sq(coords)
    if extra is not None:
        vals = vals * extra(coords)
    return float(np.sum(wgrid * vals))


def jacobi_rule(npts, alpha, beta, a, b):
    """Nodes and weights for (z-a)^alpha (b-z)^beta on [a, b]."""
    if not b > a:
        raise ValueError(f"need b > a, got a={a}, b={b}")
    x, w = roots_jacobi(npts, beta, alpha)
    half = (b - a) / 2.0
    nodes = a + half * (x + 1.0)
    weights = w * half ** (alpha + beta + 1)
    return nodes, weights


def vandermonde_jacobi_integral(n, alpha, beta, a, b, gamma=0.0, x=0.0,
                                coordinate_mean=False, npts=48):
    """Integral of Vandermonde^2 * prod (z-a)^alpha (b-z)^beta e^((gamma+x) z).

    With ``coordinate_mean`` the integrand carries an extra factor
    (z_1 + ... + z_n) / n.
    """
    _check_dim(n)
    nodes, weights = jacobi_rule(npts, alpha, beta, a, b)
    rate = gamma + x

    def extra(coords):
        total = sum(coords)
        out = np.exp(rate * total) if rate else 1.0
        if coordinate_mean:
            out = out * total / n
        return out

    return _tensor_sum(nodes, weights, n, extra if (rate or coordinate_mean) else None)


def vandermonde_hermite_integral(n, x=0.0, coordinate_mean=False, npts=40):
    """Integral of Vandermonde^2 * prod e^(-z^2 + x z) over the full line."""
    _check_dim(n)
    nodes, weights = hermgauss(npts)

    def extra(coords):
        total = sum(coords)
        out = np.exp(x * total) if x else 1.0
        if coordinate_mean:
            out = out * total / n
        return out

    return _tensor_sum(nodes, weights, n, extra if (x or coordinate_mean) else None)


def vandermonde_shifted_integral(n, power, s, x=0.0, npts=160, span=12.0):
    """Integral of Vandermonde^2 * prod (z-s)^power e^(-z^2 + x z) on [s, inf)^n.

    The Gaussian factor confines the mass, so the half-infinite box is
    truncated to [s, cut] with cut past the peak by ``span``.
    """
    _check_dim(n)
    if power < 0:
        raise ValueError(f"power must be nonnegative, got {power}")
    cut = max(s, x / 2.0, 0.0) + span
    ref, wref = leggauss(npts)
    half = (cut - s) / 2.0
    nodes = s + half * (ref + 1.0)
    weights = wref * half

    def extra(coords):
        out = 1.0
        for z in coords:
            out = out * (z - s) ** power * np.exp(-z * z + x * z)
        return out

    return _tensor_sum(nodes, weights, n, extra)


def vandermonde_halfline_integral(n, power, x=0.0, npts=160, span=12.0):
    """Same as the shifted integral with the box anchored at zero."""
    return vandermonde_shifted_integral(n, power, 0.0, x=x, npts=npts, span=span)


def vandermonde_unit_integral(n, alpha, beta, x=0.0, coordinate_mean=False, npts=48):
    """Integral of Vandermonde^2 * prod z^alpha (1-z)^beta e^(x z) on [0, 1]^n."""
    return vandermonde_jacobi_integral(
        n, alpha, beta, 0.0, 1.0, gamma=0.0, x=x,
        coordinate_mean=coordinate_mean, npts=npts,
    )


def gaussian_box_mass(n):
    """Closed form for the full-line Gaussian Vandermonde mass.

    Equals (2 pi)^(n/2) 2^(-n^2/2) prod_{j=1..n} j!.
    """
    if n < 1:
        raise ValueError(f"dimension must be positive, got {n}")
    out = (2.0 * math.pi) ** (n / 2.0) * 2.0 ** (-(n * n) / 2.0)
    for j in range(1, n + 1):
        out *= math.factorial(j)
    return out


def gaussian_density_normalized(n, power, s, npts=200):
    """Integral of prod (z-s)^power against the normalized Gaussian density.

    The density is Vandermonde^2 prod e^(-z^2) divided by the closed-form
    mass; integration runs over the box [s, inf)^n.
    """
    raw = vandermonde_shifted_integral(n, power, s, npts=npts)
    return raw / gaussian_box_mass(n)
