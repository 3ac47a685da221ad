"""Independent brute-force oracles.

Everything here is deliberately primitive: plain loops, cmath/math calls,
library quadrature and power iteration.  None of it imports the package
under test, so these values can be frozen as fixtures and the package
checked against them.
"""

import cmath
import math

import numpy as np
from scipy import integrate


def complex_sum_ft(atoms, omega):
    """Fourier transform of a discrete measure by direct complex summation."""
    total = 0.0 + 0.0j
    for point, weight in atoms:
        phase = sum(w * x for w, x in zip(omega, point))
        total += weight * cmath.exp(-1j * phase)
    return total


def torus_coeff(atoms, n):
    d = len(n)
    return complex_sum_ft(atoms, n) / (2.0 * math.pi) ** d


def double_sum_energy(atoms, kernel):
    """Energy by a literal double loop over atom pairs."""
    total = 0.0
    for x, wx in atoms:
        for y, wy in atoms:
            total += wx * wy * kernel(x, y)
    return total


def double_sum_inner(atoms_a, atoms_b, kernel):
    total = 0.0
    for x, wx in atoms_a:
        for y, wy in atoms_b:
            total += wx * wy * kernel(x, y)
    return total


def weighted_eval(atoms, kernel, x):
    return sum(w * kernel(x, y) for y, w in atoms)


# closed-form kernel profiles, typed from their definitions

def gauss_kernel(sigma):
    return lambda x, y: math.exp(-sum((a - b) ** 2 for a, b in zip(x, y)) / (2 * sigma ** 2))


def poisson_profile(sigma, t):
    return (1 - sigma ** 2) / (sigma ** 2 - 2 * sigma * math.cos(t) + 1)


def poisson_kernel(sigma):
    return lambda x, y: math.prod(
        poisson_profile(sigma, (a - b) % (2 * math.pi)) for a, b in zip(x, y))


def dirichlet_profile(l, t):
    return 1.0 + 2.0 * sum(math.cos(n * t) for n in range(1, l + 1))


def dirichlet_kernel(l):
    return lambda x, y: math.prod(
        dirichlet_profile(l, (a - b) % (2 * math.pi)) for a, b in zip(x, y))


def fejer_profile(l, t):
    return 1.0 + 2.0 * sum((1 - n / (l + 1)) * math.cos(n * t) for n in range(1, l + 1))


def fejer_kernel(l):
    return lambda x, y: math.prod(
        fejer_profile(l, (a - b) % (2 * math.pi)) for a, b in zip(x, y))


def poisson_energy_series(sigma):
    """Geometric series value of the two-antipodal-atoms energy."""
    return 8.0 * sigma / (1.0 - sigma ** 2)


# sinc-squared spectrum by oscillatory quadrature (no sine-integral identity,
# so this stays independent of the package's derivation)

def _cos_over_x2_tail(eta):
    """int_1^inf cos(eta x)/x^2 dx via QUADPACK's Fourier integrator."""
    if eta == 0.0:
        val, _ = integrate.quad(lambda x: 1.0 / x ** 2, 1.0, np.inf,
                                epsabs=1e-13, epsrel=1e-13)
        return val
    val, _ = integrate.quad(lambda x: 1.0 / x ** 2, 1.0, np.inf,
                            weight="cos", wvar=eta, epsabs=1e-13,
                            limlst=200, limit=200)
    return val


def sincsq_transform(eta):
    """int_R sin^2 x / x^2 cos(eta x) dx, split into a smooth core and
    oscillatory tails handled by QUADPACK."""
    core, _ = integrate.quad(
        lambda x: (np.sinc(x / np.pi) ** 2) * math.cos(eta * x), 0.0, 1.0,
        epsabs=1e-14, epsrel=1e-13)
    val = (core + 0.5 * _cos_over_x2_tail(eta)
           - 0.25 * (_cos_over_x2_tail(2.0 + eta) + _cos_over_x2_tail(abs(2.0 - eta))))
    return 2.0 * val


def sincsq_half_width(tol=1e-10):
    lo, hi = 0.5, 8.0
    for _ in range(48):
        mid = 0.5 * (lo + hi)
        if abs(sincsq_transform(mid)) > tol:
            lo = mid
        else:
            hi = mid
    x1, x2 = lo - 0.2, lo - 0.1
    f1, f2 = sincsq_transform(x1), sincsq_transform(x2)
    return x1 - f1 * (x2 - x1) / (f2 - f1)


def modsincsq_ft(alpha, omega0, omega):
    """Transform of 2 alpha cos(omega0 x) sin^2 x / x^2 at omega, by
    quadrature only."""
    return alpha * (sincsq_transform(abs(omega - omega0))
                    + sincsq_transform(abs(omega + omega0)))


def power_iteration_min_eig(G, iters=400, seed=3):
    """Minimum eigenvalue by inverse power iteration (independent of eigh).

    A tiny ridge keeps the solve defined when G is numerically singular; the
    returned value is the Rayleigh quotient of the converged direction.
    """
    G = np.asarray(G, dtype=float)
    n = G.shape[0]
    ridge = 1e-14 * float(np.trace(G)) / n
    B = G + ridge * np.eye(n)
    rng = np.random.default_rng(seed)
    v = rng.normal(size=n)
    v /= np.linalg.norm(v)
    for _ in range(iters):
        w = np.linalg.solve(B, v)
        nw = np.linalg.norm(w)
        if not np.isfinite(nw) or nw == 0:
            break
        v = w / nw
    return float(v @ G @ v)


def bl_two_diracs(t):
    """Bounded-Lipschitz distance of two unit point masses at distance t:
    the optimum of the one-dimensional program by hand."""
    return 2.0 * t / (t + 2.0)


def gaussian_mmd_two_diracs(t):
    return math.sqrt(2.0 - 2.0 * math.exp(-t * t / 2.0))


def taylor_exp_truncated(t, degree):
    return sum(t ** n / math.factorial(n) for n in range(degree + 1))


def taylor_binom_truncated(t, beta, degree):
    a, total = 1.0, 0.0
    for n in range(degree + 1):
        total += a * t ** n
        a *= (n + beta) / (n + 1)
    return total


def taylor_exp_feature_energy(atoms, degree):
    """Feature-space energy of a 1-d signed measure under the exponential
    dot-product kernel, truncated at ``degree``."""
    total = 0.0
    for n in range(degree + 1):
        s = sum(w * x[0] ** n for x, w in atoms)
        total += s * s / math.factorial(n)
    return total


def erf_gauss_integral(a):
    """int_{-a}^{a} exp(-x^2/2) dx via the error function."""
    return math.sqrt(2.0 * math.pi) * math.erf(a / math.sqrt(2.0))
