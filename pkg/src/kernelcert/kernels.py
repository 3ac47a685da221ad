"""The kernel zoo: a closed enumeration of positive definite kernel families
with exact spectral metadata.

Four structural classes plus the constant kernel:

* translation invariant on R^d (``gaussian_ti``, ``laplacian_ti``,
  ``b1_spline``, ``sinc``, ``sinc_sq``), described by a spectral density;
* translation invariant on the torus (``poisson_torus``, ``expcos_torus``,
  ``quadpoly_torus``, ``dirichlet``, ``fejer``), described by Fourier
  coefficients;
* radial mixtures of Gaussians (``radial_gaussian``,
  ``inverse_multiquadric``, ``radial_atoms``), described by a mixing
  measure on rates;
* dot-product kernels with positive power series (``taylor_exp``,
  ``taylor_binomial``), described by their coefficients;
* ``constant``.

Keeping the enumeration closed is deliberate: certification rules consult
authoritative support descriptors, which arbitrary callables cannot supply.
Multivariate translation-invariant families are per-axis products, so their
spectral objects factor exactly.

Descriptors are immutable and evaluation is pure.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.special import gammaln, roots_genlaguerre

from . import numerics
from .measures import (
    Space,
    SpaceMismatchError,
    TWO_PI,
    euclidean,
    sinc_sq_spectrum,
)

SQRT_2PI = math.sqrt(2.0 * math.pi)


class KernelConfigError(ValueError):
    pass


class UnsupportedKernelOperation(ValueError):
    pass


@dataclass(frozen=True)
class KernelDescriptor:
    family: str
    space: Space
    params: tuple  # sorted (name, value) pairs

    def param(self, name):
        for key, value in self.params:
            if key == name:
                return value
        raise KeyError(name)

    @property
    def params_dict(self):
        return dict(self.params)

    def __repr__(self):
        inner = ", ".join(f"{k}={v}" for k, v in self.params)
        return f"KernelDescriptor({self.family}({inner}) on {self.space.kind} d={self.space.dim})"


@dataclass(frozen=True)
class SpectralSupport:
    """Support descriptor of a spectral object.

    ``kind`` is ``full_space`` or ``box`` (Euclidean densities, box given by
    its half width per axis), or ``all_integers`` / ``finite_set`` (torus
    coefficients, finite sets given per axis).
    """

    kind: str
    half_width: float | None = None
    frequencies: tuple | None = None

    @property
    def interior_nonempty(self):
        return self.kind in ("full_space", "box")


@dataclass(frozen=True)
class SpectralMeasure:
    """Spectral representation of a translation-invariant or radial kernel.

    For Euclidean families ``density`` is the profile's transform (product
    over axes); the underlying spectral measure has density
    ``(2 pi)^{-d/2} * density`` with respect to Lebesgue measure, exposed per
    axis as ``lambda_axis``.  For torus families ``coeff`` gives the Fourier
    coefficient of an integer frequency vector.  For radial families the
    mixing measure over Gaussian rates is given by atoms or a density on
    [0, inf).
    """

    kind: str
    support: SpectralSupport | None = None
    density: object = None
    lambda_axis: object = None
    coeff: object = None
    coeff_axis: object = None
    mixing_atoms: tuple | None = None
    mixing_density: object = None
    supp_is_only_zero: bool | None = None


@dataclass(frozen=True)
class TaylorCoefficients:
    """Power-series data of a dot-product kernel: coefficient function and
    convergence radius of the underlying scalar series."""

    a: object
    radius: float

    def up_to(self, degree):
        return np.array([self.a(n) for n in range(degree + 1)])


# ---------------------------------------------------------------------------
# family registry
# ---------------------------------------------------------------------------

def _positive(name):
    def check(v):
        v = float(v)
        if not v > 0:
            raise KernelConfigError(f"{name} must be positive, got {v}")
        return v
    return check


def _open_unit(name):
    def check(v):
        v = float(v)
        if not 0.0 < v < 1.0:
            raise KernelConfigError(f"{name} must lie in (0, 1), got {v}")
        return v
    return check


def _half_open_unit(name):
    def check(v):
        v = float(v)
        if not 0.0 < v <= 1.0:
            raise KernelConfigError(f"{name} must lie in (0, 1], got {v}")
        return v
    return check


def _natural(name):
    def check(v):
        iv = int(v)
        if iv != v or iv < 1:
            raise KernelConfigError(f"{name} must be a positive integer, got {v}")
        return iv
    return check


def _nonnegative(name):
    def check(v):
        v = float(v)
        if v < 0:
            raise KernelConfigError(f"{name} must be >= 0, got {v}")
        return v
    return check


def _rate_atoms(name):
    def check(v):
        atoms = []
        for entry in v:
            t, m = float(entry[0]), float(entry[1])
            if t < 0:
                raise KernelConfigError("rates must be >= 0")
            if m <= 0:
                raise KernelConfigError("masses must be positive")
            atoms.append((t, m))
        if not atoms:
            raise KernelConfigError(f"{name} needs at least one atom")
        return tuple(atoms)
    return check


_FAMILIES = {
    # family: (class, space kind, {param: validator})
    "gaussian_ti": ("a1", "euclidean", {"sigma": _positive("sigma")}),
    "laplacian_ti": ("a1", "euclidean", {"sigma": _positive("sigma")}),
    "b1_spline": ("a1", "euclidean", {}),
    "sinc": ("a1", "euclidean", {"sigma": _positive("sigma")}),
    "sinc_sq": ("a1", "euclidean", {}),
    "poisson_torus": ("a2", "torus", {"sigma": _open_unit("sigma")}),
    "expcos_torus": ("a2", "torus", {"alpha": _half_open_unit("alpha")}),
    "quadpoly_torus": ("a2", "torus", {}),
    "dirichlet": ("a2", "torus", {"l": _natural("l")}),
    "fejer": ("a2", "torus", {"l": _natural("l")}),
    "radial_gaussian": ("a3", "euclidean", {"sigma": _positive("sigma")}),
    "inverse_multiquadric": ("a3", "euclidean", {"beta": _positive("beta"), "c": _positive("c")}),
    "radial_atoms": ("a3", "euclidean", {"atoms": _rate_atoms("atoms")}),
    "taylor_exp": ("a4", "euclidean", {}),
    "taylor_binomial": ("a4", "euclidean", {"beta": _positive("beta")}),
    "constant": ("constant", "any", {"c": _nonnegative("c")}),
}

# Profile decay/integrability flags used by the certification rules.
_A1_FLAGS = {
    # family: (profile vanishes at infinity, profile is integrable)
    "gaussian_ti": (True, True),
    "laplacian_ti": (True, True),
    "b1_spline": (True, True),
    "sinc": (True, False),
    "sinc_sq": (True, True),
}


def make_kernel(family, space, **params):
    if family not in _FAMILIES:
        raise KernelConfigError(f"unknown kernel family {family!r}")
    klass, space_kind, spec = _FAMILIES[family]
    if space_kind != "any" and space.kind != space_kind:
        raise KernelConfigError(f"{family} requires a {space_kind} space, got {space.kind}")
    if set(params) != set(spec):
        raise KernelConfigError(
            f"{family} takes parameters {sorted(spec)}, got {sorted(params)}"
        )
    checked = tuple(sorted((name, spec[name](value)) for name, value in params.items()))
    return KernelDescriptor(family, space, checked)


def kernel_class(k: KernelDescriptor):
    return _FAMILIES[k.family][0]


# convenience constructors

def gaussian_ti(sigma=1.0, dim=1):
    return make_kernel("gaussian_ti", euclidean(dim), sigma=sigma)


def laplacian_ti(sigma=1.0, dim=1):
    return make_kernel("laplacian_ti", euclidean(dim), sigma=sigma)


def b1_spline(dim=1):
    return make_kernel("b1_spline", euclidean(dim))


def sinc(sigma=1.0, dim=1):
    return make_kernel("sinc", euclidean(dim), sigma=sigma)


def sinc_sq(dim=1):
    return make_kernel("sinc_sq", euclidean(dim))


def poisson_torus(sigma=0.5, dim=1):
    return make_kernel("poisson_torus", Space("torus", dim), sigma=sigma)


def expcos_torus(alpha=1.0, dim=1):
    return make_kernel("expcos_torus", Space("torus", dim), alpha=alpha)


def quadpoly_torus(dim=1):
    return make_kernel("quadpoly_torus", Space("torus", dim))


def dirichlet(l=1, dim=1):
    return make_kernel("dirichlet", Space("torus", dim), l=l)


def fejer(l=1, dim=1):
    return make_kernel("fejer", Space("torus", dim), l=l)


def radial_gaussian(sigma=1.0, dim=1):
    return make_kernel("radial_gaussian", euclidean(dim), sigma=sigma)


def inverse_multiquadric(beta=1.0, c=1.0, dim=1):
    return make_kernel("inverse_multiquadric", euclidean(dim), beta=beta, c=c)


def radial_atoms(atoms, dim=1):
    return make_kernel("radial_atoms", euclidean(dim), atoms=atoms)


def taylor_exp(dim=1):
    return make_kernel("taylor_exp", euclidean(dim))


def taylor_binomial(beta=1.0, dim=1):
    return make_kernel("taylor_binomial", euclidean(dim), beta=beta)


def constant(c=1.0, space=None):
    return make_kernel("constant", space if space is not None else euclidean(1), c=c)


# ---------------------------------------------------------------------------
# evaluation
# ---------------------------------------------------------------------------

def _axis_profile(k, d):
    """Per-axis profile psi_1 evaluated on an array of lags."""
    f = k.family
    if f == "gaussian_ti":
        s = k.param("sigma")
        return np.exp(-d * d / (2.0 * s * s))
    if f == "laplacian_ti":
        return np.exp(-k.param("sigma") * np.abs(d))
    if f == "b1_spline":
        return np.maximum(0.0, 1.0 - np.abs(d))
    if f == "sinc":
        s = k.param("sigma")
        return s * np.sinc(s * d / np.pi)
    if f == "sinc_sq":
        return np.sinc(d / np.pi) ** 2
    if f == "poisson_torus":
        s = k.param("sigma")
        return (1.0 - s * s) / (s * s - 2.0 * s * np.cos(d) + 1.0)
    if f == "expcos_torus":
        a = k.param("alpha")
        return np.exp(a * np.cos(d)) * np.cos(a * np.sin(d))
    if f == "quadpoly_torus":
        return (np.pi - np.mod(d, TWO_PI)) ** 2
    if f == "dirichlet":
        l = k.param("l")
        out = np.ones_like(np.asarray(d, dtype=float))
        for n in range(1, l + 1):
            out = out + 2.0 * np.cos(n * d)
        return out
    if f == "fejer":
        l = k.param("l")
        out = np.ones_like(np.asarray(d, dtype=float))
        for n in range(1, l + 1):
            out = out + 2.0 * (1.0 - n / (l + 1.0)) * np.cos(n * d)
        return out
    raise UnsupportedKernelOperation(f"{f} has no per-axis profile")


def _check_points(k, X):
    X = np.atleast_2d(np.asarray(X, dtype=float))
    if X.shape[1] != k.space.dim:
        raise SpaceMismatchError(
            f"points of dimension {X.shape[1]} for kernel on dimension {k.space.dim}"
        )
    if kernel_class(k) == "a4":
        r = taylor_coefficients(k).radius
        norms = np.linalg.norm(X, axis=1)
        if np.any(norms >= math.sqrt(r)):
            raise ValueError("point outside the kernel's domain ball")
    return X


def cross_gram(k: KernelDescriptor, X, Y):
    """Matrix of kernel values between two point lists."""
    X = _check_points(k, X)
    Y = _check_points(k, Y)
    klass = kernel_class(k)
    if klass == "constant":
        return np.full((X.shape[0], Y.shape[0]), k.param("c"))
    if klass == "a4":
        t = X @ Y.T
        if k.family == "taylor_exp":
            return np.exp(t)
        return (1.0 - t) ** (-k.param("beta"))
    # profiles are even, so lags enter through |x - y|; taking the absolute
    # value first makes evaluation exactly symmetric in (x, y)
    D = np.abs(X[:, None, :] - Y[None, :, :])
    if k.space.is_torus:
        D = np.mod(D, TWO_PI)
        D = np.minimum(D, TWO_PI - D)
    if klass in ("a1", "a2"):
        out = np.ones(D.shape[:2])
        for axis in range(k.space.dim):
            out *= _axis_profile(k, D[:, :, axis])
        return out
    # radial families
    r2 = np.sum(D * D, axis=2)
    if k.family == "radial_gaussian":
        return np.exp(-k.param("sigma") * r2)
    if k.family == "inverse_multiquadric":
        c = k.param("c")
        return (c * c + r2) ** (-k.param("beta"))
    if k.family == "radial_atoms":
        out = np.zeros_like(r2)
        for t, m in k.param("atoms"):
            out += m * np.exp(-t * r2)
        return out
    raise UnsupportedKernelOperation(k.family)


def eval_kernel(k: KernelDescriptor, x, y):
    return float(cross_gram(k, [np.atleast_1d(x)], [np.atleast_1d(y)])[0, 0])


def gram(k: KernelDescriptor, points):
    """Gram matrix on a point list.  Symmetric by construction; positive
    semidefinite up to round-off (min eigenvalue >= -1e-10 * trace)."""
    G = cross_gram(k, points, points)
    return 0.5 * (G + G.T)


def sup_kxx(k: KernelDescriptor):
    """sup_x k(x, x), or None for dot-product families (unbounded on their
    open domain ball; bound them on the actual point set instead)."""
    klass = kernel_class(k)
    if klass in ("a1", "a2"):
        return float(_axis_profile(k, np.zeros(1))[0]) ** k.space.dim
    if k.family == "radial_gaussian":
        return 1.0
    if k.family == "inverse_multiquadric":
        return k.param("c") ** (-2.0 * k.param("beta"))
    if k.family == "radial_atoms":
        return float(sum(m for _, m in k.param("atoms")))
    if k.family == "constant":
        return k.param("c")
    return None


# ---------------------------------------------------------------------------
# spectral descriptors
# ---------------------------------------------------------------------------

def _axis_coeff_fn(k):
    f = k.family
    if f == "poisson_torus":
        s = k.param("sigma")
        return lambda n: s ** abs(int(n))
    if f == "expcos_torus":
        a = k.param("alpha")
        return lambda n: 1.0 if n == 0 else a ** abs(int(n)) / (2.0 * math.factorial(abs(int(n))))
    if f == "quadpoly_torus":
        return lambda n: math.pi ** 2 / 3.0 if n == 0 else 2.0 / int(n) ** 2
    if f == "dirichlet":
        l = k.param("l")
        return lambda n: 1.0 if abs(int(n)) <= l else 0.0
    if f == "fejer":
        l = k.param("l")
        return lambda n: max(0.0, 1.0 - abs(int(n)) / (l + 1.0)) if abs(int(n)) <= l else 0.0
    raise UnsupportedKernelOperation(f)


def _axis_lambda_density(k):
    """Per-axis density of the spectral measure (integrates to psi_1(0))."""
    f = k.family
    if f == "gaussian_ti":
        s = k.param("sigma")
        return lambda w: (s / SQRT_2PI) * np.exp(-s * s * w * w / 2.0)
    if f == "laplacian_ti":
        s = k.param("sigma")
        return lambda w: (s / np.pi) / (s * s + w * w)
    if f == "b1_spline":
        return lambda w: (0.5 / np.pi) * np.sinc(w / TWO_PI) ** 2
    if f == "sinc":
        s = k.param("sigma")
        return lambda w: np.where(np.abs(w) <= s, 0.5, 0.0)
    if f == "sinc_sq":
        hw, peak = sinc_sq_spectrum()
        return lambda w: (peak / TWO_PI) * np.maximum(0.0, 1.0 - np.abs(w) / hw)
    raise UnsupportedKernelOperation(f)


def _axis_tail_rule(k):
    f = k.family
    if f == "gaussian_ti":
        return numerics.GaussianTail(1.0 / k.param("sigma"))
    if f == "laplacian_ti":
        return numerics.CauchyTail(k.param("sigma"))
    if f == "b1_spline":
        return numerics.TriangleWaveTail()
    if f == "sinc":
        return numerics.BoxTail(k.param("sigma"))
    if f == "sinc_sq":
        hw, _ = sinc_sq_spectrum()
        return numerics.BoxTail(hw)
    raise UnsupportedKernelOperation(f)


def spectral(k: KernelDescriptor) -> SpectralMeasure:
    """Closed-form spectral object of an A1/A2/A3 (or constant) kernel.

    Raises for dot-product families, which carry no translation-invariant
    spectrum.
    """
    klass = kernel_class(k)
    if klass == "a1":
        lam = _axis_lambda_density(k)

        def density(omega):
            omega = np.atleast_1d(np.asarray(omega, dtype=float))
            return float(np.prod(SQRT_2PI * lam(omega)))

        if k.family == "sinc":
            support = SpectralSupport("box", half_width=k.param("sigma"))
        elif k.family == "sinc_sq":
            hw, _ = sinc_sq_spectrum()
            support = SpectralSupport("box", half_width=hw)
        else:
            support = SpectralSupport("full_space")
        return SpectralMeasure(kind="euclidean_density", support=support,
                               density=density, lambda_axis=lam)
    if klass == "a2":
        axis = _axis_coeff_fn(k)

        def coeff(n):
            n = np.atleast_1d(np.asarray(n))
            return float(np.prod([axis(int(v)) for v in n]))

        if k.family in ("dirichlet", "fejer"):
            l = k.param("l")
            support = SpectralSupport("finite_set", frequencies=tuple(range(-l, l + 1)))
        else:
            support = SpectralSupport("all_integers")
        return SpectralMeasure(kind="torus_coefficients", support=support,
                               coeff=coeff, coeff_axis=axis)
    if klass == "a3":
        if k.family == "radial_gaussian":
            atoms = ((k.param("sigma"), 1.0),)
            return SpectralMeasure(kind="radial_mixing", mixing_atoms=atoms,
                                   supp_is_only_zero=False)
        if k.family == "radial_atoms":
            atoms = tuple(k.param("atoms"))
            only_zero = all(t == 0.0 for t, _ in atoms)
            return SpectralMeasure(kind="radial_mixing", mixing_atoms=atoms,
                                   supp_is_only_zero=only_zero)
        beta, c = k.param("beta"), k.param("c")

        def mixing_density(t):
            t = np.asarray(t, dtype=float)
            return np.where(t > 0,
                            np.exp((beta - 1.0) * np.log(np.maximum(t, 1e-300))
                                   - c * c * t - gammaln(beta)),
                            0.0)

        return SpectralMeasure(kind="radial_mixing", mixing_density=mixing_density,
                               supp_is_only_zero=False)
    if klass == "constant":
        return SpectralMeasure(kind="radial_mixing",
                               mixing_atoms=((0.0, k.param("c")),),
                               supp_is_only_zero=True)
    raise UnsupportedKernelOperation(
        f"{k.family} has no translation-invariant spectrum"
    )


def mixing_components(k: KernelDescriptor, n_nodes=24):
    """Gaussian-rate components (t_i, m_i) of a radial kernel.

    Exact for atomic mixings; the inverse multiquadric's Gamma-type mixing
    density is discretized with a generalized Gauss-Laguerre rule of
    ``n_nodes`` points (exactness flag returned alongside).
    """
    if k.family in ("radial_gaussian", "radial_atoms", "constant"):
        return spectral(k).mixing_atoms, True
    if k.family == "inverse_multiquadric":
        beta, c = k.param("beta"), k.param("c")
        u, w = roots_genlaguerre(n_nodes, beta - 1.0)
        scale = math.exp(-gammaln(beta)) / c ** (2.0 * beta)
        return tuple((float(ui) / (c * c), float(wi) * scale) for ui, wi in zip(u, w)), False
    raise UnsupportedKernelOperation(f"{k.family} is not a radial mixture")


# per-axis transforms with certified error, consumed by the energy code

def axis_spectral_transform(k, deltas, target=1e-11):
    """c(d) = per-axis inverse transform of the spectral object at lags d.

    For A1 kernels this is the cosine transform of the axis spectral
    density; for A2 kernels the cosine series of the axis coefficients.
    Returns ``(values, error_bounds)``.
    """
    deltas = np.asarray(deltas, dtype=float)
    klass = kernel_class(k)
    if klass == "a1":
        return numerics.cosine_transform_even(
            _axis_lambda_density(k), deltas, _axis_tail_rule(k), target=target)
    if klass == "a2":
        return _axis_series_transform(k, deltas, target)
    raise UnsupportedKernelOperation(f"no axis transform for {k.family}")


def gaussian_rate_axis_transform(t, deltas, target=1e-11):
    """Axis cosine transform for one Gaussian component exp(-t |x-y|^2)."""
    deltas = np.asarray(deltas, dtype=float)
    if t == 0.0:
        return np.ones_like(deltas), np.zeros_like(deltas)
    s = math.sqrt(2.0 * t)

    def density(w):
        # N(0, 2t) density
        return np.exp(-w * w / (4.0 * t)) / math.sqrt(4.0 * math.pi * t)

    return numerics.cosine_transform_even(
        density, deltas, numerics.GaussianTail(s), target=target)


def _axis_series_transform(k, deltas, target):
    deltas = np.mod(np.asarray(deltas, dtype=float), TWO_PI)
    f = k.family
    if f in ("dirichlet", "fejer"):
        vals = _axis_profile(k, deltas)
        errs = np.full_like(vals, 4e-15 * (2 * k.param("l") + 1))
        return vals, errs
    if f == "poisson_torus":
        s = k.param("sigma")
        N = max(8, int(math.ceil(math.log(1e-18) / math.log(s))))
        n = np.arange(1, N + 1)
        vals = 1.0 + 2.0 * (np.cos(np.outer(deltas, n)) @ (s ** n))
        z = s * np.exp(1j * deltas)
        vals += 2.0 * np.real(z ** (N + 1) / (1.0 - z))
        errs = np.full_like(vals, 1e-14 * (1.0 + s) / (1.0 - s))
        return vals, errs
    if f == "expcos_torus":
        a = k.param("alpha")
        N = 40
        n = np.arange(1, N + 1)
        coeffs = np.exp(n * math.log(a) - gammaln(n + 1.0))
        vals = 1.0 + np.cos(np.outer(deltas, n)) @ coeffs
        tail = a ** (N + 1) / math.factorial(N + 1) / (1.0 - a / (N + 2))
        errs = np.full_like(vals, tail + 1e-14 * math.e)
        return vals, errs
    if f == "quadpoly_torus":
        return _quadpoly_series(deltas, target)
    raise UnsupportedKernelOperation(f)


def _quadpoly_series(deltas, target, n_terms=40000):
    """Cosine series pi^2/3 + 4 sum cos(n d)/n^2 with a corrected tail.

    Lags fold into [0, pi] (the series is even and periodic), the truncated
    tail is replaced by its exact midpoint integral through the sine
    integral, and the remainder carries the smaller of the Euler-Maclaurin
    bound and an Abel summation bound.  At lag zero the tail is exact
    through the trigamma function.
    """
    from scipy.special import polygamma, sici

    deltas = np.mod(np.asarray(deltas, dtype=float), TWO_PI)
    deltas = np.minimum(deltas, TWO_PI - deltas)
    vals = np.full_like(deltas, math.pi ** 2 / 3.0)
    errs = np.full_like(deltas, 1e-13 * math.pi ** 2)
    N = int(n_terms)
    A = N + 0.5
    n = np.arange(1, N + 1)
    zero = np.abs(np.sin(deltas / 2.0)) < 1e-14
    if zero.any():
        partial_zero = float(np.sum(1.0 / n ** 2))
        vals[zero] += 4.0 * (partial_zero + float(polygamma(1, N + 1)))
    if (~zero).any():
        ds = deltas[~zero]
        acc = np.zeros_like(ds)
        inv_n2 = 1.0 / n ** 2
        for lo in range(0, N, 8192):
            acc += np.cos(np.outer(ds, n[lo:lo + 8192])) @ inv_n2[lo:lo + 8192]
        si, _ = sici(A * ds)
        corr = np.cos(A * ds) / A - ds * (np.pi / 2.0 - si)
        em_bound = (ds * ds / A + 2.0 * ds / A ** 2 + 2.0 / A ** 3) / 24.0
        abel_bound = (1.0 / ((N + 1) ** 2 * np.abs(np.sin(ds / 2.0)))
                      + np.minimum(1.0 / A, 2.0 / (ds * A ** 2)))
        vals[~zero] += 4.0 * (acc + corr)
        errs[~zero] += 4.0 * np.minimum(em_bound, abel_bound)
    return vals, errs


# ---------------------------------------------------------------------------
# dot-product (Taylor) kernels
# ---------------------------------------------------------------------------

def taylor_coefficients(k: KernelDescriptor) -> TaylorCoefficients:
    if k.family == "taylor_exp":
        return TaylorCoefficients(a=lambda n: 1.0 / math.factorial(n), radius=math.inf)
    if k.family == "taylor_binomial":
        beta = k.param("beta")

        def a(n):
            return math.exp(gammaln(n + beta) - gammaln(beta) - gammaln(n + 1.0))

        return TaylorCoefficients(a=a, radius=1.0)
    raise UnsupportedKernelOperation(f"{k.family} is not a dot-product family")


def _multi_indices(total, dim):
    if dim == 1:
        yield (total,)
        return
    for head in range(total + 1):
        for rest in _multi_indices(total - head, dim - 1):
            yield (head,) + rest


def taylor_features(k: KernelDescriptor, x, degree):
    """Explicit feature map of a dot-product kernel truncated at ``degree``.

    Returns a list of (multi-index, value) pairs with value
    sqrt(a_n * c_alpha) * x^alpha; inner products of two such feature lists
    reproduce the truncated kernel series exactly.
    """
    if degree < 0:
        raise ValueError("degree must be >= 0")
    x = _check_points(k, [np.atleast_1d(x)])[0]
    coeffs = taylor_coefficients(k)
    feats = []
    for n in range(degree + 1):
        a_n = coeffs.a(n)
        fact_n = math.factorial(n)
        for alpha in _multi_indices(n, k.space.dim):
            c_alpha = fact_n
            for a_j in alpha:
                c_alpha //= math.factorial(a_j)
            mono = 1.0
            for xj, aj in zip(x, alpha):
                mono *= xj ** aj
            feats.append((alpha, math.sqrt(a_n * c_alpha) * mono))
    return feats


# ---------------------------------------------------------------------------
# JSON documents
# ---------------------------------------------------------------------------

def kernel_to_json(k: KernelDescriptor):
    params = {}
    for name, value in k.params:
        params[name] = [list(a) for a in value] if name == "atoms" else value
    return {
        "family": k.family,
        "space": {"kind": k.space.kind, "dim": k.space.dim},
        "params": params,
    }


def kernel_from_json(doc):
    if not isinstance(doc, dict):
        raise KernelConfigError("kernel document must be an object")
    unknown = set(doc) - {"family", "space", "params"}
    if unknown:
        raise KernelConfigError(f"unknown fields in kernel document: {sorted(unknown)}")
    for key in ("family", "space"):
        if key not in doc:
            raise KernelConfigError(f"kernel document is missing {key!r}")
    space_doc = doc["space"]
    unknown = set(space_doc) - {"kind", "dim"}
    if unknown:
        raise KernelConfigError(f"unknown fields in space document: {sorted(unknown)}")
    space = Space(str(space_doc["kind"]), int(space_doc["dim"]))
    return make_kernel(doc["family"], space, **doc.get("params", {}))
