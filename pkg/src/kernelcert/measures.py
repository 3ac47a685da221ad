"""Finite signed measures: discrete atom lists plus two closed-form density
families, with their Fourier data.

Discrete measures live on Euclidean space R^d or the torus [0, 2pi)^d and are
immutable after construction, so values can be shared freely across threads.
The two density families are the witnesses that discrete atoms cannot
replace: a pure cosine density on the circle and a modulated sinc-squared
density on the line whose transform occupies two compact bands.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from .numerics import integrate_1d, QuadratureConfig

TWO_PI = 2.0 * math.pi

# Points closer than this in max-norm are the same atom.
ATOM_MERGE_TOL = 1e-12
PROBABILITY_TOL = 1e-12


class SpaceMismatchError(ValueError):
    pass


class InvalidMeasureError(ValueError):
    pass


@dataclass(frozen=True)
class Space:
    """Ambient space: ``kind`` is ``"euclidean"`` or ``"torus"``, ``dim >= 1``."""

    kind: str
    dim: int

    def __post_init__(self):
        if self.kind not in ("euclidean", "torus"):
            raise ValueError(f"unknown space kind {self.kind!r}")
        if not isinstance(self.dim, int) or self.dim < 1:
            raise ValueError("dim must be a positive integer")

    @property
    def is_torus(self):
        return self.kind == "torus"


def euclidean(dim=1):
    return Space("euclidean", dim)


def torus(dim=1):
    return Space("torus", dim)


@dataclass(frozen=True, eq=False)
class DiscreteSignedMeasure:
    """A finite list of weighted atoms; weights are nonzero, points distinct.

    The zero measure is the empty atom list.  Use :func:`construct` rather
    than the raw constructor so canonicalization and merging run.
    """

    space: Space
    points: np.ndarray  # (n, d)
    weights: np.ndarray  # (n,)

    @property
    def n_atoms(self):
        return self.points.shape[0]

    @property
    def is_zero(self):
        return self.n_atoms == 0

    @property
    def total_variation(self):
        return float(np.sum(np.abs(self.weights)))

    @property
    def total_mass(self):
        return float(np.sum(self.weights))

    @property
    def is_probability(self):
        return (
            self.n_atoms > 0
            and bool(np.all(self.weights > 0))
            and abs(self.total_mass - 1.0) <= PROBABILITY_TOL
        )

    def atoms(self):
        """List of (point, weight) pairs."""
        return [(self.points[i].copy(), float(self.weights[i])) for i in range(self.n_atoms)]

    def scaled(self, c):
        return construct(self.space, [(p, c * w) for p, w in self.atoms()])

    def __add__(self, other):
        if other.space != self.space:
            raise SpaceMismatchError("cannot add measures on different spaces")
        return construct(self.space, self.atoms() + other.atoms())

    def __sub__(self, other):
        return self + other.scaled(-1.0)

    def __repr__(self):
        return f"DiscreteSignedMeasure({self.space.kind} d={self.space.dim}, {self.n_atoms} atoms)"


def construct(space: Space, raw_atoms) -> DiscreteSignedMeasure:
    """Build a measure from (point, weight) pairs.

    Torus coordinates are reduced mod 2pi to [0, 2pi); points within
    ``ATOM_MERGE_TOL`` in max-norm merge by weight addition and exact-zero
    weights are dropped, so cancellation yields the zero measure.
    """
    pts = []
    wts = []
    for point, weight in raw_atoms:
        p = np.atleast_1d(np.asarray(point, dtype=float))
        if p.ndim != 1 or p.size != space.dim:
            raise InvalidMeasureError(
                f"point of length {p.size} in space of dimension {space.dim}"
            )
        w = float(weight)
        if not np.isfinite(w):
            raise InvalidMeasureError("weights must be finite")
        if not np.all(np.isfinite(p)):
            raise InvalidMeasureError("points must be finite")
        if space.is_torus:
            p = np.mod(p, TWO_PI)
        merged = False
        for i, q in enumerate(pts):
            if np.max(np.abs(p - q)) < ATOM_MERGE_TOL:
                wts[i] += w
                merged = True
                break
        if not merged:
            pts.append(p)
            wts.append(w)

    keep = [i for i, w in enumerate(wts) if w != 0.0]
    if keep:
        points = np.array([pts[i] for i in keep], dtype=float)
        weights = np.array([wts[i] for i in keep], dtype=float)
        order = np.lexsort(points.T[::-1])
        points = points[order]
        weights = weights[order]
    else:
        points = np.zeros((0, space.dim))
        weights = np.zeros((0,))
    points.setflags(write=False)
    weights.setflags(write=False)
    return DiscreteSignedMeasure(space, points, weights)


def dirac(space: Space, point, weight=1.0):
    return construct(space, [(point, weight)])


def jordan_decompose(mu: DiscreteSignedMeasure):
    """Split into positive and negative parts: ``mu = plus - minus``."""
    plus = [(p, w) for p, w in mu.atoms() if w > 0]
    minus = [(p, -w) for p, w in mu.atoms() if w < 0]
    return construct(mu.space, plus), construct(mu.space, minus)


def normalize_to_pq(mu: DiscreteSignedMeasure):
    """Normalize a nonzero, zero-mass measure into probability measures P, Q
    with ``P - Q = mu / alpha`` where alpha is the positive-part mass."""
    if mu.is_zero:
        raise InvalidMeasureError("zero measure cannot be normalized")
    if abs(mu.total_mass) > PROBABILITY_TOL:
        raise InvalidMeasureError(
            f"total mass {mu.total_mass:g} is not zero within {PROBABILITY_TOL:g}"
        )
    plus, minus = jordan_decompose(mu)
    alpha = plus.total_mass
    if alpha <= 0:
        raise InvalidMeasureError("measure has no positive part")
    return plus.scaled(1.0 / alpha), minus.scaled(1.0 / alpha)


def fourier_transform(mu: DiscreteSignedMeasure, omega):
    """Transform of a Euclidean discrete measure: sum_j w_j exp(-i w.x_j)."""
    if mu.space.is_torus:
        raise SpaceMismatchError("fourier_transform is for Euclidean measures")
    omega = np.atleast_1d(np.asarray(omega, dtype=float))
    if omega.size != mu.space.dim:
        raise InvalidMeasureError("frequency dimension mismatch")
    if mu.is_zero:
        return 0.0 + 0.0j
    return complex(np.sum(mu.weights * np.exp(-1j * (mu.points @ omega))))


def torus_coefficient(mu, n):
    """Fourier coefficient on the torus.

    For a discrete measure this is ``(2pi)^-d sum_j w_j exp(-i n.x_j)``;
    for a :class:`TorusCosine` density the exact value ``alpha [|n| = n0]``.
    """
    n = np.atleast_1d(np.asarray(n))
    if isinstance(mu, TorusCosine):
        if n.size != 1:
            raise InvalidMeasureError("TorusCosine lives on the circle")
        return complex(mu.alpha if abs(int(n[0])) == mu.n0 else 0.0)
    if not isinstance(mu, DiscreteSignedMeasure) or not mu.space.is_torus:
        raise SpaceMismatchError("torus_coefficient needs a torus measure")
    if n.size != mu.space.dim:
        raise InvalidMeasureError("frequency dimension mismatch")
    if mu.is_zero:
        return 0.0 + 0.0j
    phase = mu.points @ n.astype(float)
    return complex(np.sum(mu.weights * np.exp(-1j * phase)) / TWO_PI ** mu.space.dim)


# ---------------------------------------------------------------------------
# Density families
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class TorusCosine:
    """Density ``x -> 2 alpha cos(n0 x)`` on [0, 2pi); coefficients are
    exactly ``alpha`` at ``+-n0`` and zero elsewhere."""

    alpha: float
    n0: int
    space: Space = field(default_factory=lambda: torus(1))

    def __post_init__(self):
        if self.alpha == 0:
            raise InvalidMeasureError("alpha must be nonzero")
        if not isinstance(self.n0, int) or self.n0 < 1:
            raise InvalidMeasureError("n0 must be a positive integer")
        if self.space != torus(1):
            raise SpaceMismatchError("TorusCosine lives on the 1-d torus")

    def density(self, x):
        return 2.0 * self.alpha * np.cos(self.n0 * np.asarray(x, dtype=float))


@dataclass(frozen=True)
class ModulatedSincSq:
    """Density ``x -> 2 alpha cos(w0 x) sin^2(x)/x^2`` on the line.

    Its transform is supported on the two bands ``+-[w0 - w, w0 + w]`` where
    ``w`` is the derived half-width of the sinc-squared spectrum; see
    :func:`sinc_sq_spectrum`.
    """

    alpha: float
    omega0: float
    space: Space = field(default_factory=lambda: euclidean(1))

    def __post_init__(self):
        if self.alpha == 0:
            raise InvalidMeasureError("alpha must be nonzero")
        if not self.omega0 > 0:
            raise InvalidMeasureError("omega0 must be positive")
        if self.space != euclidean(1):
            raise SpaceMismatchError("ModulatedSincSq lives on the line")

    def density(self, x):
        x = np.asarray(x, dtype=float)
        return 2.0 * self.alpha * np.cos(self.omega0 * x) * np.sinc(x / np.pi) ** 2

    def band_edges(self):
        w, _ = sinc_sq_spectrum()
        return max(0.0, self.omega0 - w), self.omega0 + w

    def l1_norm(self):
        """Numerical total variation surrogate: integral of |density|.

        The kinks of |cos| keep adaptive quadrature from certifying tight
        tolerances, which is fine here; the norm only needs to be positive
        and roughly right.
        """
        import warnings

        from .numerics import QuadratureWarning

        cfg = QuadratureConfig(abs_tol=1e-6, rel_tol=1e-6, max_subdivisions=3000)
        with warnings.catch_warnings():
            warnings.simplefilter("ignore", QuadratureWarning)
            core, _ = integrate_1d(lambda x: abs(float(self.density(x))), 0.0, 60.0, cfg)
        # |density| <= 2 |alpha| / x^2 beyond the window
        return 2.0 * core + 2.0 * abs(self.alpha) / 60.0


def _sinc_sq_plain_transform(omega):
    """int_R sin^2(x)/x^2 cos(omega x) dx, by quadrature plus exact
    sine-integral tails.  Pure oracle: assumes nothing about the support."""
    from scipy.special import sici

    def tail(eta):
        # int_1^inf cos(eta x) / x^2 dx
        eta = abs(float(eta))
        if eta == 0.0:
            return 1.0
        si, _ = sici(eta)
        return math.cos(eta) - eta * (math.pi / 2.0 - si)

    core, _ = integrate_1d(
        lambda x: float(np.sinc(x / np.pi) ** 2 * np.cos(omega * x)), 0.0, 1.0,
        QuadratureConfig(abs_tol=1e-14, rel_tol=1e-13, max_subdivisions=200),
    )
    val = core + 0.5 * tail(omega) - 0.25 * (tail(2.0 + omega) + tail(abs(2.0 - omega)))
    return 2.0 * val


@lru_cache(maxsize=1)
def sinc_sq_spectrum():
    """Derived spectral data of ``sin^2(x)/x^2``: ``(half_width, peak)``.

    The half-width of the transform's support and the peak value at zero
    frequency are located numerically (bisection on the plain transform,
    then a secant refinement on the linear edge).  Nothing downstream
    hardcodes these numbers.
    """
    peak = _sinc_sq_plain_transform(0.0)
    lo, hi = 0.5, 8.0
    if _sinc_sq_plain_transform(lo) <= 1e-10 or abs(_sinc_sq_plain_transform(hi)) > 1e-10:
        raise RuntimeError("unexpected sinc-squared spectrum shape")
    for _ in range(40):
        mid = 0.5 * (lo + hi)
        if abs(_sinc_sq_plain_transform(mid)) > 1e-10:
            lo = mid
        else:
            hi = mid
    # the spectrum falls linearly into its edge: extrapolate to the zero
    x1, x2 = lo - 0.2, lo - 0.1
    f1, f2 = _sinc_sq_plain_transform(x1), _sinc_sq_plain_transform(x2)
    half_width = x1 - f1 * (x2 - x1) / (f2 - f1)
    return float(half_width), float(peak)


def sinc_sq_plain_transform_shape(omega):
    """Closed-form transform of sin^2/x^2 built from the derived constants:
    a triangle of height ``peak`` on ``[-w, w]``."""
    w, peak = sinc_sq_spectrum()
    omega = np.asarray(omega, dtype=float)
    return peak * np.maximum(0.0, 1.0 - np.abs(omega) / w)


def density_ft(mu: ModulatedSincSq, omega):
    """Transform of the modulated density: two shifted sinc-squared bands."""
    if not isinstance(mu, ModulatedSincSq):
        raise InvalidMeasureError("density_ft expects a ModulatedSincSq measure")
    omega = np.asarray(omega, dtype=float)
    val = mu.alpha * (
        sinc_sq_plain_transform_shape(omega - mu.omega0)
        + sinc_sq_plain_transform_shape(omega + mu.omega0)
    )
    return val if val.ndim else float(val)


# ---------------------------------------------------------------------------
# JSON documents
# ---------------------------------------------------------------------------

def _space_to_json(space: Space):
    return {"kind": space.kind, "dim": space.dim}


def _space_from_json(doc):
    _require_fields(doc, {"kind", "dim"}, "space")
    return Space(str(doc["kind"]), int(doc["dim"]))


def _require_fields(doc, allowed, what, required=None):
    if not isinstance(doc, dict):
        raise InvalidMeasureError(f"{what} document must be an object")
    unknown = set(doc) - set(allowed)
    if unknown:
        raise InvalidMeasureError(f"unknown fields in {what} document: {sorted(unknown)}")
    for key in (required if required is not None else allowed):
        if key not in doc:
            raise InvalidMeasureError(f"{what} document is missing {key!r}")


def measure_to_json(mu):
    if isinstance(mu, DiscreteSignedMeasure):
        return {
            "space": _space_to_json(mu.space),
            "atoms": [{"x": [float(v) for v in p], "w": w} for p, w in mu.atoms()],
        }
    if isinstance(mu, TorusCosine):
        return {
            "space": _space_to_json(mu.space),
            "density": {"family": "torus_cosine", "alpha": mu.alpha, "n0": mu.n0},
        }
    if isinstance(mu, ModulatedSincSq):
        return {
            "space": _space_to_json(mu.space),
            "density": {"family": "modulated_sincsq", "alpha": mu.alpha, "omega0": mu.omega0},
        }
    raise InvalidMeasureError(f"cannot serialize {type(mu).__name__}")


def measure_from_json(doc):
    _require_fields(doc, {"space", "atoms", "density"}, "measure", required={"space"})
    space = _space_from_json(doc["space"])
    if ("atoms" in doc) == ("density" in doc):
        raise InvalidMeasureError("measure document needs exactly one of atoms/density")
    if "atoms" in doc:
        atoms = []
        for entry in doc["atoms"]:
            _require_fields(entry, {"x", "w"}, "atom")
            atoms.append((entry["x"], entry["w"]))
        return construct(space, atoms)
    dens = doc["density"]
    family = dens.get("family")
    if family == "torus_cosine":
        _require_fields(dens, {"family", "alpha", "n0"}, "density")
        return TorusCosine(float(dens["alpha"]), int(dens["n0"]), space)
    if family == "modulated_sincsq":
        _require_fields(dens, {"family", "alpha", "omega0"}, "density")
        return ModulatedSincSq(float(dens["alpha"]), float(dens["omega0"]), space)
    raise InvalidMeasureError(f"unknown density family {family!r}")
