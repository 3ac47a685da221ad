"""Shared numerical kernels.

Adaptive 1-d quadrature, tail-bounded series summation, symmetric-matrix
minimum-eigenpair extraction, a dense LP front end, and a vectorized cosine
transform engine used for spectral energy integrals.

All routines are pure: tolerances travel through explicit configuration
values, never hidden module state, so everything here is reentrant and safe
to call concurrently.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass

import numpy as np
from scipy import integrate
from scipy.optimize import linprog

# Shared tolerance registry.  Callers thread these through configuration
# objects; they are referenced by name in the test suite.
DEFAULT_ABS_TOL = 1e-10
DEFAULT_REL_TOL = 1e-8


class QuadratureWarning(UserWarning):
    """Subdivision budget exhausted; the best available estimate was returned."""


class SeriesToleranceError(RuntimeError):
    """The tail bound never met the requested tolerance within the term cap."""


class LPError(RuntimeError):
    pass


class LPInfeasibleError(LPError):
    pass


class LPUnboundedError(LPError):
    pass


class InternalConsistencyError(RuntimeError):
    """A computed quantity violated an internal invariant by more than round-off."""


@dataclass(frozen=True)
class QuadratureConfig:
    abs_tol: float = DEFAULT_ABS_TOL
    rel_tol: float = DEFAULT_REL_TOL
    max_subdivisions: int = 200

    def __post_init__(self):
        if not (self.abs_tol > 0 and self.rel_tol > 0):
            raise ValueError("tolerances must be positive")
        if self.max_subdivisions < 1:
            raise ValueError("max_subdivisions must be >= 1")


DEFAULT_QUADRATURE = QuadratureConfig()


def integrate_1d(f, a, b, cfg: QuadratureConfig | None = None):
    """Adaptive quadrature of ``f`` over the finite interval ``[a, b]``.

    Returns ``(value, error_estimate)``.  If the subdivision budget runs out
    a :class:`QuadratureWarning` is emitted and the best estimate is
    returned with its (larger) error estimate.
    """
    cfg = cfg or DEFAULT_QUADRATURE
    a = float(a)
    b = float(b)
    if not (np.isfinite(a) and np.isfinite(b) and a < b):
        raise ValueError(f"need finite a < b, got [{a}, {b}]")
    out = integrate.quad(
        f, a, b,
        epsabs=cfg.abs_tol, epsrel=cfg.rel_tol,
        limit=cfg.max_subdivisions, full_output=1,
    )
    value, err = out[0], out[1]
    if len(out) > 3:
        warnings.warn(out[3], QuadratureWarning)
    return value, err


def sum_series(term, tail_bound, tol, *, start=0, max_terms=5_000_000):
    """Sum ``term(n)`` for ``n = start, start+1, ...`` until the tail is certified.

    ``tail_bound(N)`` must bound ``|sum_{n > N} term(n)|`` and decrease to
    zero.  Returns ``(partial_sum, N_used)`` where ``tail_bound(N_used) <= tol``.
    """
    if tol <= 0:
        raise ValueError("tol must be positive")
    total = 0.0
    n = start
    while True:
        total += term(n)
        if tail_bound(n) <= tol:
            return total, n
        n += 1
        if n - start > max_terms:
            raise SeriesToleranceError(
                f"tail bound still {tail_bound(n - 1):g} > {tol:g} after {max_terms} terms"
            )


def min_eig_sym(G):
    """Minimum eigenpair of a symmetric matrix.

    Returns ``(eigenvalue, unit eigenvector)``.  Rejects matrices whose
    asymmetry exceeds 1e-12 relative to their magnitude.
    """
    G = np.asarray(G, dtype=float)
    if G.ndim != 2 or G.shape[0] != G.shape[1]:
        raise ValueError("square matrix required")
    scale = max(1.0, float(np.abs(G).max()))
    if float(np.abs(G - G.T).max()) > 1e-12 * scale:
        raise ValueError("matrix is not symmetric within 1e-12")
    w, V = np.linalg.eigh(0.5 * (G + G.T))
    vec = V[:, 0]
    return float(w[0]), vec / np.linalg.norm(vec)


def solve_lp(c, A_ub=None, b_ub=None, A_eq=None, b_eq=None, *,
             bounds=None, feas_tol=1e-9):
    """Minimize ``c @ x`` subject to ``A_ub x <= b_ub`` and ``A_eq x = b_eq``.

    Variables are free unless ``bounds`` is given.  The returned solution is
    verified against the constraints to ``feas_tol``; infeasible and
    unbounded programs raise dedicated errors.
    """
    c = np.asarray(c, dtype=float)
    if bounds is None:
        bounds = [(None, None)] * c.size
    res = linprog(c, A_ub=A_ub, b_ub=b_ub, A_eq=A_eq, b_eq=b_eq,
                  bounds=bounds, method="highs")
    if res.status == 2:
        raise LPInfeasibleError(res.message)
    if res.status == 3:
        raise LPUnboundedError(res.message)
    if not res.success:
        raise LPError(res.message)
    x = res.x
    if A_ub is not None:
        viol = np.max(np.asarray(A_ub) @ x - np.asarray(b_ub), initial=0.0)
        if viol > feas_tol:
            raise InternalConsistencyError(f"LP inequality residual {viol:g}")
    if A_eq is not None:
        viol = float(np.max(np.abs(np.asarray(A_eq) @ x - np.asarray(b_eq)), initial=0.0))
        if viol > feas_tol:
            raise InternalConsistencyError(f"LP equality residual {viol:g}")
    return float(res.fun), x


# ---------------------------------------------------------------------------
# Vectorized cosine transforms of even spectral densities.
#
# Energies of discrete measures against translation-invariant kernels reduce
# to integrals  c(d) = \int_R cos(w d) q(w) dw  per coordinate axis, where q
# is the kernel's (even, nonnegative) spectral density on that axis.  The
# engine below evaluates c on a whole vector of lags at once with composite
# Gauss-Legendre panels plus a family-specific treatment of the tail
# [A, inf).  Heavy tails get an integration-by-parts correction whose
# remainder is certified; compact supports need no tail at all.
# ---------------------------------------------------------------------------

_GL_NODES, _GL_WEIGHTS = np.polynomial.legendre.leggauss(16)
_NODE_CHUNK = 16384


def _gl_grid(edges):
    a = edges[:-1]
    b = edges[1:]
    mid = 0.5 * (a + b)[:, None]
    half = 0.5 * (b - a)[:, None]
    return (mid + half * _GL_NODES[None, :]).ravel(), (half * _GL_WEIGHTS[None, :]).ravel()


def _cos_dot(density, edges, deltas):
    """2 * integral over [edges[0], edges[-1]] of cos(w d) density(w), per d."""
    nodes, wts = _gl_grid(edges)
    f = wts * density(nodes)
    out = np.zeros(len(deltas))
    for lo in range(0, nodes.size, _NODE_CHUNK):
        hi = lo + _NODE_CHUNK
        out += np.cos(np.outer(deltas, nodes[lo:hi])) @ f[lo:hi]
    return 2.0 * out


def _segment_edges(cut, freq, bulk, base_panels, max_panels=6000):
    """Panel edges on [0, cut]: linear panels over the density bulk, then
    octave-doubling panels sized to the oscillation frequency."""
    bulk = min(bulk, cut)
    p_lin = int(min(max_panels, max(base_panels, np.ceil(bulk * freq / (2.0 * np.pi)))))
    parts = [np.linspace(0.0, bulk, p_lin + 1)]
    x = bulk
    while x < cut:
        x2 = min(2.0 * x, cut)
        p = int(min(max_panels, max(1, np.ceil((x2 - x) * freq / (2.0 * np.pi * 5.0)))))
        parts.append(np.linspace(x, x2, p + 1)[1:])
        x = x2
    return np.concatenate(parts)


def _halved(edges):
    if len(edges) <= 2:
        return edges
    e = edges[::2]
    if e[-1] != edges[-1]:
        e = np.append(e, edges[-1])
    return e


class AxisTailRule:
    """Family-specific truncation of the tail integral beyond a cutoff.

    ``cutoff(dmin, target)`` picks the truncation point so the certified
    remainder at lag >= dmin stays below ``target``; ``correction(cut, d)``
    returns the two-sided tail correction added to the core integral and its
    certified remainder bound.
    """

    intrinsic_freq = 0.0
    bulk = np.inf

    def cutoff(self, dmin, target):
        raise NotImplementedError

    def correction(self, cut, deltas):
        raise NotImplementedError


class BoxTail(AxisTailRule):
    """Compactly supported density: integrate to the edge, no tail."""

    def __init__(self, half_width, bulk=None):
        self.half_width = float(half_width)
        self.bulk = float(bulk if bulk is not None else half_width)

    def cutoff(self, dmin, target):
        return self.half_width

    def correction(self, cut, deltas):
        z = np.zeros(len(deltas))
        return z, z


class GaussianTail(AxisTailRule):
    """Density N(0, s^2) per axis; tail mass erfc(cut / (s sqrt 2))."""

    def __init__(self, s):
        self.s = float(s)
        self.bulk = 10.0 * self.s

    def cutoff(self, dmin, target):
        from scipy.special import erfcinv
        # push the truncation well below target; extra panels are cheap here
        t = max(1e-3 * target, 1e-290)
        return self.s * np.sqrt(2.0) * float(erfcinv(t))

    def correction(self, cut, deltas):
        from scipy.special import erfc
        tail = float(erfc(cut / (self.s * np.sqrt(2.0))))
        corr = np.where(np.asarray(deltas) == 0.0, tail, 0.0)
        bound = np.where(np.asarray(deltas) == 0.0, 1e-16 + 1e-15 * tail, tail)
        return corr, bound


class CauchyTail(AxisTailRule):
    """Density (s/pi)/(s^2 + w^2); integration-by-parts tail correction."""

    def __init__(self, s):
        self.s = float(s)
        self.bulk = 40.0 * self.s

    def _lam(self, w):
        return (self.s / np.pi) / (self.s ** 2 + w ** 2)

    def _dlam(self, w):
        return -2.0 * self.s * w / (np.pi * (self.s ** 2 + w ** 2) ** 2)

    def cutoff(self, dmin, target):
        if dmin <= 0.0:
            return 60.0 * self.s
        # remainder after two integrations by parts is |lam'(A)| / d^2
        cut = (4.0 * self.s / (np.pi * target * dmin ** 2)) ** (1.0 / 3.0)
        return max(40.0 * self.s, cut)

    def correction(self, cut, deltas):
        d = np.asarray(deltas, dtype=float)
        corr = np.empty_like(d)
        bound = np.empty_like(d)
        zero = d == 0.0
        corr[zero] = 1.0 - (2.0 / np.pi) * np.arctan(cut / self.s)
        bound[zero] = 1e-15
        dz = d[~zero]
        lam = self._lam(cut)
        dlam = self._dlam(cut)
        corr[~zero] = 2.0 * (-lam * np.sin(cut * dz) / dz - dlam * np.cos(cut * dz) / dz ** 2)
        bound[~zero] = 2.0 * abs(dlam) / dz ** 2
        return corr, bound


class TriangleWaveTail(AxisTailRule):
    """Density (1/pi)(1 - cos w)/w^2; the tail is exact via the sine integral."""

    intrinsic_freq = 1.0

    def __init__(self):
        self.bulk = 80.0

    def cutoff(self, dmin, target):
        return 120.0

    @staticmethod
    def _cos_over_sq(eta, cut):
        # int_cut^inf cos(eta w) / w^2 dw, exact through Si
        from scipy.special import sici
        eta = np.abs(np.asarray(eta, dtype=float))
        out = np.empty_like(eta)
        zero = eta == 0.0
        out[zero] = 1.0 / cut
        ez = eta[~zero]
        si, _ = sici(ez * cut)
        out[~zero] = np.cos(ez * cut) / cut - ez * (np.pi / 2.0 - si)
        return out

    def correction(self, cut, deltas):
        d = np.asarray(deltas, dtype=float)
        c = self._cos_over_sq
        corr = (2.0 / np.pi) * (c(d, cut) - 0.5 * c(d + 1.0, cut) - 0.5 * c(np.abs(d - 1.0), cut))
        bound = np.full_like(d, 4e-14)
        return corr, bound


def cosine_transform_even(density, deltas, tail: AxisTailRule, *,
                          target=1e-11, base_panels=24):
    """``c(d) = int_R cos(w d) density(w) dw`` for a vector of lags ``d >= 0``.

    ``density`` must be even (only its restriction to w >= 0 is evaluated)
    and nonnegative.  Returns ``(values, error_bounds)`` where the bounds
    combine a quadrature error estimate with the certified tail remainder.
    """
    deltas = np.asarray(deltas, dtype=float)
    if deltas.ndim != 1:
        raise ValueError("deltas must be one dimensional")
    if np.any(deltas < 0):
        raise ValueError("lags must be nonnegative")
    vals = np.zeros_like(deltas)
    errs = np.zeros_like(deltas)

    pos = deltas[deltas > 0]
    buckets = [(deltas == 0.0, 0.0, 0.0)]
    if pos.size:
        lo = pos.min()
        while True:
            hi = lo * 32.0
            mask = (deltas >= lo) & (deltas < hi)
            if lo * 32.0 >= pos.max():
                mask = (deltas >= lo)
            if mask.any():
                buckets.append((mask, lo, float(deltas[mask].max())))
            if lo * 32.0 >= pos.max():
                break
            lo = hi

    for mask, dmin, dmax in buckets:
        if not mask.any():
            continue
        ds = deltas[mask]
        cut = tail.cutoff(dmin, target)
        freq = dmax + tail.intrinsic_freq
        edges = _segment_edges(cut, freq, tail.bulk, base_panels)
        core = _cos_dot(density, edges, ds)
        coarse = _cos_dot(density, _halved(edges), ds)
        corr, bound = tail.correction(cut, ds)
        vals[mask] = core + corr
        errs[mask] = np.abs(core - coarse) + bound + 1e-15
    return vals, errs
