"""Certification of kernel separation properties from spectral metadata.

Each verdict is produced by a named decision rule that inspects only the
kernel's exact spectral descriptors (support of the density, positivity of
coefficients, mass of the mixing measure, positivity of series
coefficients), never samples.  Numeric Gram probes exist as independent
cross-checks: they can refute strict positive definiteness on a concrete
point set but never prove it globally.

Properties:

* ``c_universal``      dense in C(X) on a compact space
* ``cc_universal``     dense under compact convergence
* ``c0_universal``     dense in the functions vanishing at infinity
* ``characteristic``   injective embedding of probability measures
* ``strictly_pd``      Gram form vanishes only at zero coefficients
* ``cond_strictly_pd`` same restricted to zero-sum coefficients

Verdicts are ``holds``, ``fails`` or ``unknown``; ``unknown`` marks the
cases the theory leaves open and never participates in a violation.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import kernels as K
from .kernels import KernelDescriptor, kernel_class

PROPERTIES = (
    "c_universal",
    "cc_universal",
    "c0_universal",
    "characteristic",
    "strictly_pd",
    "cond_strictly_pd",
)

HOLDS, FAILS, UNKNOWN = "holds", "fails", "unknown"

# numerical refutation threshold, relative to the Gram trace
RANK_TOL = 1e-10


class UnsupportedPropertyError(ValueError):
    pass


@dataclass(frozen=True)
class Certificate:
    kernel: KernelDescriptor
    property: str
    verdict: str
    rule_id: str
    citation: str
    witness_ref: dict | None = None
    details: dict = field(default_factory=dict)


_CITATIONS = {
    "a1_support_full": "the spectral density is positive on a set meeting every open set, so every nonzero finite signed measure has strictly positive energy",
    "a1_support_gap": "the spectral density vanishes on an open frequency set; a band-limited density supported there embeds to zero",
    "a1_characteristic_support": "for a profile vanishing at infinity, probability measures are separated exactly when the spectral support is the whole frequency space",
    "c0_implies_cc": "uniform approximation of functions vanishing at infinity implies approximation on every compact set",
    "a1_integrable_strictly_pd": "an integrable strictly positive definite profile has a continuous spectral density with interior support points, which separates compactly supported measures",
    "a1_spectral_interior": "compactly supported measures have analytic transforms, which cannot vanish on the open interior of the spectral support",
    "a1_spectral_interior_spd": "a spectral support with interior points makes every Gram form on distinct points strictly positive",
    "a1_empty_interior_open": "no decision is available: the spectral support has empty interior and the profile is not integrable",
    "a2_coefficients_positive": "every Fourier coefficient is strictly positive, so no nonzero measure is blind to the whole spectrum",
    "a2_coefficient_zero": "some Fourier coefficient vanishes; the matching cosine density has zero energy while being a nonzero measure",
    "a2_characteristic_coefficients": "positivity of all nonzero-frequency coefficients separates probability measures; the zero coefficient only controls constants",
    "a2_finite_spectrum_rank": "a trigonometric polynomial of finite degree gives singular Gram matrices on more points than active frequencies",
    "a3_mixing_support": "mixing mass away from rate zero makes the spectral density everywhere positive",
    "a3_only_zero_mass": "all mixing mass sits at rate zero, so the kernel is a constant function and separates nothing",
    "a3_equivalence": "for Gaussian mixtures, denseness, strict positive definiteness and injectivity on probability measures all reduce to the mixing support",
    "a4_coefficients_positive": "all power-series coefficients are positive, so monomial moments of every order separate compactly supported measures",
    "a4_open": "the theory gives no decision rule for this family and property",
    "universal_implies_spd": "denseness applied to point masses forces strict positive definiteness",
    "spd_implies_cspd": "the constrained form is a restriction of an everywhere-positive form",
    "compact_equivalence": "on a compact space continuous, vanishing and compactly converging approximation coincide",
}


def _cert(k, prop, verdict, rule, witness=None, details=None):
    return Certificate(k, prop, verdict, rule, _CITATIONS[rule],
                       witness_ref=witness, details=details or {})


def _a1_flags(k):
    return K._A1_FLAGS[k.family]


def _band_witness_ref(k):
    spec = K.spectral(k)
    from .measures import sinc_sq_spectrum
    w = sinc_sq_spectrum()[0]
    return {
        "kind": "bandlimited_zero_energy",
        "omega0": spec.support.half_width + w + 1.0,
    }


def _grid_witness_ref(k):
    l = k.param("l")
    return {"kind": "torus_zero_energy_grid", "n0": l + 1, "grid_size": 2 * (l + 1)}


def _null_witness_ref(k):
    if kernel_class(k) == "a2":
        l = k.param("l")
        return {"kind": "gram_null", "points": "equispaced", "count": 2 * l + 3}
    return {"kind": "gram_null", "points": [[0.0] * k.space.dim, [1.0] * k.space.dim]}


def _pair_witness_ref(k):
    if kernel_class(k) == "a2":
        return {"kind": "indistinguishable_pair", "from": _grid_witness_ref(k)}
    return {"kind": "indistinguishable_pair",
            "from": {"kind": "gram_null", "points": [[0.0] * k.space.dim, [1.0] * k.space.dim]}}


def certify(k: KernelDescriptor, prop: str) -> Certificate:
    """Decide a property of a zoo kernel from its spectral metadata."""
    if prop not in PROPERTIES:
        raise UnsupportedPropertyError(f"unknown property {prop!r}")
    klass = kernel_class(k)

    if prop == "c_universal" and not k.space.is_torus:
        raise UnsupportedPropertyError("c_universal needs a compact space")

    if klass == "a1":
        return _certify_a1(k, prop)
    if klass == "a2":
        return _certify_a2(k, prop)
    if klass in ("a3", "constant"):
        return _certify_a3(k, prop)
    return _certify_a4(k, prop)


def _certify_a1(k, prop):
    spec = K.spectral(k)
    full = spec.support.kind == "full_space"
    in_c0, integrable = _a1_flags(k)
    if prop == "c0_universal":
        if full:
            return _cert(k, prop, HOLDS, "a1_support_full")
        return _cert(k, prop, FAILS, "a1_support_gap", witness=_band_witness_ref(k))
    if prop == "characteristic":
        if not in_c0:
            return _cert(k, prop, UNKNOWN, "a4_open")
        if full:
            return _cert(k, prop, HOLDS, "a1_characteristic_support")
        # the zero-mass band-limited density is the refutation artifact; its
        # normalized halves are indistinguishable probability densities
        return _cert(k, prop, FAILS, "a1_characteristic_support",
                     witness=_band_witness_ref(k))
    if prop == "strictly_pd":
        if spec.support.interior_nonempty:
            return _cert(k, prop, HOLDS, "a1_spectral_interior_spd")
        return _cert(k, prop, UNKNOWN, "a4_open")
    if prop == "cc_universal":
        if full:
            return _cert(k, prop, HOLDS, "c0_implies_cc")
        spd = _certify_a1(k, "strictly_pd")
        if integrable and spd.verdict == HOLDS:
            return _cert(k, prop, HOLDS, "a1_integrable_strictly_pd")
        if spec.support.interior_nonempty:
            return _cert(k, prop, HOLDS, "a1_spectral_interior")
        return _cert(k, prop, UNKNOWN, "a1_empty_interior_open")
    # cond_strictly_pd
    if _certify_a1(k, "strictly_pd").verdict == HOLDS:
        return _cert(k, prop, HOLDS, "spd_implies_cspd")
    return _cert(k, prop, UNKNOWN, "a4_open")


def _certify_a2(k, prop):
    spec = K.spectral(k)
    positive = spec.support.kind == "all_integers"
    coeff0 = spec.coeff_axis(0)
    if prop in ("c_universal", "c0_universal", "cc_universal"):
        if positive:
            base = _cert(k, "c_universal", HOLDS, "a2_coefficients_positive",
                         details={"coefficient_at_zero": coeff0})
        else:
            base = _cert(k, "c_universal", FAILS, "a2_coefficient_zero",
                         witness=_grid_witness_ref(k),
                         details={"coefficient_at_zero": coeff0})
        if prop == "c_universal":
            return base
        return Certificate(k, prop, base.verdict, "compact_equivalence",
                           _CITATIONS["compact_equivalence"],
                           witness_ref=base.witness_ref, details=base.details)
    if prop == "characteristic":
        if positive:
            return _cert(k, prop, HOLDS, "a2_characteristic_coefficients",
                         details={"coefficient_at_zero": coeff0})
        return _cert(k, prop, FAILS, "a2_characteristic_coefficients",
                     witness=_pair_witness_ref(k),
                     details={"coefficient_at_zero": coeff0})
    if prop == "strictly_pd":
        if positive:
            return _cert(k, prop, HOLDS, "universal_implies_spd")
        return _cert(k, prop, FAILS, "a2_finite_spectrum_rank",
                     witness=_null_witness_ref(k))
    # cond_strictly_pd
    if positive:
        return _cert(k, prop, HOLDS, "spd_implies_cspd")
    return _cert(k, prop, FAILS, "a2_finite_spectrum_rank",
                 witness=_null_witness_ref(k))


def _certify_a3(k, prop):
    spec = K.spectral(k)
    degenerate = bool(spec.supp_is_only_zero)
    if prop == "c_universal":
        # reachable only for the constant kernel placed on a torus
        if degenerate:
            return _cert(k, prop, FAILS, "a3_only_zero_mass",
                         witness=_null_witness_ref(k))
        return _cert(k, prop, HOLDS, "a3_mixing_support")
    if prop in ("c0_universal", "cc_universal", "strictly_pd", "characteristic"):
        if not degenerate:
            rule = "a3_mixing_support" if prop == "c0_universal" else "a3_equivalence"
            return _cert(k, prop, HOLDS, rule)
        witness = _pair_witness_ref(k) if prop == "characteristic" else _null_witness_ref(k)
        return _cert(k, prop, FAILS, "a3_only_zero_mass", witness=witness)
    # cond_strictly_pd
    if not degenerate:
        return _cert(k, prop, HOLDS, "spd_implies_cspd")
    return _cert(k, prop, FAILS, "a3_only_zero_mass", witness=_null_witness_ref(k))


def _certify_a4(k, prop):
    coeffs = K.taylor_coefficients(k)
    positive = all(coeffs.a(n) > 0 for n in range(64))
    if prop == "cc_universal":
        if positive:
            return _cert(k, prop, HOLDS, "a4_coefficients_positive")
        return _cert(k, prop, UNKNOWN, "a4_open")
    if prop == "strictly_pd":
        if positive:
            return _cert(k, prop, HOLDS, "universal_implies_spd")
        return _cert(k, prop, UNKNOWN, "a4_open")
    if prop == "cond_strictly_pd":
        if positive:
            return _cert(k, prop, HOLDS, "spd_implies_cspd")
        return _cert(k, prop, UNKNOWN, "a4_open")
    # c0-universality and the characteristic property on the open domain
    # ball are not settled by the series criterion
    return _cert(k, prop, UNKNOWN, "a4_open")


# ---------------------------------------------------------------------------
# numeric probes
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class GramProbe:
    min_eigenvalue: float
    threshold: float
    fails_on_set: bool
    null_vector: np.ndarray | None


def _distinct_points(points, space):
    P = np.atleast_2d(np.asarray(points, dtype=float))
    n = P.shape[0]
    if n >= 2:
        D = np.abs(P[:, None, :] - P[None, :, :])
        if space.is_torus:
            two_pi = 2.0 * np.pi
            D = np.mod(D, two_pi)
            D = np.minimum(D, two_pi - D)
        dist = np.linalg.norm(D, axis=2)
        np.fill_diagonal(dist, np.inf)
        if dist.min() <= 1e-9:
            raise ValueError("points must be pairwise distinct (min distance > 1e-9)")
    return P


def check_strict_pd_numeric(k, points) -> GramProbe:
    """Minimum Gram eigenvalue on a distinct point set.

    ``fails_on_set`` means a numerical null vector exists, refuting strict
    positive definiteness; the probe can never prove it globally.
    """
    P = _distinct_points(points, k.space)
    G = K.gram(k, P)
    w, V = np.linalg.eigh(G)
    thr = RANK_TOL * max(np.trace(G), 1e-300)
    fails = bool(w[0] < thr)
    return GramProbe(float(w[0]), float(thr), fails, V[:, 0] if fails else None)


def check_cond_strict_pd_numeric(k, points) -> GramProbe:
    """Minimum of the Gram form over unit vectors orthogonal to all-ones."""
    P = _distinct_points(points, k.space)
    n = P.shape[0]
    if n < 2:
        raise ValueError("need at least two points")
    G = K.gram(k, P)
    # orthonormal basis of the zero-sum subspace
    Q, _ = np.linalg.qr(np.eye(n) - np.full((n, n), 1.0 / n))
    Q = Q[:, : n - 1]
    w, V = np.linalg.eigh(Q.T @ G @ Q)
    thr = RANK_TOL * max(np.trace(G), 1e-300)
    fails = bool(w[0] < thr)
    null = Q @ V[:, 0] if fails else None
    return GramProbe(float(w[0]), float(thr), fails, null)


# ---------------------------------------------------------------------------
# implication graph
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ImplicationGraph:
    """Directed implications (source holds => target holds) with a scope
    restricting the kernel classes on which an edge applies."""

    edges: tuple

    def applicable(self, k):
        out = []
        for src, dst, scope in self.edges:
            if scope == "all":
                out.append((src, dst))
            elif scope == "compact" and k.space.is_torus:
                out.append((src, dst))
            elif scope == "a1_c0" and kernel_class(k) == "a1" and _a1_flags(k)[0]:
                out.append((src, dst))
            elif scope == "a2" and kernel_class(k) == "a2":
                out.append((src, dst))
            elif scope == "a3" and kernel_class(k) in ("a3", "constant"):
                out.append((src, dst))
        return out


def default_implication_graph() -> ImplicationGraph:
    edges = [
        ("c0_universal", "cc_universal", "all"),
        ("c0_universal", "characteristic", "all"),
        ("c0_universal", "strictly_pd", "all"),
        ("cc_universal", "strictly_pd", "all"),
        ("c_universal", "strictly_pd", "compact"),
        ("c_universal", "characteristic", "compact"),
        ("characteristic", "cond_strictly_pd", "all"),
        ("strictly_pd", "cond_strictly_pd", "all"),
        # compact equivalence of the three denseness notions
        ("c_universal", "c0_universal", "compact"),
        ("c0_universal", "c_universal", "compact"),
        ("c_universal", "cc_universal", "compact"),
        ("cc_universal", "c_universal", "compact"),
        ("cc_universal", "c0_universal", "compact"),
        # translation-invariant profiles vanishing at infinity
        ("characteristic", "c0_universal", "a1_c0"),
        # torus: separation of probabilities forces strict positivity
        ("characteristic", "strictly_pd", "a2"),
    ]
    # radial equivalence clique
    clique = ("c0_universal", "cc_universal", "strictly_pd", "characteristic")
    for a in clique:
        for b in clique:
            if a != b:
                edges.append((a, b, "a3"))
    return ImplicationGraph(tuple(edges))


def audit_implications(certs, graph: ImplicationGraph | None = None):
    """Check a kernel's certificate set against the implication graph.

    Returns the list of violated edges; ``unknown`` verdicts never violate.
    Certificates must all describe the same kernel.
    """
    if not certs:
        return []
    kernel = certs[0].kernel
    if any(c.kernel != kernel for c in certs):
        raise ValueError("certificates describe different kernels")
    graph = graph or default_implication_graph()
    verdicts = {c.property: c.verdict for c in certs}
    violations = []
    for src, dst in graph.applicable(kernel):
        if verdicts.get(src) == HOLDS and verdicts.get(dst) == FAILS:
            violations.append({"from": src, "to": dst, "kernel": kernel.family})
    return violations


def applicable_properties(k):
    """Properties certifiable on this kernel's space."""
    props = [p for p in PROPERTIES if p != "c_universal"]
    if k.space.is_torus:
        props = list(PROPERTIES)
    return props


def certify_all(k):
    return [certify(k, p) for p in applicable_properties(k)]


def certificate_to_json(cert: Certificate):
    from .kernels import kernel_to_json

    doc = {
        "kernel": kernel_to_json(cert.kernel),
        "property": cert.property,
        "verdict": cert.verdict,
        "rule": cert.rule_id,
        "citation": cert.citation,
    }
    if cert.witness_ref is not None:
        doc["witness"] = cert.witness_ref
    if cert.details:
        doc["details"] = cert.details
    return doc
