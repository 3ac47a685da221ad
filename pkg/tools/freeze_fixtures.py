#!/usr/bin/env python3
"""Compute oracle values and freeze them into tests/frozen_fixtures.json.

Run from the repository root.  The oracles live in tests/oracles.py and do
not import the package, so the frozen numbers are independent of the code
they later check.
"""

import json
import math
import sys
from pathlib import Path

import numpy as np

ROOT = Path(__file__).resolve().parent.parent
sys.path.insert(0, str(ROOT / "tests"))

import oracles  # noqa: E402

PI = math.pi


def main():
    fx = {}

    z = oracles.complex_sum_ft([([0.0], 1.0), ([1.0], -1.0)], [PI])
    fx["ft_delta_diff_at_pi"] = [z.real, z.imag]

    z = oracles.torus_coeff([([0.0], 1.0), ([PI], -1.0)], [1])
    fx["torus_coeff_delta_diff_n1"] = [z.real, z.imag]

    alpha, omega0 = 0.75, 5.0
    omegas = [0.0, 0.8, 1.7, 2.6, 3.2, 3.7, 4.1, 4.6, 5.0, 5.3,
              5.9, 6.4, 6.8, 7.3, 7.9, 8.5, 9.2, 10.0, 11.0, 12.5]
    fx["modsincsq_ft"] = {
        "alpha": alpha, "omega0": omega0, "omegas": omegas,
        "values": [oracles.modsincsq_ft(alpha, omega0, w) for w in omegas],
    }

    fx["sincsq_half_width"] = oracles.sincsq_half_width()
    fx["sincsq_peak"] = oracles.sincsq_transform(0.0)

    fx["poisson_eval_pi"] = oracles.poisson_profile(0.5, PI)
    fx["poisson_energy_two_antipodal"] = {
        "spatial": oracles.double_sum_energy(
            [([0.0], 1.0), ([PI], -1.0)], oracles.poisson_kernel(0.5)),
        "series": oracles.poisson_energy_series(0.5),
    }

    G = [[oracles.gauss_kernel(1.0)([float(i)], [float(j)]) for j in range(3)]
         for i in range(3)]
    fx["gaussian_gram_012_min_eig"] = oracles.power_iteration_min_eig(np.array(G))

    pts = [[0.0], [2 * PI / 3], [4 * PI / 3]]
    G = [[oracles.dirichlet_kernel(1)(x, y) for y in pts] for x in pts]
    fx["dirichlet1_gram_equi3_min_eig"] = oracles.power_iteration_min_eig(np.array(G))

    rng = np.random.default_rng(42)
    P20 = rng.normal(0.0, 1.0, (20, 2))
    G = [[oracles.gauss_kernel(1.0)(x, y) for y in P20] for x in P20]
    fx["gaussian_gram_20pts_r2_min_eig"] = oracles.power_iteration_min_eig(np.array(G))

    fx["inner_gauss_d01_d0"] = oracles.double_sum_inner(
        [([0.0], 1.0), ([1.0], -1.0)], [([0.0], 1.0)], oracles.gauss_kernel(1.0))
    fx["embed_eval_gauss_mid"] = oracles.weighted_eval(
        [([0.0], 0.5), ([2.0], 0.5)], oracles.gauss_kernel(1.0), [1.0])
    fx["energy_gauss_d01"] = oracles.double_sum_energy(
        [([0.0], 1.0), ([1.0], -1.0)], oracles.gauss_kernel(1.0))

    # torus grid witnesses: exact-zero energies by double sum
    def grid_atoms(n0, m, alpha=1.0):
        xs = [2 * PI * j / m for j in range(m)]
        return [([x], (2 * PI / m) * 2 * alpha * math.cos(n0 * x)) for x in xs]

    fx["dirichlet2_grid_witness_energy"] = oracles.double_sum_energy(
        grid_atoms(3, 8), oracles.dirichlet_kernel(2))
    fx["fejer1_grid_witness_energy"] = oracles.double_sum_energy(
        grid_atoms(2, 6), oracles.fejer_kernel(1))
    coeffs = []
    for n in range(-5, 6):
        z = oracles.torus_coeff(grid_atoms(3, 8), [n])
        coeffs.append([z.real, z.imag])
    fx["dirichlet2_grid_witness_coeffs"] = coeffs

    fx["taylor_exp_ip_half_deg10"] = oracles.taylor_exp_truncated(0.5, 10)
    fx["taylor_binom_ip_half_deg30"] = oracles.taylor_binom_truncated(0.5, 1.0, 30)
    fx["taylor_exp_feature_energy_deg12"] = oracles.taylor_exp_feature_energy(
        [([0.5], 1.0), ([-0.5], -1.0)], 12)

    fx["bl_two_diracs"] = {str(t): oracles.bl_two_diracs(t) for t in (0.5, 1.0, 2.0, 10.0)}
    fx["gauss_mmd_two_diracs"] = {
        str(t): oracles.gaussian_mmd_two_diracs(t) for t in (3.0, 2.0, 1.0, 0.5, 0.1, 0.01)}

    fx["quad_sin_0_pi"] = 2.0
    fx["quad_gauss_pm5"] = oracles.erf_gauss_integral(5.0)

    out = ROOT / "tests" / "frozen_fixtures.json"
    out.write_text(json.dumps(fx, indent=2) + "\n")
    print(f"froze {len(fx)} fixture groups to {out}")


if __name__ == "__main__":
    main()
