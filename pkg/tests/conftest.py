import json
import sys
from pathlib import Path

import numpy as np
import pytest

TESTS = Path(__file__).resolve().parent
sys.path.insert(0, str(TESTS))

ZOO = TESTS.parent / "zoo"


@pytest.fixture(scope="session")
def frozen():
    with open(TESTS / "frozen_fixtures.json") as fh:
        return json.load(fh)


@pytest.fixture(scope="session")
def zoo_kernels():
    from kernelcert import kernel_from_json

    out = {}
    for path in sorted(ZOO.glob("*.json")):
        with open(path) as fh:
            k = kernel_from_json(json.load(fh))
        out[k.family] = k
    return out


def random_discrete(space, n, rng, weight_scale=1.0):
    """Seeded random signed measure on a space."""
    from kernelcert import construct

    if space.is_torus:
        pts = rng.uniform(0.0, 2 * np.pi, (n, space.dim))
    else:
        pts = rng.normal(0.0, 1.5, (n, space.dim))
    w = rng.normal(0.0, weight_scale, n)
    w[w == 0.0] = weight_scale
    return construct(space, list(zip(pts, w)))


def random_probability(space, n, rng):
    from kernelcert import construct

    if space.is_torus:
        pts = rng.uniform(0.0, 2 * np.pi, (n, space.dim))
    else:
        pts = rng.normal(0.0, 1.5, (n, space.dim))
    w = rng.uniform(0.1, 1.0, n)
    w = w / w.sum()
    return construct(space, list(zip(pts, w)))
