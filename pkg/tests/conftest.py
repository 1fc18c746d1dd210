"""Shared fixtures and constants for the test suite."""

import pytest

from lsradii import LommelParam, StruveParam

# published four-decimal radii of uniform convexity (alpha=0, beta=1)
GOLDEN = {
    "f": (0.3, 0.6623),
    "g": (0.3, 0.7376),
    "h": (0.3, 1.4961),
    "u": (0.5, 1.1382),
    "v": (0.5, 0.9349),
    "w": (0.5, 2.4674),
}

MU_SET = (-0.25, -0.2, 0.1, 0.3)
NU_SET = (-0.3, -0.25, 0.0, 0.5)


@pytest.fixture(scope="session")
def mu03():
    return LommelParam(0.3)


@pytest.fixture(scope="session")
def nu05():
    return StruveParam(0.5)
