import os
import sys

import pytest
from hypothesis import HealthCheck, settings

sys.path.insert(0, os.path.dirname(__file__))

from k3lat.k3geom import K3Model  # noqa: E402
from k3lat.lattice import Lattice  # noqa: E402

settings.register_profile("default", max_examples=100, deadline=None)
settings.register_profile("ci", max_examples=300, deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.register_profile("quick", max_examples=20, deadline=None)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))

LAMBDA_GRAM = ((2, 5), (5, 4))


@pytest.fixture(scope="session")
def lam():
    return Lattice(LAMBDA_GRAM, ("L", "H"))


@pytest.fixture(scope="session")
def model(lam):
    return K3Model(lam, lam.vector(1, 0))


@pytest.fixture(scope="session")
def L(lam):
    return lam.vector(1, 0)


@pytest.fixture(scope="session")
def H(lam):
    return lam.vector(0, 1)


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(mod.RESULTS):
        terminalreporter.write_line(mod.line(n))
