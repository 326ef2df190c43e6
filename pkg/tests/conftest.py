import math

import pytest

from helix3 import HelixParams, construct_canonical

# The two reference parameter sets used throughout: one with irrational
# frequency ratio 1/sqrt(29) (never closes, fills its torus), one with
# rational ratio 3/20 (closes after 24*pi).
DENSE_KAPPA = 5.0 * math.sqrt(3.0) / 4.0
DENSE_TAU = math.sqrt(29.0) / 4.0
PERIODIC_KAPPA = math.sqrt(15.0) / 3.0
PERIODIC_TAU = 5.0 / 12.0


@pytest.fixture(scope="session")
def dense_params():
    return HelixParams(kappa=DENSE_KAPPA, tau=DENSE_TAU)


@pytest.fixture(scope="session")
def periodic_params():
    return HelixParams(kappa=PERIODIC_KAPPA, tau=PERIODIC_TAU)


@pytest.fixture(scope="session")
def dense_form(dense_params):
    return construct_canonical(dense_params)


@pytest.fixture(scope="session")
def periodic_form(periodic_params):
    return construct_canonical(periodic_params)
