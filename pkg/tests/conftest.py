import pathlib

import pytest

from kgraphalg import Degree, build_tlambda
from kgraphalg.standard import lambda_1, lambda_2, omega_2_12, twist

REPO_ROOT = pathlib.Path(__file__).resolve().parent.parent


@pytest.fixture(scope="session")
def graphs_dir():
    return REPO_ROOT / "graphs"


@pytest.fixture(scope="session")
def g_lambda1():
    return lambda_1()


@pytest.fixture(scope="session")
def g_lambda2():
    return lambda_2()


@pytest.fixture(scope="session")
def g_omega12():
    return omega_2_12()


@pytest.fixture(scope="session")
def g_twist():
    return twist()


@pytest.fixture(scope="session")
def tl_lambda2(g_lambda2):
    return build_tlambda(g_lambda2)


@pytest.fixture(scope="session")
def bound22():
    return Degree((2, 2))
