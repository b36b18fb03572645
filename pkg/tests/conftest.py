from pathlib import Path

import pytest

from lagrange import PermGroup, build_decomposition, make_chain, parse_cycles
from lagrange.formats import read_chain, read_group

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"


def P(text, degree):
    return parse_cycles(text, degree)


def group(degree, *gens):
    return PermGroup([P(g, degree) for g in gens], degree)


def load_chain(name):
    groups, kind = read_chain(FIXTURES / f"{name}.chain")
    return make_chain(groups, kind=kind)


def load_group(name):
    return read_group(FIXTURES / f"{name}.group")


@pytest.fixture(scope="session")
def S3():
    return group(3, "(1,2,3)", "(1,2)")


@pytest.fixture(scope="session")
def A3():
    return group(3, "(1,2,3)")


@pytest.fixture(scope="session")
def A4():
    return group(4, "(1,2,3)", "(1,2)(3,4)")


@pytest.fixture(scope="session")
def V4():
    return group(4, "(1,2)(3,4)", "(1,3)(2,4)")


@pytest.fixture(scope="session")
def C2():
    return group(4, "(1,2)(3,4)")


@pytest.fixture(scope="session")
def s3_chain():
    return build_decomposition(load_chain("s3"))


@pytest.fixture(scope="session")
def a4_chief():
    return build_decomposition(load_chain("a4_chief"))


@pytest.fixture(scope="session")
def a4_composition():
    return build_decomposition(load_chain("a4_composition"))


SMALL_CHAINS = ["s3", "s3_trivial", "a4_chief", "a4_composition", "d4", "s4", "s4_points", "a5"]


@pytest.fixture(scope="session", params=SMALL_CHAINS)
def small_decomposition(request):
    return build_decomposition(load_chain(request.param))
