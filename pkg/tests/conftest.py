import random

import pytest

from uqcomod.cyclofield import field
from uqcomod.uqsl2 import build_gr_uq, build_sigma, build_sigma_inverse, build_uq


@pytest.fixture(scope="session")
def f3():
    return field(3)


@pytest.fixture(scope="session")
def gr3():
    return build_gr_uq(3)


@pytest.fixture(scope="session")
def uq3():
    return build_uq(3)


@pytest.fixture(scope="session")
def sigma3():
    return build_sigma(3)


@pytest.fixture(scope="session")
def sigma3_inv():
    return build_sigma_inverse(3)


def random_scalar(fld, rng, span=3):
    """A random field element with small integer coordinates."""
    out = fld.zero
    for e in range(fld.degree):
        c = rng.randrange(-span, span + 1)
        if c:
            out = out + fld.from_rational(c) * fld.q_power(e)
    return out


@pytest.fixture()
def rng():
    return random.Random(20260815)
