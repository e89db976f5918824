import random

import pytest

from netalg.field import GF, QQ


@pytest.fixture
def rng():
    return random.Random(12345)


@pytest.fixture(params=["gf101", "qq"])
def field(request):
    return GF(101) if request.param == "gf101" else QQ


@pytest.fixture
def gf101():
    return GF(101)


@pytest.fixture
def gf5():
    return GF(5)
