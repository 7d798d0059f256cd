import pathlib

import pytest

from nihoval import gf2m

GOLDEN = pathlib.Path(__file__).parent / "golden"


@pytest.fixture(scope="session")
def P3():
    return gf2m.field_create(3)


@pytest.fixture(scope="session")
def P4():
    return gf2m.field_create(4)


@pytest.fixture(scope="session")
def P5():
    return gf2m.field_create(5)


@pytest.fixture(scope="session")
def P6():
    return gf2m.field_create(6)
