import functools
from pathlib import Path

import pytest

from pseudobl import named
from pseudobl.search import models_of_size

DATA = Path(__file__).parent / "data"


@functools.lru_cache(maxsize=None)
def models(profile: str, m: int):
    found, complete = models_of_size(m, profile)
    assert complete
    return tuple(found)


def catalog(profile: str, max_size: int):
    out = []
    for m in range(1, max_size + 1):
        out.extend(models(profile, m))
    return out


def synthetic(name: str):
    """A residuated, non-divisible table from the raw search, by name."""
    m = int(name.split("-")[1])
    return next(A for A in models("residuated", m) if A.name == name)


@pytest.fixture
def l3():
    return named.l3()


@pytest.fixture
def g3():
    return named.g3()


@pytest.fixture
def b4():
    return named.b4()


@pytest.fixture
def c2():
    return named.c2()


@pytest.fixture
def nb6():
    return named.nb6()


@pytest.fixture
def trivial():
    return named.trivial()
