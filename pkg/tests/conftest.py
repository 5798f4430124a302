import pytest

from engeldim import SequenceFamily


@pytest.fixture
def fam42() -> SequenceFamily:
    return SequenceFamily.geometric(4, 2)


@pytest.fixture
def fam22() -> SequenceFamily:
    return SequenceFamily.geometric(2, 2)


@pytest.fixture
def fam21() -> SequenceFamily:
    # t_n = 2 for every n
    return SequenceFamily.geometric(2, 1, t_coef=2)


@pytest.fixture
def test_families(fam42, fam22, fam21) -> list[SequenceFamily]:
    return [fam42, fam22, fam21]
