import pytest

from cayleyrank import corpus


@pytest.fixture
def paper_qg():
    """Order-3 quasigroup with a left identity and no right identity (a,b,c = 0,1,2)."""
    return corpus.gen_paper_quasigroup()


@pytest.fixture
def c3():
    return corpus.gen_cyclic(3)


@pytest.fixture
def c6():
    return corpus.gen_cyclic(6)


@pytest.fixture
def rz3():
    return corpus.gen_right_zero(3)
