import pytest

from refex import _core
from refex.synthetic import bundled_genre, bundled_kb


@pytest.fixture
def red_green():
    kb = bundled_kb("red_green")
    return kb, kb.context(["pen1", "pen2"])


@pytest.fixture
def staedtler():
    kb = bundled_kb("staedtler")
    return kb, kb.context(["pen1", "pen2"])


@pytest.fixture
def table():
    kb = bundled_kb("table")
    return kb, kb.context(["table1"])


@pytest.fixture
def casual():
    return bundled_genre("casual")


@pytest.fixture
def inventory():
    return bundled_genre("inventory")


@pytest.fixture(params=sorted(_core.BACKENDS))
def backend(request):
    return request.param
