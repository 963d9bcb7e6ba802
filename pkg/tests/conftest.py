import pytest

from pairloc.ideals import clear_caches
from pairloc.ring import GREVLEX, LEX, Polynomial, RingSpec, parse_polynomial


@pytest.fixture(autouse=True)
def _fresh_caches():
    clear_caches()
    yield


def ring(names="xyz", char=0, order=GREVLEX):
    return RingSpec(char, tuple(names), order)


def pp(r, text):
    return parse_polynomial(r, text)


def variables(r):
    return tuple(Polynomial.variable(r, v) for v in r.variables)
