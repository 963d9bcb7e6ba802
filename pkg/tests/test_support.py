import pytest

from pairloc.errors import PreconditionError
from pairloc.ideals import Ideal, intersect
from pairloc.support import (PairSpec, s_certificate, s_zero, w_member,
                             wtilde_member)

from conftest import pp, ring, variables


def test_w_member_basic():
    r = ring("xyz")
    x, y, z = variables(r)
    pair = PairSpec(Ideal(r, (x,)), Ideal.zero(r))
    assert w_member(Ideal(r, (x,)), pair)       # V(I) at J = 0
    assert w_member(Ideal(r, (x, y)), pair)     # specialization-closed
    assert not w_member(Ideal(r, (y,)), pair)


def test_w_member_uses_j():
    r = ring("xy")
    x, y = variables(r)
    pair = PairSpec(Ideal(r, (x,)), Ideal(r, (x * x,)))
    # I ⊆ √J, so every proper prime qualifies, even the zero ideal
    assert w_member(Ideal.zero(r), pair)


def test_w_member_rejects_unit():
    r = ring("xy")
    x, _ = variables(r)
    with pytest.raises(PreconditionError):
        w_member(Ideal.unit(r), PairSpec(Ideal(r, (x,)), Ideal.zero(r)))


def test_w_member_shifted_prime():
    r = ring("XYZW")
    X, Y, Z, W = variables(r)
    I = Ideal(r, (X, Y, Z, W))
    J = intersect(Ideal(r, (X, Y)), Ideal(r, (Z, W)))
    assert w_member(Ideal(r, (X - Z, Y - W)), PairSpec(I, J))


def test_wtilde_member():
    r = ring("xy")
    x, y = variables(r)
    pair = PairSpec(Ideal(r, (x,)), Ideal(r, (y,)))
    assert wtilde_member(Ideal(r, (x,)), pair)
    assert wtilde_member(Ideal(r, (x * x, y)), pair)
    assert not wtilde_member(Ideal(r, (y,)), pair)


def test_s_zero():
    r = ring("xy")
    x, y = variables(r)
    J = Ideal(r, (x * x,))
    assert s_zero(x, J)          # x^2 + (-x^2) = 0
    assert not s_zero(y, J)


def test_s_certificate_found_and_reverified():
    r = ring("xy")
    x, y = variables(r)
    cert = s_certificate(Ideal(r, (x - y,)), x, Ideal(r, (y,)))
    assert cert is not None
    p = Ideal(r, (x - y,))
    assert p.member(x ** cert.n + cert.j)
    assert Ideal(r, (y,)).member(cert.j)


def test_s_certificate_none_case():
    # p = (y), a = x, J = (y): x^n + j has a unit term modulo y, never in p
    r = ring("xy")
    x, y = variables(r)
    assert s_certificate(Ideal(r, (y,)), x, Ideal(r, (y,))) is None


def test_s_certificate_deterministic():
    r = ring("xy")
    x, y = variables(r)
    a = s_certificate(Ideal(r, (x - y,)), x, Ideal(r, (y,)))
    b = s_certificate(Ideal(r, (x - y,)), x, Ideal(r, (y,)))
    assert (a.n, a.j) == (b.n, b.j)
