import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pairloc.errors import PreconditionError
from pairloc.ideals import (FacePrime, Ideal, MonomialIdeal, colon,
                            dim_quotient, eliminate, intersect, radical_member,
                            saturate)
from pairloc.ring import Polynomial
from pairloc.samples import random_monomial_ideal, standard_ring

from conftest import pp, ring, variables


def test_eliminate_example():
    r = ring("txy")
    t, x, y = variables(r)
    A = Ideal(r, (t * x, t - y))
    E = eliminate(A, {"t"})
    assert E == Ideal(r, (x * y,))


def test_intersect_two_planes():
    r = ring("xyzw")
    x, y, z, w = variables(r)
    J = intersect(Ideal(r, (x, y)), Ideal(r, (z, w)))
    assert J == Ideal(r, (x * z, x * w, y * z, y * w))


def test_colon_example():
    r = ring("xyz")
    x, y, z = variables(r)
    assert colon(Ideal(r, (x * x * y,)), Ideal(r, (y,))) == Ideal(r, (x * x,))


def test_saturate_example():
    r = ring("xyz")
    x, y, z = variables(r)
    assert saturate(Ideal(r, (x * x * y,)), Ideal(r, (x,))) == Ideal(r, (y,))


def test_radical_member_examples():
    r = ring("xyz")
    x, y, z = variables(r)
    assert radical_member(x * y, Ideal(r, (x * x * y * y * y,)))
    assert not radical_member(x, Ideal(r, (x * y,)))
    assert radical_member(x + y, Ideal(r, ((x + y) ** 3,)))


def test_dim_examples():
    r = ring("xyzw")
    x, y, z, w = variables(r)
    J = intersect(Ideal(r, (x, y)), Ideal(r, (z, w)))
    assert dim_quotient(J) == 2
    assert dim_quotient(Ideal.unit(r)) == -1
    assert dim_quotient(Ideal.zero(r)) == 4
    assert dim_quotient(Ideal(r, (x, y, z, w))) == 0


def test_ideal_equality_via_reduced_basis():
    r = ring("xy")
    x, y = variables(r)
    assert Ideal(r, (x, y)) == Ideal(r, (x + y, y))
    assert Ideal(r, (x,)) != Ideal(r, (x * x,))


def test_power_and_product():
    r = ring("xy")
    x, y = variables(r)
    A = Ideal(r, (x, y))
    assert A.power(2) == Ideal(r, (x * x, x * y, y * y))
    assert A * A == A.power(2)


def test_as_monomial_rejects_mixed_generators():
    r = ring("xy")
    x, y = variables(r)
    with pytest.raises(PreconditionError):
        Ideal(r, (x + y,)).as_monomial()


def test_monomial_intersect_is_lcm():
    A = MonomialIdeal.from_exps(2, [(2, 0)])
    B = MonomialIdeal.from_exps(2, [(1, 1)])
    assert A.intersect(B) == MonomialIdeal.from_exps(2, [(2, 1)])


def test_monomial_colon_componentwise():
    A = MonomialIdeal.from_exps(2, [(2, 1)])
    assert A.colon_monomial((0, 1)) == MonomialIdeal.from_exps(2, [(2, 0)])


def test_monomial_radical():
    A = MonomialIdeal.from_exps(3, [(2, 0, 3), (0, 4, 0)])
    assert A.radical() == MonomialIdeal.from_exps(3, [(1, 0, 1), (0, 1, 0)])


def test_min_primes_and_assh():
    K = MonomialIdeal.from_exps(4, [(1, 0, 1, 0), (1, 0, 0, 1),
                                    (0, 1, 1, 0), (0, 1, 0, 1)])
    labels = {frozenset(p.vars) for p in K.min_primes()}
    assert labels == {frozenset({0, 1}), frozenset({2, 3})}
    assert K.dim() == 2
    assert {frozenset(p.vars) for p in K.assh()} == labels


def test_assh_filters_lower_dimension():
    # (x) ∩ (y,z) = (xy, xz): min primes (x) and (y,z), only (x) is top-dimensional
    K = MonomialIdeal.from_exps(3, [(1, 1, 0), (1, 0, 1)])
    assert {frozenset(p.vars) for p in K.min_primes()} == {frozenset({0}),
                                                           frozenset({1, 2})}
    assert {frozenset(p.vars) for p in K.assh()} == {frozenset({0})}


def test_zero_and_unit_monomial_conventions():
    Z = MonomialIdeal.zero(3)
    assert Z.min_primes() == (FacePrime(frozenset()),)
    assert Z.dim() == 3
    with pytest.raises(PreconditionError):
        MonomialIdeal.unit(3).min_primes()


def test_face_prime_contains_poly():
    r = ring("xyz")
    p = FacePrime(frozenset({0, 1}))
    assert p.contains_poly(pp(r, "x*z + y^2"))
    assert not p.contains_poly(pp(r, "x*z + z^2"))


mono = st.tuples(*[st.integers(min_value=0, max_value=3)] * 3)
mono_ideals = st.lists(mono.filter(any), min_size=1, max_size=3).map(
    lambda exps: MonomialIdeal.from_exps(3, exps))

R3 = standard_ring(3)


@settings(max_examples=40, deadline=None)
@given(mono_ideals, mono_ideals)
def test_monomial_paths_match_groebner_paths(A, B):
    Ai, Bi = A.to_ideal(R3), B.to_ideal(R3)
    assert A.intersect(B).to_ideal(R3) == intersect(Ai, Bi)
    assert A.colon(B).to_ideal(R3) == colon(Ai, Bi)
    assert A.saturation(B).to_ideal(R3) == saturate(Ai, Bi)
    assert A.dim() == dim_quotient(Ai)


@settings(max_examples=40, deadline=None)
@given(mono_ideals, mono)
def test_radical_membership_matches_support_rule(A, exp):
    f = Polynomial.monomial(R3, exp)
    assert radical_member(f, A.to_ideal(R3)) == A.radical_contains(exp)


@settings(max_examples=30, deadline=None)
@given(mono_ideals, mono_ideals)
def test_colon_and_saturation_laws(A, B):
    Ai, Bi = A.to_ideal(R3), B.to_ideal(R3)
    Q = colon(Ai, Bi)
    assert Q * Bi == intersect(Q * Bi, Ai)  # (A:B)·B ⊆ A
    S = saturate(Ai, Bi)
    assert colon(S, Bi) == S  # saturation is stable
