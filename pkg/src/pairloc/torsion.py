"""The pair torsion functor on cyclic modules M = R/K.

Membership is decided for arbitrary ideals through the annihilator
characterization: x is torsion iff every generator of I lies in the radical of
(K : x) + J.  For monomial data the whole submodule is computed three times by
genuinely different routes — per-monomial radical membership over the exponent
box, minimal-prime support tests, and a directed union of saturations — which
must agree; the triangle is the correctness argument.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .errors import PreconditionError
from .ideals import FacePrime, Ideal, MonomialIdeal, colon, radical_member
from .ring import Polynomial
from .support import PairSpec, w_member, wtilde_member


@dataclass(frozen=True)
class PairContext:
    """A pair (I, J) together with the defining ideal K of M = R/K."""

    pair: PairSpec
    K: Ideal

    def __post_init__(self):
        self.K._check(self.pair.I)

    @property
    def ring(self):
        return self.K.ring

    def monomial_data(self):
        """(I, J, K) as monomial ideals; error if any generator is not one."""
        return (self.pair.I.as_monomial(), self.pair.J.as_monomial(),
                self.K.as_monomial())


@dataclass(frozen=True)
class GammaResult:
    """Lift L ⊇ K of the torsion submodule of R/K, with per-monomial witnesses."""

    L: MonomialIdeal
    is_whole_module: bool
    witnesses: tuple  # sorted (exponent, kind) pairs for box monomials in L


def gamma_member(x: Polynomial, ctx: PairContext) -> bool:
    """Membership of x + K in the torsion submodule of R/K."""
    r = ctx.K.normal_form(x)
    if r.is_zero():
        return True
    ann = colon(ctx.K, Ideal(ctx.ring, (r,)))
    target = ann + ctx.pair.J
    return all(radical_member(g, target) for g in ctx.pair.I.gens)


def _box(e):
    return sorted(product(*[range(b + 1) for b in e]))


def _result(ring, Km, members, witnesses):
    L = MonomialIdeal.from_exps(Km.nvars, Km.gens + tuple(members))
    return GammaResult(L, L.is_unit(), tuple(sorted(witnesses.items())))


def gamma_monomial(ctx: PairContext) -> GammaResult:
    """Torsion submodule lift by per-monomial radical membership over the box
    bounded by the componentwise maximum exponent of K's minimal generators."""
    Im, Jm, Km = ctx.monomial_data()
    ring = ctx.ring
    J = ctx.pair.J
    members, witnesses = [], {}
    for b in _box(Km.max_exponents()):
        if Km.contains(b):
            continue
        ann = Km.colon_monomial(b).to_ideal(ring)
        if all(radical_member(g, ann + J) for g in ctx.pair.I.gens):
            members.append(b)
            witnesses[b] = "radical-membership"
    return _result(ring, Km, members, witnesses)


def gamma_minprime_oracle(ctx: PairContext) -> GammaResult:
    """Independent route: a monomial is torsion iff every minimal prime of its
    annihilator lies in the support family of the pair."""
    Im, Jm, Km = ctx.monomial_data()
    ring = ctx.ring
    members, witnesses = [], {}
    for b in _box(Km.max_exponents()):
        if Km.contains(b):
            continue
        ann = Km.colon_monomial(b)
        if all(w_member(p.to_ideal(ring), ctx.pair) for p in ann.min_primes()):
            members.append(b)
            witnesses[b] = "min-primes-in-support"
    return _result(ring, Km, members, witnesses)


def gamma_colimit_oracle(ctx: PairContext) -> GammaResult:
    """Independent route: the torsion submodule as the union of saturation
    kernels over annihilator candidates belonging to the directed ideal family."""
    Im, Jm, Km = ctx.monomial_data()
    ring = ctx.ring
    candidates = {Km.colon_monomial(b) for b in _box(Km.max_exponents())}
    L = Km
    used = {}
    for a in sorted(candidates, key=lambda c: c.gens):
        if wtilde_member(a.to_ideal(ring), ctx.pair):
            L = L + Km.saturation(a)
            for g in Km.saturation(a).gens:
                used.setdefault(g, "saturation-kernel")
    witnesses = {g: kind for g, kind in used.items() if not Km.contains(g)}
    return GammaResult(L, L.is_unit(), tuple(sorted(witnesses.items())))


def is_torsion(ctx: PairContext) -> bool:
    """Whether M = R/K is entirely torsion: all minimal primes of K lie in the
    pair's support family (vacuously true for M = 0)."""
    Km = ctx.K.as_monomial()
    if Km.is_unit():
        return True
    return all(w_member(p.to_ideal(ctx.ring), ctx.pair) for p in Km.min_primes())


def mj_quotient_is_I_torsion(ctx: PairContext) -> bool:
    """Whether M/JM is I-torsion, i.e. I lies in the radical of K + J."""
    target = ctx.K + ctx.pair.J
    return all(radical_member(g, target) for g in ctx.pair.I.gens)


# -- associated primes of monomial cyclic modules -----------------------------

def _as_face_prime(A: MonomialIdeal):
    if A.is_zero():
        return FacePrime(frozenset())
    idx = set()
    for g in A.gens:
        support = [i for i, e in enumerate(g) if e]
        if len(support) != 1 or g[support[0]] != 1:
            return None
        idx.add(support[0])
    return FacePrime(frozenset(idx))


def ass_monomial(K: MonomialIdeal):
    """Associated primes of R/K: face primes arising as (K : m) for a box
    monomial m outside K."""
    if K.is_unit():
        return ()
    found = set()
    for b in _box(K.max_exponents()):
        if K.contains(b):
            continue
        p = _as_face_prime(K.colon_monomial(b))
        if p is not None:
            found.add(p)
    return tuple(sorted(found, key=lambda p: p.sort_token()))


def ass_gamma(ctx: PairContext, result: GammaResult = None):
    """Associated primes of the torsion submodule of R/K (monomial data)."""
    Km = ctx.K.as_monomial()
    if result is None:
        result = gamma_monomial(ctx)
    L = result.L
    found = set()
    # the box must bound both K (colon stability) and L (reaching a generator)
    box = tuple(max(a, b) for a, b in zip(Km.max_exponents(), L.max_exponents()))
    for b in _box(box):
        if not L.contains(b) or Km.contains(b):
            continue
        p = _as_face_prime(Km.colon_monomial(b))
        if p is not None:
            found.add(p)
    return tuple(sorted(found, key=lambda p: p.sort_token()))
