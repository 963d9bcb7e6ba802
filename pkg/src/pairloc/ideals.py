"""Ideal arithmetic with Groebner backing and monomial fast paths.

`Ideal` is the general carrier (sum, product, intersection, colon, saturation,
radical membership, Krull dimension of the quotient).  `MonomialIdeal` stores
exponent-vector generators as a divisibility antichain and answers colon,
radical, minimal primes, Assh, and dimension combinatorially; the two layers
deliberately share no decision code so they can cross-check each other.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .errors import PreconditionError, RingMismatchError
from .groebner import GroebnerBasis, buchberger, normal_form, _divides, _exp_sub, _exp_lcm
from .ring import Polynomial, RingSpec, elimination

_gb_cache = {}
_radical_cache = {}


def clear_caches():
    _gb_cache.clear()
    _radical_cache.clear()


class Ideal:
    """An ideal given by generators, with a write-once cached reduced GB."""

    __slots__ = ("ring", "gens", "_gb", "_hash")

    def __init__(self, ring: RingSpec, gens):
        self.ring = ring
        gens = tuple(gens)
        for g in gens:
            if g.ring != ring:
                raise RingMismatchError("generator over a different ring")
        if not gens:
            gens = (Polynomial.zero(ring),)
        self.gens = gens
        self._gb = None
        self._hash = None

    @staticmethod
    def zero(ring):
        return Ideal(ring, (Polynomial.zero(ring),))

    @staticmethod
    def unit(ring):
        return Ideal(ring, (Polynomial.one(ring),))

    def groebner(self) -> GroebnerBasis:
        if self._gb is None:
            key = (self.ring, frozenset(self.gens))
            gb = _gb_cache.get(key)
            if gb is None:
                gb = buchberger(self.gens, self.ring)
                _gb_cache[key] = gb
            self._gb = gb
        return self._gb

    def member(self, f: Polynomial) -> bool:
        if f.ring != self.ring:
            raise RingMismatchError("element over a different ring")
        return normal_form(f, list(self.groebner())).is_zero()

    def is_zero(self):
        return self.groebner().is_zero_ideal()

    def is_unit(self):
        return self.groebner().contains_one()

    def is_proper(self):
        return not self.is_unit()

    def normal_form(self, f: Polynomial) -> Polynomial:
        return normal_form(f, list(self.groebner()))

    def __eq__(self, other):
        if not isinstance(other, Ideal) or other.ring != self.ring:
            return NotImplemented
        return self.groebner().generators == other.groebner().generators

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring, self.groebner().generators))
        return self._hash

    def __str__(self):
        return "(" + ", ".join(str(g) for g in self.sorted_gens()) + ")"

    __repr__ = __str__

    def sorted_gens(self):
        """Generators sorted descending by leading monomial (zeros last)."""
        def key(g):
            if g.is_zero():
                return (0,)
            return (1, self.ring.sort_key(g.leading_exp()))
        return sorted(self.gens, key=key, reverse=True)

    # -- generator-level arithmetic ---------------------------------------

    def __add__(self, other):
        self._check(other)
        return Ideal(self.ring, self.gens + other.gens)

    def __mul__(self, other):
        self._check(other)
        return Ideal(self.ring, tuple(a * b for a in self.gens for b in other.gens))

    def power(self, n: int):
        if n < 0:
            raise ValueError("negative ideal power")
        result = Ideal.unit(self.ring)
        for _ in range(n):
            result = result * self
        return result

    def _check(self, other):
        if not isinstance(other, Ideal) or other.ring != self.ring:
            raise RingMismatchError("ideals over different rings")

    def as_monomial(self):
        """View as a MonomialIdeal; error if a generator is not a monomial."""
        exps = []
        for g in self.gens:
            if g.is_zero():
                continue
            if not g.is_monomial():
                raise PreconditionError(f"generator {g} is not a monomial")
            exps.append(g.leading_exp())
        return MonomialIdeal.from_exps(self.ring.nvars, exps)


# -- ring extension / permutation helpers -------------------------------------

def _fresh_name(ring, base="t"):
    name = base
    k = 0
    while name in ring.variables:
        k += 1
        name = f"{base}{k}"
    return name


def extended_ring(ring: RingSpec, extra: str):
    """Ring with one dominant extra variable (elimination order, extra first)."""
    return RingSpec(ring.char, (extra,) + ring.variables,
                    elimination(1, ring.nvars) if ring.nvars else ("grevlex",))


def lift_poly(f: Polynomial, big: RingSpec) -> Polynomial:
    return Polynomial(big, {(0,) + e: c for e, c in f.terms.items()}, _normalized=True)


def drop_first_var(f: Polynomial, small: RingSpec) -> Polynomial:
    terms = {}
    for e, c in f.terms.items():
        if e[0] != 0:
            raise ValueError("polynomial still involves the dropped variable")
        terms[e[1:]] = c
    return Polynomial(small, terms, _normalized=True)


def _permuted_ring(ring: RingSpec, perm, order):
    return RingSpec(ring.char, tuple(ring.variables[i] for i in perm), order)


def _permute_poly(f: Polynomial, target: RingSpec, perm):
    return Polynomial(target, {tuple(e[i] for i in perm): c for e, c in f.terms.items()},
                      _normalized=True)


# -- elimination-backed operations --------------------------------------------

def eliminate(A: Ideal, drop_vars) -> Ideal:
    """A intersected with the subring omitting drop_vars, as an ideal of the
    ambient ring whose generators do not involve the dropped variables."""
    ring = A.ring
    drop = {ring.var_index(v) if isinstance(v, str) else v for v in drop_vars}
    if not drop:
        return Ideal(ring, A.gens)
    keep = [i for i in range(ring.nvars) if i not in drop]
    perm = sorted(drop) + keep
    elim_ring = _permuted_ring(ring, perm, elimination(len(drop), len(keep))
                               if keep else ("grevlex",))
    gens = [_permute_poly(g, elim_ring, perm) for g in A.gens]
    gb = buchberger(gens, elim_ring)
    inv = [0] * ring.nvars
    for pos, i in enumerate(perm):
        inv[i] = pos
    kept = []
    for g in gb:
        if all(all(e[inv[i]] == 0 for i in drop) for e in g.terms):
            kept.append(_permute_poly(g, ring, inv))
    return Ideal(ring, kept)


def intersect(A: Ideal, B: Ideal) -> Ideal:
    """A ∩ B via a single auxiliary variable: eliminate t from t·A + (1−t)·B."""
    A._check(B)
    ring = A.ring
    name = _fresh_name(ring)
    big = extended_ring(ring, name)
    t = Polynomial.variable(big, name)
    one_minus_t = Polynomial.one(big) - t
    gens = [t * lift_poly(g, big) for g in A.gens]
    gens += [one_minus_t * lift_poly(g, big) for g in B.gens]
    gb = buchberger(gens, big)
    kept = [drop_first_var(g, ring) for g in gb if all(e[0] == 0 for e in g.terms)]
    return Ideal(ring, kept)


def exact_divide(f: Polynomial, b: Polynomial) -> Polynomial:
    """Quotient f/b; a nonzero remainder signals an internal bug upstream."""
    ring = f.ring
    q = Polynomial.zero(ring)
    lb, cb = b.leading_term()
    p = f
    while not p.is_zero():
        exp, c = p.leading_term()
        if not _divides(lb, exp):
            raise ArithmeticError("exact division failed; inexact dividend")
        t = Polynomial.monomial(ring, _exp_sub(exp, lb), c * ring.coeff_inv(cb))
        q = q + t
        p = p - t * b
    return q


def colon(A: Ideal, B: Ideal) -> Ideal:
    """(A : B), intersected elementwise over the generators of B."""
    A._check(B)
    result = None
    nonzero = [b for b in B.gens if not b.is_zero()]
    if not nonzero:
        return Ideal.unit(A.ring)
    for b in nonzero:
        inter = intersect(A, Ideal(A.ring, (b,)))
        part = Ideal(A.ring, [exact_divide(g, b) for g in inter.gens if not g.is_zero()])
        result = part if result is None else intersect(result, part)
    return result


def saturate(A: Ideal, B: Ideal) -> Ideal:
    """Stable value of the colon chain A ⊆ (A:B) ⊆ (A:B²) ⊆ …"""
    current = A
    while True:
        nxt = colon(current, B)
        if nxt == current:
            return current
        current = nxt


def radical_member(f: Polynomial, A: Ideal) -> bool:
    """f ∈ √A, by adjoining t and testing 1 ∈ A + (1 − t·f)."""
    if f.ring != A.ring:
        raise RingMismatchError("element over a different ring")
    if f.is_zero():
        return True
    key = (f, A.ring, frozenset(A.gens))
    hit = _radical_cache.get(key)
    if hit is not None:
        return hit
    ring = A.ring
    name = _fresh_name(ring)
    big = extended_ring(ring, name)
    t = Polynomial.variable(big, name)
    gens = [lift_poly(g, big) for g in A.gens]
    gens.append(Polynomial.one(big) - t * lift_poly(f, big))
    result = buchberger(gens, big).contains_one()
    _radical_cache[key] = result
    return result


def dim_quotient(A: Ideal) -> int:
    """Krull dimension of R/A via a maximal independent set of variables
    against the leading-term ideal; the unit ideal has dimension -1."""
    gb = A.groebner()
    if gb.contains_one():
        return -1
    n = A.ring.nvars
    supports = [frozenset(i for i, e in enumerate(g.leading_exp()) if e) for g in gb]
    for size in range(n, -1, -1):
        for S in combinations(range(n), size):
            sset = set(S)
            if not any(sup <= sset for sup in supports):
                return size
    return 0


# -- monomial combinatorics ---------------------------------------------------

@dataclass(frozen=True)
class FacePrime:
    """The prime generated by a subset of the ring variables (indices)."""

    vars: frozenset

    def to_ideal(self, ring: RingSpec) -> Ideal:
        if not self.vars:
            return Ideal.zero(ring)
        return Ideal(ring, tuple(Polynomial.variable(ring, ring.variables[i])
                                 for i in sorted(self.vars)))

    def contains_poly(self, f: Polynomial) -> bool:
        """Membership via normal forms: every term involves a variable of S."""
        return all(any(e[i] for i in self.vars) for e in f.terms)

    def sort_token(self):
        return tuple(sorted(self.vars))

    def label(self, ring: RingSpec) -> str:
        return "(" + ",".join(ring.variables[i] for i in sorted(self.vars)) + ")"


def _minimalize(exps):
    exps = sorted(set(map(tuple, exps)))
    return tuple(m for m in exps if not any(g != m and _divides(g, m) for g in exps))


def _min_covers(edges):
    """All inclusion-minimal vertex covers of a set of nonempty hyperedges."""
    edges = [frozenset(e) for e in edges]
    edges = [e for e in edges if not any(o < e for o in edges)]
    covers = set()

    def rec(chosen, remaining):
        if not remaining:
            covers.add(frozenset(chosen))
            return
        edge = remaining[0]
        for v in sorted(edge):
            rec(chosen | {v}, [r for r in remaining[1:] if v not in r])

    rec(frozenset(), edges)
    return sorted((c for c in covers if not any(o < c for o in covers)),
                  key=lambda c: (len(c), tuple(sorted(c))))


@dataclass(frozen=True)
class MonomialIdeal:
    """Minimal monomial generators as an antichain of exponent vectors."""

    nvars: int
    gens: tuple  # sorted antichain; () is the zero ideal

    @staticmethod
    def from_exps(nvars, exps) -> "MonomialIdeal":
        for e in exps:
            if len(e) != nvars:
                raise ValueError("exponent vector length mismatch")
        return MonomialIdeal(nvars, _minimalize(exps))

    @staticmethod
    def zero(nvars):
        return MonomialIdeal(nvars, ())

    @staticmethod
    def unit(nvars):
        return MonomialIdeal(nvars, ((0,) * nvars,))

    def is_zero(self):
        return not self.gens

    def is_unit(self):
        return self.gens == ((0,) * self.nvars,)

    def contains(self, exp) -> bool:
        return any(_divides(g, exp) for g in self.gens)

    def radical_contains(self, exp) -> bool:
        """exp ∈ √self iff some generator's support sits inside exp's support."""
        supp = frozenset(i for i, e in enumerate(exp) if e)
        return any(all(i in supp for i, e in enumerate(g) if e) for g in self.gens)

    def __add__(self, other):
        self._check(other)
        return MonomialIdeal.from_exps(self.nvars, self.gens + other.gens)

    def intersect(self, other) -> "MonomialIdeal":
        self._check(other)
        if self.is_zero() or other.is_zero():
            return MonomialIdeal.zero(self.nvars)
        return MonomialIdeal.from_exps(
            self.nvars, [_exp_lcm(a, b) for a in self.gens for b in other.gens])

    def colon_monomial(self, exp) -> "MonomialIdeal":
        """(self : x^exp) by the componentwise rule max(a-b, 0)."""
        return MonomialIdeal.from_exps(
            self.nvars, [tuple(max(a - b, 0) for a, b in zip(g, exp)) for g in self.gens])

    def colon(self, other) -> "MonomialIdeal":
        self._check(other)
        if other.is_zero():
            return MonomialIdeal.unit(self.nvars)
        result = None
        for b in other.gens:
            part = self.colon_monomial(b)
            result = part if result is None else result.intersect(part)
        return result

    def saturation(self, other) -> "MonomialIdeal":
        current = self
        while True:
            nxt = current.colon(other)
            if nxt == current:
                return current
            current = nxt

    def radical(self) -> "MonomialIdeal":
        return MonomialIdeal.from_exps(
            self.nvars, [tuple(min(e, 1) for e in g) for g in self.gens])

    def _edges(self):
        return [frozenset(i for i, e in enumerate(g) if e) for g in self.radical().gens]

    def min_primes(self):
        """Minimal primes as face primes: minimal vertex covers of the
        supports of the radical's generators."""
        if self.is_unit():
            raise PreconditionError("the unit ideal has no minimal primes")
        if self.is_zero():
            return (FacePrime(frozenset()),)
        return tuple(FacePrime(c) for c in _min_covers(self._edges()))

    def dim(self) -> int:
        if self.is_unit():
            return -1
        if self.is_zero():
            return self.nvars
        return self.nvars - min(len(c.vars) for c in self.min_primes())

    def assh(self):
        """Minimal primes of maximal dimension (= minimal cover size)."""
        primes = self.min_primes()
        least = min(len(p.vars) for p in primes)
        return tuple(p for p in primes if len(p.vars) == least)

    def to_ideal(self, ring: RingSpec) -> Ideal:
        if ring.nvars != self.nvars:
            raise RingMismatchError("ring has the wrong number of variables")
        if self.is_zero():
            return Ideal.zero(ring)
        return Ideal(ring, tuple(Polynomial.monomial(ring, g) for g in self.gens))

    def max_exponents(self):
        """Componentwise max over minimal generators (zero vector if none)."""
        box = [0] * self.nvars
        for g in self.gens:
            for i, e in enumerate(g):
                box[i] = max(box[i], e)
        return tuple(box)

    def _check(self, other):
        if not isinstance(other, MonomialIdeal) or other.nvars != self.nvars:
            raise RingMismatchError("monomial ideals with different variable counts")

    def __str__(self):
        if self.is_zero():
            return "monomial(0)"
        return "monomial(" + ", ".join(
            "*".join(f"e{i}^{e}" for i, e in enumerate(g) if e) or "1" for g in self.gens) + ")"
