"""Decision procedures for the support family of an ideal pair.

`w_member` decides whether a prime (or, literally, any proper ideal) p
satisfies: some power of I lies in J + p.  Since I is finitely generated this
reduces to radical membership of each generator of I in J + p.  `wtilde_member`
is the analogous test for the directed family of ideals a with some power of I
inside a + J.  `s_certificate` searches for an explicit element a^n + j of the
multiplicative set attached to (a, J) inside a given prime; it is a bounded
semi-decision, "none" means not found within the bounds.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .errors import PreconditionError
from .ideals import Ideal, radical_member
from .ring import Polynomial


@dataclass(frozen=True)
class PairSpec:
    """The ordered pair of ideals (I, J), stored exactly as given."""

    I: Ideal
    J: Ideal

    def __post_init__(self):
        self.I._check(self.J)

    @property
    def ring(self):
        return self.I.ring


def w_member(p: Ideal, pair: PairSpec) -> bool:
    """True iff every generator of I is in the radical of J + p.

    For prime p this is exactly membership of p in the pair's support family;
    for non-prime p it is the literal truth value of the same condition.
    """
    p._check(pair.I)
    if p.is_unit():
        raise PreconditionError("w_member requires a proper ideal")
    target = pair.J + p
    return all(radical_member(g, target) for g in pair.I.gens)


def wtilde_member(a: Ideal, pair: PairSpec) -> bool:
    """True iff every generator of I is in the radical of a + J."""
    a._check(pair.I)
    target = a + pair.J
    return all(radical_member(g, target) for g in pair.I.gens)


def s_zero(a: Polynomial, J: Ideal) -> bool:
    """Whether the multiplicative set {a^n + j} contains 0, i.e. a ∈ √J."""
    return radical_member(a, J)


@dataclass(frozen=True)
class SCertificate:
    """An explicit witness a^n + j ∈ p with j an explicit J-combination."""

    n: int
    j: Polynomial
    coefficients: tuple  # the combination coefficients against J's generators
    n_max: int           # search bounds the certificate was found within
    degree_cap: int


def s_certificate(p: Ideal, a: Polynomial, J: Ideal, n_max: int = 4,
                  coeff_pool=(), degree_cap: int = 2,
                  max_combinations: int = 200000):
    """Bounded search for an element of the multiplicative set of (a, J)
    lying in p.  Returns the first certificate found in a deterministic scan
    over powers n ≤ n_max and combinations j = Σ c_k·g_k with c_k drawn from
    {0, ±1} ∪ coeff_pool ∪ monomials of total degree ≤ degree_cap, or None.
    """
    if n_max < 1:
        raise PreconditionError("n_max must be at least 1")
    ring = p.ring
    one = Polynomial.one(ring)
    candidates = [Polynomial.zero(ring), one, -one]
    candidates.extend(coeff_pool)
    for exp in sorted(_exponents_up_to(ring.nvars, degree_cap)):
        if any(exp):
            candidates.append(Polynomial.monomial(ring, exp))
    seen = set()
    pool = []
    for c in candidates:
        if c not in seen:
            seen.add(c)
            pool.append(c)

    gens = [g for g in J.gens if not g.is_zero()]
    combos = 0
    for n in range(1, n_max + 1):
        a_n = a ** n
        for coeffs in product(pool, repeat=len(gens)):
            combos += 1
            if combos > max_combinations:
                return None
            j = Polynomial.zero(ring)
            for c, g in zip(coeffs, gens):
                j = j + c * g
            if p.member(a_n + j):
                cert = SCertificate(n, j, coeffs, n_max, degree_cap)
                # re-verify both defining properties of the certificate
                assert p.member(a_n + cert.j) and J.member(cert.j)
                return cert
    return None


def _exponents_up_to(nvars, cap):
    if nvars == 0:
        return [()]
    out = []
    for head in range(cap + 1):
        for tail in _exponents_up_to(nvars - 1, cap - head):
            out.append((head,) + tail)
    return out
