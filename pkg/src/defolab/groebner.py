"""Ideals: Groebner bases, normal forms, membership, elimination, saturation,
quotient dimensions.
"""

from __future__ import annotations

import math
from fractions import Fraction

from . import engine
from .engine import Codec, StepCapExceeded  # re-exported
from .orders import block, degrevlex, wdegrevlex
from .ring import Polynomial, PolyRing

INFINITE = math.inf


def _lcm(a, b):
    return a * b // math.gcd(a, b)


def to_int_terms(p, codec, pos=0):
    """Engine form of a polynomial: (sorted int terms, integer scale) with
    terms == scale * p."""
    scale = 1
    for c in p.terms.values():
        scale = _lcm(scale, c.denominator)
    terms = [(codec.ocode(e, pos), codec.dcode(e, pos),
              int(c * scale)) for e, c in p.terms.items()]
    terms.sort(key=lambda t: -t[0])
    return terms, scale


def from_rational_terms(terms, ring, codec):
    data = {}
    for _, dc, c in terms:
        data[codec.expo(dc)] = c
    return Polynomial(ring, data)


class GroebnerBasis:
    """A reduced Groebner basis with its engine-side reduction structure."""

    __slots__ = ("ring", "order", "polys", "_codec", "_basis")

    def __init__(self, ring, order, raw, codec):
        self.ring = ring
        self.order = order
        self._codec = codec
        basis = engine.Basis(codec)
        polys = []
        for terms in raw:
            basis.add(terms, max(codec.degree(t[1]) for t in terms))
            lc = terms[0][2]
            data = {codec.expo(dc): Fraction(c, lc) for _, dc, c in terms}
            polys.append(Polynomial(ring, data))
        self.polys = tuple(polys)
        self._basis = basis

    def __len__(self):
        return len(self.polys)

    def __iter__(self):
        return iter(self.polys)

    def leading_exponents(self):
        return [self._codec.expo(e[0][1]) for e in self._basis.elems]

    def normal_form(self, p, cap=None):
        if p.ring != self.ring:
            raise ValueError("polynomial from a different ring")
        terms, scale = to_int_terms(p, self._codec)
        budget = engine._Budget(engine.step_cap(cap))
        red = engine.full_reduce(terms, self._basis, budget)
        data = {self._codec.expo(dc): c / scale for _, dc, c in red}
        return Polynomial(self.ring, data)

    def contains(self, p, cap=None):
        return self.normal_form(p, cap).is_zero()

    def is_one(self):
        return len(self.polys) == 1 and self.polys[0] == self.ring.one()


class Ideal:
    """An ideal given by generators, with cached reduced Groebner bases."""

    __slots__ = ("ring", "gens", "_cache")

    def __init__(self, ring, gens):
        gens = tuple(gens)
        for g in gens:
            if g.ring != ring:
                raise ValueError("generator from a different ring")
        self.ring = ring
        self.gens = gens
        self._cache = {}

    def __repr__(self):
        return f"Ideal({', '.join(str(g) for g in self.gens)})"

    def groebner(self, order=None, cap=None):
        order = order or self.ring.order
        key = tuple(order.weight_rows(self.ring.names))
        gb = self._cache.get(key)
        if gb is None:
            codec = Codec(self.ring.names, order)
            raw_gens = [to_int_terms(g, codec)[0] for g in self.gens if g]
            raw = engine.groebner_raw(raw_gens, codec, cap)
            gb = GroebnerBasis(self.ring, order, raw, codec)
            self._cache[key] = gb
        return gb

    def normal_form(self, p, order=None, cap=None):
        return self.groebner(order, cap).normal_form(p, cap)

    def contains(self, p, order=None, cap=None):
        return self.normal_form(p, order, cap).is_zero()

    def contains_ideal(self, other, cap=None):
        gb = self.groebner(cap=cap)
        return all(gb.contains(g, cap) for g in other.gens)

    def equals(self, other, cap=None):
        return self.contains_ideal(other, cap) and other.contains_ideal(self, cap)

    def is_zero(self):
        return all(g.is_zero() for g in self.gens)

    def __add__(self, other):
        if isinstance(other, Ideal):
            return Ideal(self.ring, self.gens + other.gens)
        return Ideal(self.ring, self.gens + (other,))

    # -- elimination-based operations ------------------------------------

    def eliminate(self, names, cap=None):
        """Generators of the intersection with the subring without `names`."""
        names = [n for n in names]
        for n in names:
            if n not in self.ring.index:
                raise ValueError(f"unknown variable {n!r}")
        if not names:
            return self
        order = block(names, degrevlex())
        gb = self.groebner(order, cap)
        small = self.ring.drop(names)
        kept = []
        drop_idx = [self.ring.index[n] for n in names]
        for p in gb.polys:
            if all(all(e[i] == 0 for i in drop_idx) for e in p.terms):
                kept.append(p.moved_to(small))
        return Ideal(small, kept)

    def saturate(self, p, cap=None):
        """The stable quotient I : p^infinity via an auxiliary inverse."""
        if not isinstance(p, Polynomial) or p.is_zero():
            raise ValueError("saturation requires a nonzero polynomial")
        aux = "_w"
        while aux in self.ring.index:
            aux = aux + "_"
        big = self.ring.extend([aux])
        gens = [g.moved_to(big) for g in self.gens]
        gens.append(big.one() - big.var(aux) * p.moved_to(big))
        sat = Ideal(big, gens).eliminate([aux], cap)
        gens = [g.moved_to(self.ring) for g in sat.gens]
        return Ideal(self.ring, gens)

    def intersect(self, other, cap=None):
        if other.ring != self.ring:
            raise ValueError("ideals from different rings")
        aux = "_t"
        while aux in self.ring.index:
            aux = aux + "_"
        big = self.ring.extend([aux])
        t = big.var(aux)
        gens = [t * g.moved_to(big) for g in self.gens]
        gens += [(big.one() - t) * g.moved_to(big) for g in other.gens]
        met = Ideal(big, gens).eliminate([aux], cap)
        return Ideal(self.ring, [g.moved_to(self.ring) for g in met.gens])

    # -- dimensions --------------------------------------------------------

    def quotient_dim(self, order=None, cap=None):
        """Vector-space dimension of ring/ideal: a natural number or INFINITE."""
        gb = self.groebner(order, cap)
        if gb.is_one():
            return 0
        n = engine.count_standard_monomials(gb.leading_exponents(),
                                            self.ring.nvars)
        return INFINITE if n is None else n

    def hilbert_truncated(self, bound, weights=None, cap=None):
        """Dimensions of (ring/ideal) in weighted degrees 0..bound.

        Exact for weighted-homogeneous generators; otherwise the counts are
        those of the total-degree filtration under a degree-compatible order.
        """
        if weights is None:
            weights = (1,) * self.ring.nvars
            order = degrevlex()
        else:
            order = wdegrevlex(weights)
        gb = self.groebner(order, cap)
        return engine.standard_monomials_by_degree(gb.leading_exponents(),
                                                   tuple(weights), bound)


def poly_divmod(p, divisors, order=None):
    """Multivariate division: quotients and remainder against a list.

    Plain API-level division (no basis completion); the remainder is only
    canonical when the divisors form a Groebner basis.
    """
    ring = p.ring
    order = order or ring.order
    rows = order.weight_rows(ring.names)

    def key(e):
        return tuple(sum(w * x for w, x in zip(row, e)) for row in rows)

    leads = []
    for d in divisors:
        if d.is_zero():
            raise ZeroDivisionError("zero divisor")
        e = max(d.terms, key=key)
        leads.append((e, d.terms[e]))
    quot = [ring.zero() for _ in divisors]
    rem = ring.zero()
    work = p
    while work:
        e = max(work.terms, key=key)
        c = work.terms[e]
        for i, (le, lc) in enumerate(leads):
            if all(a >= b for a, b in zip(e, le)):
                q = ring.monomial(tuple(a - b for a, b in zip(e, le)), c / lc)
                quot[i] = quot[i] + q
                work = work - q * divisors[i]
                break
        else:
            t = ring.monomial(e, c)
            rem = rem + t
            work = work - t
    return quot, rem


def groebner_with_transform(gens, order=None, cap=None):
    """Buchberger with representation tracking.

    Returns (basis, transform) where transform[j] expresses basis[j] as a
    combination of the input generators.  Slow; intended for membership
    witnesses on small inputs.
    """
    if not gens:
        return [], []
    ring = gens[0].ring
    order = order or ring.order
    rows = order.weight_rows(ring.names)

    def key(e):
        return tuple(sum(w * x for w, x in zip(row, e)) for row in rows)

    def lead(p):
        e = max(p.terms, key=key)
        return e, p.terms[e]

    basis, reps = [], []

    def reduce_tracked(p, rep):
        changed = True
        while p and changed:
            changed = False
            e, c = lead(p)
            for g, grep in zip(basis, reps):
                ge, gc = lead(g)
                if all(a >= b for a, b in zip(e, ge)):
                    q = ring.monomial(tuple(a - b for a, b in zip(e, ge)), c / gc)
                    p = p - q * g
                    rep = [r - q * gr for r, gr in zip(rep, grep)]
                    changed = True
                    break
        return p, rep

    k = len(gens)
    unit = [ring.zero()] * k
    pairs = []
    for i, g in enumerate(gens):
        rep = list(unit)
        rep[i] = ring.one()
        p, rep = reduce_tracked(g, rep)
        if p:
            pairs += [(len(basis), j) for j in range(len(basis))]
            basis.append(p)
            reps.append(rep)
    steps = 0
    limit = engine.step_cap(cap)
    while pairs:
        i, j = pairs.pop(0)
        ei, ci = lead(basis[i])
        ej, cj = lead(basis[j])
        lcm = tuple(max(a, b) for a, b in zip(ei, ej))
        mi = ring.monomial(tuple(a - b for a, b in zip(lcm, ei)), Fraction(1, 1) / ci)
        mj = ring.monomial(tuple(a - b for a, b in zip(lcm, ej)), Fraction(1, 1) / cj)
        s = mi * basis[i] - mj * basis[j]
        rep = [mi * a - mj * b for a, b in zip(reps[i], reps[j])]
        s, rep = reduce_tracked(s, rep)
        steps += 1
        if steps > limit:
            raise StepCapExceeded(limit)
        if s:
            pairs += [(len(basis), t) for t in range(len(basis))]
            basis.append(s)
            reps.append(rep)
    return basis, reps


def membership_witness(p, ideal, cap=None):
    """Coefficients q with p == sum(q_i * g_i), or None if p is not a member."""
    basis, reps = groebner_with_transform(list(ideal.gens), cap=cap)
    quot, rem = poly_divmod(p, basis) if basis else ([], p)
    if not rem.is_zero():
        return None
    ring = p.ring
    witness = [ring.zero()] * len(ideal.gens)
    for a, rep in zip(quot, reps):
        if a.is_zero():
            continue
        witness = [w + a * r for w, r in zip(witness, rep)]
    return witness
