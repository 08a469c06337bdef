"""Free-module machinery: syzygies, module membership, module quotients."""

from __future__ import annotations

import math
from fractions import Fraction

from . import engine
from .engine import Codec
from .groebner import INFINITE, _lcm
from .ring import Polynomial


class ContainmentError(ValueError):
    """The denominator module is not contained in the numerator module."""


class ModuleVector:
    """An element of a free module: a fixed-length tuple of polynomials."""

    __slots__ = ("ring", "coords")

    def __init__(self, ring, coords):
        coords = tuple(coords)
        for c in coords:
            if c.ring != ring:
                raise ValueError("coordinate from a different ring")
        self.ring = ring
        self.coords = coords

    @property
    def rank(self):
        return len(self.coords)

    def __getitem__(self, i):
        return self.coords[i]

    def __iter__(self):
        return iter(self.coords)

    def __eq__(self, other):
        return (isinstance(other, ModuleVector) and self.ring == other.ring
                and self.coords == other.coords)

    def __hash__(self):
        return hash((self.ring, self.coords))

    def __add__(self, other):
        return ModuleVector(self.ring,
                            [a + b for a, b in zip(self.coords, other.coords)])

    def __sub__(self, other):
        return ModuleVector(self.ring,
                            [a - b for a, b in zip(self.coords, other.coords)])

    def __mul__(self, p):
        return ModuleVector(self.ring, [p * a for a in self.coords])

    __rmul__ = __mul__

    def __neg__(self):
        return ModuleVector(self.ring, [-a for a in self.coords])

    def is_zero(self):
        return all(c.is_zero() for c in self.coords)

    def dot(self, polys):
        """sum(coords[i] * polys[i]); exact-zero test drives syzygy checks."""
        total = self.ring.zero()
        for c, p in zip(self.coords, polys):
            total = total + c * p
        return total

    def __repr__(self):
        return "(" + ", ".join(str(c) for c in self.coords) + ")"


class SyzygyModule:
    """Generators of the relation module of a list of polynomials."""

    __slots__ = ("ring", "rank", "generators")

    def __init__(self, ring, rank, generators):
        self.ring = ring
        self.rank = rank
        self.generators = tuple(generators)
        for v in self.generators:
            if v.rank != rank:
                raise ValueError("syzygy rank mismatch")

    def __len__(self):
        return len(self.generators)

    def __iter__(self):
        return iter(self.generators)

    def verify(self, polys):
        """Every generator must pair to exactly zero against `polys`."""
        return all(v.dot(polys).is_zero() for v in self.generators)


def _vector_to_triples(vec):
    """(expo, pos, int) triples and the integer scale cleared from v."""
    scale = 1
    for p in vec.coords:
        for c in p.terms.values():
            scale = _lcm(scale, c.denominator)
    triples = []
    for pos, p in enumerate(vec.coords):
        for e, c in p.terms.items():
            triples.append((e, pos, int(c * scale)))
    return triples, scale


def _triples_to_vector(triples, ring, rank, scale=1):
    data = [{} for _ in range(rank)]
    for e, pos, c in triples:
        data[pos][e] = Fraction(c, scale) if scale != 1 else Fraction(c)
    return ModuleVector(ring, [Polynomial(ring, d) for d in data])


def syzygy_module(gens, cap=None):
    """The full first syzygy module of a nonempty generator list."""
    gens = list(gens)
    if not gens:
        raise ValueError("syzygies of an empty generator list")
    ring = gens[0].ring
    tagged = []
    scales = []
    for g in gens:
        vec = ModuleVector(ring, [g])
        triples, scale = _vector_to_triples(vec)
        tagged.append(triples)
        scales.append(scale)
    raw = engine.syzygy_raw(tagged, [], ring.names, ring.order, 1, cap)
    out = []
    k = len(gens)
    for triples in raw:
        vec = _triples_to_vector(triples, ring, k)
        # tags tracked scale*g, so scale the coordinates back onto g itself
        vec = ModuleVector(ring, [c * scales[i] for i, c in enumerate(vec.coords)])
        out.append(_normalized(vec))
    return SyzygyModule(ring, k, out)


def _normalized(vec):
    den = 1
    num = 0
    for p in vec.coords:
        for c in p.terms.values():
            den = _lcm(den, c.denominator)
            num = math.gcd(num, c.numerator)
    if den == 1 and num in (0, 1):
        return vec
    factor = Fraction(den, num) if num else Fraction(den)
    return ModuleVector(vec.ring, [p * factor for p in vec.coords])


class ModuleBasis:
    """Engine Groebner basis of a submodule of a free module."""

    __slots__ = ("ring", "rank", "_codec", "_basis")

    def __init__(self, ring, rank, vectors, cap=None):
        self.ring = ring
        self.rank = rank
        codec = Codec(ring.names, ring.order, rank=rank)
        gens = []
        for v in vectors:
            triples, _ = _vector_to_triples(v)
            terms = [(codec.ocode(e, p), codec.dcode(e, p), c)
                     for (e, p, c) in triples]
            terms.sort(key=lambda t: -t[0])
            if terms:
                gens.append(terms)
        self._codec = codec
        raw = engine.groebner_raw(gens, codec, cap)
        basis = engine.Basis(codec)
        for terms in raw:
            basis.add(terms, max(codec.degree(t[1]) for t in terms))
        self._basis = basis

    def normal_form(self, vec, cap=None):
        triples, scale = _vector_to_triples(vec)
        codec = self._codec
        terms = [(codec.ocode(e, p), codec.dcode(e, p), c)
                 for (e, p, c) in triples]
        terms.sort(key=lambda t: -t[0])
        budget = engine._Budget(engine.step_cap(cap))
        red = engine.full_reduce(terms, self._basis, budget)
        out = [(codec.expo(dc), codec.position(dc), c / scale)
               for _, dc, c in red]
        data = [{} for _ in range(self.rank)]
        for e, pos, c in out:
            data[pos][e] = c
        return ModuleVector(self.ring, [Polynomial(self.ring, d) for d in data])

    def contains(self, vec, cap=None):
        return self.normal_form(vec, cap).is_zero()


def module_membership(vec, syz, cap=None):
    """Whether `vec` lies in the submodule generated by `syz`."""
    if isinstance(syz, SyzygyModule):
        rank, gens, ring = syz.rank, syz.generators, syz.ring
    else:
        gens = list(syz)
        rank, ring = gens[0].rank, gens[0].ring
    if vec.rank != rank:
        raise ValueError("rank mismatch")
    return ModuleBasis(ring, rank, gens, cap).contains(vec, cap)


def kernel_mod_ideal(rows, ideal_gb_polys, rank, cap=None):
    """Vectors phi with sum(phi_i * rows_i) in I * R^rank.

    `rows` are module vectors of the given rank; the ideal enters through
    any generating set (a Groebner basis keeps reductions short).  The
    result generates the full kernel, including I times the free module.
    """
    if not rows:
        return []
    ring = rows[0].ring
    if rank == 0:
        # no conditions: the kernel is everything
        k = len(rows)
        basis = []
        for i in range(k):
            coords = [ring.zero()] * k
            coords[i] = ring.one()
            basis.append(ModuleVector(ring, coords))
        return basis
    tagged = []
    scales = []
    for v in rows:
        triples, scale = _vector_to_triples(v)
        tagged.append(triples)
        scales.append(scale)
    untagged = []
    for g in ideal_gb_polys:
        triples, _ = _vector_to_triples(ModuleVector(ring, [g]))
        for j in range(rank):
            untagged.append([(e, j, c) for (e, _, c) in triples])
    raw = engine.syzygy_raw(tagged, untagged, ring.names, ring.order, rank, cap)
    k = len(rows)
    out = []
    for triples in raw:
        vec = _triples_to_vector(triples, ring, k)
        vec = ModuleVector(ring, [c * scales[i] for i, c in enumerate(vec.coords)])
        out.append(_normalized(vec))
    return out


def module_quotient_dim(numerator, denominator, cap=None):
    """Vector-space dimension of N/D for submodules D <= N of a free module.

    Presents N by its generators and counts standard monomials of the
    presentation kernel; raises ContainmentError if D is not inside N.
    """
    n_gens = list(numerator)
    d_gens = list(denominator)
    if not n_gens:
        raise ValueError("numerator module needs at least one generator")
    ring = n_gens[0].ring
    rank = n_gens[0].rank
    nb = ModuleBasis(ring, rank, n_gens, cap)
    for v in d_gens:
        if not nb.contains(v, cap):
            raise ContainmentError(f"denominator generator {v!r} is not in "
                                   f"the numerator module")
    tagged = []
    for v in n_gens:
        triples, _ = _vector_to_triples(v)
        tagged.append(triples)
    untagged = []
    for v in d_gens:
        triples, _ = _vector_to_triples(v)
        untagged.append(triples)
    raw = engine.syzygy_raw(tagged, untagged, ring.names, ring.order, rank, cap)
    p = len(n_gens)
    leads = [[] for _ in range(p)]
    for triples in raw:
        e, pos, _ = triples[0]
        leads[pos].append(e)
    total = 0
    for pos in range(p):
        if not leads[pos]:
            return INFINITE
        c = engine.count_standard_monomials(leads[pos], ring.nvars)
        if c is None:
            return INFINITE
        total += c
    return total
