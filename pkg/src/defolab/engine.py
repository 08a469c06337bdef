"""Buchberger engine over integer-packed monomials.

Polynomials enter as lists of (ocode, dcode, int) terms sorted by descending
ocode.  The ocode packs the weight rows of a term order into one integer so
order comparison is integer comparison; the dcode packs the exponent vector
into 16-bit fields with a guard bit per field so divisibility is one
subtraction and one mask.  Module terms carry their position in both codes;
a two-block position layout provides the elimination needed for syzygies.

Coefficients are arbitrary ints; every stored element is primitive (content
one, positive leading coefficient).  Reduction tracks the accumulated scale
factor so callers can recover exact rational normal forms.
"""

from __future__ import annotations

import heapq
import os
from fractions import Fraction
from math import gcd

DW = 16                     # bits per exponent field in dcode
OW = 32                     # bits per weight field in ocode
PB = 24                     # bits for the position priority field
FIELD_MAX = (1 << (DW - 1)) - 1

DEFAULT_STEP_CAP = 10 ** 7


class StepCapExceeded(RuntimeError):
    """Raised when a computation exhausts its reduction-step budget."""

    def __init__(self, steps):
        self.steps = steps
        super().__init__(
            f"reduction step cap of {steps} exceeded; rerun with a larger "
            f"cap (DEFOLAB_STEP_CAP or step_cap argument)")


def step_cap(explicit=None):
    if explicit is not None:
        return explicit
    env = os.environ.get("DEFOLAB_STEP_CAP")
    if env:
        return int(env)
    return DEFAULT_STEP_CAP


class Codec:
    """Packs monomials of one ring/order/rank context into integer codes."""

    __slots__ = ("nvars", "rank", "eblock", "rows", "nrows", "guards",
                 "pos_shift", "oc_top", "_shift_cache")

    def __init__(self, names, order, rank=1, eblock=0):
        self.nvars = n = len(names)
        self.rank = rank
        self.eblock = eblock
        self.rows = [tuple(r) for r in order.weight_rows(names)]
        self.nrows = len(self.rows)
        self.guards = sum(1 << (DW * i + DW - 1) for i in range(n))
        self.pos_shift = DW * n
        self.oc_top = OW * self.nrows + PB
        self._shift_cache = {}

    # -- encoding -------------------------------------------------------

    def dcode(self, expo, pos=0):
        d = pos << self.pos_shift
        for i, e in enumerate(expo):
            if e:
                if e > FIELD_MAX:
                    raise OverflowError(f"exponent {e} exceeds field capacity")
                d |= e << (DW * i)
        return d

    def mono_ocode(self, expo):
        o = 0
        for row in self.rows:
            o = (o << OW) | sum(w * e for w, e in zip(row, expo) if e)
        return o

    def ocode(self, expo, pos=0):
        # [block bit][order weight fields][position priority]; smaller
        # positions compare greater, the leading block dominates everything.
        o = self.mono_ocode(expo) << PB
        o |= (1 << PB) - 1 - pos
        if self.eblock and pos < self.eblock:
            o |= 1 << self.oc_top
        return o

    def encode(self, expo, pos=0):
        return self.ocode(expo, pos), self.dcode(expo, pos)

    def shift_codes(self, expo):
        """(ocode<<PB, dcode) of a ring monomial, for term multiplication."""
        key = tuple(expo)
        hit = self._shift_cache.get(key)
        if hit is None:
            hit = (self.mono_ocode(expo) << PB, self.dcode(expo))
            self._shift_cache[key] = hit
        return hit

    # -- decoding -------------------------------------------------------

    def expo(self, dc):
        mask = (1 << DW) - 1
        return tuple((dc >> (DW * i)) & mask for i in range(self.nvars))

    def position(self, dc):
        return dc >> self.pos_shift

    def degree(self, dc):
        mask = (1 << DW) - 1
        return sum((dc >> (DW * i)) & mask for i in range(self.nvars))

    def divides(self, da, db):
        """Whether the term with dcode da divides the one with dcode db."""
        if (da ^ db) >> self.pos_shift:
            return False
        g = self.guards
        return ((db | g) - da) & g == g


# -- raw polynomial helpers -------------------------------------------------

def strip_content(terms):
    if not terms:
        return terms, 1
    g = 0
    for t in terms:
        g = gcd(g, t[2])
        if g == 1:
            break
    if terms[0][2] < 0:
        g = -g
    if g == 1:
        return terms, 1
    return [(o, d, c // g) for (o, d, c) in terms], g


def merge_scaled(a, p, i0, b, q, j0, moc, mdc):
    """a*p[i0:] + b*(q[j0:] shifted by the ring monomial with codes moc, mdc)."""
    out = []
    push = out.append
    i, j = i0, j0
    np_, nq = len(p), len(q)
    while i < np_ and j < nq:
        po, pd, pc = p[i]
        qt = q[j]
        qo = qt[0] + moc
        if po > qo:
            push((po, pd, a * pc))
            i += 1
        elif po < qo:
            push((qo, qt[1] + mdc, b * qt[2]))
            j += 1
        else:
            c = a * pc + b * qt[2]
            if c:
                push((po, pd, c))
            i += 1
            j += 1
    while i < np_:
        po, pd, pc = p[i]
        push((po, pd, a * pc))
        i += 1
    while j < nq:
        qt = q[j]
        push((qt[0] + moc, qt[1] + mdc, b * qt[2]))
        j += 1
    return out


class _Budget:
    __slots__ = ("left", "cap")

    def __init__(self, cap):
        self.left = cap
        self.cap = cap

    def spend(self, k=1):
        self.left -= k
        if self.left < 0:
            raise StepCapExceeded(self.cap)


class Basis:
    """A reduction basis: elements plus a per-position divisor index."""

    __slots__ = ("codec", "elems", "sugars", "by_pos")

    def __init__(self, codec):
        self.codec = codec
        self.elems = []
        self.sugars = []
        self.by_pos = {}

    def __len__(self):
        return len(self.elems)

    def add(self, terms, sugar):
        idx = len(self.elems)
        self.elems.append(terms)
        self.sugars.append(sugar)
        pos = self.codec.position(terms[0][1])
        self.by_pos.setdefault(pos, []).append(idx)
        return idx

    def find_reducer(self, dc, skip=-1):
        pos = self.codec.position(dc)
        bucket = self.by_pos.get(pos)
        if not bucket:
            return -1
        guards = self.codec.guards
        dg = dc | guards
        elems = self.elems
        for idx in bucket:
            if idx == skip:
                continue
            if (dg - elems[idx][0][1]) & guards == guards:
                return idx
        return -1


def head_reduce(p, sugar, basis, budget, skip=-1):
    """Reduce the lead until irreducible or zero; returns (p, sugar, mult)."""
    mult = 1
    codec = basis.codec
    elems = basis.elems
    sugars = basis.sugars
    while p:
        idx = basis.find_reducer(p[0][1], skip)
        if idx < 0:
            break
        budget.spend()
        g = elems[idx]
        go, gd, gc = g[0]
        po, pd, pc = p[0]
        moc, mdc = po - go, pd - gd
        s = gcd(gc, pc)
        a, b = gc // s, -(pc // s)
        p = merge_scaled(a, p, 1, b, g, 1, moc, mdc)
        mult *= a
        qdeg = codec.degree(mdc)
        gs = sugars[idx] + qdeg
        if gs > sugar:
            sugar = gs
        p, c = strip_content(p)
        if c != 1:
            mult = Fraction(mult, c) if mult % c else mult // c
    return p, sugar, mult


def full_reduce(p, basis, budget):
    """Canonical normal form; returns terms with Fraction coefficients."""
    out = []
    mult = 1
    codec = basis.codec
    elems = basis.elems
    while p:
        idx = basis.find_reducer(p[0][1])
        if idx < 0:
            po, pd, pc = p[0]
            out.append((po, pd, Fraction(pc, 1) / mult))
            p = p[1:] if len(p) > 1 else []
            continue
        budget.spend()
        g = elems[idx]
        go, gd, gc = g[0]
        po, pd, pc = p[0]
        s = gcd(gc, pc)
        a, b = gc // s, -(pc // s)
        p = merge_scaled(a, p, 1, b, g, 1, po - go, pd - gd)
        mult *= a
        p, c = strip_content(p)
        if c != 1:
            mult = Fraction(mult, c) if mult % c else mult // c
    return out


# -- Buchberger --------------------------------------------------------------

def _pair_data(codec, ei, ej):
    di, dj = ei[0][1], ej[0][1]
    if (di ^ dj) >> codec.pos_shift:
        return None
    xi, xj = codec.expo(di), codec.expo(dj)
    lcm = tuple(a if a > b else b for a, b in zip(xi, xj))
    return lcm, xi, xj


def groebner_raw(gens, codec, cap=None, want_reduced=True):
    """Reduced module Groebner basis of integer-term generators.

    Returns a list of primitive integer-term polynomials sorted by
    ascending leading ocode.  Tails of a reduced basis may need rational
    scaling for monic presentation; callers handle that.
    """
    budget = _Budget(step_cap(cap))
    basis = Basis(codec)
    pairs = []
    counter = 0
    done = set()
    lcms = {}

    def add_element(terms, sugar):
        nonlocal counter
        new = len(basis)
        di = terms[0][1]
        for k in range(new):
            data = _pair_data(codec, basis.elems[k], terms)
            if data is None:
                continue
            lcm, xk, xn = data
            if codec.rank == 1 and all(a == 0 or b == 0 for a, b in zip(xk, xn)):
                done.add((k, new))      # coprime leads: S-poly reduces to zero
                continue
            ldeg = sum(lcm)
            sug = max(basis.sugars[k] + ldeg - sum(xk), sugar + ldeg - sum(xn))
            lcms[(k, new)] = lcm
            heapq.heappush(pairs, (sug, counter, k, new))
            counter += 1
        basis.add(terms, sugar)

    for terms in gens:
        if not terms:
            continue
        sugar = max(codec.degree(t[1]) for t in terms)
        terms, sugar, _ = head_reduce(terms, sugar, basis, budget)
        if terms:
            terms, _ = strip_content(terms)
            add_element(terms, sugar)

    while pairs:
        sug, _, i, j = heapq.heappop(pairs)
        key = (i, j)
        lcm = lcms.pop(key)
        done.add(key)
        if _chain_criterion(codec, basis, i, j, lcm, done, lcms):
            continue
        ei, ej = basis.elems[i], basis.elems[j]
        oi, di, ci = ei[0]
        oj, dj, cj = ej[0]
        mi = codec.shift_codes(tuple(a - b for a, b in
                                     zip(lcm, codec.expo(di))))
        mj = codec.shift_codes(tuple(a - b for a, b in
                                     zip(lcm, codec.expo(dj))))
        s = gcd(ci, cj)
        a, b = cj // s, -(ci // s)
        spoly = merge_scaled(0, [], 0, a, ei, 0, mi[0], mi[1])
        spoly = merge_scaled(1, spoly, 0, b, ej, 0, mj[0], mj[1])
        spoly, _ = strip_content(spoly)
        spoly, sugar, _ = head_reduce(spoly, sug, basis, budget)
        if spoly:
            spoly, _ = strip_content(spoly)
            add_element(spoly, sugar)

    if not want_reduced:
        return [basis.elems[i] for i in range(len(basis))]
    return _autoreduce(basis, budget)


def _chain_criterion(codec, basis, i, j, lcm, done, pending_lcms):
    lcm_dc = codec.dcode(lcm, codec.position(basis.elems[i][0][1]))
    guards = codec.guards
    dg = lcm_dc | guards
    pos = codec.position(lcm_dc)
    for k in basis.by_pos.get(pos, ()):
        if k == i or k == j:
            continue
        dk = basis.elems[k][0][1]
        if (dg - dk) & guards != guards:
            continue
        a = (k, i) if k < i else (i, k)
        b = (k, j) if k < j else (j, k)
        if a in done and b in done:
            return True
    return False


def _autoreduce(basis, budget):
    codec = basis.codec
    order = sorted(range(len(basis)), key=lambda i: basis.elems[i][0][0])
    kept = []
    for i in order:
        di = basis.elems[i][0][1]
        if not any(codec.divides(basis.elems[k][0][1], di) for k in kept):
            kept.append(i)
    reduced = Basis(codec)
    for i in kept:
        reduced.add(basis.elems[i], basis.sugars[i])
    changed = True
    while changed:
        changed = False
        for slot in range(len(reduced)):
            p = reduced.elems[slot]
            q = _tail_reduce(p, reduced, budget, skip=slot)
            if q != p:
                reduced.elems[slot] = q
                changed = True
    return [reduced.elems[i] for i in
            sorted(range(len(reduced)), key=lambda i: reduced.elems[i][0][0])]


def _tail_reduce(p, basis, budget, skip):
    # Lead is irreducible within a minimal basis; normalise the tail.
    head = [p[0]]
    rest = p[1:]
    mult = 1
    while rest:
        idx = basis.find_reducer(rest[0][1], skip)
        if idx < 0:
            head.append(rest[0])
            rest = rest[1:]
            continue
        budget.spend()
        g = basis.elems[idx]
        go, gd, gc = g[0]
        po, pd, pc = rest[0]
        s = gcd(gc, pc)
        a, b = gc // s, -(pc // s)
        if a != 1:
            head = [(o, d, c * a) for (o, d, c) in head]
            mult *= a
        rest = merge_scaled(a, rest, 1, b, g, 1, po - go, pd - gd)
    out, _ = strip_content(head)
    return out


# -- syzygies ----------------------------------------------------------------

def syzygy_raw(tagged, untagged, names, order, rank, cap=None):
    """Syzygy-style elimination:  relations among `tagged` modulo the
    module generated by `untagged`.

    `tagged` and `untagged` are vectors over positions 0..rank-1 given as
    lists of (expo, pos, int) triples.  The i-th tagged vector receives a
    tag at position rank+i; basis elements supported purely on tags give
    exactly the coefficient vectors c with sum(c_i * tagged_i) in the
    untagged submodule.  Returned as lists of (expo, pos, int) with tag
    positions renumbered from 0.
    """
    m = len(tagged)
    codec = Codec(names, order, rank=rank + m, eblock=rank)
    gens = []
    for i, vec in enumerate(tagged):
        terms = [(codec.ocode(e, p), codec.dcode(e, p), c) for (e, p, c) in vec]
        tag = ((0,) * codec.nvars, rank + i, 1)
        terms.append((codec.ocode(tag[0], tag[1]), codec.dcode(tag[0], tag[1]), 1))
        terms.sort(key=lambda t: -t[0])
        gens.append(terms)
    for vec in untagged:
        terms = [(codec.ocode(e, p), codec.dcode(e, p), c) for (e, p, c) in vec]
        terms.sort(key=lambda t: -t[0])
        gens.append(terms)
    gb = groebner_raw(gens, codec, cap)
    out = []
    for terms in gb:
        if codec.position(terms[0][1]) >= rank:
            out.append([(codec.expo(d), codec.position(d) - rank, c)
                        for (o, d, c) in terms])
    return out


# -- staircase counting -------------------------------------------------------

def _minimalize_monomials(leads):
    out = []
    for e in sorted(set(leads), key=sum):
        if not any(all(a <= b for a, b in zip(f, e)) for f in out):
            out.append(e)
    return out


def count_standard_monomials(leads, nvars):
    """Number of monomials outside the monomial ideal, or None if infinite.

    Recursive slicing on the last variable: the slices at exponent x
    stabilise beyond the largest last-variable exponent among the leads,
    so the count is finite exactly when the stable slice is empty.
    """
    leads = _minimalize_monomials(leads)

    def count(ls, n):
        if not ls:
            return None if n > 0 else 1
        if n == 0:
            return 0            # the lead 1 is present
        top = max(e[n - 1] for e in ls)
        total = 0
        for x in range(top + 1):
            sl = _minimalize_monomials([e[:n - 1] for e in ls if e[n - 1] <= x])
            c = count(sl, n - 1)
            if x == top:
                return None if (c is None or c > 0) else total
            if c is None:
                return None
            total += c
        return total

    return count(leads, nvars)


def standard_monomials_by_degree(leads, weights, bound):
    """Counts of standard monomials in weighted degrees 0..bound."""
    nvars = len(weights)
    counts = [0] * (bound + 1)
    expo = [0] * nvars

    def rec(i, wdeg):
        if i == nvars:
            if not any(all(expo[j] >= e[j] for j in range(nvars))
                       for e in leads):
                counts[wdeg] += 1
            return
        x = 0
        while wdeg + x * weights[i] <= bound:
            expo[i] = x
            rec(i + 1, wdeg + x * weights[i])
            x += 1
        expo[i] = 0

    rec(0, 0)
    return counts
