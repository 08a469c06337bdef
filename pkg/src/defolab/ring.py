"""Sparse multivariate polynomials with exact rational coefficients.

A ring is an ordered tuple of variable names plus a default term order;
polynomials are immutable maps from exponent tuples to Fractions with no
zero values stored.
"""

from __future__ import annotations

from fractions import Fraction

from .orders import degrevlex

MAX_EXPONENT = 16383  # engine packs exponents into 16-bit fields


class ParseError(ValueError):
    """Syntax or name error in polynomial text, with its position."""

    def __init__(self, message, text, pos):
        self.pos = pos
        super().__init__(f"{message} at position {pos}: {text!r}")


class PolyRing:
    __slots__ = ("names", "index", "order")

    def __init__(self, names, order=None):
        self.names = tuple(names)
        if len(set(self.names)) != len(self.names):
            raise ValueError("duplicate variable names")
        self.index = {v: i for i, v in enumerate(self.names)}
        self.order = order if order is not None else degrevlex()

    def __repr__(self):
        return f"PolyRing({', '.join(self.names)})"

    def __eq__(self, other):
        return isinstance(other, PolyRing) and self.names == other.names

    def __hash__(self):
        return hash(self.names)

    @property
    def nvars(self):
        return len(self.names)

    def zero(self):
        return Polynomial(self, {})

    def one(self):
        return self.const(1)

    def const(self, c):
        c = Fraction(c)
        if c == 0:
            return Polynomial(self, {})
        return Polynomial(self, {(0,) * self.nvars: c})

    def var(self, name):
        e = [0] * self.nvars
        e[self.index[name]] = 1
        return Polynomial(self, {tuple(e): Fraction(1)})

    def gens(self):
        return [self.var(v) for v in self.names]

    def monomial(self, expo, coeff=1):
        expo = tuple(expo)
        if len(expo) != self.nvars:
            raise ValueError("exponent length mismatch")
        c = Fraction(coeff)
        return Polynomial(self, {expo: c} if c else {})

    def poly(self, terms):
        data = {}
        for expo, c in terms.items():
            c = Fraction(c)
            if c:
                data[tuple(expo)] = c
        return Polynomial(self, data)

    def extend(self, extra, order=None):
        """A ring with `extra` variables appended."""
        return PolyRing(self.names + tuple(extra), order or self.order)

    def drop(self, names, order=None):
        """A ring with the listed variables removed."""
        gone = set(names)
        return PolyRing([v for v in self.names if v not in gone],
                        order or self.order)

    def parse(self, text):
        return _parse(self, text)

    def sort_key(self):
        """Monomial sort key under the ring's default order."""
        rows = self.order.weight_rows(self.names)

        def key(expo):
            return tuple(sum(w * e for w, e in zip(row, expo)) for row in rows)

        return key


class Polynomial:
    """Immutable sparse polynomial over Fraction coefficients."""

    __slots__ = ("ring", "terms", "_hash")

    def __init__(self, ring, terms):
        self.ring = ring
        self.terms = terms
        self._hash = None

    # -- basic queries -------------------------------------------------

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def total_degree(self):
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def weighted_degree(self, weights):
        if not self.terms:
            return -1
        return max(sum(w * x for w, x in zip(weights, e)) for e in self.terms)

    def is_homogeneous(self, weights=None):
        if not self.terms:
            return True
        if weights is None:
            weights = (1,) * self.ring.nvars
        degs = {sum(w * x for w, x in zip(weights, e)) for e in self.terms}
        return len(degs) == 1

    def variables(self):
        """Names of variables actually occurring."""
        seen = [False] * self.ring.nvars
        for e in self.terms:
            for i, x in enumerate(e):
                if x:
                    seen[i] = True
        return {v for v, s in zip(self.ring.names, seen) if s}

    def constant_term(self):
        return self.terms.get((0,) * self.ring.nvars, Fraction(0))

    def coefficient(self, expo):
        return self.terms.get(tuple(expo), Fraction(0))

    def sorted_terms(self, reverse=True):
        key = self.ring.sort_key()
        return sorted(self.terms.items(), key=lambda t: key(t[0]), reverse=reverse)

    def leading_term(self):
        """(exponent, coefficient) maximal under the ring's default order."""
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        key = self.ring.sort_key()
        e = max(self.terms, key=key)
        return e, self.terms[e]

    # -- arithmetic -----------------------------------------------------

    def _check(self, other):
        if self.ring != other.ring:
            raise ValueError("polynomials from different rings")

    def __add__(self, other):
        if not isinstance(other, Polynomial):
            other = self.ring.const(other)
        self._check(other)
        res = dict(self.terms)
        for e, c in other.terms.items():
            s = res.get(e)
            if s is None:
                res[e] = c
            elif s == -c:
                del res[e]
            else:
                res[e] = s + c
        return Polynomial(self.ring, res)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(self.ring, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, Polynomial):
            other = self.ring.const(other)
        return self + (-other)

    def __rsub__(self, other):
        return self.ring.const(other) + (-self)

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            c = Fraction(other)
            if not c:
                return self.ring.zero()
            return Polynomial(self.ring, {e: c * v for e, v in self.terms.items()})
        self._check(other)
        if len(self.terms) > len(other.terms):
            self, other = other, self
        res = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                s = res.get(e)
                if s is None:
                    res[e] = c1 * c2
                else:
                    s = s + c1 * c2
                    if s:
                        res[e] = s
                    else:
                        del res[e]
        return Polynomial(self.ring, res)

    __rmul__ = __mul__

    def __pow__(self, k):
        if k < 0:
            raise ValueError("negative power")
        result = self.ring.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base if k > 1 else base
            k >>= 1
        return result

    def __truediv__(self, c):
        c = Fraction(c)
        return Polynomial(self.ring, {e: v / c for e, v in self.terms.items()})

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            if not isinstance(other, (int, Fraction)):
                return NotImplemented
            other = self.ring.const(other)
        return self.ring == other.ring and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring, frozenset(self.terms.items())))
        return self._hash

    # -- calculus and maps ----------------------------------------------

    def diff(self, name):
        """Formal partial derivative with respect to the named variable."""
        i = self.ring.index[name]
        res = {}
        for e, c in self.terms.items():
            if e[i]:
                f = list(e)
                f[i] -= 1
                res[tuple(f)] = c * e[i]
        return Polynomial(self.ring, res)

    def substitute(self, assignment, target=None):
        """Apply the ring map sending each assigned variable to a polynomial.

        Unassigned variables must exist in the target ring (default: the
        ring of the assigned values, or this ring).
        """
        if target is None:
            for val in assignment.values():
                if isinstance(val, Polynomial):
                    target = val.ring
                    break
            else:
                target = self.ring
        images = []
        for i, v in enumerate(self.ring.names):
            if v in assignment:
                val = assignment[v]
                if not isinstance(val, Polynomial):
                    val = target.const(val)
                elif val.ring != target:
                    val = val.moved_to(target)
                images.append(val)
            elif v in target.index:
                images.append(target.var(v))
            else:
                images.append(None)  # only an error if the variable occurs
        result = target.zero()
        pow_cache = [{} for _ in images]
        for e, c in self.terms.items():
            part = target.const(c)
            for i, x in enumerate(e):
                if not x:
                    continue
                if images[i] is None:
                    raise ValueError(
                        f"variable {self.ring.names[i]!r} is unassigned and "
                        f"absent from the target ring")
                cache = pow_cache[i]
                p = cache.get(x)
                if p is None:
                    p = images[i] ** x
                    cache[x] = p
                part = part * p
            result = result + part
        return result

    def moved_to(self, ring):
        """Reinterpret in another ring containing all occurring variables."""
        if ring == self.ring:
            return self
        pos = []
        for v in self.ring.names:
            pos.append(ring.index.get(v))
        res = {}
        for e, c in self.terms.items():
            f = [0] * ring.nvars
            for i, x in enumerate(e):
                if x:
                    if pos[i] is None:
                        raise ValueError(f"variable {self.ring.names[i]!r} "
                                         f"not present in target ring")
                    f[pos[i]] = x
            res[tuple(f)] = c
        return Polynomial(ring, res)

    def divide_exact(self, divisor):
        """Exact quotient by a single-term divisor; raises if not divisible."""
        if len(divisor.terms) != 1:
            raise ValueError("divisor must be a single term")
        (de, dc), = divisor.terms.items()
        res = {}
        for e, c in self.terms.items():
            f = tuple(a - b for a, b in zip(e, de))
            if any(x < 0 for x in f):
                raise ValueError("not divisible")
            res[f] = c / dc
        return Polynomial(self.ring, res)

    # -- printing ---------------------------------------------------------

    def __str__(self):
        if not self.terms:
            return "0"
        names = self.ring.names
        out = []
        for e, c in self.sorted_terms():
            factors = []
            for v, x in zip(names, e):
                if x == 1:
                    factors.append(v)
                elif x > 1:
                    factors.append(f"{v}^{x}")
            mono = "*".join(factors)
            sign = "-" if c < 0 else "+"
            a = abs(c)
            if not mono:
                body = str(a)
            elif a == 1:
                body = mono
            else:
                body = f"{a}*{mono}"
            if not out:
                out.append(body if sign == "+" else "-" + body)
            else:
                out.append(f" {sign} {body}")
        return "".join(out)

    def __repr__(self):
        return f"<{self}>"


# -- parser ---------------------------------------------------------------
#
# expr    := term (('+'|'-') term)*
# term    := factor ('*' factor)*
# factor  := '-' factor | atom ('^' INT)?
# atom    := NAME | NUMBER | '(' expr ')'
# NUMBER  := INT ('/' INT)?
#
# Implicit multiplication is a syntax error.

def _tokenize(text):
    tokens = []
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            num = int(text[i:j])
            if j < n and text[j] == "/":
                k = j + 1
                if k >= n or not text[k].isdigit():
                    raise ParseError("expected denominator digits", text, j)
                m = k
                while m < n and text[m].isdigit():
                    m += 1
                tokens.append(("num", Fraction(num, int(text[k:m])), i))
                i = m
            else:
                tokens.append(("num", Fraction(num), i))
                i = j
            continue
        if ch.isalpha() or ch == "_":
            j = i
            while j < n and (text[j].isalnum() or text[j] == "_"):
                j += 1
            tokens.append(("name", text[i:j], i))
            i = j
            continue
        if ch in "+-*^()":
            tokens.append((ch, ch, i))
            i += 1
            continue
        raise ParseError(f"unexpected character {ch!r}", text, i)
    tokens.append(("end", None, n))
    return tokens


class _Parser:
    def __init__(self, ring, text):
        self.ring = ring
        self.text = text
        self.tokens = _tokenize(text)
        self.pos = 0

    def peek(self):
        return self.tokens[self.pos]

    def take(self):
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def expr(self):
        kind, _, at = self.peek()
        neg = False
        if kind in "+-":
            self.take()
            neg = kind == "-"
        p = self.term()
        if neg:
            p = -p
        while True:
            kind, _, _ = self.peek()
            if kind == "+":
                self.take()
                p = p + self.term()
            elif kind == "-":
                self.take()
                p = p - self.term()
            else:
                return p

    def term(self):
        p = self.factor()
        while True:
            kind, _, at = self.peek()
            if kind == "*":
                self.take()
                p = p * self.factor()
            elif kind in ("name", "num", "("):
                raise ParseError("implicit multiplication is not allowed",
                                 self.text, at)
            else:
                return p

    def factor(self):
        kind, val, at = self.peek()
        if kind == "-":
            self.take()
            return -self.factor()
        p = self.atom()
        kind, _, _ = self.peek()
        if kind == "^":
            self.take()
            kind, val, at = self.take()
            if kind != "num" or val.denominator != 1 or val < 0:
                raise ParseError("exponent must be a nonnegative integer",
                                 self.text, at)
            if val > MAX_EXPONENT:
                raise ParseError("exponent too large", self.text, at)
            p = p ** int(val)
        return p

    def atom(self):
        kind, val, at = self.take()
        if kind == "num":
            return self.ring.const(val)
        if kind == "name":
            if val not in self.ring.index:
                raise ParseError(f"unknown variable {val!r}", self.text, at)
            return self.ring.var(val)
        if kind == "(":
            p = self.expr()
            kind, _, at = self.take()
            if kind != ")":
                raise ParseError("expected ')'", self.text, at)
            return p
        raise ParseError("expected a name, number or '('", self.text, at)


def _parse(ring, text):
    parser = _Parser(ring, text)
    p = parser.expr()
    kind, _, at = parser.peek()
    if kind != "end":
        raise ParseError("trailing input", text, at)
    return p
