"""Term orders on monomials, represented as integer weight-row matrices.

Every order here is realised as a list of nonnegative integer row vectors;
monomials compare by the lexicographic order of their row images.  Keeping
the rows nonnegative lets the Groebner engine pack them into a single
integer key whose natural comparison agrees with the order.
"""

from __future__ import annotations


class TermOrder:
    """A monomial order, given by its kind and an optional variable priority."""

    __slots__ = ("kind", "vars", "weights", "front", "inner")

    def __init__(self, kind, vars=None, weights=None, front=None, inner=None):
        self.kind = kind
        self.vars = tuple(vars) if vars is not None else None
        self.weights = tuple(weights) if weights is not None else None
        self.front = tuple(front) if front is not None else None
        self.inner = inner

    def __repr__(self):
        if self.kind == "block":
            return f"block({','.join(self.front)}; {self.inner!r})"
        parts = []
        if self.vars:
            parts.append(",".join(self.vars))
        if self.weights:
            parts.append("w=" + ",".join(map(str, self.weights)))
        return f"{self.kind}({'; '.join(parts)})"

    def __eq__(self, other):
        return isinstance(other, TermOrder) and self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def _key(self):
        inner = self.inner._key() if self.inner is not None else None
        return (self.kind, self.vars, self.weights, self.front, inner)

    def weight_rows(self, names):
        """Integer weight rows for a ring with variables `names`, most
        significant row first."""
        names = tuple(names)
        n = len(names)
        if self.kind == "block":
            front = [names.index(v) for v in self.front]
            missing = [v for v in self.front if v not in names]
            if missing:
                raise ValueError(f"block order variable {missing[0]!r} not in ring")
            rest = [i for i in range(n) if i not in front]
            rows = _revlex_rows(front, n)
            inner = self.inner if self.inner is not None else degrevlex()
            for row in inner.weight_rows([names[i] for i in rest]):
                full = [0] * n
                for j, i in enumerate(rest):
                    full[i] = row[j]
                rows.append(tuple(full))
            return rows
        if self.vars is not None:
            prio = [names.index(v) for v in self.vars]
            if sorted(prio) != list(range(n)):
                raise ValueError("order variable list must be a permutation of the ring")
        else:
            prio = list(range(n))
        if self.kind == "lex":
            return [tuple(1 if j == i else 0 for j in range(n)) for i in prio]
        if self.kind == "degrevlex":
            return _revlex_rows(prio, n)
        if self.kind == "wdegrevlex":
            if self.weights is None or len(self.weights) != n:
                raise ValueError("weight vector length must match the ring")
            if any(w <= 0 for w in self.weights):
                raise ValueError("weights must be strictly positive")
            w = [0] * n
            for rank, i in enumerate(prio):
                w[i] = self.weights[rank]
            return [tuple(w)] + _revlex_rows(prio, n)
        raise ValueError(f"unknown order kind {self.kind!r}")


def _revlex_rows(prio, n):
    # degrevlex on the listed positions: total degree, then the partial sums
    # that realise "last nonzero difference negative" as a lex comparison.
    rows = []
    for k in range(len(prio)):
        row = [0] * n
        for i in prio[: len(prio) - k]:
            row[i] = 1
        rows.append(tuple(row))
    return rows


def lex(vars=None):
    return TermOrder("lex", vars=vars)


def degrevlex(vars=None):
    return TermOrder("degrevlex", vars=vars)


def wdegrevlex(weights, vars=None):
    return TermOrder("wdegrevlex", vars=vars, weights=weights)


def block(front, inner=None):
    """Elimination order: degrevlex on `front`, then `inner` on the rest."""
    return TermOrder("block", front=front, inner=inner)
