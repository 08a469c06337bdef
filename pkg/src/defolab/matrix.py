"""Matrices of polynomials: exact determinants and minors."""

from __future__ import annotations

from itertools import combinations

from .ring import Polynomial


class PolyMatrix:
    __slots__ = ("ring", "rows", "cols", "entries")

    def __init__(self, ring, rows, cols, entries):
        if len(entries) != rows * cols:
            raise ValueError("entry count must equal rows*cols")
        for p in entries:
            if not isinstance(p, Polynomial) or p.ring != ring:
                raise ValueError("all entries must share one ring")
        self.ring = ring
        self.rows = rows
        self.cols = cols
        self.entries = tuple(entries)

    @classmethod
    def from_rows(cls, row_lists):
        rows = len(row_lists)
        cols = len(row_lists[0])
        if any(len(r) != cols for r in row_lists):
            raise ValueError("ragged rows")
        flat = [p for r in row_lists for p in r]
        return cls(flat[0].ring, rows, cols, flat)

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i * self.cols + j]

    def row(self, i):
        return list(self.entries[i * self.cols:(i + 1) * self.cols])

    def col(self, j):
        return [self.entries[i * self.cols + j] for i in range(self.rows)]

    def transpose(self):
        return PolyMatrix(self.ring, self.cols, self.rows,
                          [self[i, j] for j in range(self.cols)
                           for i in range(self.rows)])

    def submatrix(self, row_idx, col_idx):
        ents = [self[i, j] for i in row_idx for j in col_idx]
        return PolyMatrix(self.ring, len(row_idx), len(col_idx), ents)

    def det(self):
        if self.rows != self.cols:
            raise ValueError("determinant of a nonsquare matrix")
        n = self.rows
        if n == 0:
            return self.ring.one()
        if n <= 3:
            return _cofactor_det(self)
        return _bareiss_det(self)

    def minors(self, k):
        """All k x k minors, row/column subsets in lexicographic order."""
        if k < 0 or k > min(self.rows, self.cols):
            raise ValueError(f"minor size {k} out of range")
        out = []
        for ri in combinations(range(self.rows), k):
            for ci in combinations(range(self.cols), k):
                out.append(self.submatrix(ri, ci).det())
        return out

    def __repr__(self):
        body = "; ".join(
            ", ".join(str(self[i, j]) for j in range(self.cols))
            for i in range(self.rows))
        return f"PolyMatrix[{body}]"


def _cofactor_det(m):
    n = m.rows
    if n == 1:
        return m[0, 0]
    if n == 2:
        return m[0, 0] * m[1, 1] - m[0, 1] * m[1, 0]
    ring = m.ring
    total = ring.zero()
    cols = list(range(n))
    for j in range(n):
        sub = m.submatrix(range(1, n), cols[:j] + cols[j + 1:])
        term = m[0, j] * _cofactor_det(sub)
        total = total + term if j % 2 == 0 else total - term
    return total


def _bareiss_det(m):
    # Fraction-free elimination; exact divisions keep entries polynomial.
    n = m.rows
    a = [[m[i, j] for j in range(n)] for i in range(n)]
    ring = m.ring
    prev = ring.one()
    sign = 1
    for k in range(n - 1):
        if a[k][k].is_zero():
            for i in range(k + 1, n):
                if not a[i][k].is_zero():
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return ring.zero()
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = a[i][j] * a[k][k] - a[i][k] * a[k][j]
                a[i][j] = _exact_quot(num, prev)
            a[i][k] = ring.zero()
        prev = a[k][k]
    d = a[n - 1][n - 1]
    return d if sign == 1 else -d


def _exact_quot(num, den):
    """Exact polynomial division, used only where Bareiss guarantees it."""
    if den == den.ring.one():
        return num
    from .groebner import poly_divmod
    q, r = poly_divmod(num, [den])
    if not r.is_zero():
        raise ArithmeticError("inexact division in fraction-free elimination")
    return q[0]
