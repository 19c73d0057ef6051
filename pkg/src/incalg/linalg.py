"""Exact dense linear algebra over Q or a prime field F_p.

Deterministic Gaussian elimination: pivot on the first nonzero column, then
the first nonzero row.  Everything returns plain Python lists of Fractions or
ints so results are reproducible bit for bit.
"""

from __future__ import annotations

from fractions import Fraction

__all__ = ["Field", "QQ", "GF", "rref", "rank", "nullspace", "solve_nullspace_dim"]


class Field:
    """Arithmetic of Q (p == 0) or F_p (p prime)."""

    def __init__(self, p: int = 0):
        self.p = p

    def of(self, v):
        return Fraction(v) if self.p == 0 else int(v) % self.p

    def zero(self):
        return Fraction(0) if self.p == 0 else 0

    def one(self):
        return Fraction(1) if self.p == 0 else 1

    def add(self, a, b):
        return a + b if self.p == 0 else (a + b) % self.p

    def sub(self, a, b):
        return a - b if self.p == 0 else (a - b) % self.p

    def mul(self, a, b):
        return a * b if self.p == 0 else (a * b) % self.p

    def neg(self, a):
        return -a if self.p == 0 else (-a) % self.p

    def inv(self, a):
        return 1 / a if self.p == 0 else pow(a, self.p - 2, self.p)

    def __eq__(self, other):
        return isinstance(other, Field) and self.p == other.p

    def __repr__(self):
        return "QQ" if self.p == 0 else f"GF({self.p})"


QQ = Field(0)


def GF(p: int) -> Field:
    return Field(p)


def rref(rows, field: Field):
    """Reduced row echelon form.

    Returns (echelon rows, pivot column list).  The input is not modified.
    """
    m = [[field.of(v) for v in row] for row in rows]
    nrows = len(m)
    ncols = len(m[0]) if nrows else 0
    pivots = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        piv = next((i for i in range(r, nrows) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = field.inv(m[r][c])
        m[r] = [field.mul(inv, v) for v in m[r]]
        for i in range(nrows):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [field.sub(a, field.mul(f, b)) for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
    return m, pivots


def rank(rows, field: Field) -> int:
    return len(rref(rows, field)[1]) if rows else 0


def nullspace(rows, ncols: int, field: Field):
    """Basis of the right kernel, in reduced echelon convention.

    Each basis vector has a 1 in one free column and the pivot columns solved
    for it; vectors are ordered by free column index.
    """
    if not rows:
        return [[field.one() if j == i else field.zero() for j in range(ncols)]
                for i in range(ncols)]
    m, pivots = rref(rows, field)
    pivot_set = set(pivots)
    free = [c for c in range(ncols) if c not in pivot_set]
    basis = []
    for fc in free:
        vec = [field.zero()] * ncols
        vec[fc] = field.one()
        for r, pc in enumerate(pivots):
            vec[pc] = field.neg(m[r][fc])
        basis.append(vec)
    return basis


def solve_nullspace_dim(rows, ncols: int, field: Field) -> int:
    return ncols - rank(rows, field) if rows else ncols
