"""Exact linear algebra on sparse integer vectors, delegated to sympy's DomainMatrix."""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from sympy import QQ, ZZ
from sympy.polys.matrices import DomainMatrix

Vector = dict[int, int]


def to_matrix(columns: Sequence[Vector], nrows: int, domain=ZZ) -> DomainMatrix:
    """Matrix whose j-th column is ``columns[j]``."""
    rows: dict[int, dict[int, int]] = {}
    for j, col in enumerate(columns):
        for i, c in col.items():
            if c:
                rows.setdefault(i, {})[j] = domain(c)
    return DomainMatrix(rows, (nrows, len(columns)), domain)


def rank(columns: Sequence[Vector], nrows: int) -> int:
    if not columns:
        return 0
    return to_matrix(columns, nrows, QQ).rank()


def is_unitriangular(rows: Sequence[Vector], order: Sequence[int]) -> bool:
    """Check that ``rows[k]`` has coefficient 1 at ``order[k]`` and no entry at
    ``order[j]`` for j > k."""
    pos = {idx: k for k, idx in enumerate(order)}
    for k, vec in enumerate(rows):
        if vec.get(order[k]) != 1:
            return False
        if any(pos.get(idx, -1) > k for idx, c in vec.items() if c):
            return False
    return True


def determinant(columns: Sequence[Vector], n: int) -> int:
    return int(to_matrix(columns, n, ZZ).det())


def solve(columns: Sequence[Vector], rhs: Sequence[Vector], n: int) -> list[dict[int, Fraction]]:
    """Coordinates of each ``rhs`` vector in the basis ``columns`` (an invertible n x n system)."""
    a = to_matrix(columns, n, QQ)
    b = to_matrix(rhs, n, QQ)
    x = a.inv() * b
    dense = x.to_Matrix()
    out = []
    for j in range(len(rhs)):
        col = {}
        for i in range(n):
            v = dense[i, j]
            if v != 0:
                col[i] = Fraction(int(v.p), int(v.q))
        out.append(col)
    return out
