"""Small exact integer matrix helpers shared by the knot and lattice modules."""

from __future__ import annotations

from typing import Sequence

from .exactnum import xgcd

__all__ = ["det_int", "bareiss_leading_minors", "kernel_basis_int"]


def bareiss_leading_minors(rows: Sequence[Sequence[int]]) -> list[int]:
    """Leading principal minors D_1, ..., D_r of a square integer matrix,
    by fraction-free (Bareiss) elimination.

    Stops early and pads with zeros once a zero pivot is hit (any later
    leading minor reported as 0 may be inaccurate, but a zero pivot already
    rules out definiteness, which is all callers use this for).
    """
    m = [list(map(int, row)) for row in rows]
    r = len(m)
    assert all(len(row) == r for row in m)
    minors: list[int] = []
    prev = 1
    for k in range(r):
        pivot = m[k][k]
        minors.append(pivot)
        if pivot == 0:
            minors.extend([0] * (r - k - 1))
            break
        for i in range(k + 1, r):
            for j in range(k + 1, r):
                m[i][j] = (m[i][j] * pivot - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        prev = pivot
    return minors


def det_int(rows: Sequence[Sequence[int]]) -> int:
    """Exact determinant of a square integer matrix (Bareiss with row pivoting)."""
    m = [list(map(int, row)) for row in rows]
    r = len(m)
    assert all(len(row) == r for row in m)
    if r == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(r - 1):
        if m[k][k] == 0:
            swap = next((i for i in range(k + 1, r) if m[i][k] != 0), None)
            if swap is None:
                return 0
            m[k], m[swap] = m[swap], m[k]
            sign = -sign
        pivot = m[k][k]
        for i in range(k + 1, r):
            for j in range(k + 1, r):
                m[i][j] = (m[i][j] * pivot - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        prev = pivot
    return sign * m[r - 1][r - 1]


def kernel_basis_int(vec: Sequence[int]) -> list[list[int]]:
    """A basis of the integer kernel {x : vec . x = 0} of a nonzero integer
    row vector, as r - 1 integer vectors.

    Builds a unimodular U with vec . U = (g, 0, ..., 0); the kernel basis is
    the remaining columns of U.
    """
    v = [int(x) for x in vec]
    r = len(v)
    assert any(v), "kernel of the zero vector is the whole lattice"
    u = [[1 if i == j else 0 for j in range(r)] for i in range(r)]
    for i in range(1, r):
        if v[i] == 0:
            continue
        g, s, t = xgcd(v[0], v[i])
        a0, ai = v[0] // g, v[i] // g
        for row in u:
            c0, ci = row[0], row[i]
            row[0] = c0 * s + ci * t
            row[i] = -c0 * ai + ci * a0
        v[0], v[i] = g, 0
    assert v[0] != 0 and all(x == 0 for x in v[1:])
    return [[u[i][j] for i in range(r)] for j in range(1, r)]
