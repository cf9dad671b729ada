"""Alexander polynomials, nondegeneracy at roots of unity, and
Levine-Tristram signatures."""

import random
from math import gcd

import pytest

from gaugecert import (
    BadParameters,
    KNOT_CATALOG,
    LaurentPoly,
    SeifertMatrix,
    SingularPivot,
    alexander_from_seifert,
    alexander_torus,
    lt_signature,
    nondegenerate_at,
)


def test_alexander_torus_examples():
    assert alexander_torus(2, 3).as_dict() == {-1: 1, 0: -1, 1: 1}
    assert alexander_torus(2, 5).as_dict() == {-2: 1, -1: -1, 0: 1, 1: -1, 2: 1}
    # Alexander polynomial at t = 1 is a unit
    for p, q in ((2, 3), (3, 5), (2, 7), (4, 5)):
        assert alexander_torus(p, q)(1) in (1, -1)
    with pytest.raises(BadParameters):
        alexander_torus(2, 4)


def test_alexander_from_seifert_matches_catalog():
    assert alexander_from_seifert(KNOT_CATALOG["trefoil"]) == alexander_torus(2, 3)
    assert alexander_from_seifert(KNOT_CATALOG["figure8"]).as_dict() == {-1: 1, 0: -3, 1: 1}
    assert alexander_from_seifert(KNOT_CATALOG["unknot"]).as_dict() == {0: 1}


def test_nondegenerate_examples():
    fig8 = alexander_from_seifert(KNOT_CATALOG["figure8"])
    for a, b in ((2, 1), (3, 1), (5, 2), (24, 7), (13, 5)):
        assert nondegenerate_at(fig8, a, b)
    trefoil = alexander_torus(2, 3)
    assert not nondegenerate_at(trefoil, 6, 1)
    assert nondegenerate_at(trefoil, 5, 1)
    one = LaurentPoly(((0, 1),))
    assert nondegenerate_at(one, 17, 3)


def test_torus_knot_root_description():
    # roots of the (p, q) torus knot polynomial are exactly the pq-th roots
    # of unity that are neither p-th nor q-th roots; zeta_a^b has order a
    for p, q in ((2, 3), (2, 5), (3, 5), (2, 7), (3, 7), (5, 7), (2, 11), (3, 11)):
        poly = alexander_torus(p, q)
        for a in range(1, p * q + 1):
            expected_degenerate = (p * q) % a == 0 and p % a != 0 and q % a != 0
            for b in (1, a - 1):
                if a >= 1 and gcd(a, max(b, 1)) == 1 and b >= 1:
                    assert nondegenerate_at(poly, a, b) != expected_degenerate


def test_seifert_matrix_validation():
    with pytest.raises(BadParameters):
        SeifertMatrix(((1, 0), (0, 1)))  # V - V^T = 0, not unimodular
    with pytest.raises(BadParameters):
        SeifertMatrix(((1, 2), (3,)))
    assert SeifertMatrix(()).size == 0


def test_lt_signature_examples():
    assert lt_signature(KNOT_CATALOG["figure8"], 3, 1) == 0
    assert lt_signature(KNOT_CATALOG["figure8"], 97, 13) == 0
    assert lt_signature(KNOT_CATALOG["trefoil"], 2, 1) == -2
    assert lt_signature(KNOT_CATALOG["unknot"], 5, 2) == 0


def test_lt_signature_conjugation_symmetry_and_bound():
    rng = random.Random(23)
    mats = [KNOT_CATALOG["trefoil"], KNOT_CATALOG["figure8"]]
    # genus-2 example: Seifert matrix of the (2, 5) torus knot
    t25 = SeifertMatrix(((-1, 1, 0, 0), (0, -1, 1, 0), (0, 0, -1, 1), (0, 0, 0, -1)))
    mats.append(t25)
    for V in mats:
        for _ in range(12):
            a = rng.randint(2, 40)
            b = rng.choice([x for x in range(1, a) if gcd(x, a) == 1])
            try:
                s = lt_signature(V, a, b)
            except SingularPivot:
                continue
            assert s == lt_signature(V, a, a - b)
            assert abs(s) <= V.size


def test_lt_signature_torus_25():
    # (2,5) torus knot: signature -4 at omega = -1
    t25 = SeifertMatrix(((-1, 1, 0, 0), (0, -1, 1, 0), (0, 0, -1, 1), (0, 0, 0, -1)))
    assert lt_signature(t25, 2, 1) == -4


def test_singular_pivot():
    with pytest.raises(SingularPivot):
        lt_signature(KNOT_CATALOG["trefoil"], 6, 1)
    with pytest.raises(BadParameters):
        lt_signature(KNOT_CATALOG["trefoil"], 5, 5)


def _random_seifert_matrix(rng, genus):
    # V = S + U0 with S symmetric and U0 carrying 1s at (2i, 2i+1), so
    # V - V^T is the standard symplectic form
    n = 2 * genus
    S = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            S[i][j] = S[j][i] = rng.randint(-2, 2)
    for g in range(genus):
        S[2 * g][2 * g + 1] += 1
    return SeifertMatrix(tuple(tuple(row) for row in S))


def test_lt_signature_against_eigenvalue_oracle():
    # numeric cross-check of the exact Hermitian elimination
    import numpy as np

    rng = random.Random(41)
    for _ in range(40):
        V = _random_seifert_matrix(rng, rng.randint(1, 3))
        a = rng.randint(2, 24)
        b = rng.choice([x for x in range(1, a) if gcd(x, a) == 1])
        w = complex(np.exp(-2j * np.pi * b / a))
        arr = np.array(V.rows, dtype=complex)
        H = (1 - w) * arr + (1 - w.conjugate()) * arr.T
        eigs = np.linalg.eigvalsh(H)
        if min(abs(eigs)) < 1e-8:
            continue  # numerically too close to the degenerate locus
        expected = int((eigs > 0).sum() - (eigs < 0).sum())
        assert lt_signature(V, a, b) == expected
