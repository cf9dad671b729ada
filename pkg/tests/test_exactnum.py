"""Foundation tests: cyclotomic arithmetic, the sum engine, CRT solving,
Hirzebruch-Jung expansions, and the floating oracle."""

import random
from fractions import Fraction
from math import gcd

import pytest

from gaugecert import (
    BadParameters,
    CycloElement,
    NonRational,
    NoSolution,
    cot_cot_sin2_sum,
    crt_solve,
    cyclo_make_cot_cot_sin2,
    cyclotomic_poly,
    float_oracle_sum,
    hj_expand,
    rational_extract,
)
from gaugecert.exactnum import euler_phi


# ---------------------------------------------------------------------------
# cyclotomic polynomials and field structure
# ---------------------------------------------------------------------------

def test_cyclotomic_poly_small():
    assert cyclotomic_poly(1) == (-1, 1)
    assert cyclotomic_poly(2) == (1, 1)
    assert cyclotomic_poly(3) == (1, 1, 1)
    assert cyclotomic_poly(4) == (1, 0, 1)
    assert cyclotomic_poly(6) == (1, -1, 1)
    assert cyclotomic_poly(12) == (1, 0, -1, 0, 1)


def test_cyclotomic_poly_prime():
    for p in (5, 7, 11, 13):
        assert cyclotomic_poly(p) == (1,) * p


def test_cyclotomic_degree_matches_phi():
    for a in range(1, 40):
        assert len(cyclotomic_poly(a)) == euler_phi(a) + 1


def test_zeta_relation():
    # 1 + zeta + ... + zeta^(p-1) = 0 for prime p
    z = CycloElement.zero(5)
    for k in range(5):
        z = z + CycloElement.zeta(5, k)
    assert z.is_zero()


def test_field_axioms_randomized():
    rng = random.Random(7)
    for a in (5, 8, 9, 12):
        n = euler_phi(a)
        def rand_elt():
            return CycloElement(
                a, tuple(Fraction(rng.randint(-4, 4), rng.randint(1, 3)) for _ in range(n))
            )
        one = CycloElement.from_rational(a, 1)
        for _ in range(8):
            x, y, z = rand_elt(), rand_elt(), rand_elt()
            assert (x + y) * z == x * z + y * z
            assert (x * y) * z == x * (y * z)
            if not x.is_zero():
                assert x * x.inverse() == one


def test_galois_and_conjugation():
    x = CycloElement.zeta(7, 1) + CycloElement.zeta(7, 2).scale(3)
    assert x.conjugate().conjugate() == x
    # conjugation fixes rational elements
    r = CycloElement.from_rational(7, Fraction(5, 3))
    assert r.conjugate() == r
    # real elements are conjugation invariant: zeta + zeta^-1
    real = CycloElement.zeta(7, 1) + CycloElement.zeta(7, -1)
    assert real.conjugate() == real


# ---------------------------------------------------------------------------
# cotangent summands
# ---------------------------------------------------------------------------

def test_cot_cot_sin2_term_examples():
    # cot^2(pi/3) sin^2(pi/3) = (1/3)(3/4) = 1/4
    assert rational_extract(cyclo_make_cot_cot_sin2(3, 1, 1, 1)) == Fraction(1, 4)
    # cot(pi/2) = 0
    assert cyclo_make_cot_cot_sin2(2, 1, 1, 1).is_zero()
    # sin^2 factor vanishes for l = 0 mod a
    assert cyclo_make_cot_cot_sin2(7, 2, 3, 7).is_zero()
    assert cyclo_make_cot_cot_sin2(5, 1, 2, 10).is_zero()


def test_cot_cot_sin2_term_errors():
    with pytest.raises(BadParameters):
        cyclo_make_cot_cot_sin2(5, 0, 1, 1)
    with pytest.raises(BadParameters):
        cyclo_make_cot_cot_sin2(5, 5, 1, 1)
    with pytest.raises(BadParameters):
        cyclo_make_cot_cot_sin2(6, 1, 3, 1)


def test_rational_extract():
    assert rational_extract(CycloElement.from_rational(9, Fraction(7, 3))) == Fraction(7, 3)
    z = CycloElement.zero(5)
    for k in range(1, 5):
        z = z + CycloElement.zeta(5, k)
    assert rational_extract(z) == -1
    with pytest.raises(NonRational):
        rational_extract(CycloElement.zeta(5, 1))


def test_term_sum_matches_engine():
    # the per-term cyclotomic route and the convolution engine are
    # independent exact paths; they must agree term-sum for term-sum
    for a in range(2, 25):
        for b in range(1, a):
            if gcd(a, b) != 1:
                continue
            for l in (1, b, a - 1):
                total = CycloElement.zero(a)
                for k in range(1, a):
                    total = total + cyclo_make_cot_cot_sin2(a, k, b, l)
                assert rational_extract(total) == cot_cot_sin2_sum(a, b, l)


def test_engine_trivial_cases():
    assert cot_cot_sin2_sum(2, 1, 1) == 0
    assert cot_cot_sin2_sum(9, 2, 0) == 0
    with pytest.raises(BadParameters):
        cot_cot_sin2_sum(6, 2, 1)


def test_engine_object_dtype_fallback(monkeypatch):
    import gaugecert.exactnum as ex

    reference = {(a, b, l): ex.cot_cot_sin2_sum(a, b, l) for a in (5, 12, 30) for b, l in ((1, 1), (a - 1, 2))}
    monkeypatch.setattr(ex, "_INT64_SAFE_ORDER", 1)
    for (a, b, l), val in reference.items():
        assert ex.cot_cot_sin2_sum(a, b, l) == val


# ---------------------------------------------------------------------------
# crt_solve
# ---------------------------------------------------------------------------

def _check_identity(moduli, d, bs):
    a = 1
    for m in moduli:
        a *= m
    assert sum(Fraction(b, m) for b, m in zip(bs, moduli)) * a == d
    for b, m in zip(bs, moduli):
        assert gcd(b, m) == 1 or m == 1


def test_crt_solve_examples():
    bs = crt_solve((2, 3, 5), 1)
    assert bs == (1, 1, -4)
    _check_identity((2, 3, 5), 1, bs)
    bs = crt_solve((2, 3, 11), 1)
    assert bs == (1, 1, -9)
    _check_identity((2, 3, 11), 1, bs)
    bs = crt_solve((3, 5, 83), 7)
    _check_identity((3, 5, 83), 7, bs)


def test_crt_solve_normalization():
    bs = crt_solve((3, 5, 83), 7)
    assert all(0 < b < m for b, m in zip(bs[:-1], (3, 5)))


def test_crt_solve_errors():
    with pytest.raises(NoSolution):
        crt_solve((2, 4, 5), 1)
    with pytest.raises(NoSolution):
        crt_solve((3, 5), 5)


def test_crt_solve_identity_grid():
    rng = random.Random(11)
    moduli_pool = [(2, 3, 5), (2, 3, 7), (3, 5, 7), (2, 5, 9), (3, 4, 5, 7), (5, 7, 11)]
    for moduli in moduli_pool:
        a = 1
        for m in moduli:
            a *= m
        for _ in range(10):
            d = rng.randint(1, 40)
            if gcd(d, a) != 1:
                continue
            _check_identity(moduli, d, crt_solve(moduli, d))


# ---------------------------------------------------------------------------
# Hirzebruch-Jung expansions
# ---------------------------------------------------------------------------

def test_hj_examples():
    assert hj_expand(3, 1).terms == (3,)
    assert hj_expand(7, 2).terms == (4, 2)
    assert hj_expand(11, 2).terms == (6, 2)


def test_hj_roundtrip():
    for a in range(2, 121):
        for b in range(1, a):
            if gcd(a, b) == 1:
                exp = hj_expand(a, b)
                assert all(c >= 2 for c in exp.terms)
                assert exp.value() == Fraction(a, b)
                assert exp.continuants()[-1] == a


def test_hj_errors():
    with pytest.raises(BadParameters):
        hj_expand(6, 3)
    with pytest.raises(BadParameters):
        hj_expand(5, 5)


# ---------------------------------------------------------------------------
# float oracle
# ---------------------------------------------------------------------------

def _oracle_close(value, exact, tol=2.0**-64):
    import mpmath

    with mpmath.workprec(256):
        return abs(value - mpmath.mpf(exact.numerator) / exact.denominator) < tol


def test_oracle_spot_values():
    assert _oracle_close(float_oracle_sum(3, 1, 1), Fraction(2, 3), 2.0**-100)
    assert _oracle_close(float_oracle_sum(2, 1, 1), Fraction(0), 2.0**-100)
    assert _oracle_close(float_oracle_sum(5, 1, 1), Fraction(6, 5), 2.0**-100)


def test_oracle_vs_exact_random():
    rng = random.Random(13)
    for _ in range(60):
        a = rng.randint(2, 60)
        b = rng.choice([x for x in range(1, a) if gcd(x, a) == 1])
        l = rng.randint(0, a - 1)
        exact = Fraction(4, a) * cot_cot_sin2_sum(a, b, l)
        assert _oracle_close(float_oracle_sum(a, b, l), exact)


def test_oracle_precision_env(monkeypatch):
    from gaugecert.exactnum import ORACLE_PREC_ENV

    monkeypatch.setenv(ORACLE_PREC_ENV, "192")
    assert _oracle_close(float_oracle_sum(7, 2, 3), Fraction(4, 7) * cot_cot_sin2_sum(7, 2, 3))
    # values below 128 bits are clamped up to the documented minimum
    monkeypatch.setenv(ORACLE_PREC_ENV, "16")
    assert _oracle_close(float_oracle_sum(3, 1, 1), Fraction(2, 3), 2.0**-100)
