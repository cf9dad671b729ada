"""Exact arithmetic foundation.

All rational quantities in the package are :class:`fractions.Fraction`
(arbitrary precision, always in lowest terms with positive denominator).
On top of that this module provides:

* exact arithmetic in the cyclotomic field Q(zeta_a), with elements
  represented in the power basis 1, zeta, ..., zeta^(phi(a)-1) modulo the
  a-th cyclotomic polynomial (:class:`CycloElement`);
* exact evaluation of the cotangent sums

      sum_{k=1}^{a-1} cot(pi k/a) cot(pi k b/a) sin^2(pi k l/a)

  both term by term in Q(zeta_a) (:func:`cyclo_make_cot_cot_sin2`) and as
  a whole sum via an integer convolution identity (:func:`cot_cot_sin2_sum`);
* a deterministic solver for  (a_1...a_n) * sum_i b_i/a_i = d  with
  pairwise coprime moduli (:func:`crt_solve`);
* Hirzebruch-Jung (minus-sign) continued fractions (:func:`hj_expand`);
* a high precision floating point oracle for the cotangent sums, used only
  to cross-check the exact path in tests (:func:`float_oracle_sum`).

Everything here is immutable and side-effect free; the only shared state
is the memo table for cyclotomic polynomials, which is guarded by
``functools.lru_cache`` and therefore safe to share between threads.
"""

from __future__ import annotations

import functools
import os
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Sequence

import mpmath
import numpy as np

from .errors import BadParameters, NonRational, NoSolution

__all__ = [
    "CycloElement",
    "HJExpansion",
    "cot_cot_sin2_sum",
    "crt_solve",
    "cyclo_from_rational",
    "cyclo_make_cot_cot_sin2",
    "cyclo_zeta_power",
    "cyclotomic_poly",
    "euler_phi",
    "float_oracle_sum",
    "hj_expand",
    "rational_extract",
    "xgcd",
]


# ---------------------------------------------------------------------------
# elementary number theory
# ---------------------------------------------------------------------------

def xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Return (g, x, y) with a*x + b*y = g = gcd(a, b), g >= 0."""
    x0, x1, y0, y1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    if a < 0:
        a, x0, y0 = -a, -x0, -y0
    return a, x0, y0


def inverse_mod(x: int, m: int) -> int:
    g, u, _ = xgcd(x, m)
    if g != 1:
        raise NoSolution(f"{x} is not invertible mod {m}")
    return u % m


def euler_phi(a: int) -> int:
    assert a >= 1
    result = a
    n, p = a, 2
    while p * p <= n:
        if n % p == 0:
            result -= result // p
            while n % p == 0:
                n //= p
        p += 1
    if n > 1:
        result -= result // n
    return result


def _divisors(a: int) -> list[int]:
    small, large = [], []
    d = 1
    while d * d <= a:
        if a % d == 0:
            small.append(d)
            if d != a // d:
                large.append(a // d)
        d += 1
    return small + large[::-1]


# ---------------------------------------------------------------------------
# cyclotomic polynomials and the power basis of Q(zeta_a)
# ---------------------------------------------------------------------------

def _poly_div_exact(num: list[int], den: Sequence[int]) -> list[int]:
    # exact division of integer polynomials, den monic
    num = list(num)
    assert den[-1] == 1
    out = [0] * (len(num) - len(den) + 1)
    for i in range(len(num) - len(den), -1, -1):
        c = num[i + len(den) - 1]
        out[i] = c
        if c:
            for j, d in enumerate(den):
                num[i + j] -= c * d
    assert all(c == 0 for c in num), "non-exact polynomial division"
    return out


@functools.lru_cache(maxsize=None)
def cyclotomic_poly(a: int) -> tuple[int, ...]:
    """Coefficients (low to high) of the a-th cyclotomic polynomial Phi_a.

    Computed by exact division of x^a - 1 by the Phi_m for proper divisors
    m of a; memoized.
    """
    assert a >= 1
    poly = [-1] + [0] * (a - 1) + [1]  # x^a - 1
    for m in _divisors(a):
        if m < a:
            poly = _poly_div_exact(poly, cyclotomic_poly(m))
    assert len(poly) == euler_phi(a) + 1 and poly[-1] == 1
    return tuple(poly)


@functools.lru_cache(maxsize=None)
def _zeta_power_table(a: int) -> tuple[tuple[int, ...], ...]:
    # table[m] = integer coefficients of x^m reduced mod Phi_a, for m < 2a
    phi = cyclotomic_poly(a)
    n = len(phi) - 1
    table = []
    cur = [0] * n
    if n > 0:
        cur[0] = 1
    for _ in range(2 * a):
        table.append(tuple(cur))
        lead = cur[-1]
        cur = [0] + cur[:-1]
        if lead:
            for j in range(n):
                cur[j] -= lead * phi[j]
    return tuple(table)


@dataclass(frozen=True)
class CycloElement:
    """An element of Q(zeta_a), zeta_a = exp(2 pi i / a).

    ``coeffs`` has length phi(order) and lists the coordinates in the power
    basis 1, zeta, ..., zeta^(phi(a)-1); the representation is canonical,
    so equality of elements is equality of coefficient tuples.
    """

    order: int
    coeffs: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        assert self.order >= 1
        assert len(self.coeffs) == euler_phi(self.order)

    # -- constructors ------------------------------------------------------

    @staticmethod
    def zero(order: int) -> "CycloElement":
        return CycloElement(order, (Fraction(0),) * euler_phi(order))

    @staticmethod
    def from_rational(order: int, value) -> "CycloElement":
        c = [Fraction(0)] * euler_phi(order)
        c[0] = Fraction(value)
        return CycloElement(order, tuple(c))

    @staticmethod
    def zeta(order: int, exponent: int = 1) -> "CycloElement":
        table = _zeta_power_table(order)
        return CycloElement(order, tuple(Fraction(c) for c in table[exponent % order]))

    # -- ring / field operations -------------------------------------------

    def _check(self, other: "CycloElement") -> None:
        if self.order != other.order:
            raise ValueError("cyclotomic orders differ")

    def __add__(self, other: "CycloElement") -> "CycloElement":
        self._check(other)
        return CycloElement(self.order, tuple(x + y for x, y in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "CycloElement") -> "CycloElement":
        self._check(other)
        return CycloElement(self.order, tuple(x - y for x, y in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> "CycloElement":
        return CycloElement(self.order, tuple(-x for x in self.coeffs))

    def scale(self, r) -> "CycloElement":
        r = Fraction(r)
        return CycloElement(self.order, tuple(r * x for x in self.coeffs))

    def __mul__(self, other: "CycloElement") -> "CycloElement":
        self._check(other)
        n = len(self.coeffs)
        prod = [Fraction(0)] * (2 * n - 1 if n else 1)
        for i, x in enumerate(self.coeffs):
            if x:
                for j, y in enumerate(other.coeffs):
                    if y:
                        prod[i + j] += x * y
        table = _zeta_power_table(self.order)
        out = list(prod[:n])
        for m in range(n, len(prod)):
            c = prod[m]
            if c:
                for j, t in enumerate(table[m]):
                    if t:
                        out[j] += c * t
        return CycloElement(self.order, tuple(out))

    def inverse(self) -> "CycloElement":
        """Field inverse, via the extended Euclidean algorithm against Phi_a."""
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero cyclotomic element")
        phi = [Fraction(c) for c in cyclotomic_poly(self.order)]
        r0, r1 = phi, _trim(list(self.coeffs))
        s0, s1 = [Fraction(0)], [Fraction(1)]
        while r1:
            q, r = _poly_divmod_q(r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, _poly_sub_q(s0, _poly_mul_q(q, s1))
        assert len(r0) == 1, "Phi_a not coprime to a nonzero element"
        inv = [c / r0[0] for c in s0]
        # reduce mod Phi_a back into the power basis
        n = euler_phi(self.order)
        table = _zeta_power_table(self.order)
        out = [Fraction(0)] * n
        for m, c in enumerate(inv):
            if c:
                for j, t in enumerate(table[m]):
                    if t:
                        out[j] += c * t
        return CycloElement(self.order, tuple(out))

    def __truediv__(self, other: "CycloElement") -> "CycloElement":
        return self * other.inverse()

    def galois(self, t: int) -> "CycloElement":
        """Image under the Galois automorphism zeta -> zeta^t, gcd(t, a) = 1."""
        a = self.order
        if gcd(t % a, a) != 1:
            raise BadParameters(f"zeta -> zeta^{t} is not an automorphism of Q(zeta_{a})")
        table = _zeta_power_table(a)
        out = [Fraction(0)] * len(self.coeffs)
        for i, c in enumerate(self.coeffs):
            if c:
                for j, u in enumerate(table[(i * t) % a]):
                    if u:
                        out[j] += c * u
        return CycloElement(a, tuple(out))

    def conjugate(self) -> "CycloElement":
        """Complex conjugation zeta -> zeta^(-1)."""
        if self.order == 1:
            return self
        return self.galois(self.order - 1)

    # -- predicates ---------------------------------------------------------

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def is_rational(self) -> bool:
        return all(c == 0 for c in self.coeffs[1:])


def _trim(p: list[Fraction]) -> list[Fraction]:
    while p and p[-1] == 0:
        p.pop()
    return p


def _poly_divmod_q(num: list[Fraction], den: list[Fraction]):
    num = list(num)
    q = [Fraction(0)] * max(len(num) - len(den) + 1, 0)
    for i in range(len(num) - len(den), -1, -1):
        c = num[i + len(den) - 1] / den[-1]
        q[i] = c
        if c:
            for j, d in enumerate(den):
                num[i + j] -= c * d
    return q, _trim(num)


def _poly_mul_q(p: list[Fraction], q: list[Fraction]) -> list[Fraction]:
    if not p or not q:
        return []
    out = [Fraction(0)] * (len(p) + len(q) - 1)
    for i, x in enumerate(p):
        if x:
            for j, y in enumerate(q):
                out[i + j] += x * y
    return _trim(out)


def _poly_sub_q(p: list[Fraction], q: list[Fraction]) -> list[Fraction]:
    out = list(p) + [Fraction(0)] * max(len(q) - len(p), 0)
    for i, y in enumerate(q):
        out[i] -= y
    return _trim(out)


# ---------------------------------------------------------------------------
# exact cotangent summands and sums
# ---------------------------------------------------------------------------

def cyclo_make_cot_cot_sin2(a: int, k: int, b: int, l: int) -> CycloElement:
    """The summand cot(pi k/a) cot(pi k b/a) sin^2(pi k l/a) in Q(zeta_a).

    Uses cot(pi m/a) = i (zeta^m + 1)/(zeta^m - 1) and
    sin^2(theta) = (2 - zeta^m - zeta^(-m))/4 for theta = pi m/a, so the
    product is

        -(zeta^k + 1)(zeta^(kb) + 1)(2 - zeta^(kl) - zeta^(-kl))
        / (4 (zeta^k - 1)(zeta^(kb) - 1)),

    the two factors of i cancelling into the leading sign.
    """
    if a < 2:
        raise BadParameters("order a must be at least 2")
    if k % a == 0:
        raise BadParameters("cot(pi k/a) has a pole at k = 0 mod a")
    if gcd(b, a) != 1:
        raise BadParameters(f"b = {b} is not coprime to a = {a}")
    one = CycloElement.from_rational(a, 1)
    two = CycloElement.from_rational(a, 2)
    zk = CycloElement.zeta(a, k)
    zkb = CycloElement.zeta(a, k * b)
    zkl = CycloElement.zeta(a, k * l)
    zkl_inv = CycloElement.zeta(a, -k * l)
    num = -((zk + one) * (zkb + one) * (two - zkl - zkl_inv))
    den = ((zk - one) * (zkb - one)).scale(4)
    return num / den


def rational_extract(x: CycloElement) -> Fraction:
    """The value of x as a rational number.

    Raises :class:`NonRational` if any non-constant coefficient of the
    canonical representation is nonzero.  For the sums computed in this
    package that would indicate an arithmetic bug, never a legitimate
    outcome (the full sums are Galois invariant).
    """
    if not x.is_rational():
        raise NonRational(f"cyclotomic element of order {x.order} is not rational: {x.coeffs}")
    return x.coeffs[0] if x.coeffs else Fraction(0)


# object-dtype threshold: coefficients are bounded by 32 a^3, which must fit in int64
_INT64_SAFE_ORDER = 600_000


def cot_cot_sin2_sum(a: int, b: int, l: int) -> Fraction:
    """Exactly sum_{k=1}^{a-1} cot(pi k/a) cot(pi k b/a) sin^2(pi k l/a).

    Works in the group ring Z[x]/(x^a - 1): for x = zeta^k with k nonzero,
    1/(x - 1) = S(x)/a where S = sum_{j<a} j x^j, so every summand is the
    value at zeta^k of the one fixed polynomial

        P = -(x + 1)(x^b + 1)(2 - x^l - x^(a-l)) S(x) S(x^b) / (4 a^2).

    Averaging over all a-th roots of unity extracts a * (coefficient of
    x^0), and the k = 0 term vanishes because (2 - x^l - x^(-l)) does at
    x = 1; the whole sum collapses to a single exact integer convolution.

    Requires gcd(b, a) = 1; l is reduced mod a and the sum is 0 for
    l = 0 mod a.
    """
    if a < 1:
        raise BadParameters("a must be positive")
    b %= a
    l %= a
    if a == 1 or l == 0:
        return Fraction(0)
    if gcd(b, a) != 1:
        raise BadParameters(f"b = {b} is not coprime to a = {a}")
    dtype = np.int64 if a <= _INT64_SAFE_ORDER else object
    idx = (b * np.arange(a, dtype=np.int64)) % a  # indices stay well inside int64
    j = np.arange(a, dtype=dtype)
    s = j.copy()
    sb = np.zeros(a, dtype=dtype)
    sb[idx] = j
    full = np.convolve(s, sb)
    t = full[:a].copy()
    t[: a - 1] += full[a:]
    t = t + np.roll(t, 1)
    t = t + np.roll(t, b)
    t = 2 * t - np.roll(t, l) - np.roll(t, -l)
    assert int(t.sum()) == 0  # P(1) = 0: the k = 0 term contributes nothing
    return Fraction(-int(t[0]), 4 * a)


# ---------------------------------------------------------------------------
# coefficient solving:  (a_1...a_n) sum_i b_i/a_i = d
# ---------------------------------------------------------------------------

def crt_solve(moduli: Sequence[int], target: int = 1) -> tuple[int, ...]:
    """Integers b_i with gcd(b_i, a_i) = 1 and (a_1...a_n) sum b_i/a_i = d.

    Reducing the defining identity mod a_i forces b_i mod a_i; we take the
    representative in (0, a_i) for i < n and solve exactly for the last
    coefficient, so the output is deterministic.  Requires the moduli to be
    pairwise coprime and gcd(d, a_1...a_n) = 1.
    """
    moduli = tuple(int(m) for m in moduli)
    if not moduli:
        raise NoSolution("at least one modulus is required")
    if any(m < 1 for m in moduli):
        raise NoSolution("moduli must be positive")
    for i in range(len(moduli)):
        for j in range(i + 1, len(moduli)):
            if gcd(moduli[i], moduli[j]) != 1:
                raise NoSolution(f"moduli {moduli[i]} and {moduli[j]} are not coprime")
    a = 1
    for m in moduli:
        a *= m
    d = int(target)
    if gcd(d, a) != 1:
        raise NoSolution(f"target {d} is not coprime to product {a}")
    out: list[int] = []
    partial = 0  # sum of b_i * (a / a_i) so far
    for i, m in enumerate(moduli[:-1]):
        cof = a // m
        if m == 1:
            b = 0
        else:
            b = (d * inverse_mod(cof % m, m)) % m
            assert 0 < b < m
        out.append(b)
        partial += b * cof
    last = moduli[-1]
    cof = a // last
    num = d - partial
    assert num % cof == 0
    out.append(num // cof)
    assert gcd(out[-1], last) == 1
    return tuple(out)


# ---------------------------------------------------------------------------
# Hirzebruch-Jung continued fractions
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class HJExpansion:
    """Minus-sign continued fraction a/b = c_1 - 1/(c_2 - 1/(... - 1/c_m)).

    All terms are >= 2, which is the normal form whose associated plumbing
    is negative definite.
    """

    a: int
    b: int
    terms: tuple[int, ...]

    def __post_init__(self) -> None:
        assert 0 < self.b < self.a and gcd(self.a, self.b) == 1
        assert all(c >= 2 for c in self.terms)

    def value(self) -> Fraction:
        """Evaluate the continued fraction; equals a/b exactly."""
        v = Fraction(self.terms[-1])
        for c in reversed(self.terms[:-1]):
            v = c - 1 / v
        return v

    def continuants(self) -> tuple[int, ...]:
        """Leading principal minors of the associated (positive) plumbing
        matrix: D_k = c_k D_(k-1) - D_(k-2); the last one equals a."""
        prev2, prev1 = 1, self.terms[0]
        out = [prev1]
        for c in self.terms[1:]:
            prev2, prev1 = prev1, c * prev1 - prev2
            out.append(prev1)
        return tuple(out)


def hj_expand(a: int, b: int) -> HJExpansion:
    """Hirzebruch-Jung expansion of a/b for 0 < b < a, gcd(a, b) = 1."""
    if not (0 < b < a):
        raise BadParameters("need 0 < b < a")
    if gcd(a, b) != 1:
        raise BadParameters(f"gcd({a}, {b}) != 1")
    a0, b0 = a, b
    terms = []
    while True:
        c = -(-a0 // b0)  # ceil
        terms.append(c)
        r = c * b0 - a0
        if r == 0:
            break
        a0, b0 = b0, r
    exp = HJExpansion(a, b, tuple(terms))
    assert exp.value() == Fraction(a, b)
    return exp


# ---------------------------------------------------------------------------
# floating point oracle
# ---------------------------------------------------------------------------

#: Environment variable overriding the oracle's working precision in bits.
ORACLE_PREC_ENV = "GAUGECERT_ORACLE_BITS"


def float_oracle_sum(a: int, b: int, l: int, prec_bits: int | None = None) -> mpmath.mpf:
    """(4/a) sum_{k=1}^{a-1} cot(pi k/a) cot(pi k b/a) sin^2(pi k l/a), in
    floating point with at least a 128-bit mantissa.

    Error bound: every factor is computed to the working precision p, each
    summand has magnitude at most (a/2)^2, and there are a - 1 summands, so
    the absolute error is below a^3 * 2^(3-p).  At the default p = 128 and
    a <= 60 this is under 2^(-107), far inside the 2^(-64) tolerance the
    exact path is tested against.  This routine exists only as an
    independent oracle; all reported results come from exact arithmetic.
    """
    if prec_bits is None:
        prec_bits = int(os.environ.get(ORACLE_PREC_ENV, "128"))
    prec_bits = max(prec_bits, 128)
    if gcd(b, a) != 1:
        raise BadParameters(f"b = {b} is not coprime to a = {a}")
    with mpmath.workprec(prec_bits):
        pi_a = mpmath.pi / a
        total = mpmath.mpf(0)
        for k in range(1, a):
            total += mpmath.cot(pi_a * k) * mpmath.cot(pi_a * ((k * b) % a)) * mpmath.sin(pi_a * ((k * l) % a)) ** 2
        return 4 * total / a
