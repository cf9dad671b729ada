"""Knot-theoretic inputs: Alexander polynomials and Levine-Tristram signatures.

Only two pieces of knot theory feed the obstruction pipeline, both taken
from a Seifert matrix V (square integer, V - V^T unimodular):

* nondegeneracy of the flat connection on a/b surgery, which holds iff
  the Alexander polynomial does not vanish at exp(2 pi i b/a); evaluation
  is exact, in Q(zeta_a);
* the Levine-Tristram signature sigma_omega = sign((1-omega) V +
  (1-conj omega) V^T) at omega = zeta_a^(-b), which corrects rho under the
  flat cobordism to a lens space.

The signature is computed over Q(zeta_a) by Hermitian elimination: every
pivot is an exact field element, an exactly-zero pivot triggers symmetric
or 2x2 block pivoting, and the sign of each (exactly nonzero, real) pivot
is certified by interval arithmetic at adaptive precision.  If the form is
singular -- equivalently, omega is a root of the Alexander polynomial --
:class:`~gaugecert.errors.SingularPivot` is raised; that degenerate case
must be handled by the caller, never silently signed.

No knot diagrams are processed here; Seifert matrices are given directly
(as JSON integer arrays in problem files) or looked up in the small
built-in catalog (unknot, trefoil, figure8).
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Mapping

import mpmath

from .errors import BadParameters, SingularPivot
from .exactnum import CycloElement
from .matutil import det_int

__all__ = [
    "KNOT_CATALOG",
    "LaurentPoly",
    "SeifertMatrix",
    "alexander_from_seifert",
    "alexander_torus",
    "evaluate_at_root",
    "lt_signature",
    "nondegenerate_at",
]


# ---------------------------------------------------------------------------
# Laurent polynomials over Z
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class LaurentPoly:
    """Finitely supported integer Laurent polynomial, stored as sorted
    (exponent, coefficient) pairs with zero coefficients dropped.

    Genuine Alexander polynomials are symmetric up to units; this is a
    convention of the inputs, not enforced here.
    """

    terms: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        clean = tuple(sorted((int(e), int(c)) for e, c in self.terms if c != 0))
        assert len({e for e, _ in clean}) == len(clean), "repeated exponents"
        object.__setattr__(self, "terms", clean)

    @staticmethod
    def from_dict(coeffs: Mapping[int, int]) -> "LaurentPoly":
        return LaurentPoly(tuple(coeffs.items()))

    def as_dict(self) -> dict[int, int]:
        return dict(self.terms)

    def __call__(self, value: Fraction) -> Fraction:
        return sum((Fraction(c) * Fraction(value) ** e for e, c in self.terms), Fraction(0))

    def shift(self, k: int) -> "LaurentPoly":
        return LaurentPoly(tuple((e + k, c) for e, c in self.terms))

    def symmetrized(self) -> "LaurentPoly":
        """Recentre so the support is symmetric about 0 (degree span must be even)."""
        if not self.terms:
            return self
        lo, hi = self.terms[0][0], self.terms[-1][0]
        assert (lo + hi) % 2 == 0, "cannot symmetrize odd-span polynomial"
        return self.shift(-(lo + hi) // 2)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(f"{c}*t^{e}" for e, c in self.terms)


def _poly_mul(p: dict[int, int], q: dict[int, int]) -> dict[int, int]:
    out: dict[int, int] = {}
    for e1, c1 in p.items():
        for e2, c2 in q.items():
            out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
    return {e: c for e, c in out.items() if c}


def _poly_div_exact(num: dict[int, int], den: dict[int, int]) -> dict[int, int]:
    num = dict(num)
    dlead = max(den)
    out: dict[int, int] = {}
    while num:
        nlead = max(num)
        c, r = divmod(num[nlead], den[dlead])
        assert r == 0, "non-exact Laurent division"
        out[nlead - dlead] = c
        for e, d in den.items():
            v = num.get(e + nlead - dlead, 0) - c * d
            if v:
                num[e + nlead - dlead] = v
            else:
                num.pop(e + nlead - dlead, None)
    return out


def alexander_torus(p: int, q: int) -> LaurentPoly:
    """Alexander polynomial (t^pq - 1)(t - 1)/((t^p - 1)(t^q - 1)) of the
    (p, q) torus knot, by exact division, normalized symmetric about t^0."""
    if p < 2 or q < 2 or gcd(p, q) != 1:
        raise BadParameters("need coprime p, q >= 2")
    num = _poly_mul({p * q: 1, 0: -1}, {1: 1, 0: -1})
    quo = _poly_div_exact(num, {p: 1, 0: -1})
    quo = _poly_div_exact(quo, {q: 1, 0: -1})
    return LaurentPoly.from_dict(quo).symmetrized()


def alexander_from_seifert(V: "SeifertMatrix") -> LaurentPoly:
    """det(t^(1/2) V - t^(-1/2) V^T), the symmetrized Alexander polynomial.

    Computed as det(t V - V^T) and then recentred; exact over Z.
    """
    n = V.size
    if n == 0:
        return LaurentPoly(((0, 1),))
    # expand det(tV - V^T) by permutation sum is exponential; use fraction-free
    # elimination over Z[t] via dict polynomials and the Bareiss recurrence.
    m: list[list[dict[int, int]]] = [
        [
            {e: c for e, c in ((1, V.rows[i][j]), (0, -V.rows[j][i])) if c}
            for j in range(n)
        ]
        for i in range(n)
    ]
    sign = 1
    prev: dict[int, int] = {0: 1}
    for k in range(n - 1):
        if not m[k][k]:
            swap = next((i for i in range(k + 1, n) if m[i][k]), None)
            if swap is None:
                return LaurentPoly(())
            m[k], m[swap] = m[swap], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                lhs = _poly_mul(m[i][j], m[k][k])
                rhs = _poly_mul(m[i][k], m[k][j])
                num = {e: lhs.get(e, 0) - rhs.get(e, 0) for e in set(lhs) | set(rhs)}
                num = {e: c for e, c in num.items() if c}
                m[i][j] = _poly_div_exact(num, prev)
            m[i][k] = {}
        prev = m[k][k]
    det = m[n - 1][n - 1]
    if sign < 0:
        det = {e: -c for e, c in det.items()}
    poly = LaurentPoly.from_dict(det)
    if poly.terms and poly.terms[-1][1] < 0:
        poly = LaurentPoly(tuple((e, -c) for e, c in poly.terms))
    return poly.symmetrized()


def evaluate_at_root(poly: LaurentPoly, a: int, b: int) -> CycloElement:
    """Exact value of the polynomial at zeta_a^b, as an element of Q(zeta_a)."""
    out = CycloElement.zero(a)
    for e, c in poly.terms:
        out = out + CycloElement.zeta(a, b * e).scale(c)
    return out


def nondegenerate_at(poly: LaurentPoly, a: int, b: int) -> bool:
    """True iff poly(exp(2 pi i b/a)) != 0, decided exactly in Q(zeta_a)."""
    if gcd(a, b) != 1:
        raise BadParameters(f"gcd({a}, {b}) != 1")
    return not evaluate_at_root(poly, a, b).is_zero()


# ---------------------------------------------------------------------------
# Seifert matrices and Levine-Tristram signatures
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SeifertMatrix:
    """Square integer matrix V with det(V - V^T) = 1 (the intersection
    pairing condition; forces even size).  The empty matrix is the unknot."""

    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        rows = tuple(tuple(int(x) for x in row) for row in self.rows)
        n = len(rows)
        if any(len(r) != n for r in rows):
            raise BadParameters("Seifert matrix must be square")
        skew = [[rows[i][j] - rows[j][i] for j in range(n)] for i in range(n)]
        if det_int(skew) != 1:
            raise BadParameters("V - V^T must be unimodular (skew, determinant 1)")
        object.__setattr__(self, "rows", rows)

    @property
    def size(self) -> int:
        return len(self.rows)

    def transpose(self) -> tuple[tuple[int, ...], ...]:
        return tuple(tuple(row[i] for row in self.rows) for i in range(self.size))


#: Built-in knots: name -> Seifert matrix.  Trefoil is the right-handed one.
KNOT_CATALOG: dict[str, SeifertMatrix] = {
    "unknot": SeifertMatrix(()),
    "trefoil": SeifertMatrix(((-1, 1), (0, -1))),
    "figure8": SeifertMatrix(((1, 1), (0, -1))),
}


_MAX_SIGN_PREC = 1 << 14

# mpmath's interval precision is process-global; serialize around it
_SIGN_LOCK = threading.Lock()


def _certified_sign(x: CycloElement) -> int:
    """Sign of an exactly-nonzero real cyclotomic number.

    Evaluates sum c_i zeta^i by interval arithmetic, doubling the working
    precision until the real part's interval excludes zero; terminates
    because the exact value is nonzero.  The imaginary part must straddle 0.
    """
    assert not x.is_zero()
    a = x.order
    prec = 64
    while prec <= _MAX_SIGN_PREC:
        with _SIGN_LOCK:
            old = mpmath.iv.prec
            try:
                mpmath.iv.prec = prec
                two_pi = 2 * mpmath.iv.pi
                re = mpmath.iv.mpf(0)
                im = mpmath.iv.mpf(0)
                for i, c in enumerate(x.coeffs):
                    if c:
                        ci = mpmath.iv.mpf(c.numerator) / c.denominator
                        angle = two_pi * i / a
                        re += ci * mpmath.iv.cos(angle)
                        im += ci * mpmath.iv.sin(angle)
                assert 0 in im, "pivot is not real"
                if 0 not in re:
                    return 1 if re > 0 else -1
            finally:
                mpmath.iv.prec = old
        prec *= 2
    raise AssertionError("sign of nonzero pivot not separable at maximum precision")


def _hermitian_signature(h: list[list[CycloElement]]) -> int:
    """Signature of an exact Hermitian matrix over Q(zeta_a).

    Diagonal pivots are eliminated by Schur complement; if every diagonal
    entry is exactly zero but some off-diagonal entry h is not, the 2x2
    block [[0, h], [conj h, 0]] is nonsingular of signature 0 and is
    eliminated as a block.  A remaining block that is identically zero
    means the form is singular.
    """
    n = len(h)
    if n == 0:
        return 0
    piv = next((i for i in range(n) if not h[i][i].is_zero()), None)
    if piv is not None:
        p = h[piv][piv]
        rest = [i for i in range(n) if i != piv]
        schur = [
            [h[i][j] - h[i][piv] * h[piv][j] / p for j in rest]
            for i in rest
        ]
        return _certified_sign(p) + _hermitian_signature(schur)
    pair = next(
        ((i, j) for i in range(n) for j in range(i + 1, n) if not h[i][j].is_zero()),
        None,
    )
    if pair is None:
        raise SingularPivot("Hermitian form is singular (zero block)")
    i0, j0 = pair
    u = h[i0][j0]
    rest = [i for i in range(n) if i not in (i0, j0)]
    # block inverse of [[0, u], [conj u, 0]] is [[0, 1/conj u], [1/u, 0]]
    uinv = u.inverse()
    uinv_c = u.conjugate().inverse()
    schur = [
        [
            h[i][j] - (h[i][i0] * uinv * h[j0][j] + h[i][j0] * uinv_c * h[i0][j])
            for j in rest
        ]
        for i in rest
    ]
    return _hermitian_signature(schur)


def lt_signature(V: SeifertMatrix, a: int, b: int) -> int:
    """Levine-Tristram signature of V at omega = zeta_a^(-b):
    the signature of (1 - omega) V + (1 - conj omega) V^T.

    Deterministic and exact: pivots are exact elements of Q(zeta_a) and
    their signs are certified by adaptive-precision intervals.  Raises
    :class:`SingularPivot` when the form is singular, i.e. when omega is a
    root of the Alexander polynomial.
    """
    if a < 2:
        raise BadParameters("need a >= 2")
    if b % a == 0:
        raise BadParameters("omega = 1 is excluded")
    n = V.size
    if n == 0:
        return 0
    one = CycloElement.from_rational(a, 1)
    w = CycloElement.zeta(a, -b)
    f, fc = one - w, one - w.conjugate()
    vt = V.transpose()
    h = [
        [f.scale(V.rows[i][j]) + fc.scale(vt[i][j]) for j in range(n)]
        for i in range(n)
    ]
    return _hermitian_signature(h)
