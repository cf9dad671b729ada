"""Index formulas for the deformation operator of an adapted bundle.

The general count, for a bundle over a 4-manifold X with non-degenerate
flat limits alpha_i on its rational-homology-sphere boundary pieces, is

    ind_plus = 2 p_1 - 3 (1 + b^+(X))
               + (1/2) sum over nontrivial alpha_i of (3 - h_i - rho_i),

all exact rationals.  This module never touches geometry: the analytic
data (h_i, rho_i) arrives as plain numbers in :class:`IndexInputs`, so
boundary pieces that are not lens spaces are handled by whoever supplies
rho (see :mod:`gaugecert.obstruct` for the surgery transfer rule).

For the Seifert fibered case with pairs (a_i, b_i) and d > 0, the index of
the canonical reducible bundle has two expressions that must agree:

  trigonometric:  2d/a - 3 + n
                  + sum_i (2/a_i) sum_k cot(pi k/a_i) cot(pi k b_i/a_i)
                                        sin^2(pi k b_i/a_i)

  closed form:    2n - 3 - 2 sum_i K_i,   0 < b_i + K_i a_i < a_i.

Both are always evaluated and compared; a disagreement raises
:class:`ClosedFormMismatch` and means an arithmetic bug, so the reduction
is a permanent self-test rather than a one-time proof.  For d = 1 this
integer is the classical definite-bounding obstruction R(a_1, ..., a_n).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import ClosedFormMismatch, Degenerate, NotHomologySphere
from .exactnum import cot_cot_sin2_sum
from .seifert import SeifertData, d_invariant

__all__ = [
    "BoundaryTerm",
    "IndexInputs",
    "ind_plus_general",
    "ind_plus_seifert_qhs",
    "k_coefficients",
    "r_invariant",
]


@dataclass(frozen=True)
class BoundaryTerm:
    """One boundary piece: h = dim H^0 of the flat limit, its rho invariant,
    and whether the limit is the trivial connection (then h = 3, rho = 0
    and the piece drops out of the index sum)."""

    h: int
    rho: Fraction
    trivial: bool = False

    def __post_init__(self) -> None:
        object.__setattr__(self, "rho", Fraction(self.rho))
        assert self.h >= 0
        if self.trivial and (self.h != 3 or self.rho != 0):
            raise ValueError("a trivial limit has h = 3 and rho = 0")


@dataclass(frozen=True)
class IndexInputs:
    p1: Fraction
    b_plus: int
    boundary_terms: tuple[BoundaryTerm, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "p1", Fraction(self.p1))
        object.__setattr__(self, "boundary_terms", tuple(self.boundary_terms))
        assert self.b_plus >= 0


def ind_plus_general(inp: IndexInputs) -> Fraction:
    """2 p_1 - 3(1 + b^+) + (1/2) sum_{nontrivial} (3 - h - rho), exact."""
    total = 2 * inp.p1 - 3 * (1 + inp.b_plus)
    for term in inp.boundary_terms:
        if not term.trivial:
            total += Fraction(3 - term.h - term.rho, 2)
    return total


def k_coefficients(S: SeifertData) -> tuple[int, ...]:
    """The unique integers K_i with 0 < b_i + K_i a_i < a_i.

    Strands with a_i = 1 admit no such K and must be normalized away
    before calling; they raise :class:`Degenerate`.
    """
    out = []
    for a, b in S.pairs:
        if a == 1:
            raise Degenerate("strand with multiplicity 1 has no K coefficient")
        res = b % a  # in (0, a) since gcd(a, b) = 1 and a >= 2
        out.append((res - b) // a)
    return tuple(out)


def _ind_plus_both_forms(S: SeifertData, d: int) -> int:
    n = S.n
    ks = k_coefficients(S)
    closed = 2 * n - 3 - 2 * sum(ks)
    trig = Fraction(2 * d, S.a_product) - 3 + n
    for a, b in S.pairs:
        trig += Fraction(2, a) * cot_cot_sin2_sum(a, b, b)
    if trig != closed:
        raise ClosedFormMismatch(
            f"index forms disagree for {S}: trig {trig} vs closed {closed}"
        )
    return closed


def r_invariant(S: SeifertData) -> int:
    """The definite-bounding obstruction R(a_1, ..., a_n) of an integer
    homology sphere: 2n - 3 - 2 sum K_i, with the exact trigonometric form
    recomputed and asserted equal on every call."""
    d = d_invariant(S)
    if d != 1:
        raise NotHomologySphere(f"{S} has d = {d}, need d = 1")
    return _ind_plus_both_forms(S, 1)


def ind_plus_seifert_qhs(S: SeifertData) -> int:
    """Index of the canonical reducible bundle over the mapping-cylinder
    4-manifold of a Seifert rational homology sphere with d > 0; equals
    2n - 3 - 2 sum K_i, with the trigonometric form asserted equal."""
    d = d_invariant(S)
    if d <= 0:
        raise NotHomologySphere(f"{S} has d = {d}, need d > 0")
    return _ind_plus_both_forms(S, d)
