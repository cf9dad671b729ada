"""Lens space invariants.

Conventions.  L(a, b) is the oriented lens space obtained by -a/b surgery
on the unknot, a >= 2, gcd(a, b) = 1, with b normalized into (0, a) at
construction (inputs like L(11, -2) are accepted and normalized, here to
L(11, 9); callers that need traceability record the raw input themselves).
The meridian mu of the unknot generates pi_1 = Z/a.

For the flat SO(2) connection beta sending mu to the rotation by angle
2 pi l / a, the Atiyah-Patodi-Singer rho invariant is the exact rational

    rho(L(a,b), l) = (4/a) sum_{k=1}^{a-1} cot(pi k/a) cot(pi k b/a)
                                           sin^2(pi k l/a),

and rho of the reducible SO(3) connection beta (+) trivial equals rho of
its SO(2) part, so only the SO(2) computation is exposed.

The Neumann-Zagier identity evaluates the l = 1 specialization in closed
form:  (2/a) sum_k cot(pi k c/a) cot(pi k/a) sin^2(pi k/a) = 2 c*/a - 1
where 0 < c* < a and c c* = -1 mod a.

Chern-Simons invariants of flat connections on L(a, b), taken mod 4, all
lie in (4/a) Z, giving the compactness bound tau(L(a,b)) >= 4/a.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .errors import BadParameters
from .exactnum import cot_cot_sin2_sum, inverse_mod

__all__ = ["LensSpace", "LensCsValues", "lens_cs_values", "nz_closed_form", "rho_lens"]


@dataclass(frozen=True)
class LensSpace:
    """L(a, b) = -a/b surgery on the unknot; b stored in (0, a)."""

    a: int
    b: int

    def __post_init__(self) -> None:
        if self.a < 2:
            raise BadParameters("lens space order a must be at least 2")
        if gcd(self.a, self.b) != 1:
            raise BadParameters(f"gcd({self.a}, {self.b}) != 1")
        object.__setattr__(self, "b", self.b % self.a)

    def reversed(self) -> "LensSpace":
        """-L(a, b) = L(a, -b)."""
        return LensSpace(self.a, self.a - self.b)

    def __str__(self) -> str:
        return f"L({self.a},{self.b})"


def rho_lens(L: LensSpace, l: int) -> Fraction:
    """Exact rho invariant of the flat SO(2) connection with holonomy
    mu -> exp(2 pi i l / a) on L(a, b); l is reduced mod a."""
    return Fraction(4, L.a) * cot_cot_sin2_sum(L.a, L.b, l)


def nz_closed_form(a: int, c: int) -> Fraction:
    """2 c*/a - 1 for the unique 0 < c* < a with c c* = -1 mod a.

    Equals (2/a) sum_{k=1}^{a-1} cot(pi k c/a) cot(pi k/a) sin^2(pi k/a)
    for gcd(a, c) = 1; the agreement with the exact sum is part of the
    acceptance suite.
    """
    if a < 2:
        raise BadParameters("need a >= 2")
    if gcd(a, c) != 1:
        raise BadParameters(f"gcd({a}, {c}) != 1")
    cstar = (-inverse_mod(c % a, a)) % a
    assert 0 < cstar < a and (c * cstar) % a == a - 1
    return Fraction(2 * cstar, a) - 1


@dataclass(frozen=True)
class LensCsValues:
    """Chern-Simons data of L(a, b): all flat-connection values mod 4 lie
    in the coset set {4k/a}, so tau(L(a,b)) is bounded below by 4/a."""

    space: LensSpace
    bound: Fraction
    residue_modulus: int


def lens_cs_values(L: LensSpace) -> LensCsValues:
    """The guaranteed lower bound 4/a together with the residue modulus a."""
    return LensCsValues(space=L, bound=Fraction(4, L.a), residue_modulus=L.a)
