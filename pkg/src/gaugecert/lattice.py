"""Intersection form arithmetic and the count of reducible instantons.

The extended intersection form of a 4-manifold whose boundary is a union
of rational homology spheres takes values in (1/d) Z; it is modeled by
:class:`GramForm`, a symmetric rational matrix that becomes integral after
multiplying by the scale d.  Torsion classes are not modeled on the
lattice; where the argument needs them (the parity step of
:func:`sfqhs_reducible_count`) they enter as the ``torsion_odd`` flag,
with provenance recorded by the caller.

For a class e in a negative definite lattice the set that counts
reducible instantons is

    C(e) = { e' | e'.e' = e.e,  e' = e mod 2,  each boundary restriction
             of e' equals that of e up to sign } / +-1 .

:func:`enumerate_C_e` enumerates it completely by a Fincke-Pohst style
recursion over the exact rational Cholesky decomposition of the (positive
definite) negated form; :func:`enumerate_C_e_bruteforce` is an independent
box-scan oracle used by the test suite and the self-test command, with the
coordinate box computed exactly from the diagonal of the inverse form.
Sign classes are canonicalized so the first nonzero coordinate is
positive, and output is sorted, hence deterministic even if the search is
ever parallelized.

:func:`detect_orthogonal_split` decides whether the lattice is generated
by e together with the integer orthogonal complement of e; when it is,
C(e) is a single point.
"""

from __future__ import annotations

from dataclasses import InitVar, dataclass
from fractions import Fraction
from math import ceil, floor, gcd, isqrt

from .errors import BadParameters, HypothesisFailed, NotDefinite
from .exactnum import HJExpansion, xgcd
from .matutil import bareiss_leading_minors, det_int, kernel_basis_int

__all__ = [
    "CeProblem",
    "GramForm",
    "ReducibleCountVerdict",
    "Restriction",
    "detect_orthogonal_split",
    "enumerate_C_e",
    "enumerate_C_e_bruteforce",
    "gram_determinant",
    "is_negative_definite",
    "plumbing_gram",
    "sfqhs_reducible_count",
]


# ---------------------------------------------------------------------------
# Gram forms
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class GramForm:
    """Symmetric rational pairing with values in (1/scale) Z.

    Rows may mix ints and Fractions; both are exact rationals.  Symmetry
    and integrality of scale * gram are validated unless ``check=False``
    (used by constructors that guarantee them, e.g. plumbings, where
    re-checking every entry of a large sparse matrix would dominate).
    """

    rank: int
    gram: tuple[tuple[Fraction, ...], ...]
    scale: int = 1
    check: InitVar[bool] = True

    def __post_init__(self, check: bool) -> None:
        if self.scale < 1:
            raise BadParameters("scale must be a positive integer")
        if len(self.gram) != self.rank or any(len(row) != self.rank for row in self.gram):
            raise BadParameters("gram matrix shape does not match rank")
        if check:
            g = tuple(tuple(Fraction(x) for x in row) for row in self.gram)
            for i in range(self.rank):
                for j in range(i, self.rank):
                    if g[i][j] != g[j][i]:
                        raise BadParameters("gram matrix must be symmetric")
                    if (self.scale * g[i][j]).denominator != 1:
                        raise BadParameters("scale * gram must be integral")
            object.__setattr__(self, "gram", g)

    def scaled_int_rows(self) -> list[list[int]]:
        return [[int(self.scale * x) for x in row] for row in self.gram]

    def apply(self, x, y) -> Fraction:
        """The pairing x . y."""
        total = Fraction(0)
        for i, xi in enumerate(x):
            if xi:
                row = self.gram[i]
                total += xi * sum(row[j] * yj for j, yj in enumerate(y) if yj)
        return Fraction(total)

    def to_json_dict(self) -> dict:
        return {
            "rank": self.rank,
            "gram": [[str(Fraction(x)) for x in row] for row in self.gram],
            "scale": self.scale,
        }

    @staticmethod
    def from_json_dict(data: dict) -> "GramForm":
        return GramForm(
            rank=int(data["rank"]),
            gram=tuple(tuple(Fraction(x) for x in row) for row in data["gram"]),
            scale=int(data.get("scale", 1)),
        )


def _is_tridiagonal(g) -> bool:
    # slice-based so large sparse rows are scanned at C speed
    return all(
        not any(row[: max(i - 1, 0)]) and not any(row[i + 2 :])
        for i, row in enumerate(g)
    )


def _tridiag_leading_minors(rows) -> list:
    # D_k = g_kk D_(k-1) - g_(k,k-1)^2 D_(k-2)
    out = []
    prev2, prev1 = 0, 1
    for k, row in enumerate(rows):
        cur = row[k] * prev1 - (row[k - 1] ** 2 * prev2 if k else 0)
        out.append(cur)
        prev2, prev1 = prev1, cur
    return out


def is_negative_definite(G: GramForm) -> bool:
    """Exact leading-principal-minor test: the k-th minor must have sign
    (-1)^k for every k; rank deficiency (a zero minor) is rejected."""
    if G.rank == 0:
        return True
    if _is_tridiagonal(G.gram):
        minors = _tridiag_leading_minors(G.gram)
    else:
        minors = bareiss_leading_minors(G.scaled_int_rows())
    return all((m < 0) if k % 2 else (m > 0) for k, m in enumerate(minors, start=1))


def gram_determinant(G: GramForm) -> Fraction:
    """Exact determinant of the gram matrix."""
    if G.rank == 0:
        return Fraction(1)
    if _is_tridiagonal(G.gram):
        return Fraction(_tridiag_leading_minors(G.gram)[-1])
    return Fraction(det_int(G.scaled_int_rows()), G.scale**G.rank)


def plumbing_gram(h: HJExpansion) -> GramForm:
    """Intersection form of the linear plumbing of disk bundles over S^2
    along the expansion a/b = [c_1, ..., c_m]: tridiagonal with diagonal
    -c_i and off-diagonal 1.  Negative definite with |det| = a."""
    m = len(h.terms)
    rows = []
    for i, c in enumerate(h.terms):
        row = [0] * m
        row[i] = -c
        if i > 0:
            row[i - 1] = 1
        if i + 1 < m:
            row[i + 1] = 1
        rows.append(tuple(row))
    return GramForm(rank=m, gram=tuple(rows), scale=1, check=False)


# ---------------------------------------------------------------------------
# C(e) enumeration
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Restriction:
    """Boundary restriction: a class x restricts to (row . x) mod modulus."""

    modulus: int
    row: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.modulus < 1:
            raise BadParameters("restriction modulus must be positive")
        object.__setattr__(self, "row", tuple(int(x) for x in self.row))

    def to_json_dict(self) -> dict:
        return {"modulus": self.modulus, "row": list(self.row)}

    @staticmethod
    def from_json_dict(data: dict) -> "Restriction":
        return Restriction(int(data["modulus"]), tuple(data["row"]))


@dataclass(frozen=True)
class CeProblem:
    form: GramForm
    e: tuple[int, ...]
    restrictions: tuple[Restriction, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "e", tuple(int(x) for x in self.e))
        object.__setattr__(self, "restrictions", tuple(self.restrictions))
        if len(self.e) != self.form.rank:
            raise BadParameters("class length does not match form rank")
        for r in self.restrictions:
            if len(r.row) != self.form.rank:
                raise BadParameters("restriction row length does not match form rank")
        if not is_negative_definite(self.form):
            raise NotDefinite("C(e) requires a negative definite form")


def _canonical_sign(x: tuple[int, ...]) -> tuple[int, ...]:
    for v in x:
        if v > 0:
            return x
        if v < 0:
            return tuple(-y for y in x)
    return x


def _passes_filters(P: CeProblem, x: tuple[int, ...]) -> bool:
    if any((xi - ei) % 2 for xi, ei in zip(x, P.e)):
        return False
    for r in P.restrictions:
        rx = sum(c * xi for c, xi in zip(r.row, x))
        re = sum(c * ei for c, ei in zip(r.row, P.e))
        if (rx - re) % r.modulus and (rx + re) % r.modulus:
            return False
    return True


def _strict_restrictions(P: CeProblem, x: tuple[int, ...]) -> bool:
    # restriction equality on the nose, no sign allowance
    return all(
        (sum(c * xi for c, xi in zip(r.row, x)) - sum(c * ei for c, ei in zip(r.row, P.e)))
        % r.modulus == 0
        for r in P.restrictions
    )


def _class_representative(P: CeProblem, x: tuple[int, ...]) -> tuple[int, ...]:
    """Representative of the class {x, -x}: if exactly one sign restricts to
    the restrictions of e on the nose, that sign is pinned and reported;
    otherwise the first nonzero coordinate is made positive."""
    neg = tuple(-v for v in x)
    sx, sn = _strict_restrictions(P, x), _strict_restrictions(P, neg)
    if sx and not sn:
        return x
    if sn and not sx:
        return neg
    return _canonical_sign(x)


def _cholesky_q(a: list[list[Fraction]]) -> list[list[Fraction]]:
    # Fincke-Pohst normal form: Q(x) = sum_i q[i][i] (x_i + sum_{j>i} q[i][j] x_j)^2
    n = len(a)
    q = [row[:] for row in a]
    for i in range(n):
        if q[i][i] <= 0:
            raise NotDefinite("form is not negative definite")
        for j in range(i + 1, n):
            q[j][i] = q[i][j]
            q[i][j] = q[i][j] / q[i][i]
        for k in range(i + 1, n):
            for l in range(k, n):
                q[k][l] = q[k][l] - q[k][i] * q[i][l]
    return q


def _int_interval(center: Fraction, radius_sq: Fraction) -> range:
    """All integers m with (m + center)^2 <= radius_sq, exactly.

    m <= -center + sqrt(radius_sq) iff m + center <= 0 or (m + center)^2 <=
    radius_sq (and symmetrically for the lower end), so both endpoints are
    found by stepping from floor/ceil of -center, which always satisfy the
    one-sided conditions.
    """
    if radius_sq < 0:
        return range(0)
    hi = floor(-center)
    while (hi + 1 + center) <= 0 or (hi + 1 + center) ** 2 <= radius_sq:
        hi += 1
    lo = ceil(-center)
    while (lo - 1 + center) >= 0 or (lo - 1 + center) ** 2 <= radius_sq:
        lo -= 1
    return range(lo, hi + 1)


def enumerate_C_e(P: CeProblem) -> tuple[tuple[int, ...], ...]:
    """Complete enumeration of C(e), one representative per sign class,
    sorted.  Representatives are sign-canonical (first nonzero coordinate
    positive) except where the restriction data pins the sign, in which
    case the pinned sign is reported.

    Fincke-Pohst style: recurse over the exact rational Cholesky
    decomposition of -gram, carrying the exact remaining budget, and accept
    exactly the vectors of the right norm that survive the mod-2 and
    restriction filters.
    """
    n = P.form.rank
    target = -P.form.apply(P.e, P.e)
    assert target >= 0
    if n == 0:
        return ((),)
    a = [[Fraction(-x) for x in row] for row in P.form.gram]
    q = _cholesky_q(a)
    found: set[tuple[int, ...]] = set()
    x = [0] * n

    def descend(i: int, budget: Fraction) -> None:
        center = sum((q[i][j] * x[j] for j in range(i + 1, n)), Fraction(0))
        for m in _int_interval(center, budget / q[i][i]):
            x[i] = m
            used = q[i][i] * (m + center) ** 2
            if i == 0:
                if used == budget:
                    cand = tuple(x)
                    if _passes_filters(P, cand):
                        found.add(_class_representative(P, cand))
            else:
                descend(i - 1, budget - used)
        x[i] = 0

    descend(n - 1, Fraction(target))
    return tuple(sorted(found))


def _floor_sqrt_fraction(x: Fraction) -> int:
    assert x >= 0
    return isqrt(x.numerator * x.denominator) // x.denominator


def _inverse_diagonal(a: list[list[Fraction]]) -> list[Fraction]:
    n = len(a)
    m = [row[:] + [Fraction(1 if i == j else 0) for j in range(n)] for i, row in enumerate(a)]
    for col in range(n):
        piv = next((r for r in range(col, n) if m[r][col] != 0), None)
        if piv is None:
            raise NotDefinite("form is singular")
        m[col], m[piv] = m[piv], m[col]
        pv = m[col][col]
        m[col] = [v / pv for v in m[col]]
        for r in range(n):
            if r != col and m[r][col]:
                f = m[r][col]
                m[r] = [v - f * w for v, w in zip(m[r], m[col])]
    return [m[i][n + i] for i in range(n)]


def enumerate_C_e_bruteforce(P: CeProblem) -> tuple[tuple[int, ...], ...]:
    """Independent oracle: scan the full coordinate box |x_i| <= bound_i,
    bound_i = floor(sqrt(target * (A^-1)_ii)) for A = -gram (any solution
    obeys x_i^2 <= target * (A^-1)_ii), and filter.

    Exponential in the rank; for cross-checking small instances only.
    """
    n = P.form.rank
    target = -P.form.apply(P.e, P.e)
    if n == 0:
        return ((),)
    a = [[Fraction(-x) for x in row] for row in P.form.gram]
    inv_diag = _inverse_diagonal(a)
    bounds = [_floor_sqrt_fraction(target * d) for d in inv_diag]
    found: set[tuple[int, ...]] = set()

    def scan(i: int, partial: list[int]) -> None:
        if i == n:
            cand = tuple(partial)
            if P.form.apply(cand, cand) == -target and _passes_filters(P, cand):
                found.add(_class_representative(P, cand))
            return
        for v in range(-bounds[i], bounds[i] + 1):
            scan(i + 1, partial + [v])

    scan(0, [])
    return tuple(sorted(found))


def detect_orthogonal_split(G: GramForm, e) -> bool:
    """True iff the integer lattice is generated by e together with the
    integer orthogonal complement of e, decided exactly over Z.

    Writing v = scale * (G e) (an integer vector), the complement is the
    integer kernel of v; stacking e on a kernel basis, the split holds iff
    the determinant is +-1.  When it holds, C(e) is a single point.
    """
    if not is_negative_definite(G):
        raise NotDefinite("orthogonal split test requires a negative definite form")
    e = tuple(int(x) for x in e)
    if len(e) != G.rank:
        raise BadParameters("class length does not match form rank")
    if all(x == 0 for x in e):
        return True
    v = []
    for i in range(G.rank):
        val = Fraction(G.scale * sum(G.gram[i][j] * e[j] for j in range(G.rank)))
        assert val.denominator == 1
        v.append(int(val))
    basis = kernel_basis_int(v)
    mat = [list(e)] + basis
    return abs(det_int(mat)) == 1


# ---------------------------------------------------------------------------
# the surgery-family Diophantine count
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ReducibleCountVerdict:
    """Outcome of the exhaustive reducible-count check.

    ``solutions`` lists all (k, l2, l3) with k in [0, a), k = 1 mod p,
    k = +-1 mod q and mod (pq n - d), satisfying d^2 = l3 a + (d k + a l2)^2
    with l3 >= 0.  The intended conclusion holds iff the only solution is
    (1, 0, 0); the number of reducibles then equals the order of the
    (odd) relative torsion group, recorded as a parity only.
    """

    solutions: tuple[tuple[int, int, int], ...]
    torsion_odd: bool

    @property
    def unique_witness(self) -> bool:
        return self.solutions == ((1, 0, 0),)

    @property
    def count_parity(self) -> str:
        return "odd" if (self.unique_witness and self.torsion_odd) else "unknown"


def sfqhs_reducible_count(
    p: int, q: int, d: int, n_last: int, torsion_odd: bool, window_slack: int = 0
) -> ReducibleCountVerdict:
    """Exhaustively verify that the restriction class of a reducible bundle
    in the surgery-family argument is pinned to k = 1.

    Searches all k in [0, a) with k = 1 mod p, k = +-1 mod q and
    k = +-1 mod (pq n - d), where a = pq (pq n - d), and all l2 with
    |d k + a l2| <= d (sufficient: any solution of
    d^2 = l3 a + (d k + a l2)^2 with l3 >= 0 has |d k + a l2| <= d;
    ``window_slack`` widens the window for stability tests), and reports
    every solution.  Requires a > d^2 and p, q, d pairwise coprime, odd
    and positive, and the assertion that the relative torsion is odd.
    """
    if min(p, q, d) < 1 or p % 2 == 0 or q % 2 == 0 or d % 2 == 0:
        raise HypothesisFailed("p, q, d must be positive and odd")
    if gcd(p, q) != 1 or gcd(p, d) != 1 or gcd(q, d) != 1:
        raise HypothesisFailed("p, q, d must be pairwise coprime")
    a3 = p * q * n_last - d
    if a3 <= 0:
        raise HypothesisFailed("pq n - d must be positive")
    a = p * q * a3
    if a <= d * d:
        raise HypothesisFailed(f"need a = pq(pq n - d) = {a} > d^2 = {d * d}")
    if not torsion_odd:
        raise HypothesisFailed("oddness of the relative torsion group must be asserted")
    solutions = []
    for eps_q in (1, -1):
        for eps_3 in (1, -1):
            k = _crt3((1, p), (eps_q % q, q), (eps_3 % a3, a3))
            lo = ceil(Fraction(-d - d * k, a)) - window_slack
            hi = floor(Fraction(d - d * k, a)) + window_slack
            for l2 in range(lo, hi + 1):
                m = d * k + a * l2
                rem = d * d - m * m
                if rem >= 0 and rem % a == 0:
                    solutions.append((k, l2, rem // a))
    return ReducibleCountVerdict(solutions=tuple(sorted(set(solutions))), torsion_odd=torsion_odd)


def _crt3(*residues: tuple[int, int]) -> int:
    x, m = 0, 1
    for r, n in residues:
        g, u, _ = xgcd(m, n)
        assert g == 1
        x = (x + (r - x) * u % n * m) % (m * n)
        m *= n
    return x
