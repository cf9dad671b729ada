"""tau lower bounds, tau-hat assembly, and the compactness margin."""

from fractions import Fraction

import pytest

from gaugecert import (
    BadParameters,
    CsDenominatorProfile,
    EmptyBoundary,
    HypothesisFailed,
    LensSpace,
    NegativeCharge,
    SeifertData,
    TauBound,
    compactness_margin,
    tau_hat,
    tau_lower_from_denominator,
    tau_lower_from_profile,
    tau_lower_lens,
    tau_lower_seifert,
)


def test_denominator_bounds():
    assert tau_lower_from_denominator(66).value == Fraction(1, 66)
    assert tau_lower_from_denominator(1).value == 1
    assert tau_lower_from_denominator(24).value == Fraction(1, 24)
    with pytest.raises(BadParameters):
        tau_lower_from_denominator(0)


def test_lens_bounds():
    assert tau_lower_lens(LensSpace(2, 1)).value == 2
    assert tau_lower_lens(LensSpace(11, 9)).value == Fraction(4, 11)
    assert tau_lower_lens(LensSpace(3, 1)).value == Fraction(4, 3)


def test_seifert_bounds():
    S = SeifertData(((3, 1), (5, -2), (83, 6)))  # a = 1245, d = 7
    assert tau_lower_seifert(S).value == Fraction(1, 1245)
    S235 = SeifertData(((2, 1), (3, 1), (5, -4)))  # a = 30, d = 1
    assert tau_lower_seifert(S235).value == Fraction(1, 30)
    with pytest.raises(HypothesisFailed):
        tau_lower_seifert(SeifertData(((3, 1), (5, 1))))  # d = 8 even


def test_profile_bound():
    prof = CsDenominatorProfile(
        component="surgery piece",
        guaranteed_denominators=frozenset({3, 24}),
        source="user-supplied",
        provenance="external computation",
    )
    assert tau_lower_from_profile(prof).value == Fraction(1, 24)
    with pytest.raises(BadParameters):
        CsDenominatorProfile("x", frozenset({24}), "user-supplied", provenance="")
    with pytest.raises(BadParameters):
        CsDenominatorProfile("x", frozenset(), "lens")


def test_tau_hat():
    bounds = [tau_lower_lens(LensSpace(2, 1)), tau_lower_lens(LensSpace(11, 9)),
              tau_lower_from_denominator(24)]
    assert tau_hat(bounds).value == Fraction(1, 24)
    assert tau_hat([tau_lower_lens(LensSpace(3, 1))]).value == Fraction(4, 3)
    with pytest.raises(EmptyBoundary):
        tau_hat([])


def test_tau_hat_monotone():
    bounds = [tau_lower_from_denominator(5)]
    before = tau_hat(bounds).value
    bounds.append(tau_lower_from_denominator(7))
    assert tau_hat(bounds).value <= before


def test_bound_range_invariant():
    with pytest.raises(BadParameters):
        TauBound(Fraction(5))
    with pytest.raises(BadParameters):
        TauBound(Fraction(0))
    assert TauBound(4).value == 4


def test_compactness_margin():
    assert compactness_margin(Fraction(1, 66), tau_lower_from_denominator(24)) == Fraction(7, 264)
    assert compactness_margin(Fraction(1, 24), tau_lower_from_denominator(24)) == 0
    with pytest.raises(NegativeCharge):
        compactness_margin(Fraction(-1, 2), tau_lower_from_denominator(24))


def test_sfqhs_inequality_suite():
    # for hypothesis-passing family data, p_1 is strictly below every
    # member of the displayed minimum set
    cases = [(3, 5, 7, (6, 48, 342)), (3, 5, 1, (2, 4, 8)), (3, 7, 5, (2, 10, 52)), (5, 7, 3, (2, 8, 26))]
    for p, q, d, ns in cases:
        pq = p * q
        n_last = ns[-1]
        p1 = Fraction(d, pq * (pq * n_last - d))
        assert p1 < Fraction(1, d)
        assert p1 < Fraction(1, p)
        assert p1 < Fraction(1, q)
        for n_i in ns[:-1]:
            assert p1 < Fraction(1, pq * (pq * n_i - d))
