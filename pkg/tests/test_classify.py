import itertools

import pytest

from stratakit.algebra import Arrow, QuiverPresentation, validate
from stratakit.classify import (
    Verdict,
    b_candidates,
    b_derived_equivalent,
    certify,
    global_dimension,
    hh_invariance_check,
)
from stratakit.errors import GradedInput, InfiniteDimensional, InfiniteGlobalDimension, WrongSimpleCount
from stratakit.families import build_An, build_B, build_Lambda
from stratakit.homology import HHProfile, hh_b_formula


def an_grid(n, entries=(1, 2)):
    for xs in itertools.product(entries, repeat=(n + 1) // 2):
        for ys in itertools.product(entries, repeat=n // 2):
            yield xs, ys, build_An(n, xs, ys)


@pytest.mark.parametrize("n", [3, 4, 5])
def test_an_is_derived_simple(n):
    for xs, ys, pres in an_grid(n):
        cert = certify(pres)
        assert cert.verdict is Verdict.DERIVED_SIMPLE
        assert cert.witness[0] == n and cert.witness[1] > 0
        assert cert.global_dimension == n
        assert cert.candidates == ()


@pytest.mark.parametrize("n", [0, 1, 2])
def test_small_an_consistent_with_b(n):
    for xs, ys, pres in an_grid(n):
        cert = certify(pres)
        assert cert.verdict is Verdict.CONSISTENT_WITH_QUASI_HEREDITARY
        assert cert.witness is None
        assert cert.candidates


def test_a2_candidates_name_the_b_algebra():
    cert = certify(build_An(2, (2,), (3,)))
    assert set(cert.candidates) == {(2, 3), (3, 2)}


def test_assumptions_are_reported():
    cert = certify(build_B(1, 1))
    assert set(cert.assumptions) == {"two_simple_modules", "finite_global_dimension", "base_field_algebraically_closed"}
    assert cert.assumptions["base_field_algebraically_closed"].startswith("assumed")


def test_certify_preconditions():
    three = validate(QuiverPresentation(("1", "2", "3"), (), ()))
    with pytest.raises(WrongSimpleCount):
        certify(three)
    with pytest.raises(GradedInput):
        certify(build_Lambda([0, 1]))
    cyc = validate(QuiverPresentation(("1", "2"), (Arrow("a", "1", "2"), Arrow("b", "2", "1")), ()))
    with pytest.raises(InfiniteDimensional):
        certify(cyc)
    # a 2-cycle with both composites zero: finite-dimensional, infinite global dimension
    half = validate(
        QuiverPresentation(("1", "2"), (Arrow("a", "1", "2"), Arrow("b", "2", "1")), (("b", "a"), ("a", "b")))
    )
    with pytest.raises(InfiniteGlobalDimension):
        certify(half)
    with pytest.raises(InfiniteGlobalDimension):
        global_dimension(half)


@pytest.mark.parametrize("x,y", [(x, y) for x in range(4) for y in range(4)])
def test_b_candidates_round_trip(x, y):
    cands = b_candidates(hh_b_formula(x, y))
    assert (x, y) in cands
    assert all(sorted(c) == sorted((x, y)) for c in cands)


def test_b_candidates_reject_foreign_profiles():
    assert b_candidates(HHProfile({0: 1, 3: 1})) == ()
    assert b_candidates(HHProfile({0: 2, 1: 1, 2: 2})) == ()
    assert b_candidates(HHProfile({0: 3, 1: 3, 2: 2})) == ()


def test_b_derived_equivalent_grid():
    for x, y, x2, y2 in itertools.product(range(5), repeat=4):
        assert b_derived_equivalent(x, y, x2, y2) == (sorted((x, y)) == sorted((x2, y2)))


def test_b_derived_equivalent_rejects_negative():
    with pytest.raises(ValueError):
        b_derived_equivalent(-1, 0, 0, 0)


def test_hh_invariance_check():
    assert hh_invariance_check(build_B(2, 3), 3, 2)
    assert not hh_invariance_check(build_B(2, 3), 1, 3)
    # A_1 and A_2 are B-algebras
    assert hh_invariance_check(build_An(1, (3,), ()), 3, 0)
    assert hh_invariance_check(build_An(2, (2,), (1,)), 2, 1)


def test_global_dimension_b():
    assert global_dimension(build_B(2, 1)) == 2
    assert global_dimension(build_B(0, 0)) == 0
    assert global_dimension(build_B(1, 0)) == 1
