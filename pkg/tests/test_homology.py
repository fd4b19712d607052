import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from stratakit.algebra import Arrow, QuiverPresentation, top_dual_degree, validate
from stratakit.errors import DomainError, GradedInput, InfiniteDimensional, InfiniteDual, SizeLimit
from stratakit.families import build_An, build_B, build_Lambda, fibonacci, lambda_for_B, shift
from stratakit.homology import (
    CochainComplex,
    HHProfile,
    bar_cochain_blocks,
    cohomology_euler_characteristic,
    euler_characteristic,
    graded_kronecker_complex,
    hh_b_formula,
    hh_bar_oracle,
    hh_graded_kronecker,
    hh_koszul,
    hh_kronecker_formula,
    hh_top_formula,
    koszul_cochain_complex,
    orbit_size,
    top_image_rank,
    twin_classes,
)
from stratakit.linalg import RationalMatrix

from oracles import sympy_rank

SEMISIMPLE = validate(QuiverPresentation(("1", "2"), (), ()))

degree_multisets = st.lists(st.integers(-3, 3), min_size=1, max_size=5)


def test_profile_drops_zeros_and_rejects_negatives():
    p = HHProfile({2: 0, 0: 1, -1: 3})
    assert p.dims == {-1: 3, 0: 1}
    assert p[5] == 0
    assert p == HHProfile({-1: 3, 0: 1}, method="bar")
    with pytest.raises(ValueError):
        HHProfile({0: -1})


def test_koszul_b21():
    assert hh_koszul(build_B(2, 1)).dims == {0: 3, 1: 4, 2: 2}
    assert hh_koszul(build_B(0, 0)).dims == {0: 2}


def test_koszul_b21_cochain_dims_and_euler():
    cx = koszul_cochain_complex(build_B(2, 1))
    assert cx.dims == [4, 5, 2]
    assert euler_characteristic(cx) == 1
    assert cohomology_euler_characteristic(cx) == 1


def test_koszul_a3_top_value():
    assert hh_koszul(build_An(3, (1, 1), (1,)))[3] == 1


@pytest.mark.parametrize("n", range(6))
def test_koszul_d_squared_and_range(n):
    for xs in itertools.product([1, 2], repeat=(n + 1) // 2):
        ys = (1,) * (n // 2)
        pres = build_An(n, xs, ys)
        cx = koszul_cochain_complex(pres)
        assert cx.d_squared_is_zero()
        assert list(cx.degrees) == list(range(top_dual_degree(pres) + 1))
        assert euler_characteristic(cx) == cohomology_euler_characteristic(cx)


@pytest.mark.parametrize("m", [1, 2])
def test_koszul_top_cochain_dimension_even(m):
    xs, ys = (2, 1, 1), (1, 2, 1)
    cx = koszul_cochain_complex(build_An(2 * m, xs, ys))
    prod = 1
    for i in range(m):
        prod *= xs[i] * ys[i]
    assert cx.dim(2 * m) == fibonacci(ys, shift(xs), 2 * m - 1)[2 * m - 1] * prod


@pytest.mark.parametrize("m", [1, 2])
def test_koszul_top_image_rank_odd(m):
    n = 2 * m + 1
    assert koszul_cochain_complex(build_An(n, (1,) * 3, (1,) * 2)).rank(n - 1) == 2
    for xs in itertools.product([1, 2], repeat=m + 1):
        for ys in itertools.product([1, 2], repeat=m):
            cx = koszul_cochain_complex(build_An(n, xs, ys))
            assert cx.rank(n - 1) == top_image_rank(n, xs, ys)


def test_koszul_ranks_match_sympy():
    cx = koszul_cochain_complex(build_An(3, (2, 1), (2,)))
    for d in cx.differentials:
        assert d.rank() == sympy_rank(d)


def test_koszul_errors():
    graded = build_Lambda([0, 1])
    with pytest.raises(GradedInput):
        hh_koszul(graded)
    loop = validate(QuiverPresentation(("1",), (Arrow("a", "1", "1"),), ()))
    with pytest.raises(InfiniteDimensional):
        hh_koszul(loop)
    # a loop with a^2 = 0 is finite-dimensional but its dual k[a] is not
    nilpotent = validate(QuiverPresentation(("1",), (Arrow("a", "1", "1"),), (("a", "a"),)))
    with pytest.raises(InfiniteDual):
        hh_koszul(nilpotent)


def test_semisimple():
    assert hh_koszul(SEMISIMPLE).dims == {0: 2}
    assert hh_bar_oracle(SEMISIMPLE, 3).dims == {0: 2}


def test_bar_b11():
    assert hh_bar_oracle(build_B(1, 1), 3).dims == {0: 2, 1: 1, 2: 1}


@pytest.mark.parametrize("x,y", [(1, 0), (0, 2), (2, 1), (1, 2), (2, 2)])
def test_bar_windows_and_symmetry_agree(x, y):
    pres = build_B(x, y)
    expected = hh_koszul(pres)
    assert hh_bar_oracle(pres, 3) == expected
    assert hh_bar_oracle(pres, 3, symmetric=False) == expected
    assert hh_bar_oracle(pres, 3, window="all", symmetric=False) == expected


@pytest.mark.parametrize("n", [3, 4])
def test_bar_window_all_on_small_an(n):
    pres = build_An(n, (1,) * 2, (1,) * 2)
    assert hh_bar_oracle(pres, n, window="all") == hh_koszul(pres)


def test_bar_blocks_are_complexes():
    blocks = bar_cochain_blocks(build_An(3, (2, 1), (1,)), 3, symmetric=True)
    assert blocks
    for cx in blocks.values():
        assert cx.d_squared_is_zero()
        assert euler_characteristic(cx) == cohomology_euler_characteristic(cx)


def test_twin_classes_and_orbits():
    pres = build_B(3, 2)
    classes = twin_classes(pres)
    assert sorted(len(c) for c in classes) == [2, 3]
    w = [0] * 5
    for c in classes:
        w[c[0]] = 1
    # one marked arrow in each class: 3 * 2 placements
    assert orbit_size(tuple(w), classes) == 6
    assert orbit_size((0,) * 5, classes) == 1


def test_bar_size_limit(monkeypatch):
    pres = build_An(4, (2, 2), (2, 2))
    with pytest.raises(SizeLimit):
        hh_bar_oracle(pres, 4)
    with pytest.raises(SizeLimit):
        hh_bar_oracle(build_B(2, 2), 3, max_dim=10)
    monkeypatch.setenv("STRATAKIT_MAX_DIM", "10")
    with pytest.raises(SizeLimit):
        hh_bar_oracle(build_B(2, 2), 3)


def test_bar_rejects_bad_input():
    with pytest.raises(DomainError):
        hh_bar_oracle(build_B(1, 1), -1)
    with pytest.raises(ValueError):
        hh_bar_oracle(build_B(1, 1), 2, window="wide")
    with pytest.raises(GradedInput):
        hh_bar_oracle(build_Lambda([1]), 2)


def test_example_3_4():
    expected = {-2: 1, -1: 1, 0: 2, 1: 2, 2: 1, 3: 1, 4: 1}
    assert hh_graded_kronecker([-1, 0, 2]).dims == expected
    assert hh_kronecker_formula([-1, 0, 2]).dims == expected


def test_kronecker_small_cases():
    assert hh_graded_kronecker([]).dims == {0: 2}
    assert hh_kronecker_formula([]).dims == {0: 2}
    assert hh_kronecker_formula([0]).dims == {0: 1}
    assert hh_kronecker_formula([0, 0]).dims == {0: 1, 1: 3}
    assert hh_graded_kronecker([0, 0]).dims == {0: 1, 1: 3}


def test_kronecker_map_shape():
    src, tgt, g = graded_kronecker_complex([0, 1])
    assert src == [0, 0]
    assert sorted(tgt) == [-1, 0, 0, 1]
    assert g.shape == (4, 2)
    assert g.rank() == 1


@pytest.mark.parametrize("x,y", [(x, y) for x in range(4) for y in range(4) if x + y])
def test_lambda_correspondence(x, y):
    expected = hh_b_formula(x, y)
    assert hh_graded_kronecker([0] * y + [1] * x) == expected
    assert hh_graded_kronecker(sorted(a.degree for a in lambda_for_B(x, y).arrows)) == expected


@settings(max_examples=150, deadline=None)
@given(degree_multisets)
def test_kronecker_formula_property(degrees):
    assert hh_kronecker_formula(degrees) == hh_graded_kronecker(degrees)


@settings(max_examples=150, deadline=None)
@given(degree_multisets)
def test_corollary_identities(degrees):
    prof = hh_graded_kronecker(degrees)
    n, a, b = len(degrees), min(degrees), max(degrees)
    assert prof.total() == n * n
    assert prof[0] == prof[2] + 1
    for p in prof.support:
        if p not in (0, 1, 2):
            assert prof[p] == prof[2 - p]
        assert p == 0 or 1 - b + a <= p <= 1 + b - a
    if 1 - b + a <= 0:
        assert prof[1 - b + a] > 0
    if any(p < 0 for p in prof.support):
        assert b - a >= 2


def test_top_formula():
    assert hh_top_formula(2, (3,), (2,)) == 6
    assert hh_top_formula(3, (1, 1), (1,)) == 1
    assert hh_top_formula(4, (1, 1), (1, 1)) == 2
    with pytest.raises(DomainError):
        hh_top_formula(1, (1,), ())


def test_top_formula_counterexample_to_constant_two():
    # dim C^3 = 8 for A_3((1,1),(2)); the last differential has rank 4
    pres = build_An(3, (1, 1), (2,))
    assert koszul_cochain_complex(pres).dims[3] == 8
    assert hh_koszul(pres)[3] == hh_bar_oracle(pres, 3)[3] == hh_top_formula(3, (1, 1), (2,)) == 4


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_top_formula_matches_koszul(n):
    for xs in itertools.product([1, 2], repeat=(n + 1) // 2):
        for ys in itertools.product([1, 2], repeat=n // 2):
            assert hh_top_formula(n, xs, ys) == hh_koszul(build_An(n, xs, ys))[n]


def test_euler_trivial_complexes():
    assert euler_characteristic(CochainComplex([], [])) == 0
    iso = CochainComplex([2, 2], [RationalMatrix.identity(2)])
    assert euler_characteristic(iso) == 0
    assert iso.cohomology_dims() == {0: 0, 1: 0}


def test_cochain_complex_shape_check():
    with pytest.raises(ValueError):
        CochainComplex([2, 3], [RationalMatrix.identity(2)])
    with pytest.raises(ValueError):
        CochainComplex([2, 3], [])


@pytest.mark.parametrize("n", range(5))
def test_vanishing_window(n):
    pres = build_An(n, (1, 2), (2, 1))
    prof = hh_koszul(pres)
    assert all(0 <= p <= top_dual_degree(pres) for p in prof.support)
