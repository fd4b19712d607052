import functools
import itertools

import pytest

from stratakit.algebra import cartan_matrix, enumerate_paths
from stratakit.errors import Degenerate, DomainError
from stratakit.families import (
    an_lengths,
    build_An,
    build_B,
    build_Lambda,
    cartan_formula,
    degree_multiset,
    fibonacci,
    lambda_for_B,
    shift,
)


def same_up_to_labels(p, q) -> bool:
    if p.vertices != q.vertices or len(p.arrows) != len(q.arrows):
        return False
    mapping = {a.label: b.label for a, b in zip(p.arrows, q.arrows)}
    if any((a.source, a.target, a.degree) != (b.source, b.target, b.degree) for a, b in zip(p.arrows, q.arrows)):
        return False
    return {(mapping[l], mapping[e]) for l, e in p.relation_set} == q.relation_set


def test_b_counts():
    b = build_B(2, 1)
    assert len(b.arrows) == 3 and len(b.relations) == 2
    assert build_B(0, 0).arrows == ()


def test_b_cartan():
    for x, y in itertools.product(range(4), repeat=2):
        assert cartan_matrix(enumerate_paths(build_B(x, y))).entries == ((1, y), (x, 1 + x * y))


def test_lambda():
    lam = build_Lambda([2, -1, 0])
    assert degree_multiset(lam) == [-1, 0, 2]
    assert not lam.relations and all((a.source, a.target) == ("1", "2") for a in lam.arrows)
    assert build_Lambda([]).arrows == ()
    assert degree_multiset(lambda_for_B(2, 1)) == [0, 1, 1]
    assert degree_multiset(lambda_for_B(0, 1)) == [0]
    with pytest.raises(Degenerate):
        lambda_for_B(0, 0)


def test_an_small_cases():
    assert same_up_to_labels(build_An(2, (3,), (2,)), build_B(3, 2))
    assert same_up_to_labels(build_An(1, (2,), ()), build_B(2, 0))
    assert build_An(0, (), ()).arrows == ()


def test_a3_hand_expansion():
    a3 = build_An(3, (1, 1), (1,))
    assert [a.label for a in a3.arrows] == ["a.1.1", "b.1.1", "a.2.1"]
    assert a3.relation_set == {("b.1.1", "a.1.1"), ("a.2.1", "b.1.1")}


def test_an_nesting():
    xs, ys = (2, 1, 3, 1), (1, 2, 2)
    for n in range(1, 8):
        big, small = build_An(n, xs, ys), build_An(n - 1, xs, ys)
        assert big.arrows[: len(small.arrows)] == small.arrows
        kept = {a.label for a in small.arrows}
        assert {r for r in big.relation_set if set(r) <= kept} == small.relation_set


def test_an_parameter_errors():
    with pytest.raises(DomainError):
        build_An(3, (1,), (1,))
    with pytest.raises(DomainError):
        build_An(2, (0,), (1,))
    with pytest.raises(DomainError):
        build_An(-1, (), ())
    assert an_lengths(5) == (3, 2)


def test_fibonacci_examples():
    assert list(fibonacci([1] * 3, [1] * 3, 7).values) == [0, 1, 1, 2, 3, 5, 8, 13]
    x1, y1, x2 = 2, 3, 5
    F = fibonacci([x1, x2], [y1], 4)
    assert F[2] == x1
    assert F[4] == x1 + x2 + x1 * y1 * x2
    with pytest.raises(DomainError):
        fibonacci([1], [], 4)


def test_fibonacci_recursion_big_numbers():
    xs, ys = [10**6] * 20, [10**6 + 1] * 20
    F = fibonacci(xs, ys, 40)
    for m in range(1, 20):
        assert F[2 * m] == F[2 * m - 2] + F[2 * m - 1] * xs[m - 1]
        assert F[2 * m + 1] == F[2 * m - 1] + F[2 * m] * ys[m - 1]
    assert F[40] > 2**64


@pytest.mark.parametrize("n", range(7))
def test_cartan_formula_matches_counting(n):
    for xs in itertools.product([1, 2, 3], repeat=(n + 1) // 2):
        for ys in itertools.product([1, 3], repeat=n // 2):
            assert cartan_matrix(build_An(n, xs, ys)).entries == cartan_formula(n, xs, ys)


@pytest.mark.parametrize("n", range(7))
def test_counting_matches_enumeration(n):
    for xs in itertools.product([1, 2], repeat=(n + 1) // 2):
        ys = (2,) * (n // 2)
        pres = build_An(n, xs, ys)
        assert cartan_matrix(pres) == cartan_matrix(enumerate_paths(pres))


def test_shift():
    assert shift([4, 5, 6]) == (5, 6)


def _matmul(a, b):
    return tuple(tuple(sum(a[i][k] * b[k][j] for k in range(2)) for j in range(2)) for i in range(2))


@functools.lru_cache(maxsize=None)
def an_cartan(n, xs, ys):
    return cartan_matrix(build_An(n, xs, ys)).entries


@pytest.mark.parametrize("m", range(1, 4))
def test_cartan_recursion_factorizations(m):
    # with c_ij = #paths j -> i the stage factors act on the right
    for xs in itertools.product([1, 2, 3], repeat=m):
        for ys in itertools.product([1, 2, 3], repeat=m):
            even = an_cartan(2 * m, xs, ys)
            assert even == _matmul(an_cartan(2 * m - 1, xs, ys[:-1]), ((1, ys[-1]), (0, 1)))
            for x_next in (1, 2, 3):
                assert an_cartan(2 * m + 1, xs + (x_next,), ys) == _matmul(even, ((1, 0), (x_next, 1)))
