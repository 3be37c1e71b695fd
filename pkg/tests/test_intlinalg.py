from random import Random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from graphperiod.intlinalg import (
    DimensionMismatch,
    NoneUpTo,
    column_lattice,
    det_bareiss,
    diagonal,
    identity_matrix,
    matmul,
    matvec,
    minimal_multiple_in_image,
    smith_normal_form,
)


def check_snf_contract(a):
    u, s, v = smith_normal_form(a)
    assert matmul(matmul(u, a), v) == s
    assert abs(det_bareiss(u)) == 1
    assert abs(det_bareiss(v)) == 1
    rows, cols = len(a), len(a[0])
    for i in range(rows):
        for j in range(cols):
            if i != j:
                assert s[i][j] == 0
    d = diagonal(s)
    assert all(x >= 0 for x in d)
    for x, y in zip(d, d[1:]):
        if x == 0:
            assert y == 0
        else:
            assert y % x == 0
    return d


def test_snf_identity():
    d = check_snf_contract(identity_matrix(3))
    assert d == [1, 1, 1]


def test_snf_hand_example():
    # det = -8, gcd of entries 2, so the invariant factors are 2 and 4
    d = check_snf_contract([[2, 4], [6, 8]])
    assert d == [2, 4]


def test_snf_zero_matrix():
    d = check_snf_contract([[0, 0], [0, 0]])
    assert d == [0, 0]


def test_snf_invariant_under_permutation():
    rng = Random(5)
    for _ in range(20):
        rows, cols = rng.randint(2, 6), rng.randint(2, 6)
        a = [[rng.randint(-9, 9) for _ in range(cols)] for _ in range(rows)]
        d1 = check_snf_contract(a)
        rperm = list(range(rows))
        cperm = list(range(cols))
        rng.shuffle(rperm)
        rng.shuffle(cperm)
        b = [[a[i][j] for j in cperm] for i in rperm]
        assert check_snf_contract(b) == d1


@settings(max_examples=60, deadline=None)
@given(
    st.integers(1, 6).flatmap(
        lambda r: st.integers(1, 6).flatmap(
            lambda c: st.lists(
                st.lists(st.integers(-30, 30), min_size=c, max_size=c),
                min_size=r,
                max_size=r,
            )
        )
    )
)
def test_snf_contract_hypothesis(a):
    check_snf_contract(a)


def test_minimal_multiple_identity():
    n, x = minimal_multiple_in_image(identity_matrix(3), [4, -1, 7], bound=5)
    assert n == 1
    assert x == [4, -1, 7]


def test_minimal_multiple_single_entry():
    n, x = minimal_multiple_in_image([[2]], [1], bound=4)
    assert n == 2
    assert x == [1]


def test_minimal_multiple_diag_2_3():
    # brute force over n = 1..6: n*(1,1) in im diag(2,3) first at n = 6
    d = [[2, 0], [0, 3]]
    expected = None
    for n in range(1, 7):
        if (n % 2 == 0) and (n % 3 == 0):
            expected = n
            break
    assert expected == 6
    n, x = minimal_multiple_in_image(d, [1, 1], bound=6)
    assert n == 6
    assert matvec(d, x) == [6, 6]


def test_minimal_multiple_none_up_to():
    result = minimal_multiple_in_image([[2]], [1], bound=1)
    assert result == NoneUpTo(bound=1)


def test_minimal_multiple_dimension_mismatch():
    with pytest.raises(DimensionMismatch):
        minimal_multiple_in_image([[1, 0]], [1, 2], bound=3)


def test_minimal_multiple_routes_agree():
    rng = Random(11)
    for _ in range(40):
        rows, cols = rng.randint(1, 6), rng.randint(1, 6)
        d = [[rng.randint(-6, 6) for _ in range(cols)] for _ in range(rows)]
        c = [rng.randint(-4, 4) for _ in range(rows)]
        r1 = minimal_multiple_in_image(d, c, bound=12, method="hnf")
        r2 = minimal_multiple_in_image(d, c, bound=12, method="snf")
        if isinstance(r1, NoneUpTo):
            assert isinstance(r2, NoneUpTo)
        else:
            assert not isinstance(r2, NoneUpTo)
            assert r1[0] == r2[0]
            assert matvec(d, r1[1]) == [r1[0] * y for y in c]
            assert matvec(d, r2[1]) == [r2[0] * y for y in c]


def test_minimal_multiple_minimality_brute_force():
    rng = Random(7)
    for _ in range(25):
        rows, cols = rng.randint(1, 4), rng.randint(1, 4)
        d = [[rng.randint(-4, 4) for _ in range(cols)] for _ in range(rows)]
        c = [rng.randint(-3, 3) for _ in range(rows)]
        result = minimal_multiple_in_image(d, c, bound=10)
        solver = column_lattice(d)
        memberships = [n for n in range(1, 11) if solver.contains([n * x for x in c])]
        if isinstance(result, NoneUpTo):
            assert memberships == []
        else:
            assert result[0] == memberships[0]


def test_lattice_solver_membership():
    solver = column_lattice([[2, 0], [0, 4]])
    assert solver.contains([2, 4])
    assert not solver.contains([1, 0])
    assert solver.contains([0, 0])
    coords = solver.coordinates([4, -8])
    assert coords == [2, -2]
