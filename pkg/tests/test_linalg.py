import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from plumblink.errors import NotSymmetric, SingularError
from plumblink.linalg import determinant, is_negative_definite, mat_vec, solve
from graphgen import random_symmetric
from oracles import cofactor_det, grid_witness, ldl_negative_definite

D4 = ((-2, 1, 1, 1), (1, -2, 0, 0), (1, 0, -2, 0), (1, 0, 0, -2))


def test_determinant_examples():
    assert determinant([[-3]]) == -3
    assert determinant([[-2, 1], [1, -2]]) == 3
    # cofactor along row 1: 16 - 4 - 4 - 4
    assert determinant(D4) == 4


def test_solve_examples():
    assert solve([[-3]], [-3]) == (1,)
    # -2c + a + b + d = 0, c - 2a = -2, c - 2b = 0, c - 2d = 0  =>  c = 2
    assert solve(D4, [0, -2, 0, 0]) == (2, 2, 1, 1)
    with pytest.raises(SingularError):
        solve([[0]], [1])


def test_solve_rational_rhs():
    x = solve([[2, 1], [1, 3]], [Fraction(1, 2), Fraction(-1, 3)])
    assert mat_vec([[2, 1], [1, 3]], x) == (Fraction(1, 2), Fraction(-1, 3))


def test_solve_dimension_mismatch():
    with pytest.raises(ValueError):
        solve([[1, 0], [0, 1]], [1])


def test_non_square_rejected():
    with pytest.raises(ValueError):
        determinant([[1, 2]])


def test_negative_definite_examples():
    assert is_negative_definite([[-3]])
    assert not is_negative_definite([[1]])
    assert not is_negative_definite([[0]])
    # minors -2, 3, -4, 4
    assert is_negative_definite(D4)
    with pytest.raises(NotSymmetric):
        is_negative_definite([[-2, 1], [0, -2]])


def test_negative_definite_zero_leading_minor():
    # Delta_1 = 0 with an indefinite tail
    assert not is_negative_definite([[0, 1], [1, -2]])


square = st.integers(1, 5).flatmap(
    lambda n: st.lists(st.lists(st.integers(-6, 6), min_size=n, max_size=n),
                       min_size=n, max_size=n))


@given(m=square, data=st.data())
def test_residual_is_exactly_zero(m, data):
    c = data.draw(st.lists(
        st.fractions(min_value=-10, max_value=10, max_denominator=7),
        min_size=len(m), max_size=len(m)))
    if cofactor_det(m) == 0:
        with pytest.raises(SingularError):
            solve(m, c)
    else:
        assert mat_vec(m, solve(m, c)) == tuple(c)


@given(m=square)
def test_determinant_matches_cofactor(m):
    assert determinant(m) == cofactor_det(m)


@given(rng=st.randoms(use_true_random=False), r=st.integers(1, 4))
def test_negative_definite_vs_oracles(rng, r):
    m = random_symmetric(rng, r)
    nd = is_negative_definite(m)
    assert nd == ldl_negative_definite(m)
    if nd:
        assert grid_witness(m) is None


def test_big_entries_stay_exact():
    rng = random.Random(11)
    n = 30
    m = [[rng.randint(-10**12, 10**12) for _ in range(n)] for _ in range(n)]
    c = [Fraction(rng.randint(-99, 99), rng.randint(1, 9)) for _ in range(n)]
    assert mat_vec(m, solve(m, c)) == tuple(c)
