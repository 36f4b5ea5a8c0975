from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from threelie.linalg import Matrix, Vec, rank_kernel, solve

small = st.integers(min_value=-6, max_value=6).map(Fraction)


def matrices(nrows, ncols):
    return st.lists(
        st.lists(small, min_size=ncols, max_size=ncols),
        min_size=nrows,
        max_size=nrows,
    ).map(Matrix)


def test_vec_arithmetic():
    v = Vec([1, 2, 3])
    w = Vec([Fraction(1, 2), 0, -3])
    assert v + w == Vec([Fraction(3, 2), 2, 0])
    assert -v == Vec([-1, -2, -3])
    assert 2 * v == Vec([2, 4, 6])
    assert Vec.zero(3).is_zero()
    assert Vec.basis(3, 1) == Vec([0, 1, 0])
    assert not v.is_zero()


def test_matrix_apply_and_matmul():
    a = Matrix([[1, 2], [3, 4]])
    assert a @ Vec([1, 0]) == Vec([1, 3])
    assert a @ Matrix.identity(2) == a
    assert (a @ a) == Matrix([[7, 10], [15, 22]])
    assert a.transpose() == Matrix([[1, 3], [2, 4]])
    assert Matrix.diagonal([1, -1]) @ Vec([2, 3]) == Vec([2, -3])
    assert Matrix.from_cols([Vec([1, 3]), Vec([2, 4])]) == a


def test_matrix_shape_errors():
    with pytest.raises(ValueError):
        Matrix([[1, 2], [3]])
    with pytest.raises(ValueError):
        Matrix([[1, 2]]) @ Vec([1, 2, 3])


def test_rank_kernel_known():
    rank, ker = rank_kernel([[1, 2, 3], [2, 4, 6], [1, 1, 1]], 3)
    assert rank == 2
    assert len(ker) == 1
    a = Matrix([[1, 2, 3], [2, 4, 6], [1, 1, 1]])
    assert (a @ ker[0]).is_zero()


def test_rank_kernel_sparse_rows():
    rank, ker = rank_kernel([{0: Fraction(1)}, {0: Fraction(2)}], 3)
    assert rank == 1
    assert [tuple(v) for v in ker] == [(0, 1, 0), (0, 0, 1)]


def test_rank_kernel_zero_matrix():
    rank, ker = rank_kernel([], 2)
    assert rank == 0
    assert len(ker) == 2


def test_solve_unique():
    x = solve([[2, 0], [0, 3]], 2, [4, 9])
    assert x == Vec([2, 3])


def test_solve_underdetermined_deterministic():
    # Free variables pinned to zero.
    x = solve([[1, 1]], 2, [5])
    assert x == Vec([5, 0])


def test_solve_inconsistent():
    assert solve([[1, 1], [1, 1]], 2, [1, 2]) is None
    assert solve([[0, 0]], 2, [1]) is None


@given(m=matrices(4, 3))
def test_kernel_vectors_annihilate(m):
    rank, ker = rank_kernel(m.rows, 3)
    assert rank + len(ker) == 3
    for v in ker:
        assert (m @ v).is_zero()


@given(m=matrices(3, 4))
def test_rank_bounds_and_transpose(m):
    r = m.rank()
    assert 0 <= r <= 3
    assert m.transpose().rank() == r


@given(m=matrices(3, 3), v=st.lists(small, min_size=3, max_size=3).map(Vec))
def test_solve_recovers_image_points(m, v):
    x = solve(m.rows, 3, m @ v)
    assert x is not None
    assert m @ x == m @ v
