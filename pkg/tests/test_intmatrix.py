"""Integer matrices and Smith normal form."""
import numpy as np
import pytest

from shelflab.errors import PreconditionError
from shelflab.intmatrix import IntMatrix
from shelflab.intmatrix import smith_normal_form
from shelflab.intmatrix import sparse_invariant_factors
from shelflab.verify import snf_round_trip


def test_shapes():
    assert IntMatrix([[1, 2, 3]]).shape == (1, 3)
    assert IntMatrix.zeros(0, 4).shape == (0, 4)
    assert IntMatrix([], 3, 0).shape == (3, 0)
    assert IntMatrix.zeros(2, 2).is_zero()


def test_not_a_matrix():
    with pytest.raises(PreconditionError):
        IntMatrix([1, 2, 3])


def test_product():
    a = IntMatrix([[1, 2], [3, 4]])
    assert a @ IntMatrix.identity(2) == a
    assert a @ IntMatrix([[0, 1], [1, 0]]) == IntMatrix([[2, 1], [4, 3]])
    assert (IntMatrix.zeros(2, 0) @ IntMatrix.zeros(0, 3)).shape == (2, 3)
    with pytest.raises(PreconditionError):
        _ = a @ IntMatrix([[1, 2, 3]])


def test_big_integers_stay_exact():
    big = 2 ** 70
    product = IntMatrix([[big]]) @ IntMatrix([[big]])
    assert product.entries[0, 0] == 2 ** 140


def test_determinant():
    assert IntMatrix([[1, 2], [3, 4]]).determinant() == -2
    assert IntMatrix([[0, 1], [1, 0]]).determinant() == -1
    assert IntMatrix([[2, 4], [1, 2]]).determinant() == 0
    assert IntMatrix.identity(3).determinant() == 1
    assert IntMatrix.identity(3).is_unimodular()
    with pytest.raises(PreconditionError):
        IntMatrix([[1, 2]]).determinant()


def test_triplets():
    matrix = IntMatrix([[0, -3], [5, 0], [0, 0]])
    text = matrix.to_triplets()
    assert text == "3 2\n0 1 -3\n1 0 5\n"
    assert IntMatrix.from_triplets(text) == matrix


def test_triplets_need_a_header():
    with pytest.raises(PreconditionError):
        IntMatrix.from_triplets("1 2 3\n")


def test_textbook_example():
    matrix = IntMatrix([[2, 4, 4], [-6, 6, 12], [10, -4, -16]])
    result = smith_normal_form(matrix)
    assert result.invariant_factors == [2, 6, 12]
    assert result.rank == 3
    assert result.torsion() == [2, 6, 12]
    assert snf_round_trip(matrix)


def test_divisibility_is_restored():
    result = smith_normal_form(IntMatrix([[2, 0], [0, 3]]))
    assert result.invariant_factors == [1, 6]


def test_rank_deficient():
    matrix = IntMatrix([[1, 2, 3], [2, 4, 6]])
    result = smith_normal_form(matrix)
    assert result.rank == 1
    assert result.invariant_factors == [1]
    assert snf_round_trip(matrix)


def test_without_transforms():
    result = smith_normal_form(IntMatrix([[4, 6]]), transforms=False)
    assert result.invariant_factors == [2]
    assert result.left_transform is None
    assert result.right_transform is None


def test_zero_matrix():
    result = smith_normal_form(IntMatrix.zeros(3, 2))
    assert result.rank == 0
    assert result.invariant_factors == []


def test_random_round_trips():
    rng = np.random.default_rng(7)
    for _ in range(40):
        rows, cols = rng.integers(1, 7, size=2)
        matrix = IntMatrix(rng.integers(-5, 6, size=(rows, cols)))
        assert snf_round_trip(matrix), matrix


def test_sparse_agrees_with_dense():
    rng = np.random.default_rng(11)
    for _ in range(40):
        rows, cols = (int(v) for v in rng.integers(1, 8, size=2))
        matrix = IntMatrix(rng.integers(-2, 3, size=(rows, cols)))
        dense = smith_normal_form(matrix, transforms=False)
        assert sparse_invariant_factors(matrix.to_sparse(), rows, cols) == (
            dense.rank, dense.invariant_factors,
        )


def test_sparse_unit_pivots():
    entries = {(0, 0): 1, (0, 1): 1, (1, 0): 1, (1, 1): -1}
    assert sparse_invariant_factors(entries, 2, 2) == (2, [1, 2])


def test_sparse_without_units():
    assert sparse_invariant_factors({(0, 0): 2, (1, 1): 3}, 2, 2) == (2, [1, 6])
    assert sparse_invariant_factors({}, 3, 3) == (0, [])
