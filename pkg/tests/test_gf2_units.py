from __future__ import annotations

import itertools

import numpy as np
import pytest

from dualpeel.core.gf2 import (
    BitIndexError,
    BitVector,
    DimensionMismatchError,
    SparseBinaryMatrix,
    dualize,
    is_codeword,
    is_consistent,
    left_mul,
    mat_vec_mul,
    nullspace,
    rank,
    reduce_system,
    solve_left,
    solve_right,
)

HAMMING_CHECK = SparseBinaryMatrix.from_dense(
    [
        [1, 0, 1, 0, 1, 0, 1],
        [0, 1, 1, 0, 0, 1, 1],
        [0, 0, 0, 1, 1, 1, 1],
    ],
)
SPC3_GENERATOR = SparseBinaryMatrix.from_dense([[1, 0, 1], [0, 1, 1]])
SPC3_CHECK = SparseBinaryMatrix.from_dense([[1, 1, 1]])


def row_space(matrix: SparseBinaryMatrix) -> set[int]:
    return {
        left_mul(BitVector.from_bits(message), matrix).bits
        for message in itertools.product((0, 1), repeat=matrix.rows)
    }


def test_bit_vector_construction_and_views() -> None:
    word = BitVector.from_string("0110")

    assert word.length == 4
    assert word.bits == 0b0110
    assert word.to_list() == [0, 1, 1, 0]
    assert word.to_string() == "0110"
    assert word.support() == (1, 2)
    assert word.weight == 2
    assert word[1] == 1
    assert len(word) == 4
    assert BitVector.from_positions(4, [1, 2]) == word
    assert BitVector.from_array(np.array([0, 1, 1, 0])) == word
    assert BitVector.ones(3).to_string() == "111"
    assert BitVector.zeros(0).to_list() == []
    assert word.set(0, 1).to_string() == "1110"
    assert word.set(1, 0).to_string() == "0010"


def test_bit_vector_packing_spans_many_bytes() -> None:
    rng = np.random.default_rng(7)
    bits = rng.integers(0, 2, size=1000, dtype=np.uint8)

    word = BitVector.from_array(bits)

    assert word.length == 1000
    assert np.array_equal(word.to_array(), bits)
    assert word.weight == int(bits.sum())


def test_bit_vector_algebra() -> None:
    left = BitVector.from_string("1100")
    right = BitVector.from_string("1010")

    assert (left ^ right).to_string() == "0110"
    assert (left & right).to_string() == "1000"
    assert (~left).to_string() == "0011"
    assert ~~left == left


def test_bit_vector_rejects_bad_input() -> None:
    with pytest.raises(ValueError, match="non-negative"):
        BitVector(-1)
    with pytest.raises(BitIndexError, match="exceed length"):
        BitVector(2, 0b100)
    with pytest.raises(ValueError, match="Bit 1 must be 0 or 1"):
        BitVector.from_bits([0, 2])
    with pytest.raises(DimensionMismatchError, match="one-dimensional"):
        BitVector.from_array(np.zeros((2, 2)))
    with pytest.raises(BitIndexError, match="outside length"):
        BitVector.from_positions(3, [3])
    with pytest.raises(BitIndexError):
        _ = BitVector.zeros(3)[3]
    with pytest.raises(DimensionMismatchError, match="Cannot combine"):
        _ = BitVector.zeros(2) ^ BitVector.zeros(3)


def test_sparse_matrix_views() -> None:
    matrix = SparseBinaryMatrix.from_dense([[1, 1, 0], [0, 1, 1]])

    assert matrix.shape == (2, 3)
    assert matrix.nnz == 4
    assert matrix.row_support(1) == (1, 2)
    assert matrix.col_support(1) == (0, 1)
    assert matrix.row_degrees() == [2, 2]
    assert matrix.col_degrees() == [1, 2, 1]
    assert matrix.row_masks() == [0b011, 0b110]
    assert matrix.col_masks() == [0b01, 0b11, 0b10]
    assert matrix.transpose().to_dense() == [[1, 0], [1, 1], [0, 1]]
    assert matrix.select_columns([2, 0]).to_dense() == [[0, 1], [1, 0]]
    assert matrix.permute_columns([2, 1, 0]).to_dense() == [[0, 1, 1], [1, 1, 0]]
    assert matrix.stack(SparseBinaryMatrix.identity(3)).rows == 5
    assert SparseBinaryMatrix.from_row_masks([0b101], 3).to_dense() == [[1, 0, 1]]
    assert SparseBinaryMatrix.zeros(2, 2).nnz == 0


def test_sparse_matrix_cancels_repeated_positions() -> None:
    matrix = SparseBinaryMatrix.from_rows([[0, 1, 1], [2]], 3)

    assert matrix.to_dense() == [[1, 0, 0], [0, 0, 1]]


def test_sparse_matrix_rejects_bad_shapes() -> None:
    with pytest.raises(BitIndexError, match="outside"):
        SparseBinaryMatrix(1, 1, frozenset({(0, 1)}))
    with pytest.raises(ValueError, match="non-negative"):
        SparseBinaryMatrix(-1, 2)
    with pytest.raises(DimensionMismatchError, match="same length"):
        SparseBinaryMatrix.from_dense([[1, 0], [1]])
    with pytest.raises(ValueError, match="distinct"):
        SPC3_CHECK.select_columns([0, 0])
    with pytest.raises(ValueError, match="permutation"):
        SPC3_CHECK.permute_columns([0, 1])
    with pytest.raises(DimensionMismatchError, match="Cannot stack"):
        SPC3_CHECK.stack(SparseBinaryMatrix.identity(2))


def test_mat_vec_mul_examples() -> None:
    identity = SparseBinaryMatrix.identity(3)

    assert mat_vec_mul(identity, BitVector.from_string("101")).to_string() == "101"
    assert mat_vec_mul(SPC3_CHECK, BitVector.from_string("110")).to_string() == "0"
    with pytest.raises(DimensionMismatchError):
        mat_vec_mul(identity, BitVector.zeros(2))
    with pytest.raises(DimensionMismatchError):
        left_mul(BitVector.zeros(2), identity)


def test_hamming_codewords_satisfy_every_check() -> None:
    generator = nullspace(HAMMING_CHECK)
    codewords = row_space(generator)

    assert generator.rows == 4
    assert len(codewords) == 16
    for codeword in codewords:
        assert mat_vec_mul(HAMMING_CHECK, BitVector(7, codeword)).bits == 0


def test_is_codeword_examples() -> None:
    assert is_codeword(SPC3_CHECK, BitVector.from_string("000"))
    assert is_codeword(SPC3_CHECK, BitVector.from_string("110"))
    assert not is_codeword(SPC3_CHECK, BitVector.from_string("100"))


def test_rank_examples() -> None:
    assert rank(SparseBinaryMatrix.identity(3)) == 3
    assert rank(SparseBinaryMatrix.zeros(4, 4)) == 0
    assert rank(HAMMING_CHECK) == 3
    assert rank(SparseBinaryMatrix.from_dense([[1, 1], [1, 1]])) == 1


def test_rank_matches_column_rank_on_random_matrices() -> None:
    rng = np.random.default_rng(11)
    for _ in range(25):
        dense = rng.integers(0, 2, size=(5, 8)).tolist()
        matrix = SparseBinaryMatrix.from_dense(dense)

        assert rank(matrix) == rank(matrix.transpose())
        assert rank(matrix) + nullspace(matrix).rows == matrix.cols


def test_rank_is_invariant_under_row_and_column_permutations() -> None:
    rng = np.random.default_rng(23)
    for _ in range(25):
        rows, cols = (int(size) for size in rng.integers(1, 12, size=2))
        matrix = SparseBinaryMatrix.from_dense(rng.integers(0, 2, size=(rows, cols)).tolist())
        row_order = rng.permutation(rows).tolist()
        col_order = rng.permutation(cols).tolist()

        shuffled = SparseBinaryMatrix.from_rows(
            [matrix.row_support(row_index) for row_index in row_order],
            cols,
        ).permute_columns(col_order)

        assert rank(shuffled) == rank(matrix)


def test_solve_right_examples() -> None:
    identity_solution = solve_right(SparseBinaryMatrix.identity(2), BitVector.from_string("10"))
    assert identity_solution is not None
    assert identity_solution.solution.to_string() == "10"
    assert identity_solution.unique

    free = solve_right(SparseBinaryMatrix.from_dense([[1, 1]]), BitVector.from_string("1"))
    assert free is not None
    assert free.solution.to_string() in {"10", "01"}
    assert not free.unique

    contradiction = SparseBinaryMatrix.from_dense([[1, 0], [1, 0]])
    assert solve_right(contradiction, BitVector.from_string("10")) is None
    with pytest.raises(DimensionMismatchError):
        solve_right(contradiction, BitVector.zeros(3))


def test_solve_right_recovers_spc_codeword_from_stacked_system() -> None:
    stacked = SparseBinaryMatrix.from_dense([[1, 0, 0], [0, 1, 0], [1, 1, 1]])
    for first, second in itertools.product((0, 1), repeat=2):
        transmitted = BitVector.from_bits([first, second, first ^ second])

        found = solve_right(stacked, BitVector.from_bits([first, second, 0]))

        assert found is not None
        assert found.unique
        assert found.solution == transmitted


def test_solve_left_examples() -> None:
    identity = solve_left(SparseBinaryMatrix.identity(3), BitVector.from_string("011"))
    assert identity is not None
    assert identity.to_string() == "011"
    assert solve_left(SPC3_CHECK, BitVector.from_string("101")) is None

    message = solve_left(SPC3_GENERATOR, BitVector.from_string("101"))
    assert message is not None
    assert message.to_string() == "10"
    assert left_mul(message, SPC3_GENERATOR).to_string() == "101"
    with pytest.raises(DimensionMismatchError):
        solve_left(SPC3_GENERATOR, BitVector.zeros(2))


def test_consistency_and_reduced_form() -> None:
    masks = SparseBinaryMatrix.from_dense([[1, 1], [1, 1]]).row_masks()

    assert is_consistent(masks, 0b11)
    assert not is_consistent(masks, 0b01)

    reduced = reduce_system(HAMMING_CHECK, BitVector.zeros(3))
    assert reduced.rank == 3
    assert reduced.pivots == (0, 1, 3)
    assert reduced.consistent


def test_dualize_keeps_the_matrix() -> None:
    assert dualize(SPC3_CHECK) == SPC3_CHECK
    assert dualize(SparseBinaryMatrix.identity(3)) == SparseBinaryMatrix.identity(3)


def test_dual_of_hamming_is_orthogonal_to_every_codeword() -> None:
    dual_words = row_space(dualize(HAMMING_CHECK))
    code_words = row_space(nullspace(HAMMING_CHECK))

    assert len(dual_words) == 8
    for dual_word, code_word in itertools.product(dual_words, code_words):
        assert (dual_word & code_word).bit_count() % 2 == 0
