import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from hypothesis.extra.numpy import arrays

from charclass.errors import ContractViolation
from charclass.f2linalg import F2Matrix, pack_vector, unpack_vector


@pytest.mark.unit
class TestConstruction:
    def test_from_rows_reduces_mod_two(self):
        m = F2Matrix.from_rows([[2, 3], [1, 0]])
        assert m.to_dense().tolist() == [[0, 1], [1, 0]]

    def test_from_supports_cancels_repeats(self):
        m = F2Matrix.from_supports([[0, 2, 2], [1]], rows=2, cols=3)
        assert m.to_dense().tolist() == [[1, 0, 0], [0, 1, 0]]

    def test_from_supports_out_of_range(self):
        with pytest.raises(ContractViolation):
            F2Matrix.from_supports([[3]], rows=1, cols=3)

    def test_from_columns(self):
        m = F2Matrix.from_columns([[1, 0, 1], [0, 1, 1]], rows=3)
        assert m.shape == (3, 2)
        assert m[2, 0] == 1 and m[0, 1] == 0

    def test_from_no_columns(self):
        assert F2Matrix.from_columns([], rows=4).shape == (4, 0)

    def test_identity_is_its_own_square(self):
        i = F2Matrix.identity(5)
        assert i @ i == i

    def test_storage_is_read_only(self):
        m = F2Matrix.identity(3)
        with pytest.raises(ValueError):
            m.words[0, 0] = 0

    def test_index_out_of_range(self):
        with pytest.raises(IndexError):
            F2Matrix.identity(2)[2, 0]


@pytest.mark.unit
class TestArithmetic:
    def test_matvec(self):
        m = F2Matrix.from_rows([[1, 1, 0], [0, 1, 1]])
        assert m.matvec([1, 1, 1]).tolist() == [0, 0]
        assert m.matvec([1, 0, 0]).tolist() == [1, 0]

    def test_product_matches_dense(self):
        a = F2Matrix.from_rows([[1, 1], [0, 1], [1, 0]])
        b = F2Matrix.from_rows([[1, 0, 1], [1, 1, 0]])
        expected = (a.to_dense().astype(int) @ b.to_dense().astype(int)) % 2
        assert (a @ b).to_dense().tolist() == expected.tolist()

    def test_product_shape_mismatch(self):
        with pytest.raises(ContractViolation):
            F2Matrix.identity(2) @ F2Matrix.identity(3)

    def test_sum_is_xor(self):
        a = F2Matrix.from_rows([[1, 1], [0, 1]])
        assert (a + a).is_zero()

    def test_hstack(self):
        a = F2Matrix.identity(2)
        stacked = a.hstack(F2Matrix.from_columns([[1, 1]], rows=2))
        assert stacked.to_dense().tolist() == [[1, 0, 1], [0, 1, 1]]


@pytest.mark.property
@settings(max_examples=50, deadline=None)
@given(st.integers(0, 200).flatmap(lambda n: arrays(np.uint8, n, elements=st.integers(0, 1))))
def test_pack_unpack(bits):
    packed = pack_vector(bits, bits.size)
    assert packed.dtype == np.uint64
    assert np.array_equal(unpack_vector(packed, bits.size), bits)


@pytest.mark.property
@settings(max_examples=40, deadline=None)
@given(
    st.tuples(st.integers(1, 6), st.integers(1, 70), st.integers(1, 6)).flatmap(
        lambda s: st.tuples(
            arrays(np.uint8, (s[0], s[1]), elements=st.integers(0, 1)),
            arrays(np.uint8, (s[1], s[2]), elements=st.integers(0, 1)),
        )
    )
)
def test_transpose_of_product(pair):
    a = F2Matrix.from_rows(pair[0])
    b = F2Matrix.from_rows(pair[1])
    assert (a @ b).transpose() == b.transpose() @ a.transpose()
