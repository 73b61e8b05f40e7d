import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from charclass.errors import ContractViolation, NotMildlyDegeneratingError
from charclass.quadbundle import (
    CoefficientField,
    LocalTriple,
    diagonalize,
    diagonalize_with_transform,
    model_triple,
    multiplicity,
    poly_from_coefficients,
    reduced_triple,
    twist_by_unit,
)
from tests.quadbundle.strategies import mild_triples, move, unimodular, units

Q = CoefficientField.rationals()
F5 = CoefficientField.prime(5)
F7 = CoefficientField.prime(7)


def diag(field, *coefficients):
    return LocalTriple.diagonal(field, [poly_from_coefficients(field, c) for c in coefficients])


def plain(field, values):
    return [field.to_plain(x) for x in values]


@pytest.mark.unit
class TestDiagonalize:
    def test_already_diagonal(self):
        assert plain(Q, diagonalize([[2, 0], [0, 3]], Q)) == [2, 3]

    def test_eliminates_offdiagonal(self):
        assert plain(Q, diagonalize([[1, 1], [1, 2]], Q)) == [1, 1]

    def test_hyperbolic_plane(self):
        assert plain(Q, diagonalize([[0, 1], [1, 0]], Q)) == [2, "-1/2"]

    def test_zero_row(self):
        assert plain(F7, diagonalize([[0, 0], [0, 3]], F7)) == [3, 0]

    def test_transform_conjugates(self):
        q = [[0, 1, 2], [1, 0, 1], [2, 1, 1]]
        result = diagonalize_with_transform(q, F7)
        p = result.transform
        k = F7.domain
        values = [[k.convert(x) for x in row] for row in q]
        for i in range(3):
            for j in range(3):
                entry = sum(
                    (p[i][a] * values[a][b] * p[j][b] for a in range(3) for b in range(3)),
                    k.zero,
                )
                expected = result.diagonal[i] if i == j else k.zero
                assert entry == expected


@pytest.mark.unit
class TestReducedTriple:
    def test_identity_of_rank_two(self):
        reduced = reduced_triple(diag(Q, [0, 1], [1], [1]))
        assert reduced.m == 2
        assert reduced.plain() == {"m": 2, "kernel": [1, 0, 0], "diagonal": [1, 1], "normalized": [1, 1]}

    def test_diagonal_family(self):
        reduced = reduced_triple(diag(Q, [2], [0, 1], [5]))
        assert plain(Q, reduced.kernel) == [0, 1, 0]
        assert plain(Q, reduced.diagonal) == [2, 5]

    def test_offdiagonal_kernel(self):
        t = LocalTriple.from_coefficients(Q, [[[1, 1], [1], [0]], [[1], [1], [0]], [[0], [0], [3]]])
        reduced = reduced_triple(t)
        assert plain(Q, reduced.kernel) == [1, -1, 0]
        assert plain(Q, reduced.diagonal) == [1, 3]
        assert reduced.invariants().discriminant_class == 3

    def test_requires_mild(self):
        with pytest.raises(NotMildlyDegeneratingError, match="not minimally degenerate"):
            reduced_triple(diag(Q, [0, 1], [0, 1], [1]))

    def test_rank_one_family(self):
        reduced = reduced_triple(diag(F7, [0, 1]))
        assert reduced.m == 0
        assert reduced.normalized() == ()
        assert reduced.invariants().discriminant_class == 1

    def test_unit_scaling_over_f5(self):
        base = reduced_triple(diag(F5, [0, 1], [1]))
        scaled = reduced_triple(twist_by_unit(diag(F5, [0, 1], [1]), poly_from_coefficients(F5, [2])))
        assert plain(F5, scaled.diagonal) == [2]
        assert scaled.normalized() == (2,)
        assert base.normalized() == (1,)
        assert scaled.equivalent(base) is True


@pytest.mark.unit
class TestEquivalence:
    def test_finite_field_even_rank(self):
        a = reduced_triple(model_triple([[1, 0], [0, 3]], F7))
        assert a.normalized() == (1, 3)
        assert a.equivalent(reduced_triple(model_triple([[1, 0], [0, 5]], F7))) is True
        assert a.equivalent(reduced_triple(model_triple([[1, 0], [0, 2]], F7))) is False

    def test_hyperbolic_plane_discriminant(self):
        reduced = reduced_triple(model_triple([[0, 1], [1, 0]], F7))
        assert plain(F7, reduced.kernel) == [1, 0, 0]
        assert reduced.normalized() == (1, 3)

    def test_odd_rank_scaling_always_matches(self):
        a = reduced_triple(model_triple([[1]], F7))
        b = reduced_triple(model_triple([[3]], F7))
        assert a.equivalent(b) is True

    def test_rank_mismatch(self):
        a = reduced_triple(model_triple([[1]], Q))
        b = reduced_triple(model_triple([[1, 0], [0, 1]], Q))
        assert a.equivalent(b) is False

    def test_rationals_decide_only_disagreement(self):
        one = reduced_triple(model_triple([[1, 0], [0, 1]], Q))
        assert one.equivalent(reduced_triple(model_triple([[1, 0], [0, -1]], Q))) is False
        assert one.equivalent(reduced_triple(model_triple([[2, 0], [0, 2]], Q))) is None

    def test_different_fields(self):
        with pytest.raises(ContractViolation):
            reduced_triple(model_triple([[1]], Q)).equivalent(reduced_triple(model_triple([[1]], F7)))


@pytest.mark.unit
class TestModelTriple:
    def test_identity(self):
        assert model_triple([[1, 0], [0, 1]], Q) == diag(Q, [0, 1], [1], [1])

    def test_multiplicity_one(self):
        assert multiplicity(model_triple([[2, 1], [1, 3]], F7)) == 1

    def test_round_trip(self):
        q = [[2, 1], [1, 3]]
        reduced = reduced_triple(model_triple(q, F7))
        assert [plain(F7, row) for row in reduced.form] == q

    @pytest.mark.parametrize(
        "q,match",
        [
            ([[1, 1], [1, 1]], "degenerate"),
            ([[1, 2], [3, 1]], "not symmetric"),
            ([[1, 0]], "square"),
            (5, "list of rows"),
            ([1, 2], "list of rows"),
        ],
    )
    def test_rejects(self, q, match):
        with pytest.raises(ContractViolation, match=match):
            model_triple(q, Q)


@pytest.mark.property
@settings(max_examples=100, deadline=None)
@given(data=st.data())
def test_reduced_triple_is_well_defined(data):
    t, nu = data.draw(mild_triples(F7, max_rank=4))
    moved = move(t, data.draw(unimodular(F7, t.n)))
    moved = twist_by_unit(moved, data.draw(units(F7)))

    assert multiplicity(moved) == multiplicity(t) == nu
    assert reduced_triple(moved).equivalent(reduced_triple(t)) is True
