import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from charclass.errors import ContractViolation, NotMildlyDegeneratingError
from charclass.quadbundle import (
    TVAR,
    CoefficientField,
    LocalTriple,
    base_change,
    congruence,
    discriminant,
    is_mildly_degenerating,
    model_triple,
    multiplicity,
    orthogonal_sum,
    poly_constant,
    poly_from_coefficients,
    rank_profile,
    reduced_triple,
    twist_by_unit,
)
from tests.quadbundle.strategies import mild_triples, units

Q = CoefficientField.rationals()
F5 = CoefficientField.prime(5)
F7 = CoefficientField.prime(7)


def diag(field, *coefficients):
    """Diagonal triple; each entry is a coefficient list, constant term first."""
    return LocalTriple.diagonal(field, [poly_from_coefficients(field, c) for c in coefficients])


def polys(field, rows):
    return [[poly_from_coefficients(field, c) for c in row] for row in rows]


@pytest.mark.unit
class TestLocalTriple:
    def test_from_coefficients(self):
        t = LocalTriple.from_coefficients(Q, [[[1, 1], [1]], [[1], [1]]])
        assert t.n == 2
        assert t.special_fiber() == [[Q.element(1)] * 2] * 2

    def test_not_symmetric(self):
        with pytest.raises(ContractViolation, match="not symmetric"):
            LocalTriple.from_coefficients(Q, [[[1], [2]], [[3], [1]]])

    def test_not_square(self):
        with pytest.raises(ContractViolation, match="expected 2"):
            LocalTriple.from_coefficients(Q, [[[1], [0]], [[0]]])

    def test_vanishing_special_fiber(self):
        with pytest.raises(ContractViolation, match="special fiber"):
            diag(Q, [0, 1], [0, 1])

    def test_rank_one_may_vanish(self):
        assert diag(Q, [0, 1]).n == 1

    def test_str(self):
        assert str(diag(F7, [0, 1], [1])) == "LocalTriple over F7: [[t, 0], [0, 1]]"


@pytest.mark.unit
class TestDegeneration:
    def test_profile_of_mild_family(self):
        t = diag(Q, [0, 1], [1], [1])
        assert rank_profile(t) == (3, 2)
        check = is_mildly_degenerating(t)
        assert check
        assert check.diagnosis == "mildly degenerating: ranks (3, 2)"

    def test_multiplicity(self):
        assert multiplicity(diag(Q, [0, 1], [1], [1])) == 1
        assert multiplicity(diag(Q, [0, 0, 1], [1])) == 2

    def test_offdiagonal_family(self):
        t = LocalTriple.from_coefficients(Q, [[[1, 1], [1], [0]], [[1], [1], [0]], [[0], [0], [3]]])
        assert discriminant(t).as_expr() == 3 * TVAR
        assert multiplicity(t) == 1
        assert is_mildly_degenerating(t)

    def test_corank_two(self):
        check = is_mildly_degenerating(diag(Q, [0, 1], [0, 1], [1]))
        assert not check
        assert check.special_rank == 1
        assert "not minimally degenerate" in check.diagnosis

    def test_nondegenerate_family(self):
        check = is_mildly_degenerating(diag(Q, [1], [1]))
        assert not check
        assert "does not degenerate" in check.diagnosis

    def test_degenerate_everywhere(self):
        t = LocalTriple.from_coefficients(Q, [[[1], [1]], [[1], [1]]])
        check = is_mildly_degenerating(t)
        assert check.generic_rank == 1
        assert "whole base" in check.diagnosis
        with pytest.raises(NotMildlyDegeneratingError):
            multiplicity(t)


@pytest.mark.unit
class TestOperations:
    def test_twist_by_unit(self):
        t = twist_by_unit(diag(Q, [0, 1], [1]), poly_from_coefficients(Q, [2, 1]))
        assert multiplicity(t) == 1
        assert is_mildly_degenerating(t)

    def test_twist_needs_unit(self):
        with pytest.raises(ContractViolation, match="not a unit"):
            twist_by_unit(diag(Q, [0, 1], [1]), poly_from_coefficients(Q, [0, 1]))

    def test_orthogonal_sum(self):
        s = orthogonal_sum(diag(Q, [0, 1]), diag(Q, [1], [1]))
        assert s == diag(Q, [0, 1], [1], [1])

    def test_multiplicity_adds(self):
        s = orthogonal_sum(diag(Q, [0, 0, 1]), diag(Q, [0, 1], [1]))
        assert multiplicity(s) == 3

    def test_sum_over_different_fields(self):
        with pytest.raises(ContractViolation):
            orthogonal_sum(diag(Q, [0, 1]), diag(F7, [1]))

    def test_base_change(self):
        t = base_change(diag(F7, [0, 1], [1]), 2, poly_constant(F7, 3))
        assert multiplicity(t) == 2
        assert t.entries[0][0] == poly_from_coefficients(F7, [0, 0, 3])

    def test_base_change_index(self):
        with pytest.raises(ContractViolation):
            base_change(diag(Q, [0, 1], [1]), 0, poly_constant(Q, 1))

    def test_congruence(self):
        g = polys(Q, [[[1], [1]], [[0], [1, 1]]])
        t = congruence(diag(Q, [0, 1], [1]), g)
        assert multiplicity(t) == 1
        assert is_mildly_degenerating(t)

    def test_congruence_needs_invertible(self):
        g = polys(Q, [[[0, 1], [0]], [[0], [1]]])
        with pytest.raises(ContractViolation, match="not invertible"):
            congruence(diag(Q, [0, 1], [1]), g)


@pytest.mark.property
@pytest.mark.parametrize("field", [F5, Q], ids=str)
@settings(max_examples=100, deadline=None)
@given(data=st.data())
def test_multiplicity_under_base_change_and_twist(field, data):
    t, nu = data.draw(mild_triples(field, max_rank=3))
    m = data.draw(st.integers(1, 4))
    u = data.draw(units(field))

    assert multiplicity(t) == nu
    assert is_mildly_degenerating(t)
    twisted = twist_by_unit(t, u)
    assert multiplicity(twisted) == nu
    assert is_mildly_degenerating(twisted)
    changed = base_change(t, m, u)
    assert multiplicity(changed) == m * nu
    assert is_mildly_degenerating(changed)


@pytest.mark.property
@settings(max_examples=40, deadline=None)
@given(mild_triples(F5, min_rank=2), mild_triples(F5))
def test_multiplicity_is_additive(first, second):
    (a, nu_a), (b, nu_b) = first, second
    assert multiplicity(orthogonal_sum(a, b)) == nu_a + nu_b


@pytest.mark.property
@pytest.mark.parametrize("field", [F5, Q], ids=str)
@settings(max_examples=30, deadline=None)
@given(data=st.data())
def test_model_triple_has_multiplicity_one(field, data):
    t, _ = data.draw(mild_triples(field, min_rank=2))
    q = [[field.to_plain(x) for x in row] for row in reduced_triple(t).form]
    model = model_triple(q, field)
    assert multiplicity(model) == 1
    assert is_mildly_degenerating(model)
