from fractions import Fraction

import pytest

from charclass.errors import ContractViolation
from charclass.quadbundle import CoefficientField

Q = CoefficientField.rationals()
F5 = CoefficientField.prime(5)
F7 = CoefficientField.prime(7)


@pytest.mark.unit
class TestCoefficientField:
    @pytest.mark.parametrize("p", [2, 9, 1, None])
    def test_prime_field_needs_odd_prime(self, p):
        with pytest.raises(ContractViolation):
            CoefficientField("Fp", p)

    def test_rationals_take_no_modulus(self):
        with pytest.raises(ContractViolation):
            CoefficientField("Q", 5)

    def test_unknown_kind(self):
        with pytest.raises(ContractViolation):
            CoefficientField("R")  # type: ignore[arg-type]

    def test_names(self):
        assert str(Q) == "Q"
        assert str(F7) == "F7"
        assert F7.is_finite and not Q.is_finite

    def test_elements(self):
        assert F5.to_plain(F5.element("1/2")) == 3
        assert F7.to_plain(F7.element(-1)) == 6
        assert Q.to_plain(Q.element("6/4")) == "3/2"
        assert Q.to_plain(Q.element(Fraction(8, 2))) == 4

    def test_denominator_divisible_by_p(self):
        with pytest.raises(ContractViolation, match="denominator"):
            F5.element("1/5")

    def test_not_a_number(self):
        with pytest.raises(ContractViolation):
            Q.element("abc")


@pytest.mark.unit
class TestSquareClasses:
    @pytest.mark.parametrize("value,expected", [(12, 3), (-8, -2), ("3/4", 3), (1, 1), (49, 1), ("-1/2", -2)])
    def test_rational_classes(self, value, expected):
        assert Q.square_class(Q.element(value)) == expected

    def test_least_nonresidue(self):
        assert F5.least_nonresidue() == 2
        assert F7.least_nonresidue() == 3

    @pytest.mark.parametrize("value,expected", [(1, 1), (2, 1), (4, 1), (3, 3), (5, 3), (6, 3)])
    def test_f7_classes(self, value, expected):
        assert F7.square_class(F7.element(value)) == expected

    def test_zero_is_a_square_without_class(self):
        assert F7.is_square(F7.element(0))
        with pytest.raises(ContractViolation):
            Q.square_class(Q.element(0))

    def test_rational_squares(self):
        assert Q.is_square(Q.element("9/4"))
        assert not Q.is_square(Q.element(2))
