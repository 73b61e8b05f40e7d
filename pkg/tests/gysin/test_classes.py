from itertools import combinations

import pytest

from charclass.errors import ContractViolation, DataRequiredError
from charclass.gralg import Monomial, PolyF2
from charclass.gysin import bv_star, tensor_by_line
from charclass.rings import make_BO


def elementary(xs: list[PolyF2], k: int) -> PolyF2:
    total = PolyF2.zero()
    for subset in combinations(xs, k):
        term = PolyF2.one()
        for x in subset:
            term = term * x
        total = total + term
    return total


def homogeneous_part(p: PolyF2, k: int) -> PolyF2:
    return PolyF2.from_monomials(m for m in p.terms if sum(e for _, e in m.exponents) == k)


@pytest.mark.unit
@pytest.mark.parametrize("m", range(1, 6))
def test_tensor_by_line_matches_splitting(m):
    xs = [PolyF2.gen(f"x{i}") for i in range(1, m + 1)]
    t = PolyF2.gen("t")
    total = PolyF2.one()
    for x in xs:
        total = total * (PolyF2.one() + x + t)

    twisted = tensor_by_line([elementary(xs, k) for k in range(1, m + 1)], t)

    assert len(twisted) == m
    for k in range(1, m + 1):
        assert twisted[k - 1] == homogeneous_part(total, k)


@pytest.mark.unit
def test_tensor_by_line_reduces_in_ring():
    bo = make_BO(3, 6)
    w = [PolyF2.gen(f"w{i}") for i in range(1, 4)]
    out = tensor_by_line(w, w[0], bo)
    assert [bo.format(p) for p in out] == ["0", "w1^2 + w2", "w1*w2 + w3"]


@pytest.mark.unit
class TestBvStar:
    def test_odd_rank_three(self):
        bv = bv_star(3, degree_cap=8)
        assert bv.describe() == {"c": "w1^2", "w2": "w1^2 + w2", "w3": "w1*w2"}
        assert bv.target.name == "BO2"

    def test_even_rank_reads_file(self, bgo2):
        bv = bv_star(2, bgo2)
        assert bv.describe() == {"lambda": "0", "a1": "w1", "b4": "0"}

    def test_even_rank_without_file(self):
        with pytest.raises(DataRequiredError):
            bv_star(4)

    def test_rank_one(self):
        with pytest.raises(ContractViolation):
            bv_star(1)

    def test_rank_mismatch(self, bgo2):
        with pytest.raises(ContractViolation):
            bv_star(4, bgo2)
