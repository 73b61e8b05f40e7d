import pytest

from charclass.gralg import Generator, Monomial, PolyF2
from charclass.gysin import check_exactness, complete_relations
from charclass.rings import make_BO

LAMBDA = PolyF2.gen("lambda")
A1 = PolyF2.gen("a1")
RES = {"lambda": "0", "a1": "w1", "b4": "w2^2"}


def complete(generators, cap=8):
    return complete_relations(
        generators,
        "lambda",
        make_BO(2, cap),
        {g.name: RES[g.name] for g in generators},
        {Monomial.generator("w2"): A1},
        name="BGO2",
    )


@pytest.mark.integration
class TestCompleteRelations:
    def test_rank_two_relations(self, bgo2):
        result = complete([Generator("lambda", 2), Generator("a1", 1), Generator("b4", 4)])
        assert result.relations == (LAMBDA * A1,)
        assert result.consistent
        assert result.presentation.poincare_series(8) == bgo2.presentation.poincare_series(8)

    def test_completed_datum_is_exact(self):
        result = complete([Generator("lambda", 2), Generator("a1", 1), Generator("b4", 4)])
        report = check_exactness(result.datum, 7)
        assert report.ok, report.failures

    def test_dimension_checks_cover_every_degree(self):
        result = complete([Generator("lambda", 2), Generator("a1", 1), Generator("b4", 4)])
        assert [c.degree for c in result.dimension_checks] == list(range(8))
        assert all(c.ok for c in result.dimension_checks)

    def test_missing_generator_is_reported(self):
        result = complete([Generator("lambda", 2), Generator("a1", 1)])
        assert not result.consistent
        assert "w2^2" in result.underdetermined
