import json

import pytest

from charclass.errors import ContractViolation
from charclass.quadbundle import (
    CoefficientField,
    LocalTriple,
    load_triple,
    model_triple,
    triple_from_data,
    triple_from_json,
    triple_to_data,
    triple_to_json,
)

Q = CoefficientField.rationals()
F5 = CoefficientField.prime(5)


@pytest.mark.unit
class TestTripleFiles:
    def test_rational_entries(self):
        t = triple_from_data({"field": "Q", "n": 2, "entries": [[[0, "1/2"], [1]], [[1], [3]]]})
        assert t.field == Q
        assert triple_to_data(t) == {"field": "Q", "n": 2, "entries": [[[0, "1/2"], [1]], [[1], [3]]]}

    def test_prime_field_reduces_coefficients(self):
        t = triple_from_data({"field": "Fp", "p": 5, "n": 2, "entries": [[[0, 6], [0]], [[0], [-1]]]})
        assert triple_to_data(t) == {"field": "Fp", "p": 5, "n": 2, "entries": [[[0, 1], [0]], [[0], [4]]]}

    def test_written_file_loads_back(self, tmp_path):
        t = model_triple([[1, 0], [0, 2]], F5)
        path = tmp_path / "model.json"
        path.write_text(triple_to_json(t))
        assert load_triple(path) == t
        assert json.loads(path.read_text())["entries"][0][0] == [0, 1]

    @pytest.mark.parametrize(
        "data,match",
        [
            ({"field": "Fp", "n": 1, "entries": [[[0, 1]]]}, "needs p"),
            ({"field": "Q", "n": 2, "entries": [[[0, 1]]]}, "expected 2 rows"),
            ({"field": "Q", "n": 1, "entries": [[[0, 1], [1]]]}, "row 0"),
            ({"field": "R", "n": 1, "entries": [[[0, 1]]]}, "invalid triple"),
            ({"field": "Q", "n": 1, "entries": [[[0, 1]]], "extra": 1}, "invalid triple"),
        ],
    )
    def test_schema_errors(self, data, match):
        with pytest.raises(ContractViolation, match=match):
            triple_from_data(data)

    def test_symmetry_checked_after_schema(self):
        with pytest.raises(ContractViolation, match="not symmetric"):
            triple_from_data({"field": "Q", "n": 2, "entries": [[[1], [1]], [[2], [1]]]})

    def test_invalid_json(self):
        with pytest.raises(ContractViolation, match="not valid JSON"):
            triple_from_json("{")

    def test_missing_file(self, tmp_path):
        with pytest.raises(ContractViolation, match="not found"):
            load_triple(tmp_path / "absent.json")

    def test_zero_entries_serialize_as_single_zero(self):
        t = LocalTriple.from_coefficients(Q, [[[0, 1], []], [[], [1]]])
        assert triple_to_data(t)["entries"][0][1] == [0]
