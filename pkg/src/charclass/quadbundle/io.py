"""JSON form of local triples."""

import json
from pathlib import Path
from typing import Any, Literal, Optional, Union

from pydantic import BaseModel, ConfigDict, ValidationError, model_validator
from sympy import Poly

from charclass.errors import ContractViolation
from charclass.logging.config import get_logger
from charclass.quadbundle.field import CoefficientField
from charclass.quadbundle.triple import LocalTriple

logger = get_logger(__name__)

Coefficient = Union[int, str]


class TripleFile(BaseModel):
    """``{"field", "p"?, "n", "entries"}``; entries are coefficient lists, constant term first."""

    model_config = ConfigDict(extra="forbid")

    field: Literal["Q", "Fp"]
    p: Optional[int] = None
    n: int
    entries: list[list[list[Coefficient]]]

    @model_validator(mode="after")
    def check_shape(self) -> "TripleFile":
        if self.field == "Fp" and self.p is None:
            raise ValueError("field 'Fp' needs p")
        if len(self.entries) != self.n:
            raise ValueError(f"expected {self.n} rows, got {len(self.entries)}")
        for i, row in enumerate(self.entries):
            if len(row) != self.n:
                raise ValueError(f"row {i} has {len(row)} entries, expected {self.n}")
        return self

    def coefficient_field(self) -> CoefficientField:
        return CoefficientField(self.field, self.p)


def triple_from_data(data: Any) -> LocalTriple:
    try:
        parsed = TripleFile.model_validate(data)
    except ValidationError as e:
        raise ContractViolation(f"invalid triple: {e.errors()[0]['msg']}") from e
    return LocalTriple.from_coefficients(parsed.coefficient_field(), parsed.entries)


def triple_from_json(text: str) -> LocalTriple:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise ContractViolation(f"triple is not valid JSON: {e}") from e
    return triple_from_data(data)


def load_triple(path: Path) -> LocalTriple:
    path = Path(path)
    if not path.is_file():
        raise ContractViolation(f"triple file not found: {path}")
    logger.debug(f"Loading triple from {path}")
    return triple_from_json(path.read_text(encoding="utf-8"))


def _coefficients(field: CoefficientField, p: Poly) -> list[Coefficient]:
    k = field.domain
    values = [field.to_plain(k.from_sympy(c)) for c in reversed(p.all_coeffs())]
    while len(values) > 1 and values[-1] == 0:
        values.pop()
    return values


def triple_to_data(t: LocalTriple) -> dict[str, Any]:
    out: dict[str, Any] = {
        "field": t.field.kind,
        "n": t.n,
        "entries": [[_coefficients(t.field, p) for p in row] for row in t.entries],
    }
    if t.field.is_finite:
        out["p"] = t.field.p
    return out


def triple_to_json(t: LocalTriple) -> str:
    return json.dumps(triple_to_data(t), sort_keys=True)
