"""Even-rank GO presentations loaded from validated JSON files."""

import json
from dataclasses import dataclass, field
from itertools import combinations
from pathlib import Path
from typing import Any, Mapping, Optional

from pydantic import BaseModel, ConfigDict, Field, ValidationError, field_validator

from charclass.config import Settings, get_settings
from charclass.errors import ContractViolation, DataRequiredError, MorphismError, PresentationFileError
from charclass.gralg import (
    AlgebraMorphism,
    Generator,
    GradedAlgebraPresentation,
    Monomial,
    PolyF2,
    tensor,
)
from charclass.logging.config import get_logger
from charclass.rings.registry import BGM_TWIST_NAME, make_BGm, make_BO

logger = get_logger(__name__)

SCHEMA_HINT = (
    'JSON {"family":"BGO_even","n":<even int>,"generators":[{"name","degree"}],'
    '"relations":[...],"res":{...},"mu":{...},"d_table":{...},"bv":{...}?,"provenance":str}'
)


def even_inventory(n: int) -> list[Generator]:
    """
    Generators of H*(BGO_n) for even ``n``, in canonical order.

    ``lambda`` (degree 2), ``a<2i-1>`` for ``1 <= i <= n/2``, ``b<4j>`` for
    ``1 <= j <= n/2`` and ``d_<i1>_<i2>...`` for every subset ``T`` of
    ``{1..n/2}`` with at least two elements, of degree ``2*sum(T) - 1``.
    """
    if n < 2 or n % 2:
        raise ContractViolation(f"even rank >= 2 required, got {n}")
    half = n // 2
    gens = [Generator("lambda", 2)]
    gens += [Generator(f"a{2 * i - 1}", 2 * i - 1) for i in range(1, half + 1)]
    gens += [Generator(f"b{4 * j}", 4 * j) for j in range(1, half + 1)]
    for size in range(2, half + 1):
        for subset in combinations(range(1, half + 1), size):
            gens.append(Generator("d_" + "_".join(map(str, subset)), 2 * sum(subset) - 1))
    return gens


def definitional_boundaries(n: int) -> dict[Monomial, str]:
    """The boundary values that define ``a<2i-1>`` and ``d_T``: ``d(w_2i) = a_2i-1`` etc."""
    half = n // 2
    out = {Monomial.generator(f"w{2 * i}"): f"a{2 * i - 1}" for i in range(1, half + 1)}
    for size in range(2, half + 1):
        for subset in combinations(range(1, half + 1), size):
            key = Monomial.from_mapping({f"w{2 * i}": 1 for i in subset})
            out[key] = "d_" + "_".join(map(str, subset))
    return out


class GeneratorEntry(BaseModel):
    name: str
    degree: int


class EvenPresentationFile(BaseModel):
    """On-disk schema of an even-rank GO presentation."""

    model_config = ConfigDict(extra="forbid")

    family: str
    n: int
    generators: list[GeneratorEntry]
    relations: list[str] = Field(default_factory=list)
    res: dict[str, str]
    mu: dict[str, str]
    d_table: dict[str, str]
    bv: Optional[dict[str, str]] = None
    provenance: str

    @field_validator("family")
    @classmethod
    def check_family(cls, v: str) -> str:
        if v != "BGO_even":
            raise ValueError(f"family must be 'BGO_even', got {v!r}")
        return v

    @field_validator("n")
    @classmethod
    def check_rank(cls, v: int) -> int:
        if v < 2 or v % 2:
            raise ValueError(f"n must be even and >= 2, got {v}")
        return v


@dataclass(frozen=True)
class EvenGODatum:
    """A loaded even-rank presentation with its structure maps; not yet verified."""

    n: int
    presentation: GradedAlgebraPresentation
    complement: GradedAlgebraPresentation
    res: AlgebraMorphism
    twisted: GradedAlgebraPresentation
    mu: AlgebraMorphism
    d_table: Mapping[Monomial, PolyF2]
    bv: Optional[AlgebraMorphism]
    provenance: str
    source: Optional[Path] = None
    raw: Mapping[str, Any] = field(default_factory=dict, repr=False)

    @property
    def degree_cap(self) -> int:
        return self.presentation.degree_cap


def _location(error: ValidationError) -> str:
    first = error.errors()[0]
    parts = []
    for item in first.get("loc", ()):
        parts.append(f"[{item}]" if isinstance(item, int) else f".{item}")
    return "".join(parts).lstrip(".") or "<file>"


def _morphism(
    label: str,
    source: GradedAlgebraPresentation,
    target: GradedAlgebraPresentation,
    images: Mapping[str, str],
) -> AlgebraMorphism:
    # Well-definedness is a semantic question left to verify_even_datum.
    for gen, expr in images.items():
        try:
            poly = target.parse(expr)
            target.degree_of(poly)
        except ContractViolation as e:
            raise PresentationFileError(str(e), f"{label}.{gen}") from e
    try:
        return AlgebraMorphism(source, target, dict(images), name=label, certify=False)
    except MorphismError as e:
        raise PresentationFileError(str(e), label) from e


def parse_even_presentation(
    data: Mapping[str, Any],
    degree_cap: Optional[int] = None,
    source: Optional[Path] = None,
) -> EvenGODatum:
    """
    Build an :class:`EvenGODatum` from decoded JSON.

    Args:
        data: Decoded file contents
        degree_cap: Cap for every presentation involved (defaults to settings)
        source: Originating path, kept for messages

    Returns:
        Parsed datum with inventory, homogeneity and degree checks applied

    Raises:
        PresentationFileError: On any schema, inventory or degree problem
    """
    try:
        parsed = EvenPresentationFile.model_validate(data)
    except ValidationError as e:
        raise PresentationFileError(e.errors()[0]["msg"], _location(e)) from e

    n = parsed.n
    expected = {(g.name, g.degree) for g in even_inventory(n)}
    found = {(g.name, g.degree) for g in parsed.generators}
    if expected != found or len(parsed.generators) != len(found):
        missing = sorted(f"{a}:{d}" for a, d in expected - found)
        unexpected = sorted(f"{a}:{d}" for a, d in found - expected)
        detail = []
        if missing:
            detail.append(f"missing {', '.join(missing)}")
        if unexpected:
            detail.append(f"unexpected {', '.join(unexpected)}")
        if len(parsed.generators) != len(found):
            detail.append("duplicate entries")
        raise PresentationFileError(
            f"generator inventory for n={n} does not match: {'; '.join(detail)}", "generators"
        )

    free = GradedAlgebraPresentation(
        [Generator(g.name, g.degree) for g in parsed.generators], (), degree_cap, name=f"BGO{n}"
    )
    relations = []
    for i, text in enumerate(parsed.relations):
        try:
            rel = free.parse(text)
            if rel.is_zero():
                raise ContractViolation("relation is zero")
            free.degree_of(rel)
        except ContractViolation as e:
            raise PresentationFileError(str(e), f"relations[{i}]") from e
        relations.append(rel)
    a = free.with_relations(relations)
    cap = a.degree_cap

    b = make_BO(n, cap)
    twisted = tensor(a, make_BGm(BGM_TWIST_NAME, cap), name=f"BGO{n}*BGm")
    res = _morphism("res", a, b, parsed.res)
    mu = _morphism("mu", a, twisted, parsed.mu)
    bv = _morphism("bv", a, make_BO(n - 1, cap), parsed.bv) if parsed.bv is not None else None

    d_table: dict[Monomial, PolyF2] = {}
    for key, value in parsed.d_table.items():
        where = f"d_table[{key}]"
        try:
            kp = b.parse(key)
            if len(kp) != 1:
                raise ContractViolation(f"key must be a single monomial, got {key!r}")
            (mono,) = kp.terms
            vp = a.parse(value)
            vd = a.degree_of(vp)
        except ContractViolation as e:
            raise PresentationFileError(str(e), where) from e
        kd = mono.degree(b.degrees)
        if vd is not None and vd != kd - 1:
            raise PresentationFileError(f"value has degree {vd}, expected {kd - 1}", where)
        d_table[mono] = vp

    logger.info(
        f"Loaded BGO{n} presentation: {len(parsed.generators)} generators, "
        f"{len(relations)} relations, {len(d_table)} boundary entries"
    )
    return EvenGODatum(
        n=n,
        presentation=a,
        complement=b,
        res=res,
        twisted=twisted,
        mu=mu,
        d_table=d_table,
        bv=bv,
        provenance=parsed.provenance,
        source=source,
        raw=dict(data),
    )


def load_even_presentation(path: Path, degree_cap: Optional[int] = None) -> EvenGODatum:
    """Read and parse an even-rank presentation file."""
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except FileNotFoundError:
        raise DataRequiredError(f"presentation file not found: {path}", SCHEMA_HINT) from None
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise PresentationFileError(f"invalid JSON: {e.msg}", f"line {e.lineno}") from e
    if not isinstance(data, dict):
        raise PresentationFileError("top level must be an object")
    return parse_even_presentation(data, degree_cap, source=path)


def load_even_for_rank(
    n: int,
    settings: Optional[Settings] = None,
    degree_cap: Optional[int] = None,
    path: Optional[Path] = None,
) -> EvenGODatum:
    """Load ``bgo<n>.json`` from the data directory (or ``path``) and check its rank."""
    settings = settings or get_settings()
    target = Path(path) if path is not None else settings.even_presentation_path(n)
    if not target.exists():
        raise DataRequiredError(
            f"BGO{n} needs a presentation file; none at {target}",
            f"set CHARCLASS_DATA or pass --file; schema: {SCHEMA_HINT}",
        )
    datum = load_even_presentation(target, degree_cap or settings.degree_cap)
    if datum.n != n:
        raise PresentationFileError(f"file describes n={datum.n}, expected n={n}", "n")
    return datum
