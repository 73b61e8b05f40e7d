"""Algebra morphisms between presentations, given on generators."""

from __future__ import annotations

from typing import Iterable, Mapping, Optional, Union

from charclass.errors import ContractViolation, MorphismError
from charclass.f2linalg import F2Matrix
from charclass.gralg.polynomial import PolyF2
from charclass.gralg.presentation import GradedAlgebraPresentation, tensor
from charclass.logging.config import get_logger

logger = get_logger(__name__)

ImageLike = Union[PolyF2, str]


class AlgebraMorphism:
    """
    Degree-preserving F2-algebra map determined by generator images.

    Construction checks the image table (every source generator present,
    names known in the target, degrees matching) and, with ``certify``,
    that each source relation maps to zero.
    """

    def __init__(
        self,
        source: GradedAlgebraPresentation,
        target: GradedAlgebraPresentation,
        images: Mapping[str, ImageLike],
        name: str = "f",
        certify: bool = True,
    ):
        self.source = source
        self.target = target
        self.name = name

        missing = [g.name for g in source.generators if g.name not in images]
        extra = sorted(set(images) - set(source.names))
        if missing or extra:
            parts = []
            if missing:
                parts.append(f"missing images for {', '.join(missing)}")
            if extra:
                parts.append(f"images for unknown generators {', '.join(extra)}")
            raise MorphismError(f"{name}: " + "; ".join(parts))

        table: dict[str, PolyF2] = {}
        for g in source.generators:
            given = images[g.name]
            try:
                image = target.parse(given) if isinstance(given, str) else given
                d = target.degree_of(image)
            except ContractViolation as e:
                raise MorphismError(f"{name}: image of {g.name}: {e}") from e
            if d is not None and d != g.degree:
                raise MorphismError(
                    f"{name}: image of {g.name} has degree {d}, expected {g.degree}"
                )
            if g.degree <= target.degree_cap:
                image = target.normal_form(image)
            table[g.name] = image
        self.images: dict[str, PolyF2] = table

        if certify:
            violations = self.check_well_defined()
            if violations:
                raise MorphismError(
                    f"{name}: relations not sent to zero: {', '.join(violations)}", violations
                )

    def __repr__(self) -> str:
        return f"AlgebraMorphism({self.name}: {self.source.name} -> {self.target.name})"

    def apply(self, p: PolyF2) -> PolyF2:
        """Image of ``p`` in normal form."""
        d = self.source.degree_of(p)
        if d is None:
            return PolyF2.zero()
        return self.target.normal_form(p.substitute(self.images))

    __call__ = apply

    def check_well_defined(self) -> list[str]:
        """
        Source relations whose image is nonzero, formatted; empty means certified.

        Relations above the target's cap cannot be checked and are skipped.
        """
        violations = []
        for r in self.source.relations:
            d = self.source.degree_of(r)
            assert d is not None
            if d > self.target.degree_cap:
                logger.debug(f"{self.name}: relation {self.source.format(r)} above cap, not checked")
                continue
            if not self.apply(r).is_zero():
                violations.append(self.source.format(r))
        return violations

    def matrix(self, d: int) -> F2Matrix:
        """Matrix of the degree-``d`` component in the normal-form bases (columns = source basis)."""
        columns = [self.target.coordinates(self.apply(PolyF2.from_monomial(m)), d) for m in self.source.basis(d)]
        return F2Matrix.from_columns(columns, rows=self.target.dim(d))

    def describe(self) -> dict[str, str]:
        return {g: self.target.format(p) for g, p in self.images.items()}


def identity(a: GradedAlgebraPresentation) -> AlgebraMorphism:
    return AlgebraMorphism(a, a, {g.name: PolyF2.gen(g.name) for g in a.generators}, name="id", certify=False)


def compose(g: AlgebraMorphism, f: AlgebraMorphism) -> AlgebraMorphism:
    """``g`` after ``f``."""
    if f.target is not g.source and (f.target.names != g.source.names or f.target.relations != g.source.relations):
        raise ContractViolation(f"cannot compose {g.name} after {f.name}: {f.target.name} != {g.source.name}")
    images = {name: g.apply(image) for name, image in f.images.items()}
    return AlgebraMorphism(f.source, g.target, images, name=f"{g.name}.{f.name}", certify=False)


def _require_disjoint(a: GradedAlgebraPresentation, c: GradedAlgebraPresentation) -> None:
    clash = set(a.names) & set(c.names)
    if clash:
        raise ContractViolation(f"{a.name} and {c.name} share generator names {sorted(clash)}")


def inclusion(a: GradedAlgebraPresentation, ac: GradedAlgebraPresentation) -> AlgebraMorphism:
    """``a -> a (x) c`` sending each generator to itself (pullback along the first projection)."""
    missing = set(a.names) - set(ac.names)
    if missing:
        raise ContractViolation(f"{ac.name} does not contain generators {sorted(missing)}")
    return AlgebraMorphism(a, ac, {g.name: PolyF2.gen(g.name) for g in a.generators}, name="p1", certify=False)


def tensor_with_identity(
    f: AlgebraMorphism,
    c: GradedAlgebraPresentation,
    source: Optional[GradedAlgebraPresentation] = None,
    target: Optional[GradedAlgebraPresentation] = None,
) -> AlgebraMorphism:
    """``f (x) id_c`` between ``f.source (x) c`` and ``f.target (x) c``."""
    _require_disjoint(f.source, c)
    _require_disjoint(f.target, c)
    src = source or tensor(f.source, c)
    tgt = target or tensor(f.target, c)
    images: dict[str, PolyF2] = dict(f.images)
    images.update({g.name: PolyF2.gen(g.name) for g in c.generators})
    return AlgebraMorphism(src, tgt, images, name=f"{f.name}*id", certify=False)


def evaluate_at_zero(
    source: GradedAlgebraPresentation,
    target: GradedAlgebraPresentation,
    names: Iterable[str],
) -> AlgebraMorphism:
    """Send ``names`` to 0 and every other generator to the same-named generator of ``target``."""
    zeroed = set(names)
    images = {
        g.name: PolyF2.zero() if g.name in zeroed else PolyF2.gen(g.name) for g in source.generators
    }
    return AlgebraMorphism(source, target, images, name="eps")
