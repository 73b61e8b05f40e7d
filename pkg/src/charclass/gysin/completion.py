"""Degreewise completion of a candidate presentation against a known complement ring.

Developer tool used to produce shipped presentation files; its output is
only trusted after :func:`charclass.gysin.check_exactness` accepts it.
"""

from dataclasses import dataclass
from typing import Mapping, Optional, Sequence, Union

from charclass.f2linalg import F2Matrix, kernel_basis, rank
from charclass.gralg import (
    AlgebraMorphism,
    Generator,
    GradedAlgebraPresentation,
    Monomial,
    PolyF2,
)
from charclass.gysin.sequence import GysinDatum
from charclass.logging.config import get_logger

logger = get_logger(__name__)


@dataclass(frozen=True)
class DimensionCheck:
    """``dim B^i = dim coker(e)^i + dim ker(e)^{i-1}``, as exactness requires."""

    degree: int
    complement_dim: int
    cokernel_dim: int
    kernel_dim: int

    @property
    def ok(self) -> bool:
        return self.complement_dim == self.cokernel_dim + self.kernel_dim


@dataclass(frozen=True)
class CompletionResult:
    presentation: GradedAlgebraPresentation
    datum: GysinDatum
    relations: tuple[PolyF2, ...]
    dimension_checks: tuple[DimensionCheck, ...]
    underdetermined: tuple[str, ...]

    @property
    def consistent(self) -> bool:
        return not self.underdetermined and all(c.ok for c in self.dimension_checks)


def _datum(
    a: GradedAlgebraPresentation,
    euler: PolyF2,
    complement: GradedAlgebraPresentation,
    res_images: Mapping[str, Union[PolyF2, str]],
    d_table: Mapping[Monomial, PolyF2],
) -> GysinDatum:
    res = AlgebraMorphism(a, complement, res_images, name="res", certify=False)
    return GysinDatum(a, euler, complement, res, d_table, name=f"completion of {a.name}", check_consistency=False)


def _independent(candidates: Sequence[PolyF2], a: GradedAlgebraPresentation, d: int, base: F2Matrix) -> list[PolyF2]:
    """Candidates that enlarge the column span of ``base``, greedily in order."""
    kept = []
    columns = [base.to_dense()[:, j] for j in range(base.cols)]
    current = rank(base)
    for p in candidates:
        trial = columns + [a.coordinates(p, d)]
        r = rank(F2Matrix.from_columns(trial, rows=a.dim(d)))
        if r > current:
            kept.append(p)
            columns = trial
            current = r
    return kept


def complete_relations(
    generators: Sequence[Generator],
    euler: Union[PolyF2, str],
    complement: GradedAlgebraPresentation,
    res_images: Mapping[str, Union[PolyF2, str]],
    d_table: Mapping[Monomial, PolyF2],
    cap: Optional[int] = None,
    name: str = "A",
) -> CompletionResult:
    """
    Add the relations forced by exactness, one degree at a time.

    In degree ``i`` three kinds of relations are forced: ``e * d(x)`` for
    ``x`` in ``B^{i-1}`` (cup after d must vanish), the boundaries of linear
    relations among the columns ``res(y) * t`` of ``B^{i+1}`` (d must be
    well defined), and elements of ``ker(res)`` outside ``im(e)``.
    Afterwards the dimension count is recorded for every degree below the
    cap.

    Args:
        generators: Candidate generators of ``A``
        euler: Euler class in ``A``
        complement: The ring ``B``
        res_images: Generator images of ``res: A -> B``
        d_table: Known boundary values on monomials of ``B``
        cap: Top degree (defaults to the complement's cap)
        name: Name for the resulting presentation

    Returns:
        The completed presentation with the relations found and the checks
    """
    top = complement.degree_cap if cap is None else cap
    a = GradedAlgebraPresentation(generators, (), top, name)
    e = a.parse(euler) if isinstance(euler, str) else euler
    found: list[PolyF2] = []
    underdetermined: list[str] = []

    for i in range(top + 1):
        datum = _datum(a, e, complement, res_images, d_table)
        forced = []
        for m in complement.basis(i - 1):
            result = datum.boundary(PolyF2.from_monomial(m))
            if result.value is None:
                underdetermined.extend(result.unresolved)
                continue
            product = a.multiply(result.value, e)
            if not product.is_zero():
                forced.append(product)
        if i + 1 <= datum.degree_cap:
            forced.extend(value for _, value in datum.inconsistencies(i + 1))
        forced = _independent(forced, a, i, F2Matrix.zeros(a.dim(i), 0))
        if forced:
            found.extend(forced)
            a = a.with_relations(forced)
            datum = _datum(a, e, complement, res_images, d_table)

        cup = datum.euler_matrix(i)
        kernel = [a.from_coordinates(i, v) for v in kernel_basis(datum.res_matrix(i))]
        extra = _independent(kernel, a, i, cup)
        if extra:
            found.extend(extra)
            a = a.with_relations(extra)
        if forced or extra:
            logger.debug(f"{name}: degree {i} forced {len(forced) + len(extra)} relation(s)")

    datum = _datum(a, e, complement, res_images, d_table)
    checks = []
    for i in range(top):
        cup_i = datum.euler_matrix(i)
        cup_next = datum.euler_matrix(i + 1)
        checks.append(
            DimensionCheck(
                degree=i,
                complement_dim=complement.dim(i),
                cokernel_dim=a.dim(i) - rank(cup_i),
                kernel_dim=a.dim(i - 1) - rank(cup_next),
            )
        )
    logger.info(f"{name}: completion found {len(found)} relation(s) through degree {top}")
    return CompletionResult(
        presentation=a,
        datum=datum,
        relations=tuple(found),
        dimension_checks=tuple(checks),
        underdetermined=tuple(sorted(set(underdetermined))),
    )
