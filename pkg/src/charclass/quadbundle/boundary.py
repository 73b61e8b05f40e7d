"""Boundary of a primitive class along a mildly degenerating family."""

from dataclasses import dataclass
from typing import Any, Optional, Union

from charclass.errors import ContractViolation
from charclass.gralg import PolyF2
from charclass.gysin import DeltaContext, delta, delta_context
from charclass.logging.config import get_logger
from charclass.quadbundle.reduce import ReducedTriple, reduced_triple
from charclass.quadbundle.triple import LocalTriple, multiplicity, require_mild

logger = get_logger(__name__)


@dataclass(frozen=True)
class DegenerationBoundary:
    """
    ``nu * delta(alpha)`` evaluated at the reduced triple, with F2 coefficients.

    ``delta_class`` lives in H*(BGO_{n-1}); ``value`` is that class when the
    multiplicity is odd and 0 otherwise.
    """

    multiplicity: int
    delta_class: PolyF2
    reduced: ReducedTriple
    context: DeltaContext

    @property
    def parity(self) -> int:
        return self.multiplicity % 2

    @property
    def value(self) -> PolyF2:
        return self.delta_class if self.parity else PolyF2.zero()

    def plain(self) -> dict[str, Any]:
        target = self.context.target.base
        invariants = self.reduced.invariants()
        return {
            "multiplicity": self.multiplicity,
            "parity": self.parity,
            "delta": target.format(self.delta_class),
            "boundary": target.format(self.value),
            "reduced": {
                **self.reduced.plain(),
                "discriminant_class": invariants.discriminant_class,
                "scaling_changes_class": invariants.scaling_changes_class,
            },
        }


def degeneration_boundary(
    alpha: Union[PolyF2, str],
    triple: LocalTriple,
    context: Optional[DeltaContext] = None,
) -> DegenerationBoundary:
    """
    Right-hand side of the boundary formula for ``alpha`` on ``triple``.

    Args:
        alpha: Primitive class in H*(BGO_n), as a polynomial or an expression
        triple: Mildly degenerating family of rank n
        context: Delta data for rank n (built from the settings if omitted)

    Returns:
        Multiplicity, delta(alpha) and the reduced triple it is evaluated on

    Raises:
        NotMildlyDegeneratingError: if ``triple`` is not mildly degenerating
        ContractViolation: if ``alpha`` is not primitive
        DataRequiredError: if a presentation file for delta is missing
    """
    require_mild(triple)
    ctx = context or delta_context(triple.n)
    if ctx.n != triple.n:
        raise ContractViolation(f"delta context is for n={ctx.n}, the triple has n={triple.n}")
    source = ctx.source.algebra
    cls = source.parse(alpha) if isinstance(alpha, str) else alpha
    nu = multiplicity(triple)
    value = delta(triple.n, cls, ctx)
    reduced = reduced_triple(triple)
    logger.info(f"boundary of {source.format(cls)}: nu={nu}, delta={ctx.target.base.format(value)}")
    return DegenerationBoundary(multiplicity=nu, delta_class=value, reduced=reduced, context=ctx)
