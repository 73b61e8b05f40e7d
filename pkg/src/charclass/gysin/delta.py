"""The degeneration map delta = d_{n-1} o B(v)* on primitive classes."""

from dataclasses import dataclass
from pathlib import Path
from typing import Optional, Sequence

from charclass.config import Settings, get_settings
from charclass.errors import ContractViolation
from charclass.gralg import AlgebraMorphism, PolyF2, inclusion, tensor, tensor_with_identity
from charclass.gysin.classes import bv_star, even_gysin_datum, odd_gysin_datum
from charclass.gysin.sequence import GysinDatum
from charclass.logging.config import get_logger
from charclass.primitive import (
    TwistStructure,
    builtin_mu_odd,
    is_primitive,
    primitive_basis,
    twist_for_even,
    twist_residue,
)
from charclass.reports import Failure, VerificationReport
from charclass.rings import BGM_TWIST_NAME, load_even_for_rank, make_BGm

logger = get_logger(__name__)


@dataclass(frozen=True)
class DeltaContext:
    """Everything ``delta`` needs for rank ``n``: source twist, B(v)* and the rank n-1 Gysin pair."""

    n: int
    source: TwistStructure
    bv: AlgebraMorphism
    target: GysinDatum

    def delta(self, alpha: PolyF2) -> PolyF2:
        return delta(self.n, alpha, self)


def delta_context(
    n: int,
    settings: Optional[Settings] = None,
    source_file: Optional[Path] = None,
    target_file: Optional[Path] = None,
    degree_cap: Optional[int] = None,
) -> DeltaContext:
    """
    Assemble the data for ``delta`` at rank ``n``.

    Odd ``n`` uses the built-in twist and B(v)* and needs the even file for
    rank ``n - 1``. Even ``n`` needs its own file (for ``mu`` and ``bv``) and
    uses the built-in odd pair for rank ``n - 1``.

    Raises:
        DataRequiredError: if a needed presentation file is missing
    """
    settings = settings or get_settings()
    cap = degree_cap or settings.degree_cap
    if n < 2:
        raise ContractViolation(f"delta needs n >= 2, got {n}")
    if n % 2:
        source = builtin_mu_odd(n, cap)
        bv = bv_star(n, degree_cap=cap)
        target = even_gysin_datum(load_even_for_rank(n - 1, settings, cap, path=target_file))
    else:
        datum = load_even_for_rank(n, settings, cap, path=source_file)
        source = twist_for_even(datum)
        bv = bv_star(n, datum)
        target = odd_gysin_datum(n - 1, cap)
    return DeltaContext(n=n, source=source, bv=bv, target=target)


def delta(n: int, alpha: PolyF2, context: Optional[DeltaContext] = None) -> PolyF2:
    """
    ``delta(alpha) = d(B(v)*(alpha))`` in H^{*-1}(BGO_{n-1}).

    Raises:
        ContractViolation: if ``alpha`` is not primitive
        UnderdeterminedBoundaryError: if the target table does not determine d
    """
    ctx = context or delta_context(n)
    if ctx.n != n:
        raise ContractViolation(f"context is for n={ctx.n}, not {n}")
    if not is_primitive(ctx.source, alpha):
        residue = twist_residue(ctx.source, alpha)
        raise ContractViolation(
            f"{ctx.source.algebra.format(alpha)} is not primitive: "
            f"mu*(alpha) - alpha = {ctx.source.twisted.format(residue)}"
        )
    return ctx.target.boundary(ctx.bv.apply(alpha)).require()


def bV_commutation_check(
    n: int,
    cap: Optional[int] = None,
    context: Optional[DeltaContext] = None,
    classes: Optional[Sequence[PolyF2]] = None,
) -> VerificationReport:
    """
    Check ``(B(v)* (x) id)(mu*(alpha)) = B(v)*(alpha) (x) 1`` on primitive classes.

    Defaults to every primitive basis element of degree ``<= cap`` for the
    built-in odd structures; explicit ``classes`` that are not primitive are
    listed as skipped.
    """
    if context is not None:
        twist, bv = context.source, context.bv
    else:
        if n % 2 == 0:
            raise ContractViolation("the built-in commutation check covers odd n; pass a context for even n")
        twist = builtin_mu_odd(n)
        bv = bv_star(n, degree_cap=twist.degree_cap)
    top = twist.degree_cap if cap is None else cap

    line = make_BGm(BGM_TWIST_NAME, bv.target.degree_cap)
    target = tensor(bv.target, line, name=f"{bv.target.name}*BGm")
    bv_id = tensor_with_identity(bv, line, source=twist.twisted, target=target)
    p1 = inclusion(bv.target, target)

    report = VerificationReport(subject=f"B(v)* commutation, n={n}", max_degree=top, checks=["commutation"])
    if classes is None:
        candidates = [alpha for d in range(top + 1) for alpha in primitive_basis(twist, d)]
    else:
        candidates = []
        for alpha in classes:
            if is_primitive(twist, alpha):
                candidates.append(alpha)
            else:
                report.skipped.append(f"{twist.algebra.format(alpha)}: not primitive")

    for alpha in candidates:
        lhs = bv_id.apply(twist.mu.apply(alpha))
        rhs = p1.apply(bv.apply(alpha))
        if not target.equal(lhs, rhs):
            report.add(
                Failure(
                    check="commutation",
                    degree=twist.algebra.degree_of(alpha),
                    message=f"sides differ by {target.format(target.normal_form(lhs + rhs))}",
                    witness=twist.algebra.format(alpha),
                )
            )
    logger.info(f"B(v)* commutation for n={n}: {len(candidates)} classes, {len(report.failures)} failures")
    return report
