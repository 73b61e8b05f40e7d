"""Semantic verification of loaded even-rank presentations."""

from typing import Optional

from charclass.errors import CapExceededError, InconsistentBoundaryError, UnderdeterminedBoundaryError
from charclass.gralg import PolyF2
from charclass.logging.config import get_logger
from charclass.reports import Failure, VerificationReport
from charclass.rings.even import EvenGODatum, definitional_boundaries

logger = get_logger(__name__)


def _well_defined(datum: EvenGODatum, report: VerificationReport) -> None:
    maps = [("res", datum.res), ("mu", datum.mu)]
    if datum.bv is not None:
        maps.append(("bv", datum.bv))
    for label, morphism in maps:
        check = f"well_defined:{label}"
        report.checks.append(check)
        for rel in morphism.check_well_defined():
            report.add(
                Failure(
                    check=check,
                    degree=datum.presentation.degree_of(datum.presentation.parse(rel)),
                    message=f"relation {rel} is not sent to zero by {label}",
                    witness=rel,
                )
            )


def _definitional(datum: EvenGODatum, cap: int, report: VerificationReport) -> None:
    report.checks.append("definitional")
    a, b = datum.presentation, datum.complement
    for mono, gen in definitional_boundaries(datum.n).items():
        degree = mono.degree(b.degrees)
        if degree > cap:
            continue
        key = b.format(PolyF2.from_monomial(mono))
        value = datum.d_table.get(mono)
        if value is None:
            report.add(
                Failure(
                    check="definitional",
                    degree=degree,
                    node=f"d({key})",
                    message=f"d_table has no entry for {key}; expected {gen}",
                )
            )
        elif not a.equal(value, PolyF2.gen(gen)):
            report.add(
                Failure(
                    check="definitional",
                    degree=degree,
                    node=f"d({key})",
                    message=f"d({key}) = {a.format(value)}, expected {gen}",
                    witness=a.format(value),
                )
            )


def verify_even_datum(datum: EvenGODatum, cap: Optional[int] = None) -> VerificationReport:
    """
    Check a loaded datum against everything it must satisfy up to ``cap``.

    Runs well-definedness of ``res``, ``mu`` (and ``bv`` when present),
    exactness of the Gysin sequence with Euler class ``lambda`` (a
    table contradicting the projection formula is reported here), the
    definitional boundary values, the counit law of ``mu`` and (sampled)
    closure of the primitive classes under products. Failures are collected
    in the report; nothing is raised for a semantic failure.
    """
    from charclass.gysin import check_exactness, even_gysin_datum
    from charclass.primitive import check_counit, check_subring, twist_for_even

    top = datum.degree_cap if cap is None else cap
    if top > datum.degree_cap:
        raise CapExceededError(top, datum.degree_cap, what="verification degree")

    report = VerificationReport(subject=f"BGO{datum.n}", max_degree=top)
    _well_defined(datum, report)

    try:
        report.merge(check_exactness(even_gysin_datum(datum), top))
    except UnderdeterminedBoundaryError as e:
        report.checks.append("exactness")
        report.add(
            Failure(
                check="exactness",
                degree=e.degree,
                node=f"d on B^{e.degree}",
                message=str(e),
                witness=", ".join(e.monomials),
            )
        )
    except InconsistentBoundaryError as e:
        report.checks.extend(["exactness", "projection_formula"])
        report.add(
            Failure(
                check="projection_formula",
                degree=e.degree,
                node=f"d on B^{e.degree}",
                message=str(e),
                witness=e.relation,
            )
        )

    _definitional(datum, top, report)
    twist = twist_for_even(datum)
    report.merge(check_counit(twist, top))
    report.merge(check_subring(twist, top, samples=50))

    if report.ok:
        logger.info(f"BGO{datum.n} presentation verified to degree {top}")
    else:
        logger.warning(
            f"BGO{datum.n} presentation: {len(report.failures)} failure(s), "
            f"first at degree {report.first_failure_degree()}"
        )
    return report
