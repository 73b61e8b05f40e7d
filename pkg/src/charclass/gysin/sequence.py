"""Gysin data, the boundary map via the projection formula, and exactness checks.

For a pair with Euler class ``e`` in ``A`` and complement ring ``B`` the long
exact sequence reads::

    ... -> A^{i-2} --e--> A^i --res--> B^i --d--> A^{i-1} --e--> A^{i+1} -> ...

``d`` is known on a few monomials of ``B`` (the table) and extended by the
projection formula ``d(res(y) * x) = y * d(x)``.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from typing import Mapping, Optional

import numpy as np

from charclass.errors import (
    CapExceededError,
    ContractViolation,
    InconsistentBoundaryError,
    UnderdeterminedBoundaryError,
)
from charclass.f2linalg import F2Matrix, kernel_basis, rank, row_echelon, solve
from charclass.gralg import AlgebraMorphism, GradedAlgebraPresentation, Monomial, PolyF2
from charclass.logging.config import get_logger
from charclass.reports import Failure, VerificationReport

logger = get_logger(__name__)

ONE = Monomial()


@dataclass(frozen=True)
class BoundaryResult:
    """Value of ``d(x)``, or the monomials of ``x`` the table cannot reach."""

    degree: int
    value: Optional[PolyF2]
    unresolved: tuple[str, ...] = ()

    @property
    def determined(self) -> bool:
        return self.value is not None

    def require(self) -> PolyF2:
        if self.value is None:
            raise UnderdeterminedBoundaryError(self.degree, self.unresolved)
        return self.value


@dataclass(frozen=True)
class _Span:
    matrix: F2Matrix
    values: F2Matrix
    labels: tuple[tuple[Monomial, Monomial], ...]


class GysinDatum:
    """
    ``(A, e, B, res, d_table)`` describing one Gysin sequence.

    The entry ``d(1) = 0`` is always present. With ``check_consistency`` the
    table is checked against the projection formula in every degree
    :meth:`boundary` is asked about.
    """

    def __init__(
        self,
        base: GradedAlgebraPresentation,
        euler: PolyF2,
        complement: GradedAlgebraPresentation,
        res: AlgebraMorphism,
        d_table: Mapping[Monomial, PolyF2],
        name: str = "gysin",
        check_consistency: bool = True,
    ):
        if res.source is not base or res.target is not complement:
            raise ContractViolation(f"{name}: res must map {base.name} to {complement.name}")
        euler_degree = base.degree_of(euler)
        if euler_degree not in (None, 2):
            raise ContractViolation(f"{name}: Euler class must have degree 2, got {euler_degree}")

        table: dict[Monomial, PolyF2] = {ONE: PolyF2.zero()}
        for key, value in d_table.items():
            kd = key.degree(complement.degrees)
            vd = base.degree_of(value)
            if vd is not None and vd != kd - 1:
                raise ContractViolation(
                    f"{name}: d({complement.format(PolyF2.from_monomial(key))}) has degree {vd}, expected {kd - 1}"
                )
            if key == ONE and not value.is_zero():
                raise ContractViolation(f"{name}: d(1) must be 0")
            table[key] = value

        self.name = name
        self.base = base
        self.euler = euler
        self.complement = complement
        self.res = res
        self.d_table: dict[Monomial, PolyF2] = table
        self._table_degrees = {k: k.degree(complement.degrees) for k in table}
        self._lock = threading.Lock()
        self._spans: dict[int, _Span] = {}
        self.check_consistency = check_consistency
        self._consistent: set[int] = set()

    @property
    def degree_cap(self) -> int:
        return min(self.base.degree_cap, self.complement.degree_cap)

    def __repr__(self) -> str:
        return f"GysinDatum({self.name}: {self.base.name} -> {self.complement.name})"

    def _span(self, d: int) -> _Span:
        """Columns ``res(y) * t`` spanning what the table reaches in ``B^d``."""
        with self._lock:
            cached = self._spans.get(d)
            if cached is not None:
                return cached
            a, b = self.base, self.complement
            columns = []
            values = []
            labels = []
            for t, td in sorted(self._table_degrees.items(), key=lambda kv: kv[1]):
                if td > d:
                    continue
                t_poly = PolyF2.from_monomial(t)
                for y in a.basis(d - td):
                    image = b.multiply(self.res.apply(PolyF2.from_monomial(y)), t_poly)
                    columns.append(b.coordinates(image, d))
                    values.append(a.coordinates(a.multiply(PolyF2.from_monomial(y), self.d_table[t]), d - 1))
                    labels.append((y, t))
            span = _Span(
                F2Matrix.from_columns(columns, rows=b.dim(d)),
                F2Matrix.from_columns(values, rows=a.dim(d - 1)),
                tuple(labels),
            )
            self._spans[d] = span
            logger.debug(f"{self.name}: degree {d} boundary span has {len(labels)} columns, dim B = {b.dim(d)}")
            return span

    def _label(self, y: Monomial, t: Monomial) -> str:
        a, b = self.base, self.complement
        return f"res({a.format(PolyF2.from_monomial(y))})*{b.format(PolyF2.from_monomial(t))}"

    def inconsistencies(self, d: int) -> list[tuple[str, PolyF2]]:
        """
        Linear relations among the columns ``res(y) * t`` of ``B^d`` whose
        boundaries ``sum y * d(t)`` do not vanish in ``A^{d-1}``.

        Each entry is the relation and its nonzero boundary. The list is
        empty exactly when the table extends to a well-defined ``d`` on the
        span.
        """
        span = self._span(d)
        found = []
        for v in kernel_basis(span.matrix):
            image = span.values.matvec(v)
            if image.any():
                relation = " + ".join(self._label(*span.labels[j]) for j in np.flatnonzero(v))
                found.append((relation, self.base.from_coordinates(d - 1, image)))
        return found

    def _require_consistent(self, d: int) -> None:
        if d in self._consistent:
            return
        bad = self.inconsistencies(d)
        if bad:
            relation, value = bad[0]
            logger.debug(f"{self.name}: {len(bad)} inconsistent relation(s) in degree {d}")
            raise InconsistentBoundaryError(d, relation, self.base.format(value))
        self._consistent.add(d)

    def boundary(self, x: PolyF2) -> BoundaryResult:
        """
        ``d(x)`` for homogeneous ``x`` in ``B``; linear in ``x``.

        Raises:
            InconsistentBoundaryError: if the table contradicts the projection
                formula in the degree of ``x`` (only with ``check_consistency``)
        """
        b = self.complement
        d = b.degree_of(x)
        if d is None:
            return BoundaryResult(0, PolyF2.zero())
        if d > self.degree_cap:
            raise CapExceededError(d, self.degree_cap, what=f"{self.name} boundary degree")
        if self.check_consistency:
            self._require_consistent(d)
        span = self._span(d)
        target = b.coordinates(x, d)
        solution = solve(span.matrix, target)
        if solution is None:
            unresolved = []
            for m in b.normal_form(x).terms:
                if solve(span.matrix, b.coordinates(PolyF2.from_monomial(m), d)) is None:
                    unresolved.append(b.format(PolyF2.from_monomial(m)))
            logger.debug(f"{self.name}: d underdetermined in degree {d} at {unresolved}")
            return BoundaryResult(d, None, tuple(sorted(unresolved)))
        a = self.base
        value = PolyF2.zero()
        for j in np.flatnonzero(solution):
            y, t = span.labels[j]
            value = value + a.multiply(PolyF2.from_monomial(y), self.d_table[t])
        return BoundaryResult(d, a.normal_form(value))

    # -- degreewise matrices ------------------------------------------

    def euler_matrix(self, i: int) -> F2Matrix:
        """Cup with ``e``: ``A^{i-2} -> A^i``."""
        a = self.base
        columns = [a.coordinates(a.multiply(PolyF2.from_monomial(m), self.euler), i) for m in a.basis(i - 2)]
        return F2Matrix.from_columns(columns, rows=a.dim(i))

    def res_matrix(self, i: int) -> F2Matrix:
        return self.res.matrix(i)

    def boundary_matrix(self, i: int) -> F2Matrix:
        """``d: B^i -> A^{i-1}``; raises if any basis monomial is unreachable."""
        a, b = self.base, self.complement
        columns = []
        for m in b.basis(i):
            value = self.boundary(PolyF2.from_monomial(m)).require()
            columns.append(a.coordinates(value, i - 1))
        return F2Matrix.from_columns(columns, rows=a.dim(i - 1))


def gysin_d(g: GysinDatum, x: PolyF2) -> BoundaryResult:
    return g.boundary(x)


def _check_node(
    report: VerificationReport,
    degree: int,
    node: str,
    incoming: F2Matrix,
    outgoing: F2Matrix,
    space: GradedAlgebraPresentation,
    space_degree: int,
) -> None:
    """Record a failure unless ``ker(outgoing) == im(incoming)``."""
    composite = outgoing @ incoming
    if not composite.is_zero():
        dense = composite.to_dense()
        col = int(np.flatnonzero(dense.any(axis=0))[0])
        image = incoming.to_dense()[:, col]
        witness = space.format(space.from_coordinates(space_degree, image))
        report.add(
            Failure(
                check="exactness",
                degree=degree,
                node=node,
                message="composite of consecutive maps is nonzero",
                witness=witness,
            )
        )
        return
    dim = outgoing.cols
    if rank(incoming) == dim - rank(outgoing):
        return
    image_rows = row_echelon(incoming.transpose())
    for v in kernel_basis(outgoing):
        if not image_rows.contains(v):
            witness = space.format(space.from_coordinates(space_degree, v))
            report.add(
                Failure(
                    check="exactness",
                    degree=degree,
                    node=node,
                    message="kernel is larger than image",
                    witness=witness,
                )
            )
            return


def check_exactness(g: GysinDatum, cap: Optional[int] = None) -> VerificationReport:
    """
    Check ``ker = im`` at every node of the sequence in degrees ``<= cap``.

    At step ``i`` the nodes are ``A^i`` (res after cup), ``B^i`` (d after res)
    and ``A^{i-1}`` (cup after d). The last node needs ``A^{i+1}`` and is
    skipped at ``i = cap`` when that lies beyond the base cap.

    Raises:
        UnderdeterminedBoundaryError: if ``d`` is not determined on some ``B^i``
    """
    top = g.degree_cap if cap is None else cap
    if top > g.degree_cap:
        raise CapExceededError(top, g.degree_cap, what="exactness degree")
    a, b = g.base, g.complement
    report = VerificationReport(subject=g.name, max_degree=top, checks=["exactness"])
    for i in range(top + 1):
        cup_in = g.euler_matrix(i)
        res_i = g.res_matrix(i)
        d_i = g.boundary_matrix(i)
        _check_node(report, i, f"ker(res) vs im(e) at A^{i}", cup_in, res_i, a, i)
        _check_node(report, i, f"ker(d) vs im(res) at B^{i}", res_i, d_i, b, i)
        if i + 1 <= a.degree_cap:
            _check_node(report, i, f"ker(e) vs im(d) at A^{i - 1}", d_i, g.euler_matrix(i + 1), a, i - 1)
        else:
            report.skipped.append(f"ker(e) vs im(d) at A^{i - 1}: A^{i + 1} is above the cap")
    if report.ok:
        logger.info(f"{g.name}: exact through degree {top}")
    else:
        logger.warning(f"{g.name}: {len(report.failures)} exactness failure(s)")
    return report
