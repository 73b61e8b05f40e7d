"""Graded-commutative F2 algebras given by generators and homogeneous relations.

Everything is computed one degree at a time: the degree-``d`` part of the
relation ideal is spanned by ``relation * monomial`` products, row-reduced over
F2 with columns in decreasing monomial order. Pivot columns are leading
monomials of the ideal; the remaining monomials form the normal-form basis.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from typing import Iterable, Mapping, Optional, Sequence

import numpy as np

from charclass.errors import CapExceededError, ContractViolation
from charclass.f2linalg import EchelonForm, F2Matrix, row_echelon
from charclass.gralg.polynomial import (
    IDENTIFIER,
    ONE_MONOMIAL,
    Monomial,
    PolyF2,
    format_poly,
    parse_poly,
)
from charclass.logging.config import get_logger

logger = get_logger(__name__)


@dataclass(frozen=True)
class Generator:
    """A named algebra generator of positive cohomological degree."""

    name: str
    degree: int

    def __post_init__(self) -> None:
        if not IDENTIFIER.match(self.name):
            raise ContractViolation(f"invalid generator name {self.name!r}")
        if self.degree < 1:
            raise ContractViolation(f"generator {self.name} must have degree >= 1, got {self.degree}")


@dataclass(frozen=True)
class _DegreeSlice:
    monomials: tuple[Monomial, ...]
    index: Mapping[Monomial, int]
    ideal: EchelonForm
    basis: tuple[Monomial, ...]
    basis_index: Mapping[Monomial, int]


class GradedAlgebraPresentation:
    """
    ``F2[generators] / (relations)`` truncated at ``degree_cap``.

    Instances are immutable; the per-degree echelon cache is filled lazily
    under a lock and every fill is deterministic.
    """

    def __init__(
        self,
        generators: Sequence[Generator],
        relations: Iterable[PolyF2] = (),
        degree_cap: Optional[int] = None,
        name: str = "A",
    ):
        if degree_cap is None:
            from charclass.config import get_settings

            degree_cap = get_settings().degree_cap
        if degree_cap < 1:
            raise ContractViolation(f"degree cap must be positive, got {degree_cap}")

        names = [g.name for g in generators]
        duplicates = sorted({n for n in names if names.count(n) > 1})
        if duplicates:
            raise ContractViolation(f"duplicate generator names: {', '.join(duplicates)}")

        self.name = name
        self.generators: tuple[Generator, ...] = tuple(generators)
        self.degree_cap = degree_cap
        self._degrees = {g.name: g.degree for g in self.generators}
        self._order = tuple(names)

        rels = []
        for i, r in enumerate(relations):
            if r.is_zero():
                raise ContractViolation(f"relation {i} of {name} is zero")
            rels.append((r, self.degree_of(r)))
        self.relations: tuple[PolyF2, ...] = tuple(r for r, _ in rels)
        self._relation_degrees: tuple[int, ...] = tuple(d for _, d in rels)

        self._lock = threading.RLock()
        self._monomials: dict[int, tuple[Monomial, ...]] = {}
        self._slices: dict[int, _DegreeSlice] = {}

    # -- structure ----------------------------------------------------

    @property
    def names(self) -> tuple[str, ...]:
        return self._order

    @property
    def degrees(self) -> dict[str, int]:
        return dict(self._degrees)

    def generator_degree(self, name: str) -> int:
        try:
            return self._degrees[name]
        except KeyError:
            raise ContractViolation(f"{self.name} has no generator {name!r}") from None

    def is_free(self) -> bool:
        return not self.relations

    def __repr__(self) -> str:
        gens = ", ".join(f"{g.name}:{g.degree}" for g in self.generators)
        return f"GradedAlgebraPresentation({self.name}; {gens}; {len(self.relations)} relations)"

    def _check_names(self, p: PolyF2) -> None:
        unknown = p.names - set(self._degrees)
        if unknown:
            raise ContractViolation(f"unknown generator(s) for {self.name}: {', '.join(sorted(unknown))}")

    def degree_of(self, p: PolyF2) -> Optional[int]:
        """Degree of a homogeneous polynomial; None for zero."""
        self._check_names(p)
        degs = p.degrees(self._degrees)
        if len(degs) > 1:
            raise ContractViolation(f"inhomogeneous polynomial {self.format(p)} (degrees {sorted(degs)})")
        return next(iter(degs)) if degs else None

    def is_homogeneous(self, p: PolyF2) -> bool:
        self._check_names(p)
        return len(p.degrees(self._degrees)) <= 1

    def _check_cap(self, d: int) -> None:
        if d > self.degree_cap:
            raise CapExceededError(d, self.degree_cap, what=f"{self.name} degree")

    # -- degreewise linear algebra ------------------------------------

    def _enumerate(self, d: int, k: int) -> list[dict[str, int]]:
        if k == len(self._order):
            return [{}] if d == 0 else []
        name = self._order[k]
        step = self._degrees[name]
        out = []
        for e in range(d // step, -1, -1):
            for rest in self._enumerate(d - e * step, k + 1):
                if e:
                    rest = {name: e, **rest}
                out.append(rest)
        return out

    def monomials(self, d: int) -> tuple[Monomial, ...]:
        """All degree-``d`` monomials, largest first in graded-lex order."""
        if d < 0:
            return ()
        self._check_cap(d)
        with self._lock:
            cached = self._monomials.get(d)
            if cached is None:
                if d == 0:
                    cached = (ONE_MONOMIAL,)
                else:
                    cached = tuple(Monomial.from_mapping(e) for e in self._enumerate(d, 0))
                self._monomials[d] = cached
            return cached

    def _slice(self, d: int) -> _DegreeSlice:
        self._check_cap(d)
        with self._lock:
            cached = self._slices.get(d)
            if cached is not None:
                return cached
            monos = self.monomials(d)
            index = {m: i for i, m in enumerate(monos)}
            supports = []
            for r, rd in zip(self.relations, self._relation_degrees):
                for m in self.monomials(d - rd):
                    supports.append([index[t * m] for t in r.terms])
            ideal = row_echelon(F2Matrix.from_supports(supports, rows=len(supports), cols=len(monos)))
            pivots = set(ideal.pivots)
            basis = tuple(m for i, m in enumerate(monos) if i not in pivots)
            cached = _DegreeSlice(
                monomials=monos,
                index=index,
                ideal=ideal,
                basis=basis,
                basis_index={m: i for i, m in enumerate(basis)},
            )
            self._slices[d] = cached
            logger.debug(
                f"{self.name}: degree {d} slice, {len(monos)} monomials, "
                f"{len(supports)} ideal rows, rank {ideal.rank}"
            )
            return cached

    def basis(self, d: int) -> list[Monomial]:
        """Normal-form monomial basis of the degree-``d`` part."""
        if d < 0:
            return []
        return list(self._slice(d).basis)

    def dim(self, d: int) -> int:
        return len(self.basis(d))

    def poincare_series(self, cap: Optional[int] = None) -> list[int]:
        """``[dim A^0, ..., dim A^cap]``."""
        top = self.degree_cap if cap is None else cap
        self._check_cap(top)
        return [self.dim(d) for d in range(top + 1)]

    def normal_form(self, p: PolyF2) -> PolyF2:
        """Canonical representative of ``p`` modulo the relations."""
        d = self.degree_of(p)
        if d is None:
            return PolyF2.zero()
        sl = self._slice(d)
        v = np.zeros(len(sl.monomials), dtype=np.uint8)
        for m in p.terms:
            v[sl.index[m]] = 1
        residue = sl.ideal.reduce(v)
        return PolyF2(frozenset(sl.monomials[i] for i in np.flatnonzero(residue)))

    def is_zero(self, p: PolyF2) -> bool:
        return self.normal_form(p).is_zero()

    def equal(self, p: PolyF2, q: PolyF2) -> bool:
        return self.normal_form(p + q).is_zero()

    def multiply(self, p: PolyF2, q: PolyF2) -> PolyF2:
        dp, dq = self.degree_of(p), self.degree_of(q)
        if dp is None or dq is None:
            return PolyF2.zero()
        self._check_cap(dp + dq)
        return self.normal_form(p * q)

    def power(self, p: PolyF2, k: int) -> PolyF2:
        result = PolyF2.one()
        for _ in range(k):
            result = self.multiply(result, p)
        return result

    def coordinates(self, p: PolyF2, d: Optional[int] = None) -> np.ndarray:
        """Coordinates of ``p`` in :meth:`basis`; ``d`` is required when ``p`` may be zero."""
        pd = self.degree_of(p)
        if pd is None:
            if d is None:
                raise ContractViolation("degree required for the coordinates of 0")
            return np.zeros(self.dim(d), dtype=np.uint8)
        if d is not None and d != pd:
            raise ContractViolation(f"expected degree {d}, got {pd}")
        sl = self._slice(pd)
        vec = np.zeros(len(sl.basis), dtype=np.uint8)
        for m in self.normal_form(p).terms:
            vec[sl.basis_index[m]] = 1
        return vec

    def from_coordinates(self, d: int, vec: Sequence[int] | np.ndarray) -> PolyF2:
        basis = self.basis(d)
        bits = np.asarray(vec, dtype=np.uint8).reshape(-1)
        if bits.size != len(basis):
            raise ContractViolation(f"expected {len(basis)} coordinates in degree {d}, got {bits.size}")
        return PolyF2(frozenset(basis[i] for i in np.flatnonzero(bits & 1)))

    # -- text ---------------------------------------------------------

    def parse(self, text: str) -> PolyF2:
        """Parse an expression and check that it only uses this algebra's generators."""
        p = parse_poly(text)
        self._check_names(p)
        return p

    def format(self, p: PolyF2) -> str:
        if p.names <= set(self._degrees):
            return format_poly(p, self._order, self._degrees)
        return format_poly(p, self._order)

    # -- derived presentations ----------------------------------------

    def rename(self, mapping: Mapping[str, str], name: Optional[str] = None) -> GradedAlgebraPresentation:
        gens = [Generator(mapping.get(g.name, g.name), g.degree) for g in self.generators]
        rels = [r.rename(mapping) for r in self.relations]
        return GradedAlgebraPresentation(gens, rels, self.degree_cap, name or self.name)

    def with_relations(self, extra: Iterable[PolyF2], name: Optional[str] = None) -> GradedAlgebraPresentation:
        return GradedAlgebraPresentation(
            self.generators, [*self.relations, *extra], self.degree_cap, name or self.name
        )

    def with_cap(self, degree_cap: int) -> GradedAlgebraPresentation:
        return GradedAlgebraPresentation(self.generators, self.relations, degree_cap, self.name)


def ground_field(degree_cap: Optional[int] = None) -> GradedAlgebraPresentation:
    """The empty presentation F2, the unit for :func:`tensor`."""
    return GradedAlgebraPresentation((), (), degree_cap, name="F2")


def disjoint_renaming(a: GradedAlgebraPresentation, b: GradedAlgebraPresentation) -> dict[str, str]:
    """Renaming of ``b``'s generators that avoids every name of ``a``."""
    taken = set(a.names) | set(b.names)
    mapping = {}
    for n in b.names:
        if n in a.names:
            k = 2
            while f"{n}_{k}" in taken:
                k += 1
            mapping[n] = f"{n}_{k}"
            taken.add(mapping[n])
    return mapping


def tensor(
    a: GradedAlgebraPresentation,
    b: GradedAlgebraPresentation,
    name: Optional[str] = None,
) -> GradedAlgebraPresentation:
    """
    Tensor product over F2: union of generators and relations.

    Clashing names of ``b`` are renamed by :func:`disjoint_renaming`. The
    result's cap is the smaller of the two caps.
    """
    mapping = disjoint_renaming(a, b)
    if mapping:
        logger.debug(f"tensor {a.name} x {b.name}: renaming {mapping}")
        b = b.rename(mapping)
    return GradedAlgebraPresentation(
        [*a.generators, *b.generators],
        [*a.relations, *b.relations],
        min(a.degree_cap, b.degree_cap),
        name or f"{a.name}*{b.name}",
    )
