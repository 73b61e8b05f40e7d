"""Diagonalization over k and the associated nondegenerate triple."""

from dataclasses import dataclass
from typing import Any, Optional, Sequence

from sympy import Poly
from sympy.polys.matrices import DomainMatrix

from charclass.errors import ContractViolation
from charclass.logging.config import get_logger
from charclass.quadbundle.field import CoefficientField, Scalar
from charclass.quadbundle.triple import TVAR, LocalTriple, poly_constant, require_mild

logger = get_logger(__name__)


@dataclass(frozen=True)
class Diagonalization:
    """``P q P^T = diag(diagonal)`` with ``P`` invertible over k."""

    diagonal: tuple[Any, ...]
    transform: tuple[tuple[Any, ...], ...]


def _swap(a: list[list[Any]], p: list[list[Any]], i: int, j: int) -> None:
    a[i], a[j] = a[j], a[i]
    for row in a:
        row[i], row[j] = row[j], row[i]
    p[i], p[j] = p[j], p[i]


def _add(a: list[list[Any]], p: list[list[Any]], target: int, source: int, f: Any) -> None:
    """Row and column ``target += f * source``."""
    a[target] = [x + f * y for x, y in zip(a[target], a[source])]
    for row in a:
        row[target] = row[target] + f * row[source]
    p[target] = [x + f * y for x, y in zip(p[target], p[source])]


def diagonalize_with_transform(q: Sequence[Sequence[Any]], field: CoefficientField) -> Diagonalization:
    """
    Symmetric Gram-Schmidt over k (char != 2).

    Pivots go left to right. A zero pivot is replaced by a later nonzero
    diagonal entry, or else repaired by ``v -> v + w`` with a partner ``w``
    pairing nontrivially with ``v``; a row that is entirely zero yields 0.
    """
    k = field.domain
    n = len(q)
    a = [[k.convert(x) for x in row] for row in q]
    p = [[k.one if i == j else k.zero for j in range(n)] for i in range(n)]
    for c in range(n):
        if k.is_zero(a[c][c]):
            swap = next((j for j in range(c + 1, n) if not k.is_zero(a[j][j])), None)
            if swap is not None:
                _swap(a, p, c, swap)
            else:
                partner = next((j for j in range(c + 1, n) if not k.is_zero(a[c][j])), None)
                if partner is None:
                    continue
                _add(a, p, c, partner, k.one)
        pivot = a[c][c]
        for i in range(c + 1, n):
            if not k.is_zero(a[i][c]):
                _add(a, p, i, c, -(a[i][c] / pivot))
    return Diagonalization(tuple(a[i][i] for i in range(n)), tuple(tuple(row) for row in p))


def diagonalize(q: Sequence[Sequence[Any]], field: CoefficientField) -> list[Any]:
    """Diagonal entries of a form congruent to ``q``."""
    return list(diagonalize_with_transform(q, field).diagonal)


@dataclass(frozen=True)
class FormInvariants:
    rank: int
    discriminant_class: int
    scaling_changes_class: bool


@dataclass(frozen=True)
class ReducedTriple:
    """
    The nondegenerate form induced on ``E / ker(b mod t)``.

    Defined up to congruence and unit scaling. ``form`` is the restriction
    to the coordinate complement of the kernel line, ``diagonal`` a
    congruent diagonal form.
    """

    field: CoefficientField
    kernel: tuple[Any, ...]
    form: tuple[tuple[Any, ...], ...]
    diagonal: tuple[Any, ...]

    @property
    def m(self) -> int:
        return len(self.diagonal)

    def determinant(self) -> Any:
        k = self.field.domain
        out = k.one
        for d in self.diagonal:
            out = out * d
        return out

    def invariants(self) -> FormInvariants:
        disc = self.field.square_class(self.determinant()) if self.m else 1
        return FormInvariants(rank=self.m, discriminant_class=disc, scaling_changes_class=self.m % 2 == 1)

    def normalized(self) -> tuple[int, ...]:
        """
        Canonical diagonal: ``(1, ..., 1, disc)`` over F_p, squarefree
        classes of the entries over Q.
        """
        if self.m == 0:
            return ()
        if self.field.is_finite:
            return (1,) * (self.m - 1) + (self.field.square_class(self.determinant()),)
        return tuple(self.field.square_class(d) for d in self.diagonal)

    def equivalent(self, other: "ReducedTriple") -> Optional[bool]:
        """
        Equivalence up to congruence and unit scaling.

        Decided exactly over F_p; over Q only a disagreement of invariants is
        conclusive and ``None`` is returned otherwise.
        """
        if self.field != other.field:
            raise ContractViolation(f"cannot compare forms over {self.field} and {other.field}")
        mine, theirs = self.invariants(), other.invariants()
        if mine.rank != theirs.rank:
            return False
        if mine.rank == 0:
            return True
        if self.field.is_finite:
            return mine.scaling_changes_class or mine.discriminant_class == theirs.discriminant_class
        if not mine.scaling_changes_class and mine.discriminant_class != theirs.discriminant_class:
            return False
        return None

    def plain(self) -> dict[str, Any]:
        f = self.field
        return {
            "m": self.m,
            "kernel": [f.to_plain(x) for x in self.kernel],
            "diagonal": [f.to_plain(x) for x in self.diagonal],
            "normalized": list(self.normalized()),
        }


def reduced_triple(t: LocalTriple) -> ReducedTriple:
    """
    Associated nondegenerate triple of a mildly degenerating ``t``.

    The kernel line ``v`` of ``b mod t`` is read off a diagonalization; the
    coordinates other than the first nonzero entry of ``v`` span a
    complement, and ``b mod t`` restricted there is the induced form.
    """
    require_mild(t)
    field = t.field
    k = field.domain
    b0 = t.special_fiber()
    full = diagonalize_with_transform(b0, field)
    zero_at = next(i for i, d in enumerate(full.diagonal) if k.is_zero(d))
    kernel = full.transform[zero_at]
    lead = next(i for i, x in enumerate(kernel) if not k.is_zero(x))
    kernel = tuple(x / kernel[lead] for x in kernel)
    keep = [i for i in range(t.n) if i != lead]
    form = tuple(tuple(b0[i][j] for j in keep) for i in keep)
    diagonal = tuple(diagonalize(form, field))
    logger.debug(f"reduced triple over {field}: kernel {kernel}, diagonal {diagonal}")
    return ReducedTriple(field=field, kernel=kernel, form=form, diagonal=diagonal)


def model_triple(q: Sequence[Sequence[Scalar]], field: CoefficientField) -> LocalTriple:
    """``(t) + q``: the standard mildly degenerating family with multiplicity 1."""
    if not isinstance(q, (list, tuple)) or not all(isinstance(row, (list, tuple)) for row in q):
        raise ContractViolation("q must be a list of rows")
    k = field.domain
    m = len(q)
    values = [[field.element(x) for x in row] for row in q]
    if any(len(row) != m for row in values):
        raise ContractViolation("q must be square")
    if m and k.is_zero(DomainMatrix(values, (m, m), k).det()):
        raise ContractViolation("q is degenerate")
    for i in range(m):
        for j in range(i + 1, m):
            if values[i][j] != values[j][i]:
                raise ContractViolation(f"q is not symmetric at ({i}, {j})")
    n = m + 1
    zero = poly_constant(field, 0)
    rows = []
    for i in range(n):
        row = []
        for j in range(n):
            if i == 0 and j == 0:
                row.append(Poly(TVAR, TVAR, domain=k))
            elif i == 0 or j == 0:
                row.append(zero)
            else:
                row.append(Poly(k.to_sympy(values[i - 1][j - 1]), TVAR, domain=k))
        rows.append(tuple(row))
    return LocalTriple(field, tuple(rows))
