"""Quadratic triples on the local model ``(Spec k[t]_(t), V(t))``.

Line bundles over the local base are trivial, so a triple is a symmetric
matrix over ``k[t]`` and tensoring by a line bundle is scaling by a unit.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Sequence

from sympy import Poly, Symbol
from sympy.polys.matrices import DomainMatrix

from charclass.errors import ContractViolation, NotMildlyDegeneratingError
from charclass.quadbundle.field import CoefficientField, Scalar

TVAR = Symbol("t")


def poly_from_coefficients(field: CoefficientField, coefficients: Sequence[Scalar]) -> Poly:
    """Polynomial in ``t`` from coefficients listed constant term first."""
    k = field.domain
    values = [k.to_sympy(field.element(c)) for c in coefficients] or [0]
    return Poly(list(reversed(values)), TVAR, domain=k)


def poly_constant(field: CoefficientField, value: Scalar) -> Poly:
    return poly_from_coefficients(field, [value])


def constant_term(field: CoefficientField, p: Poly) -> Any:
    return field.domain.from_sympy(p.coeff_monomial(1))


def valuation(p: Poly) -> int:
    """``t``-adic valuation of a nonzero polynomial."""
    if p.is_zero:
        raise ContractViolation("the zero polynomial has no valuation")
    return min(m[0] for m in p.monoms())


@dataclass(frozen=True)
class LocalTriple:
    """
    Symmetric ``n x n`` matrix over ``k[t]``.

    For ``n >= 2`` the form may not vanish identically at ``t = 0``. A rank
    one triple is exempt: ``(u t^nu)`` is the only way a line degenerates,
    and its special fiber is zero.
    """

    field: CoefficientField
    entries: tuple[tuple[Poly, ...], ...]

    def __post_init__(self) -> None:
        n = len(self.entries)
        k = self.field.domain
        for i, row in enumerate(self.entries):
            if len(row) != n:
                raise ContractViolation(f"row {i} has {len(row)} entries, expected {n}")
            for p in row:
                if p.domain != k or p.gens != (TVAR,):
                    raise ContractViolation(f"entries must be polynomials in t over {self.field}")
        for i in range(n):
            for j in range(i + 1, n):
                if self.entries[i][j] != self.entries[j][i]:
                    raise ContractViolation(f"matrix is not symmetric at ({i}, {j})")
        if n >= 2 and all(k.is_zero(constant_term(self.field, p)) for row in self.entries for p in row):
            raise ContractViolation("form vanishes identically on the special fiber")

    @classmethod
    def from_coefficients(
        cls, field: CoefficientField, entries: Sequence[Sequence[Sequence[Scalar]]]
    ) -> LocalTriple:
        return cls(field, tuple(tuple(poly_from_coefficients(field, c) for c in row) for row in entries))

    @classmethod
    def diagonal(cls, field: CoefficientField, diagonal: Sequence[Poly]) -> LocalTriple:
        zero = poly_constant(field, 0)
        n = len(diagonal)
        return cls(field, tuple(tuple(diagonal[i] if i == j else zero for j in range(n)) for i in range(n)))

    @property
    def n(self) -> int:
        return len(self.entries)

    def special_fiber(self) -> list[list[Any]]:
        """``b mod t`` as domain elements of ``k``."""
        return [[constant_term(self.field, p) for p in row] for row in self.entries]

    def map_entries(self, fn: Any) -> LocalTriple:
        return LocalTriple(self.field, tuple(tuple(fn(p) for p in row) for row in self.entries))

    def __str__(self) -> str:
        rows = ["[" + ", ".join(str(p.as_expr()) for p in row) + "]" for row in self.entries]
        return f"LocalTriple over {self.field}: [" + ", ".join(rows) + "]"


def _ring_matrix(field: CoefficientField, rows: Sequence[Sequence[Poly]]) -> DomainMatrix:
    ring = field.domain[TVAR]
    n = len(rows)
    return DomainMatrix([[ring.from_sympy(p.as_expr()) for p in row] for row in rows], (n, n), ring)


def polynomial_det(field: CoefficientField, rows: Sequence[Sequence[Poly]]) -> Poly:
    if not rows:
        return poly_constant(field, 1)
    m = _ring_matrix(field, rows)
    return Poly(m.domain.to_sympy(m.det()), TVAR, domain=field.domain)


def rank_profile(t: LocalTriple) -> tuple[int, int]:
    """``(rank over k(t), rank of b mod t over k)``."""
    if t.n == 0:
        return 0, 0
    generic = _ring_matrix(t.field, t.entries).to_field().rank()
    special = DomainMatrix(t.special_fiber(), (t.n, t.n), t.field.domain).rank()
    return generic, special


def discriminant(t: LocalTriple) -> Poly:
    """``det(b)`` in ``k[t]``."""
    return polynomial_det(t.field, t.entries)


def multiplicity(t: LocalTriple) -> int:
    """Vanishing order at ``t = 0`` of the discriminant."""
    det = discriminant(t)
    if det.is_zero:
        raise NotMildlyDegeneratingError("discriminant vanishes identically: degenerate on the whole base")
    return valuation(det)


@dataclass(frozen=True)
class MildDegeneration:
    mild: bool
    generic_rank: int
    special_rank: int
    diagnosis: str

    def __bool__(self) -> bool:
        return self.mild


def is_mildly_degenerating(t: LocalTriple) -> MildDegeneration:
    """Nondegenerate off ``t = 0`` and of rank exactly ``n - 1`` on it."""
    generic, special = rank_profile(t)
    n = t.n
    if generic < n:
        diagnosis = f"generic rank {generic} < {n}: degenerate on the whole base"
    elif special == n:
        diagnosis = f"special rank {n}: nondegenerate at t = 0, the family does not degenerate"
    elif special < n - 1:
        diagnosis = f"special rank {special} (n-{n - special}): not minimally degenerate"
    else:
        return MildDegeneration(True, generic, special, f"mildly degenerating: ranks ({n}, {n - 1})")
    return MildDegeneration(False, generic, special, diagnosis)


def require_mild(t: LocalTriple) -> None:
    check = is_mildly_degenerating(t)
    if not check:
        raise NotMildlyDegeneratingError(check.diagnosis)


def _require_unit(field: CoefficientField, u: Poly) -> None:
    if field.domain.is_zero(constant_term(field, u)):
        raise ContractViolation(f"{u.as_expr()} is not a unit at t = 0")


def twist_by_unit(t: LocalTriple, u: Poly) -> LocalTriple:
    """``b -> u * b``: tensoring with a (trivialized) line bundle."""
    _require_unit(t.field, u)
    return t.map_entries(lambda p: p * u)


def orthogonal_sum(a: LocalTriple, b: LocalTriple) -> LocalTriple:
    """Block-diagonal sum."""
    if a.field != b.field:
        raise ContractViolation(f"cannot add triples over {a.field} and {b.field}")
    zero = poly_constant(a.field, 0)
    n = a.n + b.n
    rows = []
    for i in range(n):
        row = []
        for j in range(n):
            if i < a.n and j < a.n:
                row.append(a.entries[i][j])
            elif i >= a.n and j >= a.n:
                row.append(b.entries[i - a.n][j - a.n])
            else:
                row.append(zero)
        rows.append(tuple(row))
    return LocalTriple(a.field, tuple(rows))


def base_change(t: LocalTriple, m: int, u: Poly) -> LocalTriple:
    """Pull back along ``t -> u * t^m`` (the new coordinate is again called ``t``)."""
    if m < 1:
        raise ContractViolation(f"ramification index must be >= 1, got {m}")
    _require_unit(t.field, u)
    sub = u * Poly(TVAR**m, TVAR, domain=t.field.domain)
    return t.map_entries(lambda p: p.compose(sub))


def congruence(t: LocalTriple, g: Sequence[Sequence[Poly]]) -> LocalTriple:
    """``g b g^T`` for ``g`` invertible over the local ring."""
    n = t.n
    if len(g) != n or any(len(row) != n for row in g):
        raise ContractViolation(f"congruence matrix must be {n} x {n}")
    det = polynomial_det(t.field, g)
    if t.field.domain.is_zero(constant_term(t.field, det)):
        raise ContractViolation("congruence matrix is not invertible at t = 0")
    zero = poly_constant(t.field, 0)
    gb = [[sum((g[i][k] * t.entries[k][j] for k in range(n)), zero) for j in range(n)] for i in range(n)]
    out = [[sum((gb[i][k] * g[j][k] for k in range(n)), zero) for j in range(n)] for i in range(n)]
    return LocalTriple(t.field, tuple(tuple(row) for row in out))
