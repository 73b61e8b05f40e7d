"""Hypothesis strategies for mildly degenerating triples."""

from hypothesis import strategies as st
from sympy import Poly

from charclass.quadbundle import (
    TVAR,
    CoefficientField,
    LocalTriple,
    congruence,
    poly_constant,
    poly_from_coefficients,
)


def scalars(field: CoefficientField, nonzero: bool = False):
    if field.is_finite:
        return st.integers(1 if nonzero else 0, field.p - 1)
    values = st.integers(-3, 3)
    return values.filter(bool) if nonzero else values


def polynomials(field: CoefficientField):
    """Polynomials of degree <= 1."""
    return st.lists(scalars(field), min_size=2, max_size=2).map(lambda c: poly_from_coefficients(field, c))


def units(field: CoefficientField):
    """Polynomials of degree <= 1 that do not vanish at t = 0."""
    return st.tuples(scalars(field, nonzero=True), scalars(field)).map(
        lambda c: poly_from_coefficients(field, list(c))
    )


def _unitriangular(draw, field: CoefficientField, n: int, lower: bool) -> list[list[Poly]]:
    one, zero = poly_constant(field, 1), poly_constant(field, 0)
    rows = []
    for i in range(n):
        row = []
        for j in range(n):
            if i == j:
                row.append(one)
            elif (j < i) == lower:
                row.append(draw(polynomials(field)))
            else:
                row.append(zero)
        rows.append(row)
    return rows


@st.composite
def unimodular(draw, field: CoefficientField, n: int) -> list[list[list[Poly]]]:
    """
    Factors of a random matrix invertible over the local ring: upper and
    lower unitriangular, a permutation and a diagonal of units.
    """
    zero = poly_constant(field, 0)
    perm = draw(st.permutations(range(n)))
    permutation = [[poly_constant(field, 1) if perm[i] == j else zero for j in range(n)] for i in range(n)]
    diagonal = [[draw(units(field)) if i == j else zero for j in range(n)] for i in range(n)]
    return [
        _unitriangular(draw, field, n, lower=False),
        _unitriangular(draw, field, n, lower=True),
        permutation,
        diagonal,
    ]


def move(t: LocalTriple, factors: list[list[list[Poly]]]) -> LocalTriple:
    for g in factors:
        t = congruence(t, g)
    return t


@st.composite
def mild_triples(
    draw, field: CoefficientField, min_rank: int = 1, max_rank: int = 3, max_multiplicity: int = 3
):
    """
    ``(T, nu)``: ``diag(u t^nu, d_1, ..., d_{n-1})`` with units ``u, d_i``,
    moved by a random unimodular congruence, so in general neither the form
    nor the kernel line of ``b mod t`` is aligned with the coordinates.
    """
    n = draw(st.integers(min_rank, max_rank))
    nu = draw(st.integers(1, max_multiplicity))
    head = draw(units(field)) * Poly(TVAR**nu, TVAR, domain=field.domain)
    tail = [draw(units(field)) for _ in range(n - 1)]
    t = LocalTriple.diagonal(field, [head, *tail])
    return move(t, draw(unimodular(field, n))), nu
