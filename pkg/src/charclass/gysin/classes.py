"""Built-in structure maps: twisting by a line, B(v)* and the Gysin pairs (L_n, BGO_n)."""

from math import comb
from typing import Optional, Sequence

from charclass.errors import ContractViolation, DataRequiredError, MorphismError
from charclass.gralg import AlgebraMorphism, GradedAlgebraPresentation, Monomial, PolyF2
from charclass.gysin.sequence import GysinDatum
from charclass.rings import EvenGODatum, make_BGO_odd, make_BO
from charclass.rings.even import SCHEMA_HINT


def tensor_by_line(
    classes: Sequence[PolyF2],
    t: PolyF2,
    ring: Optional[GradedAlgebraPresentation] = None,
) -> list[PolyF2]:
    """
    Characteristic classes of ``E (x) D`` from those of ``E`` (rank ``m``) and ``t`` of ``D``.

    ``w'_k = sum_j C(m-j, k-j) w_j t^(k-j)`` with ``w_0 = 1``, mod 2. With a
    ``ring`` the products are reduced there (and the cap enforced).
    """
    m = len(classes)
    w = [PolyF2.one(), *classes]

    def times(p: PolyF2, q: PolyF2) -> PolyF2:
        return ring.multiply(p, q) if ring is not None else p * q

    powers = [PolyF2.one()]
    for _ in range(m):
        powers.append(times(powers[-1], t))

    out = []
    for k in range(1, m + 1):
        total = PolyF2.zero()
        for j in range(k + 1):
            if comb(m - j, k - j) % 2:
                total = total + times(w[j], powers[k - j])
        out.append(ring.normal_form(total) if ring is not None else total)
    return out


def bv_star(
    n: int,
    datum: Optional[EvenGODatum] = None,
    degree_cap: Optional[int] = None,
) -> AlgebraMorphism:
    """
    ``B(v)*: H*(BGO_n) -> H*(BO_{n-1})`` for ``v: O_{n-1} -> GO_n``.

    Odd ``n``: the multiplier goes to ``w1^2`` and ``w_i`` to the classes of
    ``(1 + F) (x) det F``. Even ``n``: read from the datum's ``bv`` table.
    """
    if n < 2:
        raise ContractViolation(f"B(v)* needs n >= 2, got {n}")
    if n % 2 == 0:
        if datum is None or datum.bv is None:
            raise DataRequiredError(
                f"B(v)* for even n={n} comes from the presentation file's 'bv' table",
                SCHEMA_HINT,
            )
        if datum.n != n:
            raise ContractViolation(f"datum is for n={datum.n}, not {n}")
        violations = datum.bv.check_well_defined()
        if violations:
            raise MorphismError(f"bv: relations not sent to zero: {', '.join(violations)}", violations)
        return datum.bv

    source = make_BGO_odd(n, degree_cap)
    target = make_BO(n - 1, source.degree_cap)
    w1 = PolyF2.gen("w1")
    split = [PolyF2.gen(f"w{i}") for i in range(1, n)] + [PolyF2.zero()]
    twisted = tensor_by_line(split, w1, target)
    images = {"c": w1**2}
    images.update({f"w{i}": twisted[i - 1] for i in range(2, n + 1)})
    return AlgebraMorphism(source, target, images, name="bv")


def odd_gysin_datum(n: int, degree_cap: Optional[int] = None) -> GysinDatum:
    """
    Gysin pair ``(L_n, BGO_n)`` for odd ``n``.

    The Euler class is 0 (the multiplier line of an odd-rank triple is a
    square mod 2), ``res`` sends ``c -> w1^2`` and ``w_i`` to the classes of
    ``E (x) det E``, and ``d(w1) = 1``.
    """
    a = make_BGO_odd(n, degree_cap)
    b = make_BO(n, a.degree_cap)
    w1 = PolyF2.gen("w1")
    twisted = tensor_by_line([PolyF2.gen(f"w{i}") for i in range(1, n + 1)], w1, b)
    images = {"c": w1**2}
    images.update({f"w{i}": twisted[i - 1] for i in range(2, n + 1)})
    res = AlgebraMorphism(a, b, images, name="res")
    return GysinDatum(a, PolyF2.zero(), b, res, {Monomial.generator("w1"): PolyF2.one()}, name=f"(L{n},BGO{n})")


def even_gysin_datum(datum: EvenGODatum) -> GysinDatum:
    """Gysin pair ``(L_n, BGO_n)`` for a loaded even-rank presentation, Euler class ``lambda``."""
    return GysinDatum(
        datum.presentation,
        PolyF2.gen("lambda"),
        datum.complement,
        datum.res,
        datum.d_table,
        name=f"(L{datum.n},BGO{datum.n})",
    )
