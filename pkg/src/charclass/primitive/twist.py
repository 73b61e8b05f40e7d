"""Twist coproducts mu* and primitive classes."""

from dataclasses import dataclass
from typing import Optional

import numpy as np

from charclass.config import get_settings
from charclass.errors import ContractViolation
from charclass.f2linalg import kernel_basis
from charclass.gralg import (
    AlgebraMorphism,
    GradedAlgebraPresentation,
    PolyF2,
    evaluate_at_zero,
    inclusion,
    tensor,
)
from charclass.logging.config import get_logger
from charclass.reports import Failure, VerificationReport
from charclass.rings import BGM_TWIST_NAME, EvenGODatum, RingFamily, RingId, make_BGm, make_BGO_odd

logger = get_logger(__name__)


@dataclass(frozen=True)
class TwistStructure:
    """
    ``mu*: A -> A (x) H*(BGm)`` induced by ``(T, K) -> T (x) K``.

    ``p1`` is the pullback along the first projection and ``counit`` sets
    ``cK`` to zero.
    """

    ring: RingId
    algebra: GradedAlgebraPresentation
    twisted: GradedAlgebraPresentation
    mu: AlgebraMorphism
    p1: AlgebraMorphism
    counit: AlgebraMorphism

    @property
    def degree_cap(self) -> int:
        return self.algebra.degree_cap


def _structure(ring: RingId, algebra: GradedAlgebraPresentation, mu: AlgebraMorphism) -> TwistStructure:
    twisted = mu.target
    return TwistStructure(
        ring=ring,
        algebra=algebra,
        twisted=twisted,
        mu=mu,
        p1=inclusion(algebra, twisted),
        counit=evaluate_at_zero(twisted, algebra, [BGM_TWIST_NAME]),
    )


def builtin_mu_odd(n: int, degree_cap: Optional[int] = None) -> TwistStructure:
    """
    Built-in twist for odd ``n``: ``c -> c + cK``, ``w_i -> w_i``.

    These images are derived from the splitting ``GO_n = G_m x SO_n`` for odd
    ``n``, not read from data; the commutation check in ``charclass.gysin``
    cross-checks them.
    """
    algebra = make_BGO_odd(n, degree_cap)
    if BGM_TWIST_NAME in algebra.names:
        raise ContractViolation(f"{algebra.name} already uses the name {BGM_TWIST_NAME}")
    twisted = tensor(algebra, make_BGm(BGM_TWIST_NAME, algebra.degree_cap), name=f"{algebra.name}*BGm")
    images = {g.name: PolyF2.gen(g.name) for g in algebra.generators}
    images["c"] = PolyF2.gen("c") + PolyF2.gen(BGM_TWIST_NAME)
    mu = AlgebraMorphism(algebra, twisted, images, name="mu")
    return _structure(RingId(RingFamily.BGO_odd, n), algebra, mu)


def twist_for_even(datum: EvenGODatum) -> TwistStructure:
    """Twist structure read from an even-rank presentation file."""
    return _structure(RingId(RingFamily.BGO_even, datum.n), datum.presentation, datum.mu)


def twist_residue(t: TwistStructure, alpha: PolyF2) -> PolyF2:
    """``mu*(alpha) - p1*(alpha)`` in normal form; zero iff ``alpha`` is primitive."""
    return t.twisted.normal_form(t.mu.apply(alpha) + t.p1.apply(alpha))


def is_primitive(t: TwistStructure, alpha: PolyF2) -> bool:
    return twist_residue(t, alpha).is_zero()


def primitive_basis(t: TwistStructure, d: int) -> list[PolyF2]:
    """Basis of the primitive classes in degree ``d``, as a kernel of ``mu* - p1*``."""
    a = t.algebra
    if d < 0:
        return []
    difference = t.mu.matrix(d) + t.p1.matrix(d)
    basis = [a.from_coordinates(d, v) for v in kernel_basis(difference)]
    logger.debug(f"{a.name}: PH^{d} has dimension {len(basis)} of {a.dim(d)}")
    return basis


def primitive_poincare(t: TwistStructure, cap: Optional[int] = None) -> list[int]:
    top = t.degree_cap if cap is None else cap
    return [len(primitive_basis(t, d)) for d in range(top + 1)]


def check_counit(t: TwistStructure, cap: Optional[int] = None) -> VerificationReport:
    """Check that ``cK -> 0`` undoes ``mu*`` on every basis monomial up to ``cap``."""
    a = t.algebra
    top = t.degree_cap if cap is None else cap
    report = VerificationReport(subject=f"{a.name} twist", max_degree=top, checks=["counit"])
    for d in range(top + 1):
        for m in a.basis(d):
            alpha = PolyF2.from_monomial(m)
            back = t.counit.apply(t.mu.apply(alpha))
            if not a.equal(back, alpha):
                report.add(
                    Failure(
                        check="counit",
                        degree=d,
                        message=f"counit(mu*({a.format(alpha)})) = {a.format(back)}",
                        witness=a.format(alpha),
                    )
                )
    return report


def _combination(basis: list[PolyF2], rng: np.random.Generator) -> PolyF2:
    coefficients = rng.integers(0, 2, size=len(basis))
    if not coefficients.any():
        coefficients[0] = 1
    out = PolyF2.zero()
    for c, p in zip(coefficients, basis):
        if c:
            out = out + p
    return out


def check_subring(
    t: TwistStructure,
    cap: Optional[int] = None,
    samples: int = 100,
    seed: Optional[int] = None,
) -> VerificationReport:
    """
    Multiply random pairs of primitive classes and check the product is primitive.

    Pairs are drawn with ``numpy``'s generator seeded from ``seed`` or, when
    omitted, ``Settings.random_seed``.
    """
    a = t.algebra
    top = t.degree_cap if cap is None else cap
    rng = np.random.default_rng(get_settings().random_seed if seed is None else seed)
    report = VerificationReport(subject=f"{a.name} primitive subring", max_degree=top, checks=["subring"])
    bases = {d: primitive_basis(t, d) for d in range(1, top + 1)}
    pairs = [(d, e) for d in bases if bases[d] for e in bases if bases[e] and d + e <= top]
    if not pairs:
        report.skipped.append("subring: no primitive pairs below the cap")
        return report
    for _ in range(samples):
        d, e = pairs[int(rng.integers(len(pairs)))]
        x, y = _combination(bases[d], rng), _combination(bases[e], rng)
        product = a.multiply(x, y)
        if not is_primitive(t, product):
            report.add(
                Failure(
                    check="subring",
                    degree=d + e,
                    message=f"({a.format(x)}) * ({a.format(y)}) is not primitive",
                    witness=a.format(product),
                )
            )
    logger.debug(f"{a.name}: {samples} primitive products checked, {len(report.failures)} failures")
    return report
