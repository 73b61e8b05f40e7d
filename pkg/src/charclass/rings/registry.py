"""Cohomology rings of the classifying stacks and the standard maps between them."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import TYPE_CHECKING, Optional

from charclass.errors import ContractViolation
from charclass.gralg import AlgebraMorphism, Generator, GradedAlgebraPresentation, PolyF2, tensor

if TYPE_CHECKING:
    from charclass.config import Settings

BGM_TWIST_NAME = "cK"


class RingFamily(str, Enum):
    """Classifying-stack families with a known mod-2 cohomology ring."""

    BO = "BO"
    BGL = "BGL"
    BGm = "BGm"
    BSO_odd = "BSO_odd"
    BGO_odd = "BGO_odd"
    BGO_even = "BGO_even"


@dataclass(frozen=True)
class RingId:
    family: RingFamily
    n: int = 1

    def __post_init__(self) -> None:
        f, n = self.family, self.n
        if f in (RingFamily.BSO_odd, RingFamily.BGO_odd) and (n < 1 or n % 2 == 0):
            raise ContractViolation(f"{f.value} needs odd n >= 1, got {n}")
        if f is RingFamily.BGO_even and (n < 2 or n % 2):
            raise ContractViolation(f"BGO_even needs even n >= 2, got {n}")
        if f in (RingFamily.BO, RingFamily.BGL) and n < 1:
            raise ContractViolation(f"{f.value} needs n >= 1, got {n}")
        if f is RingFamily.BGm and n != 1:
            raise ContractViolation("BGm has no rank parameter other than 1")

    @classmethod
    def parse(cls, family: str, n: int) -> RingId:
        """
        Resolve a user-facing family name.

        ``BGO`` and ``BSO`` pick the odd or even variant from the parity of
        ``n``; the full enum values are accepted too.
        """
        key = family.strip()
        if key.upper() == "BGO":
            return cls(RingFamily.BGO_odd if n % 2 else RingFamily.BGO_even, n)
        if key.upper() == "BSO":
            return cls(RingFamily.BSO_odd, n)
        for f in RingFamily:
            if f.value.lower() == key.lower():
                return cls(f, n)
        choices = ", ".join(["BGO", "BSO", *(f.value for f in RingFamily)])
        raise ContractViolation(f"unknown ring family {family!r}; expected one of {choices}")

    @property
    def label(self) -> str:
        if self.family is RingFamily.BGm:
            return "BGm"
        base = self.family.value.split("_")[0]
        return f"{base}{self.n}"


def _require_rank(n: int, minimum: int = 1) -> None:
    if n < minimum:
        raise ContractViolation(f"rank must be >= {minimum}, got {n}")


def make_BO(n: int, degree_cap: Optional[int] = None) -> GradedAlgebraPresentation:
    """``F2[w1, ..., wn]`` with ``deg wi = i``."""
    _require_rank(n)
    return GradedAlgebraPresentation(
        [Generator(f"w{i}", i) for i in range(1, n + 1)], (), degree_cap, name=f"BO{n}"
    )


def make_BGL(n: int, degree_cap: Optional[int] = None) -> GradedAlgebraPresentation:
    """Mod-2 Chern classes: ``F2[cbar1, ..., cbarn]`` with ``deg cbar_i = 2i``."""
    _require_rank(n)
    return GradedAlgebraPresentation(
        [Generator(f"cbar{i}", 2 * i) for i in range(1, n + 1)], (), degree_cap, name=f"BGL{n}"
    )


def make_BGm(name: str = BGM_TWIST_NAME, degree_cap: Optional[int] = None) -> GradedAlgebraPresentation:
    """``BGL1`` with its single class renamed (``cK`` on twist factors, ``c`` inside BGO)."""
    return make_BGL(1, degree_cap).rename({"cbar1": name}, name="BGm")


def _require_odd(n: int) -> None:
    if n < 1 or n % 2 == 0:
        raise ContractViolation(f"odd rank required, got {n}")


def make_BSO_odd(n: int, degree_cap: Optional[int] = None) -> GradedAlgebraPresentation:
    """``F2[w2, ..., wn]`` for odd ``n``; ``n = 1`` gives F2."""
    _require_odd(n)
    return GradedAlgebraPresentation(
        [Generator(f"w{i}", i) for i in range(2, n + 1)], (), degree_cap, name=f"BSO{n}"
    )


def make_BGO_odd(n: int, degree_cap: Optional[int] = None) -> GradedAlgebraPresentation:
    """``F2[c] (x) F2[w2, ..., wn]``, the Kunneth product of BGm and BSO_n."""
    _require_odd(n)
    return tensor(make_BGm("c", degree_cap), make_BSO_odd(n, degree_cap), name=f"BGO{n}")


def chern_to_sw(n: int, degree_cap: Optional[int] = None) -> AlgebraMorphism:
    """Complexification-to-real map on cohomology: ``cbar_i -> w_i^2``."""
    source, target = make_BGL(n, degree_cap), make_BO(n, degree_cap)
    images = {f"cbar{i}": PolyF2.gen(f"w{i}") ** 2 for i in range(1, n + 1)}
    return AlgebraMorphism(source, target, images, name="chern_to_sw")


def ring_for(
    ring_id: RingId,
    settings: Optional[Settings] = None,
    degree_cap: Optional[int] = None,
) -> GradedAlgebraPresentation:
    """Presentation for ``ring_id``; even GO ranks come from the data directory."""
    f, n = ring_id.family, ring_id.n
    if f is RingFamily.BO:
        return make_BO(n, degree_cap)
    if f is RingFamily.BGL:
        return make_BGL(n, degree_cap)
    if f is RingFamily.BGm:
        return make_BGm("c", degree_cap)
    if f is RingFamily.BSO_odd:
        return make_BSO_odd(n, degree_cap)
    if f is RingFamily.BGO_odd:
        return make_BGO_odd(n, degree_cap)

    from charclass.rings.even import load_even_for_rank

    return load_even_for_rank(n, settings, degree_cap).presentation
