"""Registry of classifying-space cohomology rings and even-rank presentation files."""

from charclass.rings.even import (
    EvenGODatum,
    EvenPresentationFile,
    even_inventory,
    load_even_for_rank,
    load_even_presentation,
    parse_even_presentation,
)
from charclass.rings.registry import (
    BGM_TWIST_NAME,
    RingFamily,
    RingId,
    chern_to_sw,
    make_BGL,
    make_BGm,
    make_BGO_odd,
    make_BO,
    make_BSO_odd,
    ring_for,
)
from charclass.rings.verify import verify_even_datum

__all__ = [
    "BGM_TWIST_NAME",
    "EvenGODatum",
    "EvenPresentationFile",
    "RingFamily",
    "RingId",
    "chern_to_sw",
    "even_inventory",
    "load_even_for_rank",
    "load_even_presentation",
    "make_BGL",
    "make_BGO_odd",
    "make_BGm",
    "make_BO",
    "make_BSO_odd",
    "parse_even_presentation",
    "ring_for",
    "verify_even_datum",
]
