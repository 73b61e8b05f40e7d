import random

import pytest

from charclass.errors import ContractViolation, DataRequiredError
from charclass.gralg import PolyF2
from charclass.rings import (
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


def partition_counts(n: int, cap: int) -> list[int]:
    """Coefficients of prod_{i<=n} 1/(1-q^i), by counting partitions into parts <= n."""
    counts = [1] + [0] * cap
    for part in range(1, n + 1):
        for d in range(part, cap + 1):
            counts[d] += counts[d - part]
    return counts


def convolve(a: list[int], b: list[int]) -> list[int]:
    return [sum(a[i] * b[d - i] for i in range(d + 1)) for d in range(len(a))]


@pytest.mark.unit
class TestRingId:
    def test_parse_bgo_by_parity(self):
        assert RingId.parse("BGO", 3).family is RingFamily.BGO_odd
        assert RingId.parse("bgo", 4).family is RingFamily.BGO_even
        assert RingId.parse("BO", 2).label == "BO2"

    def test_parse_unknown(self):
        with pytest.raises(ContractViolation, match="unknown ring family"):
            RingId.parse("BU", 2)

    @pytest.mark.parametrize(
        "family,n",
        [(RingFamily.BSO_odd, 2), (RingFamily.BGO_odd, 4), (RingFamily.BGO_even, 3), (RingFamily.BO, 0)],
    )
    def test_invalid_ranks(self, family, n):
        with pytest.raises(ContractViolation):
            RingId(family, n)


@pytest.mark.unit
class TestBuiltinRings:
    @pytest.mark.parametrize("n", range(1, 7))
    def test_bo_poincare_series(self, n):
        assert make_BO(n, 16).poincare_series(16) == partition_counts(n, 16)

    @pytest.mark.parametrize("n", [3, 5, 7])
    def test_bgo_odd_is_kunneth_product(self, n):
        bgm = make_BGm("c", 16).poincare_series(16)
        bso = make_BSO_odd(n, 16).poincare_series(16)
        assert make_BGO_odd(n, 16).poincare_series(16) == convolve(bgm, bso)

    def test_bgo3_series(self):
        assert make_BGO_odd(3, 6).poincare_series(6) == [1, 0, 2, 1, 3, 2, 5]

    def test_rank_one_odd_rings(self):
        assert make_BSO_odd(1, 4).poincare_series(4) == [1, 0, 0, 0, 0]
        assert make_BGO_odd(1, 4).names == ("c",)

    def test_bgm_name(self):
        assert make_BGm().names == ("cK",)
        assert make_BGm().generator_degree("cK") == 2

    def test_bgl_degrees(self):
        assert make_BGL(3, 6).degrees == {"cbar1": 2, "cbar2": 4, "cbar3": 6}

    def test_ring_for_dispatch(self):
        assert ring_for(RingId.parse("BO", 3), degree_cap=4).name == "BO3"
        assert ring_for(RingId.parse("BGO", 5), degree_cap=4).name == "BGO5"

    def test_ring_for_even_reads_data_dir(self, test_settings):
        a = ring_for(RingId.parse("BGO", 2), test_settings, degree_cap=6)
        assert a.names == ("lambda", "a1", "b4")

    def test_ring_for_missing_even_rank(self, test_settings):
        with pytest.raises(DataRequiredError, match="bgo4.json"):
            ring_for(RingId.parse("BGO", 4), test_settings)


@pytest.mark.unit
class TestChernToSW:
    @pytest.mark.parametrize("n", range(1, 7))
    def test_generators_go_to_squares(self, n):
        f = chern_to_sw(n, 12)
        for i in range(1, n + 1):
            if 2 * i <= 12:
                assert f.apply(PolyF2.gen(f"cbar{i}")) == PolyF2.gen(f"w{i}") ** 2

    def test_multiplicative_on_random_products(self):
        rng = random.Random(0)
        f = chern_to_sw(3, 16)
        source, target = f.source, f.target
        for _ in range(50):
            a = PolyF2.from_monomial(rng.choice(source.basis(rng.choice([2, 4, 6]))))
            b = PolyF2.from_monomial(rng.choice(source.basis(rng.choice([2, 4]))))
            assert f.apply(source.multiply(a, b)) == target.multiply(f.apply(a), f.apply(b))
