import itertools

import pytest
from hypothesis import given, strategies as st

from morsegrass.symbols import (
    AmbientMismatchError,
    GeneralizedSchubertSymbol,
    PartialFlagSpectrum,
    SchubertSymbol,
    bruhat_leq,
    cell_dimension,
    complement,
    critical_index,
    enumerate_generalized_symbols,
    enumerate_symbols,
    flow_line_exists,
    generalized_index,
    morse_refinements,
    ndcm_dimension,
    ndcm_shape,
    schubert_conditions,
)


def sym(entries, n):
    return SchubertSymbol(tuple(entries), n)


class TestSchubertSymbol:
    def test_invariants_enforced(self):
        with pytest.raises(ValueError):
            sym((2, 2), 4)
        with pytest.raises(ValueError):
            sym((0, 1), 4)
        with pytest.raises(ValueError):
            sym((1, 5), 4)
        with pytest.raises(ValueError):
            sym((1, 2, 3), 2)

    def test_enumeration_gr24(self):
        syms = enumerate_symbols(2, 4)
        assert [s.entries for s in syms] == [
            (1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)
        ]

    def test_enumeration_trivial_and_counts(self):
        assert len(enumerate_symbols(0, 3)) == 1
        assert enumerate_symbols(0, 3)[0].entries == ()
        assert len(enumerate_symbols(3, 6)) == 20

    def test_enumeration_domain_errors(self):
        with pytest.raises(ValueError):
            enumerate_symbols(5, 3)
        with pytest.raises(ValueError):
            enumerate_symbols(-1, 3)


class TestCellData:
    def test_dimensions_gr24(self):
        # Example table for Gr_2(C^4)
        dims = {s.entries: cell_dimension(s) for s in enumerate_symbols(2, 4)}
        assert dims == {(1, 2): 0, (1, 3): 1, (1, 4): 2, (2, 3): 2, (2, 4): 3, (3, 4): 4}

    def test_minimal_symbol_dimension_zero(self):
        assert cell_dimension(sym(range(1, 4), 6)) == 0

    def test_critical_index(self):
        assert critical_index(sym((1, 2), 4), "for_minus_f") == 0
        assert critical_index(sym((3, 4), 4), "for_f") == 0
        assert critical_index(sym((2, 4), 4), "for_minus_f") == 6

    def test_indices_even_and_bounded(self):
        for u in enumerate_symbols(2, 5):
            for sign in ("for_f", "for_minus_f"):
                idx = critical_index(u, sign)
                assert idx % 2 == 0
                assert 0 <= idx <= 2 * 2 * 3

    def test_schubert_conditions(self):
        assert schubert_conditions(sym((2, 4), 4)) == (0, 1, 1, 2)
        assert schubert_conditions(sym((3, 4), 4)) == (0, 0, 1, 2)
        assert schubert_conditions(sym((1, 2), 5)) == (1, 2, 2, 2, 2)

    def test_conditions_jump_exactly_at_entries(self):
        for u in enumerate_symbols(3, 6):
            v = schubert_conditions(u)
            prev = 0
            for i, vi in enumerate(v, start=1):
                jump = vi - prev
                assert jump == (1 if i in u.entries else 0)
                prev = vi
            assert v[-1] == u.k


class TestComplement:
    def test_examples(self):
        assert complement(sym((2, 4), 4)).entries == (1, 3)
        assert complement(sym((1, 2), 5)).entries == (4, 5)
        assert complement(sym((1, 4), 4)).entries == (1, 4)

    def test_involution_and_dimension_pairing(self):
        for k, n in [(2, 4), (2, 5), (3, 6)]:
            for u in enumerate_symbols(k, n):
                uc = complement(u)
                assert complement(uc) == u
                assert cell_dimension(u) + cell_dimension(uc) == k * (n - k)


class TestBruhatOrder:
    def test_examples(self):
        assert bruhat_leq(sym((3, 4), 4), sym((1, 2), 4))
        assert not bruhat_leq(sym((2, 3), 4), sym((1, 4), 4))
        assert not bruhat_leq(sym((1, 4), 4), sym((2, 3), 4))

    def test_ambient_mismatch(self):
        with pytest.raises(AmbientMismatchError):
            bruhat_leq(sym((1, 2), 4), sym((1, 2), 5))

    def test_partial_order_axioms(self):
        syms = enumerate_symbols(2, 4)
        for u in syms:
            assert bruhat_leq(u, u)
        for u, v in itertools.product(syms, repeat=2):
            if bruhat_leq(u, v) and bruhat_leq(v, u):
                assert u == v
        for u, v, w in itertools.product(syms, repeat=3):
            if bruhat_leq(u, v) and bruhat_leq(v, w):
                assert bruhat_leq(u, w)

    def test_flow_lines(self):
        assert flow_line_exists(sym((2, 4), 4), sym((1, 3), 4))
        assert not flow_line_exists(sym((2, 4), 4), sym((2, 4), 4))
        assert not flow_line_exists(sym((1, 3), 4), sym((2, 4), 4))

    def test_flow_line_decreases_index(self):
        for u1, u2 in itertools.product(enumerate_symbols(2, 5), repeat=2):
            if flow_line_exists(u1, u2):
                assert critical_index(u1, "for_minus_f") > critical_index(u2, "for_minus_f")


@given(
    st.integers(min_value=1, max_value=7).flatmap(
        lambda n: st.tuples(st.just(n), st.sets(st.integers(1, n), min_size=0, max_size=n))
    )
)
def test_complement_involution_property(data):
    n, entries = data
    u = SchubertSymbol(tuple(sorted(entries)), n)
    assert complement(complement(u)) == u
    assert cell_dimension(u) + cell_dimension(complement(u)) == u.k * (n - u.k)


class TestGeneralizedSymbols:
    def test_two_block_case(self):
        out = enumerate_generalized_symbols((1, 4), 2)
        assert {c.counts for c in out} == {(1, 1), (0, 2)}

    def test_cp6_blocks(self):
        out = enumerate_generalized_symbols((2, 3, 2), 1)
        assert {c.counts for c in out} == {(1, 0, 0), (0, 1, 0), (0, 0, 1)}

    def test_morse_case_counts(self):
        out = enumerate_generalized_symbols((1,) * 5, 2)
        assert len(out) == 10
        assert all(set(c.counts) <= {0, 1} for c in out)

    def test_invalid_blocks(self):
        with pytest.raises(ValueError):
            enumerate_generalized_symbols((0, 3), 1)
        with pytest.raises(ValueError):
            enumerate_generalized_symbols((2, 2), 5)

    def test_indices_cp6(self):
        by_counts = {
            c.counts: generalized_index(c)
            for c in enumerate_generalized_symbols((2, 3, 2), 1)
        }
        assert by_counts == {(1, 0, 0): 0, (0, 1, 0): 4, (0, 0, 1): 10}

    def test_index_matches_morse_case(self):
        for c in enumerate_generalized_symbols((1,) * 6, 3):
            (u,) = morse_refinements(c)
            assert generalized_index(c) == critical_index(u, "for_minus_f")

    def test_index_refinement_oracle_small(self):
        # oracle: minimum Morse index over compatible refinements
        for blocks in [(2, 2), (1, 3), (3, 1, 2), (2, 3, 2)]:
            n = sum(blocks)
            for k in range(n + 1):
                for c in enumerate_generalized_symbols(blocks, k):
                    oracle = min(
                        critical_index(u, "for_minus_f") for u in morse_refinements(c)
                    )
                    assert generalized_index(c) == oracle

    def test_ndcm_shape(self):
        c = GeneralizedSchubertSymbol((2, 1), (4, 4))
        assert ndcm_shape(c) == [(2, 4), (1, 4)]
        assert ndcm_dimension(c) == 2 * 2 + 1 * 3
        c2 = GeneralizedSchubertSymbol((0, 1, 0), (2, 3, 2))
        assert ndcm_shape(c2) == [(0, 2), (1, 3), (0, 2)]
        assert ndcm_dimension(c2) == 2
        for c3 in enumerate_generalized_symbols((1,) * 4, 2):
            assert ndcm_dimension(c3) == 0


class TestPartialFlagSpectrum:
    def test_valid(self):
        s = PartialFlagSpectrum((2.0, 1.0, 0.0), (2, 3, 2))
        assert s.n == 7

    def test_invalid(self):
        with pytest.raises(ValueError):
            PartialFlagSpectrum((1.0, 1.0), (2, 2))
        with pytest.raises(ValueError):
            PartialFlagSpectrum((1.0, -0.5), (2, 2))
        with pytest.raises(ValueError):
            PartialFlagSpectrum((1.0,), (0,))


def test_serialization_round_trip():
    u = sym((2, 4), 4)
    data = u.to_json()
    assert data == {"entries": [2, 4], "k": 2, "n": 4}
    assert SchubertSymbol(tuple(data["entries"]), data["n"]) == u
    c = GeneralizedSchubertSymbol((0, 1, 0), (2, 3, 2))
    assert c.to_json() == {"blocks": [2, 3, 2], "counts": [0, 1, 0]}
