from itertools import product

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from threshold_qw.oracle import eigh
from threshold_qw.threshold import (
    BlockForm,
    CreationSequence,
    DisconnectedError,
    Graph,
    ParseError,
    block_form_to_creation,
    block_form_to_graph,
    conjugate_spectrum,
    creation_to_block_form,
    creation_to_graph,
    degree_sequence,
    delete_vertex_block_form,
    enumerate_block_forms,
    laplacian,
    parse_creation_sequence,
    random_creation_sequence,
    recognize_threshold,
)


def all_words(max_n):
    for n in range(1, max_n + 1):
        for tail in product((0, 1), repeat=n - 1):
            yield CreationSequence((0,) + tail)


def path(n):
    return Graph(n, frozenset((i, i + 1) for i in range(1, n)))


def cycle(n):
    return Graph(n, frozenset([(i, i + 1) for i in range(1, n)] + [(1, n)]))


def remove_vertex(g, v):
    keep = [u for u in range(1, g.n + 1) if u != v]
    relabel = {u: i for i, u in enumerate(keep, start=1)}
    return Graph(g.n - 1, frozenset((relabel[a], relabel[b]) for a, b in g.edges if v not in (a, b)))


class TestParse:
    def test_word_0011011(self):
        seq = parse_creation_sequence("0011011")
        assert seq.n == 7 and seq.connected

    def test_k2(self):
        seq = parse_creation_sequence("01")
        assert seq.n == 2 and seq.connected
        assert creation_to_graph(seq).edges == {(1, 2)}

    @pytest.mark.parametrize("text", ["012", "", "  ", "0a1"])
    def test_errors(self, text):
        with pytest.raises(ParseError):
            parse_creation_sequence(text)

    def test_seed_letter_normalized(self):
        assert str(parse_creation_sequence("111")) == "011"

    def test_disconnected_flag(self):
        assert not parse_creation_sequence("0110").connected


class TestBlockForm:
    @pytest.mark.parametrize("word, blocks", [
        ("0011011", (2, 2, 1, 2)),
        ("0011", (2, 2)),
        ("011", (1, 2)),
        ("01", (1, 1)),
    ])
    def test_from_creation(self, word, blocks):
        assert creation_to_block_form(parse_creation_sequence(word)).blocks == blocks

    def test_k3_is_odd_origin(self):
        form = creation_to_block_form(parse_creation_sequence("011"))
        assert form.odd_origin
        assert form.canonical() == (3,)
        # K_3 = O_1 v K_2: same degree sequence as the clique itself
        assert degree_sequence(block_form_to_graph(form)) == (2, 2, 2)

    def test_disconnected(self):
        with pytest.raises(DisconnectedError, match="disconnected"):
            creation_to_block_form(parse_creation_sequence("0110"))

    @pytest.mark.parametrize("canonical, internal", [
        ((2, 6, 4, 4), (2, 6, 4, 4)),
        ((3,), (1, 2)),
        ((2, 2, 4), (1, 1, 2, 4)),
    ])
    def test_canonical_round_trip(self, canonical, internal):
        form = BlockForm.from_canonical(canonical)
        assert form.blocks == internal
        assert form.canonical() == canonical

    @pytest.mark.parametrize("bad", [(1, 2, 3), (0, 2), (), (1,)])
    def test_canonical_rejects(self, bad):
        with pytest.raises(ValueError):
            BlockForm.from_canonical(bad)

    def test_internal_rejects_odd_length(self):
        with pytest.raises(ValueError):
            BlockForm((2, 2, 1))

    def test_parse_text(self):
        assert BlockForm.parse("2,6,4,4").blocks == (2, 6, 4, 4)
        assert BlockForm.parse("1,1").canonical() == (2,)
        with pytest.raises(ParseError):
            BlockForm.parse("2,x")

    def test_partial_sums_strictly_increasing(self):
        for form in enumerate_block_forms(9):
            s = form.partial_sums
            assert all(a < b for a, b in zip(s, s[1:]))
            assert s[-1] == form.n

    def test_block_of(self):
        form = BlockForm((2, 2, 1, 2))
        assert [form.block_of(v) for v in range(1, 8)] == [1, 1, 2, 2, 3, 4, 4]


class TestGraph:
    def test_gamma_2_2(self):
        g = block_form_to_graph(BlockForm((2, 2)))
        all_pairs = {(i, j) for i in range(1, 5) for j in range(i + 1, 5)}
        assert g.edges == all_pairs - {(1, 2)}
        assert g.degrees() == [2, 2, 3, 3]

    def test_k2(self):
        assert block_form_to_graph(BlockForm((1, 1))).edges == {(1, 2)}

    def test_gamma_2_2_1_2_degrees(self):
        g = block_form_to_graph(BlockForm((2, 2, 1, 2)))
        assert sorted(g.degrees()) == [2, 4, 4, 5, 5, 6, 6]

    def test_round_trip_against_sequence_construction(self):
        for seq in all_words(10):
            if not seq.connected:
                continue
            form = creation_to_block_form(seq)
            assert degree_sequence(block_form_to_graph(form)) == degree_sequence(creation_to_graph(seq))
            assert block_form_to_creation(form) == seq

    def test_json_round_trip(self):
        g = block_form_to_graph(BlockForm((2, 2, 1, 2)))
        data = g.to_json()
        assert data["n"] == 7 and [1, 3] in data["edges"]
        assert Graph.from_json(data) == g

    def test_rejects_self_loop(self):
        with pytest.raises(ValueError):
            Graph(3, frozenset([(2, 2)]))


class TestLaplacian:
    def test_k2(self):
        np.testing.assert_array_equal(laplacian(block_form_to_graph(BlockForm((1, 1)))), [[1, -1], [-1, 1]])

    def test_gamma_2_2(self):
        expected = [[2, 0, -1, -1], [0, 2, -1, -1], [-1, -1, 3, -1], [-1, -1, -1, 3]]
        np.testing.assert_array_equal(laplacian(block_form_to_graph(BlockForm((2, 2)))), expected)

    def test_empty(self):
        np.testing.assert_array_equal(laplacian(Graph(3, frozenset())), np.zeros((3, 3)))

    def test_rows_sum_to_zero(self):
        for form in enumerate_block_forms(8):
            assert np.all(laplacian(block_form_to_graph(form)).sum(axis=1) == 0)


class TestConjugateSpectrum:
    @pytest.mark.parametrize("degrees, spectrum", [
        ([2, 4, 4, 5, 5, 6, 6], [7, 7, 6, 6, 4, 2, 0]),
        ([1, 1], [2, 0]),
        ([2, 2, 3, 3], [4, 4, 2, 0]),
    ])
    def test_examples(self, degrees, spectrum):
        assert conjugate_spectrum(degrees) == spectrum

    def test_gamma_2_2_against_numpy(self):
        w = np.linalg.eigvalsh(laplacian(block_form_to_graph(BlockForm((2, 2)))))
        assert sorted(np.rint(w).astype(int), reverse=True) == [4, 4, 2, 0]

    def test_matches_oracle_every_threshold_graph(self):
        # disconnected ones included: every word of length <= 12
        for seq in all_words(12):
            g = creation_to_graph(seq)
            dec = eigh(laplacian(g))
            snapped = dec.integer_spectrum()
            assert snapped is not None, str(seq)
            assert sorted(snapped, reverse=True) == conjugate_spectrum(g.degrees()), str(seq)

    @given(st.lists(st.integers(0, 1), min_size=1, max_size=30))
    def test_sum_is_twice_edges(self, bits):
        g = creation_to_graph(CreationSequence(tuple([0] + bits[1:])))
        spec = conjugate_spectrum(g.degrees())
        assert sum(spec) == sum(g.degrees()) == 2 * len(g.edges)
        assert spec[-1] == 0
        assert spec == sorted(spec, reverse=True)


class TestRecognize:
    def test_k4_minus_edge(self):
        g = block_form_to_graph(BlockForm((2, 2)))
        assert str(recognize_threshold(g)) == "0011"

    def test_p4_and_c4(self):
        assert recognize_threshold(path(4)) is None
        assert recognize_threshold(cycle(4)) is None

    def test_k1(self):
        assert str(recognize_threshold(Graph(1, frozenset()))) == "0"

    def test_every_block_form_graph(self):
        for form in enumerate_block_forms(10):
            g = block_form_to_graph(form)
            seq = recognize_threshold(g)
            assert seq is not None
            assert degree_sequence(creation_to_graph(seq)) == degree_sequence(g)

    @settings(max_examples=60)
    @given(st.integers(1, 40), st.integers(0, 2**32 - 1))
    def test_random_sequences(self, n, seed):
        seq = random_creation_sequence(n, seed, connected=False)
        g = creation_to_graph(seq)
        assert recognize_threshold(g) == seq


class TestDeleteVertex:
    def test_first_block(self):
        hat = delete_vertex_block_form(BlockForm((2, 6)), 1)
        assert hat.blocks == (1, 6) and hat.canonical() == (7,)

    def test_no_normalization(self):
        assert delete_vertex_block_form(BlockForm((2, 6, 4, 4)), 3).blocks == (2, 6, 3, 4)

    def test_empty_block_merges(self):
        hat = delete_vertex_block_form(BlockForm((2, 2, 1, 2)), 3)
        assert hat.blocks == (2, 4)
        g = block_form_to_graph(BlockForm((2, 2, 1, 2)))
        assert degree_sequence(block_form_to_graph(hat)) == degree_sequence(remove_vertex(g, 5))

    def test_disconnects(self):
        with pytest.raises(DisconnectedError, match="disconnects"):
            delete_vertex_block_form(BlockForm((2, 1)), 2)

    def test_out_of_range(self):
        with pytest.raises(ValueError):
            delete_vertex_block_form(BlockForm((2, 2)), 3)

    def test_matches_graph_deletion(self):
        # brute force: remove one vertex of each block from the explicit graph
        for form in enumerate_block_forms(9, min_n=3):
            g = block_form_to_graph(form)
            for l, sl in enumerate(form.block_slices(), start=1):
                reduced = remove_vertex(g, sl.start + 1)
                try:
                    hat = delete_vertex_block_form(form, l)
                except DisconnectedError:
                    assert recognize_threshold(reduced).word[-1] == 0
                    continue
                assert degree_sequence(block_form_to_graph(hat)) == degree_sequence(reduced)
