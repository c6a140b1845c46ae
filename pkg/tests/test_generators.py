import random
from collections import Counter

import pytest

from rainbowcolor.decompose import block_decomposition
from rainbowcolor.exceptions import ParameterError
from rainbowcolor.generators import (
    Figure1Params,
    block_chain,
    figure1_graph,
    figure2_graph,
    random_block_chain,
    random_two_connected,
)
from rainbowcolor.graph import cut_vertices_and_bridges, diameter, structure_class

from conftest import BOWTIE, cycle, path_graph


def valid_figure1_params(max_n):
    for n in range(3, max_n + 1):
        for q in range(2, n):
            for r in range(q):
                p = Figure1Params(q, r, n)
                if (n + r) % 2 and p.big_cycle >= 3:
                    yield p


class TestBlockChain:
    def test_paw(self):
        g = block_chain(["k2", "cycle(3)"])
        d = block_decomposition(g)
        assert (d.q, d.r, g.n, g.m) == (2, 1, 4, 4)

    def test_bowtie(self):
        g = block_chain(["cycle(3)", "cycle(3)"])
        d = block_decomposition(g)
        assert (d.q, d.r) == (2, 0) and g.m == BOWTIE.m

    def test_path(self):
        g = block_chain(["k2", "k2", "k2"])
        assert g == path_graph(4)
        d = block_decomposition(g)
        assert (d.q, d.r) == (3, 3)

    @pytest.mark.parametrize("spec", ["c5", "cycle5", ("cycle", 5)])
    def test_descriptor_spellings(self, spec):
        assert block_chain([spec]) == cycle(5)

    def test_clique(self):
        assert block_chain(["clique(4)"]).m == 6 == block_chain(["k4"]).m

    @pytest.mark.parametrize("bad", ["c2", "cycle(x)", "tree", ("cycle", 1)])
    def test_bad_descriptor(self, bad):
        with pytest.raises(ParameterError):
            block_chain([bad])

    def test_empty(self):
        with pytest.raises(ParameterError):
            block_chain([])

    def test_round_trips_block_multiset(self):
        rng = random.Random(4)
        kinds = ["k2", "c3", "c4", "c5", "c6", "k4"]
        size = {"k2": (2, 1), "c3": (3, 3), "c4": (4, 4), "c5": (5, 5), "c6": (6, 6), "k4": (4, 6)}
        for _ in range(100):
            spec = [rng.choice(kinds) for _ in range(rng.randint(1, 5))]
            d = block_decomposition(block_chain(spec))
            assert Counter((b.order, len(b.edges)) for b in d.blocks) == Counter(size[s] for s in spec)


class TestFigure1:
    @pytest.mark.parametrize("q, r, n, d", [(2, 1, 4, 2), (3, 1, 8, 4), (2, 0, 7, 3), (3, 1, 10, 5)])
    def test_examples(self, q, r, n, d):
        assert diameter(figure1_graph(Figure1Params(q, r, n))) == d

    def test_blocks(self):
        d = block_decomposition(figure1_graph(Figure1Params(3, 1, 8)))
        assert sorted(b.order for b in d.blocks) == [2, 3, 5]

    def test_all_valid_params(self):
        count = 0
        for p in valid_figure1_params(15):
            g = figure1_graph(p)
            d = block_decomposition(g)
            assert (g.n, d.q, d.r) == (p.n, p.q, p.r)
            assert diameter(g) == (p.n + p.r - 1) // 2
            count += 1
        assert count > 50

    @pytest.mark.parametrize("q, r, n", [(1, 0, 5), (2, 2, 7), (2, 0, 6), (3, 0, 5)])
    def test_invalid(self, q, r, n):
        with pytest.raises(ParameterError):
            figure1_graph(Figure1Params(q, r, n))


class TestFigure2:
    def test_examples(self):
        g = figure2_graph(1, 1)
        assert (g.n, diameter(g)) == (4, 2)
        g = figure2_graph(2, 1)
        assert (g.n, diameter(g)) == (7, 4)
        g = figure2_graph(1, 3)
        assert (g.n, diameter(g)) == (6, 3)
        g = figure2_graph(2, 3)
        assert (g.n, diameter(g)) == (9, 5)

    @pytest.mark.parametrize("k", range(1, 5))
    @pytest.mark.parametrize("variant", [1, 2, 3])
    def test_order_diameter_and_no_bridges(self, k, variant):
        g = figure2_graph(k, variant)
        assert g.n == 3 * k + variant
        assert diameter(g) == 2 * k + (variant == 3)
        assert structure_class(g) in ("two-connected", "two-edge-connected-not-two-connected")
        assert not cut_vertices_and_bridges(g)[1]

    def test_invalid(self):
        with pytest.raises(ParameterError):
            figure2_graph(0, 1)
        with pytest.raises(ParameterError):
            figure2_graph(1, 4)


class TestRandom:
    def test_triangle(self):
        assert random_two_connected(3, 0, 11) == cycle(3)

    def test_examples(self):
        assert structure_class(random_two_connected(8, 2, 7)) == "two-connected"
        g = random_two_connected(5, 3, 1)
        assert g.m == 8 and structure_class(g) == "two-connected"

    def test_infeasible(self):
        with pytest.raises(ParameterError):
            random_two_connected(4, 3, 0)
        with pytest.raises(ParameterError):
            random_two_connected(2, 0, 0)

    def test_two_hundred_seeds(self):
        for seed in range(200):
            rng = random.Random(seed)
            n = rng.randint(3, 12)
            ears = rng.randint(0, min(5, n * (n - 1) // 2 - n))
            g = random_two_connected(n, ears, seed)
            assert (g.n, g.m) == (n, n + ears)
            assert structure_class(g) == "two-connected"

    def test_deterministic(self):
        assert random_two_connected(10, 4, 3) == random_two_connected(10, 4, 3)

    def test_block_chains_are_connected_with_several_blocks(self):
        rng = random.Random(0)
        for _ in range(100):
            g = random_block_chain(rng, 14)
            assert g.n <= 14
            assert structure_class(g) != "disconnected"
            assert block_decomposition(g).q >= 2
