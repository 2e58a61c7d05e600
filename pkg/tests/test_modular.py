from __future__ import annotations

import itertools
import random

import pytest

from effdom.core import Solved, exact_wed, verify_ed
from effdom.graph import INF, WeightedGraph, build_graph
from effdom.modular import (
    is_homogeneous,
    is_prime,
    lift,
    maximal_homogeneous_sets,
    wed_reduce,
)

from conftest import brute_wed, complete, connected_coconnected, cycle, path, random_small, substitute

# triangle a,b,c; d pendant on c; e pendant on d (co-connected)
A, B, C, D, E = range(5)
TRI_TAIL = build_graph(5, [(A, B), (A, C), (B, C), (C, D), (D, E)])


def brute_maximal_modules(G):
    """All inclusion-maximal proper modules, by checking every subset."""
    mods = [frozenset(S) for r in range(2, G.n) for S in itertools.combinations(range(G.n), r)
            if is_homogeneous(G, S)]
    return sorted((m for m in mods if not any(m < o for o in mods)), key=min)


class TestModules:
    def test_triangle_with_tail(self):
        part = maximal_homogeneous_sets(TRI_TAIL)
        assert part.modules == (frozenset({A, B}),)
        assert part.singletons == {C, D, E}

    def test_universal_vertex_rejected(self):
        triangle_pendant = build_graph(4, [(A, B), (A, C), (B, C), (C, D)])
        with pytest.raises(ValueError):
            maximal_homogeneous_sets(triangle_pendant)
        with pytest.raises(ValueError):
            wed_reduce(WeightedGraph.of(triangle_pendant))

    def test_disconnected_rejected(self):
        with pytest.raises(ValueError):
            maximal_homogeneous_sets(build_graph(3, [(0, 1)]))

    def test_prime_examples(self):
        assert is_prime(path(4))
        assert not is_prime(path(3))
        assert is_prime(cycle(5))
        assert not is_prime(cycle(4))
        assert not is_prime(complete(3))
        gem = build_graph(5, [(0, 1), (1, 2), (2, 3)] + [(4, i) for i in range(4)])
        assert not is_prime(gem)

    def test_homogeneous(self):
        assert is_homogeneous(TRI_TAIL, {A, B})
        assert not is_homogeneous(TRI_TAIL, {A, C})
        assert not is_homogeneous(TRI_TAIL, {A})
        assert not is_homogeneous(TRI_TAIL, range(5))

    def test_matches_subset_enumeration(self):
        rng = random.Random(1)
        checked = 0
        while checked < 150:
            n = rng.randint(4, 9)
            G = build_graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)
                                if rng.random() < rng.choice([0.3, 0.5])])
            if not connected_coconnected(G):
                continue
            part = maximal_homogeneous_sets(G)
            want = brute_maximal_modules(G)
            assert list(part.modules) == want
            covered = set().union(*want) if want else set()
            assert part.singletons == set(range(n)) - covered
            assert is_prime(G) == (not want)
            checked += 1


class TestReduce:
    def test_twins_with_tail(self):
        WG = WeightedGraph.of(TRI_TAIL, [3, 1, 1, 1, 1])
        red = wed_reduce(WG)
        assert red.reduced.graph.n == 4 and red.reduced.graph.m == 3
        assert is_prime(red.reduced.graph)
        assert red.origin == (B, C, D, E)
        assert red.reduced.weights[0] == 1
        assert red.chosen == {0: B}

    def test_infinite_representative(self):
        # module {0, 2} of P4 0-1-3-2 plus a twin; the twin pair is independent,
        # so no module vertex is universal for it
        G = build_graph(5, [(0, 1), (1, 2), (1, 3), (3, 4)])
        red = wed_reduce(WeightedGraph.of(G))
        H = frozenset({0, 2})
        r = red.rep_of[H]
        assert red.reduced.weights[r] == INF and red.lift_of[r] is None
        with pytest.raises(ValueError):
            lift([r], red)

    def test_prime_is_unchanged(self):
        WG = WeightedGraph.of(path(5), [1, 2, 3, 4, 5])
        red = wed_reduce(WG)
        assert red.origin == tuple(range(5)) and red.reduced.weights == WG.weights
        assert red.rep_of == {}

    @pytest.mark.parametrize("seed", range(3))
    def test_reduction_preserves_optimum(self, seed):
        rng = random.Random(seed)
        primes = [path(4), cycle(5), path(5), build_graph(5, [(0, 1), (1, 2), (2, 3), (3, 4), (1, 3)])]
        done = 0
        while done < 110:
            outer = rng.choice(primes)
            parts = [random_small(rng) for _ in range(outer.n)]
            G = substitute(outer, parts)
            if G.n > 13 or not connected_coconnected(G):
                continue
            weights = [rng.choice([1, 2, 3, 5, INF]) if rng.random() < 0.2 else rng.randint(1, 6)
                       for _ in range(G.n)]
            WG = WeightedGraph.of(G, weights)
            red = wed_reduce(WG)
            assert is_prime(red.reduced.graph)
            want = brute_wed(WG)
            got = exact_wed(red.reduced)
            if want is None:
                assert not isinstance(got, Solved)
            else:
                assert isinstance(got, Solved) and got.total == want[0]
                D = lift(got.D, red)
                assert verify_ed(G, D)
                assert sum(WG.weights[v] for v in D) == want[0]
            done += 1
