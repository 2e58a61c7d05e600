from __future__ import annotations

import itertools
import random

import pytest

from effdom.graph import build_graph, induced, components
from effdom.patterns import (
    CLAW,
    S122,
    ClassId,
    find_forbidden,
    find_induced_linear_forest,
    find_pattern,
    in_class_bruteforce,
    is_cograph,
    is_independent,
    linear_forest,
    parse_class,
    parse_pattern,
    split_neighborhood,
)

from conftest import complete, cycle, path


def is_linear_forest_of(G, sizes):
    """Oracle: G is exactly a disjoint union of paths with these vertex counts."""
    if any(len(a) > 2 for a in G.adj):
        return False
    comps = components(G)
    if G.m != G.n - len(comps):
        return False
    return sorted(len(c) for c in comps) == sorted(sizes)


def oracle_has(G, sizes):
    k = sum(sizes)
    for S in itertools.combinations(range(G.n), k):
        if is_linear_forest_of(induced(G, S)[0], sizes):
            return True
    return False


def random_graph(n, p, rng):
    return build_graph(n, [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p])


class TestLinearForest:
    def test_names(self):
        assert linear_forest((5, 2, 2)).name == "P5+2P2"
        assert linear_forest((4, 2)).name == "P4+P2"
        assert linear_forest((3, 3)).name == "2P3"

    def test_rejects_bad_spec(self):
        with pytest.raises(ValueError):
            linear_forest(())
        with pytest.raises(ValueError):
            linear_forest((3, 0))

    def test_examples(self):
        assert find_induced_linear_forest(complete(4), [3]) is None
        w = find_induced_linear_forest(cycle(5), [4])
        assert w is not None and w.verify(cycle(5))
        assert len(set(w.vertices)) == 4
        host = build_graph(7, [(0, 1), (1, 2), (2, 3), (3, 4), (5, 6)])
        w = find_induced_linear_forest(host, [5, 2])
        assert w.vertices == (0, 1, 2, 3, 4, 5, 6)

    def test_witness_lists_paths_end_to_end(self):
        w = find_induced_linear_forest(path(6), [3, 2])
        a, b, c, d, e = w.vertices
        G = path(6)
        assert G.has_edge(a, b) and G.has_edge(b, c) and G.has_edge(d, e)

    @pytest.mark.parametrize("seed", range(4))
    def test_agrees_with_subset_enumeration(self, seed):
        rng = random.Random(seed)
        specs = [[3], [4], [5], [2, 2], [3, 2], [4, 2], [3, 3], [2, 2, 2], [5, 2], [6]]
        for _ in range(60):
            G = random_graph(rng.randint(3, 9), rng.choice([0.2, 0.35, 0.5, 0.7]), rng)
            for sizes in specs:
                w = find_induced_linear_forest(G, sizes)
                assert (w is not None) == oracle_has(G, sizes), (G.edges(), sizes)
                if w is not None:
                    assert w.verify(G)
                    assert is_linear_forest_of(induced(G, w.vertices)[0], sizes)

    def test_monotone_in_extra_path(self):
        rng = random.Random(9)
        for _ in range(150):
            G = random_graph(rng.randint(4, 10), rng.choice([0.2, 0.4]), rng)
            for base in ([4], [5], [3, 2]):
                if find_induced_linear_forest(G, base + [2]) is not None:
                    assert find_induced_linear_forest(G, base) is not None


class TestOtherPatterns:
    def test_claw(self):
        star = build_graph(4, [(0, 1), (0, 2), (0, 3)])
        assert find_pattern(star, CLAW).vertices == (0, 1, 2, 3)
        assert find_pattern(complete(4), CLAW) is None

    def test_s122(self):
        spider = build_graph(6, [(0, 1), (0, 2), (2, 3), (0, 4), (4, 5)])
        w = find_pattern(spider, S122)
        assert w is not None and w.verify(spider)
        assert find_pattern(path(6), S122) is None

    def test_embedding_rejects_wrong_vertices(self):
        w = find_induced_linear_forest(path(4), [4])
        assert not w.verify(cycle(4))


class TestHelpers:
    def test_split_neighborhood(self):
        star = build_graph(4, [(0, 1), (0, 2), (0, 3)])
        assert split_neighborhood(star, {0}) == ({1, 2, 3}, frozenset())
        assert split_neighborhood(path(6), {0, 1, 2, 3, 4}) == ({5}, frozenset())
        assert split_neighborhood(path(6), {0}) == ({1}, {2, 3, 4, 5})

    def test_is_independent(self):
        assert is_independent(cycle(4), {0, 2})
        assert not is_independent(complete(2), {0, 1})
        assert is_independent(cycle(4), set())

    def test_is_cograph(self):
        ok, w = is_cograph(path(4))
        assert not ok and w.vertices == (0, 1, 2, 3)
        assert is_cograph(complete(4)) == (True, None)
        assert is_cograph(cycle(4))[0]

    def test_cograph_matches_p4_search(self):
        rng = random.Random(3)
        for _ in range(100):
            G = random_graph(rng.randint(2, 9), 0.4, rng)
            assert is_cograph(G)[0] == (find_induced_linear_forest(G, [4]) is None)


class TestClasses:
    def test_membership_examples(self):
        assert in_class_bruteforce(path(6), ClassId("p5kp2", 1))
        p4p2 = build_graph(6, [(0, 1), (1, 2), (2, 3), (4, 5)])
        assert not in_class_bruteforce(p4p2, ClassId("p4p2"))
        for name, k in [("p5kp2", 0), ("p5kp2", 2), ("p4p2", 0), ("p6s122", 0),
                        ("2p3s122", 0), ("p5", 0), ("p6", 0), ("kp2", 2)]:
            assert in_class_bruteforce(complete(3), ClassId(name, k))

    def test_forbidden_witness_verifies(self):
        rng = random.Random(4)
        for _ in range(100):
            G = random_graph(rng.randint(5, 11), 0.3, rng)
            for cls in (ClassId("p6s122"), ClassId("2p3s122"), ClassId("p5kp2", 1)):
                w = find_forbidden(G, cls)
                if w is not None:
                    assert w.verify(G) and w.pattern in cls.forbidden

    def test_parse(self):
        assert parse_class("p5kp2=2") == ClassId("p5kp2", 2)
        assert parse_class("P4P2") == ClassId("p4p2")
        assert parse_pattern("5,2,2").name == "P5+2P2"
        assert parse_pattern("P4").name == "P4"
        assert parse_pattern("claw") is CLAW
        assert parse_pattern("S122") is S122
        for bad in ("nope", "p5kp2=-1", "kp2=0"):
            with pytest.raises(ValueError):
                parse_class(bad)
        with pytest.raises(ValueError):
            parse_pattern("x,y")
