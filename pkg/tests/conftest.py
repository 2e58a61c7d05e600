from __future__ import annotations

import itertools
import random

import pytest

from effdom.graph import INF, WeightedGraph, build_graph, component_masks
from effdom.patterns import ClassId, in_class_bruteforce


def path(n):
    return build_graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n):
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n):
    return build_graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def unit(G):
    return WeightedGraph.of(G)


def brute_wed(WG):
    """Minimum-weight e.d. by trying every vertex subset (small n only).

    Returns (weight, sorted vertex list) or None.
    """
    G = WG.graph
    n = G.n
    closed = [G.closed(v) for v in range(n)]
    best = None
    finite = [v for v in range(n) if WG.weights[v] != INF]
    for r in range(len(finite) + 1):
        for S in itertools.combinations(finite, r):
            count = [0] * n
            ok = True
            for s in S:
                for u in closed[s]:
                    count[u] += 1
                    if count[u] > 1:
                        ok = False
                        break
                if not ok:
                    break
            if ok and all(c == 1 for c in count):
                cand = (sum(WG.weights[s] for s in S), sorted(S))
                if best is None or cand < best:
                    best = cand
    return best


def substitute(outer, parts):
    """Replace vertex i of ``outer`` by graph ``parts[i]``, joining fully along outer edges."""
    offsets, total = [], 0
    for P in parts:
        offsets.append(total)
        total += P.n
    edges = []
    for i, P in enumerate(parts):
        edges += [(offsets[i] + u, offsets[i] + v) for u, v in P.edges()]
    for i, j in outer.edges():
        for u in range(parts[i].n):
            for v in range(parts[j].n):
                edges.append((offsets[i] + u, offsets[j] + v))
    return build_graph(total, edges)


def random_small(rng):
    n = rng.randint(1, 4)
    return build_graph(n, [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < 0.5])


def connected_coconnected(G):
    return len(component_masks(G)) == 1 and len(component_masks(G, complemented=True)) == 1


def grow_in_class(cls: ClassId, n: int, rng: random.Random, p: float, planted: int = 0, tries: int = 20):
    """Random graph in ``cls``, grown one vertex at a time.

    With ``planted`` > 0 the first ``planted`` vertices stay independent and
    every later vertex joins exactly one of them, so they form an e.d. of
    the result.
    """
    edges: list = []
    m = max(1, planted)
    while m < n:
        for _ in range(tries):
            nb = [u for u in range(planted, m) if rng.random() < p]
            if planted:
                nb.append(rng.randrange(planted))
            elif not nb:
                nb = [rng.randrange(m)]
            G = build_graph(m + 1, edges + [(u, m) for u in nb])
            if in_class_bruteforce(G, cls):
                edges += [(u, m) for u in nb]
                m += 1
                break
        else:
            break
    return build_graph(m, edges)


def in_class_sample(cls: ClassId, count: int, seed: int, n_range=(4, 13), max_weight: int = 6):
    """``count`` connected co-connected weighted graphs certified in ``cls``."""
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        n = rng.randint(*n_range)
        if rng.random() < 0.5:
            G = grow_in_class(cls, n, rng, rng.choice([0.15, 0.3, 0.5]),
                              planted=rng.randint(2, max(2, n // 3)))
        else:
            G = grow_in_class(cls, n, rng, rng.choice([0.15, 0.3, 0.5, 0.7]))
        if G.n < n_range[0] or not connected_coconnected(G):
            continue
        assert in_class_bruteforce(G, cls)
        out.append(WeightedGraph.of(G, [rng.randint(1, max_weight) for _ in range(G.n)]))
    return out


@pytest.fixture
def rng():
    return random.Random(12345)


def pytest_terminal_summary(terminalreporter):
    import sys
    mod = sys.modules.get("test_acceptance")
    results = getattr(mod, "RESULTS", None)
    if results:
        terminalreporter.section("acceptance criteria")
        for number in sorted(results):
            terminalreporter.write_line(results[number])
