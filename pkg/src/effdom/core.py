"""Efficient domination framework: outcomes, verification, oracles, G_v, driver.

Every ``Solved`` produced here has been checked with :func:`verify_ed` on
the graph it was computed for.
"""

from __future__ import annotations

import logging
import random
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Callable, Iterable, Optional, Sequence, Union

from . import kernels
from .graph import (
    INF,
    DistanceLevels,
    Graph,
    WeightedGraph,
    bits,
    build_graph,
    component_masks,
    distance_levels,
    induced_weighted,
    members,
    min_degree_vertex,
)
from .modular import lift, wed_reduce
from .patterns import Embedding, find_induced_linear_forest

__all__ = [
    "Solved",
    "NoFiniteED",
    "NotInClass",
    "EdOutcome",
    "SolverInvariantError",
    "CandidateProblem",
    "verify_ed",
    "domination_counts",
    "solved",
    "exact_wed",
    "maximal_independent_sets",
    "mis_wed",
    "build_gv",
    "driver",
    "preprocess",
    "plant_instance",
    "plant_p4p2_instance",
    "random_graph",
    "best_of",
]

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class Solved:
    D: frozenset[int]
    total: int

    status = "solved"


@dataclass(frozen=True)
class NoFiniteED:
    status = "no_ed"


@dataclass(frozen=True)
class NotInClass:
    reason: str
    witness: Optional[Embedding] = None

    status = "not_in_class"

    def lifted(self, old_of: Sequence[int]) -> NotInClass:
        if self.witness is None:
            return self
        return NotInClass(self.reason, self.witness.lift(old_of))


EdOutcome = Union[Solved, NoFiniteED, NotInClass]


class SolverInvariantError(RuntimeError):
    """A solver produced a set that is not an efficient dominating set."""


def domination_counts(G: Graph, D: Iterable[int]) -> list[int]:
    """``|N[u] ∩ D|`` for every vertex u."""
    counts = [0] * G.n
    for d in set(D):
        counts[d] += 1
        for u in G.adj[d]:
            counts[u] += 1
    return counts


def verify_ed(G: Graph, D: Iterable[int]) -> bool:
    """True iff every vertex is dominated by exactly one member of ``D``."""
    return all(c == 1 for c in domination_counts(G, D))


def solved(WG: WeightedGraph, D: Iterable[int]) -> Solved:
    """Build a verified ``Solved`` for ``WG``."""
    D = frozenset(D)
    if not verify_ed(WG.graph, D):
        raise SolverInvariantError(f"{sorted(D)} is not an efficient dominating set")
    total = WG.weight_of(D)
    if total == INF:
        raise SolverInvariantError(f"{sorted(D)} has infinite weight")
    return Solved(D, int(total))


def _key(out: Solved) -> tuple:
    return out.total, sorted(out.D)


def best_of(outcomes: Iterable[EdOutcome]) -> Optional[Solved]:
    """Minimum-weight ``Solved``; ties go to the lexicographically smallest set."""
    best = None
    for out in outcomes:
        if isinstance(out, Solved) and (best is None or _key(out) < _key(best)):
            best = out
    return best


def _kernel_weights(WG: WeightedGraph) -> list[int]:
    return [-1 if w == INF else int(w) for w in WG.weights]


def exact_wed(WG: WeightedGraph) -> Union[Solved, NoFiniteED]:
    """Exact minimum-weight e.d. by branch and bound (exponential worst case).

    Branches on an undominated vertex with the fewest admissible dominators
    and tries each of them.  Among optimal sets the lexicographically
    smallest is returned.
    """
    found = kernels.exact_search(WG.n, WG.graph.sorted_adj, _kernel_weights(WG))
    if found is None:
        return NoFiniteED()
    return solved(WG, found[1])


def maximal_independent_sets(G: Graph):
    """Yield every maximal independent set (as a bitmask) with polynomial delay.

    Vertices are added one at a time; each maximal independent set of
    G[0..i] has a unique parent among those of G[0..i-1], and every node of
    that tree has a child, so the walk never dead-ends.
    """
    n = G.n
    masks = G.masks
    if n == 0:
        yield 0
        return
    stack = [(0, 0)]
    while stack:
        i, S = stack.pop()
        if i == n:
            yield S
            continue
        vbit = 1 << i
        prefix = vbit - 1
        nv = masks[i] & prefix
        if S & nv == 0:
            stack.append((i + 1, S | vbit))
            continue
        T = (S & ~nv) | vbit
        children = [(i + 1, S)]
        if _is_maximal(masks, T, prefix | vbit) and _greedy_complete(masks, T & ~vbit, i) == S:
            children.append((i + 1, T))
        stack.extend(reversed(children))


def _is_maximal(masks: Sequence[int], T: int, universe: int) -> bool:
    covered = T
    for t in members(T):
        covered |= masks[t]
    return universe & ~covered == 0


def _greedy_complete(masks: Sequence[int], X: int, i: int) -> int:
    for y in range(i):
        ybit = 1 << y
        if not X & ybit and masks[y] & X == 0:
            X |= ybit
    return X


def mis_wed(WG: WeightedGraph, k: int, cap: Optional[int] = None) -> EdOutcome:
    """WED via maximal independent sets, for kP2-free inputs.

    Every e.d. is a maximal independent set, and kP2-free graphs have
    polynomially many of those.  Enumeration stops with ``NotInClass`` once
    more than ``cap`` (default ``n**(2k)``) sets have been seen.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    G = WG.graph
    n = G.n
    if cap is None:
        cap = max(1, n ** (2 * k))
    closed = G.closed_masks
    full = G.full_mask
    best = None
    count = 0
    for S in maximal_independent_sets(G):
        count += 1
        if count > cap:
            witness = find_induced_linear_forest(G, [2] * k)
            return NotInClass(
                f"more than {cap} maximal independent sets; not {k}P2-free", witness
            )
        covered = 0
        size = 0
        ok = True
        for s in members(S):
            if WG.weights[s] == INF:
                ok = False
                break
            covered |= closed[s]
            size += closed[s].bit_count()
        if not ok or covered != full or size != n:
            continue
        cand = (WG.weight_of(members(S)), members(S))
        if best is None or cand < best:
            best = cand
    if best is None:
        return NoFiniteED()
    return solved(WG, best[1])


@dataclass(frozen=True)
class CandidateProblem:
    """G_v: the subgraph on N_2 ∪ R with N_2 forced to infinite weight.

    ``old_of`` maps subproblem vertices to host vertices and ``layer`` gives
    each one's host distance from ``root`` (2 for N_2, 3 for N_3, ...).
    """

    root: int
    host: WeightedGraph
    levels: DistanceLevels
    sub: WeightedGraph
    old_of: tuple[int, ...]
    layer: tuple[int, ...]

    @property
    def n(self) -> int:
        return self.sub.n

    def layer_mask(self, i: int) -> int:
        return bits(v for v, d in enumerate(self.layer) if d == i)

    def beyond_mask(self, i: int) -> int:
        return bits(v for v, d in enumerate(self.layer) if d > i)

    def restrict(self, vertices: Iterable[int], weights: Optional[Sequence] = None) -> tuple[CandidateProblem, tuple[int, ...]]:
        """Sub-problem on ``vertices`` (optionally reweighted); returns it with its index map."""
        sub, idx = induced_weighted(self.sub, vertices)
        if weights is not None:
            sub = WeightedGraph(sub.graph, tuple(weights[v] for v in idx))
        return (
            CandidateProblem(
                self.root,
                self.host,
                self.levels,
                sub,
                tuple(self.old_of[v] for v in idx),
                tuple(self.layer[v] for v in idx),
            ),
            idx,
        )


def build_gv(WG: WeightedGraph, v: int) -> CandidateProblem:
    levels = distance_levels(WG.graph, v)
    dist = levels.distance
    keep = sorted(u for u, d in dist.items() if d >= 2)
    sub, old_of = induced_weighted(WG, keep)
    layer = tuple(dist[u] for u in old_of)
    weights = tuple(INF if d == 2 else w for d, w in zip(layer, sub.weights))
    return CandidateProblem(v, WG, levels, WeightedGraph(sub.graph, weights), old_of, layer)


Subsolver = Callable[[CandidateProblem], EdOutcome]


def driver(WG: WeightedGraph, subsolver: Subsolver, workers: Optional[int] = None) -> EdOutcome:
    """Solve WED by trying each vertex of N[v] for a minimum-degree v.

    ``subsolver`` returns an outcome for ``p.sub``: ``Solved`` sets are in
    subproblem coordinates, ``NotInClass`` witnesses in host coordinates.
    A witness-backed ``NotInClass`` is definitive and returned as is.
    """
    G = WG.graph
    if G.n == 0:
        return Solved(frozenset(), 0)
    v, _ = min_degree_vertex(G)
    cands = [x for x in sorted(G.closed(v)) if WG.weights[x] != INF]

    def run(x: int) -> EdOutcome:
        p = build_gv(WG, x)
        out = subsolver(p)
        if isinstance(out, Solved):
            return solved(WG, {x} | {p.old_of[d] for d in out.D})
        return out

    if workers and workers > 1 and len(cands) > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(run, cands))
    else:
        results = [run(x) for x in cands]

    for out in results:
        if isinstance(out, NotInClass) and out.witness is not None:
            return out
    best = best_of(results)
    if best is not None:
        return best
    refusals = [out for out in results if isinstance(out, NotInClass)]
    if refusals:
        return refusals[0]
    return NoFiniteED()


ClassSolver = Callable[[WeightedGraph], EdOutcome]


def preprocess(WG: WeightedGraph, class_solver: ClassSolver) -> EdOutcome:
    """Components, the universal-vertex rule, modular reduction, then ``class_solver``.

    ``class_solver`` only ever sees prime, connected, co-connected graphs
    that are induced subgraphs of ``WG``; its witnesses and solutions are
    mapped back to ``WG``'s vertices.
    """
    G = WG.graph
    n = G.n
    if n == 0:
        return Solved(frozenset(), 0)
    comps = component_masks(G)
    if len(comps) > 1:
        D: set[int] = set()
        refusal = None
        for c in comps:
            sub, old_of = induced_weighted(WG, members(c))
            out = preprocess(sub, class_solver)
            if isinstance(out, NoFiniteED):
                return out
            if isinstance(out, NotInClass):
                refusal = refusal or out.lifted(old_of)
                continue
            D.update(old_of[d] for d in out.D)
        if refusal is not None:
            return refusal
        return solved(WG, D)
    if n == 1:
        return solved(WG, {0}) if WG.weights[0] != INF else NoFiniteED()
    if len(component_masks(G, complemented=True)) > 1:
        universal = [u for u in range(n) if len(G.adj[u]) == n - 1 and WG.weights[u] != INF]
        if not universal:
            return NoFiniteED()
        return solved(WG, {min(universal, key=lambda u: (WG.weights[u], u))})
    red = wed_reduce(WG)
    out = class_solver(red.reduced)
    if isinstance(out, Solved):
        return solved(WG, lift(out.D, red))
    if isinstance(out, NotInClass):
        return out.lifted(red.origin)
    return out


def random_graph(n: int, p: float, seed=None, max_weight: int = 1) -> WeightedGraph:
    """G(n, p) with uniform weights in ``1..max_weight``."""
    rng = seed if isinstance(seed, random.Random) else random.Random(seed)
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    G = build_graph(n, edges)
    return WeightedGraph.of(G, [rng.randint(1, max_weight) for _ in range(n)])


def plant_instance(
    n: int, d: int, density: float, seed=None, max_weight: int = 10
) -> tuple[WeightedGraph, frozenset[int]]:
    """Random weighted graph with a planted efficient dominating set of size ``d``.

    Non-planted vertices are dealt round-robin into ``d`` cells, each joined
    to its planted vertex; extra random edges only join non-planted
    vertices, so the planted set stays efficient.
    """
    if d < 1 or n < d:
        raise ValueError(f"need 1 <= d <= n, got n={n}, d={d}")
    if not 0.0 <= density <= 1.0:
        raise ValueError(f"density must lie in [0, 1], got {density}")
    rng = random.Random(seed)
    planted = sorted(rng.sample(range(n), d))
    rest = [v for v in range(n) if v not in set(planted)]
    rng.shuffle(rest)
    edges = [(planted[i % d], x) for i, x in enumerate(rest)]
    rest.sort()
    for i, x in enumerate(rest):
        for y in rest[i + 1:]:
            if rng.random() < density:
                edges.append((x, y))
    G = build_graph(n, edges)
    weights = [rng.randint(1, max_weight) for _ in range(n)]
    return WeightedGraph.of(G, weights), frozenset(planted)


def plant_p4p2_instance(
    cliques: int, clique_size: int, links: int, seed=None, max_weight: int = 10
) -> tuple[WeightedGraph, frozenset[int]]:
    """(P4+P2)-free weighted graph with a planted efficient dominating set.

    Vertex 0 is a root whose only neighbor is vertex 1; vertex 1 sees all
    ``links`` link vertices.  The rest is ``cliques`` cliques, each with a
    designated dominator (its first vertex).  Link ``x`` belongs to clique
    ``x mod cliques``: it sees that clique's dominator and all of its other
    vertices but at most one, and every non-dominator of the other cliques.
    The planted set is the root plus the dominators.
    """
    if cliques < 1 or clique_size < 1 or links < 0:
        raise ValueError("need cliques >= 1, clique_size >= 1, links >= 0")
    rng = random.Random(seed)
    groups = [list(range(2 + j * clique_size, 2 + (j + 1) * clique_size)) for j in range(cliques)]
    first_link = 2 + cliques * clique_size
    n = first_link + links
    edges = [(0, 1)]
    for C in groups:
        edges.extend((C[i], C[k]) for i in range(len(C)) for k in range(i + 1, len(C)))
    for idx in range(links):
        x = first_link + idx
        own = idx % cliques
        edges.append((1, x))
        edges.append((x, groups[own][0]))
        miss = rng.choice(groups[own][1:] + [None])
        edges.extend((x, y) for y in groups[own][1:] if y != miss)
        for j, C in enumerate(groups):
            if j != own:
                edges.extend((x, y) for y in C[1:])
    G = build_graph(n, edges)
    weights = [rng.randint(1, max_weight) for _ in range(n)]
    return WeightedGraph.of(G, weights), frozenset([0] + [C[0] for C in groups])
