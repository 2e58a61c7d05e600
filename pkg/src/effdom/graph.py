"""Immutable simple graphs and the neighborhood primitives used by every solver.

Vertices are dense integers ``0..n-1``.  Vertex sets are exchanged as
``frozenset`` objects; internally most routines work on integer bitmasks
(bit ``i`` set means vertex ``i`` is a member), which keeps set algebra on
desk-scale graphs fast in pure Python.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence, Union

__all__ = [
    "INF",
    "Weight",
    "Graph",
    "WeightedGraph",
    "DistanceLevels",
    "build_graph",
    "distance_levels",
    "anti_neighborhood",
    "components",
    "min_degree_vertex",
    "induced",
    "universal_in",
    "bits",
    "members",
    "total_weight",
]

#: The distinguished infinite weight.  Finite weights are non-negative ints;
#: ``int + INF`` saturates to ``INF`` and ``INF`` compares above every int.
INF = math.inf

Weight = Union[int, float]


def bits(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def members(mask: int) -> list[int]:
    """Vertices of a bitmask in increasing order."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


@dataclass(frozen=True, eq=False)
class Graph:
    """Simple undirected graph with ``n`` vertices and symmetric adjacency.

    Build instances with :func:`build_graph`; the constructor trusts its
    arguments.
    """

    n: int
    adj: tuple[frozenset[int], ...]
    m: int

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    @cached_property
    def masks(self) -> tuple[int, ...]:
        """Open neighborhoods as bitmasks."""
        return tuple(bits(a) for a in self.adj)

    @cached_property
    def closed_masks(self) -> tuple[int, ...]:
        return tuple(mask | (1 << v) for v, mask in enumerate(self.masks))

    @cached_property
    def sorted_adj(self) -> list[list[int]]:
        return [sorted(a) for a in self.adj]

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    @property
    def vertices(self) -> range:
        return range(self.n)

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in sorted(self.adj[u]) if u < v]

    def closed(self, v: int) -> frozenset[int]:
        return self.adj[v] | {v}

    def complement(self) -> Graph:
        full = set(range(self.n))
        return Graph(
            self.n,
            tuple(frozenset(full - self.adj[v] - {v}) for v in range(self.n)),
            self.n * (self.n - 1) // 2 - self.m,
        )


def build_graph(n: int, edges: Iterable[Sequence[int]]) -> Graph:
    """Build a :class:`Graph`, deduplicating repeated or reversed edges.

    Raises
    ------
    ValueError
        On a loop edge or an endpoint outside ``0..n-1``.
    """
    if n < 0:
        raise ValueError(f"vertex count must be non-negative, got {n}")
    adj: list[set[int]] = [set() for _ in range(n)]
    for edge in edges:
        u, v = edge
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
        if u == v:
            raise ValueError(f"loop edge ({u}, {v}) is not allowed")
        adj[u].add(v)
        adj[v].add(u)
    m = sum(len(a) for a in adj) // 2
    return Graph(n, tuple(frozenset(a) for a in adj), m)


def total_weight(weights: Sequence[Weight], vertices: Iterable[int]) -> Weight:
    return sum((weights[v] for v in vertices), 0)


@dataclass(frozen=True)
class WeightedGraph:
    """A graph with one extended weight per vertex (``INF`` allowed internally)."""

    graph: Graph
    weights: tuple[Weight, ...]

    def __post_init__(self) -> None:
        if len(self.weights) != self.graph.n:
            raise ValueError(
                f"expected {self.graph.n} weights, got {len(self.weights)}"
            )
        for w in self.weights:
            if w != INF and (w < 0 or w != int(w)):
                raise ValueError(f"weights must be non-negative integers or INF, got {w!r}")

    @classmethod
    def of(cls, graph: Graph, weights: Sequence[Weight] | None = None) -> WeightedGraph:
        """Attach weights (default 1 everywhere); integral floats become ints."""
        if weights is None:
            weights = [1] * graph.n
        return cls(graph, tuple(int(w) if w != INF and w == int(w) else w for w in weights))

    @property
    def n(self) -> int:
        return self.graph.n

    def weight_of(self, vertices: Iterable[int]) -> Weight:
        return total_weight(self.weights, vertices)

    @cached_property
    def finite_mask(self) -> int:
        return bits(v for v, w in enumerate(self.weights) if w != INF)


@dataclass(frozen=True)
class DistanceLevels:
    """BFS layering around ``root``.

    ``levels[0]`` is N_1, ``levels[1]`` is N_2 and so on.  ``residual`` holds
    the reachable vertices at distance three or more; vertices in other
    components are listed in ``unreachable``.
    """

    root: int
    levels: tuple[frozenset[int], ...]
    residual: frozenset[int]
    unreachable: frozenset[int]
    parent: dict[int, int] = field(repr=False, compare=False)

    def level(self, i: int) -> frozenset[int]:
        """N_i (``N_0`` is the root itself); empty beyond the last layer."""
        if i == 0:
            return frozenset({self.root})
        if i - 1 < len(self.levels):
            return self.levels[i - 1]
        return frozenset()

    @cached_property
    def distance(self) -> dict[int, int]:
        dist = {self.root: 0}
        for i, layer in enumerate(self.levels, start=1):
            for u in layer:
                dist[u] = i
        return dist

    def path_to(self, u: int) -> list[int]:
        """A shortest (hence induced) path from the root to ``u``."""
        path = [u]
        while path[-1] != self.root:
            path.append(self.parent[path[-1]])
        path.reverse()
        return path


def distance_levels(G: Graph, v: int) -> DistanceLevels:
    if not 0 <= v < G.n:
        raise ValueError(f"vertex {v} not in graph with n={G.n}")
    parent = {v: v}
    levels: list[frozenset[int]] = []
    frontier = [v]
    while frontier:
        nxt = []
        for u in frontier:
            for w in G.sorted_adj[u]:
                if w not in parent:
                    parent[w] = u
                    nxt.append(w)
        if nxt:
            levels.append(frozenset(nxt))
        frontier = nxt
    residual = frozenset().union(*levels[2:]) if len(levels) > 2 else frozenset()
    unreachable = frozenset(u for u in range(G.n) if u not in parent)
    return DistanceLevels(v, tuple(levels), residual, unreachable, parent)


def anti_neighborhood(G: Graph, U: Iterable[int]) -> frozenset[int]:
    """A(U): vertices outside ``U`` with no neighbor in ``U``; ``A(∅) = V``."""
    U = set(U)
    if not U:
        return frozenset(range(G.n))
    hit = 0
    for u in U:
        hit |= G.closed_masks[u]
    return frozenset(members(G.full_mask & ~hit))


def _component_masks(G: Graph, within: int, complemented: bool) -> list[int]:
    masks = G.masks
    unvisited = within
    found = []
    while unvisited:
        start = unvisited & -unvisited
        unvisited ^= start
        comp = start
        stack = [start.bit_length() - 1]
        while stack:
            u = stack.pop()
            if complemented:
                # refine the unvisited pool by non-neighbors of u
                reach = unvisited & ~masks[u]
            else:
                reach = unvisited & masks[u]
            if reach:
                unvisited &= ~reach
                comp |= reach
                stack.extend(members(reach))
        found.append(comp)
    return found


def components(G: Graph, complemented: bool = False) -> list[frozenset[int]]:
    """Connected components of ``G`` or of its complement, ordered by least vertex.

    The complement is never materialized.
    """
    return [frozenset(members(c)) for c in _component_masks(G, G.full_mask, complemented)]


def component_masks(G: Graph, within: int | None = None, complemented: bool = False) -> list[int]:
    """Bitmask variant of :func:`components`, optionally restricted to ``within``."""
    return _component_masks(G, G.full_mask if within is None else within, complemented)


def min_degree_vertex(G: Graph) -> tuple[int, int]:
    if G.n == 0:
        raise ValueError("empty graph has no vertices")
    best = min(range(G.n), key=lambda v: (len(G.adj[v]), v))
    return best, len(G.adj[best])


def induced(G: Graph, S: Iterable[int]) -> tuple[Graph, tuple[int, ...]]:
    """G[S] with vertices renumbered by increasing old index.

    Returns the subgraph and ``old_of``, where ``old_of[new] = old``.
    """
    old_of = tuple(sorted(set(S)))
    new_of = {old: new for new, old in enumerate(old_of)}
    adj = tuple(
        frozenset(new_of[w] for w in G.adj[old] if w in new_of) for old in old_of
    )
    return Graph(len(old_of), adj, sum(len(a) for a in adj) // 2), old_of


def induced_weighted(WG: WeightedGraph, S: Iterable[int]) -> tuple[WeightedGraph, tuple[int, ...]]:
    sub, old_of = induced(WG.graph, S)
    return WeightedGraph(sub, tuple(WG.weights[v] for v in old_of)), old_of


def universal_in(G: Graph, S: Iterable[int]) -> frozenset[int]:
    """Vertices of ``S`` adjacent to every other vertex of ``S``."""
    S = frozenset(S)
    smask = bits(S)
    return frozenset(u for u in S if smask & ~G.closed_masks[u] == 0)


def universal_mask(G: Graph, smask: int) -> int:
    out = 0
    for u in members(smask):
        if smask & ~G.closed_masks[u] == 0:
            out |= 1 << u
    return out
