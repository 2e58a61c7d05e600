"""Homogeneous sets, primality, and the WED reduction to the characteristic graph.

For a graph G whose complement is also connected, the maximal homogeneous
sets (modules) are pairwise disjoint.  Contracting each of them to one
representative gives the prime characteristic graph G*.  An efficient
dominating set meets a module in at most one vertex, and that vertex must
be universal for the module, so the representative gets the minimum
weight of a universal module vertex (INF when there is none).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional

from .graph import (
    INF,
    Graph,
    WeightedGraph,
    bits,
    component_masks,
    induced,
    members,
)

__all__ = [
    "ModularPartition",
    "CharacteristicReduction",
    "maximal_homogeneous_sets",
    "is_prime",
    "is_homogeneous",
    "wed_reduce",
    "lift",
]


@dataclass(frozen=True)
class ModularPartition:
    modules: tuple[frozenset[int], ...]
    singletons: frozenset[int]


def is_homogeneous(G: Graph, H: Iterable[int]) -> bool:
    """True iff ``H`` (|H| >= 2, H != V) is seen all-or-nothing from outside."""
    hmask = bits(H)
    if hmask.bit_count() < 2 or hmask == G.full_mask:
        return False
    for x in members(G.full_mask & ~hmask):
        seen = G.masks[x] & hmask
        if seen and seen != hmask:
            return False
    return True


def _closure(G: Graph, seed: int) -> int:
    """Smallest module containing ``seed`` (may be all of V)."""
    full = G.full_mask
    masks = G.masks
    inside = 0
    sees_all = full
    sees_none = full
    add = seed
    while add:
        inside |= add
        for y in members(add):
            sees_all &= masks[y]
            sees_none &= ~masks[y]
        if inside == full:
            return full
        add = full & ~inside & ~sees_all & ~sees_none
    return inside


def _partition_excluding(G: Graph, u: int) -> list[int]:
    """Maximal modules of G not containing ``u`` (as bitmasks)."""
    masks = G.masks
    rest = G.full_mask & ~(1 << u)
    classes = [c for c in (rest & masks[u], rest & ~masks[u]) if c]
    pending = members(rest)
    queued = set(pending)
    while pending:
        x = pending.pop()
        queued.discard(x)
        xbit = 1 << x
        nx = masks[x]
        for i in range(len(classes)):
            Y = classes[i]
            if Y & xbit:
                continue
            a = Y & nx
            if a and a != Y:
                classes[i] = a
                classes.append(Y & ~a)
                for y in members(Y):
                    if y not in queued:
                        queued.add(y)
                        pending.append(y)
    return classes


def _check_prime_shape(G: Graph) -> None:
    if G.n == 0:
        raise ValueError("empty graph")
    if len(component_masks(G)) > 1:
        raise ValueError("graph is disconnected; split components first")
    if len(component_masks(G, complemented=True)) > 1:
        raise ValueError("complement is disconnected; apply the universal-vertex rule first")


def maximal_homogeneous_sets(G: Graph) -> ModularPartition:
    """Maximal modules of a connected graph with connected complement.

    Raises
    ------
    ValueError
        If G or its complement is disconnected (maximal modules may overlap).
    """
    _check_prime_shape(G)
    if G.n == 1:
        return ModularPartition((), frozenset({0}))
    u = 0
    classes = _partition_excluding(G, u)
    full = G.full_mask
    own = 1 << u
    others = []
    for c in classes:
        rep = c & -c
        if _closure(G, own | rep) != full:
            own |= c
        else:
            others.append(c)
    found = [m for m in [own] + others if m.bit_count() >= 2]
    modules = tuple(sorted((frozenset(members(m)) for m in found), key=min))
    covered = 0
    for m in found:
        covered |= m
    return ModularPartition(modules, frozenset(members(full & ~covered)))


def is_prime(G: Graph) -> bool:
    """True iff G has no homogeneous set."""
    if G.n <= 2:
        return True
    if len(component_masks(G)) > 1 or len(component_masks(G, complemented=True)) > 1:
        return False
    return not maximal_homogeneous_sets(G).modules


@dataclass(frozen=True)
class CharacteristicReduction:
    """Result of contracting maximal modules until the graph is prime.

    Reduced vertices are real vertices of the input (``origin``), so the
    reduced graph is an induced subgraph of it.  ``lift_of[r]`` is the input
    vertex that enters a solution when ``r`` is chosen (None for INF).
    """

    reduced: WeightedGraph
    origin: tuple[int, ...]
    lift_of: tuple[Optional[int], ...]
    members: tuple[frozenset[int], ...]
    rep_of: dict[frozenset[int], int]
    chosen: dict[int, int]


def wed_reduce(WG: WeightedGraph) -> CharacteristicReduction:
    """Contract maximal modules (repeatedly) into weighted representatives."""
    G = WG.graph
    _check_prime_shape(G)
    cur = WG
    origin = tuple(range(G.n))
    lift_of: tuple[Optional[int], ...] = tuple(
        v if w != INF else None for v, w in enumerate(WG.weights)
    )
    groups = tuple(frozenset({v}) for v in range(G.n))
    while True:
        part = maximal_homogeneous_sets(cur.graph)
        if not part.modules:
            break
        g = cur.graph
        keep: dict[int, tuple] = {v: (cur.weights[v], lift_of[v], groups[v]) for v in part.singletons}
        for H in part.modules:
            hmask = bits(H)
            univ = [x for x in sorted(H) if hmask & ~g.closed_masks[x] == 0 and cur.weights[x] != INF]
            if univ:
                ch = min(univ, key=lambda x: (cur.weights[x], x))
                rep, weight, target = ch, cur.weights[ch], lift_of[ch]
            else:
                rep, weight, target = min(H), INF, None
            keep[rep] = (weight, target, frozenset().union(*(groups[x] for x in H)))
        order = sorted(keep)
        sub, old_of = induced(g, order)
        cur = WeightedGraph(sub, tuple(keep[v][0] for v in old_of))
        origin = tuple(origin[v] for v in old_of)
        lift_of = tuple(keep[v][1] for v in old_of)
        groups = tuple(keep[v][2] for v in old_of)
    rep_of = {grp: r for r, grp in enumerate(groups) if len(grp) > 1}
    chosen = {r: lift_of[r] for r in rep_of.values() if lift_of[r] is not None}
    return CharacteristicReduction(cur, origin, lift_of, groups, rep_of, chosen)


def lift(Dstar: Iterable[int], red: CharacteristicReduction) -> frozenset[int]:
    """Map a finite-weight e.d. of the reduced graph back to the input graph.

    Raises
    ------
    ValueError
        If ``Dstar`` uses a representative of infinite weight.
    """
    out = set()
    for r in Dstar:
        target = red.lift_of[r]
        if target is None or red.reduced.weights[r] == INF:
            raise ValueError(f"reduced vertex {r} has infinite weight and cannot be lifted")
        out.add(target)
    return frozenset(out)
