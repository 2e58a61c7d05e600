"""Class-specific WED algorithms.

Top-level entry points (``solve_p5kp2``, ``solve_p4p2``, ``solve_p6s122``,
``solve_2p3s122``) are weakly robust: on any input they return an optimal
solution, ``NoFiniteED``, or ``NotInClass`` carrying an induced forbidden
subgraph of the input.

The per-candidate routines (``*_gv``) work on one G_v subproblem.  Steps
that are valid for every graph run unconditionally; a step that is only
valid inside the class calls :meth:`ClassContext.rely` first, which (in
robust mode) certifies membership once per solve and refuses with a
witness otherwise.  With ``robust=False`` the routines trust the class
label, as in the textbook algorithms.
"""

from __future__ import annotations

import logging
from collections import Counter
from typing import Callable, Optional, Sequence

from .core import (
    CandidateProblem,
    EdOutcome,
    NoFiniteED,
    NotInClass,
    Solved,
    best_of,
    driver,
    exact_wed,
    preprocess,
    solved,
    verify_ed,
)
from .graph import (
    INF,
    Graph,
    WeightedGraph,
    anti_neighborhood,
    bits,
    component_masks,
    distance_levels,
    induced,
    members,
    universal_mask,
)
from .modular import lift, wed_reduce
from .patterns import (
    ClassId,
    Embedding,
    Pattern,
    find_forbidden,
    find_induced_linear_forest,
    is_cograph,
    linear_forest,
    split_neighborhood,
)

__all__ = [
    "ClassContext",
    "CONTRADICTIONS",
    "enumeration_cap",
    "solve_exact",
    "solve_p5_base",
    "solve_p5kp2",
    "solve_p4p2",
    "solve_p4p2_gv",
    "solve_p6s122",
    "solve_p6s122_gv",
    "solve_2p3s122",
    "solve_2p3s122_gv",
    "p6_diam_reduce",
    "run_candidate",
    "SOLVERS",
]

log = logging.getLogger(__name__)

#: Claims that failed on a graph certified to be in the class.  Each one
#: triggers an exact fallback; a nonzero count points at a bug.
CONTRADICTIONS: Counter = Counter()

P4P2 = linear_forest((4, 2))
P6 = linear_forest((6,))


class Refusal(Exception):
    def __init__(self, outcome: NotInClass):
        super().__init__(outcome.reason)
        self.outcome = outcome


class Contradiction(Exception):
    pass


class ClassContext:
    """Membership bookkeeping for one solve on ``graph`` (the driver's graph)."""

    def __init__(self, graph: Graph, cls: ClassId, robust: bool = True, certified: bool = False):
        self.graph = graph
        self.cls = cls
        self.robust = robust
        self._known = certified
        self._witness: Optional[Embedding] = None
        self.relied: Counter = Counter()

    def witness(self) -> Optional[Embedding]:
        if not self._known:
            self._witness = find_forbidden(self.graph, self.cls)
            self._known = True
        return self._witness

    def _refuse_if_outside(self, claim: str) -> None:
        w = self.witness()
        if w is not None:
            raise Refusal(NotInClass(f"graph is not {self.cls} ({claim} needed)", w))

    def rely(self, claim: str) -> None:
        """The next step is only valid for graphs in the class."""
        self.relied[claim] += 1
        if self.robust:
            self._refuse_if_outside(claim)

    def contradiction(self, claim: str) -> None:
        """``claim`` holds for every graph of the class but fails here."""
        if not self.robust:
            raise Refusal(NotInClass(f"{claim} fails: no e.d. or not {self.cls}"))
        self._refuse_if_outside(claim)
        CONTRADICTIONS[claim] += 1
        log.warning("%s fails on a graph certified %s; using exact search", claim, self.cls)
        raise Contradiction(claim)

    def refute(self, reason: str, pattern: Pattern, host_vertices: Sequence[int]) -> None:
        """Refuse with a locally constructed witness (checked before use)."""
        emb = Embedding(pattern, tuple(host_vertices))
        if not emb.verify(self.graph):
            log.error("invalid local witness %s for %s", emb, reason)
            self._refuse_if_outside(reason)
            CONTRADICTIONS[reason] += 1
            raise Contradiction(reason)
        raise Refusal(NotInClass(f"{reason}; graph is not {self.cls}", emb))


# --------------------------------------------------------------- pipeline

Routine = Callable[[CandidateProblem, ClassContext], EdOutcome]


def _solve_piece(piece: CandidateProblem, routine: Routine, ctx: ClassContext) -> EdOutcome:
    W = piece.sub
    g = W.graph
    if W.finite_mask == 0:
        return NoFiniteED()
    if g.n == 1:
        return solved(W, {0})
    if len(component_masks(g, complemented=True)) > 1:
        universal = [u for u in range(g.n) if len(g.adj[u]) == g.n - 1 and W.weights[u] != INF]
        if not universal:
            return NoFiniteED()
        return solved(W, {min(universal, key=lambda u: (W.weights[u], u))})
    red = wed_reduce(W)
    reweight = dict(zip(red.origin, red.reduced.weights))
    prime, idx = piece.restrict(red.origin, weights=[reweight.get(v) for v in range(g.n)])
    if idx != red.origin:
        raise AssertionError("reduction must keep vertex order")
    try:
        out = routine(prime, ctx)
    except Contradiction:
        out = exact_wed(prime.sub)
    if isinstance(out, Solved):
        return solved(W, lift(out.D, red))
    return out


def run_candidate(p: CandidateProblem, routine: Routine, ctx: ClassContext) -> EdOutcome:
    """Components, universal-vertex rule and modular reduction around ``routine``."""
    try:
        sub = p.sub
        if sub.n == 0:
            return Solved(frozenset(), 0)
        D: set[int] = set()
        for comp in component_masks(sub.graph):
            piece, idx = p.restrict(members(comp))
            out = _solve_piece(piece, routine, ctx)
            if not isinstance(out, Solved):
                return out
            D.update(idx[d] for d in out.D)
        return solved(sub, D)
    except Refusal as r:
        return r.outcome


def _class_solver(WG: WeightedGraph, cls: ClassId, routine: Routine, robust: bool,
                  certified: bool, workers: Optional[int]) -> EdOutcome:
    def on_prime(H: WeightedGraph) -> EdOutcome:
        ctx = ClassContext(H.graph, cls, robust, certified)
        return driver(H, lambda p: run_candidate(p, routine, ctx), workers)

    return preprocess(WG, on_prime)


def _context_for(p: CandidateProblem, cls: ClassId, ctx: Optional[ClassContext]) -> ClassContext:
    return ctx if ctx is not None else ClassContext(p.host.graph, cls)


def _host_n1_neighbor(p: CandidateProblem, host_vertex: int) -> int:
    n1 = p.levels.level(1)
    return min(a for a in p.host.graph.adj[host_vertex] if a in n1)


def _min_weight(W: WeightedGraph, mask: int) -> Optional[int]:
    if not mask:
        return None
    return min(members(mask), key=lambda u: (W.weights[u], u))


def _finish(W: WeightedGraph, D) -> EdOutcome:
    D = set(D)
    if all(W.weights[d] != INF for d in D) and verify_ed(W.graph, D):
        return solved(W, D)
    return NoFiniteED()


def _single_dominator(W: WeightedGraph, allowed: int) -> EdOutcome:
    g = W.graph
    full = g.full_mask
    d = _min_weight(W, bits(u for u in members(allowed) if g.closed_masks[u] == full))
    return NoFiniteED() if d is None else solved(W, {d})


# ------------------------------------------------------------ exact / P5

def solve_exact(WG: WeightedGraph) -> EdOutcome:
    """Reduction pipeline with branch and bound on the prime residue."""
    return preprocess(WG, exact_wed)


def solve_p5_base(WG: WeightedGraph) -> EdOutcome:
    """Base case for P5-free inputs: modular reduction plus exact search.

    Exact for every input; no class check is made here.
    """
    return preprocess(WG, exact_wed)


# ------------------------------------------------------------ (P5+kP2)

def enumeration_cap(k: int) -> int:
    """Bound on |D ∩ (V(H) ∪ X)| used by the (P5+kP2)-free algorithm."""
    return 5 if k <= 1 else 5 + 2 * k


def _p5kp2_core(WG: WeightedGraph, k: int, cap: Optional[int]) -> EdOutcome:
    G = WG.graph
    if k == 0:
        return exact_wed(WG)
    H = find_induced_linear_forest(G, [5] + [2] * (k - 1))
    if H is None:
        return _p5kp2_core(WG, k - 1, cap)
    X, Y = split_neighborhood(G, H.vertices)
    ymask = bits(Y)
    for y in sorted(Y):
        other = G.masks[y] & ymask
        if other:
            z = (other & -other).bit_length() - 1
            witness = Embedding(linear_forest((5,) + (2,) * k), H.vertices + (y, z))
            return NotInClass(f"anti-neighborhood of {H.name} is not independent", witness)
    limit = enumeration_cap(k) if cap is None else cap
    closed = G.closed_masks
    hmask = bits(H.vertices)
    pool = [u for u in sorted(H.vertices + tuple(X)) if WG.weights[u] != INF]
    best: list = [None]

    def consider(S: list[int], covered: int) -> None:
        if hmask & ~covered:
            return  # Y cannot reach H
        D = set(S) | (anti_neighborhood(G, S) & Y)
        if any(WG.weights[d] == INF for d in D) or not verify_ed(G, D):
            return
        cand = (WG.weight_of(D), sorted(D))
        if best[0] is None or cand < best[0]:
            best[0] = cand

    def extend(start: int, S: list[int], covered: int) -> None:
        consider(S, covered)
        if len(S) == limit:
            return
        for i in range(start, len(pool)):
            u = pool[i]
            if closed[u] & covered == 0:
                S.append(u)
                extend(i + 1, S, covered | closed[u])
                S.pop()

    extend(0, [], 0)
    if best[0] is None:
        return NoFiniteED()
    return solved(WG, best[0][1])


def solve_p5kp2(WG: WeightedGraph, k: int, cap: Optional[int] = None) -> EdOutcome:
    """WED for (P5+kP2)-free graphs.

    Finds an induced P5+(k-1)P2 H (recursing on k when there is none), then
    tries every S ⊆ V(H) ∪ N(H) of at most ``enumeration_cap(k)`` vertices
    with pairwise disjoint closed neighborhoods, completing S by
    ``A(S) ∩ A(H)``.  Exact whenever A(H) is independent; otherwise the
    input contains P5+kP2 and that witness is returned.
    """
    if k < 0:
        raise ValueError("k must be >= 0")
    if k == 0:
        return solve_p5_base(WG)
    return preprocess(WG, lambda H: _p5kp2_core(H, k, cap))


# ------------------------------------------------------------ (P4+P2)

def _p4p2_routine(p: CandidateProblem, ctx: ClassContext) -> EdOutcome:
    W = p.sub
    g = W.graph
    masks = g.masks
    full = g.full_mask
    N2 = p.layer_mask(2)
    R = full & ~N2
    finite = W.finite_mask
    if R & finite == 0:
        return NoFiniteED()

    rsub, ridx = induced(g, members(R))
    ok, p4 = is_cograph(rsub)
    if not ok:
        host = [p.old_of[ridx[v]] for v in p4.vertices]
        a = min(p.levels.level(1))
        ctx.refute("G[R] contains an induced P4", P4P2, host + [p.root, a])

    comps = component_masks(g, within=R)
    U = [universal_mask(g, c) & finite for c in comps]
    if any(u == 0 for u in U):
        return NoFiniteED()
    if len(comps) == 1:
        return _single_dominator(W, U[0])

    def comp_of(v: int) -> int:
        return next(i for i, c in enumerate(comps) if c >> v & 1)

    def host_p4(x: int, r: int) -> list[int]:
        hx = p.old_of[x]
        return [p.root, _host_n1_neighbor(p, hx), hx, p.old_of[r]]

    def pair(mask: int) -> list[int]:
        a, b = members(mask)[:2]
        return [p.old_of[a], p.old_of[b]]

    uall = 0
    for u in U:
        uall |= u
    split = [z for z in members(uall) if masks[z] & N2 not in (0, N2)]
    if not split:
        # every candidate sees all of N2 or none of it
        full_to = [u & bits(z for z in members(u) if masks[z] & N2 == N2) for u in U]
        none_to = [u & bits(z for z in members(u) if masks[z] & N2 == 0) for u in U]
        results = []
        for i in range(len(U)):
            picks = [_min_weight(W, full_to[i])] + [
                _min_weight(W, none_to[j]) for j in range(len(U)) if j != i
            ]
            if None not in picks:
                results.append(_finish(W, picks))
        best = best_of(results)
        return best if best is not None else NoFiniteED()

    z = split[0]
    i = comp_of(z)
    w = min(members(masks[z] & N2))
    x = min(members(N2 & ~masks[z]))
    results = []

    # z in D: w is dominated by z, so each other component's pick misses w
    D = [z]
    for j, u in enumerate(U):
        if j == i:
            continue
        opts = u & ~masks[w]
        if opts.bit_count() >= 2:
            ctx.refute("an N2 vertex misses two vertices of another clique", P4P2,
                       host_p4(w, z) + pair(opts))
        if not opts:
            D = None
            break
        D.append(members(opts)[0])
    if D is not None:
        results.append(_finish(W, D))

    # z not in D: x must be dominated by the pick of z's own component
    others_adj_x = 0
    for j, u in enumerate(U):
        if j != i:
            others_adj_x |= u & masks[x]
    own_missing_x = U[i] & ~masks[x] & ~(1 << z)
    if own_missing_x and others_adj_x:
        d = members(others_adj_x)[0]
        dd = members(own_missing_x)[0]
        ctx.refute("x is dominated outside z's component", P4P2,
                   host_p4(x, d) + [p.old_of[z], p.old_of[dd]])
    own_adj_x = U[i] & masks[x]
    if own_adj_x:
        r = members(own_adj_x)[0]
        D = []
        for j, u in enumerate(U):
            if j == i:
                continue
            opts = u & ~masks[x]
            if opts.bit_count() >= 2:
                ctx.refute("an N2 vertex misses two vertices of another clique", P4P2,
                           host_p4(x, r) + pair(opts))
            if not opts:
                D = None
                break
            D.append(members(opts)[0])
        if D is not None:
            covered = 0
            for d in D:
                covered |= masks[d] & N2
            target = N2 & ~covered
            fits = bits(d for d in members(own_adj_x) if masks[d] & N2 == target)
            d = _min_weight(W, fits)
            if d is not None:
                results.append(_finish(W, D + [d]))

    best = best_of(results)
    return best if best is not None else NoFiniteED()


def solve_p4p2_gv(p: CandidateProblem, ctx: Optional[ClassContext] = None) -> EdOutcome:
    """(P4+P2)-free routine on one subproblem (intended for prime G_v).

    Returns the optimum for ``p.sub`` (subproblem coordinates), ``NoFiniteED``,
    or ``NotInClass`` with a host witness.
    """
    ctx = _context_for(p, ClassId("p4p2"), ctx)
    try:
        return _p4p2_routine(p, ctx)
    except Refusal as r:
        return r.outcome
    except Contradiction:
        return exact_wed(p.sub)


def solve_p4p2(WG: WeightedGraph, robust: bool = True, certified: bool = False,
               workers: Optional[int] = None) -> EdOutcome:
    """WED for (P4+P2)-free graphs via the minimum-degree driver."""
    return _class_solver(WG, ClassId("p4p2"), _p4p2_routine, robust, certified, workers)


# ------------------------------------------------------------ (P6,S122)

def _p6_path_witness(p_levels, host_vertex: int) -> list[int]:
    return p_levels.path_to(host_vertex)[:6]


def _p6s122_routine(p: CandidateProblem, ctx: ClassContext) -> EdOutcome:
    W = p.sub
    g = W.graph
    masks = g.masks
    N2, N3, N4 = p.layer_mask(2), p.layer_mask(3), p.layer_mask(4)
    deep = p.beyond_mask(4)
    if deep:
        u = p.old_of[members(deep)[0]]
        ctx.refute("vertex at distance 5 from the root", P6, _p6_path_witness(p.levels, u))
    if any(masks[u] & N4 for u in members(N4)):
        ctx.contradiction("N4 is independent")
    finite = W.finite_mask
    if finite & N4:
        ctx.rely("no e.d. vertex in N4")
    comps = component_masks(g, within=N3)
    if not comps:
        return NoFiniteED()
    U = []
    for Q in comps:
        univ = universal_mask(g, Q) & finite
        if Q & finite & ~univ:
            ctx.rely("one e.d. vertex per N3 component")
        if not univ:
            return NoFiniteED()
        U.append(univ)
    if len(U) == 1:
        return _single_dominator(W, U[0])
    if N4:
        for i, u in enumerate(U):
            keep = bits(d for d in members(u) if masks[d] & N4 in (0, N4))
            if keep != u:
                ctx.rely("e.d. vertices in N3 see all or none of N4")
            if not keep:
                return NoFiniteED()
            U[i] = keep
    # true twins inside a clique of candidates: keep the cheapest
    sig_mask = N2 | N4
    for i, u in enumerate(U):
        best: dict[int, int] = {}
        for d in members(u):
            s = masks[d] & sig_mask
            if s not in best or (W.weights[d], d) < (W.weights[best[s]], best[s]):
                best[s] = d
        U[i] = bits(best.values())
    multi = [i for i, u in enumerate(U) if u.bit_count() > 1]
    if len(multi) > 1:
        ctx.contradiction("at most one N3 component has several candidates")
    D = [members(u)[0] for u in U if u.bit_count() == 1]
    if multi:
        covered = 0
        for d in D:
            covered |= g.closed_masks[d]
        need = (N2 | N4) & ~covered
        fits = bits(d for d in members(U[multi[0]]) if masks[d] & (N2 | N4) == need)
        d = _min_weight(W, fits)
        if d is None:
            return NoFiniteED()
        D.append(d)
    return _finish(W, D)


def solve_p6s122_gv(p: CandidateProblem, ctx: Optional[ClassContext] = None) -> EdOutcome:
    """(P6,S122)-free routine on one subproblem with N2/N3/N4 layers."""
    ctx = _context_for(p, ClassId("p6s122"), ctx)
    try:
        return _p6s122_routine(p, ctx)
    except Refusal as r:
        return r.outcome
    except Contradiction:
        return exact_wed(p.sub)


def solve_p6s122(WG: WeightedGraph, robust: bool = True, certified: bool = False,
                 workers: Optional[int] = None) -> EdOutcome:
    """WED for (P6,S122)-free graphs via the minimum-degree driver."""
    return _class_solver(WG, ClassId("p6s122"), _p6s122_routine, robust, certified, workers)


def p6_diam_reduce(WG: WeightedGraph, v: Optional[int] = None) -> Optional[EdOutcome]:
    """Check e.d.s of the form {v, x} ∪ (A(x) ∩ N4) for x in N3.

    Only roots with a nonempty fourth distance level take part (all roots
    when ``v`` is None).  Returns None when no such root exists, otherwise
    the best verified candidate or ``NoFiniteED``; a vertex at distance 5
    yields ``NotInClass`` with an induced P6.
    """
    G = WG.graph
    roots = range(G.n) if v is None else [v]
    results = []
    any_n4 = False
    for r in roots:
        lv = distance_levels(G, r)
        n5 = lv.level(5)
        if n5:
            return NotInClass("vertex at distance 5; graph is not P6-free",
                              Embedding(P6, tuple(lv.path_to(min(n5))[:6])))
        n4 = lv.level(4)
        if not n4:
            continue
        any_n4 = True
        for x in sorted(lv.level(3)):
            D = {r, x} | (n4 - G.closed(x))
            if all(WG.weights[d] != INF for d in D) and verify_ed(G, D):
                results.append(solved(WG, D))
    if not any_n4:
        return None
    best = best_of(results)
    return best if best is not None else NoFiniteED()


# ------------------------------------------------------------ (2P3,S122)

def _2p3s122_routine(p: CandidateProblem, ctx: ClassContext) -> EdOutcome:
    """Minimum over three shapes of an e.d. of G_v, split by how many of
    its vertices have a neighbor in N2 (call that number t):

    * t = 1: one vertex d1 sees all of N2; R minus N[d1] then splits into
      cliques, each contributing its cheapest vertex missing N(d1);
    * t = 2: the e.d. has exactly two vertices (pair search);
    * t >= 3: G[R] is a disjoint union of at least three cliques and every
      clique's e.d. vertex is forced.
    """
    W = p.sub
    g = W.graph
    masks = g.masks
    closed = g.closed_masks
    full = g.full_mask
    N2 = p.layer_mask(2)
    R = full & ~N2
    finite = W.finite_mask
    if R & finite == 0:
        return NoFiniteED()
    results: list[EdOutcome] = []
    cand = members(R & finite)

    # at most two vertices
    for d in cand:
        if closed[d] == full:
            results.append(solved(W, {d}))
    for a_i, a in enumerate(cand):
        for b in cand[a_i + 1:]:
            if closed[a] & closed[b] == 0 and closed[a] | closed[b] == full:
                results.append(solved(W, {a, b}))

    # a single vertex dominates all of N2
    for d1 in cand:
        if N2 & ~masks[d1]:
            continue
        rest = R & ~closed[d1]
        D = [d1]
        for K in component_masks(g, within=rest):
            if universal_mask(g, K) != K:
                ctx.rely("vertices of R away from the N2 dominator form cliques")
            fits = bits(d for d in members(K & finite)
                        if closed[d] & K == K and masks[d] & masks[d1] == 0)
            d = _min_weight(W, fits)
            if d is None:
                D = None
                break
            D.append(d)
        if D is not None:
            out = _finish(W, D)
            if isinstance(out, Solved):
                results.append(out)

    # at least three vertices see N2
    comps = component_masks(g, within=R)
    if len(comps) >= 3 and all(universal_mask(g, c) == c for c in comps):
        D = []
        for Q in comps:
            if Q.bit_count() == 1:
                D.append(members(Q)[0])
                continue
            S = bits(x for x in members(N2) if masks[x] & Q not in (0, Q))
            U = bits(q for q in members(Q) if S & ~masks[q] == 0)
            if Q & finite & ~U:
                ctx.rely("the e.d. vertex of a clique sees all its distinguishers")
            U &= finite
            if not U:
                D = None
                break
            if U.bit_count() > 1:
                ctx.contradiction("one candidate per clique")
            D.append(members(U)[0])
        if D is not None:
            out = _finish(W, D)
            if isinstance(out, Solved):
                results.append(out)

    ctx.rely("every e.d. of G_v has one of the three shapes")
    best = best_of(results)
    return best if best is not None else NoFiniteED()


def solve_2p3s122_gv(p: CandidateProblem, ctx: Optional[ClassContext] = None) -> EdOutcome:
    """(2P3,S122)-free routine on one subproblem."""
    ctx = _context_for(p, ClassId("2p3s122"), ctx)
    try:
        return _2p3s122_routine(p, ctx)
    except Refusal as r:
        return r.outcome
    except Contradiction:
        return exact_wed(p.sub)


def solve_2p3s122(WG: WeightedGraph, robust: bool = True, certified: bool = False,
                  workers: Optional[int] = None) -> EdOutcome:
    """WED for (2P3,S122)-free graphs via the minimum-degree driver."""
    return _class_solver(WG, ClassId("2p3s122"), _2p3s122_routine, robust, certified, workers)


SOLVERS = {
    "p4p2": solve_p4p2,
    "p6s122": solve_p6s122,
    "2p3s122": solve_2p3s122,
}
