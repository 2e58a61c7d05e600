"""Pure-Python hot loops (bitmask based).

These mirror ``_ckernels.pyx`` exactly: same arguments, same results,
including which witness or which optimal set is reported.
"""

from __future__ import annotations

from typing import Optional, Sequence


def _iter_bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def find_induced(
    n: int,
    adj: Sequence[Sequence[int]],
    pattern_adj: Sequence[Sequence[int]],
    after: Sequence[int],
) -> Optional[list[int]]:
    """First (lexicographic) induced embedding of a small pattern.

    ``pattern_adj[i]`` lists the earlier pattern positions adjacent to
    position ``i``; ``after[i]`` is an earlier position whose host vertex must
    be smaller than position ``i``'s host vertex, or -1.
    """
    k = len(pattern_adj)
    if k == 0:
        return []
    if k > n:
        return None
    masks = [0] * n
    for v in range(n):
        m = 0
        for w in adj[v]:
            m |= 1 << w
        masks[v] = m
    full = (1 << n) - 1
    earlier = [set(p) for p in pattern_adj]
    host = [0] * k

    def extend(i: int, used: int) -> bool:
        if i == k:
            return True
        cand = full & ~used
        for j in range(i):
            if j in earlier[i]:
                cand &= masks[host[j]]
            else:
                cand &= ~masks[host[j]]
            if not cand:
                return False
        a = after[i]
        if a >= 0:
            cand &= ~((2 << host[a]) - 1)
        for v in _iter_bits(cand):
            host[i] = v
            if extend(i + 1, used | (1 << v)):
                return True
        return False

    if extend(0, 0):
        return list(host)
    return None


def exact_search(
    n: int,
    adj: Sequence[Sequence[int]],
    weights: Sequence[int],
) -> Optional[tuple[int, list[int]]]:
    """Minimum-weight efficient dominating set by branch and bound.

    ``weights[v] < 0`` marks a vertex that may not be chosen.  Returns
    ``(weight, sorted vertex list)`` for the optimum that is lexicographically
    smallest among minimum weight, or ``None`` if no admissible e.d. exists.
    """
    if n == 0:
        return 0, []
    closed = []
    for v in range(n):
        m = 1 << v
        for w in adj[v]:
            m |= 1 << w
        closed.append(m)
    finite = 0
    for v in range(n):
        if weights[v] >= 0:
            finite |= 1 << v
    full = (1 << n) - 1
    best: list = [None]
    chosen: list[int] = []

    def search(dominated: int, blocked: int, cur: int) -> None:
        b = best[0]
        if b is not None and cur > b[0]:
            return
        undominated = full & ~dominated
        if not undominated:
            cand = (cur, sorted(chosen))
            if b is None or cand < b:
                best[0] = cand
            return
        viable = finite & ~blocked
        pick_opts = 0
        pick_count = n + 1
        for u in _iter_bits(undominated):
            opts = closed[u] & viable
            c = opts.bit_count()
            if c < pick_count:
                pick_opts, pick_count = opts, c
                if c == 0:
                    return
        for x in _iter_bits(pick_opts):
            nb = blocked
            for z in _iter_bits(closed[x]):
                nb |= closed[z]
            chosen.append(x)
            search(dominated | closed[x], nb, cur + weights[x])
            chosen.pop()

    search(0, 0, 0)
    if best[0] is None:
        return None
    return best[0][0], list(best[0][1])
