"""Induced-subgraph detection for linear forests, the claw and S_{1,2,2}.

Detection is exact ordered backtracking (see :mod:`effdom.kernels`); the
patterns here are tiny, so the cost is polynomial of degree |pattern|.
Witnesses are deterministic: the lexicographically first canonical
embedding, paths listed end to end in spec order.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Optional, Sequence

from . import kernels
from .graph import Graph, anti_neighborhood, bits, members

__all__ = [
    "Pattern",
    "Embedding",
    "ClassId",
    "linear_forest",
    "CLAW",
    "S122",
    "P4",
    "find_pattern",
    "find_induced_linear_forest",
    "split_neighborhood",
    "is_independent",
    "is_cograph",
    "find_forbidden",
    "in_class_bruteforce",
    "parse_class",
    "parse_pattern",
]


@dataclass(frozen=True)
class Pattern:
    """A small pattern graph on positions ``0..k-1``.

    ``after[i] = j`` (with ``j < i``) asks for host(i) > host(j); it only
    removes automorphic copies of an embedding.
    """

    name: str
    k: int
    edges: frozenset[tuple[int, int]]
    after: tuple[int, ...]

    def adjacent(self, i: int, j: int) -> bool:
        return (min(i, j), max(i, j)) in self.edges

    def earlier_adj(self) -> list[list[int]]:
        return [[j for j in range(i) if self.adjacent(i, j)] for i in range(self.k)]


def _path_name(lengths: Sequence[int]) -> str:
    parts: list[str] = []
    i = 0
    while i < len(lengths):
        j = i
        while j < len(lengths) and lengths[j] == lengths[i]:
            j += 1
        count = j - i
        parts.append(f"{count if count > 1 else ''}P{lengths[i]}")
        i = j
    return "+".join(parts)


@lru_cache(maxsize=None)
def linear_forest(lengths: tuple[int, ...]) -> Pattern:
    """Disjoint union of paths with the given vertex counts."""
    if not lengths or any(x < 1 for x in lengths):
        raise ValueError(f"path sizes must be a nonempty list of positive ints, got {lengths}")
    edges = set()
    after = []
    starts = []
    pos = 0
    for c, length in enumerate(lengths):
        starts.append(pos)
        for i in range(length):
            if i > 0:
                edges.add((pos + i - 1, pos + i))
            if i == 0:
                # identical consecutive components are ordered by first vertex
                if c > 0 and lengths[c - 1] == length:
                    after.append(starts[c - 1])
                else:
                    after.append(-1)
            elif i == length - 1:
                after.append(pos)  # orient each path: first end < last end
            else:
                after.append(-1)
        pos += length
    return Pattern(_path_name(lengths), pos, frozenset(edges), tuple(after))


CLAW = Pattern("claw", 4, frozenset({(0, 1), (0, 2), (0, 3)}), (-1, -1, 1, 2))
# center 0; branch 1; branches 2-3 and 4-5
S122 = Pattern(
    "S122",
    6,
    frozenset({(0, 1), (0, 2), (2, 3), (0, 4), (4, 5)}),
    (-1, -1, -1, -1, 2, -1),
)
P4 = linear_forest((4,))


@dataclass(frozen=True)
class Embedding:
    """Host vertices realizing ``pattern`` as an induced subgraph, in position order."""

    pattern: Pattern
    vertices: tuple[int, ...]

    @property
    def name(self) -> str:
        return self.pattern.name

    def verify(self, G: Graph) -> bool:
        vs = self.vertices
        if len(vs) != self.pattern.k or len(set(vs)) != len(vs):
            return False
        if any(not 0 <= v < G.n for v in vs):
            return False
        for i in range(len(vs)):
            for j in range(i + 1, len(vs)):
                if G.has_edge(vs[i], vs[j]) != self.pattern.adjacent(i, j):
                    return False
        return True

    def lift(self, old_of: Sequence[int]) -> Embedding:
        """Re-express in the coordinates of a host this graph is induced from."""
        return Embedding(self.pattern, tuple(old_of[v] for v in self.vertices))

    def __str__(self) -> str:
        return f"{self.name}: {' '.join(map(str, self.vertices))}"


def find_pattern(G: Graph, pattern: Pattern) -> Optional[Embedding]:
    found = kernels.find_induced(G.n, G.sorted_adj, pattern.earlier_adj(), list(pattern.after))
    if found is None:
        return None
    return Embedding(pattern, tuple(found))


def find_induced_linear_forest(G: Graph, spec: Sequence[int]) -> Optional[Embedding]:
    return find_pattern(G, linear_forest(tuple(spec)))


def split_neighborhood(G: Graph, H: Iterable[int]) -> tuple[frozenset[int], frozenset[int]]:
    """``(X, Y)`` with X = N(H) and Y = A(H), both outside ``H``."""
    H = frozenset(H)
    Y = anti_neighborhood(G, H) if H else frozenset(range(G.n))
    X = frozenset(range(G.n)) - H - Y
    return X, Y


def is_independent(G: Graph, S: Iterable[int]) -> bool:
    smask = bits(S)
    return all(G.masks[u] & smask == 0 for u in members(smask))


def is_cograph(G: Graph) -> tuple[bool, Optional[Embedding]]:
    """``(True, None)`` for P4-free graphs, else ``(False, P4 witness)``."""
    w = find_pattern(G, P4)
    return w is None, w


@dataclass(frozen=True)
class ClassId:
    """A hereditary class given by forbidden induced subgraphs."""

    name: str
    k: int = 0

    def __post_init__(self) -> None:
        if self.name not in _CLASS_NAMES:
            raise ValueError(f"unknown class {self.name!r}")
        if self.k < 0:
            raise ValueError("class parameter k must be >= 0")
        if self.name == "kp2" and self.k < 1:
            raise ValueError("kP2-free needs k >= 1")

    @property
    def forbidden(self) -> tuple[Pattern, ...]:
        if self.name == "p5kp2":
            return (linear_forest((5,) + (2,) * self.k),)
        if self.name == "p4p2":
            return (linear_forest((4, 2)),)
        if self.name == "p6s122":
            return (linear_forest((6,)), S122)
        if self.name == "2p3s122":
            return (linear_forest((3, 3)), S122)
        if self.name == "p5":
            return (linear_forest((5,)),)
        if self.name == "p6":
            return (linear_forest((6,)),)
        return (linear_forest((2,) * self.k),)

    def __str__(self) -> str:
        labels = {
            "p5kp2": f"(P5+{self.k}P2)-free",
            "p4p2": "(P4+P2)-free",
            "p6s122": "(P6,S122)-free",
            "2p3s122": "(2P3,S122)-free",
            "p5": "P5-free",
            "p6": "P6-free",
            "kp2": f"{self.k}P2-free",
        }
        return labels[self.name]


_CLASS_NAMES = ("p5kp2", "p4p2", "p6s122", "2p3s122", "p5", "p6", "kp2")


def parse_class(text: str) -> ClassId:
    """Parse ``p4p2``, ``p6s122``, ``2p3s122``, ``p5``, ``p6``, ``p5kp2=<k>``, ``kp2=<k>``."""
    name, _, k = text.strip().lower().partition("=")
    try:
        return ClassId(name, int(k) if k else (1 if name in ("p5kp2", "kp2") else 0))
    except ValueError as exc:
        raise ValueError(f"bad class spec {text!r}: {exc}") from None


def parse_pattern(text: str) -> Pattern:
    """``P4``, ``claw``, ``S122`` or comma-separated path sizes such as ``5,2,2``."""
    t = text.strip()
    low = t.lower()
    if low == "claw":
        return CLAW
    if low in ("s122", "s1,2,2"):
        return S122
    if low.startswith("p") and low[1:].isdigit():
        return linear_forest((int(low[1:]),))
    try:
        sizes = tuple(int(x) for x in t.split(","))
    except ValueError:
        raise ValueError(f"bad pattern spec {text!r}") from None
    return linear_forest(sizes)


def find_forbidden(G: Graph, cls: ClassId) -> Optional[Embedding]:
    """First forbidden induced subgraph of ``cls`` found in ``G``, if any."""
    for pattern in cls.forbidden:
        w = find_pattern(G, pattern)
        if w is not None:
            return w
    return None


def in_class_bruteforce(G: Graph, cls: ClassId) -> bool:
    """Exhaustive membership test; exponential in the pattern size only."""
    return find_forbidden(G, cls) is None
