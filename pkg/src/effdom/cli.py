"""Command-line front end: ``effdom {solve,verify,gen,detect,bench}``.

Graph files are plain text::

    # comments start with '#'
    n m
    u v          (m edge lines, 0-indexed)
    w u value    (optional weight lines; default weight 1)

Exit codes: 0 solved / e.d. / found / in class, 1 no e.d. / not an e.d. /
absent / not in class, 2 refused as not in class, 3 bad input.
"""

from __future__ import annotations

import argparse
import csv
import json
import random
import sys
import time
from dataclasses import dataclass
from typing import Callable, Optional, Sequence, TextIO

from .core import (
    EdOutcome,
    NotInClass,
    Solved,
    domination_counts,
    plant_instance,
    plant_p4p2_instance,
    random_graph,
    verify_ed,
)
from .graph import INF, WeightedGraph, build_graph, min_degree_vertex
from .patterns import ClassId, find_forbidden, find_pattern, parse_class, parse_pattern
from .solvers import solve_2p3s122, solve_exact, solve_p4p2, solve_p5kp2, solve_p6s122

EXIT_OK, EXIT_NEGATIVE, EXIT_REFUSED, EXIT_INPUT = 0, 1, 2, 3
AUTO_LIMIT = 16
FILTER_LIMIT = 16


class InputError(Exception):
    """Malformed input; reported with exit code 3."""


# ------------------------------------------------------------------ files

def parse_graph_text(text: str, source: str = "<input>") -> WeightedGraph:
    """Parse the graph file format; raises :class:`InputError` with line numbers."""
    rows = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            rows.append((lineno, line.split()))

    def fail(lineno: int, msg: str):
        raise InputError(f"{source}:{lineno}: {msg}")

    def ints(lineno: int, fields: Sequence[str]) -> list[int]:
        try:
            return [int(f) for f in fields]
        except ValueError:
            fail(lineno, f"expected integers, got {' '.join(fields)!r}")

    if not rows:
        raise InputError(f"{source}: missing header line 'n m'")
    lineno, header = rows[0]
    if len(header) != 2:
        fail(lineno, "header must be 'n m'")
    n, m = ints(lineno, header)
    if n < 0 or m < 0:
        fail(lineno, "n and m must be non-negative")
    if len(rows) - 1 < m:
        raise InputError(f"{source}: header announces {m} edges, found {len(rows) - 1} lines")
    edges = []
    seen = set()
    for lineno, fields in rows[1:m + 1]:
        if len(fields) != 2:
            fail(lineno, "edge line must be 'u v'")
        u, v = ints(lineno, fields)
        if not (0 <= u < n and 0 <= v < n):
            fail(lineno, f"vertex out of range 0..{n - 1}")
        if u == v:
            fail(lineno, f"loop at vertex {u}")
        key = (min(u, v), max(u, v))
        if key in seen:
            fail(lineno, f"duplicate edge {u} {v}")
        seen.add(key)
        edges.append(key)
    weights: list = [1] * n
    weighted = set()
    for lineno, fields in rows[m + 1:]:
        if len(fields) != 3 or fields[0] != "w":
            fail(lineno, "expected weight line 'w u value'")
        u, value = ints(lineno, fields[1:])
        if not 0 <= u < n:
            fail(lineno, f"vertex out of range 0..{n - 1}")
        if value < 0:
            fail(lineno, "weights must be non-negative")
        if u in weighted:
            fail(lineno, f"second weight for vertex {u}")
        weighted.add(u)
        weights[u] = value
    return WeightedGraph.of(build_graph(n, edges), weights)


def read_graph(path: str) -> WeightedGraph:
    try:
        if path == "-":
            text = sys.stdin.read()
        else:
            with open(path, encoding="ascii") as fh:
                text = fh.read()
    except (OSError, UnicodeDecodeError) as exc:
        raise InputError(f"{path}: {exc}") from None
    return parse_graph_text(text, path)


def format_graph(WG: WeightedGraph, comments: Sequence[str] = ()) -> str:
    lines = [f"# {c}" for c in comments]
    edges = WG.graph.edges()
    lines.append(f"{WG.n} {len(edges)}")
    lines.extend(f"{u} {v}" for u, v in edges)
    for u, w in enumerate(WG.weights):
        if w == INF:
            raise ValueError("graph files only hold finite weights")
        if w != 1:
            lines.append(f"w {u} {w}")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------- results

@dataclass
class ResultRecord:
    status: str
    vertices: list[int]
    solver: str
    elapsed_ms: float
    weight: Optional[int] = None
    reason: Optional[str] = None

    @classmethod
    def from_outcome(cls, out: EdOutcome, solver: str, elapsed_ms: float) -> ResultRecord:
        if isinstance(out, Solved):
            return cls("solved", sorted(out.D), solver, elapsed_ms, weight=out.total)
        if isinstance(out, NotInClass):
            reason = out.reason if out.witness is None else f"{out.reason} [witness {out.witness}]"
            return cls("not_in_class", [], solver, elapsed_ms, reason=reason)
        return cls("no_ed", [], solver, elapsed_ms)

    def as_dict(self) -> dict:
        d = {"status": self.status, "vertices": self.vertices}
        if self.status == "solved":
            d["weight"] = self.weight
        if self.status == "not_in_class":
            d["reason"] = self.reason
        d["solver"] = self.solver
        d["elapsed_ms"] = self.elapsed_ms
        return d

    def exit_code(self) -> int:
        return {"solved": EXIT_OK, "no_ed": EXIT_NEGATIVE, "not_in_class": EXIT_REFUSED}[self.status]

    def render(self) -> str:
        lines = [f"status: {self.status}", f"solver: {self.solver}"]
        if self.status == "solved":
            lines.append(f"weight: {self.weight}")
            lines.append("vertices: " + " ".join(map(str, self.vertices)))
        if self.reason:
            lines.append(f"reason: {self.reason}")
        lines.append(f"elapsed_ms: {self.elapsed_ms:.3f}")
        return "\n".join(lines)


Solver = Callable[[WeightedGraph], EdOutcome]


def pick_solver(WG: WeightedGraph, choice: str, workers: Optional[int] = None,
                trusted: bool = False) -> tuple[str, Solver]:
    """Resolve ``--class`` into a (name, solver) pair.

    ``auto`` certifies membership by brute force (only for n <= 16) and
    then runs the class solver without re-checking; otherwise exact.
    ``trusted`` runs named class solvers without membership checks.
    """
    choice = choice.strip().lower()
    if choice == "exact":
        return "exact", solve_exact
    if choice == "auto":
        if WG.n <= AUTO_LIMIT:
            for name in ("p4p2", "p6s122", "2p3s122"):
                if find_forbidden(WG.graph, ClassId(name)) is None:
                    return _class_choice(name, workers, certified=True)
            for k in range(4):
                if find_forbidden(WG.graph, ClassId("p5kp2", k)) is None:
                    return f"p5kp2={k}", lambda W, k=k: solve_p5kp2(W, k)
        return "exact", solve_exact
    cls = parse_class(choice)
    if cls.name == "p5kp2":
        return f"p5kp2={cls.k}", lambda W: solve_p5kp2(W, cls.k)
    if cls.name in ("p4p2", "p6s122", "2p3s122"):
        return _class_choice(cls.name, workers, robust=not trusted)
    raise ValueError(f"no solver for class {choice!r}")


def _class_choice(name: str, workers: Optional[int], certified: bool = False,
                  robust: bool = True) -> tuple[str, Solver]:
    fn = {"p4p2": solve_p4p2, "p6s122": solve_p6s122, "2p3s122": solve_2p3s122}[name]
    return name, lambda W: fn(W, robust=robust, certified=certified, workers=workers)


def run_solver(WG: WeightedGraph, choice: str, workers: Optional[int] = None) -> ResultRecord:
    name, fn = pick_solver(WG, choice, workers)
    start = time.perf_counter()
    out = fn(WG)
    elapsed = (time.perf_counter() - start) * 1000.0
    return ResultRecord.from_outcome(out, name, round(elapsed, 3))


# --------------------------------------------------------------- commands

def cmd_solve(args, out: TextIO) -> int:
    WG = read_graph(args.path)
    try:
        rec = run_solver(WG, args.cls, args.threads)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    if args.json:
        out.write(json.dumps(rec.as_dict()) + "\n")
    else:
        out.write(rec.render() + "\n")
    return rec.exit_code()


def _parse_set(text: str, n: int) -> list[int]:
    try:
        vs = [int(t) for t in text.replace(",", " ").split()]
    except ValueError:
        raise InputError(f"bad vertex set {text!r}") from None
    bad = [v for v in vs if not 0 <= v < n]
    if bad:
        raise InputError(f"vertex {bad[0]} out of range 0..{n - 1}")
    return vs


def cmd_verify(args, out: TextIO) -> int:
    WG = read_graph(args.path)
    D = _parse_set(args.set, WG.n)
    if verify_ed(WG.graph, D):
        out.write(f"efficient dominating set, weight {WG.weight_of(D)}\n")
        return EXIT_OK
    out.write("not an efficient dominating set\n")
    for v, c in enumerate(domination_counts(WG.graph, D)):
        if c != 1:
            out.write(f"vertex {v}: dominated {c} times\n")
    return EXIT_NEGATIVE


def cmd_gen(args, out: TextIO) -> int:
    if args.n < 1:
        raise InputError("-n must be positive")
    if not 0.0 <= args.density <= 1.0:
        raise InputError("--density must lie in [0, 1]")
    cls = None
    if args.class_filter:
        try:
            cls = parse_class(args.class_filter)
        except ValueError as exc:
            raise InputError(str(exc)) from None
        if args.n > FILTER_LIMIT:
            raise InputError(f"--class-filter needs n <= {FILTER_LIMIT}")
    rng = random.Random(args.seed)
    attempts = args.max_attempts if cls is not None else 1
    for _ in range(attempts):
        sub_seed = rng.randrange(2 ** 32)
        comments = [f"model: {args.model}, n={args.n}, seed={args.seed}"]
        if args.model == "planted":
            d = args.d if args.d is not None else max(1, args.n // 10)
            try:
                WG, D = plant_instance(args.n, d, args.density, sub_seed, args.max_weight)
            except ValueError as exc:
                raise InputError(str(exc)) from None
            comments.append("planted: " + " ".join(map(str, sorted(D))))
        else:
            WG = random_graph(args.n, args.density, sub_seed, args.max_weight)
        if cls is None or find_forbidden(WG.graph, cls) is None:
            out.write(format_graph(WG, comments))
            return EXIT_OK
    sys.stderr.write(f"no {cls} graph found in {attempts} attempts\n")
    return EXIT_NEGATIVE


def cmd_detect(args, out: TextIO) -> int:
    WG = read_graph(args.path)
    try:
        if args.pattern is not None:
            found = find_pattern(WG.graph, parse_pattern(args.pattern))
            out.write(f"{found}\n" if found else "absent\n")
            return EXIT_OK if found else EXIT_NEGATIVE
        cls = parse_class(args.cls)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    witness = find_forbidden(WG.graph, cls)
    if witness is None:
        out.write(f"in class {cls}\n")
        return EXIT_OK
    out.write(f"not in class {cls}: {witness}\n")
    return EXIT_NEGATIVE


def bench_instance(suite: str, n: int, seed: int) -> WeightedGraph:
    """Deterministic benchmark instance with about ``n`` vertices."""
    if suite == "planted":
        return plant_instance(n, max(1, n // 10), 0.1, seed)[0]
    if suite == "random":
        return random_graph(n, 0.1, seed, max_weight=10)
    if suite == "p4p2":
        cliques = 4
        size = max(2, (n - 2) // (2 * cliques))
        links = max(1, n - 2 - cliques * size)
        return plant_p4p2_instance(cliques, size, links, seed)[0]
    raise ValueError(f"unknown suite {suite!r}")


def cmd_bench(args, out: TextIO) -> int:
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(["solver", "n", "m", "delta", "elapsed_ms", "status"])
    for choice in args.solver:
        for n in args.n:
            for rep in range(args.reps):
                try:
                    WG = bench_instance(args.suite, n, args.seed + rep)
                    name, fn = pick_solver(WG, choice, trusted=args.trusted)
                except ValueError as exc:
                    raise InputError(str(exc)) from None
                start = time.perf_counter()
                res = fn(WG)
                elapsed = (time.perf_counter() - start) * 1000.0
                delta = min_degree_vertex(WG.graph)[1] if WG.n else 0
                writer.writerow([name, WG.n, WG.graph.m, delta, f"{elapsed:.3f}", res.status])
    return EXIT_OK


# ------------------------------------------------------------------ main

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="effdom", description="Minimum-weight efficient domination.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="solve WED for a graph file")
    p.add_argument("path")
    p.add_argument("--class", dest="cls", default="auto",
                   help="auto | exact | p4p2 | p6s122 | 2p3s122 | p5kp2=<k>")
    p.add_argument("--json", action="store_true")
    p.add_argument("--threads", type=int, default=None)
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("verify", help="check an efficient dominating set")
    p.add_argument("path")
    p.add_argument("--set", required=True, help="comma-separated vertices")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("gen", help="generate a graph file")
    p.add_argument("--model", choices=("planted", "random"), default="planted")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("-d", type=int, default=None, help="planted set size (default n/10)")
    p.add_argument("--density", type=float, default=0.2)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--max-weight", type=int, default=1)
    p.add_argument("--class-filter", default=None)
    p.add_argument("--max-attempts", type=int, default=10000)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("detect", help="find an induced pattern or test class membership")
    p.add_argument("path")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--pattern")
    g.add_argument("--class", dest="cls")
    p.set_defaults(func=cmd_detect)

    p = sub.add_parser("bench", help="time solvers, CSV on stdout")
    p.add_argument("--suite", choices=("planted", "random", "p4p2"), default="planted")
    p.add_argument("-n", type=int, nargs="+", default=[50, 100])
    p.add_argument("--reps", type=int, default=1)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--solver", action="append", default=None,
                   help="solver choice as for solve --class (repeatable; default exact)")
    p.add_argument("--trusted", action="store_true",
                   help="skip membership certification in class solvers")
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv: Optional[Sequence[str]] = None, out: Optional[TextIO] = None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    if getattr(args, "solver", "") is None:
        args.solver = ["exact"]
    try:
        return args.func(args, out)
    except InputError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
