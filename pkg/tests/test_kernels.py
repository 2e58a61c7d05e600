from __future__ import annotations

import os
import random
import subprocess
import sys

import pytest

from effdom import kernels
from effdom.core import _kernel_weights, random_graph
from effdom.graph import INF, WeightedGraph, build_graph
from effdom.patterns import CLAW, S122, linear_forest

IMPLS = kernels.backends()
PATTERNS = [linear_forest(s) for s in ((3,), (4,), (2, 2), (4, 2), (3, 3), (5, 2))] + [CLAW, S122]


def test_python_backend_always_available():
    assert "python" in IMPLS
    assert kernels.BACKEND in ("python", "cython")


@pytest.mark.skipif("cython" not in IMPLS, reason="compiled kernels not built")
class TestAgreement:
    def test_find_induced(self):
        rng = random.Random(0)
        py, cy = IMPLS["python"], IMPLS["cython"]
        for _ in range(200):
            G = random_graph(rng.randint(1, 14), rng.choice([0.2, 0.4, 0.6]), rng).graph
            for P in PATTERNS:
                args = (G.n, G.sorted_adj, P.earlier_adj(), list(P.after))
                assert py.find_induced(*args) == cy.find_induced(*args)

    def test_exact_search(self):
        rng = random.Random(1)
        py, cy = IMPLS["python"], IMPLS["cython"]
        for _ in range(300):
            n = rng.randint(1, 14)
            WG = random_graph(n, rng.choice([0.15, 0.3, 0.5]), rng, max_weight=4)
            w = [INF if rng.random() < 0.15 else x for x in WG.weights]
            cw = _kernel_weights(WeightedGraph(WG.graph, tuple(w)))
            assert py.exact_search(n, WG.graph.sorted_adj, cw) == cy.exact_search(n, WG.graph.sorted_adj, cw)

    def test_large_weights_fall_back(self):
        G = build_graph(3, [(0, 1), (1, 2)])
        big = [1 << 62, 1 << 62, 1 << 62]
        assert kernels.exact_search(3, G.sorted_adj, big) == IMPLS["python"].exact_search(3, G.sorted_adj, big)


def test_pure_env_forces_python():
    code = "import effdom.kernels as k; print(k.BACKEND)"
    env = dict(os.environ, EFFDOM_PURE="1")
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
    assert out.stdout.strip() == "python"
