import random

import pytest
from hypothesis import strategies as st

from sgspec.core import SignedGraph, validate


def random_connected(rng: random.Random, n: int, p: float = 0.5) -> SignedGraph:
    """Random spanning tree plus extra edges with probability p, random signs."""
    edges = {}
    order = list(range(n))
    rng.shuffle(order)
    for i in range(1, n):
        u, v = order[i], order[rng.randrange(i)]
        edges[(min(u, v), max(u, v))] = rng.choice((1, -1))
    for u in range(n):
        for v in range(u + 1, n):
            if (u, v) not in edges and rng.random() < p:
                edges[(u, v)] = rng.choice((1, -1))
    return validate([(u, v, s) for (u, v), s in edges.items()], n)


@st.composite
def connected_signed_graphs(draw, min_n=1, max_n=9):
    n = draw(st.integers(min_n, max_n))
    seed = draw(st.integers(0, 2**32 - 1))
    p = draw(st.sampled_from([0.0, 0.2, 0.5, 0.9]))
    return random_connected(random.Random(seed), n, p)


@st.composite
def cyclic_signed_graphs(draw, max_n=9):
    g = draw(connected_signed_graphs(min_n=3, max_n=max_n))
    if g.m < g.n:
        # close a cycle by joining two non-adjacent vertices
        pairs = [(u, v) for u in range(g.n) for v in range(u + 1, g.n) if g.sign(u, v) == 0]
        u, v = draw(st.sampled_from(pairs))
        g = validate(list(g.edges) + [(u, v, draw(st.sampled_from([1, -1])))], g.n)
    return g


@st.composite
def switchings(draw, n):
    return tuple(draw(st.lists(st.sampled_from([1, -1]), min_size=n, max_size=n)))


_acceptance = {}


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.failed):
        return
    for key, label in _ACCEPTANCE_IDS.items():
        if f"test_acceptance.py::{key}" in report.nodeid:
            if _acceptance.get(label) != "FAIL":
                _acceptance[label] = "PASS" if report.passed else "FAIL"


_ACCEPTANCE_IDS = {
    "test_ac1_": "AC1 complete-graph multiplicity",
    "test_ac2_": "AC2 complete-bipartite nullity",
    "test_ac3_": "AC3 nullity regression on cycles",
    "test_ac4_": "AC4 closed-form cycle spectra vs Jacobi",
    "test_ac5_": "AC5 cycle multiplicity characterization",
    "test_ac6_": "AC6 exhaustive bound soundness (n<=6)",
    "test_ac7_": "AC7 exhaustive equality audit (n<=6)",
    "test_ac8a_": "AC8a interlacing property",
    "test_ac8b_": "AC8b switching isospectrality",
    "test_ac8c_": "AC8c Frobenius identity on sweep",
    "test_ac8d_": "AC8d exact vs clustered multiplicities",
    "test_ac9_": "AC9 enumerate determinism across jobs",
}


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for label in _ACCEPTANCE_IDS.values():
        if label in _acceptance:
            terminalreporter.write_line(f"[{_acceptance[label]}] {label}")
