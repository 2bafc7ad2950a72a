"""Exhaustive sweep over small connected signed graphs modulo isomorphism and switching."""

from __future__ import annotations

import itertools
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterator

from .core import SignedGraph, balance_class, validate
from .theorems import (
    Case,
    CounterexampleCertificate,
    bound_report,
    check_cycle_graph,
    check_rank2_lemma,
    check_theorem1,
    classify_extremal,
)

MAX_ORDER = 8
CHECKS = ("bound", "theorem1", "theorem2", "cycles", "rank2")

UnsignedGraph = tuple[int, tuple[tuple[int, int], ...]]


# -- canonical forms ---------------------------------------------------------


@lru_cache(maxsize=None)
def _pair_weights(n: int) -> tuple[tuple[int, ...], ...]:
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    top = len(pairs) - 1
    w = [[0] * n for _ in range(n)]
    for k, (i, j) in enumerate(pairs):
        w[i][j] = w[j][i] = 1 << (top - k)
    return tuple(tuple(r) for r in w)


def _refined_cells(n: int, adj: list[list[int]]) -> list[list[int]]:
    """Vertex cells from colour refinement, in an isomorphism-invariant order."""
    colour = [len(adj[v]) for v in range(n)]
    ncolours = len(set(colour))
    while True:
        sigs = [(colour[v], tuple(sorted(colour[w] for w in adj[v]))) for v in range(n)]
        labels = {s: i for i, s in enumerate(sorted(set(sigs)))}
        colour = [labels[s] for s in sigs]
        if len(labels) == ncolours:
            break
        ncolours = len(labels)
    cells: list[list[int]] = [[] for _ in range(ncolours)]
    for v in range(n):
        cells[colour[v]].append(v)
    return cells


def _code(edges, pos, w) -> int:
    return sum(w[pos[u]][pos[v]] for u, v in edges)


def canonical_form(n: int, edges) -> tuple[int, tuple[int, ...]]:
    """Smallest adjacency bit-string over vertex orderings that respect refined cells.

    Returns the code and the ordering (``pos[v]`` is the new index of ``v``).
    Because the cells and their order are isomorphism invariants, minimizing
    only over cell-respecting orderings still yields a canonical form.
    """
    adj: list[list[int]] = [[] for _ in range(n)]
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    cells = _refined_cells(n, adj)
    w = _pair_weights(n)
    best = None
    best_pos: tuple[int, ...] = ()
    pos = [0] * n
    for choice in itertools.product(*(itertools.permutations(c) for c in cells)):
        k = 0
        for cell in choice:
            for v in cell:
                pos[v] = k
                k += 1
        code = _code(edges, pos, w)
        if best is None or code < best:
            best = code
            best_pos = tuple(pos)
    return best, best_pos


def canonical_form_bruteforce(n: int, edges) -> int:
    """Same kind of code, minimized over all n! orderings (no pruning)."""
    w = _pair_weights(n)
    return min(_code(edges, p, w) for p in itertools.permutations(range(n)))


def _decode(n: int, code: int) -> tuple[tuple[int, int], ...]:
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    top = len(pairs) - 1
    return tuple(p for k, p in enumerate(pairs) if code >> (top - k) & 1)


def _connected(n: int, edges) -> bool:
    adj: list[list[int]] = [[] for _ in range(n)]
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    seen = {0}
    stack = [0]
    while stack:
        for w in adj[stack.pop()]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == n


@lru_cache(maxsize=None)
def _connected_codes(n: int) -> tuple[int, ...]:
    # Every connected graph has a non-cut vertex, so each one arises from a
    # connected graph on n-1 vertices plus a vertex with a nonempty neighbourhood.
    if n == 1:
        return (0,)
    found = set()
    for code in _connected_codes(n - 1):
        base = _decode(n - 1, code)
        for mask in range(1, 1 << (n - 1)):
            extra = tuple((v, n - 1) for v in range(n - 1) if mask >> v & 1)
            found.add(canonical_form(n, base + extra)[0])
    return tuple(sorted(found))


def _order_key(n: int, code: int) -> tuple[int, int]:
    return (bin(code).count("1"), code)


def enumerate_underlying(n: int) -> Iterator[UnsignedGraph]:
    """One connected unsigned graph per isomorphism class, in canonical order.

    Graphs are yielded relabelled to their canonical ordering, sorted by edge
    count and then by canonical code.
    """
    if n < 1:
        raise ValueError("order must be at least 1")
    if n > MAX_ORDER:
        raise ValueError(f"order {n} exceeds the enumeration budget (max {MAX_ORDER})")
    for code in sorted(_connected_codes(n), key=lambda c: _order_key(n, c)):
        yield n, _decode(n, code)


def count_connected_bruteforce(n: int) -> int:
    """Number of connected graphs on n vertices up to isomorphism, by full search."""
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    seen = set()
    for mask in range(1 << len(pairs)):
        edges = [p for k, p in enumerate(pairs) if mask >> k & 1]
        if _connected(n, edges):
            seen.add(canonical_form_bruteforce(n, edges))
    return len(seen)


# -- signatures ----------------------------------------------------------------


def _bfs_tree_edges(n: int, edges) -> set[tuple[int, int]]:
    adj: list[list[int]] = [[] for _ in range(n)]
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    tree = set()
    seen = [False] * n
    seen[0] = True
    queue = [0]
    for u in queue:
        for w in sorted(adj[u]):
            if not seen[w]:
                seen[w] = True
                tree.add((min(u, w), max(u, w)))
                queue.append(w)
    if not all(seen):
        raise ValueError("graph is not connected")
    return tree


def enumerate_signatures(graph: UnsignedGraph) -> Iterator[SignedGraph]:
    """One signing per switching class: tree edges positive, co-tree edges free."""
    n, edges = graph
    edges = tuple(sorted((min(u, v), max(u, v)) for u, v in edges))
    tree = _bfs_tree_edges(n, edges)
    cotree = [e for e in edges if e not in tree]
    for mask in range(1 << len(cotree)):
        neg = {e for k, e in enumerate(cotree) if mask >> k & 1}
        yield validate([(u, v, -1 if (u, v) in neg else 1) for u, v in edges], n)


# -- sweep ---------------------------------------------------------------------


@dataclass(frozen=True)
class EnumConfig:
    max_n: int
    min_n: int = 3
    jobs: int = 1
    checks: frozenset[str] = frozenset(CHECKS)

    def __post_init__(self):
        if not 3 <= self.min_n <= self.max_n:
            raise ValueError(f"need 3 <= min_n <= max_n, got {self.min_n}, {self.max_n}")
        if self.max_n > MAX_ORDER:
            raise ValueError(f"max_n {self.max_n} exceeds the enumeration budget (max {MAX_ORDER})")
        if self.jobs < 1:
            raise ValueError("jobs must be at least 1")
        unknown = set(self.checks) - set(CHECKS)
        if unknown:
            raise ValueError(f"unknown checks: {sorted(unknown)}")


@dataclass
class EnumReport:
    config: EnumConfig
    counts: dict[int, dict[str, int]] = field(default_factory=dict)
    cases: dict[str, int] = field(default_factory=dict)
    bound_violations: int = 0
    equality_instances: list[dict] = field(default_factory=list)
    nullity_equality: list[dict] = field(default_factory=list)
    cycle_checks: dict[str, int] = field(default_factory=lambda: {"checked": 0, "consistent": 0})
    rank2_checks: dict[str, int] = field(default_factory=lambda: {"checked": 0, "consistent": 0})
    certificates: list[CounterexampleCertificate] = field(default_factory=list)
    wall_time: float = 0.0

    def to_dict(self) -> dict:
        """Serializable form.  Wall time is left out so that reports are reproducible."""
        return {
            "config": {
                "min_n": self.config.min_n,
                "max_n": self.config.max_n,
                "checks": sorted(self.config.checks),
            },
            "counts": {str(n): c for n, c in sorted(self.counts.items())},
            "cases": dict(sorted(self.cases.items())),
            "bound_violations": self.bound_violations,
            "equality_instances": self.equality_instances,
            "nullity_equality": self.nullity_equality,
            "cycle_checks": self.cycle_checks,
            "rank2_checks": self.rank2_checks,
            "certificates": [c.to_dict() for c in self.certificates],
        }


def _lam_str(lam) -> object:
    if isinstance(lam, Fraction):
        return f"{lam.numerator}/{lam.denominator}"
    return lam


def _edges_json(g: SignedGraph) -> list[list[int]]:
    return [[u + 1, v + 1, s] for u, v, s in g.edges]


def _sweep_graph(args: tuple[UnsignedGraph, frozenset[str]]) -> dict:
    """All checks for one underlying graph.  Pure; safe to run in a worker process."""
    graph, checks = args
    n, edges = graph
    has_cycle = len(edges) >= n
    out = {
        "n": n,
        "classes": 0,
        "has_cycle": has_cycle,
        "cases": {},
        "violations": 0,
        "equality": [],
        "nullity": [],
        "cycles": [0, 0],
        "rank2": [0, 0],
        "certs": [],
    }
    for g in enumerate_signatures(graph):
        out["classes"] += 1
        if "rank2" in checks:
            r2 = check_rank2_lemma(g)
            if r2.applicable:
                out["rank2"][0] += 1
                out["rank2"][1] += r2.consistent
                if not r2.consistent:
                    out["certs"].append(
                        CounterexampleCertificate(
                            g, "rank two iff complete bipartite", Fraction(0),
                            g.n - r2.rank, True, 0, balance_class(g).kind.value,
                        )
                    )
        if not has_cycle:
            continue
        report = None
        if checks & {"bound", "theorem2"}:
            report = bound_report(g)
            bc = None
            for row in report.rows:
                if row.slack < 0:
                    out["violations"] += 1
                    bc = bc or balance_class(g)
                    out["certs"].append(
                        CounterexampleCertificate(
                            g, "girth bound inequality", row.lam, row.multiplicity,
                            row.exact is not None, report.girth, bc.kind.value,
                        )
                    )
        if "theorem2" in checks:
            verdict = classify_extremal(g, report)
            key = verdict.case.value
            out["cases"][key] = out["cases"].get(key, 0) + 1
            if verdict.case is not Case.NONE or verdict.equality_lambdas:
                out["equality"].append(
                    {
                        "n": g.n,
                        "edges": _edges_json(g),
                        "case": key,
                        "lambdas": [_lam_str(x) for x in verdict.equality_lambdas],
                    }
                )
            out["certs"].extend(verdict.certificates)
        if "theorem1" in checks:
            t1 = check_theorem1(g)
            if t1.equality:
                out["nullity"].append({"n": g.n, "edges": _edges_json(g), "case": t1.case})
            if not t1.consistent:
                out["certs"].append(
                    CounterexampleCertificate(
                        g, "nullity girth bound", Fraction(0), t1.nullity, True,
                        g.n - t1.limit + 2, balance_class(g).kind.value,
                    )
                )
        if "cycles" in checks and g.is_cycle():
            ok = check_cycle_graph(g).ok
            out["cycles"][0] += 1
            out["cycles"][1] += ok
            if not ok:
                out["certs"].append(
                    CounterexampleCertificate(
                        g, "cycle simple/double eigenvalues", 0.0, 0, False, g.n,
                        balance_class(g).kind.value,
                    )
                )
    return out


def run_sweep(cfg: EnumConfig) -> EnumReport:
    """Run the configured checks over every graph of order min_n..max_n.

    Results are merged in canonical graph order, so the report does not
    depend on ``cfg.jobs``.
    """
    start = time.perf_counter()
    work = [
        (graph, cfg.checks)
        for n in range(cfg.min_n, cfg.max_n + 1)
        for graph in enumerate_underlying(n)
    ]
    if cfg.jobs > 1:
        with ProcessPoolExecutor(max_workers=cfg.jobs) as pool:
            results = list(pool.map(_sweep_graph, work, chunksize=8))
    else:
        results = [_sweep_graph(item) for item in work]

    report = EnumReport(cfg)
    for n in range(cfg.min_n, cfg.max_n + 1):
        report.counts[n] = {"graphs": 0, "switching_classes": 0, "graphs_with_cycles": 0}
    for res in results:
        c = report.counts[res["n"]]
        c["graphs"] += 1
        c["switching_classes"] += res["classes"]
        c["graphs_with_cycles"] += res["has_cycle"]
        for k, v in res["cases"].items():
            report.cases[k] = report.cases.get(k, 0) + v
        report.bound_violations += res["violations"]
        report.equality_instances.extend(res["equality"])
        report.nullity_equality.extend(res["nullity"])
        report.cycle_checks["checked"] += res["cycles"][0]
        report.cycle_checks["consistent"] += res["cycles"][1]
        report.rank2_checks["checked"] += res["rank2"][0]
        report.rank2_checks["consistent"] += res["rank2"][1]
        report.certificates.extend(res["certs"])
    report.wall_time = time.perf_counter() - start
    return report


def iter_signed_graphs(max_n: int, min_n: int = 3, with_cycle: bool = True) -> Iterator[SignedGraph]:
    """Every sweep instance: one signing per (isomorphism class, switching class)."""
    for n in range(min_n, max_n + 1):
        for graph in enumerate_underlying(n):
            if with_cycle and len(graph[1]) < n:
                continue
            yield from enumerate_signatures(graph)
