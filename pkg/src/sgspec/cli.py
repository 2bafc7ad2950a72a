"""Command-line interface.

Exit codes: 0 ok, 2 parse or usage error, 3 disconnected graph, 4 acyclic
graph, 5 girth bound violated.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from fractions import Fraction

from . import formulas
from .core import (
    AcyclicGraph,
    DisconnectedGraph,
    GraphError,
    SignedGraph,
    SwitchingFunction,
    balance_class,
    complete_bipartite,
    complete_graph,
    cycle_graph,
    girth,
    require_connected,
    switch,
)
from .graphfile import GraphFileError, graph_json, read, serialize
from .linalg import multiplicity_exact
from .sweep import CHECKS, EnumConfig, run_sweep
from .theorems import bound_report, check_theorem1, classify_extremal, clustered_spectrum

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_DISCONNECTED = 3
EXIT_ACYCLIC = 4
EXIT_VIOLATION = 5


def _ratio(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


def _lam_json(lam):
    if lam is None:
        return None
    return _ratio(lam) if isinstance(lam, Fraction) else lam


def _fmt(value: float, exact) -> str:
    if exact is not None:
        return str(exact)
    return f"{value:.10g}"


def _spectrum_json(g: SignedGraph, rows) -> list[dict]:
    out = []
    for value, mult, exact in rows:
        entry = {"value": value, "multiplicity": mult, "exact": exact is not None}
        if exact is not None:
            entry["lambda"] = _ratio(exact)
        out.append(entry)
    return out


def _dump(obj) -> None:
    json.dump(obj, sys.stdout, indent=2)
    sys.stdout.write("\n")


# -- commands --------------------------------------------------------------------


def cmd_spectrum(args) -> int:
    g = read(args.file)
    require_connected(g)
    rows = clustered_spectrum(g)
    if args.json:
        _dump({"graph": graph_json(g), "spectrum": _spectrum_json(g, rows)})
    else:
        print(", ".join(f"{_fmt(v, e)} (x{m})" for v, m, e in rows))
    return EXIT_OK


def cmd_classify(args) -> int:
    g = read(args.file)
    bc = balance_class(g)
    info = {"balance_class": bc.kind.value}
    if bc.switching is not None:
        info["switching"] = [v + 1 for v in bc.switching.flipped()]
    if bc.negative_cycle is not None:
        info["negative_cycle"] = [v + 1 for v in bc.negative_cycle.vertices]
    if bc.parity_cycle is not None:
        info["parity_cycle"] = [v + 1 for v in bc.parity_cycle.vertices]
    print(bc.kind.value)
    if "switching" in info:
        flips = " ".join(map(str, info["switching"])) or "(none)"
        target = "all-positive" if bc.balanced else "all-negative"
        print(f"switch on {flips} -> {target}")
    if "negative_cycle" in info:
        print("negative cycle: " + " ".join(map(str, info["negative_cycle"])))
    if "parity_cycle" in info:
        print("antibalance violated by cycle: " + " ".join(map(str, info["parity_cycle"])))
    cyc = girth(g)
    print(f"girth {cyc.length}: {' '.join(str(v + 1) for v in cyc.vertices)} (sign {cyc.sign:+d})")
    return EXIT_OK


def verify_report(g: SignedGraph, exact: bool = False) -> dict:
    """The JSON report emitted by ``verify``."""
    report = bound_report(g)
    verdict = classify_extremal(g, report)
    t1 = check_theorem1(g)
    rows = [(r.value, r.multiplicity, r.exact) for r in report.rows]
    out = {
        "graph": graph_json(g),
        "girth": report.girth,
        "balance_class": balance_class(g).kind.value,
        "spectrum": _spectrum_json(g, rows),
        "bound": {"limit": report.limit, "min_slack": report.min_slack},
        "verdict": {
            "case": verdict.case.value,
            "lambda": _lam_json(verdict.lam),
            "multiplicity": verdict.multiplicity,
            "equality_lambdas": [_lam_json(x) for x in verdict.equality_lambdas],
        },
        "theorem1": {
            "nullity": t1.nullity,
            "limit": t1.limit,
            "equality": t1.equality,
            "case": t1.case,
            "consistent": t1.consistent,
        },
        "certificates": [c.to_dict() for c in verdict.certificates],
    }
    if exact:
        out["exact"] = [
            {"lambda": _ratio(Fraction(lam)), "multiplicity": multiplicity_exact(g, lam)}
            for lam in range(-2, 3)
        ]
    return out


def cmd_verify(args) -> int:
    g = read(args.file)
    out = verify_report(g, args.exact)
    _dump(out)
    return EXIT_VIOLATION if out["bound"]["min_slack"] < 0 else EXIT_OK


def cmd_enumerate(args) -> int:
    checks = frozenset(c.strip() for c in args.checks.split(",") if c.strip())
    cfg = EnumConfig(max_n=args.max_n, min_n=args.min_n, jobs=args.jobs, checks=checks)
    report = run_sweep(cfg)
    print(f"sweep finished in {report.wall_time:.2f}s", file=sys.stderr)
    if args.json:
        _dump(report.to_dict())
        return EXIT_VIOLATION if report.bound_violations else EXIT_OK
    for n, c in sorted(report.counts.items()):
        print(
            f"n={n}: {c['graphs']} graphs, {c['graphs_with_cycles']} with cycles, "
            f"{c['switching_classes']} switching classes"
        )
    if "bound" in checks or "theorem2" in checks:
        print(f"bound violations: {report.bound_violations}")
    for case, k in sorted(report.cases.items()):
        print(f"case {case}: {k}")
    if "theorem1" in checks:
        print(f"nullity equality: {len(report.nullity_equality)}")
        for item in report.nullity_equality:
            print(f"  n={item['n']} {item['case']} edges={item['edges']}")
    if "cycles" in checks:
        c = report.cycle_checks
        print(f"cycle checks: {c['consistent']}/{c['checked']} consistent")
    if "rank2" in checks:
        c = report.rank2_checks
        print(f"rank-2 checks: {c['consistent']}/{c['checked']} consistent")
    print(f"certificates: {len(report.certificates)}")
    for cert in report.certificates:
        print("  " + json.dumps(cert.to_dict()))
    return EXIT_VIOLATION if report.bound_violations else EXIT_OK


def generate_family(family: str, n: int, n2: int | None = None, balanced: bool = True) -> SignedGraph:
    if family == "balanced-complete":
        return complete_graph(n, 1)
    if family == "antibalanced-complete":
        return complete_graph(n, -1)
    if family == "balanced-complete-bipartite":
        if n2 is None:
            raise GraphError("--n2 is required for complete bipartite graphs")
        return complete_bipartite(n, n2, 1)
    if family == "cycle":
        if n < 3:
            raise GraphError("a cycle needs at least 3 vertices")
        return cycle_graph(n, balanced)
    raise GraphError(f"unknown family {family!r}")


def cmd_generate(args) -> int:
    g = generate_family(args.family, args.n, args.n2, args.balanced)
    comments = [f"family {args.family} n={args.n}" + (f" n2={args.n2}" if args.n2 else "")]
    if args.switch_seed is not None:
        rng = random.Random(args.switch_seed)
        z = SwitchingFunction(tuple(rng.choice((1, -1)) for _ in range(g.n)))
        g = switch(g, z)
        comments.append(f"switched with seed {args.switch_seed}")
    sys.stdout.write(serialize(g, comments))
    return EXIT_OK


def cmd_cycle(args) -> int:
    n = args.n
    if n < 3:
        raise GraphError(f"a cycle needs at least 3 vertices, got {n}")
    spec = formulas.cycle_spectrum(n, args.balanced)
    simple = formulas.cycle_simple_eigenvalues(n, args.balanced)
    double = formulas.cycle_double_eigenvalues(n, args.balanced)
    if args.json:
        _dump(
            {
                "n": n,
                "balanced": args.balanced,
                "values": [{"j": j, "value": v} for j, v in zip(spec.indices, spec.values)],
                "simple": simple,
                "double": double,
            }
        )
        return EXIT_OK
    label = "balanced" if args.balanced else "unbalanced"
    print(f"C_{n} ({label})")
    for j, v in zip(spec.indices, spec.values):
        print(f"  j={j:<3d} {v: .12f}")
    print("simple: " + (", ".join(f"{v:.12g}" for v in simple) or "(none)"))
    print("double: " + (", ".join(f"{v:.12g}" for v in double) or "(none)"))
    return EXIT_OK


def _parse_vertices(text: str) -> list[int]:
    out = []
    for tok in text.replace(",", " ").split():
        try:
            out.append(int(tok))
        except ValueError:
            raise GraphError(f"bad vertex {tok!r}") from None
    return out


def cmd_switch(args) -> int:
    g = read(args.file)
    verts = _parse_vertices(args.vertices or "")
    z = SwitchingFunction.from_subset(g.n, [v - 1 for v in verts])
    sys.stdout.write(serialize(switch(g, z)))
    return EXIT_OK


# -- entry point ------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="sgspec", description="Signed graph spectra and girth bounds.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("spectrum", help="clustered adjacency spectrum")
    p.add_argument("file")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_spectrum)

    p = sub.add_parser("classify", help="balance class and girth")
    p.add_argument("file")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("verify", help="girth bound report and extremal verdict (JSON)")
    p.add_argument("file")
    p.add_argument("--exact", action="store_true", help="also list exact multiplicities at -2..2")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("enumerate", help="exhaustive sweep over small signed graphs")
    p.add_argument("--max-n", type=int, default=6)
    p.add_argument("--min-n", type=int, default=3)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--checks", default=",".join(CHECKS), help=f"comma list from {', '.join(CHECKS)}")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("generate", help="write an extremal family member")
    p.add_argument(
        "--family",
        required=True,
        choices=["balanced-complete", "antibalanced-complete", "balanced-complete-bipartite", "cycle"],
    )
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--n2", type=int)
    g = p.add_mutually_exclusive_group()
    g.add_argument("--balanced", dest="balanced", action="store_true", default=True)
    g.add_argument("--unbalanced", dest="balanced", action="store_false")
    p.add_argument("--switch-seed", type=int)
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("cycle", help="closed-form signed cycle spectrum")
    p.add_argument("--n", type=int, required=True)
    g = p.add_mutually_exclusive_group()
    g.add_argument("--balanced", dest="balanced", action="store_true", default=True)
    g.add_argument("--unbalanced", dest="balanced", action="store_false")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_cycle)

    p = sub.add_parser("switch", help="switch a graph file at a vertex set")
    p.add_argument("file")
    p.add_argument("--vertices", default="", help="1-based vertices, e.g. 1,3,5")
    p.set_defaults(func=cmd_switch)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except DisconnectedGraph as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DISCONNECTED
    except AcyclicGraph as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ACYCLIC
    except (GraphFileError, GraphError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
