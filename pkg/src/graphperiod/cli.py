"""Command-line front end.

    graphperiod analyze (PATH | --builtin NAME) [--json] [caps...]
    graphperiod oracle [--seed N]
    graphperiod examples list
    graphperiod examples emit NAME PATH

Exit codes: 0 report produced / all oracles pass, 1 input error, 2 no bound
established under the caps, 3 oracle mismatch.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import oracle
from .bounds import BoundsReport, analyze
from .catalog import EXPECTED, builtin
from .config import Config
from .multigraph import GraphError, parse_graph


def _add_cap_flags(p: argparse.ArgumentParser):
    p.add_argument("--max-enum", type=int, default=10**6,
                   help="element enumeration cap (default 10^6)")
    p.add_argument("--bar-cap", type=int, default=32,
                   help="largest subgroup order for the bar complex (default 32)")
    p.add_argument("--union-cap", type=int, default=4096,
                   help="max edge-orbit unions enumerated (default 4096)")
    p.add_argument("--subgraph-depth", type=int, default=1,
                   help="invariant-subgraph recursion depth (default 1)")
    p.add_argument("--seed", type=int, default=0,
                   help="seed for randomized scans (default 0)")


def _config(args) -> Config:
    return Config(
        max_enum=args.max_enum,
        bar_cap=args.bar_cap,
        union_cap=args.union_cap,
        subgraph_depth=args.subgraph_depth,
        seed=args.seed,
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="graphperiod",
        description="Period and index bounds, with certificates, for the "
        "Brauer class of the totally degenerate stable curve with a given "
        "dual graph.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_an = sub.add_parser("analyze", help="analyze a graph JSON file or a builtin")
    p_an.add_argument("path", nargs="?", help="graph JSON file")
    p_an.add_argument("--builtin", metavar="NAME", help="analyze a builtin graph")
    p_an.add_argument("--json", action="store_true", help="emit the report as JSON")
    _add_cap_flags(p_an)

    p_or = sub.add_parser("oracle", help="run the cross-check suites")
    _add_cap_flags(p_or)

    p_ex = sub.add_parser("examples", help="list builtins or emit one as JSON")
    ex_sub = p_ex.add_subparsers(dest="examples_command", required=True)
    ex_sub.add_parser("list", help="list builtin graphs with expected verdicts")
    p_emit = ex_sub.add_parser("emit", help="write a builtin graph as JSON")
    p_emit.add_argument("name")
    p_emit.add_argument("out_path")
    return parser


def render_text(report: BoundsReport) -> str:
    doc = report.to_json_dict()
    lines = [
        f"graph: {doc['graph']}",
        f"genus: {doc['genus']}",
        f"|Aut|: {doc['aut_order']}",
    ]
    for key in ("period", "index"):
        d = doc[key]
        state = "resolved" if d["resolved"] else "interval"
        lines.append(f"{key}: lower {d['lower']}  upper {d['upper']}  [{state}]")
    lines.append(f"certificates ({len(doc['certificates'])}):")
    for c in doc["certificates"]:
        lines.append(
            f"  {c['rule']:<20} {c['target']:<6} {c['direction']:<5} divides {c['divisor']}"
        )
    if doc["status"]:
        lines.append("status:")
        lines.extend(f"  {s}" for s in doc["status"])
    return "\n".join(lines)


def cmd_analyze(args) -> int:
    if bool(args.path) == bool(args.builtin):
        print("analyze needs exactly one of PATH or --builtin", file=sys.stderr)
        return 1
    try:
        if args.builtin:
            graph = builtin(args.builtin)
        else:
            try:
                with open(args.path, encoding="utf-8") as fh:
                    text = fh.read()
            except OSError as exc:
                print(f"cannot read {args.path}: {exc}", file=sys.stderr)
                return 1
            graph = parse_graph(text)
    except GraphError as exc:
        print(f"invalid input: {exc}", file=sys.stderr)
        return 1
    try:
        report = analyze(graph, _config(args))
    except Exception as exc:  # soundness errors and resource exhaustion
        print(f"analysis failed: {exc}", file=sys.stderr)
        return 2
    if not report.period.upper and not report.index.upper and report.period.lower == 1:
        print("no bound established under the configured caps", file=sys.stderr)
        return 2
    if args.json:
        print(json.dumps(report.to_json_dict(), indent=2))
    else:
        print(render_text(report))
    return 0


def cmd_oracle(args) -> int:
    seed = args.seed
    all_ok = True
    for name, fn in oracle.SUITES.items():
        failures = fn(seed)
        if failures:
            all_ok = False
            print(f"FAIL {name}: {len(failures)} mismatch(es)")
            for f in failures[:5]:
                print(f"  counterexample: {f}")
        else:
            print(f"PASS {name}")
    return 0 if all_ok else 3


def cmd_examples(args) -> int:
    if args.examples_command == "list":
        families: list[tuple[str, str]] = [
            (
                "doubled-cycle-g3..doubled-cycle-g8",
                "genus g, period = index = g-1, resolved",
            )
        ]
        for name in ("k5", "doubled-k4", "hybrid", "k34", "soccer-doubled"):
            gen, per, ind = EXPECTED[name]
            per_s = str(per[0]) if per[0] == per[1] else f"{per[0]}..{per[1]}"
            ind_s = str(ind[0]) if ind[0] == ind[1] else f"{ind[0]}..{ind[1]}"
            state = "resolved" if per[0] == per[1] and ind[0] == ind[1] else "interval"
            families.append(
                (name, f"genus {gen}, period {per_s}, index {ind_s}, {state}")
            )
        for name, info in families:
            print(f"{name:<36} {info}")
        return 0
    try:
        graph = builtin(args.name)
    except GraphError as exc:
        print(f"invalid input: {exc}", file=sys.stderr)
        return 1
    try:
        with open(args.out_path, "w", encoding="utf-8") as fh:
            fh.write(graph.to_json())
            fh.write("\n")
    except OSError as exc:
        print(f"cannot write {args.out_path}: {exc}", file=sys.stderr)
        return 1
    print(f"wrote {graph.name} to {args.out_path}")
    return 0


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    if args.command == "analyze":
        return cmd_analyze(args)
    if args.command == "oracle":
        return cmd_oracle(args)
    return cmd_examples(args)


if __name__ == "__main__":
    sys.exit(main())
