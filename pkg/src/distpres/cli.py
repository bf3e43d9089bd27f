"""``dp`` command line.

Exit codes: 0 success, 1 a proved statement failed in a sweep, 2 parse error,
3 disconnected input, 4 input too large, 5 unknown suite or conjecture.
"""

from __future__ import annotations

import argparse
import json
import re
import sys

from . import families
from .codecs import FORMATS, emit_graph6
from .decomposition import ddp_via_decomposition, split_at_cut_vertex
from .errors import Disconnected, GraphError, ParseError, TooLarge
from .graph import Graph, components, cut_vertices, is_connected, iter_bits, members
from .isometry import dp_profile
from .sweeps import (
    CONJECTURES,
    THEOREM_SUITES,
    UnknownConjecture,
    UnknownSuite,
    analyze,
    run_conjecture,
    run_theorem,
)

EXIT_OK, EXIT_VIOLATION, EXIT_PARSE, EXIT_DISCONNECTED, EXIT_TOO_LARGE, EXIT_UNKNOWN = range(6)


def named_graph(name: str) -> Graph:
    """``figure1``, ``C<k>``, ``P<n>`` or ``K<n>``."""
    if name == "figure1":
        return families.figure1_graph()
    m = re.fullmatch(r"([CPK])(\d+)", name)
    if m is None:
        raise ParseError(f"unknown named graph {name!r}")
    make = {"C": families.cycle, "P": families.path, "K": families.complete}[m[1]]
    try:
        return make(int(m[2]))
    except GraphError as exc:
        raise ParseError(f"named graph {name!r}: {exc}") from exc


def _read_graph(args) -> Graph:
    if args.named:
        return named_graph(args.named)
    if args.input in (None, "-"):
        text = sys.stdin.read()
    else:
        with open(args.input) as fh:
            text = fh.read()
    return FORMATS[args.format][0](text)


def _require_connected(g: Graph) -> None:
    if not is_connected(g):
        raise Disconnected(f"input graph has {len(components(g))} components", len(components(g)))


def _dump(obj) -> None:
    json.dump(obj, sys.stdout, indent=2, sort_keys=False)
    sys.stdout.write("\n")


def cmd_analyze(args) -> int:
    g = _read_graph(args)
    _require_connected(g)
    if args.max_n is not None and g.n > args.max_n and not args.force:
        raise TooLarge(f"n={g.n} exceeds --max-n {args.max_n}")
    _dump(analyze(g, skip_dp=args.skip_dp, force=args.force))
    return EXIT_OK


def _sweep_kwargs(args) -> dict:
    return {"seed": args.seed, "max_n": args.max_n, "labeled": args.labeled, "path": args.catalog}


def _report_sweep(res, as_json: bool) -> None:
    if as_json:
        _dump(res.to_json())
        return
    print(f"{res.name}: {res.checked} graphs from {res.catalog} (seed {res.seed}, {res.runtime:.1f}s)")
    print("  cells: " + ", ".join(f"{k}={v}" for k, v in res.counts.items()))
    print(f"  violations: {len(res.violations)}")
    for v in res.violations[:20]:
        print(f"    VIOLATION {json.dumps(v)}")
    if res.findings:
        print(f"  findings: {len(res.findings)}")
        for f in res.findings[:20]:
            print(f"    FINDING {json.dumps(f)}")
    for key, value in res.notes.items():
        print(f"  {key}: {json.dumps(value)}")


def cmd_theorems(args) -> int:
    kw = _sweep_kwargs(args)
    if args.suite == "thm-ckl":
        kw = {"seed": args.seed, "budget": args.budget}
    res = run_theorem(args.suite, **kw)
    _report_sweep(res, args.json)
    return EXIT_OK if res.ok else EXIT_VIOLATION


def cmd_conjectures(args) -> int:
    kw = _sweep_kwargs(args)
    if args.name == "dp-fraction":
        kw["max_n"] = args.max_n or 6
        kw["labeled"] = not args.unlabeled
    res = run_conjecture(args.name, **kw)
    _report_sweep(res, args.json)
    return EXIT_OK if res.ok else EXIT_VIOLATION


def cmd_family(args) -> int:
    if args.enumerate:
        specs = families.enumerate_ckl(args.k, args.l, limit=args.limit)
    else:
        specs = [families.sample_ckl(args.k, args.l, args.seed)]
    for spec in specs:
        built = families.build_ckl(spec)
        line = {
            "k": spec.k,
            "attachments": [{"start": a.start, "joins": list(a.joins)} for a in spec.attachments],
            "graph6": emit_graph6(built.graph),
            "cycle": members(built.cycle),
            "added": members(built.added),
        }
        print(json.dumps(line))
    return EXIT_OK


def cmd_decompose(args) -> int:
    g = _read_graph(args)
    _require_connected(g)
    cuts = cut_vertices(g)
    splits = []
    for x in iter_bits(cuts):
        s = split_at_cut_vertex(g, x)
        splits.append({"x": x, "left": members(s.left), "right": members(s.right)})
    out = {
        "schema": 1,
        "graph6": emit_graph6(g),
        "cut_vertices": members(cuts),
        "splits": splits,
        "ddp_decomposition": sorted(ddp_via_decomposition(g)),
    }
    if args.check:
        out["ddp_brute_force"] = sorted(dp_profile(g, force=args.force).ddp)
        out["agree"] = out["ddp_brute_force"] == out["ddp_decomposition"]
    _dump(out)
    return EXIT_OK if out.get("agree", True) else EXIT_VIOLATION


def _add_input(p: argparse.ArgumentParser) -> None:
    p.add_argument("input", nargs="?", help="graph file ('-' or omitted: stdin)")
    p.add_argument("--format", choices=sorted(FORMATS), default="edgelist")
    p.add_argument("--named", help="built-in graph: figure1, C<k>, P<n>, K<n>")
    p.add_argument("--force", action="store_true", help="allow exponential work beyond n=20")


def _add_sweep(p: argparse.ArgumentParser) -> None:
    p.add_argument("--max-n", type=int, default=None)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--labeled", action="store_true", help="labelled exhaustive catalog (n <= 7)")
    p.add_argument("--catalog", help="graph6 file to sweep instead of the bundled catalog")
    p.add_argument("--json", action="store_true")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="dp", description=__doc__,
                                     formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="JSON report for one graph")
    _add_input(p)
    p.add_argument("--skip-dp", action="store_true", help="omit the exponential dp profile")
    p.add_argument("--max-n", type=int, default=None)
    p.add_argument("--json", action="store_true", help="accepted for symmetry; output is always JSON")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("theorems", help="sweep a proved statement for counterexamples")
    p.add_argument("suite", help=", ".join(THEOREM_SUITES))
    p.add_argument("--budget", type=int, default=500, help="thm-ckl: specs per (k, l)")
    _add_sweep(p)
    p.set_defaults(func=cmd_theorems)

    p = sub.add_parser("conjectures", help="sweep an open conjecture or a proved degree bound")
    p.add_argument("name", help=", ".join(CONJECTURES))
    p.add_argument("--unlabeled", action="store_true", help="dp-fraction over isomorphism classes")
    _add_sweep(p)
    p.set_defaults(func=cmd_conjectures)

    p = sub.add_parser("family", help="generate graph families")
    p.add_argument("family", choices=["ckl"])
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--l", type=int, required=True)
    p.add_argument("--enumerate", action="store_true")
    p.add_argument("--limit", type=int, default=None)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_family)

    p = sub.add_parser("decompose", help="cut-vertex splits and composed ddp")
    _add_input(p)
    p.add_argument("--check", action="store_true", help="also compute ddp by brute force")
    p.set_defaults(func=cmd_decompose)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except Disconnected as exc:
        print(f"disconnected: {exc}", file=sys.stderr)
        return EXIT_DISCONNECTED
    except TooLarge as exc:
        print(f"too large: {exc}", file=sys.stderr)
        return EXIT_TOO_LARGE
    except (UnknownSuite, UnknownConjecture) as exc:
        print(exc.args[0], file=sys.stderr)
        return EXIT_UNKNOWN


if __name__ == "__main__":
    sys.exit(main())
