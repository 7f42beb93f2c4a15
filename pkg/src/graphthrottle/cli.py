"""Command-line front end.

Exit codes: 0 success, 1 usage or input error, 2 search budget exceeded,
3 a verification check found a counterexample.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction

from . import families
from .catalog import all_graphs, connected_graphs
from .config import RunConfig
from .errors import BudgetExceeded
from .graph import INF, Graph, encode_graph6, parse_graph6
from .throttling import ParamKind, Variant, objective, pt_k_witness, throttle, throttle_curve
from .verify import REGISTRY, verify_theorem

EXIT_OK, EXIT_USAGE, EXIT_BUDGET, EXIT_VERIFY = 0, 1, 2, 3

FAMILY_ALIASES = {
    "path": "Path", "cycle": "Cycle", "complete": "Complete", "completebipartite": "CompleteBipartite",
    "kpq": "CompleteBipartite", "hypercube": "Hypercube", "fullarytree": "FullAryTree", "tree": "FullAryTree",
    "corona": "Corona", "necklace": "GeneralizedNecklace", "generalizednecklace": "GeneralizedNecklace",
    "gnsm": "Gnsm", "wheel": "GeneralizedWheel", "generalizedwheel": "GeneralizedWheel", "mgraph": "Mgraph",
    "g1chain": "G1Chain", "grid": "Grid", "unitinterval": "UnitInterval",
}
GALLERY_ALIASES = {name.lower(): name for name in families.GALLERY_NAMES}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _num(x):
    return "inf" if x == INF else x


# -- graph input ---------------------------------------------------------------

def family_spec(name: str, params: str | None) -> families.FamilySpec:
    key = name.replace("-", "").replace("_", "").lower()
    if key not in FAMILY_ALIASES:
        raise UsageError(f"unknown family {name!r}")
    canon = FAMILY_ALIASES[key]
    tokens = [t for t in (params or "").split(",") if t.strip()]
    if canon == "Corona":
        if not tokens:
            raise UsageError("corona needs an inner family, e.g. --params path,4")
        inner = family_spec(tokens[0], ",".join(tokens[1:]))
        return families.FamilySpec("Corona", (inner,))
    try:
        if canon == "UnitInterval":
            return families.FamilySpec(canon, tuple(Fraction(t.strip()) for t in tokens))
        return families.FamilySpec(canon, tuple(int(t) for t in tokens))
    except ValueError:
        raise UsageError(f"bad parameters {params!r}") from None


def _parse_line(line: str) -> Graph:
    line = line.strip()
    if line.startswith("{"):
        return Graph.from_json(json.loads(line))
    return parse_graph6(line)


def read_graphs(args) -> list:
    if getattr(args, "graph6", None):
        return [parse_graph6(args.graph6)]
    if getattr(args, "file", None):
        text = sys.stdin.read() if args.file == "-" else open(args.file).read()
        stripped = text.strip()
        if stripped.startswith("{") and "\n" in stripped:
            try:
                return [Graph.from_json(json.loads(stripped))]
            except json.JSONDecodeError:
                pass
        return [_parse_line(line) for line in text.splitlines() if line.strip()]
    if getattr(args, "family", None):
        key = args.family.lower()
        if key in GALLERY_ALIASES:
            return [families.fixed_gallery(GALLERY_ALIASES[key])]
        return [families.generate(family_spec(args.family, args.params))]
    raise UsageError("no graph given; use --graph6, --file or --family")


def emit_graph(g: Graph, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(g.to_json())
    return encode_graph6(g)


# -- renderers ---------------------------------------------------------------------

def render_report(report, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(report.to_json())
    rows = [(k, pt, objective(report.variant, k, pt, report.omega)) for k, pt in report.curve]
    if fmt == "csv":
        return render_curve(rows, "csv")
    lines = [
        f"kind     {report.kind.value}",
        f"variant  {report.variant.value}",
        f"omega    {report.omega}",
        f"value    {report.value}",
        f"k        {report.optimal_k}",
        f"witness  {' '.join(map(str, report.witness))}",
    ]
    return "\n".join(lines)


def render_curve(rows, fmt: str) -> str:
    if fmt == "json":
        return json.dumps([[k, _num(pt), _num(obj)] for k, pt, obj in rows])
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    if fmt == "csv":
        w.writerow(["k", "pt", "objective"])
        w.writerows([k, _num(pt), _num(obj)] for k, pt, obj in rows)
        return buf.getvalue().rstrip("\n")
    return "\n".join(f"{k:>4} {_num(pt):>6} {_num(obj):>6}" for k, pt, obj in rows)


# -- subcommands ---------------------------------------------------------------------

def _config(args) -> RunConfig:
    return RunConfig.from_env(threads=getattr(args, "threads", None), omega=getattr(args, "omega", None))


def cmd_compute(args) -> int:
    config = _config(args)
    kind = ParamKind(args.kind)
    for g in read_graphs(args):
        if args.k is not None:
            t, w = pt_k_witness(g, kind, args.k, None, config)
            out = {"kind": kind.value, "k": args.k, "pt": _num(t), "witness": list(w) if w else None}
            print(json.dumps(out) if args.out != "csv" else f"k,pt\n{args.k},{_num(t)}")
            if args.dump_game and kind is ParamKind.CopsRobbers:
                from .pursuit import solve_game
                with open(args.dump_game, "w") as fh:
                    fh.write(solve_game(g, args.k, config).to_csv())
            continue
        report = throttle(g, kind, Variant(args.variant), config.omega, config)
        print(render_report(report, args.out))
    return EXIT_OK


def cmd_curve(args) -> int:
    config = _config(args)
    for g in read_graphs(args):
        rows = throttle_curve(g, ParamKind(args.kind), Variant(args.variant), config.omega, config)
        print(render_curve(rows, "csv" if args.out == "graph6" else args.out))
    return EXIT_OK


def cmd_family(args) -> int:
    g = families.generate(family_spec(args.name, args.params))
    print(emit_graph(g, args.out))
    return EXIT_OK


def cmd_gallery(args) -> int:
    key = args.name.lower()
    if key not in GALLERY_ALIASES:
        raise UsageError(f"unknown gallery graph {args.name!r}; choose from {', '.join(families.GALLERY_NAMES)}")
    print(emit_graph(families.fixed_gallery(GALLERY_ALIASES[key]), args.out))
    return EXIT_OK


def cmd_enumerate(args) -> int:
    source = all_graphs if args.all else connected_graphs
    lo = args.min_n
    for n in range(lo, args.max_n + 1):
        for g in source(n):
            print(emit_graph(g, args.out))
    return EXIT_OK


def cmd_verify(args) -> int:
    config = _config(args)
    ids = args.id or list(REGISTRY)
    failed = False
    for cid in ids:
        result = verify_theorem(cid, args.max_n, config)
        print(json.dumps(result.to_json()), flush=True)
        failed |= not result.passed
    return EXIT_VERIFY if failed else EXIT_OK


def cmd_convert(args) -> int:
    for g in read_graphs(args):
        print(emit_graph(g, args.out))
    return EXIT_OK


def _graph_args(p):
    p.add_argument("--graph6", help="graph as a graph6 string")
    p.add_argument("--file", help="file of graph6 lines or edge-list JSON ('-' for stdin)")
    p.add_argument("--family", help="family or gallery name, e.g. path, gnsm, grid, h11")
    p.add_argument("--params", help="comma-separated family parameters")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="graphthrottle", description="Exact propagation times and throttling numbers.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    kinds = [k.value for k in ParamKind]
    variants = [v.value for v in Variant]

    p = sub.add_parser("compute", help="throttling number, or the best time for a fixed k",
                       description="Minimize the throttling objective over initial set sizes k. "
                                   "sum: k + pt; prodx: k(omega + pt); prodstar: k pt with k < n. "
                                   "With --k, report the least propagation or capture time over k-sets instead.")
    _graph_args(p)
    p.add_argument("--kind", choices=kinds, default="zf")
    p.add_argument("--variant", choices=variants, default="sum")
    p.add_argument("--omega", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--threads", type=int)
    p.add_argument("--out", choices=["json", "csv", "table"], default="json")
    p.add_argument("--dump-game", metavar="CSV", help="with --kind cops and --k, write the solved game table")
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("curve", help="objective for every k in range",
                       description="Least time and objective value for every k in the variant's range, without pruning.")
    _graph_args(p)
    p.add_argument("--kind", choices=kinds, default="zf")
    p.add_argument("--variant", choices=variants, default="sum")
    p.add_argument("--omega", type=int)
    p.add_argument("--threads", type=int)
    p.add_argument("--out", choices=["json", "csv", "table"], default="csv")
    p.set_defaults(func=cmd_curve)

    p = sub.add_parser("family", help="build a named family member",
                       description="Build a family graph: " + ", ".join(sorted(FAMILY_ALIASES)) + ".")
    p.add_argument("--name", required=True)
    p.add_argument("--params")
    p.add_argument("--out", choices=["graph6", "json"], default="graph6")
    p.set_defaults(func=cmd_family)

    p = sub.add_parser("gallery", help="print a fixed small graph",
                       description="Fixed graphs: " + ", ".join(families.GALLERY_NAMES) + ".")
    p.add_argument("--name", required=True)
    p.add_argument("--out", choices=["graph6", "json"], default="graph6")
    p.set_defaults(func=cmd_gallery)

    p = sub.add_parser("enumerate", help="list graphs up to isomorphism",
                       description="One graph per isomorphism class, connected only unless --all.")
    p.add_argument("--max-n", type=int, required=True)
    p.add_argument("--min-n", type=int, default=1)
    p.add_argument("--all", action="store_true", help="include disconnected graphs")
    p.add_argument("--out", choices=["graph6", "json"], default="graph6")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("verify", help="run registered exhaustive checks",
                       description="Compare structural predicates with solver output over fixed scopes. "
                                   "Checks: " + ", ".join(REGISTRY) + ".")
    p.add_argument("--id", action="append", choices=list(REGISTRY))
    p.add_argument("--max-n", type=int, help="override the upper order of catalog scopes")
    p.add_argument("--threads", type=int)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("convert", help="convert between graph6 and edge-list JSON")
    _graph_args(p)
    p.add_argument("--out", choices=["graph6", "json"], default="json")
    p.set_defaults(func=cmd_convert)
    return parser


def dispatch(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except BudgetExceeded as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (UsageError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main() -> None:
    sys.exit(dispatch())
