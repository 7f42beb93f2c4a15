"""Throttling curves for a few families, written as one CSV.

Columns: graph, n, kind, variant, k, pt, objective. Rows cover every k in
the variant's range, so the minimum over a (graph, kind, variant) block is
the throttling number.

    python3 scripts/family_curves.py [--out curves.csv] [--max-order 12]
"""

import argparse
import csv
import sys

from graphthrottle.families import complete, cycle, g1_chain, grid, h11, hypercube, path
from graphthrottle.graph import INF
from graphthrottle.throttling import ParamKind, Variant, throttle_curve


def instances(max_order: int):
    for n in range(4, max_order + 1, 2):
        yield f"P{n}", path(n)
        yield f"C{n}", cycle(n)
    for n in (4, 6):
        yield f"K{n}", complete(n)
    for m in range(2, max_order // 2 + 1):
        yield f"P2xP{m}", grid(2, m)
    yield "Q3", hypercube(3)
    yield "H11", h11()
    yield "G1x2", g1_chain(2)


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--out", default="-", help="CSV path, '-' for stdout")
    parser.add_argument("--max-order", type=int, default=12)
    args = parser.parse_args()

    fh = sys.stdout if args.out == "-" else open(args.out, "w", newline="")
    w = csv.writer(fh, lineterminator="\n")
    w.writerow(["graph", "n", "kind", "variant", "k", "pt", "objective"])
    for name, g in instances(args.max_order):
        for kind in ParamKind:
            for variant in Variant:
                for k, pt, obj in throttle_curve(g, kind, variant):
                    w.writerow([name, g.n, kind.value, variant.value, k,
                                "inf" if pt == INF else pt, "inf" if obj == INF else obj])
    if fh is not sys.stdout:
        fh.close()
    return 0


if __name__ == "__main__":
    sys.exit(main())
