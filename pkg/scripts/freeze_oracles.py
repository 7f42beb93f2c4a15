"""Recompute the reference values in tests/data/frozen.json from the slow oracles.

Only the oracles in tests/oracles.py and networkx are used here, never the
package's own solvers, so the frozen file is an independent record.

    python scripts/freeze_oracles.py
"""

from __future__ import annotations

import json
import sys
from pathlib import Path

import networkx as nx

ROOT = Path(__file__).resolve().parents[1]
sys.path.insert(0, str(ROOT / "tests"))

import oracles  # noqa: E402


def adj_of(g: nx.Graph) -> dict:
    return {v: set(g[v]) for v in sorted(g)}


def atlas_counts() -> dict:
    counts = {}
    for g in nx.graph_atlas_g():
        n = g.number_of_nodes()
        if n == 0:
            continue
        tot, con = counts.get(n, (0, 0))
        counts[n] = (tot + 1, con + (1 if nx.is_connected(g) else 0))
    return {str(n): list(v) for n, v in sorted(counts.items())}


def house() -> nx.Graph:
    return nx.Graph([(0, 1), (1, 2), (2, 3), (3, 0), (2, 4), (3, 4)])


def matched_halves(adj: dict) -> list:
    from itertools import combinations

    n = len(adj)
    return [list(s) for s in combinations(adj, n // 2) if oracles.pt(adj, "zf", s) == 1]


def near_matched_vertex(g: nx.Graph):
    for v in sorted(g):
        h = nx.convert_node_labels_to_integers(g.subgraph([u for u in g if u != v]), ordering="sorted")
        if h.number_of_nodes() % 2 == 0 and matched_halves(adj_of(h)):
            return v
    return None


def wheel(k: int, r: int) -> nx.Graph:
    g = nx.cartesian_product(nx.cycle_graph(k), nx.path_graph(r))
    g = nx.convert_node_labels_to_integers(g, ordering="sorted")
    hub = k * r
    g.add_edges_from((x * r, hub) for x in range(k))
    return g


def main() -> None:
    p = lambda n: adj_of(nx.path_graph(n))
    c = lambda n: adj_of(nx.cycle_graph(n))
    bowtie = nx.Graph([(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4)])
    pat = {
        "P4": {(0, 1), (1, 2), (2, 3)},
        "C4": {(0, 1), (1, 2), (2, 3), (0, 3)},
        "bowtie": {(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4)},
        "C5": {(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)},
    }
    gw = adj_of(wheel(6, 2))
    c4_vals = oracles.capture_values(c(4), 1)
    frozen = {
        "graph6": {
            "K1": nx.to_graph6_bytes(nx.empty_graph(1), header=False).decode().strip(),
            "K2": nx.to_graph6_bytes(nx.complete_graph(2), header=False).decode().strip(),
            "2K1": nx.to_graph6_bytes(nx.empty_graph(2), header=False).decode().strip(),
            "P3": nx.to_graph6_bytes(nx.path_graph(3), header=False).decode().strip(),
            "C4": nx.to_graph6_bytes(nx.cycle_graph(4), header=False).decode().strip(),
        },
        "rad2_P7": oracles.rad_k(p(7), 2),
        "house_induced_C5": oracles.induced_copy(adj_of(house()), pat["C5"], 5),
        "house_induced_C4": oracles.induced_copy(adj_of(house()), pat["C4"], 4),
        "house_chordal": nx.is_chordal(house()),
        "bowtie_chordal": nx.is_chordal(bowtie),
        "catalog_counts": atlas_counts(),
        "pd_P5_center_time": oracles.pt(p(5), "pd", [2]),
        "psd_C6_single_time": str(oracles.pt(c(6), "psd", [0])),
        "psd_C6_pair_time": oracles.pt(c(6), "psd", [0, 1]),
        "c4_one_cop_values": sorted({str(v) for (cfg, r), v in c4_vals.items() if r not in cfg}),
        "c4_opposite_capture": max(oracles.capture_values(c(4), 2)[((0, 2), r)] for r in range(4)),
        "k4_matched_halves": matched_halves(adj_of(nx.complete_graph(4))),
        "p7_near_matched_vertex": near_matched_vertex(nx.path_graph(7)),
        "k5_near_matched_vertex": near_matched_vertex(nx.complete_graph(5)),
        "gw62_induced": {name: oracles.induced_copy(gw, e, 5 if name in ("bowtie", "C5") else 4) for name, e in pat.items()},
        "p4_alpha": oracles.alpha(p(4)),
        "p4_psd_prodstar": oracles.throttle(p(4), "psd", "prodstar"),
        "cops_prodx_P5": oracles.throttle(p(5), "cops", "prodx"),
        "cops_prodx_P7": oracles.throttle(p(7), "cops", "prodx"),
        "cops_sum_P7": oracles.throttle(p(7), "cops", "sum"),
        "p10_t10_reversal": sorted({0, 3, 4, 7, 8}),
    }
    out = ROOT / "tests" / "data" / "frozen.json"
    out.write_text(json.dumps(frozen, indent=1, sort_keys=True) + "\n")
    print(f"wrote {out}")


if __name__ == "__main__":
    main()
