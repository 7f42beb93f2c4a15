"""Small-graph catalogs: one representative per isomorphism class.

Graphs are grown one vertex at a time. Every graph on ``n`` vertices arises
from a graph on ``n - 1`` vertices by adding back one of its minimum-degree
vertices, so only neighbor sets that keep the new vertex at minimum degree are
tried. Duplicates are removed with a canonical certificate.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations, permutations, product

import numpy as np

from .errors import UnsupportedOrder
from .graph import Graph, is_connected, iter_bits, mask_of

ENUMERATION_MAX_ORDER = 8


def _pairs(n: int) -> tuple[np.ndarray, np.ndarray]:
    idx = [(i, j) for j in range(1, n) for i in range(j)]
    return np.array([p[0] for p in idx], dtype=np.intp), np.array([p[1] for p in idx], dtype=np.intp)


@lru_cache(maxsize=None)
def _code_layout(n: int):
    i, j = _pairs(n)
    weights = np.array([1 << (len(i) - 1 - t) for t in range(len(i))], dtype=np.int64)
    return i, j, weights


@lru_cache(maxsize=None)
def _block_permutations(sizes: tuple) -> np.ndarray:
    """Every ordering that permutes positions only inside consecutive blocks."""
    blocks = []
    start = 0
    for s in sizes:
        blocks.append(list(permutations(range(start, start + s))))
        start += s
    rows = [sum(choice, ()) for choice in product(*blocks)]
    return np.array(rows, dtype=np.intp).reshape(len(rows), start)


def _adjacency(g: Graph) -> np.ndarray:
    a = np.zeros((g.n, g.n), dtype=np.int64)
    for u, v in g.edges():
        a[u, v] = a[v, u] = 1
    return a


def _best_code(g: Graph, orderings: np.ndarray) -> tuple[int, tuple]:
    """Smallest graph6-order bit code over the given vertex orderings."""
    i, j, weights = _code_layout(g.n)
    if g.n < 2:
        return 0, tuple(orderings[0].tolist())
    a = _adjacency(g)
    codes = (a[orderings[:, i], orderings[:, j]] * weights).sum(axis=1)
    best = int(np.argmin(codes))
    return int(codes[best]), tuple(orderings[best].tolist())


def refined_cells(g: Graph) -> list:
    """Color refinement from degrees; cells come out in an isomorphism-invariant order."""
    colors = list(g.degrees)
    while True:
        sigs = [(colors[v], tuple(sorted(colors[u] for u in iter_bits(g.masks[v])))) for v in range(g.n)]
        ranks = {s: r for r, s in enumerate(sorted(set(sigs)))}
        new = [ranks[s] for s in sigs]
        if len(ranks) == len(set(colors)):
            colors = new
            break
        colors = new
    cells: dict = {}
    for v in range(g.n):
        cells.setdefault(colors[v], []).append(v)
    return [cells[c] for c in sorted(cells)]


def canonical_labeling(g: Graph) -> tuple[tuple, tuple]:
    """Certificate ``(n, code)`` and the ordering ``perm`` (position -> vertex) realizing it.

    Two graphs are isomorphic exactly when their certificates agree.
    """
    if g.n == 0:
        return (0, 0), ()
    cells = refined_cells(g)
    table = _block_permutations(tuple(len(c) for c in cells))
    flat = np.array([v for c in cells for v in c], dtype=np.intp)
    code, order = _best_code(g, flat[table])
    return (g.n, code), order


def canonical_form(g: Graph) -> tuple:
    return canonical_labeling(g)[0]


def brute_canonical_form(g: Graph) -> tuple:
    """Minimum code over all ``n!`` orderings; only practical for tiny graphs."""
    if g.n == 0:
        return (0, 0)
    table = np.array(list(permutations(range(g.n))), dtype=np.intp)
    return (g.n, _best_code(g, table)[0])


def canonical_graph(g: Graph) -> Graph:
    """Relabel ``g`` so that position ``i`` of the canonical ordering becomes vertex ``i``."""
    _, order = canonical_labeling(g)
    perm = [0] * g.n
    for pos, v in enumerate(order):
        perm[v] = pos
    return g.relabel(perm)


def are_isomorphic(g: Graph, h: Graph) -> bool:
    return g.n == h.n and g.size == h.size and canonical_form(g) == canonical_form(h)


def _extensions(g: Graph):
    n = g.n
    deg = g.degrees
    low = min(deg, default=n)
    for d in range(0, min(low + 1, n) + 1):
        forced = mask_of(v for v in range(n) if deg[v] == d - 1)
        free = [v for v in range(n) if deg[v] >= d]
        need = d - bin(forced).count("1")
        if need < 0:
            continue
        for extra in combinations(free, need):
            x = forced | mask_of(extra)
            masks = [m | ((x >> v & 1) << n) for v, m in enumerate(g.masks)]
            yield Graph(n + 1, tuple(masks) + (x,))


def _check_order(n: int):
    if n < 0:
        raise UnsupportedOrder(f"order must be nonnegative, got {n}")
    if n > ENUMERATION_MAX_ORDER:
        raise UnsupportedOrder(f"enumeration guard is n <= {ENUMERATION_MAX_ORDER}, got {n}")


@lru_cache(maxsize=None)
def all_graphs(n: int) -> tuple:
    """All graphs on ``n`` vertices up to isomorphism, canonically labelled and sorted."""
    _check_order(n)
    if n == 0:
        return (Graph.empty(0),)
    found: dict = {}
    for g in all_graphs(n - 1):
        for h in _extensions(g):
            cert, order = canonical_labeling(h)
            if cert not in found:
                perm = [0] * h.n
                for pos, v in enumerate(order):
                    perm[v] = pos
                found[cert] = h.relabel(perm)
    return tuple(found[c] for c in sorted(found, key=lambda c: (found[c].size, c[1])))


@lru_cache(maxsize=None)
def connected_graphs(n: int) -> tuple:
    _check_order(n)
    if n == 0:
        return ()
    return tuple(g for g in all_graphs(n) if is_connected(g))


def enumerate_connected(n: int):
    """Stream one connected graph per isomorphism class on ``n`` vertices."""
    if n < 1:
        raise UnsupportedOrder(f"order must be at least 1, got {n}")
    yield from connected_graphs(n)


def connected_catalog(lo: int, hi: int) -> list:
    return [g for n in range(lo, hi + 1) for g in connected_graphs(n)]
