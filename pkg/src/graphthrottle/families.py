"""Named graph families and a small fixed gallery.

Vertex numbering is part of each constructor's contract, so witness sets
reported by the solvers can be read back against the construction.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from math import comb

from .errors import BadParams
from .graph import Graph, cartesian_product, corona_with_k1

FAMILY_NAMES = (
    "Path", "Cycle", "Complete", "CompleteBipartite", "Hypercube", "FullAryTree", "Corona",
    "GeneralizedNecklace", "Gnsm", "GeneralizedWheel", "Mgraph", "G1Chain", "Grid", "UnitInterval",
)
GALLERY_NAMES = ("H11", "Bowtie", "House", "C5", "IntervalT")


@dataclass(frozen=True)
class FamilySpec:
    """A family name with its parameters.

    ``params`` holds integers, except for ``UnitInterval`` (left endpoints as
    rationals), ``Corona`` (a single inner ``FamilySpec``) and ``G1Chain``
    (copy count, optionally followed by a tuple of inter-copy green edges).
    """

    name: str
    params: tuple = field(default_factory=tuple)


def _need(ok: bool, msg: str):
    if not ok:
        raise BadParams(msg)


def _ints(name: str, params: tuple, arity: int) -> tuple:
    _need(len(params) == arity, f"{name} takes {arity} parameter(s), got {len(params)}")
    _need(all(isinstance(p, int) and not isinstance(p, bool) for p in params),
          f"{name} parameters must be integers")
    return params


def path(n: int) -> Graph:
    _need(n >= 1, "Path needs n >= 1")
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    _need(n >= 3, "Cycle needs n >= 3")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    _need(n >= 1, "Complete needs n >= 1")
    return Graph.from_edges(n, combinations(range(n), 2))


def complete_bipartite(p: int, q: int) -> Graph:
    """Part sizes ``p`` and ``q``; ids ``0..p-1`` form the first part."""
    _need(p >= 1 and q >= 1, "CompleteBipartite needs p, q >= 1")
    return Graph.from_edges(p + q, [(i, p + j) for i in range(p) for j in range(q)])


def star(leaves: int) -> Graph:
    return complete_bipartite(1, leaves)


def hypercube(d: int) -> Graph:
    _need(d >= 0, "Hypercube needs d >= 0")
    g = Graph.empty(1)
    for _ in range(d):
        g = cartesian_product(g, complete(2))
    return g


def full_ary_tree(r: int, h: int) -> Graph:
    """Breadth-first ids: the children of ``i`` are ``r*i + 1 .. r*i + r``."""
    _need(r >= 1 and h >= 0, "FullAryTree needs r >= 1, h >= 0")
    n = sum(r ** i for i in range(h + 1))
    return Graph.from_edges(n, [((c - 1) // r, c) for c in range(1, n)])


def necklace(j: int, d: int) -> Graph:
    """``j`` blocks of ``K_d - e`` glued in a ring.

    Block ``b`` owns ids ``b*d .. b*d + d - 1``; its missing edge is between
    local vertices ``0`` and ``d - 1``, and local ``d - 1`` links to local ``0``
    of the next block.
    """
    _need(j >= 2 and d >= 4, "GeneralizedNecklace needs j >= 2, d >= 4")
    edges = []
    for b in range(j):
        base = b * d
        edges += [(base + x, base + y) for x, y in combinations(range(d), 2) if (x, y) != (0, d - 1)]
        edges.append((base + d - 1, ((b + 1) % j) * d))
    return Graph.from_edges(j * d, edges)


def gnsm(n: int, s: int, m: int) -> Graph:
    """``K_n`` with each edge replaced by ``s`` internally disjoint paths of length ``m``.

    Branch vertices are ``0..n-1``; interior vertices follow, pair by pair in
    lexicographic order, copy by copy, walking from the smaller branch vertex.
    """
    _need(n >= 2 and s >= 1 and m >= 1, "Gnsm needs n >= 2, s >= 1, m >= 1")
    _need(m > 1 or s == 1, "Gnsm with m = 1 would need parallel edges; use s = 1")
    order = n + s * comb(n, 2) * (m - 1)
    edges = []
    nxt = n
    for a, b in combinations(range(n), 2):
        for _ in range(s):
            chain = [a] + list(range(nxt, nxt + m - 1)) + [b]
            nxt += m - 1
            edges += list(zip(chain, chain[1:]))
    return Graph.from_edges(order, edges)


def generalized_wheel(k: int, r: int) -> Graph:
    """``C_k`` box ``P_r`` plus a hub (id ``k*r``) joined to the first copy of ``C_k``.

    The ``C_k`` copy at path position ``y`` is ``{x*r + y}``; the hub sees ``y = 0``.
    """
    _need(k >= 4 and r >= 1, "GeneralizedWheel needs k >= 4, r >= 1")
    base = cartesian_product(cycle(k), path(r))
    hub = k * r
    return Graph.from_edges(hub + 1, base.edges() + [(x * r, hub) for x in range(k)])


def mgraph(r: int) -> Graph:
    """A 4-cycle with three pendant paths of ``r`` edges, then a leaf on every vertex.

    Cycle vertices are ``0..3``; paths hang from ``0``, ``1`` and ``2``.
    """
    _need(r >= 1, "Mgraph needs r >= 1")
    edges = [(0, 1), (1, 2), (2, 3), (3, 0)]
    nxt = 4
    for anchor in range(3):
        prev = anchor
        for _ in range(r):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
    return corona_with_k1(Graph.from_edges(nxt, edges))


G1_TOP = (0, 1, 2, 3)
G1_BOTTOM = (4, 5, 6)
G1_GREENS = (1, 5)


def g1_greens(copies: int) -> list:
    return [7 * c + g for c in range(copies) for g in G1_GREENS]


def default_g1_links(copies: int) -> tuple:
    return tuple((7 * c + 1, 7 * (c + 1) + 1) for c in range(copies - 1))


def g1_chain(copies: int, links=None) -> Graph:
    """Copies of a ``P_4`` and ``P_3`` joined by an edge between inner vertices.

    Copy ``c`` owns ids ``7c .. 7c+6``: top path ``0-1-2-3``, bottom path
    ``4-5-6`` and the bridge ``1-5`` (the two degree-3 "green" vertices).
    ``links`` lists extra edges between greens of different copies; by default
    the top greens of consecutive copies are joined.
    """
    _need(copies >= 1, "G1Chain needs at least one copy")
    if links is None:
        links = default_g1_links(copies)
    greens = set(g1_greens(copies))
    edges = []
    for c in range(copies):
        o = 7 * c
        edges += [(o, o + 1), (o + 1, o + 2), (o + 2, o + 3), (o + 4, o + 5), (o + 5, o + 6), (o + 1, o + 5)]
    for u, v in links:
        _need(u in greens and v in greens, f"link ({u}, {v}) is not between green vertices")
        _need(u // 7 != v // 7, f"link ({u}, {v}) stays inside one copy")
        edges.append((u, v))
    return Graph.from_edges(7 * copies, sorted(set(tuple(sorted(e)) for e in edges)))


def grid(n: int, m: int) -> Graph:
    _need(n >= 1 and m >= 1, "Grid needs n, m >= 1")
    return cartesian_product(path(n), path(m))


def unit_interval(lefts) -> Graph:
    """Closed unit intervals ``[x, x+1]``; vertex ``i`` is ``lefts[i]``."""
    xs = [Fraction(x) for x in lefts]
    _need(len(xs) >= 1, "UnitInterval needs at least one interval")
    return Graph.from_edges(len(xs), [(i, j) for i, j in combinations(range(len(xs)), 2) if abs(xs[i] - xs[j]) <= 1])


def generate(spec: FamilySpec) -> Graph:
    name, p = spec.name, tuple(spec.params)
    if name == "Path":
        return path(*_ints(name, p, 1))
    if name == "Cycle":
        return cycle(*_ints(name, p, 1))
    if name == "Complete":
        return complete(*_ints(name, p, 1))
    if name == "CompleteBipartite":
        return complete_bipartite(*_ints(name, p, 2))
    if name == "Hypercube":
        return hypercube(*_ints(name, p, 1))
    if name == "FullAryTree":
        return full_ary_tree(*_ints(name, p, 2))
    if name == "GeneralizedNecklace":
        return necklace(*_ints(name, p, 2))
    if name == "Gnsm":
        return gnsm(*_ints(name, p, 3))
    if name == "GeneralizedWheel":
        return generalized_wheel(*_ints(name, p, 2))
    if name == "Mgraph":
        return mgraph(*_ints(name, p, 1))
    if name == "Grid":
        return grid(*_ints(name, p, 2))
    if name == "Corona":
        _need(len(p) == 1 and isinstance(p[0], FamilySpec), "Corona takes one inner FamilySpec")
        return corona_with_k1(generate(p[0]))
    if name == "G1Chain":
        _need(len(p) in (1, 2), "G1Chain takes a copy count and an optional link list")
        _ints(name, p[:1], 1)
        return g1_chain(p[0], None if len(p) == 1 else tuple(tuple(e) for e in p[1]))
    if name == "UnitInterval":
        try:
            return unit_interval(p)
        except (TypeError, ValueError) as exc:
            raise BadParams(f"bad interval endpoint: {exc}") from None
    raise BadParams(f"unknown family {name!r}; choose from {', '.join(FAMILY_NAMES)}")


# -- fixed gallery ----------------------------------------------------------

# figure labels 1..11, shifted to 0-based ids when built
_H11_EDGES = (
    [(1, x) for x in (2, 3, 4, 5)]
    + [(2, x) for x in (3, 5, 6)]
    + [(4, x) for x in (3, 5, 7, 8)]
    + [(5, 9), (7, 3), (7, 11)]
    + [(6, x) for x in (9, 5, 3, 7, 10)]
    + [(8, x) for x in (5, 7, 9, 11)]
    + [(10, x) for x in (7, 9, 11)]
)


def h11() -> Graph:
    return Graph.from_edges(11, [(a - 1, b - 1) for a, b in _H11_EDGES])


def bowtie() -> Graph:
    """Two triangles sharing vertex 0."""
    return Graph.from_edges(5, [(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4)])


def house() -> Graph:
    """Square ``0-1-2-3`` with roof vertex 4 on the edge ``2-3``."""
    return Graph.from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 0), (2, 4), (3, 4)])


def interval_t() -> Graph:
    """Spider with center 0 and legs ``0-1-2``, ``0-3-4``, ``0-5``."""
    return Graph.from_edges(6, [(0, 1), (1, 2), (0, 3), (3, 4), (0, 5)])


def fixed_gallery(name: str) -> Graph:
    builders = {"H11": h11, "Bowtie": bowtie, "House": house, "C5": lambda: cycle(5), "IntervalT": interval_t}
    if name not in builders:
        raise BadParams(f"unknown gallery graph {name!r}; choose from {', '.join(GALLERY_NAMES)}")
    return builders[name]()
