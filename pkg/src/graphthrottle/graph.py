"""Simple undirected graphs on dense integer vertex ids.

Adjacency is stored as one integer bitmask per vertex, which keeps the
propagation kernels and subset scans cheap. Vertex sets in the public API are
plain ``frozenset`` objects; the ``*_mask`` helpers convert back and forth.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property, lru_cache
from itertools import combinations
from typing import Iterable, Iterator, Sequence

from .config import DEFAULT, RunConfig
from .errors import BadArity, BadMatching, EmptySet, GraphError, ParseError, UnsupportedOrder

VertexSet = frozenset  # frozenset[int] of vertex ids
INF = math.inf

GRAPH6_MAX_ORDER = 62


# ---------------------------------------------------------------------------
# bit helpers

def iter_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def set_of(mask: int) -> frozenset:
    return frozenset(iter_bits(mask))


def popcount(mask: int) -> int:
    return bin(mask).count("1")


# ---------------------------------------------------------------------------
# the graph type

@dataclass(frozen=True)
class Graph:
    n: int
    masks: tuple

    def __post_init__(self):
        if len(self.masks) != self.n:
            raise GraphError(f"expected {self.n} adjacency masks, got {len(self.masks)}")
        full = (1 << self.n) - 1
        for v, m in enumerate(self.masks):
            if m & ~full:
                raise GraphError(f"vertex {v} has a neighbor outside [0, {self.n})")
            if m >> v & 1:
                raise GraphError(f"loop at vertex {v}")
            for u in iter_bits(m):
                if not self.masks[u] >> v & 1:
                    raise GraphError(f"asymmetric adjacency between {u} and {v}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        masks = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) out of range for order {n}")
            if u == v:
                raise GraphError(f"loop at vertex {u}")
            masks[u] |= 1 << v
            masks[v] |= 1 << u
        return cls(n, tuple(masks))

    @classmethod
    def empty(cls, n: int) -> "Graph":
        return cls(n, (0,) * n)

    @property
    def order(self) -> int:
        return self.n

    @property
    def full(self) -> int:
        return (1 << self.n) - 1

    @cached_property
    def closed(self) -> tuple:
        """Closed-neighborhood masks."""
        return tuple(m | (1 << v) for v, m in enumerate(self.masks))

    @cached_property
    def size(self) -> int:
        return sum(popcount(m) for m in self.masks) // 2

    @cached_property
    def degrees(self) -> tuple:
        return tuple(popcount(m) for m in self.masks)

    @property
    def max_degree(self) -> int:
        return max(self.degrees, default=0)

    def degree(self, v: int) -> int:
        return self.degrees[v]

    def neighbors(self, v: int) -> frozenset:
        return set_of(self.masks[v])

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.masks[u] >> v & 1)

    def edges(self) -> list:
        return [(u, v) for u in range(self.n) for v in iter_bits(self.masks[u]) if u < v]

    def vertices(self) -> range:
        return range(self.n)

    def induced(self, vertices: Iterable[int]) -> "Graph":
        """Induced subgraph, relabelled in ascending id order."""
        keep = sorted(set(vertices))
        pos = {v: i for i, v in enumerate(keep)}
        return Graph.from_edges(
            len(keep), [(pos[u], pos[v]) for u, v in self.edges() if u in pos and v in pos]
        )

    def remove_vertex(self, v: int) -> "Graph":
        return self.induced(u for u in range(self.n) if u != v)

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Graph with vertex ``v`` renamed to ``perm[v]``."""
        return Graph.from_edges(self.n, [(perm[u], perm[v]) for u, v in self.edges()])

    def to_json(self) -> dict:
        return {"n": self.n, "edges": [list(e) for e in self.edges()]}

    @classmethod
    def from_json(cls, data: dict) -> "Graph":
        return cls.from_edges(int(data["n"]), [tuple(e) for e in data["edges"]])

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.size})"


def check_vertex_set(g: Graph, s: Iterable[int]) -> int:
    m = mask_of(s)
    if m & ~g.full:
        raise GraphError(f"vertex set {sorted(iter_bits(m))} not contained in [0, {g.n})")
    return m


# ---------------------------------------------------------------------------
# graph6

def _graph6_pairs(n: int) -> Iterator[tuple[int, int]]:
    for j in range(1, n):
        for i in range(j):
            yield i, j


def encode_graph6(g: Graph) -> str:
    if g.n > GRAPH6_MAX_ORDER:
        raise UnsupportedOrder(f"graph6 short form supports order <= {GRAPH6_MAX_ORDER}")
    bits = [1 if g.has_edge(i, j) else 0 for i, j in _graph6_pairs(g.n)]
    bits += [0] * (-len(bits) % 6)
    out = [chr(g.n + 63)]
    for k in range(0, len(bits), 6):
        val = 0
        for b in bits[k:k + 6]:
            val = val << 1 | b
        out.append(chr(val + 63))
    return "".join(out)


def parse_graph6(text: str) -> Graph:
    line = text.strip()
    if line.startswith(">>graph6<<"):
        line = line[len(">>graph6<<"):]
    if not line:
        raise ParseError("empty graph6 string")
    if any(not 63 <= ord(c) <= 126 for c in line):
        raise ParseError(f"byte outside the graph6 range in {line!r}")
    if line[0] == "~":
        raise UnsupportedOrder("only the short graph6 form (order <= 62) is supported")
    n = ord(line[0]) - 63
    npairs = n * (n - 1) // 2
    body = line[1:]
    if len(body) != (npairs + 5) // 6:
        raise ParseError(f"expected {(npairs + 5) // 6} data bytes for order {n}, got {len(body)}")
    bits = []
    for c in body:
        val = ord(c) - 63
        bits.extend((val >> s) & 1 for s in range(5, -1, -1))
    if any(bits[npairs:]):
        raise ParseError("nonzero padding bits")
    edges = [p for p, b in zip(_graph6_pairs(n), bits) if b]
    return Graph.from_edges(n, edges)


# ---------------------------------------------------------------------------
# distances

def closed_neighborhood_mask(g: Graph, mask: int) -> int:
    out = mask
    closed = g.closed
    for v in iter_bits(mask):
        out |= closed[v]
    return out


def closed_neighborhood(g: Graph, s: Iterable[int]) -> frozenset:
    return set_of(closed_neighborhood_mask(g, check_vertex_set(g, s)))


def distance_layers(g: Graph, mask: int) -> list:
    """Masks of vertices at distance 0, 1, 2, ... from ``mask``."""
    layers = [mask]
    reached = mask
    while True:
        nxt = closed_neighborhood_mask(g, layers[-1]) & ~reached
        if not nxt:
            return layers
        layers.append(nxt)
        reached |= nxt


def set_distance(g: Graph, s: Iterable[int], v: int):
    m = check_vertex_set(g, s)
    if not m:
        raise EmptySet("distance to an empty set is undefined")
    for d, layer in enumerate(distance_layers(g, m)):
        if layer >> v & 1:
            return d
    return INF


def ecc_mask(g: Graph, mask: int, limit=None):
    """Eccentricity of a nonempty set given as a mask.

    With ``limit`` set, returns ``INF`` as soon as the value is known to exceed it.
    """
    full = g.full
    reached = mask
    d = 0
    while reached != full:
        if limit is not None and d >= limit:
            return INF
        nxt = closed_neighborhood_mask(g, reached)
        if nxt == reached:
            return INF
        reached = nxt
        d += 1
    return d


def eccentricity(g: Graph, s: Iterable[int]):
    m = check_vertex_set(g, s)
    if not m:
        raise EmptySet("eccentricity of an empty set is undefined")
    return ecc_mask(g, m)


def _guard(g: Graph, config: RunConfig, what: str):
    if g.n > config.max_order:
        raise UnsupportedOrder(f"{what} is exhaustive; order {g.n} exceeds guard {config.max_order}")


def k_radius_witness(g: Graph, k: int, config: RunConfig = DEFAULT):
    if not 1 <= k <= g.n:
        raise BadArity(f"k={k} outside [1, {g.n}]")
    _guard(g, config, "k-radius")
    floor = 0 if k == g.n else 1
    best, witness = INF, None
    for combo in combinations(range(g.n), k):
        m = mask_of(combo)
        e = ecc_mask(g, m, None if best == INF else best - 1)
        if e < best:
            best, witness = e, frozenset(combo)
            if best == floor:
                break
    if witness is None:
        witness = frozenset(range(k))
    return best, witness


def k_radius(g: Graph, k: int, config: RunConfig = DEFAULT):
    return k_radius_witness(g, k, config)[0]


# ---------------------------------------------------------------------------
# domination and independence

def is_dominating(g: Graph, s: Iterable[int]) -> bool:
    return closed_neighborhood_mask(g, check_vertex_set(g, s)) == g.full


@lru_cache(maxsize=4096)
def _dominating_set(g: Graph) -> int:
    full = g.full
    closed = g.closed
    n = g.n
    if n == 0:
        return 0
    # greedy start for the incumbent
    dominated, chosen = 0, 0
    while dominated != full:
        v = max(range(n), key=lambda u: (popcount(closed[u] & ~dominated), -u))
        chosen |= 1 << v
        dominated |= closed[v]
    best = [popcount(chosen), chosen]

    def search(chosen: int, dominated: int, count: int):
        if dominated == full:
            if count < best[0]:
                best[0], best[1] = count, chosen
            return
        undominated = full & ~dominated
        cover = max(popcount(closed[v] & undominated) for v in range(n))
        need = -(-popcount(undominated) // cover)
        if count + need >= best[0]:
            return
        # branch on the undominated vertex with the fewest ways to be dominated
        u = min(iter_bits(undominated), key=lambda w: (popcount(closed[w]), w))
        options = sorted(iter_bits(closed[u]), key=lambda v: -popcount(closed[v] & undominated))
        for v in options:
            search(chosen | 1 << v, dominated | closed[v], count + 1)

    search(0, 0, 0)
    return best[1]


def domination_number(g: Graph, config: RunConfig = DEFAULT) -> int:
    _guard(g, config, "domination number")
    return popcount(_dominating_set(g))


def minimum_dominating_set(g: Graph, config: RunConfig = DEFAULT) -> frozenset:
    _guard(g, config, "domination number")
    return set_of(_dominating_set(g))


@lru_cache(maxsize=4096)
def _independence(g: Graph) -> int:
    masks = g.masks
    best = [0]

    def search(cand: int, size: int):
        if not cand:
            best[0] = max(best[0], size)
            return
        if size + popcount(cand) <= best[0]:
            return
        v = max(iter_bits(cand), key=lambda u: popcount(masks[u] & cand))
        if not masks[v] & cand:
            best[0] = max(best[0], size + popcount(cand))
            return
        search(cand & ~(1 << v) & ~masks[v], size + 1)
        search(cand & ~(1 << v), size)

    search(g.full, 0)
    return best[0]


def independence_number(g: Graph, config: RunConfig = DEFAULT) -> int:
    _guard(g, config, "independence number")
    return _independence(g)


# ---------------------------------------------------------------------------
# connectivity

def component_masks(g: Graph) -> list:
    left = g.full
    comps = []
    while left:
        seed = left & -left
        comp = seed
        frontier = seed
        while frontier:
            nxt = 0
            for v in iter_bits(frontier):
                nxt |= g.masks[v]
            frontier = nxt & ~comp
            comp |= frontier
        comps.append(comp)
        left &= ~comp
    return comps


def components(g: Graph) -> list:
    return [set_of(c) for c in component_masks(g)]


def is_connected(g: Graph) -> bool:
    return len(component_masks(g)) == 1


# ---------------------------------------------------------------------------
# induced subgraphs

def contains_induced(g: Graph, p: Graph):
    """Lexicographically least tuple ``t`` with ``t[i]`` the image of pattern vertex ``i``.

    The image induces exactly ``p`` (edges and non-edges). Returns ``None`` if
    ``g`` has no induced copy of ``p``.
    """
    k = p.n
    if k > g.n:
        return None
    pdeg = p.degrees
    gdeg = g.degrees
    chosen: list = []

    def extend(used: int):
        i = len(chosen)
        if i == k:
            return True
        for u in range(g.n):
            if used >> u & 1 or gdeg[u] < pdeg[i]:
                continue
            if all(p.has_edge(i, j) == g.has_edge(u, chosen[j]) for j in range(i)):
                chosen.append(u)
                if extend(used | 1 << u):
                    return True
                chosen.pop()
        return False

    return tuple(chosen) if extend(0) else None


# ---------------------------------------------------------------------------
# chordality

def is_chordal(g: Graph) -> bool:
    """Maximum cardinality search followed by a perfect elimination check."""
    n = g.n
    weight = [0] * n
    numbered = 0
    order = []
    for _ in range(n):
        v = max((u for u in range(n) if not numbered >> u & 1), key=lambda u: (weight[u], -u))
        order.append(v)
        numbered |= 1 << v
        for u in iter_bits(g.masks[v] & ~numbered):
            weight[u] += 1
    # reverse of MCS order is a perfect elimination ordering iff chordal
    pos = {v: i for i, v in enumerate(order)}
    for v in order:
        earlier = [u for u in iter_bits(g.masks[v]) if pos[u] < pos[v]]
        if len(earlier) < 2:
            continue
        parent = max(earlier, key=lambda u: pos[u])
        rest = mask_of(earlier) & ~(1 << parent)
        if rest & ~g.masks[parent]:
            return False
    return True


# ---------------------------------------------------------------------------
# composition

def disjoint_union(*graphs: Graph) -> Graph:
    edges, offset = [], 0
    for h in graphs:
        edges += [(u + offset, v + offset) for u, v in h.edges()]
        offset += h.n
    return Graph.from_edges(offset, edges)


def cartesian_product(g: Graph, h: Graph) -> Graph:
    """Vertex ``(x, y)`` gets id ``x * h.n + y``."""
    if g.n < 1 or h.n < 1:
        raise GraphError("cartesian product needs two nonempty graphs")
    m = h.n
    edges = []
    for x in range(g.n):
        for y1, y2 in h.edges():
            edges.append((x * m + y1, x * m + y2))
    for x1, x2 in g.edges():
        for y in range(m):
            edges.append((x1 * m + y, x2 * m + y))
    return Graph.from_edges(g.n * m, edges)


def corona_with_k1(g: Graph) -> Graph:
    """Append a leaf ``n + i`` to every vertex ``i``."""
    if g.n < 1:
        raise GraphError("corona needs a nonempty graph")
    n = g.n
    return Graph.from_edges(2 * n, g.edges() + [(i, n + i) for i in range(n)])


def matched_sum_compose(g1: Graph, g2: Graph, matching: Sequence[tuple[int, int]]) -> Graph:
    """Disjoint union of ``g1`` and ``g2`` (offset by ``g1.n``) plus the matching edges."""
    n = g1.n
    if g2.n != n or len(matching) != n:
        raise BadMatching("matched sum needs equal orders and a perfect matching")
    left = sorted(a for a, _ in matching)
    right = sorted(b for _, b in matching)
    if left != list(range(n)) or right != list(range(n)):
        raise BadMatching("matching must pair every vertex of g1 with a distinct vertex of g2")
    base = disjoint_union(g1, g2)
    return Graph.from_edges(2 * n, base.edges() + [(a, n + b) for a, b in matching])
