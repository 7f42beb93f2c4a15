"""Structural predicates that pin down extreme throttling values.

Everything here is decided from the graph's structure alone (matchings,
pendant vertices, forbidden induced subgraphs, distances). The verification
harness compares these predicates against the solvers.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from itertools import combinations

from .errors import BadArity, Undefined
from .families import bowtie, complete, cycle, house, path
from .graph import (
    Graph,
    closed_neighborhood_mask,
    component_masks,
    contains_induced,
    corona_with_k1,
    distance_layers,
    domination_number,
    independence_number,
    is_connected,
    iter_bits,
    mask_of,
    popcount,
)
from .catalog import are_isomorphic


# -- matched sums -------------------------------------------------------------

@dataclass(frozen=True)
class MatchedSum:
    """``g`` is ``g[side]`` and ``g[rest]`` joined by the perfect matching ``matching``."""

    side: frozenset
    matching: tuple


def find_matched_sum(g: Graph):
    """Least half ``A`` (as a sorted tuple) whose cross edges form a perfect matching.

    Works for any graph of even order, connected or not.
    """
    n = g.n
    if n % 2 or n == 0:
        return None
    half = n // 2
    for combo in combinations(range(n), half):
        a = mask_of(combo)
        b = g.full & ~a
        if all(popcount(g.masks[v] & b) == 1 for v in combo) and all(
            popcount(g.masks[v] & a) == 1 for v in iter_bits(b)
        ):
            pairs = tuple((v, (g.masks[v] & b).bit_length() - 1) for v in combo)
            return MatchedSum(frozenset(combo), pairs)
    return None


def is_matched_sum(g: Graph):
    if g.n < 2 or g.n % 2 or not is_connected(g):
        raise Undefined("matched-sum test needs a connected graph of even order")
    return find_matched_sum(g)


def is_near_matched_sum(g: Graph):
    """Least vertex whose deletion leaves a matched-sum graph, or ``None``."""
    if g.n % 2 == 0 or not is_connected(g):
        raise Undefined("near matched-sum test needs a connected graph of odd order")
    for v in range(g.n):
        if find_matched_sum(g.remove_vertex(v)) is not None:
            return v
    return None


# -- forbidden induced subgraphs -------------------------------------------------

class Forbidden(enum.Enum):
    P4C4Bowtie = "p4c4bowtie"
    C5House = "c5house"


def patterns(family: Forbidden) -> tuple:
    if family is Forbidden.P4C4Bowtie:
        return (path(4), cycle(4), bowtie())
    return (cycle(5), house())


def forbidden_free(g: Graph, family: Forbidden) -> bool:
    return all(contains_induced(g, p) is None for p in patterns(family))


def in_H_family(g: Graph) -> bool:
    return (
        g.n >= 2
        and is_connected(g)
        and independence_number(g) == 2
        and forbidden_free(g, Forbidden.C5House)
    )


# -- double coronas -------------------------------------------------------------

class CoronaShape(enum.Enum):
    DoubleCorona = "double-corona"
    C4Corona = "c4-corona"
    C4 = "c4"
    NoForm = "none"


@dataclass(frozen=True)
class CoronaForm:
    shape: CoronaShape
    core: Graph | None = None


def peel_corona(g: Graph):
    """``X`` with ``g = X o K_1`` (ids of ``X`` in ascending order), or ``None``."""
    n = g.n
    if n % 2 or n == 0:
        return None
    if n == 2:
        return Graph.empty(1) if g.size == 1 else None
    leaves = [v for v in range(n) if g.degrees[v] == 1]
    if len(leaves) != n // 2:
        return None
    supports = {(g.masks[v]).bit_length() - 1 for v in leaves}
    if len(supports) != len(leaves) or supports & set(leaves):
        return None
    return g.induced(sorted(supports))


def double_corona_form(g: Graph) -> CoronaForm:
    if g.n < 2 or not is_connected(g):
        raise Undefined("double corona test needs a connected graph of order >= 2")
    if g.n == 4 and are_isomorphic(g, cycle(4)):
        return CoronaForm(CoronaShape.C4, cycle(4))
    if g.n == 8 and are_isomorphic(g, corona_with_k1(cycle(4))):
        return CoronaForm(CoronaShape.C4Corona, cycle(4))
    x = peel_corona(g)
    h = peel_corona(x) if x is not None else None
    if h is None or not is_connected(h):
        return CoronaForm(CoronaShape.NoForm)
    return CoronaForm(CoronaShape.DoubleCorona, h)


# -- small product cop throttling values ---------------------------------------------

def _is_union_of(g: Graph, sizes: tuple) -> bool:
    """``g`` is a disjoint union of complete graphs with the given orders."""
    comps = component_masks(g)
    if sorted(popcount(c) for c in comps) != sorted(sizes):
        return False
    return all(are_isomorphic(g.induced(iter_bits(c)), complete(popcount(c))) for c in comps)


def _center_within_two(g: Graph, strict: bool) -> bool:
    for z in range(g.n):
        layers = distance_layers(g, 1 << z)
        if len(layers) > 3 or popcount(sum(layers)) != g.n:
            continue
        near = closed_neighborhood_mask(g, 1 << z)
        ok = True
        for w in iter_bits(g.full & ~near):
            nw = g.closed[w]
            if not any(
                (nw & ~g.closed[u]) == 0 and (not strict or nw != g.closed[u])
                for u in iter_bits(near)
            ):
                ok = False
                break
        if ok:
            return True
    return False


def _literal(g: Graph, target: int, strict: bool) -> bool:
    from .pursuit import capt_k, cop_number

    gamma = domination_number(g) if g.n else 0
    if target == 1:
        return _is_union_of(g, (1,))
    if target == 2:
        return _is_union_of(g, (1, 1)) or gamma == 1
    if target == 3:
        if _is_union_of(g, (1, 1, 1)) or _is_union_of(g, (1, 2)):
            return True
        return gamma >= 2 and _center_within_two(g, strict)
    if target == 4:
        if _is_union_of(g, (1, 1, 1, 1)) or _is_union_of(g, (1, 1, 2)):
            return True
        if gamma == 2 and capt_k(g, 1) >= 3:
            return True
        return cop_number(g) == 1 and capt_k(g, 1) == 3
    raise BadArity(f"target must be 1, 2, 3 or 4, got {target}")


def thcx_low_conditions(g: Graph, target: int, strict: bool = False) -> bool:
    """Structural test for a product cop throttling value of ``target``.

    The case lists are cumulative: a graph meeting the conditions of a smaller
    target is excluded from the larger ones. ``strict`` selects proper
    containment of closed neighborhoods in the distance-two case.
    """
    if target not in (1, 2, 3, 4):
        raise BadArity(f"target must be 1, 2, 3 or 4, got {target}")
    if g.n == 0:
        return False
    return _literal(g, target, strict) and not any(_literal(g, t, strict) for t in range(1, target))
