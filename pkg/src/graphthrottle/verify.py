"""Registry of exhaustive checks tying the structural predicates to the solvers.

Each check walks a fixed scope (a catalog order range or a list of family
instances) and stops at the first graph where the two sides disagree.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass
from fractions import Fraction
from itertools import chain, combinations
from math import ceil
from typing import Callable, Iterable

from .catalog import all_graphs, connected_graphs
from .characterize import (
    CoronaShape,
    Forbidden,
    double_corona_form,
    forbidden_free,
    in_H_family,
    is_matched_sum,
    is_near_matched_sum,
    thcx_low_conditions,
)
from .config import DEFAULT, RunConfig
from .errors import UnknownCheck
from .families import corona_with_k1, full_ary_tree, g1_chain, gnsm, grid, unit_interval
from .graph import Graph, domination_number, encode_graph6, is_chordal, k_radius
from .propagation import Rule, forcing_number, propagation_time
from .pursuit import capt_k
from .throttling import ParamKind, Variant, k_for_pt, pt_param, throttle_value

K = ParamKind
V = Variant


@dataclass(frozen=True)
class TheoremCheck:
    id: str
    scope: str
    passed: bool | None = None
    counterexample: str | None = None
    elapsed_ms: int = 0

    def to_json(self) -> dict:
        return {
            "id": self.id,
            "scope": self.scope,
            "pass": self.passed,
            "counterexample": self.counterexample,
            "elapsed_ms": self.elapsed_ms,
        }


@dataclass(frozen=True)
class CheckDef:
    id: str
    summary: str
    lo: int | None
    hi: int | None
    # (max_n, config) -> graphs to test; predicate(graph, config) -> bool
    source: Callable
    predicate: Callable

    def scope(self, max_n: int | None) -> str:
        if self.lo is None:
            return "family instances"
        hi = self.hi if max_n is None else max_n
        return f"n in [{self.lo}, {hi}]"


def _connected(lo: int) -> Callable:
    def source(hi: int, config: RunConfig) -> Iterable[Graph]:
        return chain.from_iterable(connected_graphs(n) for n in range(lo, hi + 1))
    return source


def _every(lo: int) -> Callable:
    def source(hi: int, config: RunConfig) -> Iterable[Graph]:
        return chain.from_iterable(all_graphs(n) for n in range(lo, hi + 1))
    return source


def _fixed(builder: Callable) -> Callable:
    return lambda hi, config: builder()


def th(g: Graph, kind: ParamKind, variant: Variant, config: RunConfig) -> int:
    return throttle_value(g, kind, variant, 1, config)


# -- predicates ------------------------------------------------------------

def _zf_star_least_k(g, config):
    star = th(g, K.StandardZF, V.ProductNoCost, config)
    return star == k_for_pt(g, K.StandardZF, 1, config) >= ceil(g.n / 2)


def _zf_x_trivial(g, config):
    return th(g, K.StandardZF, V.ProductInitialCost, config) == g.n


def _zf_star_n_minus_1(g, config):
    star = th(g, K.StandardZF, V.ProductNoCost, config)
    return (star == g.n - 1) == forbidden_free(g, Forbidden.P4C4Bowtie)


def _zf_star_half_even(g, config):
    if g.n % 2:
        return True
    star = th(g, K.StandardZF, V.ProductNoCost, config)
    return (star == g.n // 2) == (is_matched_sum(g) is not None)


def _zf_star_half_odd(g, config):
    if g.n % 2 == 0:
        return True
    star = th(g, K.StandardZF, V.ProductNoCost, config)
    return (star == (g.n + 1) // 2) == (is_near_matched_sum(g) is not None)


def _pd_corona(h, config):
    g = corona_with_k1(h)
    gamma = domination_number(h)
    return (
        th(g, K.PowerDom, V.ProductNoCost, config) == 2 * gamma
        and th(g, K.PowerDom, V.ProductInitialCost, config) == 3 * gamma
    )


def _double_corona(g):
    return double_corona_form(g).shape is not CoronaShape.NoForm


def _pd_star_half(g, config):
    return (2 * th(g, K.PowerDom, V.ProductNoCost, config) == g.n) == _double_corona(g)


def _pd_x_below_n(g, config):
    return th(g, K.PowerDom, V.ProductInitialCost, config) < g.n


def _ladder_instances():
    return [grid(2, m) for m in range(2, 9)]


def _pd_x_ladder(g, config):
    m = g.n // 2
    return th(g, K.PowerDom, V.ProductInitialCost, config) == (m if m % 3 == 0 else m + 1)


def random_unit_interval(rng: random.Random, n: int) -> Graph:
    """Connected unit interval graph: consecutive left endpoints differ by at most 1."""
    xs = [Fraction(0)]
    for _ in range(n - 1):
        xs.append(xs[-1] + Fraction(rng.randint(0, 8), 8))
    return unit_interval(xs)


def unit_interval_instances(count: int = 50, seed: int = 20240611, max_n: int = 10) -> list:
    rng = random.Random(seed)
    return [random_unit_interval(rng, rng.randint(2, max_n)) for _ in range(count)]


def _pd_star_gamma(g, config):
    return th(g, K.PowerDom, V.ProductNoCost, config) == domination_number(g)


def _cops_star_gamma(g, config):
    return th(g, K.CopsRobbers, V.ProductNoCost, config) == domination_number(g)


TREE_PARAMS = ((2, 2), (3, 2), (2, 3))


def _tree_instances():
    return [full_ary_tree(r, h) for r, h in TREE_PARAMS]


def _cops_star_full_tree(g, config):
    h = next(h for r, h in TREE_PARAMS if full_ary_tree(r, h) == g)
    return th(g, K.CopsRobbers, V.ProductNoCost, config) == h


def _psd_star_n_minus_1(g, config):
    is_complete = g.size == g.n * (g.n - 1) // 2
    return (th(g, K.PsdZF, V.ProductNoCost, config) == g.n - 1) == is_complete


def _psd_star_n_minus_2(g, config):
    return (th(g, K.PsdZF, V.ProductNoCost, config) == g.n - 2) == in_H_family(g)


def _cops_x_low(target: int):
    def predicate(g, config):
        value = th(g, K.CopsRobbers, V.ProductInitialCost, config)
        return (value == target) == thcx_low_conditions(g, target)
    return predicate


def _gnsm_instance():
    return [gnsm(3, 3, 4)]


def _pd_gnsm(g, config):
    pd, _ = forcing_number(g, Rule.PowerDom, config)
    pt = pt_param(g, K.PowerDom, pd, config)
    branch = propagation_time(g, Rule.PowerDom, {0, 1, 2})
    star = th(g, K.PowerDom, V.ProductNoCost, config)
    return pd == 2 and pt == 4 and 3 * branch == 6 and 6 <= star < pd * pt


def g1_chain_instances() -> list:
    """One copy, then two copies under every subset of the inter-copy green edges."""
    greens = [(1, 8), (1, 12), (5, 8), (5, 12)]
    out = [g1_chain(1)]
    for r in range(len(greens) + 1):
        out += [g1_chain(2, links) for links in combinations(greens, r)]
    return out


def _pd_x_six_sevenths(g, config):
    return 7 * th(g, K.PowerDom, V.ProductInitialCost, config) == 6 * g.n


def _zf_pd_half_coincidence(g, config):
    half = g.n / 2
    lhs = (
        th(g, K.PowerDom, V.ProductNoCost, config) == half
        and th(g, K.StandardZF, V.ProductNoCost, config) == half
        and domination_number(g) == half
    )
    return lhs == _double_corona(g)


def _chordal(lo: int) -> Callable:
    def source(hi, config):
        return (g for n in range(lo, hi + 1) for g in connected_graphs(n) if is_chordal(g))
    return source


def _cops_x_chordal(g, config):
    gamma = domination_number(g)
    for k in range(1, gamma + 1):
        if capt_k(g, k, config) != k_radius(g, k, config):
            return False
    return th(g, K.CopsRobbers, V.ProductInitialCost, config) == 1 + k_radius(g, 1, config)


def _grid_instances():
    return [grid(n, m) for n in range(1, 5) for m in range(n, 5) if n * m >= 2]


REGISTRY: dict = {
    c.id: c
    for c in [
        CheckDef("zf-x-trivial", "initial-cost product zero forcing throttling equals n",
                 2, 6, _connected(2), _zf_x_trivial),
        CheckDef("zf-star-least-k", "no-cost zero forcing throttling is the least k with time 1, at least n/2",
                 2, 6, _connected(2), _zf_star_least_k),
        CheckDef("zf-star-n-minus-1", "no-cost zero forcing throttling n-1 iff no induced P4, C4, bowtie",
                 2, 6, _connected(2), _zf_star_n_minus_1),
        CheckDef("zf-star-half-even", "no-cost zero forcing throttling n/2 iff matched sum",
                 2, 6, _connected(2), _zf_star_half_even),
        CheckDef("zf-star-half-odd", "no-cost zero forcing throttling (n+1)/2 iff a vertex deletion is a matched sum",
                 3, 7, _connected(3), _zf_star_half_odd),
        CheckDef("pd-corona", "power domination throttling of H o K1 is 2 gamma(H) without and 3 gamma(H) with initial cost",
                 2, 6, _connected(2), _pd_corona),
        CheckDef("pd-star-half", "no-cost power domination throttling n/2 iff double corona, C4 o K1 or C4",
                 3, 8, _connected(3), _pd_star_half),
        CheckDef("pd-x-below-n", "initial-cost power domination throttling is below n",
                 3, 7, _connected(3), _pd_x_below_n),
        CheckDef("pd-x-ladder", "initial-cost power domination throttling of P2 x Pm",
                 None, None, _fixed(_ladder_instances), _pd_x_ladder),
        CheckDef("pd-star-grid", "no-cost power domination throttling of small grids equals gamma",
                 None, None, _fixed(_grid_instances), _pd_star_gamma),
        CheckDef("pd-star-unit-interval", "no-cost power domination throttling of unit interval graphs equals gamma",
                 None, None, _fixed(unit_interval_instances), _pd_star_gamma),
        CheckDef("cops-star-unit-interval", "no-cost cop throttling of unit interval graphs equals gamma",
                 None, None, _fixed(unit_interval_instances), _cops_star_gamma),
        CheckDef("cops-star-full-tree", "no-cost cop throttling of full r-ary trees equals the height",
                 None, None, _fixed(_tree_instances), _cops_star_full_tree),
        CheckDef("psd-star-n-minus-1", "no-cost PSD throttling n-1 iff complete",
                 2, 7, _connected(2), _psd_star_n_minus_1),
        CheckDef("psd-star-n-minus-2", "no-cost PSD throttling n-2 iff alpha 2 without induced C5 or house",
                 3, 7, _connected(3), _psd_star_n_minus_2),
        *[
            CheckDef(f"cops-x-low-{t}", f"initial-cost cop throttling equals {t} iff the structural conditions hold",
                     1, 5, _every(1), _cops_x_low(t))
            for t in (1, 2, 3, 4)
        ],
        CheckDef("pd-gnsm", "power domination number, time and throttling bounds of G(3,3,4)",
                 None, None, _fixed(_gnsm_instance), _pd_gnsm),
        CheckDef("pd-x-six-sevenths", "initial-cost power domination throttling of G1 chains is 6n/7",
                 None, None, _fixed(g1_chain_instances), _pd_x_six_sevenths),
        CheckDef("zf-pd-half-coincidence", "zero forcing and power domination throttling and gamma all n/2 iff double corona form",
                 3, 8, _connected(3), _zf_pd_half_coincidence),
        CheckDef("cops-x-chordal", "chordal graphs: capture time equals k-radius up to gamma cops",
                 1, 7, _chordal(1), _cops_x_chordal),
    ]
}


def verify_theorem(check_id: str, max_n: int | None = None, config: RunConfig = DEFAULT) -> TheoremCheck:
    if check_id not in REGISTRY:
        raise UnknownCheck(f"unknown check {check_id!r}")
    c = REGISTRY[check_id]
    hi = c.hi if max_n is None else max_n
    start = time.perf_counter()
    bad = None
    for g in c.source(hi, config):
        if not c.predicate(g, config):
            bad = encode_graph6(g)
            break
    ms = int((time.perf_counter() - start) * 1000)
    return TheoremCheck(c.id, c.scope(max_n), bad is None, bad, ms)


def verify_all(max_n: int | None = None, config: RunConfig = DEFAULT) -> list:
    return [verify_theorem(cid, max_n, config) for cid in REGISTRY]
