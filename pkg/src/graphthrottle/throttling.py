"""Per-k propagation times and the three throttling objectives.

For a fixed k the search walks k-subsets in lexicographic order and keeps the
first subset with the smallest propagation time. Each propagation run is
capped at the largest time that could still beat the incumbent, which is what
keeps the larger instances tractable.

Cheap facts used throughout (n is the order, gamma the domination number):

* pt(G, n) = 0, and pt(G, k) >= 1 for k < n;
* a set with time 1 dominates, so pt(G, k) >= 2 for k < gamma under every rule;
* power domination and the cop game finish in one round from any dominating
  set, so pt(G, k) = 1 for gamma <= k < n there;
* a standard forcing round colors at most k vertices, so pt(G, k) >= ceil((n-k)/k).
"""

from __future__ import annotations

import enum
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations

from .config import DEFAULT, RunConfig
from .errors import BadArity, Undefined, UnsupportedOrder
from .graph import INF, Graph, _dominating_set, is_connected, mask_of, popcount
from .propagation import Rule, pt_mask
from .pursuit import _least_dominating_multiset, capt_k_witness


class ParamKind(enum.Enum):
    StandardZF = "zf"
    PsdZF = "psd"
    PowerDom = "pd"
    CopsRobbers = "cops"

    @property
    def rule(self):
        return {"zf": Rule.StandardZF, "psd": Rule.PsdZF, "pd": Rule.PowerDom}.get(self.value)


class Variant(enum.Enum):
    Sum = "sum"
    ProductInitialCost = "prodx"
    ProductNoCost = "prodstar"


def objective(variant: Variant, k: int, pt, omega: int = 1):
    if pt == INF:
        return INF
    if variant is Variant.Sum:
        return k + pt
    if variant is Variant.ProductInitialCost:
        return k * (omega + pt)
    return k * pt


@dataclass(frozen=True)
class ThrottlingReport:
    kind: ParamKind
    variant: Variant
    omega: int
    value: int
    optimal_k: int
    witness: tuple
    curve: tuple = field(default_factory=tuple)

    def to_json(self) -> dict:
        return {
            "kind": self.kind.value,
            "variant": self.variant.value,
            "omega": self.omega,
            "value": self.value,
            "k": self.optimal_k,
            "witness": list(self.witness),
            "curve": [[k, _num(pt)] for k, pt in self.curve],
        }


def _num(x):
    return "inf" if x == INF else x


# ---------------------------------------------------------------------------
# pt_Y(G, k)

def _gamma(g: Graph) -> int:
    return popcount(_dominating_set(g))


def pt_lower_bound(g: Graph, kind: ParamKind, k: int) -> int:
    n = g.n
    if k >= n:
        return 0
    lb = 2 if k < _gamma(g) else 1
    if kind is ParamKind.StandardZF:
        lb = max(lb, -(-(n - k) // k))
    return lb


def _scan(args):
    """Best (pt, subset) over k-subsets whose least element is ``first``."""
    g, rule, k, first, cap, lb = args
    best, witness = INF, None
    for rest in combinations(range(first + 1, g.n), k - 1):
        m = 1 << first | mask_of(rest)
        t = pt_mask(g, rule, m, cap)
        if t < best:
            best, witness = t, (first,) + rest
            cap = t - 1
            if t <= lb:
                break
    return best, witness


def _least_dominating_set(g: Graph, k: int) -> tuple:
    full = g.full
    closed = g.closed
    for combo in combinations(range(g.n), k):
        dom = 0
        for v in combo:
            dom |= closed[v]
        if dom == full:
            return combo
    raise AssertionError("k is at least the domination number")


def pt_k_witness(g: Graph, kind: ParamKind, k: int, cap=None, config: RunConfig = DEFAULT):
    """``(pt_Y(G, k), witness)``, or ``(INF, None)`` if the minimum exceeds ``cap``."""
    n = g.n
    if not 1 <= k <= n:
        raise BadArity(f"k={k} outside [1, {n}]")
    if n > config.max_order:
        raise UnsupportedOrder(f"order {n} exceeds search guard {config.max_order}")
    if k == n:
        return 0, tuple(range(n))
    lb = pt_lower_bound(g, kind, k)
    if cap is not None and lb > cap:
        return INF, None
    if kind in (ParamKind.PowerDom, ParamKind.CopsRobbers) and lb == 1:
        if kind is ParamKind.CopsRobbers:
            return 1, _least_dominating_multiset(g, k)
        return 1, _least_dominating_set(g, k)
    if kind is ParamKind.CopsRobbers:
        t, w = capt_k_witness(g, k, config)
        return (t, w) if cap is None or t <= cap else (INF, None)

    rule = kind.rule
    if config.threads > 1 and n - k > 0:
        jobs = [(g, rule, k, first, cap, lb) for first in range(n - k + 1)]
        with ProcessPoolExecutor(max_workers=config.threads) as pool:
            results = [r for r in pool.map(_scan, jobs) if r[1] is not None]
        return min(results, default=(INF, None))
    best = (INF, None)
    for first in range(n - k + 1):
        t, w = _scan((g, rule, k, first, cap, lb))
        if w is not None and t < best[0]:
            best = (t, w)
            cap = t - 1
            if t <= lb:
                break
    return best


def pt_param(g: Graph, kind: ParamKind, k: int, config: RunConfig = DEFAULT):
    return pt_k_witness(g, kind, k, None, config)[0]


def k_for_pt(g: Graph, kind: ParamKind, p: int, config: RunConfig = DEFAULT):
    """Least k with pt_Y(G, k) exactly ``p``, or ``None``.

    pt_Y(G, k) never increases with k, so the scan stops at the first k whose
    time drops to ``p`` or below.
    """
    if p < 0:
        raise BadArity("propagation time is nonnegative")
    n = g.n
    if p == 0:
        return n
    for k in range(1, n + 1):
        if pt_lower_bound(g, kind, k) > p:
            continue
        t, _ = pt_k_witness(g, kind, k, p, config)
        if t <= p:
            return k if t == p else None
    return None


# ---------------------------------------------------------------------------
# throttling

def k_range(g: Graph, kind: ParamKind, variant: Variant) -> range:
    n = g.n
    if variant is Variant.ProductNoCost:
        if n < 2 or not is_connected(g):
            raise Undefined("no-initial-cost product throttling needs a connected graph of order >= 2")
        if kind in (ParamKind.PowerDom, ParamKind.CopsRobbers):
            return range(1, _gamma(g) + 1)
        return range(1, n)
    return range(1, n + 1)


def _known_bound(g: Graph, kind: ParamKind, variant: Variant, omega: int, config: RunConfig):
    """An objective value certainly attained inside the k-range."""
    n = g.n
    gamma = _gamma(g)
    if variant is Variant.ProductNoCost:
        if kind in (ParamKind.PowerDom, ParamKind.CopsRobbers):
            return gamma
        if kind is ParamKind.StandardZF:
            return k_for_pt(g, kind, 1, config)
        # any n - 1 vertices of a connected graph force the last one at once
        return n - 1
    bounds = [objective(variant, n, 0, omega)]
    if kind in (ParamKind.PowerDom, ParamKind.CopsRobbers) and gamma < n:
        bounds.append(objective(variant, gamma, 1, omega))
    return min(bounds)


def _cap_for(variant: Variant, k: int, lb: int, best, omega: int):
    if best == INF:
        return None
    cap = lb - 1
    while objective(variant, k, cap + 1, omega) < best:
        cap += 1
    return cap


def throttle(g: Graph, kind: ParamKind, variant: Variant, omega: int = 1, config: RunConfig = DEFAULT) -> ThrottlingReport:
    if omega < 1:
        raise BadArity("initial cost must be at least 1")
    ks = k_range(g, kind, variant)
    bound = _known_bound(g, kind, variant, omega, config)
    # a sentinel one above the known bound lets the smallest k attaining it win
    best = INF if bound is None else bound + 1
    best_k, witness = None, None
    curve = []
    for k in ks:
        lb = pt_lower_bound(g, kind, k)
        if objective(variant, k, lb, omega) >= best:
            continue
        cap = _cap_for(variant, k, lb, best, omega)
        t, w = pt_k_witness(g, kind, k, cap, config)
        if t == INF:
            continue
        curve.append((k, t))
        val = objective(variant, k, t, omega)
        if val < best:
            best, best_k, witness = val, k, w
    if best_k is None:
        raise Undefined("no finite objective in the k-range")
    if bound is not None and best > bound:
        raise AssertionError(f"search missed the attainable value {bound}")
    return ThrottlingReport(kind, variant, omega, best, best_k, tuple(witness), tuple(curve))


def throttle_value(g: Graph, kind: ParamKind, variant: Variant, omega: int = 1, config: RunConfig = DEFAULT) -> int:
    return throttle(g, kind, variant, omega, config).value


def throttle_curve(g: Graph, kind: ParamKind, variant: Variant, omega: int = 1, config: RunConfig = DEFAULT) -> list:
    """``(k, pt_Y(G, k), objective)`` for every k in the variant's range, no pruning."""
    out = []
    for k in k_range(g, kind, variant):
        t = pt_param(g, kind, k, config)
        out.append((k, t, objective(variant, k, t, omega)))
    return out
