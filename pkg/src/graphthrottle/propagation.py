"""Round-based color change engines: standard zero forcing, PSD forcing, power domination.

Rounds are synchronous: every force available at the start of a round fires
in that round. The bitmask kernels (``*_mask``) are what the searches use; the
set-based functions wrap them and produce full traces.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from itertools import combinations

from .config import DEFAULT, RunConfig
from .errors import BadTrace, EmptySet, UnsupportedOrder
from .graph import INF, Graph, check_vertex_set, closed_neighborhood_mask, iter_bits, mask_of, set_of


class Rule(enum.Enum):
    StandardZF = "zf"
    PsdZF = "psd"
    PowerDom = "pd"


def _single(x: int) -> bool:
    return x != 0 and x & (x - 1) == 0


def white_components(g: Graph, blue: int) -> list:
    """Component masks of the subgraph induced by the white vertices."""
    left = g.full & ~blue
    comps = []
    while left:
        comp = frontier = left & -left
        while frontier:
            nxt = 0
            for v in iter_bits(frontier):
                nxt |= g.masks[v]
            frontier = nxt & left & ~comp
            comp |= frontier
        comps.append(comp)
        left &= ~comp
    return comps


def zf_step_mask(g: Graph, blue: int) -> int:
    new = 0
    masks = g.masks
    for v in iter_bits(blue):
        w = masks[v] & ~blue
        if w and not w & (w - 1):
            new |= w
    return new


def psd_step_mask(g: Graph, blue: int) -> int:
    comps = white_components(g, blue)
    if len(comps) == 1:
        return zf_step_mask(g, blue)
    new = 0
    masks = g.masks
    for v in iter_bits(blue):
        white = masks[v] & ~blue
        if not white:
            continue
        for comp in comps:
            w = white & comp
            if w and not w & (w - 1):
                new |= w
    return new


def step_mask(g: Graph, rule: Rule, blue: int) -> int:
    # power domination continues with standard forcing after its first round
    return psd_step_mask(g, blue) if rule is Rule.PsdZF else zf_step_mask(g, blue)


def pt_mask(g: Graph, rule: Rule, s: int, cap=None):
    """Propagation time from the set ``s``, or ``INF`` if it never finishes.

    With ``cap`` set, also returns ``INF`` once more than ``cap`` rounds are needed.
    """
    full = g.full
    if s == full:
        return 0
    blue = s
    t = 0
    if rule is Rule.PowerDom:
        if not s:
            return INF
        blue = closed_neighborhood_mask(g, s)
        t = 1
    step = psd_step_mask if rule is Rule.PsdZF else zf_step_mask
    while blue != full:
        if cap is not None and t >= cap:
            return INF
        new = step(g, blue)
        if not new:
            return INF
        blue |= new
        t += 1
    return t


def closure_mask(g: Graph, rule: Rule, s: int) -> int:
    """Final blue set reached from ``s``."""
    blue = closed_neighborhood_mask(g, s) if rule is Rule.PowerDom else s
    while True:
        new = step_mask(g, rule, blue)
        if not new:
            return blue
        blue |= new


def sequential_closure(g: Graph, rule: Rule, s, order=None) -> frozenset:
    """Final coloring when forces fire one at a time, scanning forcers in ``order``.

    Independent of the round engine; used to confirm that the final coloring
    does not depend on which forces are chosen first.
    """
    order = list(range(g.n)) if order is None else list(order)
    blue = check_vertex_set(g, s)
    if rule is Rule.PowerDom:
        blue = closed_neighborhood_mask(g, blue)
    progress = True
    while progress:
        progress = False
        for v in order:
            if not blue >> v & 1:
                continue
            if rule is Rule.PsdZF:
                for comp in white_components(g, blue):
                    w = g.masks[v] & comp
                    if _single(w):
                        blue |= w
                        progress = True
                        break
            else:
                w = g.masks[v] & ~blue
                if _single(w):
                    blue |= w
                    progress = True
            if progress:
                break
    return set_of(blue)


@dataclass(frozen=True)
class ForceRecord:
    forcer: int
    forced: int
    round: int


@dataclass(frozen=True)
class PropagationTrace:
    rule: Rule
    initial: frozenset
    rounds: tuple
    forces: tuple = field(default_factory=tuple)
    complete: bool = False

    @property
    def time(self):
        return len(self.rounds) - 1 if self.complete else INF

    @property
    def final(self) -> frozenset:
        return frozenset().union(*self.rounds)

    def round_of(self, v: int):
        for i, r in enumerate(self.rounds):
            if v in r:
                return i
        return None

    def to_json(self) -> dict:
        return {
            "rule": self.rule.value,
            "initial": sorted(self.initial),
            "rounds": [sorted(r) for r in self.rounds],
            "forces": [{"from": f.forcer, "to": f.forced, "round": f.round} for f in self.forces],
            "complete": self.complete,
        }


def _forcer(g: Graph, rule: Rule, blue: int, w: int, comps: list) -> int:
    bit = 1 << w
    for v in iter_bits(g.masks[w] & blue):
        white = g.masks[v] & ~blue
        if rule is Rule.PsdZF:
            comp = next(c for c in comps if c & bit)
            white &= comp
        if white == bit:
            return v
    raise AssertionError(f"no forcer found for {w}")


def step(g: Graph, rule: Rule, blue) -> frozenset:
    """Vertices forced in one round from ``blue`` (for power domination, a forcing round)."""
    return set_of(step_mask(g, rule, check_vertex_set(g, blue)))


def propagate(g: Graph, rule: Rule, s) -> PropagationTrace:
    s_mask = check_vertex_set(g, s)
    if not s_mask:
        raise EmptySet("propagation needs a nonempty initial set")
    full = g.full
    rounds = [s_mask]
    forces = []
    blue = s_mask
    if rule is Rule.PowerDom and blue != full:
        seen = closed_neighborhood_mask(g, s_mask) & ~s_mask
        if not seen:
            # nothing observed, so nothing can be forced either
            return PropagationTrace(rule, set_of(s_mask), (set_of(s_mask),), (), False)
        rounds.append(seen)
        for w in iter_bits(seen):
            forces.append(ForceRecord(min(iter_bits(g.masks[w] & s_mask)), w, 1))
        blue |= seen
    while blue != full:
        new = step_mask(g, rule, blue)
        if not new:
            break
        comps = white_components(g, blue) if rule is Rule.PsdZF else []
        r = len(rounds)
        for w in iter_bits(new):
            forces.append(ForceRecord(_forcer(g, rule, blue, w, comps), w, r))
        rounds.append(new)
        blue |= new
    return PropagationTrace(
        rule=rule,
        initial=set_of(s_mask),
        rounds=tuple(set_of(r) for r in rounds),
        forces=tuple(forces),
        complete=blue == full,
    )


def propagation_time(g: Graph, rule: Rule, s):
    return pt_mask(g, rule, check_vertex_set(g, s))


def is_forcing_set(g: Graph, rule: Rule, s) -> bool:
    return pt_mask(g, rule, check_vertex_set(g, s)) != INF


def forcing_number(g: Graph, rule: Rule, config: RunConfig = DEFAULT) -> tuple:
    """Least size of a set that colors everything, with the lexicographically least such set."""
    if g.n < 1:
        raise UnsupportedOrder("forcing number needs at least one vertex")
    if g.n > config.max_order:
        raise UnsupportedOrder(f"order {g.n} exceeds search guard {config.max_order}")
    full = g.full
    for k in range(1, g.n + 1):
        for combo in combinations(range(g.n), k):
            if closure_mask(g, rule, mask_of(combo)) == full:
                return k, frozenset(combo)
    raise AssertionError("the full vertex set always forces")


def reversal(g: Graph, trace: PropagationTrace) -> frozenset:
    """Ends of the forcing chains of a complete standard zero forcing trace."""
    if trace.rule is not Rule.StandardZF:
        raise BadTrace("reversal is defined for standard zero forcing traces only")
    if not trace.complete:
        raise BadTrace("reversal needs a complete trace")
    forcers = {f.forcer for f in trace.forces}
    return frozenset(v for v in range(g.n) if v not in forcers)
