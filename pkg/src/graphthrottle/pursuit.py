"""Exact Cops and Robbers by retrograde analysis.

A round is a cop move (every cop stays or steps to a neighbor) followed by a
robber move. The robber is caught when it shares a vertex with a cop at the
end of either half-round, and that round counts in full. Cop positions are a
sorted tuple because several cops may share a vertex.

Two kinds of state are labelled:

* cop-to-move ``(C, r)`` with ``r`` not covered by ``C``: rounds left under
  optimal play, the cops minimizing;
* robber-to-move ``(C, r)``, same condition: the robber maximizes over its
  closed neighborhood minus the cop vertices.

Labels are assigned in nondecreasing order from a FIFO queue, so the first
label a cop-to-move state receives is its minimum and the last successor of
a robber-to-move state fixes its maximum. Whatever remains unlabelled is a
robber win.
"""

from __future__ import annotations

import csv
import io
from collections import deque
from dataclasses import dataclass
from itertools import combinations_with_replacement, product
from math import comb

from .config import DEFAULT, RunConfig
from .errors import BadArity, BudgetExceeded, EmptySet, GraphError
from .graph import INF, Graph, closed_neighborhood_mask, component_masks, iter_bits, mask_of

UNSET = -1


@dataclass(frozen=True)
class GameTable:
    """Solved values for ``k`` cops on ``graph``.

    ``cop_value[c * n + r]`` is the value of the cop-to-move state with cop
    configuration ``configs[c]`` and robber at ``r``; ``robber_value`` likewise
    for robber-to-move states. Entries are ``0`` when the robber is already
    caught and ``INF`` when the robber escapes forever.
    """

    graph: Graph
    k: int
    configs: tuple
    index: dict
    cop_value: tuple
    robber_value: tuple

    def value(self, cops, robber: int, turn: str = "cops"):
        c = self.index[tuple(sorted(cops))]
        vals = self.cop_value if turn == "cops" else self.robber_value
        return vals[c * self.graph.n + robber]

    def capture_time(self, cops):
        """Robber picks its start after seeing ``cops``; cops then move first."""
        c = self.index[tuple(sorted(cops))]
        n = self.graph.n
        return max(self.cop_value[c * n: (c + 1) * n], default=0)

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["cops", "robber", "turn", "value"])
        n = self.graph.n
        for c, cfg in enumerate(self.configs):
            for turn, vals in (("cops", self.cop_value), ("robber", self.robber_value)):
                for r in range(n):
                    v = vals[c * n + r]
                    w.writerow([" ".join(map(str, cfg)), r, turn, "inf" if v == INF else v])
        return buf.getvalue()


def state_count(n: int, k: int) -> int:
    return comb(n + k - 1, k) * n * 2


def solve_game(g: Graph, k: int, config: RunConfig = DEFAULT) -> GameTable:
    if k < 1:
        raise BadArity(f"need at least one cop, got {k}")
    n = g.n
    if n == 0:
        raise GraphError("the game needs at least one vertex")
    if state_count(n, k) > config.game_budget:
        raise BudgetExceeded(f"{state_count(n, k)} game states exceed budget {config.game_budget}")

    configs = tuple(combinations_with_replacement(range(n), k))
    index = {cfg: i for i, cfg in enumerate(configs)}
    cover = [mask_of(cfg) for cfg in configs]
    closed = [tuple(iter_bits(m)) for m in g.closed]
    moves = []
    for cfg in configs:
        succ = {index[tuple(sorted(p))] for p in product(*(closed[v] for v in cfg))}
        moves.append(tuple(sorted(succ)))

    size = len(configs) * n
    cop_val = [UNSET] * size
    rob_val = [UNSET] * size
    pending = [0] * size
    for c in range(len(configs)):
        for r in range(n):
            if cover[c] >> r & 1:
                cop_val[c * n + r] = rob_val[c * n + r] = 0
            else:
                pending[c * n + r] = bin(g.closed[r] & ~cover[c]).count("1")

    queue: deque = deque()
    for c in range(len(configs)):
        reach = 0
        for c2 in moves[c]:
            reach |= cover[c2]
        for r in iter_bits(reach & ~cover[c]):
            cop_val[c * n + r] = 1
            queue.append(c * n + r)

    while queue:
        s = queue.popleft()
        c2, r2 = divmod(s, n)
        v = cop_val[s]
        # robber-to-move states (c2, r) that can step to r2
        for r in iter_bits(g.closed[r2] & ~cover[c2]):
            t = c2 * n + r
            pending[t] -= 1
            if pending[t]:
                continue
            rob_val[t] = v
            # cop-to-move predecessors: cops moving into c2 while the robber sits at r
            for c in moves[c2]:
                if cover[c] >> r & 1:
                    continue
                u = c * n + r
                if cop_val[u] == UNSET:
                    cop_val[u] = v + 1
                    queue.append(u)

    fix = lambda vals: tuple(INF if x == UNSET else x for x in vals)
    return GameTable(g, k, configs, index, fix(cop_val), fix(rob_val))


def capture_time_from(g: Graph, s, config: RunConfig = DEFAULT):
    cops = tuple(sorted(s))
    if not cops:
        raise EmptySet("need at least one cop")
    if any(not 0 <= v < g.n for v in cops):
        raise GraphError(f"cop positions {cops} outside [0, {g.n})")
    if mask_of(cops) == g.full:
        return 0
    return solve_game(g, len(cops), config).capture_time(cops)


def _least_dominating_multiset(g: Graph, k: int):
    for cfg in combinations_with_replacement(range(g.n), k):
        if closed_neighborhood_mask(g, mask_of(cfg)) == g.full:
            return cfg
    return None


def capt_k_witness(g: Graph, k: int, config: RunConfig = DEFAULT, table: GameTable | None = None):
    """``(capt_k, lexicographically least optimal cop placement)``."""
    if k < 1:
        raise BadArity(f"need at least one cop, got {k}")
    n = g.n
    if k >= n:
        return 0, tuple(range(n)) + (n - 1,) * (k - n)
    # with k < n some vertex is free, so one round is the best possible
    dom = _least_dominating_multiset(g, k)
    if dom is not None:
        return 1, dom
    table = table or solve_game(g, k, config)
    best, witness = INF, table.configs[0]
    for c, cfg in enumerate(table.configs):
        t = max(table.cop_value[c * n: (c + 1) * n])
        if t < best:
            best, witness = t, cfg
    return best, witness


def capt_k(g: Graph, k: int, config: RunConfig = DEFAULT):
    return capt_k_witness(g, k, config)[0]


def cop_number(g: Graph, config: RunConfig = DEFAULT) -> int:
    """Sum over components of the fewest cops that guarantee capture there."""
    total = 0
    for comp in component_masks(g):
        h = g.induced(iter_bits(comp))
        k = 1
        while capt_k(h, k, config) == INF:
            k += 1
        total += k
    return total
