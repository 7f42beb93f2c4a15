"""Slow, obviously-correct reference implementations.

These work on plain ``dict[int, set[int]]`` adjacency and share no code with
the package kernels, so agreement is meaningful.
"""

from __future__ import annotations

from itertools import combinations, combinations_with_replacement, permutations, product

INF = float("inf")


def adjacency(g) -> dict:
    adj = {v: set() for v in range(g.n)}
    for u, v in g.edges():
        adj[u].add(v)
        adj[v].add(u)
    return adj


def bfs_dist(adj: dict, sources) -> dict:
    dist = {s: 0 for s in sources}
    frontier = list(sources)
    while frontier:
        nxt = []
        for u in frontier:
            for w in adj[u]:
                if w not in dist:
                    dist[w] = dist[u] + 1
                    nxt.append(w)
        frontier = nxt
    return dist


def ecc(adj: dict, s) -> float:
    d = bfs_dist(adj, s)
    if len(d) < len(adj):
        return INF
    return max(d.values())


def rad_k(adj: dict, k: int) -> float:
    return min(ecc(adj, s) for s in combinations(adj, k))


def gamma(adj: dict) -> int:
    verts = set(adj)
    for k in range(1, len(adj) + 1):
        for s in combinations(adj, k):
            if set(s).union(*(adj[v] for v in s)) == verts:
                return k
    return 0


def alpha(adj: dict) -> int:
    best = 0
    for k in range(len(adj) + 1):
        for s in combinations(adj, k):
            if all(b not in adj[a] for a, b in combinations(s, 2)):
                best = k
                break
        else:
            return best
    return best


def _white_parts(adj: dict, white: set) -> list:
    parts, seen = [], set()
    for v in sorted(white):
        if v in seen:
            continue
        part = set(bfs_dist({u: adj[u] & white for u in white}, [v]))
        seen |= part
        parts.append(part)
    return parts


def one_round(adj: dict, rule: str, blue: set) -> set:
    white = set(adj) - blue
    if rule == "psd":
        parts = _white_parts(adj, white)
    else:
        parts = [white]
    new = set()
    for v in blue:
        for part in parts:
            cand = adj[v] & part
            if len(cand) == 1:
                new |= cand
    return new


def pt(adj: dict, rule: str, s) -> float:
    blue = set(s)
    if blue == set(adj):
        return 0
    t = 0
    if rule == "pd":
        for v in s:
            blue |= adj[v]
        t = 1
        rule = "zf"
    while blue != set(adj):
        new = one_round(adj, rule, blue)
        if not new:
            return INF
        blue |= new
        t += 1
    return t


def pt_k(adj: dict, rule: str, k: int) -> float:
    return min(pt(adj, rule, s) for s in combinations(adj, k))


def capture_values(adj: dict, k: int) -> dict:
    """Cop-to-move values by plain value iteration over every state."""
    n = len(adj)
    closed = {v: adj[v] | {v} for v in adj}
    configs = list(combinations_with_replacement(range(n), k))
    moves = {c: {tuple(sorted(p)) for p in product(*(closed[v] for v in c))} for c in configs}
    val = {(c, r): (0 if r in c else INF) for c in configs for r in range(n)}
    changed = True
    while changed:
        changed = False
        for c in configs:
            for r in range(n):
                if r in c:
                    continue
                best = INF
                for c2 in moves[c]:
                    if r in c2:
                        best = 1
                        break
                    worst = max(val[(c2, r2)] for r2 in closed[r] if r2 not in c2)
                    best = min(best, 1 + worst)
                if best < val[(c, r)]:
                    val[(c, r)] = best
                    changed = True
    return val


def capt_k(adj: dict, k: int) -> float:
    n = len(adj)
    if k >= n:
        return 0
    val = capture_values(adj, k)
    configs = {c for c, _ in val}
    return min(max(val[(c, r)] for r in range(n)) for c in configs)


def induced_copy(adj: dict, pattern_edges: set, p: int) -> bool:
    for sub in combinations(adj, p):
        for perm in permutations(sub):
            if all((perm[j] in adj[perm[i]]) == ((i, j) in pattern_edges) for i, j in combinations(range(p), 2)):
                return True
    return False


def throttle(adj: dict, rule: str, variant: str, connected: bool = True) -> float:
    """Unpruned throttling over every k, using ``capt_k`` for the cop game."""
    n = len(adj)
    best = INF
    ks = range(1, n) if variant == "prodstar" else range(1, n + 1)
    for k in ks:
        t = capt_k(adj, k) if rule == "cops" else pt_k(adj, rule, k)
        if t == INF:
            continue
        obj = {"sum": k + t, "prodx": k * (1 + t), "prodstar": k * t}[variant]
        best = min(best, obj)
    return best
