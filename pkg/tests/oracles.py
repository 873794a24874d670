"""Independent reference implementations used to check the library.

Nothing here imports the search or the bitmask verifier; sums are compared
with itertools over explicit subsets.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations, product


def naive_sum_distinct(labels) -> bool:
    seen = set()
    for r in range(len(labels) + 1):
        for sub in combinations(labels, r):
            s = sum(sub)
            if s in seen:
                return False
            seen.add(s)
    return True


def naive_signed_zero(labels) -> bool:
    for coeffs in product((-1, 0, 1), repeat=len(labels)):
        if any(coeffs) and sum(c * x for c, x in zip(coeffs, labels)) == 0:
            return True
    return False


def pendant_groups(n, edges):
    """Edges to leaves, grouped by the non-leaf endpoint; permuting a group is a graph automorphism."""
    deg = [0] * n
    for u, v in edges:
        deg[u] += 1
        deg[v] += 1
    groups = {}
    for i, (u, v) in enumerate(edges):
        if deg[v] == 1 and deg[u] > 1:
            groups.setdefault(u, []).append(i)
        elif deg[u] == 1 and deg[v] > 1:
            groups.setdefault(v, []).append(i)
    return [g for g in groups.values() if len(g) > 1]


@lru_cache(maxsize=None)
def sum_distinct_set_exists(d: int, k: int) -> bool:
    """Does 1..k contain a sum-distinct set of size d?  Increasing-order DFS."""

    def grow(chosen, start):
        if len(chosen) == d:
            return True
        for x in range(start, k + 1):
            if naive_sum_distinct(chosen + [x]) and grow(chosen + [x], x + 1):
                return True
        return False

    return grow([], 1)


def naive_feasible(n, edges, k) -> bool:
    """Is there an injective labeling into 1..k with every vertex sum-distinct?

    Plain backtracking in edge order; a vertex is checked each time one of its
    edges is labeled.  Labels on the pendant edges at one vertex are forced to
    increase (swapping two such leaves is an automorphism).
    """
    m = len(edges)
    if k < m:
        return False
    # label the busiest vertices' edges first so failures surface early;
    # relabeling edges does not change feasibility
    deg = [0] * n
    for u, v in edges:
        deg[u] += 1
        deg[v] += 1
    if not all(sum_distinct_set_exists(d, k) for d in set(deg)):
        return False
    edges = sorted(edges, key=lambda e: (-max(deg[e[0]], deg[e[1]]), -min(deg[e[0]], deg[e[1]]), e))
    inc = [[] for _ in range(n)]
    for i, (u, v) in enumerate(edges):
        inc[u].append(i)
        inc[v].append(i)
    prev_in_group = {}
    for g in pendant_groups(n, edges):
        for a, b in zip(g, g[1:]):
            prev_in_group[b] = a
    labels = [0] * m
    used = set()

    def ok_at(v):
        return naive_sum_distinct([labels[e] for e in inc[v] if labels[e]])

    def go(i):
        if i == m:
            return True
        u, v = edges[i]
        lo = labels[prev_in_group[i]] + 1 if i in prev_in_group else 1
        for x in range(lo, k + 1):
            if x in used:
                continue
            labels[i] = x
            used.add(x)
            if ok_at(u) and ok_at(v) and go(i + 1):
                return True
            used.discard(x)
            labels[i] = 0
        return False

    return go(0)
