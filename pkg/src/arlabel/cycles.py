"""Backtracking search for Hamiltonian cycles and cycle vertex partitions (2-factors)."""

from __future__ import annotations

from .errors import TimeBudgetExceeded
from .graph import Graph

DEFAULT_NODE_BUDGET = 10 ** 7


class _Budget:
    __slots__ = ("left",)

    def __init__(self, nodes):
        self.left = nodes

    def tick(self):
        self.left -= 1
        if self.left < 0:
            raise TimeBudgetExceeded("cycle search exceeded its node budget")


def find_hamiltonian_cycle(graph: Graph, node_budget: int = DEFAULT_NODE_BUDGET) -> list[int] | None:
    """First Hamiltonian cycle in DFS order from vertex 0, or None.

    The cycle is returned as a vertex list ``[v0, v1, ..., v_{n-1}]`` with the
    closing edge implied.
    """
    n = graph.n
    if n < 3:
        return None
    if any(len(a) < 2 for a in graph.adjacency):
        return None
    nbrs = [sorted(graph.neighbors(v)) for v in range(n)]
    budget = _Budget(node_budget)
    on_path = [False] * n
    path = [0]
    on_path[0] = True
    start_nbrs = set(nbrs[0])

    def extend(v):
        budget.tick()
        if len(path) == n:
            return v in start_nbrs
        for w in nbrs[v]:
            if on_path[w]:
                continue
            # fix orientation: second vertex smaller than the last one
            if len(path) == n - 1 and w < path[1]:
                continue
            on_path[w] = True
            path.append(w)
            if extend(w):
                return True
            path.pop()
            on_path[w] = False
        return False

    return list(path) if extend(0) else None


def _cycles_through(start, allowed, nbrs, budget):
    """Cycles through ``start`` inside ``allowed``, shortest closings first, one orientation each."""
    path = [start]
    on = {start}

    def walk(v):
        budget.tick()
        if len(path) >= 3 and start in nbrs[v] and path[1] < path[-1]:
            yield list(path)
        for w in nbrs[v]:
            if w in on or w not in allowed:
                continue
            on.add(w)
            path.append(w)
            yield from walk(w)
            path.pop()
            on.discard(w)

    yield from walk(start)


def find_cycle_vertex_partition(graph: Graph, node_budget: int = DEFAULT_NODE_BUDGET) -> list[list[int]] | None:
    """Vertex-disjoint cycles covering every vertex, or None.

    The smallest uncovered vertex is always covered next, by cycles tried in
    DFS order with early closing preferred, so the result is deterministic.
    """
    n = graph.n
    if n == 0:
        return []
    if any(len(a) < 2 for a in graph.adjacency):
        return None
    nbrs = [sorted(graph.neighbors(v)) for v in range(n)]
    budget = _Budget(node_budget)
    uncovered = set(range(n))
    chosen: list[list[int]] = []

    def cover():
        if not uncovered:
            return True
        start = min(uncovered)
        for cyc in _cycles_through(start, uncovered, nbrs, budget):
            uncovered.difference_update(cyc)
            chosen.append(cyc)
            if cover():
                return True
            chosen.pop()
            uncovered.update(cyc)
        return False

    return [list(c) for c in chosen] if cover() else None


def cycle_edges(graph: Graph, cycle: list[int]) -> list[int]:
    """Edge indices along ``cycle`` in traversal order (closing edge last)."""
    out = []
    for i, v in enumerate(cycle):
        w = cycle[(i + 1) % len(cycle)]
        out.append(graph.edge_index(v, w))
    return out


def is_hamiltonian_cycle(graph: Graph, cycle: list[int]) -> bool:
    if len(cycle) != graph.n or len(set(cycle)) != graph.n or graph.n < 3:
        return False
    return all(graph.has_edge(cycle[i], cycle[(i + 1) % len(cycle)]) for i in range(len(cycle)))


def is_cycle_cover(graph: Graph, cycles: list[list[int]]) -> bool:
    covered = [v for c in cycles for v in c]
    if sorted(covered) != list(range(graph.n)):
        return False
    for c in cycles:
        if len(c) < 3:
            return False
        if not all(graph.has_edge(c[i], c[(i + 1) % len(c)]) for i in range(len(c))):
            return False
    return True
