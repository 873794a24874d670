"""Graphs of maximum degree three whose vertices are covered by disjoint cycles.

Cycle edges are numbered consecutively cycle by cycle; the remaining edges
form a matching and receive the labels above ``n`` through
:func:`arlabel.lemmas.label_matching`, with each endpoint's "label" being the
sum of its two cycle labels.
"""

from __future__ import annotations

from itertools import permutations

from ..cycles import (
    DEFAULT_NODE_BUDGET,
    cycle_edges,
    find_cycle_vertex_partition,
    find_hamiltonian_cycle,
    is_cycle_cover,
    is_hamiltonian_cycle,
)
from ..errors import DegreeTooHigh, InvalidParameter, NotACycleCover, NotCubic, NotHamiltonianCycle
from ..graph import Family, FamilySpec, Graph, complete, generate, is_cubic
from ..lemmas import MatchingInstance, label_matching
from ..verify import verify_labeling
from .outcome import ConstructionOutcome, finalize
from .witnesses import get_witness


def find_isomorphism(g: Graph, h: Graph) -> list[int] | None:
    """Vertex map ``phi`` with ``phi(g) == h`` by brute force (small graphs only)."""
    if g.n != h.n or g.m != h.m or sorted(g.degrees()) != sorted(h.degrees()):
        return None
    if g.n > 8:
        raise InvalidParameter("brute-force isomorphism is limited to 8 vertices")
    target = set(h.edges)
    for perm in permutations(range(g.n)):
        if all(g.degree(v) == h.degree(perm[v]) for v in range(g.n)) and all(
            (min(perm[u], perm[v]), max(perm[u], perm[v])) in target for u, v in g.edges
        ):
            return list(perm)
    return None


def _transfer(src: Graph, src_labels, dst: Graph) -> list[int] | None:
    phi = find_isomorphism(src, dst)
    if phi is None:
        return None
    out = [0] * dst.m
    for (u, v), x in zip(src.edges, src_labels):
        out[dst.edge_index(phi[u], phi[v])] = x
    return out


def _small_base(graph: Graph) -> tuple[list[int], str] | None:
    """Cached labeling for K4, K4 minus an edge, and the two cubic graphs on six vertices."""
    k4 = complete(4)
    k4_labels = get_witness(FamilySpec.of(Family.COMPLETE4))
    cands = [(k4, k4_labels, "complete4")]
    top = k4_labels.index(6)
    k4e = Graph(4, tuple(e for i, e in enumerate(k4.edges) if i != top))
    cands.append((k4e, [x for i, x in enumerate(k4_labels) if i != top], "complete4 minus its top edge"))
    for fam in (Family.CUBIC6_TRANSITIVE, Family.CUBIC6_OTHER):
        spec = FamilySpec.of(fam)
        cands.append((generate(spec), get_witness(spec), fam.value))
    for src, labels, name in cands:
        if src.n == graph.n and src.m == graph.m:
            out = _transfer(src, labels, graph)
            if out is not None:
                return out, name
    return None


def _block_labels(graph: Graph, cycles: list[list[int]]) -> tuple[list[int], list[int]]:
    labels = [0] * graph.m
    nxt = 1
    for cyc in cycles:
        for e in cycle_edges(graph, cyc):
            labels[e] = nxt
            nxt += 1
    chords = [e for e in range(graph.m) if not labels[e]]
    return labels, chords


def _matching_chords(graph: Graph, labels: list[int], chords: list[int]) -> None:
    n = graph.n
    pos_labels = []
    pairs = []
    for j, e in enumerate(chords):
        for v in graph.edges[e]:
            pos_labels.append(sum(labels[f] for f in graph.adjacency[v] if labels[f]))
        pairs.append((2 * j, 2 * j + 1))
    numbers = list(range(n + 1, n + len(chords) + 1))
    assigned = label_matching(MatchingInstance(pos_labels, numbers, pairs))
    for e, x in zip(chords, assigned):
        labels[e] = x


def label_hamiltonian_cubic(graph: Graph, cycle: list[int] | None = None) -> ConstructionOutcome:
    """Cycle edges ``1..n`` in traversal order, chords ``n+1..3n/2`` by the matching labeler."""
    if not is_cubic(graph):
        raise NotCubic("graph is not 3-regular")
    if cycle is None:
        cycle = find_hamiltonian_cycle(graph)
        if cycle is None:
            raise NotHamiltonianCycle("graph has no Hamiltonian cycle")
    elif not is_hamiltonian_cycle(graph, cycle):
        raise NotHamiltonianCycle("given vertex order is not a Hamiltonian cycle")
    n = graph.n
    if n <= 6:
        base = _small_base(graph)
        if base is None:
            raise NotCubic("no cached labeling for this small cubic graph")
        return finalize(graph, base[0], {"n": n}, what="hamiltonian cubic", notes=[f"cached base labeling ({base[1]})"])
    labels, chords = _block_labels(graph, [cycle])
    _matching_chords(graph, labels, chords)
    return finalize(graph, labels, {"n": n, "k": len(chords)}, what="hamiltonian cubic")


def _few_chords(graph: Graph, labels: list[int], chords: list[int]) -> tuple[list[int], list[str]]:
    """One to three chords: move labels ``2..r+1`` to ``n+1..n+r`` and give them to the chords."""
    n = graph.n
    r = len(chords)
    small = list(range(2, r + 2))
    for j, x in enumerate(small):
        labels[labels.index(x)] = n + 1 + j
    order = list(chords)
    if r >= 2:
        top = labels.index(n + r)
        for v in graph.edges[top]:
            others = [labels[f] for f in graph.adjacency[v] if labels[f] and f != top]
            chord = next((f for f in graph.adjacency[v] if f in chords), None)
            if chord is not None and any(x < n for x in others):
                order.remove(chord)
                order.insert(0, chord)
                break
    for e, x in zip(order, small):
        labels[e] = x
    if verify_labeling(graph, labels).is_ar_labeling:
        return labels, []
    for perm in permutations(small):
        trial = list(labels)
        for e, x in zip(chords, perm):
            trial[e] = x
        if verify_labeling(graph, trial).is_ar_labeling:
            return trial, [f"chord labels reassigned as {list(perm)}"]
    return labels, []


def label_cycle_covered(
    graph: Graph, partition: list[list[int]] | None = None, node_budget: int = DEFAULT_NODE_BUDGET
) -> ConstructionOutcome:
    """Compact AR-labeling of a graph with maximum degree 3 and a cycle vertex partition."""
    if graph.max_degree() > 3:
        raise DegreeTooHigh("maximum degree exceeds 3")
    if partition is None:
        partition = find_cycle_vertex_partition(graph, node_budget)
        if partition is None:
            raise NotACycleCover("no partition of the vertices into cycles exists")
    elif not is_cycle_cover(graph, partition):
        raise NotACycleCover("given cycles do not partition the vertex set")
    n, m = graph.n, graph.m
    trace = {"n": n, "cycles": len(partition), "chords": m - n}
    if n <= 4 and m > n or (is_cubic(graph) and n <= 6):
        base = _small_base(graph)
        if base is not None:
            return finalize(graph, base[0], trace, what="cycle cover", notes=[f"cached base labeling ({base[1]})"])
    labels, chords = _block_labels(graph, partition)
    repairs = []
    if len(chords) >= 4:
        _matching_chords(graph, labels, chords)
    elif chords:
        labels, repairs = _few_chords(graph, labels, chords)
    outcome = finalize(graph, labels, trace, repairs, what="cycle cover")
    outcome.warnings.extend(f"fidelity: cycle cover {note}" for note in repairs)
    return outcome
