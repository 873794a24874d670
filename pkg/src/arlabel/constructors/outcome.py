"""Result type shared by all constructors, with final verification and local repair."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from ..errors import BudgetExceeded, ConstructionFailed
from ..graph import Graph
from ..search import SearchConfig, constrained_search
from ..verify import verify_labeling

MAX_REPAIR_EDGES = 4


@dataclass
class ConstructionOutcome:
    graph: Graph
    labeling: list[int]
    trace: dict[str, int] = field(default_factory=dict)
    repairs: list[str] = field(default_factory=list)
    # repairs applied on parameters the construction claims to cover
    warnings: list[str] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "n": self.graph.n,
            "edges": [[u, v, x] for (u, v), x in zip(self.graph.edges, self.labeling)],
            "trace": dict(self.trace),
            "repairs": list(self.repairs),
            "warnings": list(self.warnings),
            "notes": list(self.notes),
        }


def local_repair(graph: Graph, labels: list[int], max_edges: int = MAX_REPAIR_EDGES) -> tuple[list[int], list[int]] | None:
    """Relabel at most ``max_edges`` edges (permuting their labels) to fix failing vertices.

    Candidate edges are those within distance one of a failing vertex; subsets
    are tried smallest first.  Returns ``(new_labels, changed_edges)`` or None.
    """
    report = verify_labeling(graph, labels)
    if report.is_ar_labeling:
        return list(labels), []
    bad = {f.vertex for f in report.failing_vertices}
    near = set(bad)
    for v in bad:
        near.update(graph.neighbors(v))
    cand = sorted({e for v in near for e in graph.adjacency[v]})
    anchor = sorted({e for v in bad for e in graph.adjacency[v]})
    for size in range(2, max_edges + 1):
        for subset in combinations(cand, size):
            if not any(e in anchor for e in subset):
                continue
            pool = frozenset(labels[e] for e in subset)
            fixed = {e: x for e, x in enumerate(labels) if e not in subset}
            config = SearchConfig(fixed_labels=fixed, domains={e: pool for e in subset}, node_budget=10 ** 5)
            try:
                found = constrained_search(graph, config, max(labels))
            except BudgetExceeded:
                continue
            if found is not None:
                return found, [e for e in subset if found[e] != labels[e]]
    return None


def finalize(
    graph: Graph,
    labels: list[int],
    trace: dict[str, int] | None = None,
    repairs: list[str] | None = None,
    covered: bool = True,
    what: str = "construction",
    notes: list[str] | None = None,
) -> ConstructionOutcome:
    """Verify a compact labeling; fall back to a bounded local repair if it fails."""
    labels = [int(x) for x in labels]
    outcome = ConstructionOutcome(graph, labels, dict(trace or {}), list(repairs or []), notes=list(notes or []))
    report = verify_labeling(graph, labels, require_compact=True)
    if report.ok:
        return outcome
    if not report.is_compact:
        raise ConstructionFailed(f"{what}: labels are not exactly 1..{graph.m}")
    fixed = local_repair(graph, labels)
    if fixed is None:
        vs = [f.vertex for f in report.failing_vertices]
        raise ConstructionFailed(f"{what}: vertices {vs} fail and no local repair of <= {MAX_REPAIR_EDGES} edges works")
    new, changed = fixed
    note = "local repair relabeled edges " + ", ".join(f"{e}: {labels[e]}->{new[e]}" for e in changed)
    outcome.labeling = new
    outcome.repairs.append(note)
    if covered:
        outcome.warnings.append(f"fidelity: {what} needed a {note}")
    assert verify_labeling(graph, new, require_compact=True).ok
    return outcome
