"""Exact AR-index by branch and bound, and constrained search for witnesses.

For each candidate ``k`` the solver assigns distinct labels from ``1..k`` to
the edges in a fixed order.  Every vertex keeps its subset sums as the bits of
an integer, so a label ``x`` is admissible at ``v`` iff ``(mask << x) & mask``
is zero.  Unconstrained searches also order labels along twin vertices (two
vertices with the same open or closed neighbourhood), which only removes
labelings that are images of others under a graph automorphism.
"""

from __future__ import annotations

import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Mapping

from .errors import BudgetExceeded, DegreeTooLarge, InvalidParameter
from .graph import Graph
from .verify import DEGREE_CAP, verify_labeling

EDGE_ORDERS = ("degree_descending", "input_order")


@dataclass
class SearchConfig:
    max_k: int | None = None
    node_budget: int = 10 ** 8
    edge_order: str = "degree_descending"
    parallel: bool = False
    fixed_labels: Mapping[int, int] = field(default_factory=dict)
    # edge -> allowed labels; used to pin a label to one of several values
    domains: Mapping[int, frozenset[int]] = field(default_factory=dict)
    symmetry_breaking: bool = True
    workers: int | None = None

    def __post_init__(self):
        if self.edge_order not in EDGE_ORDERS:
            raise InvalidParameter(f"edge_order must be one of {EDGE_ORDERS}")
        if self.node_budget < 1:
            raise InvalidParameter("node_budget must be positive")
        vals = list(self.fixed_labels.values())
        if len(set(vals)) != len(vals) or any(x < 1 for x in vals):
            raise InvalidParameter("fixed_labels must be injective and positive")

    @property
    def constrained(self) -> bool:
        return bool(self.fixed_labels) or bool(self.domains)


@dataclass(frozen=True)
class SearchResult:
    value: int
    witness: tuple[int, ...]
    nodes_explored: int
    proven_minimal: bool

    def to_dict(self, graph: Graph) -> dict:
        return {
            "ari": self.value,
            "witness": [[u, v, x] for (u, v), x in zip(graph.edges, self.witness)],
            "nodes": self.nodes_explored,
            "proven": self.proven_minimal,
        }

    def to_json(self, graph: Graph) -> str:
        return json.dumps(self.to_dict(graph))


# ---------------------------------------------------------------------------
# ordering and symmetry


def edge_order(graph: Graph, kind: str = "degree_descending") -> list[int]:
    """``degree_descending`` completes vertices one at a time, highest degree first."""
    if kind == "input_order":
        return list(range(graph.m))
    if kind not in EDGE_ORDERS:
        raise InvalidParameter(f"unknown edge order {kind!r}")
    vertices = sorted(range(graph.n), key=lambda v: -graph.degree(v))
    seen = set()
    order = []
    for v in vertices:
        for e in graph.adjacency[v]:
            if e not in seen:
                seen.add(e)
                order.append(e)
    return order


def twin_classes(graph: Graph) -> list[list[int]]:
    """Classes of size >= 2 of vertices with equal open (or equal closed) neighbourhoods."""
    nb = [frozenset(graph.neighbors(v)) for v in range(graph.n)]
    groups: dict = {}
    for v in range(graph.n):
        if nb[v]:
            groups.setdefault(("open", nb[v]), []).append(v)
    placed = {v for g in groups.values() if len(g) > 1 for v in g}
    for v in range(graph.n):
        if nb[v] and v not in placed:
            groups.setdefault(("closed", nb[v] | {v}), []).append(v)
    return [sorted(g) for g in groups.values() if len(g) > 1]


def twin_orderings(graph: Graph) -> list[list[int]]:
    """Chains of edge indices whose labels may be required to increase.

    Each chain is ``(c, u_1), (c, u_2), ...`` for a twin class ``u_i`` and a
    common neighbour ``c``.  A class is skipped if its centre lies in another
    accepted class or vice versa, so sorting one class never disturbs another.
    """
    chains = []
    accepted: list[tuple[int, set[int]]] = []
    for cls in twin_classes(graph):
        members = list(cls)
        common = set(graph.neighbors(members[0])) - set(members)
        for u in members[1:]:
            common &= set(graph.neighbors(u))
        if common:
            c = min(common)
        elif len(members) >= 3:
            # true twins with nothing outside: use one member as the centre
            c, members = members[0], members[1:]
        else:
            continue
        mset = set(members)
        if any(c in s or oc in mset for oc, s in accepted):
            continue
        accepted.append((c, mset))
        chains.append([graph.edge_index(c, u) for u in members])
    return chains


@lru_cache(maxsize=None)
def star_minimum(d: int) -> int:
    """Smallest possible maximum of a sum-distinct set of ``d`` positive integers (exhaustive)."""
    if d <= 1:
        return d
    k = star_minimum(d - 1) + 1
    while not _sum_distinct_set_exists(d, k):
        k += 1
    return k


def _sum_distinct_set_exists(d: int, k: int) -> bool:
    # largest element fixed at k; remaining chosen below it in decreasing order
    def grow(mask, count, below):
        if count == d:
            return True
        for x in range(below - 1, d - count - 1, -1):
            shifted = mask << x
            if not shifted & mask and grow(mask | shifted, count + 1, x):
                return True
        return False

    return grow(1 | (1 << k), 1, k)


STAR_MINIMUM_EXACT_UP_TO = 7


def degree_lower_bound(graph: Graph) -> int:
    d = min(graph.max_degree(), STAR_MINIMUM_EXACT_UP_TO)
    return star_minimum(d)


# ---------------------------------------------------------------------------
# core search


class _Search:
    """Depth-first search for one ``k``; picklable so branches can run in workers."""

    def __init__(self, n, edges, order, k, fixed, domains, chains, must_use_top, budget):
        self.n = n
        self.edges = edges
        # edges with a restricted domain go first; each keeps its relative order
        free = [e for e in order if e not in fixed]
        self.order = [e for e in free if e in domains] + [e for e in free if e not in domains]
        self.k = k
        self.fixed = dict(fixed)
        self.domains = {e: sorted(d) for e, d in domains.items()}
        # a pool shared by exactly as many edges as it has labels is reserved for them
        by_pool: dict[frozenset, int] = {}
        for d in domains.values():
            by_pool[frozenset(d)] = by_pool.get(frozenset(d), 0) + 1
        self.reserved = frozenset(x for pool, cnt in by_pool.items() if cnt == len(pool) for x in pool)
        self.must_use_top = must_use_top
        self.budget = budget
        self.nodes = 0
        # greater[e] = edges whose label must be below e's; less[e] = above
        self.greater = {e: [] for e in range(len(edges))}
        self.less = {e: [] for e in range(len(edges))}
        for chain in chains:
            for a, b in zip(chain, chain[1:]):
                self.less[a].append(b)
                self.greater[b].append(a)

    def initial_state(self):
        masks = [1] * self.n
        labels = [0] * len(self.edges)
        used = 0
        for e, x in self.fixed.items():
            if x > self.k or used >> x & 1:
                return None
            u, v = self.edges[e]
            for w in (u, v):
                if (masks[w] << x) & masks[w]:
                    return None
                masks[w] |= masks[w] << x
            used |= 1 << x
            labels[e] = x
        return masks, labels, used

    def candidates(self, e, labels):
        lo, hi = 1, self.k
        for f in self.greater[e]:
            if labels[f]:
                lo = max(lo, labels[f] + 1)
        for f in self.less[e]:
            if labels[f]:
                hi = min(hi, labels[f] - 1)
        if e in self.domains:
            return [x for x in self.domains[e] if lo <= x <= hi]
        if self.reserved:
            return [x for x in range(lo, hi + 1) if x not in self.reserved]
        return range(lo, hi + 1)

    def run(self, first_label=None):
        """Return a labeling (list) or None; raises BudgetExceeded."""
        state = self.initial_state()
        if state is None:
            return None
        masks, labels, used = state
        order, edges, k = self.order, self.edges, self.k
        total = len(order)
        top_bit = 1 << k

        def dfs(pos, used):
            self.nodes += 1
            if self.nodes > self.budget:
                raise BudgetExceeded(f"node budget exhausted at k={k}", nodes=self.nodes)
            if pos == total:
                return not self.must_use_top or used & top_bit
            e = order[pos]
            u, v = edges[e]
            mu, mv = masks[u], masks[v]
            cands = self.candidates(e, labels)
            if pos == 0 and first_label is not None:
                cands = [first_label] if first_label in cands else []
            elif self.must_use_top and pos == total - 1 and not used & top_bit:
                cands = [k] if k in cands else []
            for x in cands:
                if used >> x & 1:
                    continue
                su = mu << x
                if su & mu:
                    continue
                sv = mv << x
                if sv & mv:
                    continue
                masks[u] = mu | su
                masks[v] = mv | sv
                labels[e] = x
                if dfs(pos + 1, used | (1 << x)):
                    return True
                labels[e] = 0
            masks[u], masks[v] = mu, mv
            return False

        return list(labels) if dfs(0, used) else None

    def first_labels(self):
        if not self.order:
            return []
        state = self.initial_state()
        if state is None:
            return []
        return [x for x in self.candidates(self.order[0], state[1]) if not state[2] >> x & 1]


def _run_branch(args):
    search, first = args
    try:
        return search.run(first), search.nodes, False
    except BudgetExceeded:
        return None, search.nodes, True


def _search_k(graph, config, k, must_use_top, budget):
    """Return (labeling or None, nodes).  Raises BudgetExceeded."""
    chains = twin_orderings(graph) if config.symmetry_breaking and not config.constrained else []
    search = _Search(
        graph.n,
        list(graph.edges),
        edge_order(graph, config.edge_order),
        k,
        config.fixed_labels,
        config.domains,
        chains,
        must_use_top,
        budget,
    )
    if not config.parallel:
        try:
            return search.run(), search.nodes
        except BudgetExceeded as exc:
            exc.nodes = search.nodes
            raise
    firsts = search.first_labels()
    if not firsts:
        return search.run(), search.nodes
    nodes = 0
    exceeded = False
    found = None
    with ProcessPoolExecutor(max_workers=config.workers) as pool:
        for labeling, used_nodes, over in pool.map(_run_branch, [(search, x) for x in firsts]):
            nodes += used_nodes
            exceeded = exceeded or over
            if labeling is not None and found is None:
                found = labeling
    if found is not None:
        return found, nodes
    if exceeded:
        raise BudgetExceeded(f"node budget exhausted at k={k}", nodes=nodes)
    return None, nodes


def _check_degree(graph):
    if graph.max_degree() > DEGREE_CAP:
        raise DegreeTooLarge(f"maximum degree {graph.max_degree()} exceeds {DEGREE_CAP}")


def bounds(graph: Graph) -> tuple[int, int]:
    """``(m, 2^(m-1))``, tightened to ``(m, m)`` when a verified construction covers the graph."""
    m = graph.m
    if m == 0:
        return 0, 0
    if graph.max_degree() <= 2 or _covered_by_construction(graph):
        return m, m
    return m, 2 ** (m - 1)


def _covered_by_construction(graph: Graph) -> bool:
    if graph.max_degree() > 3:
        return False
    from .constructors.cubic import label_cycle_covered
    from .errors import ARLabelError

    try:
        outcome = label_cycle_covered(graph, node_budget=10 ** 5)
    except ARLabelError:
        return False
    return verify_labeling(graph, outcome.labeling, require_compact=True).ok


def ar_index(graph: Graph, config: SearchConfig | None = None) -> SearchResult:
    """Minimum ``k`` with an AR-labeling into ``1..k``, with a witness.

    Candidates below the smallest possible maximum of a sum-distinct set of
    size ``max_degree`` are skipped (each is exhausted once, on a star).
    """
    config = config or SearchConfig()
    if graph.m == 0:
        raise InvalidParameter("ar_index needs at least one edge")
    _check_degree(graph)
    m = graph.m
    upper = 2 ** (m - 1)
    cap = upper if config.max_k is None else min(config.max_k, upper)
    k = max(m, degree_lower_bound(graph), max(config.fixed_labels.values(), default=0))
    nodes = 0
    first = True
    while k <= cap:
        try:
            found, used = _search_k(graph, config, k, must_use_top=not first, budget=config.node_budget - nodes)
        except BudgetExceeded as exc:
            raise BudgetExceeded(
                f"node budget {config.node_budget} exhausted while testing k={k}",
                lower=k,
                upper=upper,
                nodes=nodes + exc.nodes,
            ) from None
        nodes += used
        if found is not None:
            report = verify_labeling(graph, found)
            assert report.is_ar_labeling, "solver produced an invalid labeling"
            return SearchResult(k, tuple(found), nodes, True)
        first = False
        k += 1
    raise BudgetExceeded(f"no AR-labeling with labels up to {cap}", lower=cap + 1, upper=upper, nodes=nodes)


def constrained_search(graph: Graph, config: SearchConfig, k: int) -> list[int] | None:
    """An AR-labeling into ``1..k`` honouring ``fixed_labels`` and ``domains``, or None."""
    _check_degree(graph)
    if any(x > k for x in config.fixed_labels.values()):
        raise InvalidParameter("fixed labels must not exceed k")
    for e in list(config.fixed_labels) + list(config.domains):
        if not 0 <= e < graph.m:
            raise InvalidParameter(f"edge index {e} out of range")
    found, _ = _search_k(graph, config, k, must_use_top=False, budget=config.node_budget)
    if found is not None:
        assert verify_labeling(graph, found).is_ar_labeling
    return found


def is_ar_graph(graph: Graph, config: SearchConfig | None = None) -> bool:
    """Whether the edges admit an AR-labeling by exactly ``1..m``."""
    config = config or SearchConfig()
    if graph.m == 0:
        return True
    _check_degree(graph)
    if degree_lower_bound(graph) > graph.m:
        return False
    return constrained_search(graph, config, graph.m) is not None
