"""Sum-distinctness at vertex, labeling and graph level.

A label list is *sum-distinct* when its ``2^k`` subset sums are pairwise
distinct.  Two independent routes decide it: incremental subset-sum sets
(:func:`subset_sums`, :func:`extend_sum_set`) and a brute-force search for a
signed zero combination (:func:`signed_zero_combination`).
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from itertools import product
from typing import Sequence

from .errors import DegreeTooLarge, LengthMismatch
from .graph import Graph

DEGREE_CAP = 30


@dataclass(frozen=True)
class SumSet:
    """All subset sums of the labels inserted so far (0 included)."""

    sums: frozenset[int] = frozenset({0})
    total: int = 0
    count: int = 0

    def __len__(self):
        return len(self.sums)

    @property
    def sum_distinct(self) -> bool:
        return len(self.sums) == 2 ** self.count


@dataclass(frozen=True)
class Collision:
    """Witness that adding ``label`` repeats a sum: ``base_sum + label == colliding_sum``,
    and both ``base_sum`` and ``colliding_sum`` were already subset sums."""

    label: int
    base_sum: int
    colliding_sum: int


def _check_cap(labels, cap):
    if len(labels) > cap:
        raise DegreeTooLarge(f"{len(labels)} labels exceed the degree cap {cap}")


def subset_sums(labels: Sequence[int], cap: int = DEGREE_CAP) -> SumSet:
    _check_cap(labels, cap)
    sums = {0}
    for x in labels:
        sums |= {s + x for s in sums}
    return SumSet(frozenset(sums), sum(labels), len(labels))


def extend_sum_set(s: SumSet, x: int) -> SumSet | Collision:
    """Sum set of ``labels + [x]``, or a :class:`Collision` if ``(S + x) ∩ S`` is non-empty."""
    if x < 1:
        raise ValueError("labels must be positive")
    hit = min((t for t in s.sums if t + x in s.sums), default=None)
    if hit is not None:
        return Collision(x, hit, hit + x)
    return SumSet(s.sums | frozenset(t + x for t in s.sums), s.total + x, s.count + 1)


_BITSET_LIMIT = 1 << 24


def is_sum_distinct(labels: Sequence[int], cap: int = DEGREE_CAP) -> bool:
    _check_cap(labels, cap)
    if min(labels, default=1) >= 1 and sum(labels) <= _BITSET_LIMIT:
        # bit s of mask set <=> s is a subset sum
        mask = 1
        for x in labels:
            shifted = mask << x
            if shifted & mask:
                return False
            mask |= shifted
        return True
    sums = {0}
    for x in labels:
        shifted = {s + x for s in sums}
        if not shifted.isdisjoint(sums):
            return False
        sums |= shifted
    return True


def find_collision(labels: Sequence[int], cap: int = DEGREE_CAP) -> tuple[tuple[int, ...], tuple[int, ...]] | None:
    """Two distinct index subsets with equal label sums, or None.

    Returns positions into ``labels`` (not the label values) so that repeated
    labels still give distinct subsets.
    """
    _check_cap(labels, cap)
    witness: dict[int, tuple[int, ...]] = {0: ()}
    for i, x in enumerate(labels):
        added = {}
        for s, subset in witness.items():
            t = s + x
            mine = subset + (i,)
            if t in witness:
                return witness[t], mine
            if t in added:
                return added[t], mine
            added[t] = mine
        witness.update(added)
    return None


def signed_zero_combination(labels: Sequence[int], cap: int = DEGREE_CAP) -> bool:
    """True iff some non-zero coefficient vector in {-1,0,1}^k gives a zero sum.

    Exhaustive over ``3^k`` vectors; kept deliberately naive as an oracle.
    """
    _check_cap(labels, cap)
    k = len(labels)
    for coeffs in product((-1, 0, 1), repeat=k):
        if any(coeffs) and sum(c * x for c, x in zip(coeffs, labels)) == 0:
            return True
    return False


def is_ar_vertex(graph: Graph, labeling: Sequence[int], v: int, cap: int = DEGREE_CAP) -> bool:
    return is_sum_distinct(graph.incident_labels(labeling, v), cap)


@dataclass(frozen=True)
class VertexFailure:
    vertex: int
    edges_a: tuple[int, ...]
    edges_b: tuple[int, ...]
    subset_a: tuple[int, ...]
    subset_b: tuple[int, ...]


@dataclass(frozen=True)
class VerifyReport:
    """``is_ar_labeling`` ignores compactness; ``ok`` also honours ``require_compact``."""

    is_ar_labeling: bool
    is_compact: bool
    injectivity_ok: bool
    failing_vertices: tuple[VertexFailure, ...] = field(default_factory=tuple)
    require_compact: bool = False

    @property
    def ok(self) -> bool:
        return self.is_ar_labeling and (self.is_compact or not self.require_compact)

    def to_dict(self) -> dict:
        return {
            "ar": self.is_ar_labeling,
            "compact": self.is_compact,
            "failures": [
                {"vertex": f.vertex, "subset_a": list(f.subset_a), "subset_b": list(f.subset_b)}
                for f in self.failing_vertices
            ],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


def verify_labeling(
    graph: Graph, labeling: Sequence[int], require_compact: bool = False, cap: int = DEGREE_CAP
) -> VerifyReport:
    """Check injectivity, positivity, and sum-distinctness at every vertex.

    The first collision found at each failing vertex is reported as a pair of
    edge subsets with equal label sums.
    """
    if len(labeling) != graph.m:
        raise LengthMismatch(f"{len(labeling)} labels for {graph.m} edges")
    labels = [int(x) for x in labeling]
    injective = len(set(labels)) == len(labels) and all(x >= 1 for x in labels)
    compact = sorted(labels) == list(range(1, graph.m + 1))
    failures = []
    for v in range(graph.n):
        inc = graph.adjacency[v]
        vals = [labels[e] for e in inc]
        if is_sum_distinct(vals, cap):
            continue
        hit = find_collision(vals, cap)
        if hit is not None:
            a, b = hit
            failures.append(
                VertexFailure(
                    v,
                    tuple(inc[i] for i in a),
                    tuple(inc[i] for i in b),
                    tuple(vals[i] for i in a),
                    tuple(vals[i] for i in b),
                )
            )
    return VerifyReport(injective and not failures, compact, injective, tuple(failures), require_compact)


def is_ar_labeling(graph: Graph, labeling: Sequence[int], require_compact: bool = False) -> bool:
    return verify_labeling(graph, labeling, require_compact).ok
