"""Paths, cycles, path attachments, prisms and the powers-of-two labeling."""

from __future__ import annotations

from typing import Sequence

from ..errors import BaseNotAR, InvalidParameter
from ..graph import Family, FamilySpec, Graph, attach_path, cycle_plus_path, cycle_with_paths, generate, prism
from ..verify import verify_labeling
from .outcome import ConstructionOutcome, finalize

BASIC_FAMILIES = (
    Family.PATH,
    Family.CYCLE,
    Family.CYCLE_PLUS_PATH,
    Family.PENDANT_PATH_EXTENSION,
    Family.DEGREE2_PATH_EXTENSION,
    Family.CYCLE_ALL_PATHS,
)


def _cycle_plus_path_labels(n: int, length: int) -> list[int]:
    m = n + length
    labels = [0] * m
    # the three edges at the junction vertex 0
    labels[0], labels[n - 1], labels[n] = 1, 2, 4
    rest = iter([3] + list(range(5, m + 1)))
    for e in range(m):
        if not labels[e]:
            labels[e] = next(rest)
    return labels


def label_cycle_all_paths(lengths: Sequence[int]) -> ConstructionOutcome:
    """A cycle ``v_1..v_{n1}`` with a path of ``lengths[i]`` edges at every cycle vertex."""
    n1 = len(lengths)
    graph = cycle_with_paths(lengths)
    m = graph.m
    first = []
    pos = n1
    for ln in lengths:
        first.append(pos)
        pos += ln
    labels = [0] * m
    if m >= 4 * n1 - 1:
        odd = iter(range(1, 4 * n1, 2))
        for e in list(range(n1)) + first:
            labels[e] = next(odd)
        case = "odd"
    else:
        for e in range(n1):
            labels[e] = e + 1
        # cycle vertex i (0-based) is v_{i+1}
        for i in range(1, n1 - 1):
            labels[first[i]] = n1 + i
        labels[first[n1 - 1]] = 2 * n1
        labels[first[0]] = 2 * n1 - 1
        case = "index"
    used = set(labels)
    rest = iter(x for x in range(1, m + 1) if x not in used)
    for e in range(m):
        if not labels[e]:
            labels[e] = next(rest)
    return finalize(graph, labels, {"n1": n1, "m": m}, what=f"cycle_all_paths {case} case")


def _extend_with_path(base: Graph, base_labels: list[int], vertex: int, length: int, degree2: bool):
    graph = attach_path(base, vertex, length)
    m0 = base.m
    new = list(range(m0 + 1, m0 + length + 1))
    if degree2:
        x, y = base.incident_labels(base_labels, vertex)
        if x + y == m0 + 1:
            # the junction edge takes m+2 and the next edge m+1
            new[0], new[1] = new[1], new[0]
    return graph, list(base_labels) + new


def label_basic_family(
    spec: FamilySpec,
    base: tuple[Graph, Sequence[int]] | None = None,
    vertex: int | None = None,
) -> ConstructionOutcome:
    """Compact AR-labeling for the path/cycle families.

    For the two path-extension families a labeled ``base`` may be supplied;
    the path is attached at ``vertex`` (default: the first pendant vertex, or
    the first degree-2 vertex).  Without a base the canonical base is the
    cycle ``C_n`` with one pendant edge, labeled as its own family.
    """
    f = spec.family
    p = spec.as_dict()
    if f not in BASIC_FAMILIES:
        raise InvalidParameter(f"{f.value} is not a basic family")
    if f in (Family.PATH, Family.CYCLE):
        graph = generate(spec)
        return finalize(graph, list(range(1, graph.m + 1)), {"m": graph.m}, what=f.value)
    if f is Family.CYCLE_PLUS_PATH:
        graph = generate(spec)
        return finalize(graph, _cycle_plus_path_labels(p["n"], p["length"]), {"m": graph.m}, what=f.value)
    if f is Family.CYCLE_ALL_PATHS:
        return label_cycle_all_paths([p["length"]] * p["n1"])

    degree2 = f is Family.DEGREE2_PATH_EXTENSION
    if base is None:
        bgraph = cycle_plus_path(p["n"], 1)
        blabels = _cycle_plus_path_labels(p["n"], 1)
        vertex = 1 if degree2 else p["n"]
    else:
        bgraph, blabels = base[0], list(base[1])
        report = verify_labeling(bgraph, blabels, require_compact=True)
        if not report.ok:
            raise BaseNotAR("supplied base labeling is not a compact AR-labeling")
        want = 2 if degree2 else 1
        if vertex is None:
            vertex = next((v for v in range(bgraph.n) if bgraph.degree(v) == want), None)
            if vertex is None:
                raise InvalidParameter(f"base has no vertex of degree {want}")
        elif bgraph.degree(vertex) != want:
            raise InvalidParameter(f"vertex {vertex} has degree {bgraph.degree(vertex)}, expected {want}")
    graph, labels = _extend_with_path(bgraph, blabels, vertex, p["length"], degree2)
    return finalize(graph, labels, {"m": graph.m, "vertex": vertex}, what=f.value)


def label_prism(n: int) -> ConstructionOutcome:
    """Outer cycle ``1..n``, inner cycle ``n+1..2n``, rungs ``2n+1..3n``."""
    if n < 3:
        raise InvalidParameter("prism needs n >= 3")
    graph = prism(n)
    return finalize(graph, list(range(1, 3 * n + 1)), {"n": n}, what="prism")


def powers_of_two(graph: Graph) -> list[int]:
    """Edge ``i`` gets ``2**i``: AR on every graph, never compact once ``m >= 3``."""
    labels = [1 << i for i in range(graph.m)]
    assert verify_labeling(graph, labels).is_ar_labeling
    return labels
