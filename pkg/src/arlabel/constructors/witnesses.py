"""Cached base labelings for small graphs, derived by constrained search.

The cache is a JSON array of ``{"family", "params", "labels", "version"}``
entries with labels in generator edge order.  Every entry is re-verified when the cache is loaded.
:func:`derive_all` rebuilds the entries from scratch; the pins it passes to the
solver encode the junction patterns that the recursive constructions need.
"""

from __future__ import annotations

import json
from functools import lru_cache
from importlib import resources
from pathlib import Path
from typing import Callable, Iterable

from ..errors import ConstructionFailed
from ..graph import Family, FamilySpec, Graph, gasket, gasket_corners, generate, sierpinski, sierpinski_index
from ..search import SearchConfig, constrained_search
from ..verify import verify_labeling

CACHE_VERSION = 1
DATA_FILE = "witnesses.json"


def _key(spec: FamilySpec) -> tuple:
    return (spec.family.value, spec.params)


def cache_path() -> Path:
    return Path(str(resources.files("arlabel.constructors") / "data" / DATA_FILE))


def _entry_ok(entry: dict) -> bool:
    spec = FamilySpec.of(entry["family"], **entry["params"])
    graph = generate(spec)
    labels = entry["labels"]
    return len(labels) == graph.m and verify_labeling(graph, labels, require_compact=True).ok


def read_cache(path: Path | None = None) -> list[dict]:
    path = path or cache_path()
    entries = json.loads(Path(path).read_text())
    for entry in entries:
        if entry.get("version") != CACHE_VERSION:
            raise ConstructionFailed(f"witness cache entry version {entry.get('version')} != {CACHE_VERSION}")
    return entries


@lru_cache(maxsize=1)
def load_witnesses() -> dict[tuple, tuple[int, ...]]:
    out = {}
    for entry in read_cache():
        if not _entry_ok(entry):
            raise ConstructionFailed(f"cached witness for {entry['family']} {entry['params']} fails verification")
        spec = FamilySpec.of(entry["family"], **entry["params"])
        out[_key(spec)] = tuple(entry["labels"])
    return out


def get_witness(spec: FamilySpec) -> list[int]:
    try:
        return list(load_witnesses()[_key(spec)])
    except KeyError:
        raise ConstructionFailed(
            f"no cached witness for {spec.family.value} {spec.as_dict()}; run 'arlabel witness-cache regenerate'"
        ) from None


# ---------------------------------------------------------------------------
# derivation


def _search(graph: Graph, fixed=None, domains=None, budget: int = 10 ** 7) -> list[int] | None:
    config = SearchConfig(fixed_labels=fixed or {}, domains=domains or {}, node_budget=budget)
    return constrained_search(graph, config, graph.m)


def _pin(graph: Graph, vertex: int, labels: Iterable[int], below: int | None = None) -> dict[int, frozenset[int]]:
    """Pin the edges at ``vertex`` (only those with index < ``below``, if given) to ``labels``."""
    pool = frozenset(labels)
    return {e: pool for e in graph.adjacency[vertex] if below is None or e < below}


def _first_accepted(graph, pin_choices, accept: Callable[[list[int]], bool]):
    for domains in pin_choices:
        found = _search(graph, domains=domains)
        if found is not None and accept(found):
            return found
    return None


def _recursion_holds(labels: list[int], n0: int, step: Callable[[list[int], int], list[int]], graph_of, upto: int) -> bool:
    cur = labels
    for n in range(n0 + 1, upto + 1):
        cur = step(cur, n)
        if not verify_labeling(graph_of(n), cur, require_compact=True).ok:
            return False
    return True


def _sierpinski_step(sub: list[int], n: int) -> list[int]:
    a = len(sub)
    bridges = [3 * a + 1, 3 * a + 2, 3 * a + 3] if n % 2 == 0 else [3 * a + 1, 3 * a + 3, 3 * a + 2]
    return sub + [a + x for x in sub] + [2 * a + x for x in sub] + bridges


def _gasket_step(sub: list[int], n: int) -> list[int]:
    s = 3 ** (n - 1)
    return sub + [s + x for x in sub] + [2 * s + x for x in sub]


def _consecutive_pairs(m: int):
    return [(c, c + 1) for c in range(1, m)]


def derive_sierpinski(n: int, check_upto: int = 6) -> list[int]:
    """Corner ``1^n`` carries {1,2}; for n=3 the L and R corners towards M carry {13,14}, {25,26};
    corners ``2^n`` and ``3^n`` carry consecutive pairs (tried in lexicographic order)."""
    graph = sierpinski(n)
    base = _pin(graph, sierpinski_index((1,) * n), (1, 2))
    if n == 3:
        # block edges only; the bridges are the last three edges
        base |= _pin(graph, sierpinski_index((2, 1, 1)), (13, 14), below=36)
        base |= _pin(graph, sierpinski_index((3, 1, 1)), (25, 26), below=36)
    v2, v3 = sierpinski_index((2,) * n), sierpinski_index((3,) * n)

    def choices():
        for p in _consecutive_pairs(graph.m):
            for q in _consecutive_pairs(graph.m):
                if len(set(p) | set(q) | {1, 2}) == 6:
                    yield base | _pin(graph, v2, p) | _pin(graph, v3, q)

    accept = (lambda lab: _recursion_holds(lab, 3, _sierpinski_step, sierpinski, check_upto)) if n == 3 else (lambda lab: True)
    found = _first_accepted(graph, choices(), accept)
    if found is None:
        raise ConstructionFailed(f"no pinned witness for S({n},3)")
    return found


GASKET3_CORNERS = {"T": (5, 9), "L": (10, 11), "R": (15, 17)}


def derive_gasket(n: int, check_upto: int = 6) -> list[int]:
    graph = gasket(n)
    if n == 3:
        corners = gasket_corners(3)
        domains = {}
        for name, pair in GASKET3_CORNERS.items():
            domains |= _pin(graph, corners[name], pair)
        found = _search(graph, domains=domains)
        if found is None or not _recursion_holds(found, 3, _gasket_step, gasket, check_upto):
            raise ConstructionFailed("pinned gasket S_3 witness does not extend")
        return found
    found = _search(graph)
    if found is None:
        raise ConstructionFailed(f"no witness for gasket S_{n}")
    return found


def derive_glued_ternary_r1() -> list[int]:
    """K_{4,3} in glued-tree order with the top two copies on the largest labels."""
    graph = generate(FamilySpec.of(Family.GLUED_TREE, r=1, t=3, copies=4))
    domains = {e: frozenset({10, 11, 12}) for e in range(9, 12)}
    domains |= {e: frozenset({7, 8, 9}) for e in range(6, 9)}
    found = _search(graph, domains=domains)
    if found is None:
        raise ConstructionFailed("no witness for GT(1,3) with four copies")
    return found


def derive_ternary_r3() -> list[int]:
    """Levels one and two fixed; level three pinned per parent: {13,14,17}, {15,16,18}, then
    consecutive triples from 19 in breadth-first order."""
    spec = FamilySpec.of(Family.PERFECT_TREE, r=3, t=3)
    graph = generate(spec)
    top = [1, 3, 5, 2, 4, 12, 6, 7, 8, 9, 10, 11]
    fixed = dict(enumerate(top))
    triples = [(13, 14, 17), (15, 16, 18)] + [tuple(range(s, s + 3)) for s in range(19, 40, 3)]
    domains = {}
    for j, triple in enumerate(triples):
        for e in range(12 + 3 * j, 15 + 3 * j):
            domains[e] = frozenset(triple)
    config = SearchConfig(fixed_labels=fixed, domains=domains, node_budget=10 ** 7)
    found = constrained_search(graph, config, graph.m)
    if found is None:
        raise ConstructionFailed("no pinned witness for T(3,3)")
    return found


def _plain(spec: FamilySpec) -> list[int]:
    graph = generate(spec)
    found = _search(graph)
    if found is None:
        raise ConstructionFailed(f"no witness for {spec.family.value}")
    return found


def derivations() -> list[tuple[FamilySpec, Callable[[], list[int]]]]:
    S = FamilySpec.of
    return [
        (S(Family.PETERSEN), lambda: _plain(S(Family.PETERSEN))),
        (S(Family.COMPLETE4), lambda: _plain(S(Family.COMPLETE4))),
        (S(Family.CUBIC6_TRANSITIVE), lambda: _plain(S(Family.CUBIC6_TRANSITIVE))),
        (S(Family.CUBIC6_OTHER), lambda: _plain(S(Family.CUBIC6_OTHER))),
        (S(Family.SIERPINSKI, n=2), lambda: derive_sierpinski(2)),
        (S(Family.SIERPINSKI, n=3), lambda: derive_sierpinski(3)),
        (S(Family.GASKET, n=2), lambda: derive_gasket(2)),
        (S(Family.GASKET, n=3), lambda: derive_gasket(3)),
        (S(Family.GLUED_TREE, r=1, t=2, copies=3), lambda: _plain(S(Family.GLUED_TREE, r=1, t=2, copies=3))),
        (S(Family.GLUED_TREE, r=1, t=2, copies=4), lambda: _plain(S(Family.GLUED_TREE, r=1, t=2, copies=4))),
        (S(Family.GLUED_TREE, r=1, t=3, copies=4), derive_glued_ternary_r1),
        (S(Family.PERFECT_TREE, r=3, t=3), derive_ternary_r3),
    ]


def derive_all() -> list[dict]:
    entries = []
    for spec, derive in derivations():
        entries.append(
            {"family": spec.family.value, "params": spec.as_dict(), "labels": derive(), "version": CACHE_VERSION}
        )
    return entries


def regenerate(path: Path | None = None, write: bool = True) -> dict:
    """Re-derive every witness and compare with the stored cache.

    Raises :class:`ConstructionFailed` if any entry's verification status
    changes (a stored witness that verified is now missing or failing).
    """
    path = Path(path or cache_path())
    old = {}
    if path.exists():
        for entry in read_cache(path):
            old[(entry["family"], json.dumps(entry["params"], sort_keys=True))] = _entry_ok(entry)
    entries = derive_all()
    changed = []
    status = {}
    for entry in entries:
        key = (entry["family"], json.dumps(entry["params"], sort_keys=True))
        ok = _entry_ok(entry)
        status[key] = ok
        if key in old and old[key] != ok:
            changed.append(key)
    changed.extend(k for k in old if k not in status and old[k])
    if changed:
        raise ConstructionFailed(f"verification status changed for {changed}")
    if write:
        lines = ",\n".join(" " + json.dumps(e) for e in entries)
        path.write_text("[\n" + lines + "\n]\n")
        load_witnesses.cache_clear()
    return {"path": str(path), "entries": len(entries), "all_verified": all(status.values())}
