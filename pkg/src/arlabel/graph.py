"""Simple undirected graphs with stable edge indices, plus family generators.

Vertex and edge orderings are part of the contract because the constructors
address edges by position:

* path, cycle: vertices ``0..n-1`` in path/cyclic order, edge ``i`` joins
  ``i`` and ``i+1`` (the closing cycle edge is ``(n-1, 0)``).
* cycle_plus_path: cycle on ``0..n-1``, then the path ``n, n+1, ...``
  hanging off vertex 0.
* cycle_all_paths: cycle on ``0..n1-1``, then each cycle vertex's path in
  turn, from the cycle outward.
* prism: outer cycle ``0..n-1``, inner cycle ``n..2n-1``, then the rungs
  ``(i, n+i)``.
* perfect_tree: BFS order, children left to right; edge ``i`` joins vertex
  ``i+1`` to its parent.
* glued_tree: copy 0 is a perfect tree in BFS order; copies ``1..`` append
  their non-leaf vertices in BFS order and reuse the leaves of copy 0.  Edge
  ``c*mu + i`` is edge ``i`` of copy ``c``.
* sierpinski: vertices are the words of ``{1,2,3}^n`` in lexicographic order.
  Edges are listed recursively: the edges of the three blocks (words starting
  with 1, 2, 3, called M, L, R) followed by the bridges M-L, M-R, L-R.
* gasket: vertices in recursive block order M (top), L, R, each block
  contributing the vertices not already present; edges block by block.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Mapping, Sequence

from .errors import InvalidParameter, NonSimpleError

Edge = tuple[int, int]


@dataclass(frozen=True)
class Graph:
    """Finite simple undirected graph with edges indexed ``0..m-1``."""

    n: int
    edges: tuple[Edge, ...]
    adjacency: tuple[tuple[int, ...], ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.n < 0:
            raise InvalidParameter("vertex count must be non-negative")
        norm = []
        seen = set()
        inc: list[list[int]] = [[] for _ in range(self.n)]
        for idx, (u, v) in enumerate(self.edges):
            u, v = int(u), int(v)
            if u == v:
                raise NonSimpleError(f"self-loop at vertex {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise InvalidParameter(f"edge ({u}, {v}) out of range for n={self.n}")
            key = (min(u, v), max(u, v))
            if key in seen:
                raise NonSimpleError(f"duplicate edge {key}")
            seen.add(key)
            norm.append(key)
            inc[u].append(idx)
            inc[v].append(idx)
        object.__setattr__(self, "edges", tuple(norm))
        object.__setattr__(self, "adjacency", tuple(tuple(a) for a in inc))

    @property
    def m(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def degrees(self) -> list[int]:
        return [len(a) for a in self.adjacency]

    def max_degree(self) -> int:
        return max((len(a) for a in self.adjacency), default=0)

    def neighbors(self, v: int) -> list[int]:
        out = []
        for e in self.adjacency[v]:
            a, b = self.edges[e]
            out.append(b if a == v else a)
        return out

    def other(self, e: int, v: int) -> int:
        a, b = self.edges[e]
        return b if a == v else a

    def edge_index(self, u: int, v: int) -> int:
        key = (min(u, v), max(u, v))
        for e in self.adjacency[u]:
            if self.edges[e] == key:
                return e
        raise KeyError(key)

    def has_edge(self, u: int, v: int) -> bool:
        try:
            self.edge_index(u, v)
        except KeyError:
            return False
        return True

    def incident_labels(self, labels: Sequence[int], v: int) -> list[int]:
        return [labels[e] for e in self.adjacency[v]]


def from_edges(edges: Iterable[Edge], n: int | None = None) -> Graph:
    edges = [tuple(e) for e in edges]
    if n is None:
        n = 1 + max((max(e) for e in edges), default=-1)
    return Graph(n, tuple(edges))


def attach_path(graph: Graph, vertex: int, length: int) -> Graph:
    """Return ``graph`` with a new path of ``length`` edges hanging off ``vertex``.

    New vertices are ``n, n+1, ...`` and the new edges are appended in order
    from ``vertex`` outward.
    """
    if length < 1:
        raise InvalidParameter("path length must be at least 1")
    if not 0 <= vertex < graph.n:
        raise InvalidParameter(f"vertex {vertex} not in graph")
    edges = list(graph.edges)
    prev = vertex
    for i in range(length):
        edges.append((prev, graph.n + i))
        prev = graph.n + i
    return Graph(graph.n + length, tuple(edges))


# ---------------------------------------------------------------------------
# family catalog


class Family(str, enum.Enum):
    PATH = "path"
    CYCLE = "cycle"
    CYCLE_PLUS_PATH = "cycle_plus_path"
    PENDANT_PATH_EXTENSION = "pendant_path_extension"
    DEGREE2_PATH_EXTENSION = "degree2_path_extension"
    CYCLE_ALL_PATHS = "cycle_all_paths"
    PRISM = "prism"
    PETERSEN = "petersen"
    COMPLETE4 = "complete4"
    COMPLETE_BIPARTITE = "complete_bipartite"
    CUBIC6_TRANSITIVE = "cubic6_transitive"
    CUBIC6_OTHER = "cubic6_other"
    SIERPINSKI = "sierpinski"
    GASKET = "gasket"
    PERFECT_TREE = "perfect_tree"
    GLUED_TREE = "glued_tree"


# required parameters and their defaults (None = required)
_PARAMS: dict[Family, dict[str, int | None]] = {
    Family.PATH: {"n": None},
    Family.CYCLE: {"n": None},
    Family.CYCLE_PLUS_PATH: {"n": None, "length": 1},
    Family.PENDANT_PATH_EXTENSION: {"n": None, "length": 1},
    Family.DEGREE2_PATH_EXTENSION: {"n": None, "length": 2},
    Family.CYCLE_ALL_PATHS: {"n1": None, "length": 1},
    Family.PRISM: {"n": None},
    Family.PETERSEN: {},
    Family.COMPLETE4: {},
    Family.COMPLETE_BIPARTITE: {"p": None, "q": None},
    Family.CUBIC6_TRANSITIVE: {},
    Family.CUBIC6_OTHER: {},
    Family.SIERPINSKI: {"n": None},
    Family.GASKET: {"n": None},
    Family.PERFECT_TREE: {"r": None, "t": 2},
    Family.GLUED_TREE: {"r": None, "t": 2, "copies": 2},
}


@dataclass(frozen=True)
class FamilySpec:
    family: Family
    params: tuple[tuple[str, int], ...] = ()

    @classmethod
    def of(cls, family: str | Family, **params: int) -> "FamilySpec":
        fam = Family(family)
        schema = _PARAMS[fam]
        unknown = set(params) - set(schema)
        if unknown:
            raise InvalidParameter(f"{fam.value}: unknown parameter(s) {sorted(unknown)}")
        full = {}
        for name, default in schema.items():
            if name in params:
                full[name] = int(params[name])
            elif default is None:
                raise InvalidParameter(f"{fam.value}: missing parameter {name!r}")
            else:
                full[name] = default
        spec = cls(fam, tuple(sorted(full.items())))
        spec.validate()
        return spec

    def __getitem__(self, name: str) -> int:
        return dict(self.params)[name]

    def as_dict(self) -> dict[str, int]:
        return dict(self.params)

    @property
    def supported_by_constructors(self) -> bool:
        return not (self.family is Family.GLUED_TREE and self["copies"] > 4)

    def validate(self) -> None:
        p = self.as_dict()
        f = self.family

        def need(cond, msg):
            if not cond:
                raise InvalidParameter(f"{f.value}: {msg}")

        if f is Family.PATH:
            need(p["n"] >= 2, "path needs n >= 2 vertices")
        elif f in (Family.CYCLE, Family.PRISM):
            need(p["n"] >= 3, "n must be at least 3")
        elif f in (Family.CYCLE_PLUS_PATH, Family.PENDANT_PATH_EXTENSION):
            need(p["n"] >= 3, "cycle needs n >= 3")
            need(p["length"] >= 1, "length must be at least 1")
        elif f is Family.DEGREE2_PATH_EXTENSION:
            need(p["n"] >= 3, "cycle needs n >= 3")
            need(p["length"] >= 2, "attached path needs length >= 2")
        elif f is Family.CYCLE_ALL_PATHS:
            need(p["n1"] >= 3, "cycle needs n1 >= 3")
            need(p["length"] >= 1, "length must be at least 1")
        elif f is Family.COMPLETE_BIPARTITE:
            need(p["p"] >= 1 and p["q"] >= 1, "parts must be non-empty")
        elif f in (Family.SIERPINSKI, Family.GASKET):
            need(p["n"] >= 1, "n must be at least 1")
        elif f is Family.PERFECT_TREE:
            need(p["r"] >= 1, "depth r must be at least 1")
            need(p["t"] in (2, 3), "t must be 2 or 3")
        elif f is Family.GLUED_TREE:
            need(p["r"] >= 1, "depth r must be at least 1")
            need(p["t"] in (2, 3), "t must be 2 or 3")
            need(p["copies"] >= 2, "need at least two copies")


# ---------------------------------------------------------------------------
# generators


def path(n: int) -> Graph:
    return Graph(n, tuple((i, i + 1) for i in range(n - 1)))


def cycle(n: int) -> Graph:
    return Graph(n, tuple((i, (i + 1) % n) for i in range(n)))


def star(leaves: int) -> Graph:
    return complete_bipartite(1, leaves)


def cycle_plus_path(n: int, length: int) -> Graph:
    return attach_path(cycle(n), 0, length)


def cycle_with_paths(lengths: Sequence[int]) -> Graph:
    """Cycle ``C_len(lengths)`` with a path of ``lengths[i]`` edges on vertex ``i``."""
    n1 = len(lengths)
    if n1 < 3:
        raise InvalidParameter("cycle needs at least 3 vertices")
    if any(L < 1 for L in lengths):
        raise InvalidParameter("every attached path needs length >= 1")
    g = cycle(n1)
    for i, L in enumerate(lengths):
        g = attach_path(g, i, L)
    return g


def prism(n: int) -> Graph:
    outer = [(i, (i + 1) % n) for i in range(n)]
    inner = [(n + i, n + (i + 1) % n) for i in range(n)]
    rungs = [(i, n + i) for i in range(n)]
    return Graph(2 * n, tuple(outer + inner + rungs))


def mobius_ladder(n: int) -> Graph:
    """Cubic circulant on ``2n`` vertices: a ``2n``-cycle plus the long diagonals."""
    N = 2 * n
    rim = [(i, (i + 1) % N) for i in range(N)]
    spokes = [(i, i + n) for i in range(n)]
    return Graph(N, tuple(rim + spokes))


def generalized_petersen(n: int, k: int) -> Graph:
    outer = [(i, (i + 1) % n) for i in range(n)]
    inner = []
    seen = set()
    for i in range(n):
        a, b = n + i, n + (i + k) % n
        key = (min(a, b), max(a, b))
        if key not in seen:
            seen.add(key)
            inner.append(key)
    spokes = [(i, n + i) for i in range(n)]
    return Graph(2 * n, tuple(outer + inner + spokes))


def petersen() -> Graph:
    return generalized_petersen(5, 2)


def complete(n: int) -> Graph:
    return Graph(n, tuple(combinations(range(n), 2)))


def complete_bipartite(p: int, q: int) -> Graph:
    return Graph(p + q, tuple((i, p + j) for i in range(p) for j in range(q)))


def sierpinski_word(index: int, n: int) -> tuple[int, ...]:
    digits = []
    for _ in range(n):
        digits.append(index % 3 + 1)
        index //= 3
    return tuple(reversed(digits))


def sierpinski_index(word: Sequence[int]) -> int:
    idx = 0
    for d in word:
        idx = idx * 3 + (d - 1)
    return idx


def _sierpinski_word_edges(n: int) -> list[tuple[tuple[int, ...], tuple[int, ...]]]:
    if n == 0:
        return []
    sub = _sierpinski_word_edges(n - 1)
    out = []
    for c in (1, 2, 3):
        out.extend(((c,) + u, (c,) + v) for u, v in sub)
    for i, j in ((1, 2), (1, 3), (2, 3)):
        out.append(((i,) + (j,) * (n - 1), (j,) + (i,) * (n - 1)))
    return out


def sierpinski(n: int) -> Graph:
    """Sierpinski graph S(n,3) on the words {1,2,3}^n."""
    edges = [(sierpinski_index(u), sierpinski_index(v)) for u, v in _sierpinski_word_edges(n)]
    return Graph(3 ** n, tuple(edges))


def sierpinski_adjacent(u: Sequence[int], v: Sequence[int]) -> bool:
    """Direct adjacency rule on words, independent of the recursive generator."""
    n = len(u)
    for h in range(n):
        if u[:h] != v[:h] or u[h] == v[h]:
            continue
        if all(u[t] == v[h] and v[t] == u[h] for t in range(h + 1, n)):
            return True
    return False


def _gasket_coords(n: int) -> tuple[list[tuple[int, int]], list[tuple[tuple[int, int], tuple[int, int]]]]:
    # side 2^(n-1) lattice units; corners L=(0,0), R=(2s,0), T=(s,s)
    if n == 1:
        T, L, R = (1, 1), (0, 0), (2, 0)
        return [T, L, R], [(T, L), (T, R), (L, R)]
    sub_v, sub_e = _gasket_coords(n - 1)
    h = 2 ** (n - 2)
    offsets = [(h, h), (0, 0), (2 * h, 0)]  # M, L, R
    verts: list[tuple[int, int]] = []
    seen = set()
    edges = []
    for dx, dy in offsets:
        for x, y in sub_v:
            p = (x + dx, y + dy)
            if p not in seen:
                seen.add(p)
                verts.append(p)
        edges.extend(((a[0] + dx, a[1] + dy), (b[0] + dx, b[1] + dy)) for a, b in sub_e)
    return verts, edges


def gasket(n: int) -> Graph:
    """Sierpinski gasket graph S_n (3^n edges)."""
    verts, edges = _gasket_coords(n)
    index = {p: i for i, p in enumerate(verts)}
    return Graph(len(verts), tuple((index[a], index[b]) for a, b in edges))


def gasket_corners(n: int) -> dict[str, int]:
    """Vertex indices of the top, left and right corners of ``gasket(n)``."""
    verts, _ = _gasket_coords(n)
    s = 2 ** (n - 1)
    index = {p: i for i, p in enumerate(verts)}
    return {"T": index[(s, s)], "L": index[(0, 0)], "R": index[(2 * s, 0)]}


def perfect_tree(r: int, t: int) -> Graph:
    count = (t ** (r + 1) - 1) // (t - 1)
    return Graph(count, tuple(((i - 1) // t, i) for i in range(1, count)))


def tree_levels(r: int, t: int) -> list[list[int]]:
    """Vertex indices of ``perfect_tree(r, t)`` grouped by depth."""
    levels = []
    start = 0
    for d in range(r + 1):
        size = t ** d
        levels.append(list(range(start, start + size)))
        start += size
    return levels


def glued_tree(r: int, t: int, copies: int) -> Graph:
    base = perfect_tree(r, t)
    N = base.n
    leaves = t ** r
    inner = N - leaves
    edges = list(base.edges)
    for c in range(1, copies):

        def relabel(v, c=c):
            return v if v >= inner else N + (c - 1) * inner + v

        edges.extend((relabel(p), relabel(ch)) for p, ch in base.edges)
    return Graph(N + (copies - 1) * inner, tuple(edges))


def glued_tree_roots(r: int, t: int, copies: int) -> list[int]:
    N = (t ** (r + 1) - 1) // (t - 1)
    inner = N - t ** r
    return [0] + [N + (c - 1) * inner for c in range(1, copies)]


def generate(spec: FamilySpec) -> Graph:
    """Build the graph named by ``spec`` (orderings documented in the module docstring)."""
    p = spec.as_dict()
    f = spec.family
    if f is Family.PATH:
        return path(p["n"])
    if f is Family.CYCLE:
        return cycle(p["n"])
    if f is Family.CYCLE_PLUS_PATH:
        return cycle_plus_path(p["n"], p["length"])
    if f is Family.PENDANT_PATH_EXTENSION:
        # canonical base: C_n with one pendant edge at 0; extend from the pendant vertex
        return attach_path(cycle_plus_path(p["n"], 1), p["n"], p["length"])
    if f is Family.DEGREE2_PATH_EXTENSION:
        # canonical base: C_n with one pendant edge at 0; extend from cycle vertex 1
        return attach_path(cycle_plus_path(p["n"], 1), 1, p["length"])
    if f is Family.CYCLE_ALL_PATHS:
        return cycle_with_paths([p["length"]] * p["n1"])
    if f is Family.PRISM:
        return prism(p["n"])
    if f is Family.PETERSEN:
        return petersen()
    if f is Family.COMPLETE4:
        return complete(4)
    if f is Family.COMPLETE_BIPARTITE:
        return complete_bipartite(p["p"], p["q"])
    if f is Family.CUBIC6_TRANSITIVE:
        return complete_bipartite(3, 3)
    if f is Family.CUBIC6_OTHER:
        return prism(3)
    if f is Family.SIERPINSKI:
        return sierpinski(p["n"])
    if f is Family.GASKET:
        return gasket(p["n"])
    if f is Family.PERFECT_TREE:
        return perfect_tree(p["r"], p["t"])
    if f is Family.GLUED_TREE:
        return glued_tree(p["r"], p["t"], p["copies"])
    raise InvalidParameter(f"unknown family {f}")


def is_cubic(graph: Graph) -> bool:
    return graph.n > 0 and all(len(a) == 3 for a in graph.adjacency)


def is_connected(graph: Graph) -> bool:
    if graph.n == 0:
        return True
    seen = {0}
    stack = [0]
    while stack:
        v = stack.pop()
        for w in graph.neighbors(v):
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == graph.n


def relabel_vertices(graph: Graph, perm: Mapping[int, int] | Sequence[int]) -> Graph:
    """Image of ``graph`` under a vertex bijection; edge order is preserved."""
    return Graph(graph.n, tuple((perm[u], perm[v]) for u, v in graph.edges))
