from itertools import permutations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from arlabel.cycles import (
    cycle_edges,
    find_cycle_vertex_partition,
    find_hamiltonian_cycle,
    is_cycle_cover,
    is_hamiltonian_cycle,
)
from arlabel.errors import TimeBudgetExceeded
from arlabel.graph import Graph, complete, cycle, generalized_petersen, path, petersen, prism, star


def brute_hamiltonian(g: Graph) -> bool:
    if g.n < 3:
        return False
    for rest in permutations(range(1, g.n)):
        order = (0,) + rest
        if all(g.has_edge(order[i], order[(i + 1) % g.n]) for i in range(g.n)):
            return True
    return False


def brute_two_factor(g: Graph) -> bool:
    """Some set of edges gives every vertex degree exactly two."""
    from itertools import combinations

    for sub in combinations(range(g.m), g.n):
        deg = [0] * g.n
        for e in sub:
            u, v = g.edges[e]
            deg[u] += 1
            deg[v] += 1
        if all(d == 2 for d in deg):
            return True
    return False


def test_prism_hamiltonian():
    cyc = find_hamiltonian_cycle(prism(3))
    assert len(cyc) == 6 and is_hamiltonian_cycle(prism(3), cyc)


def test_petersen_not_hamiltonian():
    assert find_hamiltonian_cycle(petersen()) is None


def test_star_not_hamiltonian():
    assert find_hamiltonian_cycle(star(3)) is None


def test_prism_partition_two_triangles():
    assert find_cycle_vertex_partition(prism(3)) == [[0, 1, 2], [3, 4, 5]]


def test_k4_partition_is_a_four_cycle():
    (c,) = find_cycle_vertex_partition(complete(4))
    assert sorted(c) == [0, 1, 2, 3]


def test_path_has_no_partition():
    assert find_cycle_vertex_partition(path(4)) is None


def test_petersen_partition_two_pentagons():
    parts = find_cycle_vertex_partition(petersen())
    assert sorted(map(len, parts)) == [5, 5] and is_cycle_cover(petersen(), parts)


def test_cycle_edges_order():
    g = cycle(5)
    assert cycle_edges(g, [0, 1, 2, 3, 4]) == [0, 1, 2, 3, 4]


def test_budget():
    with pytest.raises(TimeBudgetExceeded):
        find_hamiltonian_cycle(generalized_petersen(7, 2), node_budget=3)


def test_deterministic():
    g = generalized_petersen(8, 3)
    assert find_hamiltonian_cycle(g) == find_hamiltonian_cycle(g)


@st.composite
def small_graphs(draw):
    n = draw(st.integers(3, 7))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    edges = draw(st.lists(st.sampled_from(pairs), unique=True, max_size=len(pairs)))
    return Graph(n, tuple(sorted(edges)))


@settings(max_examples=150)
@given(small_graphs())
def test_hamiltonian_matches_brute_force(g):
    cyc = find_hamiltonian_cycle(g)
    assert (cyc is not None) == brute_hamiltonian(g)
    if cyc is not None:
        assert is_hamiltonian_cycle(g, cyc)


@settings(max_examples=150)
@given(small_graphs())
def test_partition_matches_brute_force(g):
    parts = find_cycle_vertex_partition(g)
    assert (parts is not None) == brute_two_factor(g)
    if parts is not None:
        assert is_cycle_cover(g, parts)
