import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from arlabel.errors import DegreeTooLarge, LengthMismatch
from arlabel.graph import Graph, cycle, star
from arlabel.verify import (
    Collision,
    SumSet,
    extend_sum_set,
    find_collision,
    is_ar_vertex,
    is_sum_distinct,
    signed_zero_combination,
    subset_sums,
    verify_labeling,
)
from oracles import naive_signed_zero, naive_sum_distinct

injective = st.lists(st.integers(1, 100), max_size=8, unique=True)


def test_subset_sums_examples():
    s = subset_sums([1, 2, 4])
    assert s.sums == frozenset(range(8)) and s.total == 7 and s.sum_distinct
    assert subset_sums([]).sums == frozenset({0})
    t = subset_sums([1, 2, 3])
    assert t.sums == frozenset(range(7)) and not t.sum_distinct


@pytest.mark.parametrize(
    "labels,expected",
    [([1, 2, 4, 8], True), ([2, 3, 4], True), ([19, 20, 39], False), ([307, 308, 615], False), ([3, 5, 6, 7], True)],
)
def test_is_sum_distinct_examples(labels, expected):
    assert is_sum_distinct(labels) is expected
    assert naive_sum_distinct(labels) is expected


def test_signed_zero_examples():
    assert signed_zero_combination([1, 2, 3])
    assert not signed_zero_combination([1, 2, 4])
    assert not signed_zero_combination([3, 5, 6, 7])


def test_extend_examples():
    base = subset_sums([1, 2])
    assert extend_sum_set(base, 4).sums == frozenset(range(8))
    hit = extend_sum_set(base, 3)
    assert isinstance(hit, Collision) and hit.base_sum + 3 == hit.colliding_sum
    assert isinstance(extend_sum_set(base, 1), Collision)


def test_degree_cap():
    with pytest.raises(DegreeTooLarge):
        is_sum_distinct(list(range(1, 32)))
    with pytest.raises(DegreeTooLarge):
        subset_sums([1] * 31)
    assert is_sum_distinct(list(range(1, 32)), cap=31) is False


def test_large_labels_use_set_route():
    big = [2 ** 40, 2 ** 41, 2 ** 41 + 2 ** 40]
    assert not is_sum_distinct(big)
    assert is_sum_distinct([2 ** 40, 2 ** 41, 2 ** 43])


@given(injective)
def test_oracle_equivalence(labels):
    assert is_sum_distinct(labels) == (not signed_zero_combination(labels))
    assert is_sum_distinct(labels) == naive_sum_distinct(labels)
    assert signed_zero_combination(labels) == naive_signed_zero(labels)


@given(injective, st.integers(1, 100))
def test_incremental_soundness(labels, x):
    assume(is_sum_distinct(labels))
    out = extend_sum_set(subset_sums(labels), x)
    ok = x not in labels and is_sum_distinct(labels + [x])
    assert isinstance(out, SumSet) == ok
    if ok:
        assert out.sums == subset_sums(labels + [x]).sums
    else:
        assert out.base_sum in subset_sums(labels).sums and out.colliding_sum in subset_sums(labels).sums


@given(injective, st.integers(1, 100))
def test_monotone_failure(labels, x):
    assume(not is_sum_distinct(labels))
    assert not is_sum_distinct(labels + [x])


@given(st.lists(st.integers(1, 50), min_size=1, max_size=8))
def test_find_collision_certificate(labels):
    hit = find_collision(labels)
    assert (hit is None) == naive_sum_distinct(labels) or len(set(labels)) < len(labels)
    if hit is not None:
        a, b = hit
        assert set(a) != set(b)
        assert sum(labels[i] for i in a) == sum(labels[i] for i in b)


def test_verify_examples():
    r = verify_labeling(cycle(3), [1, 2, 3], require_compact=True)
    assert r.ok and r.is_ar_labeling and r.is_compact
    r = verify_labeling(star(3), [1, 2, 4])
    assert r.is_ar_labeling and not r.is_compact
    assert not verify_labeling(star(3), [1, 2, 4], require_compact=True).ok
    r = verify_labeling(star(3), [1, 2, 3])
    assert not r.is_ar_labeling
    (f,) = r.failing_vertices
    assert f.vertex == 0
    assert sorted([sorted(f.subset_a), sorted(f.subset_b)]) == [[1, 2], [3]]
    assert r.to_dict() == {"ar": False, "compact": True, "failures": [{"vertex": 0, "subset_a": [1, 2], "subset_b": [3]}]}


def test_verify_rejects_non_injective():
    r = verify_labeling(cycle(4), [1, 1, 2, 3])
    assert not r.injectivity_ok and not r.is_ar_labeling
    # the two 1s meet at vertex 1, which also fails as a repeated sum
    assert [f.vertex for f in r.failing_vertices] == [1]
    r = verify_labeling(cycle(4), [1, 2, 1, 3])
    assert not r.injectivity_ok and not r.is_ar_labeling and not r.failing_vertices


def test_verify_length_mismatch():
    with pytest.raises(LengthMismatch):
        verify_labeling(cycle(4), [1, 2, 3])


def test_ar_vertex_examples():
    g = Graph(4, ((0, 1), (0, 2), (0, 3)))
    assert not is_ar_vertex(g, [1, 2, 3], 0)
    assert is_ar_vertex(g, [1, 3, 5], 0)


@st.composite
def labeled_graphs(draw):
    n = draw(st.integers(2, 9))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    edges = draw(st.lists(st.sampled_from(pairs), unique=True, min_size=1, max_size=min(14, len(pairs))))
    labels = draw(st.lists(st.integers(1, 60), min_size=len(edges), max_size=len(edges), unique=True))
    return Graph(n, tuple(edges)), labels


@given(labeled_graphs())
def test_degree_two_vertices_always_pass(gl):
    g, labels = gl
    for v in range(g.n):
        if g.degree(v) <= 2:
            assert is_ar_vertex(g, labels, v)


@given(labeled_graphs())
def test_report_invariants(gl):
    g, labels = gl
    r = verify_labeling(g, labels)
    assert r.is_ar_labeling == (not r.failing_vertices and r.injectivity_ok)
    for f in r.failing_vertices:
        assert set(f.edges_a) != set(f.edges_b)
        assert set(f.edges_a) | set(f.edges_b) <= set(g.adjacency[f.vertex])
        assert sum(labels[e] for e in f.edges_a) == sum(labels[e] for e in f.edges_b)
    bad = {v for v in range(g.n) if not naive_sum_distinct(g.incident_labels(labels, v))}
    assert {f.vertex for f in r.failing_vertices} == bad
