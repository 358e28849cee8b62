import numpy as np
import pytest

import trimat as tm
from trimat.graph import degrees_all

from .conftest import scalar_triangle_exists


def test_from_edge_list_single_triangle(single_triangle):
    g = single_triangle
    assert g.ab.get(0, 0) and g.ac.get(0, 0) and g.bc.get(0, 0)


def test_from_edge_list_edgeless_and_duplicates():
    g = tm.from_edge_list(2, 2, 2, [])
    assert g.ab.count() == g.ac.count() == g.bc.count() == 0

    g2 = tm.from_edge_list(1, 1, 1, [("AB", 0, 0), ("AB", 0, 0)])
    assert g2.ab.count() == 1


def test_from_edge_list_rejects_bad_input():
    with pytest.raises(IndexError):
        tm.from_edge_list(1, 1, 1, [("AB", 0, 5)])
    with pytest.raises(ValueError):
        tm.from_edge_list(1, 1, 1, [("AD", 0, 0)])


def test_degree_sums_match_edge_counts():
    rng = tm.CounterRng(53)
    g = tm.random_tripartite(rng, 30, 30, 30, 0.2)
    sub = g.full_view()
    db, dc = degrees_all(g, sub)
    assert int(db.sum()) == g.ab.count()
    assert int(dc.sum()) == g.ac.count()


def test_degree_trivial(single_triangle):
    sub = single_triangle.full_view()
    assert tm.degree(single_triangle, sub, 0, "B") == 1
    assert tm.degree(single_triangle, sub, 0, "C") == 1

    edgeless = tm.from_edge_list(3, 3, 3, [])
    assert tm.degree(edgeless, edgeless.full_view(), 1, "B") == 0


def test_degree_matches_scalar_count_on_random_views():
    rng = tm.CounterRng(59)
    g = tm.random_tripartite(rng, 25, 40, 35, 0.3)
    sub = tm.SubInstance(
        g,
        np.arange(0, 25, 2),
        np.arange(1, 40, 3),
        np.arange(0, 35, 4),
    )
    for v in sub.ia:
        v = int(v)
        expect_b = sum(1 for b in sub.ib if g.ab.get(v, int(b)))
        expect_c = sum(1 for c in sub.ic if g.ac.get(v, int(c)))
        assert tm.degree(g, sub, v, "B") == expect_b
        assert tm.degree(g, sub, v, "C") == expect_c
        assert tm.degree(g, sub, v, "B") == len(tm.neighborhood(g, sub, v, "B"))


def test_degree_requires_vertex_in_view():
    g = tm.from_edge_list(4, 4, 4, [])
    sub = tm.SubInstance(g, [0, 2], np.arange(4), np.arange(4))
    with pytest.raises(ValueError):
        tm.degree(g, sub, 1, "B")
    with pytest.raises(ValueError):
        tm.neighborhood(g, sub, 3, "C")


def test_neighborhood_trivial(single_triangle):
    sub = single_triangle.full_view()
    assert list(tm.neighborhood(single_triangle, sub, 0, "B")) == [0]

    edgeless = tm.from_edge_list(2, 2, 2, [])
    assert len(tm.neighborhood(edgeless, edgeless.full_view(), 0, "B")) == 0


def test_neighborhood_and_complement_partition_the_part():
    rng = tm.CounterRng(61)
    g = tm.random_tripartite(rng, 20, 33, 27, 0.4)
    sub = tm.SubInstance(g, np.arange(20), np.arange(0, 33, 2), np.arange(1, 27, 2))
    for v in (0, 7, 19):
        for part in ("B", "C"):
            nbh = tm.neighborhood(g, sub, v, part)
            rest = tm.complement_in(sub, part, nbh)
            merged = np.sort(np.concatenate([nbh, rest]))
            assert np.array_equal(merged, sub.part_indices(part))


def test_restrict_identity_empty_and_triangle_removal(single_triangle):
    g = single_triangle
    sub = g.full_view()
    same = sub.restrict(sub.ia, sub.ib, sub.ic)
    assert same.na == 1 and same.nb == 1 and same.nc == 1

    no_a = sub.restrict([], sub.ib, sub.ic)
    assert not tm.brute_triangle(g, no_a).found

    c1 = tm.neighborhood(g, sub, 0, "C")
    cut = sub.restrict(sub.ia, sub.ib, tm.complement_in(sub, "C", c1))
    assert not tm.brute_triangle(g, cut).found


def test_restrict_is_monotone():
    rng = tm.CounterRng(67)
    g = tm.random_tripartite(rng, 12, 12, 12, 0.5)
    sub = g.full_view()
    small = sub.restrict(np.arange(6), np.arange(6), np.arange(6))
    v = tm.brute_triangle(g, small)
    if v.found:
        assert tm.brute_triangle(g, sub).found


def test_runstats_merge():
    a = tm.RunStats(triples_enumerated=3, table_queries=2)
    b = tm.RunStats(triples_enumerated=4, sparse_calls=1)
    a.merge(b)
    assert a.triples_enumerated == 7
    assert a.table_queries == 2
    assert a.sparse_calls == 1
    assert a.as_lines()[0] == "triples_enumerated=7"


def test_graph_text_roundtrip_with_comments():
    text = "# tiny instance\n3 2 2\nAB 0 1\n\nAC 2 0  # trailing note\nBC 1 1\n"
    g = tm.parse_graph_text(text)
    assert (g.nA, g.nB, g.nC) == (3, 2, 2)
    assert g.ab.get(0, 1) and g.ac.get(2, 0) and g.bc.get(1, 1)
    again = tm.parse_graph_text(tm.format_graph_text(g))
    assert tm.format_graph_text(again) == tm.format_graph_text(g)


def test_graph_text_errors_carry_line_numbers():
    with pytest.raises(tm.FormatError) as err:
        tm.parse_graph_text("2 2 2\nXY 0 0\n")
    assert err.value.line_no == 2
    with pytest.raises(tm.FormatError) as err:
        tm.parse_graph_text("2 2 2\nAB 0 9\n")
    assert err.value.line_no == 2
    with pytest.raises(tm.FormatError):
        tm.parse_graph_text("")


def test_three_copy_construction_preserves_triangles():
    # K3 has a triangle, the 4-path does not.
    k3 = tm.from_general_graph(3, [(0, 1), (1, 2), (0, 2)])
    assert tm.detect(k3).found
    path = tm.from_general_graph(4, [(0, 1), (1, 2), (2, 3)])
    assert not tm.detect(path).found

    rng = tm.CounterRng(71)
    for _ in range(20):
        n = 3 + rng.next_below(8)
        edges = [
            (u, v)
            for u in range(n)
            for v in range(u + 1, n)
            if rng.next_below(3) == 0
        ]
        g3 = tm.from_general_graph(n, edges)
        eset = set(edges)

        def has(u, v):
            return (u, v) in eset or (v, u) in eset

        expect = any(
            has(a, b) and has(a, c) and has(b, c)
            for a in range(n)
            for b in range(a + 1, n)
            for c in range(b + 1, n)
        )
        assert tm.detect(g3).found == expect
        assert scalar_triangle_exists(g3) == expect
