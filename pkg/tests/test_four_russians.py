import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import trimat as tm
from trimat.four_russians import (
    build_pair_table,
    encode_subset,
    estimate_table_entries,
    partition_chunks,
)

from .conftest import assert_witness_valid, complete_tripartite


def exhaustive_pair_check(g, ib, ic, table):
    """Every table entry vs a scalar double loop over the two subsets."""
    gs = table.group_size
    mismatches = 0
    for sb, (gb, ob) in enumerate(table.b_subsets):
        for sc, (gc, oc) in enumerate(table.c_subsets):
            expect = any(
                g.bc.get(int(ib[gb * gs + u]), int(ic[gc * gs + w]))
                for u in ob
                for w in oc
            )
            if bool(table.entries[sb, sc]) != expect:
                mismatches += 1
    return mismatches


def test_degree_condition_edgeless_and_complete():
    edgeless = tm.from_edge_list(5, 5, 5, [])
    assert tm.check_degree_condition(edgeless, edgeless.full_view(), 3) is None

    dense = complete_tripartite(8, 8, 8)
    # every vertex has 8*8 = 64 > 64/4 = 16; the lowest index wins
    assert tm.check_degree_condition(dense, dense.full_view(), 2) == 0


def test_degree_condition_matches_scalar_scan():
    rng = tm.CounterRng(73)
    g = tm.random_tripartite(rng, 100, 100, 100, 0.15)
    sub = g.full_view()
    delta = 3
    expected = None
    for v in range(100):
        db = sum(1 for b in range(100) if g.ab.get(v, b))
        dc = sum(1 for c in range(100) if g.ac.get(v, c))
        if db * dc * delta * delta > 100 * 100:
            expected = v
            break
    assert tm.check_degree_condition(g, sub, delta) == expected


def test_subset_encoding_is_injective():
    params = tm.SparseParams(delta=2)
    gs, cap = params.group_size, params.subset_cap
    bits = gs.bit_length()
    seen = {}
    from itertools import combinations

    for group in range(3):
        for size in range(cap + 1):
            for offs in combinations(range(gs), size):
                key = encode_subset(group, offs, bits, cap, gs)
                assert key not in seen, (seen[key], (group, offs))
                seen[key] = (group, offs)


def test_pair_table_edgeless_and_complete():
    params = tm.SparseParams(delta=2)
    edgeless = tm.TripartiteGraph(1, 20, 20)
    t = build_pair_table(edgeless, np.arange(20), np.arange(20), params)
    assert not t.entries.any()

    dense = tm.TripartiteGraph(1, 12, 12)
    for b in range(12):
        for c in range(12):
            dense.bc.set(b, c)
    t2 = build_pair_table(dense, np.arange(12), np.arange(12), params)
    for sb, (_, ob) in enumerate(t2.b_subsets):
        for sc, (_, oc) in enumerate(t2.c_subsets):
            assert bool(t2.entries[sb, sc]) == (bool(ob) and bool(oc))


def test_pair_table_random_matches_exhaustive_check():
    rng = tm.CounterRng(79)
    g = tm.random_tripartite(rng, 1, 40, 40, 0.08)
    ib, ic = np.arange(40), np.arange(40)
    table = build_pair_table(g, ib, ic, tm.SparseParams(delta=2))
    assert exhaustive_pair_check(g, ib, ic, table) == 0


def test_pair_table_budget_error():
    params = tm.SparseParams(delta=3, max_table_entries=1000)
    g = tm.TripartiteGraph(1, 60, 60)
    with pytest.raises(tm.TableBudgetError) as err:
        build_pair_table(g, np.arange(60), np.arange(60), params)
    assert err.value.estimated_entries > 1000
    assert estimate_table_entries(60, 60, params) == err.value.estimated_entries


@settings(max_examples=60, deadline=None)
@given(
    positions=st.lists(st.integers(0, 80), unique=True, max_size=40),
    delta=st.integers(1, 3),
)
def test_chunk_partition_properties(positions, delta):
    positions = np.asarray(sorted(positions), dtype=np.int64)
    gs, cap = delta**3, delta
    chunks = partition_chunks(positions, gs, cap)

    rebuilt = []
    for group, offs in chunks:
        assert 1 <= len(offs) <= cap
        assert all(0 <= o < gs for o in offs)
        rebuilt.extend(group * gs + o for o in offs)
    # completeness and disjointness: the chunks are exactly the neighborhood
    assert sorted(rebuilt) == list(positions)
    assert len(rebuilt) == len(set(rebuilt))

    if len(positions):
        groups_touched = len({int(p) // gs for p in positions})
        bound = groups_touched + -(-len(positions) // cap)
        assert len(chunks) <= bound


def test_sparse_detect_trivial(single_triangle):
    stats = tm.RunStats()
    v = tm.sparse_detect(single_triangle, single_triangle.full_view(), tm.SparseParams(1), stats)
    assert v.found and v.witness == (0, 0, 0)
    assert stats.sparse_calls == 1
    assert stats.table_queries >= 1


def test_sparse_detect_no_bc_edges():
    g = complete_tripartite(6, 6, 6)
    g.bc = tm.BitMatrix(6, 6)
    stats = tm.RunStats()
    assert not tm.sparse_detect(g, g.full_view(), tm.SparseParams(2), stats).found


def test_sparse_detect_matches_brute_force_when_precondition_holds():
    rng = tm.CounterRng(83)
    checked = 0
    params = tm.SparseParams(delta=2, check_precondition=True)
    while checked < 40:
        na, nb, nc = (1 + rng.next_below(60) for _ in range(3))
        g = tm.random_tripartite(rng, na, nb, nc, 0.05)
        sub = g.full_view()
        if tm.check_degree_condition(g, sub, 2) is not None:
            continue
        checked += 1
        stats = tm.RunStats()
        got = tm.sparse_detect(g, sub, params, stats)
        expect = tm.brute_triangle(g)
        assert got.found == expect.found
        if got.found:
            assert_witness_valid(g, got)


def test_sparse_detect_precondition_check_fires():
    g = complete_tripartite(8, 8, 8)
    params = tm.SparseParams(delta=2, check_precondition=True)
    with pytest.raises(tm.InvariantError):
        tm.sparse_detect(g, g.full_view(), params, tm.RunStats())


def test_sparse_detect_is_deterministic():
    rng = tm.CounterRng(89)
    g = tm.random_tripartite(rng, 30, 30, 30, 0.1)
    runs = []
    for _ in range(2):
        stats = tm.RunStats()
        v = tm.sparse_detect(g, g.full_view(), tm.SparseParams(2), stats)
        runs.append((v, stats.table_queries))
    assert runs[0] == runs[1]


def test_delta_below_one_is_clamped():
    params = tm.SparseParams(delta=0)
    assert params.delta == 1
    assert params.subset_cap == 1
