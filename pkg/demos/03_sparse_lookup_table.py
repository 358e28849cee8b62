#!/usr/bin/env python3
# The degree-bounded sparse case: group the B and C parts, precompute
# edge-existence for every small subset pair into a table, then answer each
# neighborhood chunk pair with a single lookup.

import numpy as np

import trimat as tm
from trimat.four_russians import build_pair_table, estimate_table_entries, partition_chunks

rng = tm.CounterRng(3)
g = tm.random_tripartite(rng, 50, 48, 48, 0.04)
sub = g.full_view()

params = tm.SparseParams(delta=2)
print("delta =", params.delta, "-> group size", params.group_size,
      "and subsets of size <=", params.subset_cap)
print("estimated table entries:", estimate_table_entries(48, 48, params))

# The detector only uses the table when no A-vertex has a big degree product.
violator = tm.check_degree_condition(g, sub, params.delta)
print("degree condition violator:", violator)

table = build_pair_table(g, sub.ib, sub.ic, params)
print("table built:", len(table.b_subsets), "B-subsets x", len(table.c_subsets),
      "C-subsets,", int(table.entries.sum()), "positive entries")

# How a neighborhood turns into table queries: per group, runs of exactly
# delta plus at most one remainder.
v = 0
nbh = tm.neighborhood(g, sub, v, "B")
chunks = partition_chunks(np.searchsorted(sub.ib, nbh), params.group_size, params.subset_cap)
print(f"\nvertex {v}: B-neighborhood {list(map(int, nbh))}")
print("chunks (group, offsets):", chunks)

stats = tm.RunStats()
verdict = tm.sparse_detect(g, sub, params, stats, table=table)
print("\nsparse detection:", verdict)
print("table queries used:", stats.table_queries)
assert verdict.found == tm.brute_triangle(g).found

# Bigger deltas explode the preprocessing cost; the budget guard refuses
# instead of thrashing.
try:
    build_pair_table(g, sub.ib, sub.ic, tm.SparseParams(delta=3, max_table_entries=10**5))
except tm.TableBudgetError as exc:
    print("\nbudget guard:", exc)
