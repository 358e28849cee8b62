#!/usr/bin/env python3
# Timing sweep across the detectors. Prints the same CSV schema as
# `trimat bench`, so the output can feed straight into a plotting notebook.

import time

import trimat as tm

SIZES = (32, 64, 96)
DENSITIES = (0.05, 0.3, 0.9)

rng = tm.CounterRng(6)
print("algo,n,density,millis,triples_enumerated,pairs_charged,table_queries")
for n in SIZES:
    for density in DENSITIES:
        g = tm.random_tripartite(rng, n, n, n, density)
        runs = {
            "recursive": lambda: tm.detect(
                g, tm.DetectorConfig(delta=2, small_threshold=2), stats
            ),
            "framework": lambda: tm.detect_with_finder(
                g,
                tm.high_degree_finder(2),
                tm.FrameworkConfig(small_volume_threshold=1),
                stats,
            ),
            "bmm": lambda: tm.triangle_via_bmm(g),
            "brute": lambda: tm.brute_triangle(g),
        }
        for name, call in runs.items():
            stats = tm.RunStats()
            t0 = time.perf_counter()
            call()
            millis = (time.perf_counter() - t0) * 1e3
            print(f"{name},{n},{density},{millis:.3f},{stats.triples_enumerated},"
                  f"{stats.pairs_charged},{stats.table_queries}")
