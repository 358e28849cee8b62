"""Recursive divide-and-conquer triangle detection.

Each recursion node runs, in order:

  Step 0  small B or C side: exhaustive word-assisted search, done.
  Step 1  every A-vertex satisfies the degree bound: sparse detection
          through a freshly built subset-pair table, done.
  Step 2  pick the lowest-index violating vertex v1.
  Step 3  split on v1's neighborhoods B1, C1 and recurse on the two views
          that together cover every B x C pair outside B1 x C1.
  Step 4  scan B1 x C1 directly for a B-C edge.

The charging instrumentation backs the accounting argument: every (b, c)
pair is paid for by exactly one Step-4 scan or leaf call, which the
optional ledger verifies as set-disjointness at test scale.
"""

from __future__ import annotations

import sys
from dataclasses import dataclass

import numpy as np

from . import four_russians as fr
from .bitmat import first_set_bit, pack_index_mask, unpack_word_indices
from .errors import InvariantError
from .graph import (
    RunStats,
    SubInstance,
    TripartiteGraph,
    Verdict,
    degree,
    neighborhood,
)

DEFAULT_CHARGE_BUDGET = 1 << 24


@dataclass
class DetectorConfig:
    """Recursion parameters.

    small_threshold defaults to delta**6, the cutoff below which the
    instance is solved exhaustively; it is exposed because at sensible
    delta values the default is tiny and tests need to force each path.
    debug_charge_check turns on the pair-charging ledger (quadratic
    memory, test scale only).
    """

    delta: int = 2
    small_threshold: int | None = None
    debug_charge_check: bool = False
    charge_budget: int = DEFAULT_CHARGE_BUDGET
    subset_cap: int | None = None
    max_table_entries: int = fr.DEFAULT_TABLE_BUDGET

    def __post_init__(self):
        self.delta = max(1, int(self.delta))
        if self.small_threshold is None:
            self.small_threshold = self.delta**6
        if self.small_threshold < 1:
            raise ValueError("small_threshold must be at least 1")

    def sparse_params(self) -> fr.SparseParams:
        return fr.SparseParams(
            delta=self.delta,
            subset_cap=self.subset_cap,
            max_table_entries=self.max_table_entries,
        )


class ChargeLedger:
    """Tracks which (b, c) pairs have been paid for; duplicates are a bug."""

    def __init__(self, nb: int, nc: int):
        self.grid = np.zeros((nb, nc), dtype=bool)
        self.charged = 0

    def charge(self, ib: np.ndarray, ic: np.ndarray) -> None:
        if len(ib) == 0 or len(ic) == 0:
            return
        sel = np.ix_(np.asarray(ib, dtype=np.int64), np.asarray(ic, dtype=np.int64))
        region = self.grid[sel]
        if region.any():
            bi, ci = np.argwhere(region)[0]
            raise InvariantError(
                f"pair (b={int(ib[bi])}, c={int(ic[ci])}) charged twice"
            )
        self.grid[sel] = True
        self.charged += len(ib) * len(ic)


def detect(
    g: TripartiteGraph,
    cfg: DetectorConfig | None = None,
    stats: RunStats | None = None,
) -> Verdict:
    """Detect a triangle (one vertex per part) in a tripartite graph."""
    cfg = cfg or DetectorConfig()
    stats = stats if stats is not None else RunStats()
    ledger = None
    if cfg.debug_charge_check and g.nB * g.nC <= cfg.charge_budget:
        ledger = ChargeLedger(g.nB, g.nC)
    ensure_recursion_headroom(g.nA)
    return _detect(g, g.full_view(), cfg, cfg.sparse_params(), stats, ledger)


def ensure_recursion_headroom(depth_bound: int) -> None:
    """Raise the interpreter recursion limit to fit a recursion this deep."""
    needed = depth_bound * 4 + 1000
    if sys.getrecursionlimit() < needed:
        sys.setrecursionlimit(needed)


def _detect(
    g: TripartiteGraph,
    sub: SubInstance,
    cfg: DetectorConfig,
    params: fr.SparseParams,
    stats: RunStats,
    ledger: ChargeLedger | None,
) -> Verdict:
    stats.recursion_nodes += 1
    if sub.na == 0 or sub.nb == 0 or sub.nc == 0:
        return Verdict(False)

    # Step 0
    if sub.nb < cfg.small_threshold or sub.nc < cfg.small_threshold:
        if ledger is not None:
            ledger.charge(sub.ib, sub.ic)
        return exhaustive_search(g, sub, stats)

    # Step 1
    v1 = fr.check_degree_condition(g, sub, cfg.delta)
    if v1 is None:
        if ledger is not None:
            ledger.charge(sub.ib, sub.ic)
        stats.pairs_charged += sub.nb * sub.nc
        return fr.sparse_detect(g, sub, params, stats)

    # Step 2: re-assert the guarantee the choice of v1 rests on.
    db = degree(g, sub, v1, "B")
    dc = degree(g, sub, v1, "C")
    if not db * dc * cfg.delta * cfg.delta > sub.nb * sub.nc:
        raise InvariantError(
            f"selected vertex {v1} does not violate the degree condition"
        )

    # Step 3
    b1 = neighborhood(g, sub, v1, "B")
    c1 = neighborhood(g, sub, v1, "C")
    ia2 = sub.ia[sub.ia != v1]
    if len(b1) * sub.nc > len(c1) * sub.nb:
        views = (
            (ia2, sub.ib, np.setdiff1d(sub.ic, c1, assume_unique=True)),
            (ia2, np.setdiff1d(sub.ib, b1, assume_unique=True), c1),
        )
    else:
        views = (
            (ia2, np.setdiff1d(sub.ib, b1, assume_unique=True), sub.ic),
            (ia2, b1, np.setdiff1d(sub.ic, c1, assume_unique=True)),
        )
    for ia_v, ib_v, ic_v in views:
        verdict = _detect(g, SubInstance(g, ia_v, ib_v, ic_v), cfg, params, stats, ledger)
        if verdict.found:
            return verdict

    # Step 4
    if ledger is not None:
        ledger.charge(b1, c1)
    return step4_scan(g, b1, c1, v1, stats)


def step4_scan(
    g: TripartiteGraph,
    sub_b1: np.ndarray,
    sub_c1: np.ndarray,
    v1: int,
    stats: RunStats,
) -> Verdict:
    """Scan all of B1 x C1 for a B-C edge, word-parallel per B1 row."""
    stats.pairs_charged += len(sub_b1) * len(sub_c1)
    if len(sub_b1) == 0 or len(sub_c1) == 0:
        return Verdict(False)
    mask_c1 = pack_index_mask(sub_c1, g.nC)
    bw = g.bc.words2d
    for b in sub_b1:
        hit = bw[int(b)] & mask_c1
        c = first_set_bit(hit)
        if c >= 0:
            return Verdict(True, (int(v1), int(b), c))
    return Verdict(False)


def exhaustive_search(g: TripartiteGraph, sub: SubInstance, stats: RunStats) -> Verdict:
    """Triple loop over the view with early exit.

    The loop itself is word-assisted (each (a, b) edge pair is resolved
    with one AND over C-masked rows), but the triples_enumerated counter
    follows triple-loop semantics: the full view volume when triangle-free,
    the inspected prefix when a triangle cuts the scan short.
    """
    na, nb, nc = sub.na, sub.nb, sub.nc
    if na == 0 or nb == 0 or nc == 0:
        return Verdict(False)
    ab_w, ac_w, bc_w = g.ab.words2d, g.ac.words2d, g.bc.words2d
    mask_b, mask_c = sub.mask_b, sub.mask_c
    for apos, a in enumerate(sub.ia):
        a = int(a)
        ac_row = ac_w[a] & mask_c
        for b in unpack_word_indices(ab_w[a] & mask_b):
            b = int(b)
            c = first_set_bit(ac_row & bc_w[b])
            if c >= 0:
                bpos = int(np.searchsorted(sub.ib, b))
                stats.triples_enumerated += apos * nb * nc + (bpos + 1) * nc
                return Verdict(True, (a, b, c))
    stats.triples_enumerated += na * nb * nc
    return Verdict(False)
