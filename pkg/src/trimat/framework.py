"""Generic triangle detection driven by a pluggable easy-part finder.

A finder receives a view and must hand back per-part subsets A', B', C'
covering prescribed fractions of the view, together with a truthful
triangle verdict for the induced subgraph (plus a witness when it found
one).  The driver then owes the rest: it answers the finder's block
directly and recurses on three views that partition the remaining triples,

    (A, B, C \\ C'), (A, B \\ B', C'), (A \\ A', B', C'),

so correctness holds for any contract-satisfying finder.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from . import four_russians as fr
from .detector import ensure_recursion_headroom, exhaustive_search, step4_scan
from .errors import FinderContractError, InvariantError
from .graph import RunStats, SubInstance, TripartiteGraph, Verdict, neighborhood

DEBUG_VERIFY_VOLUME_CAP = 200_000


@dataclass
class FrameworkConfig:
    alpha: float = 1.0
    beta: float = 1.0
    gamma: float = 1.0
    small_volume_threshold: int | None = None
    debug_verify_finder: bool = False

    def __post_init__(self):
        for name in ("alpha", "beta", "gamma"):
            v = getattr(self, name)
            if not 0.0 < v <= 1.0:
                raise ValueError(f"{name} must lie in (0, 1], got {v}")
        if self.small_volume_threshold is not None and self.small_volume_threshold < 1:
            raise ValueError("small_volume_threshold must be at least 1")


@dataclass
class FinderResult:
    """What an easy-part finder returns for one view.

    triangle_free=True certifies the subgraph induced by the three returned
    lists has no triangle; False means it has one and witness names it.
    fraction_exempt marks outputs whose part sizes are vouched for by the
    finder itself rather than the configured fractions (the built-in
    high-degree finder pins A' to a single vertex, which no fixed fraction
    of A can describe).
    """

    a_part: np.ndarray
    b_part: np.ndarray
    c_part: np.ndarray
    triangle_free: bool
    witness: tuple[int, int, int] | None = None
    fraction_exempt: bool = False


EasyPartFinder = Callable[[TripartiteGraph, SubInstance, RunStats], FinderResult]


def _required(frac: float, size: int) -> int:
    if size == 0:
        return 0
    # The epsilon absorbs float noise in frac*size; a positive fraction of a
    # nonempty part still must demand at least one vertex or the recursion
    # would stop shrinking.
    return max(1, math.ceil(frac * size - 1e-9))


def detect_with_finder(
    g: TripartiteGraph,
    finder: EasyPartFinder,
    cfg: FrameworkConfig | None = None,
    stats: RunStats | None = None,
) -> Verdict:
    """Run the three-way recursion around an easy-part finder."""
    cfg = cfg or FrameworkConfig()
    stats = stats if stats is not None else RunStats()
    n0 = g.nA + g.nB + g.nC
    threshold = cfg.small_volume_threshold
    if threshold is None:
        threshold = max(1, math.ceil(n0**2.5))
    ensure_recursion_headroom(n0)
    return _drive(g, g.full_view(), finder, cfg, threshold, stats)


def _validate(
    res: FinderResult, sub: SubInstance, cfg: FrameworkConfig
) -> None:
    for name, got, have in (
        ("A'", res.a_part, sub.ia),
        ("B'", res.b_part, sub.ib),
        ("C'", res.c_part, sub.ic),
    ):
        if len(got) and not np.isin(got, have, assume_unique=True).all():
            raise FinderContractError(f"finder returned {name} not a subset of the view")
    if not res.triangle_free and res.witness is None:
        raise FinderContractError("finder reported a triangle without a witness")
    if res.fraction_exempt:
        if len(res.a_part) == 0 or len(res.b_part) == 0 or len(res.c_part) == 0:
            raise FinderContractError("exempt finder output has an empty part")
        return
    for name, frac, got, size in (
        ("|A'| >= alpha|A|", cfg.alpha, len(res.a_part), sub.na),
        ("|B'| >= beta|B|", cfg.beta, len(res.b_part), sub.nb),
        ("|C'| >= gamma|C|", cfg.gamma, len(res.c_part), sub.nc),
    ):
        need = _required(frac, size)
        if got < need:
            raise FinderContractError(
                f"finder violated {name}: got {got}, need {need} of {size}"
            )


def _verify_truthfulness(g: TripartiteGraph, res: FinderResult) -> None:
    """Debug-mode spot check of the finder's verdict against brute force."""
    from .oracle import brute_triangle

    if res.witness is not None:
        a, b, c = res.witness
        if not (g.ab.get(a, b) and g.ac.get(a, c) and g.bc.get(b, c)):
            raise FinderContractError(f"finder witness {res.witness} is not a triangle")
        return
    vol = len(res.a_part) * len(res.b_part) * len(res.c_part)
    if vol > DEBUG_VERIFY_VOLUME_CAP:
        return
    block = SubInstance(g, res.a_part, res.b_part, res.c_part)
    if brute_triangle(g, block).found:
        raise FinderContractError("finder called a block triangle-free that is not")


def _drive(
    g: TripartiteGraph,
    sub: SubInstance,
    finder: EasyPartFinder,
    cfg: FrameworkConfig,
    threshold: int,
    stats: RunStats,
) -> Verdict:
    stats.recursion_nodes += 1
    volume = sub.na * sub.nb * sub.nc

    # Step 0
    if volume < threshold:
        return exhaustive_search(g, sub, stats)

    # Step 1
    res = finder(g, sub, stats)
    _validate(res, sub, cfg)
    if cfg.debug_verify_finder:
        _verify_truthfulness(g, res)
    if not res.triangle_free:
        return Verdict(True, res.witness)

    # Triangle-free block: trim to the exact fractional sizes (dropping the
    # highest indices) unless the finder vouches for its own sizes.
    if res.fraction_exempt:
        a2, b2, c2 = res.a_part, res.b_part, res.c_part
    else:
        a2 = res.a_part[: _required(cfg.alpha, sub.na)]
        b2 = res.b_part[: _required(cfg.beta, sub.nb)]
        c2 = res.c_part[: _required(cfg.gamma, sub.nc)]

    # Step 2
    c_rest = np.setdiff1d(sub.ic, c2, assume_unique=True)
    b_rest = np.setdiff1d(sub.ib, b2, assume_unique=True)
    a_rest = np.setdiff1d(sub.ia, a2, assume_unique=True)
    covered = (
        sub.na * sub.nb * len(c_rest)
        + sub.na * len(b_rest) * len(c2)
        + len(a_rest) * len(b2) * len(c2)
        + len(a2) * len(b2) * len(c2)
    )
    if covered != volume:
        raise InvariantError(
            f"three-way split does not cover the view: {covered} != {volume}"
        )
    for ia_v, ib_v, ic_v in (
        (sub.ia, sub.ib, c_rest),
        (sub.ia, b_rest, c2),
        (a_rest, b2, c2),
    ):
        verdict = _drive(g, SubInstance(g, ia_v, ib_v, ic_v), finder, cfg, threshold, stats)
        if verdict.found:
            return verdict
    return Verdict(False)


def high_degree_finder(
    delta: int = 2, params: fr.SparseParams | None = None
) -> EasyPartFinder:
    """Easy-part finder wrapping the high-degree / sparse dichotomy.

    If some A-vertex v1 violates the degree bound, its neighborhood block
    ({v1}, B1, C1) is easy: every pair in B1 x C1 closes a triangle through
    v1, so one scan of B1 x C1 settles the block.  Otherwise the whole view
    is sparse enough for the lookup-table detector and is returned intact.
    """
    params = params or fr.SparseParams(delta=delta)

    def finder(g: TripartiteGraph, sub: SubInstance, stats: RunStats) -> FinderResult:
        v1 = fr.check_degree_condition(g, sub, params.delta)
        if v1 is None:
            verdict = fr.sparse_detect(g, sub, params, stats)
            stats.pairs_charged += sub.nb * sub.nc
            return FinderResult(
                sub.ia, sub.ib, sub.ic, not verdict.found, verdict.witness
            )
        b1 = neighborhood(g, sub, v1, "B")
        c1 = neighborhood(g, sub, v1, "C")
        scan = step4_scan(g, b1, c1, v1, stats)
        return FinderResult(
            np.asarray([v1], dtype=np.int64),
            b1,
            c1,
            not scan.found,
            scan.witness,
            fraction_exempt=True,
        )

    return finder
