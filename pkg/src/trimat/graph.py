"""Tripartite graphs, cheap sub-instance views, and run statistics.

A TripartiteGraph holds three bit-packed adjacency matrices (A-B, A-C,
B-C), each stored once per pair.  A SubInstance is a view: three sorted
index lists into the parts, plus lazily built word masks so degree and
neighborhood queries run as masked popcounts.  The recursion in the
detectors only ever creates views; adjacency is never copied.
"""

from __future__ import annotations

from dataclasses import dataclass, fields

import numpy as np

from .bitmat import BitMatrix, pack_index_mask, popcount_words, unpack_word_indices
from .errors import FormatError

PAIR_AB = "AB"
PAIR_AC = "AC"
PAIR_BC = "BC"
PART_B = "B"
PART_C = "C"


@dataclass
class RunStats:
    """Work counters; all monotone during a run, merged additively."""

    triples_enumerated: int = 0
    pairs_charged: int = 0
    recursion_nodes: int = 0
    table_queries: int = 0
    sparse_calls: int = 0

    def merge(self, other: "RunStats") -> None:
        for f in fields(self):
            setattr(self, f.name, getattr(self, f.name) + getattr(other, f.name))

    def as_lines(self) -> list[str]:
        return [f"{f.name}={getattr(self, f.name)}" for f in fields(self)]


@dataclass(frozen=True)
class Verdict:
    """Outcome of a detection: found flag plus a concrete witness triangle.

    The witness, present exactly when found, is (a, b, c) in original-graph
    indices (one vertex per part).
    """

    found: bool
    witness: tuple[int, int, int] | None = None

    def __post_init__(self):
        if self.found != (self.witness is not None):
            raise ValueError("witness must be present iff a triangle was found")


class TripartiteGraph:
    """Three vertex parts A, B, C with pairwise bit-packed adjacency."""

    __slots__ = ("nA", "nB", "nC", "ab", "ac", "bc")

    def __init__(self, nA: int, nB: int, nC: int, ab=None, ac=None, bc=None):
        self.nA, self.nB, self.nC = nA, nB, nC
        self.ab = ab if ab is not None else BitMatrix(nA, nB)
        self.ac = ac if ac is not None else BitMatrix(nA, nC)
        self.bc = bc if bc is not None else BitMatrix(nB, nC)
        for m, r, c, name in (
            (self.ab, nA, nB, "ab"),
            (self.ac, nA, nC, "ac"),
            (self.bc, nB, nC, "bc"),
        ):
            if m.rows != r or m.cols != c:
                raise ValueError(f"{name} adjacency must be {r}x{c}, got {m.rows}x{m.cols}")

    def add_edge(self, pair: str, i: int, j: int) -> None:
        if pair == PAIR_AB:
            self.ab.set(i, j)
        elif pair == PAIR_AC:
            self.ac.set(i, j)
        elif pair == PAIR_BC:
            self.bc.set(i, j)
        else:
            raise ValueError(f"unknown part pair {pair!r}")

    def has_edge(self, pair: str, i: int, j: int) -> bool:
        if pair == PAIR_AB:
            return self.ab.get(i, j)
        if pair == PAIR_AC:
            return self.ac.get(i, j)
        if pair == PAIR_BC:
            return self.bc.get(i, j)
        raise ValueError(f"unknown part pair {pair!r}")

    def full_view(self) -> "SubInstance":
        return SubInstance(
            self,
            np.arange(self.nA, dtype=np.int64),
            np.arange(self.nB, dtype=np.int64),
            np.arange(self.nC, dtype=np.int64),
        )


def from_edge_list(nA: int, nB: int, nC: int, edges) -> TripartiteGraph:
    """Build a graph from (pair, i, j) triples; duplicates are idempotent."""
    g = TripartiteGraph(nA, nB, nC)
    for pair, i, j in edges:
        g.add_edge(pair, i, j)  # add_edge range-checks endpoints
    return g


class SubInstance:
    """A view of a TripartiteGraph through three sorted index lists.

    Word masks for the B and C parts are built on first use and cached;
    share views across threads only after touching both masks (or build
    eagerly with materialize_masks).
    """

    __slots__ = ("g", "ia", "ib", "ic", "_mask_b", "_mask_c")

    def __init__(self, g: TripartiteGraph, ia, ib, ic):
        self.g = g
        self.ia = np.asarray(ia, dtype=np.int64)
        self.ib = np.asarray(ib, dtype=np.int64)
        self.ic = np.asarray(ic, dtype=np.int64)
        assert _strictly_increasing(self.ia), "ia must be sorted and duplicate-free"
        assert _strictly_increasing(self.ib), "ib must be sorted and duplicate-free"
        assert _strictly_increasing(self.ic), "ic must be sorted and duplicate-free"
        self._mask_b = None
        self._mask_c = None

    @property
    def na(self) -> int:
        return len(self.ia)

    @property
    def nb(self) -> int:
        return len(self.ib)

    @property
    def nc(self) -> int:
        return len(self.ic)

    @property
    def mask_b(self) -> np.ndarray:
        if self._mask_b is None:
            self._mask_b = pack_index_mask(self.ib, self.g.nB)
        return self._mask_b

    @property
    def mask_c(self) -> np.ndarray:
        if self._mask_c is None:
            self._mask_c = pack_index_mask(self.ic, self.g.nC)
        return self._mask_c

    def materialize_masks(self) -> None:
        self.mask_b
        self.mask_c

    def part_indices(self, part: str) -> np.ndarray:
        if part == PART_B:
            return self.ib
        if part == PART_C:
            return self.ic
        raise ValueError(f"part must be 'B' or 'C', got {part!r}")

    def restrict(self, ia, ib, ic) -> "SubInstance":
        """New view over the same graph; inputs must be subsets of the old lists."""
        sub = SubInstance(self.g, ia, ib, ic)
        assert _is_subset(sub.ia, self.ia), "ia is not a subset of the view"
        assert _is_subset(sub.ib, self.ib), "ib is not a subset of the view"
        assert _is_subset(sub.ic, self.ic), "ic is not a subset of the view"
        return sub

    def __repr__(self) -> str:
        return f"SubInstance({self.na}/{self.nb}/{self.nc})"


def _strictly_increasing(arr: np.ndarray) -> bool:
    return len(arr) < 2 or bool(np.all(np.diff(arr) > 0))


def _is_subset(sub: np.ndarray, sup: np.ndarray) -> bool:
    return bool(np.isin(sub, sup, assume_unique=True).all())


def _row_for(g: TripartiteGraph, sub: SubInstance, v: int, part: str):
    if part == PART_B:
        return g.ab.row_words(v), sub.mask_b
    if part == PART_C:
        return g.ac.row_words(v), sub.mask_c
    raise ValueError(f"part must be 'B' or 'C', got {part!r}")


def _require_in_view(sub: SubInstance, v: int) -> None:
    pos = np.searchsorted(sub.ia, v)
    if pos >= len(sub.ia) or sub.ia[pos] != v:
        raise ValueError(f"vertex {v} is not in the sub-instance's A list")


def degree(g: TripartiteGraph, sub: SubInstance, v: int, part: str) -> int:
    """d(v, S): neighbors of A-vertex v among the view's indices of the part."""
    _require_in_view(sub, v)
    row, mask = _row_for(g, sub, v, part)
    return popcount_words(row & mask)


def neighborhood(g: TripartiteGraph, sub: SubInstance, v: int, part: str) -> np.ndarray:
    """Sorted indices of the view's part vertices adjacent to A-vertex v."""
    _require_in_view(sub, v)
    row, mask = _row_for(g, sub, v, part)
    return unpack_word_indices(row & mask)


def complement_in(sub: SubInstance, part: str, indices) -> np.ndarray:
    """View part indices not in `indices` (the non-neighbors, typically)."""
    return np.setdiff1d(sub.part_indices(part), indices, assume_unique=True)


def degrees_all(g: TripartiteGraph, sub: SubInstance) -> tuple[np.ndarray, np.ndarray]:
    """Degrees to the view's B and C for every vertex in the view's A at once."""
    if sub.na == 0:
        z = np.zeros(0, dtype=np.int64)
        return z, z
    db = np.bitwise_count(g.ab.words2d[sub.ia] & sub.mask_b).sum(axis=1, dtype=np.int64)
    dc = np.bitwise_count(g.ac.words2d[sub.ia] & sub.mask_c).sum(axis=1, dtype=np.int64)
    return db, dc


def from_general_graph(n: int, edges) -> TripartiteGraph:
    """Standard 3-copy construction: triangle detection on a general graph.

    Every vertex is duplicated into A, B and C, and every original edge
    {u, v} is placed in all three pair adjacencies (both orientations for
    the A-B / A-C / B-C roles), so the tripartite graph has a triangle iff
    the original graph does.
    """
    g = TripartiteGraph(n, n, n)
    for u, v in edges:
        if u == v:
            continue
        for x, y in ((u, v), (v, u)):
            g.ab.set(x, y)
            g.ac.set(x, y)
            g.bc.set(x, y)
    return g


# -- graph text format ----------------------------------------------------
# Line 1: "nA nB nC"; then lines "P i j" with P in {AB, AC, BC}.
# Blank lines are ignored and '#' starts a comment.

def parse_graph_text(text: str) -> TripartiteGraph:
    lines = text.splitlines()
    header = None
    g = None
    for no, raw in enumerate(lines, start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if header is None:
            if len(parts) != 3:
                raise FormatError(no, f"expected 'nA nB nC' header, got {raw!r}")
            try:
                na, nb, nc = (int(p) for p in parts)
            except ValueError:
                raise FormatError(no, f"non-integer part size in {raw!r}") from None
            if min(na, nb, nc) < 0:
                raise FormatError(no, "part sizes must be non-negative")
            header = (na, nb, nc)
            g = TripartiteGraph(na, nb, nc)
            continue
        if len(parts) != 3 or parts[0] not in (PAIR_AB, PAIR_AC, PAIR_BC):
            raise FormatError(no, f"expected 'P i j' with P in {{AB,AC,BC}}, got {raw!r}")
        try:
            i, j = int(parts[1]), int(parts[2])
        except ValueError:
            raise FormatError(no, f"non-integer endpoint in {raw!r}") from None
        try:
            g.add_edge(parts[0], i, j)
        except IndexError:
            raise FormatError(no, f"endpoint out of range in {raw!r}") from None
    if g is None:
        raise FormatError(1, "empty input, expected 'nA nB nC' header")
    return g


def format_graph_text(g: TripartiteGraph) -> str:
    out = [f"{g.nA} {g.nB} {g.nC}"]
    for pair, m in ((PAIR_AB, g.ab), (PAIR_AC, g.ac), (PAIR_BC, g.bc)):
        for i in range(m.rows):
            for j in m.row_indices(i):
                out.append(f"{pair} {i} {j}")
    return "\n".join(out) + "\n"
