"""Deterministic random instance generation.

Randomness comes from splitmix64 applied to a counter, so the bit stream
for a given seed is fixed forever and identical across platforms and
Python versions (unlike the stdlib Mersenne Twister helpers).  Edge k of a
generation schedule is present iff mix(seed, k) < density * 2^64.
"""

from __future__ import annotations

import numpy as np

from .bitmat import BitMatrix, words_for
from .graph import TripartiteGraph

_MASK = (1 << 64) - 1
_GOLD = 0x9E3779B97F4A7C15


def mix64(x: int) -> int:
    """The splitmix64 output function."""
    x &= _MASK
    x = ((x ^ (x >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
    x = ((x ^ (x >> 27)) * 0x94D049BB133111EB) & _MASK
    return x ^ (x >> 31)


def _mix64_vec(x: np.ndarray) -> np.ndarray:
    x = x ^ (x >> np.uint64(30))
    x = x * np.uint64(0xBF58476D1CE4E5B9)
    x = x ^ (x >> np.uint64(27))
    x = x * np.uint64(0x94D049BB133111EB)
    return x ^ (x >> np.uint64(31))


class CounterRng:
    """Counter-based splitmix64 stream with a monotonically advancing cursor."""

    def __init__(self, seed: int):
        self.seed = seed & _MASK
        self.cursor = 0

    def _value(self, k: int) -> int:
        return mix64(self.seed + ((k + 1) * _GOLD & _MASK))

    def next_u64(self) -> int:
        v = self._value(self.cursor)
        self.cursor += 1
        return v

    def next_below(self, n: int) -> int:
        """Uniform-ish integer in [0, n) via multiply-shift."""
        return (self.next_u64() * n) >> 64

    def next_block(self, count: int) -> np.ndarray:
        """count consecutive stream values as a uint64 array (vectorized)."""
        ks = np.arange(self.cursor + 1, self.cursor + count + 1, dtype=np.uint64)
        self.cursor += count
        vals = ks * np.uint64(_GOLD) + np.uint64(self.seed)
        return _mix64_vec(vals)


def _density_threshold(density: float) -> int:
    if not 0.0 <= density <= 1.0:
        raise ValueError("density must lie in [0, 1]")
    return min(int(density * 2.0**64), 1 << 64)


def random_bitmatrix(rng: CounterRng, rows: int, cols: int, density: float) -> BitMatrix:
    """Random matrix: bit (i,j) drawn at stream position cursor + i*cols + j."""
    m = BitMatrix(rows, cols)
    if rows == 0 or cols == 0:
        return m
    thr = _density_threshold(density)
    if thr == 0:
        rng.cursor += rows * cols
        return m
    vals = rng.next_block(rows * cols)
    bits = (vals < np.uint64(min(thr, _MASK))).astype(np.uint8)
    if thr > _MASK:
        bits[:] = 1
    bits = bits.reshape(rows, cols)
    padded = np.zeros((rows, words_for(cols) * 64), dtype=np.uint8)
    padded[:, :cols] = bits
    m.data[:] = np.packbits(padded, axis=1, bitorder="little").view(np.uint64).ravel()
    return m


def random_tripartite(
    rng: CounterRng,
    na: int,
    nb: int,
    nc: int,
    density: float,
) -> TripartiteGraph:
    """Random tripartite graph; pair matrices drawn in order AB, AC, BC."""
    ab = random_bitmatrix(rng, na, nb, density)
    ac = random_bitmatrix(rng, na, nc, density)
    bc = random_bitmatrix(rng, nb, nc, density)
    return TripartiteGraph(na, nb, nc, ab=ab, ac=ac, bc=bc)
