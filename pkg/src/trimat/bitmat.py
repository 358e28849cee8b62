"""Bit-packed Boolean matrices with word-parallel row operations.

Rows are packed little-endian into 64-bit words: bit j of row i lives in
word i*words_per_row + j//64 at position j%64.  Trailing pad bits in the
last word of every row are kept zero as a hard invariant, so word-level
AND / OR / popcount never need masking at the use site.
"""

from __future__ import annotations

import sys

import numpy as np

from .errors import FormatError

WORD_BITS = 64

if sys.byteorder != "little":
    raise ImportError("trimat packs bits assuming a little-endian platform")


def words_for(nbits: int) -> int:
    """Number of 64-bit words needed to hold nbits bits."""
    return (nbits + WORD_BITS - 1) // WORD_BITS


def pack_index_mask(indices, nbits: int) -> np.ndarray:
    """Pack a list of bit positions < nbits into a uint64 word array."""
    nwords = words_for(nbits)
    bits = np.zeros(nwords * WORD_BITS, dtype=np.uint8)
    if len(indices):
        bits[np.asarray(indices, dtype=np.int64)] = 1
    return np.packbits(bits, bitorder="little").view(np.uint64)


def unpack_word_indices(words: np.ndarray) -> np.ndarray:
    """Positions of set bits in a little-endian uint64 word array."""
    return np.flatnonzero(np.unpackbits(words.view(np.uint8), bitorder="little"))


def first_set_bit(words: np.ndarray) -> int:
    """Lowest set bit position in a word array; -1 if all zero."""
    nz = np.flatnonzero(words)
    if nz.size == 0:
        return -1
    w = int(nz[0])
    x = int(words[w])
    return w * WORD_BITS + (x & -x).bit_length() - 1


def popcount_words(words: np.ndarray) -> int:
    return int(np.bitwise_count(words).sum(dtype=np.int64))


class BitMatrix:
    """Row-major bit-packed Boolean matrix."""

    __slots__ = ("rows", "cols", "words_per_row", "data")

    def __init__(self, rows: int, cols: int):
        if rows < 0 or cols < 0:
            raise ValueError("matrix dimensions must be non-negative")
        self.rows = rows
        self.cols = cols
        self.words_per_row = words_for(cols)
        self.data = np.zeros(rows * self.words_per_row, dtype=np.uint64)

    # -- single-bit access ------------------------------------------------

    def _check(self, i: int, j: int) -> None:
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError(f"bit ({i},{j}) out of range for {self.rows}x{self.cols}")

    def get(self, i: int, j: int) -> bool:
        self._check(i, j)
        w = i * self.words_per_row + (j >> 6)
        return bool((int(self.data[w]) >> (j & 63)) & 1)

    def set(self, i: int, j: int, v: bool = True) -> None:
        self._check(i, j)
        w = i * self.words_per_row + (j >> 6)
        if v:
            self.data[w] = np.uint64(int(self.data[w]) | (1 << (j & 63)))
        else:
            self.data[w] = np.uint64(int(self.data[w]) & ~(1 << (j & 63)))

    # -- row views ---------------------------------------------------------

    def row_words(self, i: int) -> np.ndarray:
        wpr = self.words_per_row
        return self.data[i * wpr : (i + 1) * wpr]

    @property
    def words2d(self) -> np.ndarray:
        return self.data.reshape(self.rows, self.words_per_row)

    def row_indices(self, i: int) -> np.ndarray:
        """Sorted column indices of set bits in row i."""
        return unpack_word_indices(self.row_words(i))

    def row_popcount(self, i: int) -> int:
        return popcount_words(self.row_words(i))

    def set_row_indices(self, i: int, indices) -> None:
        """Overwrite row i so exactly the given columns are set."""
        idx = np.asarray(indices, dtype=np.int64)
        if idx.size and (idx.min() < 0 or idx.max() >= self.cols):
            raise IndexError("row index out of range")
        self.words2d[i] = pack_index_mask(idx, self.cols)

    # -- whole-matrix helpers ----------------------------------------------

    def copy(self) -> "BitMatrix":
        out = BitMatrix(self.rows, self.cols)
        out.data[:] = self.data
        return out

    def count(self) -> int:
        return popcount_words(self.data)

    def complement(self) -> "BitMatrix":
        """New matrix with every in-range bit flipped; pad bits stay zero."""
        out = BitMatrix(self.rows, self.cols)
        out.words2d[:] = ~self.words2d & _row_mask(self.cols)
        return out

    def block(self, r0: int, r1: int, c0: int, c1: int) -> "BitMatrix":
        """Copy of the sub-matrix rows [r0,r1) x cols [c0,c1)."""
        if not (0 <= r0 <= r1 <= self.rows and 0 <= c0 <= c1 <= self.cols):
            raise IndexError("block out of range")
        out = BitMatrix(r1 - r0, c1 - c0)
        width = c1 - c0
        if width == 0:
            return out
        keep = (1 << width) - 1
        wpr = self.words_per_row
        obytes = out.words_per_row * 8
        for oi, i in enumerate(range(r0, r1)):
            row = int.from_bytes(self.data[i * wpr : (i + 1) * wpr].tobytes(), "little")
            piece = (row >> c0) & keep
            out.words2d[oi] = np.frombuffer(
                piece.to_bytes(obytes, "little"), dtype=np.uint64
            )
        return out

    def __eq__(self, other) -> bool:
        if not isinstance(other, BitMatrix):
            return NotImplemented
        return (
            self.rows == other.rows
            and self.cols == other.cols
            and np.array_equal(self.data, other.data)
        )

    def __repr__(self) -> str:
        return f"BitMatrix({self.rows}x{self.cols}, {self.count()} set)"

    def pad_bits_zero(self) -> bool:
        """Check the pad-zero invariant (used by tests and debug asserts)."""
        if self.rows == 0 or self.cols % WORD_BITS == 0:
            return True
        tail = self.words2d[:, -1]
        spill = np.uint64(((1 << WORD_BITS) - 1) ^ ((1 << (self.cols % WORD_BITS)) - 1))
        return not bool(np.any(tail & spill))


def _row_mask(cols: int) -> np.ndarray:
    """Word mask with the first `cols` bits set."""
    return pack_index_mask(np.arange(cols, dtype=np.int64), cols)


def identity(n: int) -> BitMatrix:
    m = BitMatrix(n, n)
    for i in range(n):
        m.set(i, i)
    return m


def rows_intersect(m: BitMatrix, i: int, m2: BitMatrix, k: int) -> bool:
    """True iff rows m[i] and m2[k] share a set column."""
    if m.cols != m2.cols:
        raise ValueError(f"column mismatch: {m.cols} vs {m2.cols}")
    return bool(np.any(m.row_words(i) & m2.row_words(k)))


def multiply_bitpacked(a: BitMatrix, b: BitMatrix) -> BitMatrix:
    """Boolean product out[i][j] = OR_k a[i][k] & b[k][j].

    Each output row is the OR of the rows of b selected by the set bits of
    the corresponding row of a, so the inner loop runs word-parallel.
    """
    if a.cols != b.rows:
        raise ValueError(f"dimension mismatch: {a.rows}x{a.cols} times {b.rows}x{b.cols}")
    out = BitMatrix(a.rows, b.cols)
    bw = b.words2d
    ow = out.words2d
    for i in range(a.rows):
        idx = a.row_indices(i)
        if idx.size:
            ow[i] = np.bitwise_or.reduce(bw[idx], axis=0)
    return out


# -- shared text format ---------------------------------------------------
# First line "R C"; then R lines of exactly C characters from {0,1}.

def parse_matrix_text(text: str) -> BitMatrix:
    lines = text.splitlines()
    if not lines:
        raise FormatError(1, "empty input, expected 'R C' header")
    head = lines[0].split()
    if len(head) != 2:
        raise FormatError(1, f"expected 'R C' header, got {lines[0]!r}")
    try:
        rows, cols = int(head[0]), int(head[1])
    except ValueError:
        raise FormatError(1, f"non-integer dimensions in header {lines[0]!r}") from None
    if rows < 0 or cols < 0:
        raise FormatError(1, "dimensions must be non-negative")
    if len(lines) < rows + 1:
        raise FormatError(len(lines) + 1, f"expected {rows} data rows, found {len(lines) - 1}")
    m = BitMatrix(rows, cols)
    for i in range(rows):
        line = lines[i + 1]
        if len(line) != cols:
            raise FormatError(i + 2, f"expected {cols} characters, got {len(line)}")
        vals = np.frombuffer(line.encode("ascii", "replace"), dtype=np.uint8) - ord("0")
        if vals.size and vals.max(initial=0) > 1:
            raise FormatError(i + 2, "row contains characters other than 0/1")
        m.words2d[i] = pack_index_mask(np.flatnonzero(vals), cols)
    return m


def format_matrix_text(m: BitMatrix) -> str:
    out = [f"{m.rows} {m.cols}"]
    for i in range(m.rows):
        bits = np.unpackbits(m.row_words(i).view(np.uint8), bitorder="little")[: m.cols]
        out.append("".join("1" if v else "0" for v in bits))
    return "\n".join(out) + "\n"
