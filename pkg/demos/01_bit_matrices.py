#!/usr/bin/env python3
# Bit-packed Boolean matrices: construction, word-parallel products, and
# how much the packing buys over single-bit arithmetic.

import time

import trimat as tm

# Build a matrix by hand. Storage is row-major uint64 words; pad bits in the
# last word of each row are guaranteed zero.
m = tm.BitMatrix(3, 130)
m.set(0, 0)
m.set(1, 64)   # first bit of the second word
m.set(2, 129)  # last legal column
print("dimensions:", m.rows, "x", m.cols, "->", m.words_per_row, "words per row")
print("set bits:", m.count(), "| pad invariant holds:", m.pad_bits_zero())

# The shared text format round-trips exactly.
text = tm.format_matrix_text(m)
print("\ntext form, first 2 lines:")
print("\n".join(text.splitlines()[:2]))
assert tm.parse_matrix_text(text) == m

# Boolean product: out[i][j] = OR_k a[i][k] & b[k][j].
rng = tm.CounterRng(1)
a = tm.random_bitmatrix(rng, 256, 256, 0.5)
b = tm.random_bitmatrix(rng, 256, 256, 0.5)

t0 = time.perf_counter()
fast = tm.multiply_bitpacked(a, b)
t_fast = time.perf_counter() - t0

t0 = time.perf_counter()
slow = tm.multiply_scalar_oracle(a, b)
t_slow = time.perf_counter() - t0

print(f"\n256x256 product: bitpacked {t_fast*1e3:.1f} ms, scalar {t_slow*1e3:.1f} ms "
      f"({t_slow/t_fast:.0f}x)")
print("products agree:", fast == slow)

# rows_intersect is the one-row version of the same trick: one AND over words.
print("\nrow 0 of a shares a column with row 0 of b:", tm.rows_intersect(a, 0, b, 0))
