"""Linear algebra over GF(2).

Matrices are 2-D ``np.uint8`` arrays holding 0/1 entries, vectors are 1-D
``np.uint8`` arrays.  No function mutates its arguments.  Elimination runs on
bit-packed ``uint64`` rows with pivots chosen left to right, earliest row
first, so every result is deterministic.
"""

from __future__ import annotations

from typing import Iterable, Sequence

import numba
import numpy as np

BitMatrix = np.ndarray
BitVector = np.ndarray


def as_bits(a, ndim: int = 2) -> np.ndarray:
    """Coerce to a uint8 0/1 array (entries are reduced mod 2)."""
    arr = np.asarray(a)
    if arr.dtype == bool:
        arr = arr.astype(np.uint8)
    else:
        arr = (arr.astype(np.int64) & 1).astype(np.uint8)
    if ndim == 2 and arr.ndim == 1:
        arr = arr.reshape(1, -1) if arr.size else arr.reshape(0, 0)
    if arr.ndim != ndim:
        raise ValueError(f"expected a {ndim}-d array, got shape {arr.shape}")
    return arr


def zeros(n_rows: int, n_cols: int) -> BitMatrix:
    return np.zeros((n_rows, n_cols), dtype=np.uint8)


def identity(n: int) -> BitMatrix:
    return np.eye(n, dtype=np.uint8)


def from_supports(supports: Iterable[Sequence[int]], n_cols: int) -> BitMatrix:
    """Build a matrix from per-row lists of column indices."""
    rows = [list(s) for s in supports]
    m = zeros(len(rows), n_cols)
    for i, s in enumerate(rows):
        if len(s) and (min(s) < 0 or max(s) >= n_cols):
            raise ValueError(f"row {i} has a column outside [0, {n_cols})")
        if any(b <= a for a, b in zip(s, s[1:])):
            raise ValueError(f"row {i} support is not strictly increasing")
        m[i, s] = 1
    return m


def to_supports(m: BitMatrix) -> list[list[int]]:
    m = as_bits(m)
    return [np.flatnonzero(row).tolist() for row in m]


def weight(v) -> int:
    return int(np.count_nonzero(v))


def row_weights(m: BitMatrix) -> np.ndarray:
    return np.count_nonzero(m, axis=1)


def matmul(a: BitMatrix, b: BitMatrix) -> BitMatrix:
    """Product mod 2.  Uses float BLAS while the inner dimension keeps sums exact."""
    a = np.asarray(a)
    b = np.asarray(b)
    if a.shape[-1] < (1 << 24):
        out = np.asarray(a, dtype=np.float32) @ np.asarray(b, dtype=np.float32)
        return (out.astype(np.int64) & 1).astype(np.uint8)
    out = a.astype(np.int64) @ b.astype(np.int64)
    return (out & 1).astype(np.uint8)


def kron(a: BitMatrix, b: BitMatrix) -> BitMatrix:
    return np.kron(as_bits(a), as_bits(b)).astype(np.uint8)


def hstack(blocks: Sequence[BitMatrix]) -> BitMatrix:
    return np.hstack([as_bits(b) for b in blocks]).astype(np.uint8)


def vstack(blocks: Sequence[BitMatrix]) -> BitMatrix:
    return np.vstack([as_bits(b) for b in blocks]).astype(np.uint8)


# ---------------------------------------------------------------- packing

def pack_rows(m: BitMatrix) -> np.ndarray:
    """Pack rows into little-endian uint64 words (bit j of a row is column j)."""
    m = as_bits(m)
    n_rows, n_cols = m.shape
    words = max(1, (n_cols + 63) // 64)
    padded = np.zeros((n_rows, words * 64), dtype=np.uint8)
    padded[:, :n_cols] = m
    packed = np.packbits(padded, axis=1, bitorder="little")
    return packed.view(np.uint64).reshape(n_rows, words).copy()


def unpack_rows(p: np.ndarray, n_cols: int) -> BitMatrix:
    p = np.ascontiguousarray(p, dtype=np.uint64)
    if p.shape[0] == 0:
        return zeros(0, n_cols)
    bits = np.unpackbits(p.view(np.uint8).reshape(p.shape[0], -1), axis=1, bitorder="little")
    return bits[:, :n_cols].astype(np.uint8)


@numba.njit(cache=True, nogil=True)
def _rref_packed(p, n_cols):
    """In-place reduced row echelon form of packed rows.  Returns (rank, pivots)."""
    n_rows, n_words = p.shape
    pivots = np.empty(min(n_rows, n_cols), dtype=np.int64)
    r = 0
    for c in range(n_cols):
        if r == n_rows:
            break
        w = c >> 6
        bit = np.uint64(1) << np.uint64(c & 63)
        piv = -1
        for i in range(r, n_rows):
            if p[i, w] & bit:
                piv = i
                break
        if piv < 0:
            continue
        if piv != r:
            for j in range(n_words):
                tmp = p[r, j]
                p[r, j] = p[piv, j]
                p[piv, j] = tmp
        for i in range(n_rows):
            if i != r and (p[i, w] & bit):
                for j in range(w, n_words):
                    p[i, j] ^= p[r, j]
        pivots[r] = c
        r += 1
    return r, pivots[:r].copy()


def rref(m: BitMatrix) -> tuple[BitMatrix, list[int]]:
    """Reduced row echelon form (zero rows dropped) and pivot columns."""
    m = as_bits(m)
    p = pack_rows(m)
    r, piv = _rref_packed(p, m.shape[1])
    return unpack_rows(p[:r], m.shape[1]), piv.tolist()


def rank(m: BitMatrix) -> int:
    m = as_bits(m)
    if m.size == 0:
        return 0
    r, _ = _rref_packed(pack_rows(m), m.shape[1])
    return int(r)


def row_basis(m: BitMatrix) -> BitMatrix:
    """Reduced basis of the row space."""
    return rref(m)[0]


def independent_rows(m: BitMatrix) -> list[int]:
    """Indices of a maximal set of independent rows, greedy in row order."""
    m = as_bits(m)
    if m.shape[0] == 0 or m.shape[1] == 0:
        return []
    # pivot columns of the transpose are the earliest independent rows
    return rref(m.T)[1]


def _kernel_from_rref(red: BitMatrix, pivots: Sequence[int], n_cols: int) -> BitMatrix:
    is_piv = np.zeros(n_cols, dtype=bool)
    is_piv[list(pivots)] = True
    free = np.flatnonzero(~is_piv)
    k = zeros(len(free), n_cols)
    k[np.arange(len(free)), free] = 1
    if len(pivots):
        k[:, list(pivots)] = red[:, free].T
    return k


def kernel_basis(m: BitMatrix) -> BitMatrix:
    """Rows span {x : m x = 0}; one row per free column, in column order."""
    m = as_bits(m)
    n = m.shape[1]
    if m.shape[0] == 0:
        return identity(n)
    red, piv = rref(m)
    return _kernel_from_rref(red, piv, n)


def left_kernel_basis(m: BitMatrix) -> BitMatrix:
    """Rows span {y : y m = 0}."""
    return kernel_basis(as_bits(m).T)


def solve(m: BitMatrix, b: BitVector) -> BitVector | None:
    """A solution of m x = b, or None if b is not in the column space."""
    m = as_bits(m)
    b = as_bits(b, ndim=1)
    if b.shape[0] != m.shape[0]:
        raise ValueError("shape mismatch between m and b")
    n = m.shape[1]
    if m.shape[0] == 0:
        return np.zeros(n, dtype=np.uint8)
    red, piv = rref(np.hstack([m, b.reshape(-1, 1)]))
    if piv and piv[-1] == n:
        return None
    x = np.zeros(n, dtype=np.uint8)
    for i, c in enumerate(piv):
        x[c] = red[i, n]
    return x


def solve_left(m: BitMatrix, b: BitVector) -> BitVector | None:
    """A row vector y with y m = b, or None."""
    return solve(as_bits(m).T, b)


def in_rowspace(v: BitVector, m: BitMatrix) -> bool:
    m = as_bits(m)
    v = as_bits(v, ndim=1)
    if m.shape[0] == 0:
        return not v.any()
    return rank(np.vstack([m, v])) == rank(m)


def same_rowspace(a: BitMatrix, b: BitMatrix) -> bool:
    a, b = as_bits(a), as_bits(b)
    ra, rb = rank(a), rank(b)
    return ra == rb and rank(np.vstack([a, b])) == ra


def intersect_rowspaces(a: BitMatrix, b: BitMatrix) -> BitMatrix:
    """Basis of rowspace(a) ∩ rowspace(b)."""
    a, b = row_basis(a), row_basis(b)
    if a.shape[0] == 0 or b.shape[0] == 0:
        return zeros(0, max(a.shape[1], b.shape[1]))
    # x a = y b  <=>  [x y] [a; b] = 0
    coef = left_kernel_basis(np.vstack([a, b]))
    return row_basis(matmul(coef[:, : a.shape[0]], a))


def complement_basis(sub: BitMatrix, space: BitMatrix) -> BitMatrix:
    """Rows of ``space`` extending a basis of ``sub`` to one of sub + space."""
    sub = as_bits(sub)
    space = as_bits(space)
    n = space.shape[1]
    base = row_basis(sub) if sub.shape[0] else zeros(0, n)
    r0 = base.shape[0]
    stacked = np.vstack([base, space])
    keep = [i - r0 for i in independent_rows(stacked) if i >= r0]
    # independent_rows keeps every row of the reduced base first
    return space[keep]


def random_invertible(k: int, rng: np.random.Generator) -> BitMatrix:
    while True:
        g = rng.integers(0, 2, size=(k, k), dtype=np.uint8)
        if rank(g) == k:
            return g


def inverse(m: BitMatrix) -> BitMatrix:
    m = as_bits(m)
    k = m.shape[0]
    if m.shape != (k, k):
        raise ValueError("inverse needs a square matrix")
    red, piv = rref(np.hstack([m, identity(k)]))
    if len(piv) < k or piv[k - 1] >= k:
        raise ValueError("matrix is singular")
    return red[:k, k:].copy()


# ---------------------------------------------------------------- subspace enumeration

def span_ints(basis: BitMatrix) -> np.ndarray:
    """All 2^r elements of the row span as packed integers (needs n <= 64)."""
    basis = as_bits(basis)
    n = basis.shape[1]
    if n > 64:
        raise ValueError("span_ints supports at most 64 columns")
    weights = (np.uint64(1) << np.arange(n, dtype=np.uint64)) if n else np.zeros(0, np.uint64)
    vals = np.zeros(1, dtype=np.uint64)
    for row in basis:
        b = np.uint64(np.bitwise_or.reduce(weights[row.astype(bool)], initial=np.uint64(0)))
        vals = np.concatenate([vals, vals ^ b])
    return vals


def ints_from_rows(m: BitMatrix) -> np.ndarray:
    m = as_bits(m)
    n = m.shape[1]
    if n > 64:
        raise ValueError("at most 64 columns")
    weights = np.uint64(1) << np.arange(n, dtype=np.uint64)
    return np.array([np.bitwise_or.reduce(weights[r.astype(bool)], initial=np.uint64(0)) for r in m], dtype=np.uint64)


def rows_from_ints(vals: np.ndarray, n: int) -> BitMatrix:
    vals = np.asarray(vals, dtype=np.uint64).reshape(-1, 1)
    return ((vals >> np.arange(n, dtype=np.uint64)) & np.uint64(1)).astype(np.uint8)


def popcount(vals: np.ndarray) -> np.ndarray:
    return np.bitwise_count(np.asarray(vals, dtype=np.uint64))
