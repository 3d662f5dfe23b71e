"""Brute-force reference implementations used as test oracles.

Everything here enumerates vectors explicitly with itertools and plain
Python integers, sharing no code with the library.
"""

from itertools import product

import numpy as np


def rows_as_ints(m):
    m = np.asarray(m, dtype=np.int64) & 1
    return [int("".join(map(str, r[::-1])) or "0", 2) for r in m]


def span(m) -> set[int]:
    out = {0}
    for r in rows_as_ints(m):
        out |= {x ^ r for x in out}
    return out


def rank(m) -> int:
    return len(span(m)).bit_length() - 1


def vec_int(v) -> int:
    return rows_as_ints(np.asarray(v).reshape(1, -1))[0]


def kernel(m, n: int) -> set[int]:
    """All x in GF(2)^n with m x = 0 (n <= 20)."""
    rows = rows_as_ints(m)
    return {x for x in range(1 << n) if all(bin(x & r).count("1") % 2 == 0 for r in rows)}


def popcount(x: int) -> int:
    return bin(x).count("1")


def min_logical_weight(h, lconj, n: int) -> float:
    """min |x| with h x = 0 and x not orthogonal to some row of lconj."""
    lc = rows_as_ints(lconj)
    best = float("inf")
    for x in kernel(h, n):
        if any(popcount(x & r) % 2 for r in lc):
            best = min(best, popcount(x))
    return best


def css_k(hx, hz, n: int) -> int:
    return n - rank(hx) - rank(hz)


def brute_matmul(a, b):
    a = np.asarray(a, dtype=np.int64)
    b = np.asarray(b, dtype=np.int64)
    out = np.zeros((a.shape[0], b.shape[1]), dtype=np.int64)
    for i, j in product(range(a.shape[0]), range(b.shape[1])):
        out[i, j] = sum(int(a[i, t]) * int(b[t, j]) for t in range(a.shape[1])) % 2
    return out


def css_distance(hx, hz, n: int) -> tuple[float, float]:
    """(dX, dZ) from ker / rowspace differences, without logical bases."""
    sx, sz = span(hx), span(hz)
    dx = min((popcount(x) for x in kernel(hz, n) if x not in sx), default=float("inf"))
    dz = min((popcount(x) for x in kernel(hx, n) if x not in sz), default=float("inf"))
    return dx, dz
