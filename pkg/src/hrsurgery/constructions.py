"""Classical codes and quantum code families built from them."""

from __future__ import annotations

import json
from dataclasses import dataclass
from importlib import resources
from pathlib import Path
from typing import Sequence

import numpy as np

from . import f2core as f2
from .codes import INF, CssCode, matrix_from_json, matrix_to_json, min_weight_nontrivial


class ClassicalCode:
    """Binary linear code given by a boundary map ``h`` from bits to checks (m x n)."""

    def __init__(self, h, name: str = ""):
        self.h = f2.as_bits(h)
        self.h.setflags(write=False)
        self.name = name

    @property
    def n(self) -> int:
        return self.h.shape[1]

    @property
    def m(self) -> int:
        return self.h.shape[0]

    @property
    def k(self) -> int:
        return self.n - f2.rank(self.h)

    def transpose(self) -> "ClassicalCode":
        return ClassicalCode(self.h.T.copy(), name=f"{self.name}^T" if self.name else "")

    def generator(self) -> np.ndarray:
        return f2.kernel_basis(self.h) if self.h.shape[0] else f2.identity(self.n)

    def distance(self) -> float:
        """Exact minimum distance (``inf`` when k = 0)."""
        return min_weight_nontrivial(self.h, f2.identity(self.n))[0]

    def __repr__(self) -> str:
        return f"ClassicalCode({self.name or '?'}: n={self.n}, m={self.m})"


def _h(c) -> np.ndarray:
    return c.h if isinstance(c, ClassicalCode) else f2.as_bits(c)


# ---------------------------------------------------------------- classical library

def rep(n: int) -> ClassicalCode:
    """Repetition code with the n - 1 nearest-neighbour checks."""
    h = f2.zeros(n - 1, n)
    for i in range(n - 1):
        h[i, i] = h[i, i + 1] = 1
    return ClassicalCode(h, name=f"rep{n}")


def rep_cyclic(n: int) -> ClassicalCode:
    """Repetition code with n cyclic checks (one redundant)."""
    h = f2.zeros(n, n)
    for i in range(n):
        h[i, i] = h[i, (i + 1) % n] = 1
    return ClassicalCode(h, name=f"rep{n}c")


def hamming(r: int = 3) -> ClassicalCode:
    """[2^r - 1, 2^r - r - 1, 3] Hamming code; column j is the binary form of j + 1."""
    n = 2**r - 1
    cols = np.arange(1, n + 1)
    h = ((cols[None, :] >> np.arange(r)[:, None]) & 1).astype(np.uint8)
    return ClassicalCode(h, name=f"hamming{n}")


def random_regular(n: int, col_weight: int, row_weight: int, seed: int = 0,
                   max_tries: int = 1000) -> ClassicalCode:
    """Random (col_weight, row_weight)-regular check matrix without repeated edges."""
    if (n * col_weight) % row_weight:
        raise ValueError("n * col_weight must be divisible by row_weight")
    m = n * col_weight // row_weight
    rng = np.random.default_rng(seed)
    sockets = np.repeat(np.arange(m), row_weight)
    for _ in range(max_tries):
        perm = rng.permutation(sockets).reshape(n, col_weight)
        if all(len(set(r)) == col_weight for r in perm):
            h = f2.zeros(m, n)
            for j, rows in enumerate(perm):
                h[rows, j] = 1
            return ClassicalCode(h, name=f"reg{col_weight}{row_weight}_{n}_s{seed}")
    raise RuntimeError("could not sample a simple regular graph")


def all_ones(m: int, n: int) -> ClassicalCode:
    return ClassicalCode(np.ones((m, n), np.uint8), name=f"ones{m}x{n}")


# ---------------------------------------------------------------- products

def _factor_meta(b: np.ndarray, d: np.ndarray) -> dict:
    return {"b": matrix_to_json(b), "d": matrix_to_json(d)}


def hgp(b, d, name: str = "") -> CssCode:
    """Hypergraph product of the boundary maps ``b`` (B1 -> B0) and ``d`` (D1 -> D0).

    Qubits are B1 x D0 followed by B0 x D1, X checks are B1 x D1 and Z checks
    are B0 x D0:  hx = [I (x) d^T | b^T (x) I],  hz = [b (x) I | I (x) d].
    """
    bm, dm = _h(b), _h(d)
    nb0, nb1 = bm.shape
    nd0, nd1 = dm.shape
    hx = f2.hstack([f2.kron(f2.identity(nb1), dm.T), f2.kron(bm.T, f2.identity(nd1))])
    hz = f2.hstack([f2.kron(bm, f2.identity(nd0)), f2.kron(f2.identity(nb0), dm)])
    n = nb1 * nd0 + nb0 * nd1
    hx = hx.reshape(nb1 * nd1, n)
    hz = hz.reshape(nb0 * nd0, n)
    meta = {"construction": "hgp", "hgp_factors": _factor_meta(bm, dm)}
    return CssCode(hx, hz, name=name, meta=meta)


def tensor_code(b, d) -> ClassicalCode:
    """Tensor product code on B1 x D1 with checks [I (x) d ; b (x) I]; kernel ker b (x) ker d."""
    bm, dm = _h(b), _h(d)
    nb0, nb1 = bm.shape
    nd0, nd1 = dm.shape
    top = f2.kron(f2.identity(nb1), dm).reshape(nb1 * nd0, nb1 * nd1)
    bot = f2.kron(bm, f2.identity(nd1)).reshape(nb0 * nd1, nb1 * nd1)
    return ClassicalCode(f2.vstack([top, bot]), name="tensor")


# ---------------------------------------------------------------- bivariate bicycle

def _shift(n: int, p: int) -> np.ndarray:
    return np.roll(f2.identity(n), p % n, axis=1)


def bb_monomial(l: int, m: int, a: int, b: int) -> np.ndarray:
    """x^a y^b with x = S_l (x) I_m and y = I_l (x) S_m."""
    return f2.kron(_shift(l, a), _shift(m, b))


def bivariate_bicycle(l: int, m: int, a_terms: Sequence[Sequence[int]],
                      b_terms: Sequence[Sequence[int]], name: str = "") -> CssCode:
    """Bivariate bicycle code; each term is an (x power, y power) pair.

    hx = [A | B], hz = [B^T | A^T].
    """
    a = sum(bb_monomial(l, m, *t).astype(np.int64) for t in a_terms) % 2
    b = sum(bb_monomial(l, m, *t).astype(np.int64) for t in b_terms) % 2
    a = a.astype(np.uint8)
    b = b.astype(np.uint8)
    hx = f2.hstack([a, b])
    hz = f2.hstack([b.T, a.T])
    meta = {"construction": "bb", "l": l, "m": m,
            "a": [list(t) for t in a_terms], "b": [list(t) for t in b_terms]}
    return CssCode(hx, hz, name=name or f"bb{l}x{m}", meta=meta)


def load_config(name_or_path: str | Path) -> dict:
    """Read a JSON config, looking in the package data directory for bare names."""
    p = Path(name_or_path)
    if p.exists():
        return json.loads(p.read_text(encoding="utf-8"))
    data = resources.files("hrsurgery") / "data" / p.name
    return json.loads(data.read_text(encoding="utf-8"))


def gross_code() -> CssCode:
    """[[144, 12, 12]] bivariate bicycle code from the shipped config."""
    cfg = load_config("gross.json")
    return bivariate_bicycle(cfg["l"], cfg["m"], cfg["a"], cfg["b"], name="gross")


# ---------------------------------------------------------------- spatially coupled HGP

@dataclass(frozen=True)
class ScHgpSpec:
    """Base check matrix, array side L, coupling width and seed.

    Every nonzero entry of the base matrix is assigned a shift (s, t) in
    {0..width}^2 drawn from ``seed``; width 0 gives L^2 uncoupled copies.
    """

    base: np.ndarray
    L: int
    coupling_width: int = 1
    seed: int = 0

    @property
    def r_c(self) -> int:
        return self.base.shape[0]

    @property
    def n_c(self) -> int:
        return self.base.shape[1]


def sc_shifts(spec: ScHgpSpec) -> dict[tuple[int, int], tuple[int, int]]:
    base = f2.as_bits(spec.base)
    rng = np.random.default_rng(spec.seed)
    out = {}
    for i, j in zip(*np.nonzero(base)):
        s, t = rng.integers(0, spec.coupling_width + 1, size=2)
        out[(int(i), int(j))] = (int(s) % spec.L, int(t) % spec.L)
    return out


def _lift(entries: dict[tuple[int, int], tuple[int, int]], rows: int, cols: int, L: int,
          conj: bool = False) -> np.ndarray:
    """Binary expansion of a matrix over F2[Z_L x Z_L] with monomial entries."""
    g = L * L
    out = f2.zeros(cols * g, rows * g) if conj else f2.zeros(rows * g, cols * g)
    for (i, j), (s, t) in entries.items():
        p = bb_monomial(L, L, s, t)
        if conj:
            out[j * g:(j + 1) * g, i * g:(i + 1) * g] = p.T
        else:
            out[i * g:(i + 1) * g, j * g:(j + 1) * g] = p
    return out


def _ring_kron_id_left(a: np.ndarray, k: int, g: int) -> np.ndarray:
    """I_k (x) A for a lifted matrix A whose blocks have size g."""
    r, c = a.shape[0] // g, a.shape[1] // g
    out = f2.zeros(k * r * g, k * c * g)
    for u in range(k):
        out[u * r * g:(u + 1) * r * g, u * c * g:(u + 1) * c * g] = a
    return out


def _ring_kron_id_right(a: np.ndarray, k: int, g: int) -> np.ndarray:
    """A (x) I_k for a lifted matrix A whose blocks have size g."""
    r, c = a.shape[0] // g, a.shape[1] // g
    out = f2.zeros(r * k * g, c * k * g)
    for i in range(r):
        for j in range(c):
            blk = a[i * g:(i + 1) * g, j * g:(j + 1) * g]
            if not blk.any():
                continue
            for u in range(k):
                ri, cj = (i * k + u) * g, (j * k + u) * g
                out[ri:ri + g, cj:cj + g] = blk
    return out


def sc_hgp(spec: ScHgpSpec, name: str = "") -> CssCode:
    """Spatially coupled hypergraph product on an L x L array of base HGP blocks.

    The base boundary maps are b = H_C and d = H_C^T; each base edge is lifted
    to a shift of the group Z_L x Z_L.  This keeps the product structure, so
    the checks commute, n = (r_c^2 + n_c^2) L^2 and k >= (n_c - r_c)^2 L^2.
    With L = 1 (or width 0 and L = 1) the result equals ``hgp(H_C, H_C^T)``.
    """
    base = f2.as_bits(spec.base)
    r, n = base.shape
    L = spec.L
    g = L * L
    sh = sc_shifts(spec)
    a = _lift(sh, r, n, L)              # b: B1 -> B0
    a_conj = _lift(sh, r, n, L, True)   # d = b^dagger: D1 -> D0
    hx = f2.hstack([_ring_kron_id_left(a, n, g), _ring_kron_id_right(a_conj, r, g)])
    hz = f2.hstack([_ring_kron_id_right(a, n, g), _ring_kron_id_left(a_conj, r, g)])
    meta = {"construction": "sc_hgp", "r_c": r, "n_c": n, "L": L,
            "coupling_width": spec.coupling_width, "seed": spec.seed,
            "base": matrix_to_json(base)}
    if L == 1:
        meta["hgp_factors"] = _factor_meta(base, base.T.copy())
    return CssCode(hx, hz, name=name or f"sc_hgp_{r}_{n}_{L}_s{spec.seed}", meta=meta)


def _sc_seed_k(base: np.ndarray, L: int, coupling_width: int, seed: int, degree_cap: int | None) -> int:
    from .codes import degree_profile

    code = sc_hgp(ScHgpSpec(base, L, coupling_width, seed))
    if degree_cap is not None and degree_profile(code).max_qubit_degree > degree_cap:
        return -1
    return code.k


def search_sc_seed(base, L: int, coupling_width: int, seeds, degree_cap: int | None = None,
                   target_k: int | None = None, jobs: int = 1) -> tuple[int, int]:
    """Seed maximizing k (or the first one hitting ``target_k``) under a total qubit-degree cap.

    Returns (seed, k); seed is -1 when no seed meets the cap.  The reduction
    keeps the earliest seed among ties, so the answer does not depend on ``jobs``.
    """
    base = f2.as_bits(base)
    seeds = [int(s) for s in seeds]
    if jobs > 1:
        from concurrent.futures import ThreadPoolExecutor

        with ThreadPoolExecutor(jobs) as ex:
            ks = list(ex.map(lambda s: _sc_seed_k(base, L, coupling_width, s, degree_cap), seeds))
    else:
        ks = [_sc_seed_k(base, L, coupling_width, s, degree_cap) for s in seeds]
    if target_k is not None:
        for s, k in zip(seeds, ks):
            if k == target_k:
                return s, k
    best = (-1, -1)
    for s, k in zip(seeds, ks):
        if k > best[1]:
            best = (s, k)
    return best
