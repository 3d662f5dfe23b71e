"""CSS and subsystem codes, logical bases, degree profiles and distances."""

from __future__ import annotations

import itertools
import json
import math
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Sequence

import numba
import numpy as np

from . import f2core as f2

INF = math.inf


class CodeError(ValueError):
    """Raised when matrices do not define a valid code."""


def _mat(a, n_cols: int | None = None) -> np.ndarray:
    if a is None:
        return f2.zeros(0, n_cols or 0)
    arr = np.asarray(a)
    if arr.ndim == 1 and arr.size == 0:
        return f2.zeros(0, n_cols or 0)
    return f2.as_bits(arr)


def _fix_pairing(lx: np.ndarray, lz: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Replace lz by combinations so that lx lz^T = I."""
    p = f2.matmul(lx, lz.T)
    if f2.rank(p) != lx.shape[0]:
        raise CodeError("lx lz^T is singular")
    t = f2.inverse(p).T
    return lx, f2.matmul(t, lz)


# ---------------------------------------------------------------- CSS codes

class CssCode:
    """CSS code with X checks ``hx``, Z checks ``hz`` and paired logical bases.

    ``lx`` spans X logicals (in ker hz, independent modulo row(hx)) and ``lz``
    the Z logicals, with ``lx @ lz.T == I`` mod 2.  Missing logicals are filled
    in with the canonical basis.
    """

    def __init__(self, hx, hz, lx=None, lz=None, name: str = "", meta: dict | None = None):
        hx = _mat(hx)
        n = hx.shape[1] if hx.size or hx.shape[1] else None
        hz = _mat(hz, n)
        if n is None:
            n = hz.shape[1]
        if hx.shape[0] == 0:
            hx = f2.zeros(0, n)
        if hz.shape[0] == 0:
            hz = f2.zeros(0, n)
        if hx.shape[1] != hz.shape[1]:
            raise CodeError(f"hx has {hx.shape[1]} columns, hz has {hz.shape[1]}")
        if f2.matmul(hx, hz.T).any():
            raise CodeError("hx hz^T != 0")
        self.hx = hx
        self.hz = hz
        self.name = name
        self.meta = dict(meta or {})
        self.rank_x = f2.rank(hx)
        self.rank_z = f2.rank(hz)
        k = self.n - self.rank_x - self.rank_z
        if lx is None or lz is None:
            lx, lz, _ = canonical_basis(self)
        lx, lz = _mat(lx, self.n), _mat(lz, self.n)
        if lx.shape != (k, self.n) or lz.shape != (k, self.n):
            raise CodeError(f"expected {k} logical pairs on {self.n} qubits")
        if k:
            if f2.matmul(hz, lx.T).any() or f2.matmul(hx, lz.T).any():
                raise CodeError("logicals do not commute with the checks")
            lx, lz = _fix_pairing(lx, lz)
        self.lx = lx
        self.lz = lz
        for a in (self.hx, self.hz, self.lx, self.lz):
            a.setflags(write=False)

    @property
    def n(self) -> int:
        return self.hx.shape[1]

    @property
    def k(self) -> int:
        return self.n - self.rank_x - self.rank_z

    def with_logicals(self, lx, lz) -> "CssCode":
        return CssCode(self.hx, self.hz, lx, lz, name=self.name, meta=self.meta)

    def as_subsystem(self) -> "SubsystemCode":
        n = self.n
        return SubsystemCode(self.hx, self.hz, f2.zeros(0, n), f2.zeros(0, n), self.lx, self.lz,
                             name=self.name, meta=self.meta, check=False)

    def __repr__(self) -> str:
        label = f" {self.name}" if self.name else ""
        return f"CssCode{label}[[{self.n},{self.k}]]"


# ---------------------------------------------------------------- subsystem codes

class SubsystemCode:
    """CSS subsystem code.

    Stabilizers ``stabilizer_x`` / ``stabilizer_z`` commute with everything,
    gauge pairs satisfy ``gauge_x @ gauge_z.T == I``, bare logicals pair to
    the identity and commute with all gauge operators.
    """

    def __init__(self, stabilizer_x, stabilizer_z, gauge_x, gauge_z, bare_lx, bare_lz,
                 name: str = "", meta: dict | None = None, check: bool = True):
        sx = _mat(stabilizer_x)
        n = sx.shape[1]
        self.stabilizer_x = sx
        self.stabilizer_z = _mat(stabilizer_z, n)
        self.gauge_x = _mat(gauge_x, n)
        self.gauge_z = _mat(gauge_z, n)
        self.bare_lx = _mat(bare_lx, n)
        self.bare_lz = _mat(bare_lz, n)
        self.name = name
        self.meta = dict(meta or {})
        if check:
            self.validate()

    @property
    def n(self) -> int:
        return self.stabilizer_x.shape[1]

    @property
    def k(self) -> int:
        return self.bare_lx.shape[0]

    @property
    def n_gauge(self) -> int:
        return self.gauge_x.shape[0]

    def validate(self) -> None:
        mm = f2.matmul
        sx, sz, gx, gz, lx, lz = (self.stabilizer_x, self.stabilizer_z, self.gauge_x,
                                  self.gauge_z, self.bare_lx, self.bare_lz)
        if mm(sx, sz.T).any():
            raise CodeError("stabilizers do not commute")
        for name, a, b in (("gauge_x/stab_z", gx, sz), ("bare_lx/stab_z", lx, sz),
                           ("gauge_z/stab_x", gz, sx), ("bare_lz/stab_x", lz, sx),
                           ("bare_lx/gauge_z", lx, gz), ("bare_lz/gauge_x", lz, gx)):
            if a.shape[0] and b.shape[0] and mm(a, b.T).any():
                raise CodeError(f"{name} do not commute")
        g = gx.shape[0]
        if gz.shape[0] != g or (g and not np.array_equal(mm(gx, gz.T), f2.identity(g))):
            raise CodeError("gauge_x gauge_z^T != I")
        k = lx.shape[0]
        if lz.shape[0] != k or (k and not np.array_equal(mm(lx, lz.T), f2.identity(k))):
            raise CodeError("bare_lx bare_lz^T != I")

    def __repr__(self) -> str:
        return f"SubsystemCode[[{self.n},{self.k}]] gauge={self.n_gauge}"


AnyCode = CssCode | SubsystemCode


def _stabilizers(code: AnyCode) -> tuple[np.ndarray, np.ndarray]:
    if isinstance(code, CssCode):
        return code.hx, code.hz
    return code.stabilizer_x, code.stabilizer_z


def _bare(code: AnyCode) -> tuple[np.ndarray, np.ndarray]:
    if isinstance(code, CssCode):
        return code.lx, code.lz
    return code.bare_lx, code.bare_lz


def side_problem(code: AnyCode, side: str) -> tuple[np.ndarray, np.ndarray]:
    """(parity check, conjugate bare logicals) for dressed logicals of one type.

    An X-type operator is a nontrivial dressed logical iff it lies in the kernel
    of the Z stabilizers and anticommutes with some bare Z logical.
    """
    sx, sz = _stabilizers(code)
    lx, lz = _bare(code)
    if side == "X":
        return sz, lz
    if side == "Z":
        return sx, lx
    raise ValueError("side must be 'X' or 'Z'")


# ---------------------------------------------------------------- canonical basis

def classical_canonical_generator(h) -> tuple[np.ndarray, list[int]]:
    """Generator of ker h with the identity on its information set (the free columns)."""
    h = f2.as_bits(h)
    n = h.shape[1]
    if h.shape[0] == 0:
        return f2.identity(n), list(range(n))
    red, piv = f2.rref(h)
    free = [c for c in range(n) if c not in set(piv)]
    return f2.kernel_basis(h), free


def canonical_basis(code: CssCode) -> tuple[np.ndarray, np.ndarray, list[int]]:
    """Logical bases lx = (I | Q_X | 0), lz = (I | 0 | Q_Z) up to a column permutation.

    Returns (lx, lz, info_qubits) with lx[:, info] = lz[:, info] = I and
    lx lz^T = I.  Codes built as hypergraph products use the product basis.
    """
    fac = code.meta.get("hgp_factors")
    if fac is not None:
        b = f2.from_supports(fac["b"]["rows"], fac["b"]["n_cols"])
        d = f2.from_supports(fac["d"]["rows"], fac["d"]["n_cols"])
        return product_canonical_basis(b, d)
    n = code.n
    hx, hz = code.hx, code.hz
    red_x, piv_x = f2.rref(hx) if hx.shape[0] else (f2.zeros(0, n), [])
    rest = [c for c in range(n) if c not in set(piv_x)]
    if hz.shape[0]:
        # restricted to the non-pivot columns of hx, hz keeps its full rank
        red_z, piv_z = _row_reduce_like(hz, rest)
    else:
        red_z, piv_z = f2.zeros(0, n), []
    info = [c for c in rest if c not in set(piv_z)]
    k = len(info)
    lx = f2.zeros(k, n)
    lz = f2.zeros(k, n)
    lx[np.arange(k), info] = 1
    lz[np.arange(k), info] = 1
    if piv_z:
        lx[:, piv_z] = red_z[:, info].T
    if piv_x:
        lz[:, piv_x] = red_x[:, info].T
    return lx, lz, info


def _row_reduce_like(h: np.ndarray, cols: Sequence[int]) -> tuple[np.ndarray, list[int]]:
    """Row-reduce h with pivots taken from ``cols`` first."""
    cols = list(cols)
    other = [c for c in range(h.shape[1]) if c not in set(cols)]
    perm = cols + other
    red, piv = f2.rref(h[:, perm])
    out = f2.zeros(red.shape[0], h.shape[1])
    out[:, perm] = red
    return out, [perm[c] for c in piv]


def product_canonical_basis(b, d) -> tuple[np.ndarray, np.ndarray, list[int]]:
    """Product logical basis for the hypergraph product of boundary maps b and d.

    Qubits are ordered as the blocks B1 x D0 then B0 x D1 (row-major inside a
    block).  Each X logical of the first block is g (x) e_j with g a canonical
    codeword of ker b and j an information bit of ker d^T, so it sits in a
    single column.
    """
    b, d = f2.as_bits(b), f2.as_bits(d)
    nb0, nb1 = b.shape
    nd0, nd1 = d.shape
    n = nb1 * nd0 + nb0 * nd1
    off = nb1 * nd0

    gb, ib = classical_canonical_generator(b)
    gdt, jdt = classical_canonical_generator(d.T)
    gbt, ibt = classical_canonical_generator(b.T)
    gd, jd = classical_canonical_generator(d)

    lx_rows, lz_rows, info = [], [], []
    for a in range(gb.shape[0]):
        for j in range(gdt.shape[0]):
            x = np.zeros(n, np.uint8)
            x[:off] = np.kron(gb[a], _unit(nd0, jdt[j]))
            z = np.zeros(n, np.uint8)
            z[:off] = np.kron(_unit(nb1, ib[a]), gdt[j])
            lx_rows.append(x)
            lz_rows.append(z)
            info.append(ib[a] * nd0 + jdt[j])
    for a in range(gbt.shape[0]):
        for j in range(gd.shape[0]):
            x = np.zeros(n, np.uint8)
            x[off:] = np.kron(_unit(nb0, ibt[a]), gd[j])
            z = np.zeros(n, np.uint8)
            z[off:] = np.kron(gbt[a], _unit(nd1, jd[j]))
            lx_rows.append(x)
            lz_rows.append(z)
            info.append(off + ibt[a] * nd1 + jd[j])
    if not lx_rows:
        return f2.zeros(0, n), f2.zeros(0, n), []
    return np.array(lx_rows, np.uint8), np.array(lz_rows, np.uint8), info


def _unit(n: int, i: int) -> np.ndarray:
    e = np.zeros(n, np.uint8)
    e[i] = 1
    return e


# ---------------------------------------------------------------- degrees

@dataclass(frozen=True)
class DegreeProfile:
    """Maximum qubit degree (X plus Z checks) and maximum check weights.

    The per-type qubit maxima are kept as well, since some tables quote the
    larger of the two instead of their sum.
    """

    max_qubit_degree: int
    max_check_weight_x: int
    max_check_weight_z: int
    max_qubit_degree_x: int = 0
    max_qubit_degree_z: int = 0

    @property
    def max_check_weight(self) -> int:
        return max(self.max_check_weight_x, self.max_check_weight_z)

    @property
    def max_single_type_degree(self) -> int:
        return max(self.max_qubit_degree_x, self.max_qubit_degree_z)


def degree_profile(code: AnyCode) -> DegreeProfile:
    sx, sz = _stabilizers(code)
    qx = sx.sum(axis=0, dtype=np.int64) if sx.shape[0] else np.zeros(sx.shape[1], np.int64)
    qz = sz.sum(axis=0, dtype=np.int64) if sz.shape[0] else np.zeros(sz.shape[1], np.int64)
    tot = qx + qz
    return DegreeProfile(
        int(tot.max()) if tot.size else 0,
        int(f2.row_weights(sx).max()) if sx.shape[0] else 0,
        int(f2.row_weights(sz).max()) if sz.shape[0] else 0,
        int(qx.max()) if qx.size else 0,
        int(qz.max()) if qz.size else 0,
    )


# ---------------------------------------------------------------- distance estimation

@numba.njit(cache=True, nogil=True)
def _isd_trial(h, perm, lc, w_max, out):
    """One information-set trial.

    Eliminates h with columns visited in ``perm`` order, then writes every
    kernel basis vector of weight <= w_max that anticommutes with a row of lc
    into ``out``.  Returns the number of vectors written.
    """
    m, n = h.shape
    n_words = (n + 63) // 64
    if n_words == 0:
        n_words = 1
    p = np.zeros((m, n_words), dtype=np.uint64)
    for i in range(m):
        for jj in range(n):
            if h[i, perm[jj]]:
                p[i, jj >> 6] |= np.uint64(1) << np.uint64(jj & 63)
    rnk, piv = _rref_inline(p, n)
    is_piv = np.zeros(n, dtype=np.bool_)
    for i in range(rnk):
        is_piv[piv[i]] = True
    cnt = 0
    v = np.zeros(n, dtype=np.uint8)
    for f in range(n):
        if is_piv[f]:
            continue
        w = f >> 6
        bit = np.uint64(1) << np.uint64(f & 63)
        wt = 1
        for i in range(rnk):
            if p[i, w] & bit:
                wt += 1
        if wt > w_max:
            continue
        v[:] = 0
        v[perm[f]] = 1
        for i in range(rnk):
            if p[i, w] & bit:
                v[perm[piv[i]]] = 1
        hit = False
        for r in range(lc.shape[0]):
            s = 0
            for q in range(n):
                if v[q]:
                    s ^= lc[r, q]
            if s:
                hit = True
                break
        if hit:
            out[cnt, :] = v
            cnt += 1
    return cnt


@numba.njit(cache=True, nogil=True)
def _rref_inline(p, n_cols):
    n_rows, n_words = p.shape
    pivots = np.empty(min(n_rows, n_cols) + 1, dtype=np.int64)
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
    return r, pivots


def search_logicals(h, l_conj, w_max: int, n_trials: int, rng: np.random.Generator,
                    jobs: int = 1) -> np.ndarray:
    """Randomized information-set search for low-weight logicals.

    Each trial visits the qubits in a random order, eliminates ``h`` and keeps
    the kernel basis vectors of weight <= ``w_max`` that anticommute with at
    least one row of ``l_conj``.  Returns the distinct witnesses found, sorted
    by weight then lexicographically.
    """
    h = np.ascontiguousarray(f2.as_bits(h))
    n = h.shape[1]
    lc = np.ascontiguousarray(f2.as_bits(l_conj) if np.asarray(l_conj).size else f2.zeros(0, n))
    if lc.shape[0] == 0 or n == 0:
        return f2.zeros(0, n)
    perms = [rng.permutation(n).astype(np.int64) for _ in range(n_trials)]

    def run(chunk):
        found = []
        buf = np.zeros((n, n), dtype=np.uint8)
        for perm in chunk:
            c = _isd_trial(h, perm, lc, int(w_max), buf)
            if c:
                found.append(buf[:c].copy())
        return found

    if jobs > 1 and n_trials > 1:
        from concurrent.futures import ThreadPoolExecutor

        chunks = [perms[i::jobs] for i in range(jobs)]
        with ThreadPoolExecutor(jobs) as ex:
            parts = [x for part in ex.map(run, chunks) for x in part]
    else:
        parts = run(perms)
    if not parts:
        return f2.zeros(0, n)
    allw = np.unique(np.vstack(parts), axis=0)
    order = np.lexsort(tuple(allw.T[::-1]) + (f2.row_weights(allw),))
    return allw[order]


def estimate_distance(code: AnyCode, side: str = "X", w_max: int | None = None,
                      n_trials: int = 200, seed: int | np.random.Generator | None = 0,
                      jobs: int = 1) -> tuple[float, np.ndarray]:
    """Upper bound on the dressed distance of one type, with witnesses.

    Returns ``(d_upper, witnesses)``; ``d_upper`` is ``inf`` when no logical of
    weight <= ``w_max`` was found (or the code has no logical qubits).
    """
    h, lc = side_problem(code, side)
    if lc.shape[0] == 0:
        return INF, f2.zeros(0, h.shape[1])
    if w_max is None:
        w_max = h.shape[1]
    rng = seed if isinstance(seed, np.random.Generator) else np.random.default_rng(seed)
    wit = search_logicals(h, lc, w_max, n_trials, rng, jobs=jobs)
    if wit.shape[0] == 0:
        return INF, wit
    return float(f2.row_weights(wit).min()), wit


# ---------------------------------------------------------------- exhaustive distance

def min_weight_nontrivial(h, l_conj, max_dim: int = 22) -> tuple[float, np.ndarray | None]:
    """Exact minimum weight of x with h x = 0 and x l_conj^T != 0.

    Enumerates the kernel of h when its dimension is at most ``max_dim``,
    otherwise enumerates vectors by increasing weight.
    """
    h = f2.as_bits(h)
    n = h.shape[1]
    lc = f2.as_bits(l_conj) if np.asarray(l_conj).size else f2.zeros(0, n)
    if lc.shape[0] == 0:
        return INF, None
    if n > 64:
        raise ValueError("exhaustive search supports at most 64 qubits")
    ker = f2.kernel_basis(h) if h.shape[0] else f2.identity(n)
    lc_int = f2.ints_from_rows(f2.row_basis(lc))
    if ker.shape[0] <= max_dim:
        vals = f2.span_ints(ker)
        bad = np.zeros(vals.shape[0], dtype=bool)
        for li in lc_int:
            bad |= (f2.popcount(vals & li) & 1).astype(bool)
        if not bad.any():
            return INF, None
        w = f2.popcount(vals).astype(np.int64)
        w[~bad] = n + 1
        i = int(np.argmin(w))
        return float(w[i]), f2.rows_from_ints(vals[i : i + 1], n)[0]
    return _min_weight_by_weight(h, lc)


def _min_weight_by_weight(h: np.ndarray, lc: np.ndarray) -> tuple[float, np.ndarray | None]:
    n = h.shape[1]
    hb = f2.row_basis(h) if h.shape[0] else f2.zeros(0, n)
    lb = f2.row_basis(lc)
    cols_h = f2.ints_from_rows(hb.T) if hb.shape[0] else np.zeros(n, np.uint64)
    cols_l = f2.ints_from_rows(lb.T)
    for w in range(1, n + 1):
        for chunk in _chunked(itertools.combinations(range(n), w), 1 << 16):
            idx = np.array(chunk, dtype=np.int64)
            sh = np.bitwise_xor.reduce(cols_h[idx], axis=1)
            sl = np.bitwise_xor.reduce(cols_l[idx], axis=1)
            ok = (sh == 0) & (sl != 0)
            if ok.any():
                v = np.zeros(n, np.uint8)
                v[idx[np.argmax(ok)]] = 1
                return float(w), v
    return INF, None


def _chunked(it, size):
    while True:
        chunk = list(itertools.islice(it, size))
        if not chunk:
            return
        yield chunk


def exhaustive_distance(code: AnyCode, side: str = "X") -> float:
    """Exact dressed distance of one type (``inf`` when k = 0).  Needs n <= 28."""
    if code.n > 28:
        raise ValueError("exhaustive_distance needs n <= 28")
    h, lc = side_problem(code, side)
    return min_weight_nontrivial(h, lc)[0]


def exhaustive_distance_witness(code: AnyCode, side: str = "X") -> tuple[float, np.ndarray | None]:
    if code.n > 28:
        raise ValueError("exhaustive search needs n <= 28")
    h, lc = side_problem(code, side)
    return min_weight_nontrivial(h, lc)


def code_distance(code: AnyCode) -> float:
    return min(exhaustive_distance(code, "X"), exhaustive_distance(code, "Z"))


# ---------------------------------------------------------------- serialization

def matrix_to_json(m: np.ndarray) -> dict[str, Any]:
    m = f2.as_bits(m)
    return {"n_rows": int(m.shape[0]), "n_cols": int(m.shape[1]), "rows": f2.to_supports(m)}


def matrix_from_json(obj: dict[str, Any]) -> np.ndarray:
    m = f2.from_supports(obj["rows"], obj["n_cols"])
    if m.shape[0] != obj["n_rows"]:
        raise CodeError("row count does not match n_rows")
    return m


def code_to_json(code: CssCode) -> dict[str, Any]:
    return {
        "name": code.name,
        "n": code.n,
        "hx": matrix_to_json(code.hx),
        "hz": matrix_to_json(code.hz),
        "lx": matrix_to_json(code.lx),
        "lz": matrix_to_json(code.lz),
        "meta": code.meta,
    }


def code_from_json(obj: dict[str, Any]) -> CssCode:
    lx = matrix_from_json(obj["lx"]) if obj.get("lx") else None
    lz = matrix_from_json(obj["lz"]) if obj.get("lz") else None
    return CssCode(matrix_from_json(obj["hx"]), matrix_from_json(obj["hz"]), lx, lz,
                   name=obj.get("name", ""), meta=obj.get("meta"))


def dumps(obj: Any) -> str:
    """Canonical JSON text used for every file this package writes."""
    return json.dumps(obj, sort_keys=True, separators=(",", ":")) + "\n"


def save_code(code: CssCode, path: str | Path) -> None:
    Path(path).write_text(dumps(code_to_json(code)), encoding="utf-8")


def load_code(path: str | Path) -> CssCode:
    return code_from_json(json.loads(Path(path).read_text(encoding="utf-8")))


def to_alist(m: np.ndarray) -> str:
    """MacKay alist text of a parity-check matrix."""
    m = f2.as_bits(m)
    n_rows, n_cols = m.shape
    cols = [np.flatnonzero(m[:, j]) + 1 for j in range(n_cols)]
    rows = [np.flatnonzero(m[i]) + 1 for i in range(n_rows)]
    cw = [len(c) for c in cols]
    rw = [len(r) for r in rows]
    mc, mr = max(cw, default=0), max(rw, default=0)
    lines = [f"{n_cols} {n_rows}", f"{mc} {mr}", " ".join(map(str, cw)), " ".join(map(str, rw))]
    for c in cols:
        lines.append(" ".join(map(str, list(c) + [0] * (mc - len(c)))))
    for r in rows:
        lines.append(" ".join(map(str, list(r) + [0] * (mr - len(r)))))
    return "\n".join(lines) + "\n"


def from_alist(text: str) -> np.ndarray:
    tok = text.split()
    pos = 0

    def nxt() -> int:
        nonlocal pos
        pos += 1
        return int(tok[pos - 1])

    n_cols, n_rows = nxt(), nxt()
    mc, mr = nxt(), nxt()
    cw = [nxt() for _ in range(n_cols)]
    rw = [nxt() for _ in range(n_rows)]
    m = f2.zeros(n_rows, n_cols)
    for j in range(n_cols):
        entries = [nxt() for _ in range(mc)]
        for e in entries[: cw[j]]:
            m[e - 1, j] = 1
    for i in range(n_rows):
        entries = [nxt() for _ in range(mr)]
        got = sorted(e - 1 for e in entries[: rw[i]])
        if got != np.flatnonzero(m[i]).tolist():
            raise CodeError(f"alist row {i + 1} disagrees with the column lists")
    return m
