"""Surgery diagrams, merged codes, soundness and classical code homomorphisms.

Maps are stored as matrices of shape (codomain, domain):

* ``ancilla_d1``: A1 -> A0, shape (|A0|, |A1|); rows are ancilla qubits,
  columns are ancilla X checks.
* ``ancilla_d0``: A0 -> A-1, shape (|A-1|, |A0|); rows are ancilla Z checks.
* ``gamma1``: A1 -> C1, shape (n, |A1|).
* ``gamma0``: A0 -> C0, shape (#Z checks of the data, |A0|).

The merged code acts on qubits [A0 | C1].  X checks are ordered
[A1-derived | data X checks], Z checks [ancilla Z checks | data Z checks
extended by gamma0].
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Any, Sequence

import numpy as np

from . import f2core as f2
from .codes import (INF, CodeError, CssCode, SubsystemCode, code_from_json, code_to_json,
                    degree_profile, estimate_distance, matrix_from_json, matrix_to_json,
                    min_weight_nontrivial)
from .constructions import ClassicalCode, hgp


class DiagramError(ValueError):
    """Raised when a surgery diagram does not commute or has bad shapes."""


# ---------------------------------------------------------------- diagram

@dataclass
class SurgeryDiagram:
    data: CssCode
    ancilla_d1: np.ndarray
    ancilla_d0: np.ndarray
    gamma1: np.ndarray
    gamma0: np.ndarray
    meta: dict = field(default_factory=dict)

    def __post_init__(self):
        self.ancilla_d1 = f2.as_bits(self.ancilla_d1)
        self.ancilla_d0 = f2.as_bits(self.ancilla_d0)
        self.gamma1 = f2.as_bits(self.gamma1)
        self.gamma0 = f2.as_bits(self.gamma0)

    @property
    def n_a1(self) -> int:
        return self.ancilla_d1.shape[1]

    @property
    def n_a0(self) -> int:
        return self.ancilla_d1.shape[0]

    @property
    def n_am1(self) -> int:
        return self.ancilla_d0.shape[0]

    @property
    def ancilla_size(self) -> int:
        """|A| = |A1| + |A0| + |A-1|."""
        return self.n_a1 + self.n_a0 + self.n_am1


def verify_diagram(diag: SurgeryDiagram) -> list[str]:
    """Problems with the diagram; an empty list means it is a valid chain map."""
    errs = []
    c = diag.data
    a1, a0, am1 = diag.n_a1, diag.n_a0, diag.n_am1
    if diag.ancilla_d0.shape != (am1, a0):
        errs.append(f"ancilla_d0 has shape {diag.ancilla_d0.shape}, expected ({am1}, {a0})")
    if diag.gamma1.shape != (c.n, a1):
        errs.append(f"gamma1 has shape {diag.gamma1.shape}, expected ({c.n}, {a1})")
    if diag.gamma0.shape != (c.hz.shape[0], a0):
        errs.append(f"gamma0 has shape {diag.gamma0.shape}, expected ({c.hz.shape[0]}, {a0})")
    if errs:
        return errs
    if am1 and a1 and f2.matmul(diag.ancilla_d0, diag.ancilla_d1).any():
        errs.append("ancilla boundary maps do not compose to zero")
    lhs = f2.matmul(diag.gamma0, diag.ancilla_d1)
    rhs = f2.matmul(c.hz, diag.gamma1)
    if not np.array_equal(lhs, rhs):
        bad = np.argwhere(lhs != rhs)
        errs.append(f"gamma0 d1 != hz gamma1 at {len(bad)} entries, first {bad[0].tolist()}")
    return errs


def require_valid(diag: SurgeryDiagram) -> None:
    errs = verify_diagram(diag)
    if errs:
        raise DiagramError("; ".join(errs))


def chain_map_completion(d_src, d_tgt, gamma1) -> np.ndarray | None:
    """gamma0 with gamma0 d_src = d_tgt gamma1, or None when none exists.

    A solution exists exactly when gamma1 maps ker d_src into ker d_tgt.
    """
    d_src, d_tgt, gamma1 = f2.as_bits(d_src), f2.as_bits(d_tgt), f2.as_bits(gamma1)
    rhs = f2.matmul(d_tgt, gamma1)
    out = f2.zeros(d_tgt.shape[0], d_src.shape[0])
    for r in range(rhs.shape[0]):
        if not rhs[r].any():
            continue
        y = f2.solve_left(d_src, rhs[r]) if d_src.shape[0] else None
        if y is None:
            return None
        out[r] = y
    return out


# ---------------------------------------------------------------- measured space

@dataclass
class MeasuredSpace:
    m: np.ndarray               # independent rows spanning gamma1(ker d1)
    m_logical: np.ndarray       # independent logical representatives c lx
    coefficients: np.ndarray    # rows c with m_logical = c lx
    ier: float

    @property
    def dim(self) -> int:
        return self.m.shape[0]


def logical_coefficients(code: CssCode, v) -> np.ndarray:
    """Coordinates of X operators in ker hz with respect to ``code.lx``."""
    return f2.matmul(f2.as_bits(v), code.lz.T)


def measured_space(diag: SurgeryDiagram) -> MeasuredSpace:
    c = diag.data
    ker = f2.kernel_basis(diag.ancilla_d1) if diag.n_a0 else f2.identity(diag.n_a1)
    img = f2.matmul(ker, diag.gamma1.T) if ker.shape[0] else f2.zeros(0, c.n)
    m = img[f2.independent_rows(img)] if img.shape[0] else img
    if c.k and m.shape[0]:
        coef = logical_coefficients(c, m)
        coef = coef[f2.independent_rows(coef)] if coef.any() else f2.zeros(0, c.k)
    else:
        coef = f2.zeros(0, c.k)
    m_log = f2.matmul(coef, c.lx) if coef.shape[0] else f2.zeros(0, c.n)
    size = diag.ancilla_size
    return MeasuredSpace(m, m_log, coef, m.shape[0] / size if size else 0.0)


def measured_span_equals(diag: SurgeryDiagram, targets) -> bool:
    """True when the measured logical classes are exactly span(targets)."""
    ms = measured_space(diag)
    tc = logical_coefficients(diag.data, targets)
    return f2.same_rowspace(ms.coefficients if ms.coefficients.shape[0] else f2.zeros(0, diag.data.k),
                            tc if tc.shape[0] else f2.zeros(0, diag.data.k))


# ---------------------------------------------------------------- merged code

class MergedCode(SubsystemCode):
    """Merged code of a surgery diagram, viewed as a subsystem code.

    Gauge Z operators are the ancilla-only Z logicals; bare logicals are the
    data logicals outside the measured classes, with each bare Z lifted onto
    the ancilla so that it commutes with the new X checks.
    """

    diagram: SurgeryDiagram
    measured: MeasuredSpace

    @property
    def n_ancilla_qubits(self) -> int:
        return self.diagram.n_a0

    @property
    def data_slice(self) -> slice:
        return slice(self.diagram.n_a0, self.n)


def merged_checks(diag: SurgeryDiagram) -> tuple[np.ndarray, np.ndarray]:
    c = diag.data
    a0 = diag.n_a0
    hx = f2.vstack([f2.hstack([diag.ancilla_d1.T, diag.gamma1.T]),
                    f2.hstack([f2.zeros(c.hx.shape[0], a0), c.hx])])
    hz = f2.vstack([f2.hstack([diag.ancilla_d0, f2.zeros(diag.n_am1, c.n)]),
                    f2.hstack([diag.gamma0, c.hz])])
    return hx.reshape(-1, a0 + c.n), hz.reshape(-1, a0 + c.n)


def _adapted_basis(code: CssCode, coef: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Logical bases whose first rows span the given classes, still paired to I."""
    k = code.k
    extra = f2.complement_basis(coef, f2.identity(k)) if k else f2.zeros(0, 0)
    t = f2.vstack([coef, extra]) if coef.shape[0] else extra
    lx = f2.matmul(t, code.lx)
    lz = f2.matmul(f2.inverse(t).T, code.lz)
    return lx, lz


def merge(diag: SurgeryDiagram, check: bool = True) -> MergedCode:
    require_valid(diag)
    c = diag.data
    a0 = diag.n_a0
    n = a0 + c.n
    hx, hz = merged_checks(diag)
    ms = measured_space(diag)
    n_meas = ms.coefficients.shape[0]
    lx, lz = _adapted_basis(c, ms.coefficients)
    bare_lx = f2.hstack([f2.zeros(c.k - n_meas, a0), lx[n_meas:]])
    # lift each unmeasured Z logical so it commutes with the ancilla X checks
    lifts = []
    for row in lz[n_meas:]:
        rhs = f2.matmul(diag.gamma1.T, row.reshape(-1, 1)).ravel()
        za = f2.solve(diag.ancilla_d1.T, rhs) if a0 else np.zeros(0, np.uint8)
        if za is None:
            raise CodeError("an unmeasured Z logical cannot be lifted onto the ancilla")
        lifts.append(np.concatenate([za, row]))
    bare_lz = np.array(lifts, np.uint8).reshape(-1, n)
    bare_lx = bare_lx.reshape(-1, n)

    # gauge Z: ancilla-only Z logicals modulo the merged Z stabilizers
    if a0:
        zk = f2.kernel_basis(diag.ancilla_d1.T) if diag.n_a1 else f2.identity(a0)
        cand = f2.hstack([zk, f2.zeros(zk.shape[0], c.n)]).reshape(-1, n)
        gauge_z = f2.complement_basis(f2.vstack([hz, bare_lz]).reshape(-1, n), cand)
    else:
        gauge_z = f2.zeros(0, n)
    g = gauge_z.shape[0]
    k_stab = n - f2.rank(hx) - f2.rank(hz)
    if k_stab != bare_lx.shape[0] + g:
        raise CodeError(f"logical count mismatch: {k_stab} != {bare_lx.shape[0]} + {g}")
    # gauge X: in ker hz, commute with bare Z, pair with gauge Z to the identity
    cons = f2.vstack([hz, bare_lz, gauge_z]).reshape(-1, n)
    gx = []
    off = hz.shape[0] + bare_lz.shape[0]
    for i in range(g):
        rhs = np.zeros(cons.shape[0], np.uint8)
        rhs[off + i] = 1
        x = f2.solve(cons, rhs)
        if x is None:
            raise CodeError("gauge operators cannot be paired")
        gx.append(x)
    gauge_x = np.array(gx, np.uint8).reshape(g, n)
    mc = MergedCode(hx, hz, gauge_x, gauge_z, bare_lx, bare_lz, name=f"merged({c.name})",
                    meta={"n_ancilla_qubits": a0}, check=check)
    mc.diagram = diag
    mc.measured = ms
    return mc


# ---------------------------------------------------------------- distance checks

def merged_distance(merged: MergedCode, side: str = "X", n_trials: int = 200, seed=0,
                    w_max: int | None = None) -> float:
    """Exact dressed distance when n <= 28, otherwise the randomized upper bound."""
    from .codes import exhaustive_distance
    if merged.n <= 28:
        return exhaustive_distance(merged, side)
    return estimate_distance(merged, side, w_max=w_max, n_trials=n_trials, seed=seed)[0]


def check_z_distance_preserved(merged: MergedCode, n_trials: int = 200, seed=0) -> dict[str, Any]:
    """Compare the merged Z distance with the data Z distance.

    Exhaustive when both codes are small, otherwise randomized search for a Z
    logical of the merged code lighter than the data distance.
    """
    data = merged.diagram.data
    from .codes import exhaustive_distance, exhaustive_distance_witness
    if data.n <= 28:
        dz = exhaustive_distance(data, "Z")
    else:
        dz = estimate_distance(data, "Z", n_trials=n_trials, seed=seed)[0]
    if merged.n <= 28:
        dm, wit = exhaustive_distance_witness(merged, "Z")
    else:
        w_max = None if dz == INF else int(dz) - 1
        dm, wits = estimate_distance(merged, "Z", w_max=w_max, n_trials=n_trials, seed=seed)
        wit = wits[0] if wits.shape[0] else None
    ok = dm >= dz
    return {"ok": bool(ok), "data_dz": dz, "merged_dz": dm, "witness": None if ok else wit}


# ---------------------------------------------------------------- soundness

def reduced_distance_table(h) -> tuple[np.ndarray, np.ndarray]:
    """For every syndrome s in the image of h: (|s|, min |x| over h x = s).

    Brute force over all 2^n inputs, so n must be small (<= 24).
    """
    h = f2.as_bits(h)
    m, n = h.shape
    if n > 24:
        raise ValueError("soundness brute force needs at most 24 inputs")
    hb = h
    if m > 64:
        # syndromes are compared through an injective compression
        hb = f2.row_basis(h)
        if hb.shape[0] > 64:
            raise ValueError("rank too large")
    cols = f2.ints_from_rows(hb.T) if hb.shape[0] else np.zeros(n, np.uint64)
    syn = np.zeros(1, np.uint64)
    wt = np.zeros(1, np.int64)
    for j in range(n):
        syn = np.concatenate([syn, syn ^ cols[j]])
        wt = np.concatenate([wt, wt + 1])
    order = np.lexsort((wt, syn))
    syn_s, wt_s = syn[order], wt[order]
    first = np.concatenate([[True], syn_s[1:] != syn_s[:-1]])
    leaders = syn_s[first]
    leader_w = wt_s[first]
    # syndrome weight in the original (uncompressed) check matrix
    if hb is h:
        sw = f2.popcount(leaders).astype(np.int64)
    else:
        # recover h x from a leader representative
        idx = order[first]
        xs = f2.rows_from_ints(idx.astype(np.uint64), n)
        sw = f2.row_weights(f2.matmul(xs, h.T)).astype(np.int64)
    return sw, leader_w


def soundness(h, t: int) -> float:
    """Largest rho with rho <= |h x| / d(x, ker h) for all x with 0 < |h x| <= t.

    ``inf`` when no such x exists.
    """
    sw, lw = reduced_distance_table(h)
    sel = (sw > 0) & (sw <= t)
    if not sel.any():
        return INF
    return float(np.min(sw[sel] / lw[sel]))


@dataclass
class SoundnessCertificate:
    rho: float
    t: int
    gamma1_degree: int
    data_distance: float
    ancilla_x_distance: float
    bound: float
    applicable: bool


def gamma_degree(gamma) -> int:
    g = f2.as_bits(gamma)
    if g.size == 0:
        return 0
    return int(max(g.sum(axis=0).max(), g.sum(axis=1).max()))


def ancilla_code(diag: SurgeryDiagram) -> CssCode:
    """The ancilla on its own: qubits A0, X checks from A1, Z checks from A-1."""
    return CssCode(diag.ancilla_d1.T, diag.ancilla_d0, name="ancilla")


def soundness_certificate(diag: SurgeryDiagram, data_distance: float | None = None,
                          t: int | None = None) -> SoundnessCertificate:
    """Evaluate the merged X-distance lower bound min(1, rho / |gamma1|) d.

    ``applicable`` is True when rho is measured up to t >= d and the ancilla
    has X distance >= d, the hypotheses under which the bound holds.
    """
    from .codes import exhaustive_distance
    data = diag.data
    d = data_distance if data_distance is not None else min(
        exhaustive_distance(data, "X"), exhaustive_distance(data, "Z"))
    if t is None:
        t = int(d) if d != INF else diag.n_a0
    rho = soundness(diag.ancilla_d1, t)
    anc = ancilla_code(diag)
    da = exhaustive_distance(anc, "X") if anc.n <= 28 else estimate_distance(anc, "X")[0]
    gdeg = gamma_degree(diag.gamma1)
    bound = min(1.0, rho / gdeg) * d if gdeg else d
    return SoundnessCertificate(rho, t, gdeg, d, da, bound, bool(t >= d and da >= d))


# ---------------------------------------------------------------- homomorphisms

@dataclass
class Homomorphism:
    """Chain map between classical codes: gamma0 d_src = d_tgt gamma1.

    ``gamma1`` has shape (tgt.n, src.n) and ``gamma0`` (tgt.m, src.m).  The
    logical action w satisfies G_src gamma1^T = w G_tgt for the canonical
    generators.
    """

    src: ClassicalCode
    tgt: ClassicalCode
    gamma1: np.ndarray
    gamma0: np.ndarray
    kind: str = "custom"

    def verify(self) -> bool:
        lhs = f2.matmul(self.gamma0, self.src.h)
        rhs = f2.matmul(self.tgt.h, self.gamma1)
        return np.array_equal(lhs, rhs)

    @property
    def action(self) -> np.ndarray:
        from .codes import classical_canonical_generator
        gs, _ = classical_canonical_generator(self.src.h)
        _, info_t = classical_canonical_generator(self.tgt.h)
        img = f2.matmul(gs, self.gamma1.T)
        return img[:, info_t].copy()

    def __add__(self, other: "Homomorphism") -> "Homomorphism":
        if not (np.array_equal(self.src.h, other.src.h) and np.array_equal(self.tgt.h, other.tgt.h)):
            raise ValueError("superposed maps need the same source and target")
        return Homomorphism(self.src, self.tgt, self.gamma1 ^ other.gamma1,
                            self.gamma0 ^ other.gamma0, kind="superpose")


def homomorphism_from(code: ClassicalCode, kind: str, **params) -> Homomorphism:
    """Build a homomorphism into ``code`` (the data-side factor).

    kinds: ``automorphism`` (perm), ``logical_check`` (h_i over the logical
    bits), ``puncture`` (logicals: indices to remove), ``augment`` (bits:
    indices copied onto new bits), ``superpose`` (a, b).
    """
    h = code.h
    n, m = code.n, code.m
    if kind == "identity":
        return Homomorphism(code, code, f2.identity(n), f2.identity(m), kind)
    if kind == "automorphism":
        perm = list(params["perm"])
        g1 = f2.zeros(n, n)
        g1[perm, np.arange(n)] = 1
        g0 = chain_map_completion(h, h, g1)
        if g0 is None:
            raise ValueError("permutation does not preserve the code")
        return Homomorphism(code, code, g1, g0, kind)
    if kind in ("logical_check", "puncture"):
        from .codes import classical_canonical_generator
        _, info = classical_canonical_generator(h)
        if kind == "puncture":
            drop = list(params["logicals"])
            hi = f2.zeros(len(drop), len(info))
            hi[np.arange(len(drop)), drop] = 1
        else:
            hi = f2.as_bits(params["h_i"])
        hl = f2.zeros(hi.shape[0], n)
        hl[:, info] = hi
        src = ClassicalCode(f2.vstack([h, hl]).reshape(-1, n), name=f"{code.name}+checks")
        g0 = f2.hstack([f2.identity(m), f2.zeros(m, hl.shape[0])]).reshape(m, -1)
        return Homomorphism(src, code, f2.identity(n), g0, kind)
    if kind == "augment":
        bits = list(params["bits"])
        e = f2.zeros(len(bits), n)
        e[np.arange(len(bits)), bits] = 1
        na = len(bits)
        hs = f2.vstack([f2.hstack([h, f2.zeros(m, na)]).reshape(m, n + na),
                        f2.hstack([e, f2.identity(na)]).reshape(na, n + na)])
        src = ClassicalCode(hs, name=f"{code.name}+copies")
        g1 = f2.hstack([f2.identity(n), f2.zeros(n, na)]).reshape(n, n + na)
        g0 = f2.hstack([f2.identity(m), f2.zeros(m, na)]).reshape(m, m + na)
        return Homomorphism(src, code, g1, g0, kind)
    if kind == "superpose":
        return params["a"] + params["b"]
    raise ValueError(f"unknown homomorphism kind {kind!r}")


def hgp_ancilla_for_hgp_data(data: CssCode, homs: Sequence[Homomorphism],
                             d_code: ClassicalCode) -> SurgeryDiagram:
    """Ancilla HGP(B', D) attached column by column to data HGP(B, F).

    Map i sends the i-th information bit of D to the i-th information column
    of the data (an information bit of F^T) and acts on the B factor through
    homs[i].
    """
    from .codes import classical_canonical_generator
    fac = data.meta.get("hgp_factors")
    if fac is None:
        raise ValueError("data code must be built by hgp()")
    bm = matrix_from_json(fac["b"])
    fm = matrix_from_json(fac["d"])
    if not homs:
        raise ValueError("need at least one homomorphism")
    src = homs[0].src.h
    for hm in homs:
        if not np.array_equal(hm.tgt.h, bm):
            raise ValueError("homomorphism target must be the data's first factor")
        if not np.array_equal(hm.src.h, src):
            raise ValueError("all homomorphisms must share one source code")
        if not hm.verify():
            raise ValueError("homomorphism does not commute")
    dm = d_code.h
    _, info_d = classical_canonical_generator(dm)
    _, info_ft = classical_canonical_generator(fm.T)
    if len(homs) > min(len(info_d), len(info_ft)):
        raise ValueError("more homomorphisms than logical columns")
    sb0, sb1 = src.shape
    nd0, nd1 = dm.shape
    nb0, nb1 = bm.shape
    nf0, nf1 = fm.shape
    a1 = sb1 * nd1
    d1 = f2.vstack([f2.kron(f2.identity(sb1), dm), f2.kron(src, f2.identity(nd1))]).reshape(-1, a1)
    a0 = d1.shape[0]
    d0 = f2.hstack([f2.kron(src, f2.identity(nd0)), f2.kron(f2.identity(sb0), dm)]).reshape(-1, a0)
    g1_block = f2.zeros(nb1 * nf0, a1)
    g0_block = f2.zeros(nb0 * nf0, sb0 * nd1)
    for i, hm in enumerate(homs):
        p = f2.zeros(nf0, nd1)
        p[info_ft[i], info_d[i]] = 1
        g1_block ^= f2.kron(hm.gamma1, p)
        g0_block ^= f2.kron(hm.gamma0, p)
    gamma1 = f2.vstack([g1_block, f2.zeros(nb0 * nf1, a1)]).reshape(data.n, a1)
    gamma0 = f2.hstack([f2.zeros(nb0 * nf0, sb1 * nd0), g0_block]).reshape(nb0 * nf0, a0)
    diag = SurgeryDiagram(data, d1, d0, gamma1, gamma0,
                          meta={"construction": "hgp_ancilla", "columns": info_ft[:len(homs)]})
    require_valid(diag)
    return diag


# ---------------------------------------------------------------- schedule

@dataclass
class SurgerySchedule:
    """Metadata for one logical measurement round trip (no simulation)."""

    rounds: int
    steps: list[str]
    outcome_checks: list[list[int]]

    def to_json(self) -> dict[str, Any]:
        return {"rounds": self.rounds, "steps": self.steps, "outcome_checks": self.outcome_checks}


def surgery_schedule(diag: SurgeryDiagram, rounds: int) -> SurgerySchedule:
    """Steps and, per measured logical, the ancilla X checks whose product gives its outcome."""
    ms = measured_space(diag)
    ker = f2.kernel_basis(diag.ancilla_d1) if diag.n_a0 else f2.identity(diag.n_a1)
    img = f2.matmul(ker, diag.gamma1.T) if ker.shape[0] else f2.zeros(0, diag.data.n)
    outs = []
    if ms.coefficients.shape[0]:
        coef_k = logical_coefficients(diag.data, img)
        for c in ms.coefficients:
            y = f2.solve(coef_k.T, c)
            x = f2.matmul(y.reshape(1, -1), ker).ravel() if y is not None else None
            outs.append(np.flatnonzero(x).tolist() if x is not None else [])
    steps = ["prepare ancilla qubits in |0>",
             f"measure all merged checks for {rounds} rounds",
             "measure ancilla qubits in the Z basis",
             "apply the Pauli frame correction from the ancilla outcomes"]
    return SurgerySchedule(rounds, steps, outs)


# ---------------------------------------------------------------- serialization

def diagram_to_json(diag: SurgeryDiagram) -> dict[str, Any]:
    return {
        "data": code_to_json(diag.data),
        "ancilla_d1": matrix_to_json(diag.ancilla_d1),
        "ancilla_d0": matrix_to_json(diag.ancilla_d0),
        "gamma1": matrix_to_json(diag.gamma1),
        "gamma0": matrix_to_json(diag.gamma0),
        "meta": diag.meta,
    }


def diagram_from_json(obj: dict[str, Any]) -> SurgeryDiagram:
    return SurgeryDiagram(code_from_json(obj["data"]), matrix_from_json(obj["ancilla_d1"]),
                          matrix_from_json(obj["ancilla_d0"]), matrix_from_json(obj["gamma1"]),
                          matrix_from_json(obj["gamma0"]), meta=obj.get("meta", {}))


def merged_to_json(mc: MergedCode) -> dict[str, Any]:
    return {
        "n": mc.n,
        "n_ancilla_qubits": mc.n_ancilla_qubits,
        "stabilizer_x": matrix_to_json(mc.stabilizer_x),
        "stabilizer_z": matrix_to_json(mc.stabilizer_z),
        "gauge_x": matrix_to_json(mc.gauge_x),
        "gauge_z": matrix_to_json(mc.gauge_z),
        "bare_lx": matrix_to_json(mc.bare_lx),
        "bare_lz": matrix_to_json(mc.bare_lz),
    }
