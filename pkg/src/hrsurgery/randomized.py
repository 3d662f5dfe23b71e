"""Randomized ancilla construction for measuring many X logicals of an arbitrary CSS code.

The ancilla starts as the data Z checks restricted to the support of the
target logicals (one ancilla X check per supported data qubit, one ancilla
qubit per touched Z check), plus a few logical checks that stop it from
measuring anything outside the target span.  It then grows layer by layer:
each step samples light dressed X logicals of the merged code and attaches a
new qubit and Z check that anticommutes with as many of them as possible,
without changing what is measured and without exceeding the degree limit.
"""

from __future__ import annotations

import json
import math
import time
from dataclasses import asdict, dataclass, field
from pathlib import Path
from typing import Any, Sequence

import numpy as np

from . import f2core as f2
from .codes import (INF, CssCode, degree_profile, dumps, estimate_distance, search_logicals)
from .surgery import (MergedCode, SurgeryDiagram, logical_coefficients, measured_space, merge,
                      measured_span_equals, require_valid)


class ConstructionError(RuntimeError):
    """Raised when the ancilla cannot be initialized under the degree limit."""


class LayerGuardError(RuntimeError):
    """Raised when a layer is added twice with no growth in between."""


@dataclass
class GrowthConfig:
    degree_limit: int | None = None      # c; default: data max qubit/check degree + 2
    target_d: int | None = None          # default: data X distance estimate
    w_max: int | None = None             # default: target_d - 1
    n_trials: int = 200                  # information-set trials per probe
    n_logicals: int = 50                 # light logical classes kept per step
    candidate_pool: int = 500            # candidates scored per layer per step
    max_v_weight: int = 3                # |v| for in-layer combinations
    max_layers: int = 12
    max_steps: int = 20000
    strict_layers: bool | None = None    # default: True when n >= 500
    time_budget: float | None = None     # seconds
    final_trials: int = 500
    init_trials: int = 200
    low_weight_targets: bool = True      # measure the target span through light representatives
    weight_slack: int = 0                # score logicals up to (current minimum + slack)
    one_per_step: bool = True            # resample logicals after every added qubit
    prefer_light: bool = True            # break score ties toward light candidates
    cert_probes: int = 3                 # empty probes of final_trials needed to stop

    def resolved(self, data: CssCode) -> "GrowthConfig":
        cfg = GrowthConfig(**asdict(self))
        if cfg.degree_limit is None:
            p = degree_profile(data)
            cfg.degree_limit = max(p.max_qubit_degree, p.max_check_weight) + 2
        if cfg.strict_layers is None:
            cfg.strict_layers = data.n >= 500
        if cfg.target_d is None:
            d, _ = estimate_distance(data, "X", n_trials=cfg.n_trials, seed=0)
            cfg.target_d = int(d) if d != INF else 1
        if cfg.w_max is None:
            cfg.w_max = cfg.target_d - 1
        if cfg.degree_limit < 3 or cfg.target_d < 1:
            raise ValueError("need degree_limit >= 3 and target_d >= 1")
        return cfg


# ---------------------------------------------------------------- layered ancilla

class LayeredAncilla:
    """Ancilla complex organised in layers of identical X-check sets.

    X check j of layer i has global index ``i * s + j`` where s = |Q|.  Layer 0
    X check j is wired to data qubit ``support[j]``.  Qubits are either
    intra-layer (``layer >= 0``) or bridges between layers i and i + 1
    (``bridge_of = i``); Z checks are lists of ancilla qubit indices.
    """

    def __init__(self, data: CssCode, support: Sequence[int]):
        self.data = data
        self.support = [int(q) for q in support]
        self.n_layers = 1
        self.q_xsupp: list[list[int]] = []
        self.q_layer: list[int] = []
        self.q_bridge_of: list[int] = []
        self.q_gamma0: list[int] = []
        self.zchecks: list[list[int]] = []
        self.z_kind: list[str] = []
        self.bridge_qubit: dict[tuple[int, int], int] = {}
        self._grown_since_layer = True

    # -- sizes
    @property
    def s(self) -> int:
        return len(self.support)

    @property
    def n_x(self) -> int:
        return self.s * self.n_layers

    @property
    def n_q(self) -> int:
        return len(self.q_xsupp)

    @property
    def n_z(self) -> int:
        return len(self.zchecks)

    @property
    def size(self) -> int:
        return self.n_x + self.n_q + self.n_z

    # -- mutation
    def add_qubit(self, xsupp, layer: int = -1, bridge_of: int = -1, gamma0: int = -1) -> int:
        self.q_xsupp.append(sorted(int(x) for x in xsupp))
        self.q_layer.append(layer)
        self.q_bridge_of.append(bridge_of)
        self.q_gamma0.append(gamma0)
        self._grown_since_layer = True
        return self.n_q - 1

    def add_zcheck(self, qubits, kind: str = "intra") -> int:
        self.zchecks.append(sorted(int(q) for q in qubits))
        self.z_kind.append(kind)
        return self.n_z - 1

    def layer_qubits(self, i: int) -> list[int]:
        return [q for q in range(self.n_q) if self.q_layer[q] == i]

    # -- views
    def d1(self) -> np.ndarray:
        return f2.from_supports(self.q_xsupp, self.n_x)

    def d0(self) -> np.ndarray:
        return f2.from_supports(self.zchecks, self.n_q)

    def gamma1(self) -> np.ndarray:
        g = f2.zeros(self.data.n, self.n_x)
        g[self.support, np.arange(self.s)] = 1
        return g

    def gamma0(self) -> np.ndarray:
        g = f2.zeros(self.data.hz.shape[0], self.n_q)
        for q, c in enumerate(self.q_gamma0):
            if c >= 0:
                g[c, q] = 1
        return g

    def flatten(self) -> SurgeryDiagram:
        return SurgeryDiagram(self.data, self.d1(), self.d0(), self.gamma1(), self.gamma0(),
                              meta={"construction": "randomized", "layers": self.n_layers})

    @property
    def layers(self) -> list[tuple[np.ndarray, np.ndarray]]:
        """Per layer: (qubit x X-check block, intra-layer Z checks over the layer's qubits)."""
        out = []
        for i in range(self.n_layers):
            qs = self.layer_qubits(i)
            pos = {q: a for a, q in enumerate(qs)}
            xs = [[x - i * self.s for x in self.q_xsupp[q]] for q in qs]
            zs = [[pos[q] for q in z] for z, kd in zip(self.zchecks, self.z_kind)
                  if kd == "intra" and z and all(q in pos for q in z)]
            out.append((f2.from_supports(xs, self.s), f2.from_supports(zs, len(qs))))
        return out

    @property
    def bridges(self) -> list[tuple[tuple[int, int], list[list[int]]]]:
        """Per adjacent layer pair: the bridge Z checks (as ancilla qubit lists)."""
        out = []
        for i in range(self.n_layers - 1):
            rows = [z for z, kd in zip(self.zchecks, self.z_kind) if kd == f"bridge{i}"]
            out.append(((i, i + 1), rows))
        return out

    def degrees(self) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
        """(ancilla qubit degrees, merged X-check weights of A1, ancilla Z-check weights)."""
        qdeg = np.array([len(x) for x in self.q_xsupp], dtype=np.int64)
        qdeg += (np.array(self.q_gamma0, dtype=np.int64) >= 0) if self.n_q else 0
        for z in self.zchecks:
            qdeg[z] += 1
        xw = np.zeros(self.n_x, dtype=np.int64)
        for xs in self.q_xsupp:
            xw[xs] += 1
        xw[: self.s] += 1
        zw = np.array([len(z) for z in self.zchecks], dtype=np.int64)
        return qdeg, xw, zw

    # -- serialization
    def to_json(self) -> dict[str, Any]:
        return {"support": self.support, "n_layers": self.n_layers, "q_xsupp": self.q_xsupp,
                "q_layer": self.q_layer, "q_bridge_of": self.q_bridge_of,
                "q_gamma0": self.q_gamma0, "zchecks": self.zchecks, "z_kind": self.z_kind}

    @classmethod
    def from_json(cls, data: CssCode, obj: dict[str, Any]) -> "LayeredAncilla":
        a = cls(data, obj["support"])
        a.n_layers = obj["n_layers"]
        a.q_xsupp = [list(x) for x in obj["q_xsupp"]]
        a.q_layer = list(obj["q_layer"])
        a.q_bridge_of = list(obj["q_bridge_of"])
        a.q_gamma0 = list(obj["q_gamma0"])
        a.zchecks = [list(z) for z in obj["zchecks"]]
        a.z_kind = list(obj["z_kind"])
        for q, b in enumerate(a.q_bridge_of):
            if b >= 0:
                a.bridge_qubit[(b, a.q_xsupp[q][0] - b * a.s)] = q
        return a


# ---------------------------------------------------------------- targets

def random_targets(code: CssCode, t: int, rng: np.random.Generator) -> np.ndarray:
    """t logicals drawn from a uniformly random basis of the X-logical space."""
    g = f2.random_invertible(code.k, rng)
    basis = f2.matmul(g, code.lx)
    pick = np.sort(rng.choice(code.k, size=t, replace=False))
    return basis[pick]


def light_representatives(code: CssCode, targets, rng: np.random.Generator,
                          n_trials: int = 200) -> np.ndarray:
    """A generating set of span(targets) modulo stabilizers with light, overlapping supports.

    Each target class is replaced by the lightest representative found by
    information-set search over the coset; ties favour reps overlapping the
    supports already chosen.
    """
    targets = f2.as_bits(targets)
    if targets.shape[0] == 0:
        return targets
    coef = logical_coefficients(code, targets)
    out = []
    used = np.zeros(code.n, dtype=bool)
    for c in coef:
        rep = f2.matmul(c.reshape(1, -1), code.lx)[0]
        conj = f2.matmul(_pairing_dual(coef, c).reshape(1, -1), code.lz)
        span = f2.vstack([code.hx, rep.reshape(1, -1)]) if code.hx.shape[0] else rep.reshape(1, -1)
        dual = f2.kernel_basis(span)
        wit = search_logicals(dual, conj, code.n, n_trials, rng)
        cands = [rep] + [w for w in wit]
        cands = [w for w in cands if (f2.matmul(w.reshape(1, -1), conj.T)[0, 0] == 1)]
        best = min(cands, key=lambda w: (int(w.sum()), int((w.astype(bool) & ~used).sum())))
        used |= best.astype(bool)
        out.append(best)
    return np.array(out, np.uint8)


def _pairing_dual(coef: np.ndarray, c: np.ndarray) -> np.ndarray:
    """A k-vector pairing to 1 with c and to 0 with the other target classes."""
    k = coef.shape[1]
    idx = [i for i in range(coef.shape[0]) if not np.array_equal(coef[i], c)]
    rows = f2.vstack([coef[idx], c.reshape(1, -1)]) if idx else c.reshape(1, -1)
    rhs = np.zeros(rows.shape[0], np.uint8)
    rhs[-1] = 1
    y = f2.solve(rows, rhs)
    if y is None:
        raise ValueError("target classes are not independent")
    return y


# ---------------------------------------------------------------- initialization

def _kernel_over_support(anc: LayeredAncilla) -> np.ndarray:
    """Basis of ker d1 restricted to layer 0 (vectors over the support index)."""
    d1 = anc.d1()
    ker = f2.kernel_basis(d1) if d1.shape[0] else f2.identity(anc.n_x)
    return ker[:, : anc.s]


def _wanted_split(anc: LayeredAncilla, target_coef: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Split the current kernel into (wanted, unwanted) bases.

    Wanted vectors map to stabilizers plus target classes; the unwanted ones
    complete a basis of the kernel.
    """
    data = anc.data
    ker = _kernel_over_support(anc)
    if ker.shape[0] == 0:
        return ker, ker
    emb = f2.zeros(ker.shape[0], data.n)
    emb[:, anc.support] = ker
    coef = logical_coefficients(data, emb)
    # p annihilates exactly span(target_coef)
    p = f2.kernel_basis(target_coef) if target_coef.shape[0] else f2.identity(data.k)
    proj = f2.matmul(coef, p.T) if p.shape[0] else f2.zeros(ker.shape[0], 0)
    if proj.shape[1] == 0 or not proj.any():
        return ker, f2.zeros(0, anc.s)
    comb = f2.left_kernel_basis(proj)
    wanted = f2.matmul(comb, ker) if comb.shape[0] else f2.zeros(0, anc.s)
    unwanted = f2.complement_basis(wanted, ker)
    return wanted, unwanted


def initialize(data: CssCode, targets, cfg: GrowthConfig, rng: np.random.Generator) -> LayeredAncilla:
    """Build the initial single-layer ancilla measuring exactly span(targets)."""
    targets = f2.as_bits(targets)
    c = cfg.degree_limit
    support = np.flatnonzero(targets.any(axis=0)).tolist()
    anc = LayeredAncilla(data, support)
    if not support:
        return anc
    pos = {q: j for j, q in enumerate(support)}
    for ci, row in enumerate(data.hz):
        xs = [pos[q] for q in np.flatnonzero(row) if q in pos]
        if xs:
            anc.add_qubit(xs, layer=0, gamma0=ci)
    tcoef = logical_coefficients(data, targets)
    tcoef = tcoef[f2.independent_rows(tcoef)]

    # logical checks: commute with the target representatives, cut every other class
    h_in = targets[:, support]
    while True:
        _, unwanted = _wanted_split(anc, tcoef)
        if unwanted.shape[0] == 0:
            break
        qdeg, xw, _ = anc.degrees()
        wit = search_logicals(h_in, unwanted, c - 2, cfg.init_trials, rng)
        ok = [w for w in wit if np.all(xw[np.flatnonzero(w)] + 1 <= c - 1)]
        if not ok:
            wmin = int(wit.sum(axis=1).min()) if wit.shape[0] else None
            raise ConstructionError(
                f"no logical check within degree limit c={c} (lightest found: {wmin})")
        wmin = min(int(w.sum()) for w in ok)
        best = [w for w in ok if int(w.sum()) == wmin]
        pick = best[int(rng.integers(len(best)))]
        anc.add_qubit(np.flatnonzero(pick).tolist(), layer=0)

    _add_initial_zchecks(anc, cfg, rng)
    anc._grown_since_layer = True
    return anc


def _add_initial_zchecks(anc: LayeredAncilla, cfg: GrowthConfig, rng: np.random.Generator) -> None:
    """Light ancilla Z checks from ker d1^T that are not already merged stabilizers."""
    c = cfg.degree_limit
    d1 = anc.d1()
    if d1.shape[0] == 0:
        return
    wit = search_logicals(d1.T, f2.identity(anc.n_q), c, cfg.init_trials, rng)
    if wit.shape[0] == 0:
        return
    diag = anc.flatten()
    from .surgery import merged_checks
    _, hz = merged_checks(diag)
    basis = f2.row_basis(hz)
    r = basis.shape[0]
    n_m = hz.shape[1]
    for w in wit:
        qs = np.flatnonzero(w)
        qdeg, _, _ = anc.degrees()
        if len(qs) > c or np.any(qdeg[qs] + 1 > c):
            continue
        v = np.zeros(n_m, np.uint8)
        v[qs] = 1
        nb = f2.row_basis(f2.vstack([basis, v.reshape(1, -1)]))
        if nb.shape[0] == r:
            continue
        basis, r = nb, nb.shape[0]
        anc.add_zcheck(qs.tolist(), kind="intra")


# ---------------------------------------------------------------- growth

@dataclass
class _Candidate:
    layer: int
    kind: str                 # "combine" or "copy"
    xsupp: list[int]          # X checks of the new qubit (global ids)
    zcheck_old: list[int]     # existing ancilla qubits in the new Z check
    score: int = 0


def _layer_full_kernel(anc: LayeredAncilla, i: int) -> bool:
    layers = anc.layers
    k0 = f2.kernel_basis(layers[0][0]) if layers[0][0].shape[0] else f2.identity(anc.s)
    ki = f2.kernel_basis(layers[i][0]) if layers[i][0].shape[0] else f2.identity(anc.s)
    return f2.same_rowspace(k0, ki) if (k0.shape[0] or ki.shape[0]) else True


def _x_cap(anc: LayeredAncilla, cfg: GrowthConfig, layer: int) -> int:
    # keep one slot on the last layer's X checks for a future bridge
    if layer == anc.n_layers - 1 and anc.n_layers < cfg.max_layers:
        return cfg.degree_limit - 1
    return cfg.degree_limit


def candidates(anc: LayeredAncilla, layer: int, cfg: GrowthConfig,
               rng: np.random.Generator) -> list[_Candidate]:
    c = cfg.degree_limit
    qdeg, xw, _ = anc.degrees()
    xcap = _x_cap(anc, cfg, layer)
    out: list[_Candidate] = []
    qs = anc.layer_qubits(layer)

    allow_combine = not cfg.strict_layers or _layer_full_kernel(anc, layer)
    if allow_combine and qs:
        free = [q for q in qs if qdeg[q] + 1 <= c]
        combos: set[tuple[int, ...]] = set()
        for q in free:
            combos.add((q,))
        # pairs and triples of qubits sharing an X check
        by_check: dict[int, list[int]] = {}
        for q in free:
            for x in anc.q_xsupp[q]:
                by_check.setdefault(x, []).append(q)
        free_arr = np.array(free)
        budget = cfg.candidate_pool * 4
        for _ in range(budget):
            if cfg.max_v_weight < 2 or len(free) < 2:
                break
            q = int(free_arr[rng.integers(len(free_arr))])
            v = {q}
            size = int(rng.integers(2, cfg.max_v_weight + 1))
            for _ in range(4 * size):
                if len(v) >= size:
                    break
                x = anc.q_xsupp[int(rng.choice(list(v)))]
                if not x:
                    continue
                nb = by_check.get(int(x[rng.integers(len(x))]), [])
                if not nb:
                    continue
                v.add(int(nb[rng.integers(len(nb))]))
            if len(v) >= 2:
                combos.add(tuple(sorted(v)))
        for v in combos:
            w: set[int] = set()
            for q in v:
                w ^= set(anc.q_xsupp[q])
            if not w or len(w) + 1 > c or len(v) + 1 > c:
                continue
            if any(xw[x] + 1 > xcap for x in w):
                continue
            out.append(_Candidate(layer, "combine", sorted(w), list(v)))

    for nb_layer in (layer - 1, layer + 1):
        if nb_layer < 0 or nb_layer >= anc.n_layers:
            continue
        lo = min(layer, nb_layer)
        for q in anc.layer_qubits(nb_layer):
            slots = [x - nb_layer * anc.s for x in anc.q_xsupp[q]]
            if not slots or len(slots) > c - 2 or qdeg[q] + 1 > c:
                continue
            bq = [anc.bridge_qubit[(lo, j)] for j in slots]
            if any(qdeg[b] + 1 > c for b in bq):
                continue
            xs = [layer * anc.s + j for j in slots]
            if any(xw[x] + 1 > xcap for x in xs):
                continue
            out.append(_Candidate(layer, "copy", xs, sorted([q] + bq)))

    if len(out) > cfg.candidate_pool:
        idx = rng.choice(len(out), size=cfg.candidate_pool, replace=False)
        out = [out[i] for i in sorted(idx)]
    return out


def _score(cands: list[_Candidate], reps: np.ndarray, cls: np.ndarray) -> np.ndarray:
    """Classes hit (any representative anticommutes), ties broken by representatives hit."""
    if not cands or reps.shape[0] == 0:
        return np.zeros(len(cands), dtype=np.int64)
    n_cls = int(cls.max()) + 1
    scale = reps.shape[0] + 1
    scores = np.empty(len(cands), dtype=np.int64)
    for i, cd in enumerate(cands):
        par = (reps[:, cd.zcheck_old].sum(axis=1) & 1).astype(bool)
        hit = np.bincount(cls[par], minlength=n_cls)
        scores[i] = int(np.count_nonzero(hit)) * scale + int(par.sum())
    return scores


def _apply(anc: LayeredAncilla, cd: _Candidate) -> int:
    q = anc.add_qubit(cd.xsupp, layer=cd.layer)
    kind = "intra" if cd.kind == "combine" else f"bridge{min(cd.layer, _other_layer(anc, cd))}"
    anc.add_zcheck(cd.zcheck_old + [q], kind=kind)
    return q


def _other_layer(anc: LayeredAncilla, cd: _Candidate) -> int:
    for q in cd.zcheck_old:
        if anc.q_layer[q] >= 0 and anc.q_layer[q] != cd.layer:
            return anc.q_layer[q]
    return cd.layer


def add_layer(anc: LayeredAncilla, cfg: GrowthConfig | None = None) -> None:
    """Append a copy of the X checks joined to the previous layer by bridge qubits."""
    if not anc._grown_since_layer:
        raise LayerGuardError("add_layer called twice without growth in between")
    if cfg is not None and anc.n_layers >= cfg.max_layers:
        raise LayerGuardError("maximum number of layers reached")
    i = anc.n_layers - 1
    anc.n_layers += 1
    for j in range(anc.s):
        q = anc.add_qubit([i * anc.s + j, (i + 1) * anc.s + j], bridge_of=i)
        anc.bridge_qubit[(i, j)] = q
    anc._grown_since_layer = False


def sample_light_logicals(merged: MergedCode, cfg: GrowthConfig, rng: np.random.Generator,
                          n_trials: int | None = None, jobs: int = 1) -> tuple[np.ndarray, np.ndarray]:
    """Lightest dressed X logicals found (weight <= w_max) with their class labels.

    Every class found keeps at least its lightest representative; remaining
    slots up to ``n_logicals`` go to further representatives by weight.
    """
    h, lc = merged.stabilizer_z, merged.bare_lz
    if lc.shape[0] == 0:
        return f2.zeros(0, merged.n), np.zeros(0, np.int64)
    wit = search_logicals(h, lc, cfg.w_max, n_trials or cfg.n_trials, rng, jobs=jobs)
    if wit.shape[0] == 0:
        return wit, np.zeros(0, np.int64)
    wts = f2.row_weights(wit)
    wit = wit[wts <= wts.min() + cfg.weight_slack]
    keys = f2.matmul(wit, lc.T)
    cls = np.unique(keys, axis=0, return_inverse=True)[1].reshape(-1)
    # lightest rep of every class first, then fill by weight
    first = np.unique(cls, return_index=True)[1]
    rest = np.setdiff1d(np.arange(wit.shape[0]), first)
    order = np.concatenate([first[np.argsort(f2.row_weights(wit[first]), kind="stable")], rest])
    pick = np.sort(order[: cfg.n_logicals])
    return wit[pick], cls[pick]


def grow_step(anc: LayeredAncilla, reps: np.ndarray, cls: np.ndarray, cfg: GrowthConfig,
              rng: np.random.Generator) -> list[dict[str, Any]]:
    """Scan the layers in order and add the best-scoring qubit; returns the additions made.

    With ``cfg.one_per_step`` the scan stops at the first layer with a positive
    score, otherwise every layer may receive one qubit.  ``reps`` are light
    dressed logicals in merged coordinates [A0 | C1]; they are extended as
    qubits are added so that they keep commuting with the Z checks.
    """
    added = []
    n_data = anc.data.n
    cur = reps
    for layer in range(anc.n_layers):
        cands = candidates(anc, layer, cfg, rng)
        if not cands:
            continue
        sc = _score(cands, cur, cls)
        best = int(sc.max())
        if best <= 0:
            continue
        top = np.flatnonzero(sc == best)
        if cfg.prefer_light:
            # among equal scores use the fewest X-check slots
            cost = np.array([len(cands[i].xsupp) for i in top])
            top = top[cost == cost.min()]
        cd = cands[int(top[rng.integers(len(top))])]
        q = _apply(anc, cd)
        bit = (cur[:, cd.zcheck_old].sum(axis=1) & 1).astype(np.uint8)
        cur = np.hstack([cur[:, :q], bit.reshape(-1, 1), cur[:, q:]])
        scale = cur.shape[0] + 1
        added.append({"layer": layer, "kind": cd.kind, "weight": len(cd.xsupp),
                      "score": best // scale, "reps_hit": best % scale})
        if cfg.one_per_step:
            break
    return added


# ---------------------------------------------------------------- driver

@dataclass
class RunResult:
    ancilla: LayeredAncilla
    merged: MergedCode | None
    report: dict[str, Any]
    certified: bool


def construct(data: CssCode, targets, cfg: GrowthConfig | None = None, seed: int = 0,
              resume: LayeredAncilla | None = None, checkpoint: str | Path | None = None,
              log=None, jobs: int = 1) -> RunResult:
    """Grow an ancilla until no dressed X logical lighter than the target is found.

    ``jobs`` only splits distance-probe trials over threads; results do not
    depend on it.
    """
    t_start = time.perf_counter()
    cfg = (cfg or GrowthConfig()).resolved(data)
    ss = np.random.SeedSequence(seed)
    rng_init, rng_grow, rng_final = (np.random.default_rng(s) for s in ss.spawn(3))
    targets = f2.as_bits(targets) if np.asarray(targets).size else f2.zeros(0, data.n)
    reps = targets
    if targets.shape[0] and cfg.low_weight_targets:
        reps = light_representatives(data, targets, rng_init, cfg.init_trials)
    if resume is not None:
        anc = resume
    else:
        anc = initialize(data, reps, cfg, rng_init)
    steps: list[dict[str, Any]] = []
    certified = False
    merged = None
    for step in range(cfg.max_steps):
        diag = anc.flatten()
        merged = merge(diag, check=False)
        light, cls = sample_light_logicals(merged, cfg, rng_grow, jobs=jobs)
        for _ in range(cfg.cert_probes):
            if light.shape[0]:
                break
            light, cls = sample_light_logicals(merged, cfg, rng_grow, cfg.final_trials, jobs)
        d_est = int(light[:, :].sum(axis=1).min()) if light.shape[0] else None
        entry: dict[str, Any] = {"step": step, "layers": anc.n_layers, "ancilla_size": anc.size,
                                 "light_classes": int(np.unique(cls).size), "min_weight": d_est}
        if light.shape[0] == 0:
            steps.append(entry)
            certified = True
            break
        if cfg.time_budget is not None and time.perf_counter() - t_start > cfg.time_budget:
            entry["stop"] = "time budget"
            steps.append(entry)
            break
        added = grow_step(anc, light, cls, cfg, rng_grow)
        entry["added"] = added
        if not added:
            try:
                add_layer(anc, cfg)
                entry["added_layer"] = anc.n_layers - 1
            except LayerGuardError as exc:
                entry["stop"] = str(exc)
                steps.append(entry)
                break
        if not measured_span_equals(anc.flatten(), reps):
            raise RuntimeError(f"step {step} changed the measured logical classes")
        steps.append(entry)
        if log is not None:
            log(entry)
        if checkpoint is not None:
            Path(checkpoint).write_text(dumps(anc.to_json()), encoding="utf-8")

    if checkpoint is not None:
        Path(checkpoint).write_text(dumps(anc.to_json()), encoding="utf-8")
    diag = anc.flatten()
    require_valid(diag)
    merged = merge(diag)
    final = final_metrics(anc, merged, targets, cfg, rng_final, jobs)
    if certified and final["dx_upper"] != "inf":
        certified = False
    report = {"seed": seed, "config": asdict(cfg), "steps": steps, "final": final,
              "certified": certified}
    return RunResult(anc, merged, report, certified)


def final_metrics(anc: LayeredAncilla, merged: MergedCode, targets, cfg: GrowthConfig,
                  rng: np.random.Generator, jobs: int = 1) -> dict[str, Any]:
    diag = anc.flatten()
    ms = measured_space(diag)
    dx, _ = estimate_distance(merged, "X", w_max=cfg.w_max, n_trials=cfg.final_trials, seed=rng,
                              jobs=jobs)
    dp_data = degree_profile(anc.data)
    dp = degree_profile(merged)
    return {
        "ancilla_size": anc.size,
        "n_a1": anc.n_x, "n_a0": anc.n_q, "n_am1": anc.n_z,
        "layers": anc.n_layers,
        "measured_dim": ms.dim,
        "measured_logical_dim": int(ms.coefficients.shape[0]),
        "measures_targets": bool(measured_span_equals(diag, targets)) if np.asarray(targets).size else True,
        "ier": ms.ier,
        "dx_upper": dx if dx != INF else "inf",
        "degree_limit": cfg.degree_limit,
        "data_degree": [dp_data.max_qubit_degree, dp_data.max_check_weight_x, dp_data.max_check_weight_z],
        "merged_degree": [dp.max_qubit_degree, dp.max_check_weight_x, dp.max_check_weight_z],
    }


def save_report(report: dict[str, Any], path: str | Path, wall_time: float | None = None) -> None:
    Path(path).write_text(dumps(report), encoding="utf-8")
    if wall_time is not None:
        Path(str(path) + ".time.json").write_text(dumps({"wall_time_s": wall_time}), encoding="utf-8")
