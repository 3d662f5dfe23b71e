"""Space-time overhead of logical measurements and comparison of surgery schemes.

Overhead is the physical space-time volume divided by the cost of the same
circuit on unencoded qubits: alpha = space * cycles / (k + t), with time in
logical cycles.  A memory experiment (no measurements, one cycle) has
alpha = n / k, which is the baseline every scheme is normalized by.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import asdict, dataclass
from typing import Callable, Iterable, Sequence

from .codes import dumps

SCHEMES = ("memory", "low_rate_sequential", "low_rate_parallel", "high_rate")
CSV_COLUMNS = ("scheme", "n", "k", "d", "t", "space", "cycles", "alpha", "ratio")


@dataclass(frozen=True)
class OverheadReport:
    scheme: str
    n: int
    k: int
    d: int
    t: int
    space_physical: int
    time_logical_cycles: int
    alpha: float
    baseline_alpha: float
    ratio_to_memory: float

    def row(self) -> dict:
        return {"scheme": self.scheme, "n": self.n, "k": self.k, "d": self.d, "t": self.t,
                "space": self.space_physical, "cycles": self.time_logical_cycles,
                "alpha": self.alpha, "ratio": self.ratio_to_memory}


def alpha(space: int, cycles: int, k: int, t: int) -> float:
    if k + t <= 0:
        raise ValueError("k + t must be positive")
    return space * cycles / (k + t)


def overhead_from_sizes(n: int, k: int, d: int, t: int, ancilla_size: int, cycles: int,
                        scheme: str = "high_rate") -> OverheadReport:
    if k <= 0:
        raise ValueError("memory baseline needs k > 0")
    space = n + ancilla_size
    a = alpha(space, cycles, k, t)
    base = n / k
    return OverheadReport(scheme, n, k, d, t, space, cycles, a, base, a / base)


def overhead(merged, t_measurements: int, cycles: int = 1, d: int | None = None,
             scheme: str = "high_rate") -> OverheadReport:
    """Overhead of a merged code measuring ``t_measurements`` logicals in ``cycles`` cycles.

    Space is the data block plus every ancilla cell (X checks, qubits, Z checks).
    """
    diag = merged.diagram
    data = diag.data
    dd = d if d is not None else int(data.meta.get("d", 0))
    return overhead_from_sizes(data.n, data.k, dd, t_measurements, diag.ancilla_size, cycles, scheme)


def memory_report(n: int, k: int, d: int = 0) -> OverheadReport:
    return overhead_from_sizes(n, k, d, 0, 0, 1, "memory")


# ---------------------------------------------------------------- scheme models

@dataclass(frozen=True)
class SchemeModel:
    """Closed-form ancilla size and cycle count in terms of (n, k, d, t)."""

    scheme: str
    ancilla_size_fn: Callable[[int, int, int, int], int]
    cycles_fn: Callable[[int, int, int, int], int]


def patch_size(d: int, degree: int = 6) -> int:
    """Low-rate patch ancilla for one weight-d logical: (degree + 2) cells per support qubit."""
    return (degree + 2) * d


def scheme_models(degree: int = 6, high_rate_size: Callable[[int, int, int, int], int] | None = None
                  ) -> dict[str, SchemeModel]:
    hr = high_rate_size or (lambda n, k, d, t: n)
    return {
        "memory": SchemeModel("memory", lambda n, k, d, t: 0, lambda n, k, d, t: 1),
        "low_rate_sequential": SchemeModel(
            "low_rate_sequential", lambda n, k, d, t: patch_size(d, degree), lambda n, k, d, t: max(t, 1)),
        "low_rate_parallel": SchemeModel(
            "low_rate_parallel", lambda n, k, d, t: max(t, 1) * patch_size(d, degree), lambda n, k, d, t: 1),
        "high_rate": SchemeModel("high_rate", hr, lambda n, k, d, t: 1),
    }


def compare_schemes(code_params: Sequence[int], t: int, degree: int = 6,
                    high_rate_size: int | None = None) -> list[OverheadReport]:
    """Four-row comparison for a code (n, k, d) measuring t logicals.

    Low-rate schemes use one patch per measurement (sequentially reused or t
    disjoint copies).  The high-rate row uses ``high_rate_size`` when given,
    otherwise an ancilla as large as the data block.
    """
    n, k, d = (int(x) for x in code_params)
    hr = None if high_rate_size is None else (lambda n_, k_, d_, t_: int(high_rate_size))
    out = []
    for name, m in scheme_models(degree, hr).items():
        tt = 0 if name == "memory" else t
        out.append(overhead_from_sizes(n, k, d, tt, m.ancilla_size_fn(n, k, d, t),
                                       m.cycles_fn(n, k, d, t), name))
    return out


def sweep(code_params: Sequence[int], ts: Iterable[int], degree: int = 6,
          high_rate_sizes: dict[int, int] | None = None) -> list[OverheadReport]:
    rows = []
    for t in ts:
        hs = None if high_rate_sizes is None else high_rate_sizes.get(t)
        rows.extend(compare_schemes(code_params, t, degree, hs))
    return rows


def to_csv(rows: Sequence[OverheadReport]) -> str:
    buf = io.StringIO()
    w = csv.DictWriter(buf, fieldnames=CSV_COLUMNS, lineterminator="\n")
    w.writeheader()
    for r in rows:
        d = r.row()
        d["alpha"] = f"{d['alpha']:.6f}"
        d["ratio"] = f"{d['ratio']:.6f}"
        w.writerow(d)
    return buf.getvalue()


def to_json(rows: Sequence[OverheadReport]) -> str:
    return dumps([asdict(r) for r in rows])


def path_ancilla_ier(length: int) -> float:
    """IER of a single path-graph patch measuring one logical: 1 / |A|."""
    from . import f2core as f2
    from .surgery import SurgeryDiagram, measured_space
    from .constructions import rep
    from .codes import CssCode

    # data: a single repetition-code logical over ``length`` qubits
    h = rep(length).h
    data = CssCode(f2.zeros(0, length), h)
    d1 = h.copy()           # path edges as ancilla qubits
    d0 = f2.zeros(0, d1.shape[0])
    g1 = f2.identity(length)
    g0 = f2.zeros(h.shape[0], d1.shape[0])
    for i in range(h.shape[0]):
        g0[i, i] = 1
    diag = SurgeryDiagram(data, d1, d0, g1, g0)
    return measured_space(diag).ier
