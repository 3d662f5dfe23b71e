"""Command-line interface: build codes, construct surgery ancillas, verify and report.

Exit codes: 0 success (or certified construction), 1 verification failure or
uncertified result, 2 bad input.

Seeds: one root seed per run.  Random targets are drawn from
``default_rng(seed)``; the construction splits ``SeedSequence(seed)`` into
three child streams (initialization, growth, final distance probe).
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import fields
from pathlib import Path
from typing import Any, Sequence

import numpy as np
import tomli
from scipy.linalg import block_diag

from . import __version__
from . import f2core as f2
from .analysis import compare_schemes, overhead_from_sizes, sweep, to_csv, to_json
from .codes import (CodeError, degree_profile, dumps, estimate_distance, from_alist,
                    load_code, matrix_from_json, save_code)
from .constructions import (ClassicalCode, ScHgpSpec, all_ones, bivariate_bicycle, hamming,
                            hgp, load_config, random_regular, rep, rep_cyclic, sc_hgp)
from .randomized import ConstructionError, GrowthConfig, LayeredAncilla, construct, random_targets
from .surgery import (diagram_from_json, diagram_to_json, hgp_ancilla_for_hgp_data,
                      homomorphism_from, measured_space, merge, merged_to_json, verify_diagram)


class InputError(Exception):
    pass


# ---------------------------------------------------------------- helpers

def classical_from_name(name: str) -> ClassicalCode:
    """hamming3, rep5, rep5c, ones3x6, reg3x6n24s0; suffix T transposes; or a .alist/.json path."""
    p = Path(name)
    if p.exists():
        text = p.read_text(encoding="utf-8")
        h = from_alist(text) if p.suffix == ".alist" else matrix_from_json(json.loads(text))
        return ClassicalCode(h, name=p.stem)
    transpose = name.endswith("T")
    base = name[:-1] if transpose else name
    try:
        if base.startswith("hamming"):
            c = hamming(int(base[7:] or 3))
        elif base.startswith("rep") and base.endswith("c"):
            c = rep_cyclic(int(base[3:-1]))
        elif base.startswith("rep"):
            c = rep(int(base[3:]))
        elif base.startswith("ones"):
            r, n = base[4:].split("x")
            c = all_ones(int(r), int(n))
        elif base.startswith("reg"):
            cw, rest = base[3:].split("x")
            rw, rest = rest.split("n")
            n, s = rest.split("s")
            c = random_regular(int(n), int(cw), int(rw), seed=int(s))
        else:
            raise InputError(f"unknown classical code {name!r}")
    except ValueError as exc:
        raise InputError(f"cannot parse classical code {name!r}: {exc}") from exc
    return c.transpose() if transpose else c


def read_toml(path: str | None, section: str) -> dict[str, Any]:
    if not path:
        return {}
    try:
        with open(path, "rb") as fh:
            cfg = tomli.load(fh)
    except (OSError, tomli.TOMLDecodeError) as exc:
        raise InputError(f"cannot read config {path}: {exc}") from exc
    return dict(cfg.get(section, cfg))


def _load_json(path: str) -> dict[str, Any]:
    try:
        return json.loads(Path(path).read_text(encoding="utf-8"))
    except (OSError, json.JSONDecodeError) as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc


def _load_code(path: str):
    try:
        return load_code(path)
    except (OSError, json.JSONDecodeError, KeyError, CodeError, ValueError) as exc:
        raise InputError(f"cannot load code {path}: {exc}") from exc


def _summary(code) -> str:
    p = degree_profile(code)
    return (f"{code.name or 'code'}: n={code.n} k={code.k} "
            f"degree={p.max_qubit_degree} wx={p.max_check_weight_x} wz={p.max_check_weight_z}")


# ---------------------------------------------------------------- build

def cmd_build(args) -> int:
    fam = args.family
    if fam == "hgp":
        code = hgp(classical_from_name(args.b), classical_from_name(args.d),
                   name=args.name or f"hgp_{args.b}_{args.d}")
    elif fam == "bb":
        cfg = load_config(args.config)
        code = bivariate_bicycle(cfg["l"], cfg["m"], cfg["a"], cfg["b"], name=cfg.get("name", "bb"))
    elif fam == "sc":
        if args.base == "ones":
            base = all_ones(args.rc, args.nc).h
        elif args.base == "regular":
            cw = args.row_weight * args.rc // args.nc
            base = random_regular(args.nc, cw, args.row_weight, seed=args.base_seed).h
        else:
            base = classical_from_name(args.base).h
        code = sc_hgp(ScHgpSpec(base, args.L, args.width, args.seed), name=args.name or "")
    else:  # pragma: no cover - argparse restricts choices
        raise InputError(fam)
    if args.distance_trials:
        d, _ = estimate_distance(code, "X", n_trials=args.distance_trials, seed=args.seed, jobs=args.jobs)
        code.meta["d_x_upper"] = d if d != float("inf") else "inf"
    out = Path(args.out)
    out.parent.mkdir(parents=True, exist_ok=True)
    save_code(code, out)
    print(_summary(code))
    return 0


# ---------------------------------------------------------------- surger

def _growth_config(args, extra: dict[str, Any]) -> GrowthConfig:
    names = {f.name for f in fields(GrowthConfig)}
    unknown = set(extra) - names
    if unknown:
        raise InputError(f"unknown config keys: {sorted(unknown)}")
    kw = dict(extra)
    for key in ("degree_limit", "target_d", "n_trials", "max_layers", "time_budget"):
        val = getattr(args, key, None)
        if val is not None:
            kw[key] = val
    if args.strict is not None:
        kw["strict_layers"] = args.strict == "on"
    return GrowthConfig(**kw)


def parse_targets(code, spec: str, seed: int) -> np.ndarray:
    """random:T (random basis, T logicals) or rows:i,j,... of the code's X-logical basis."""
    kind, _, val = spec.partition(":")
    if kind == "random":
        t = int(val)
        if not 0 <= t <= code.k:
            raise InputError(f"cannot pick {t} of {code.k} logicals")
        return random_targets(code, t, np.random.default_rng(seed))
    if kind == "rows":
        idx = [int(x) for x in val.split(",") if x.strip()]
        if any(i < 0 or i >= code.k for i in idx):
            raise InputError("target row out of range")
        return code.lx[idx].copy()
    raise InputError(f"bad target spec {spec!r}")


def cmd_surger(args) -> int:
    code = _load_code(args.code)
    out = Path(args.out_dir)
    out.mkdir(parents=True, exist_ok=True)
    t0 = time.perf_counter()
    if args.mode == "hom":
        diag = _hom_diagram(code, args)
        merged = merge(diag)
        ms = measured_space(diag)
        report = {"seed": args.seed, "mode": "hom", "final": {
            "ancilla_size": diag.ancilla_size, "measured_logical_dim": int(ms.coefficients.shape[0]),
            "ier": ms.ier}}
        certified = True
        targets = ms.m_logical
    else:
        extra = read_toml(args.config, "surger")
        cfg = _growth_config(args, extra)
        targets = parse_targets(code, args.targets, args.seed)
        resume = None
        if args.resume:
            resume = LayeredAncilla.from_json(code, _load_json(args.resume))
        try:
            res = construct(code, targets, cfg, seed=args.seed, resume=resume,
                            checkpoint=out / "ancilla.json",
                            log=(lambda e: print(_step_line(e))) if args.verbose else None,
                            jobs=args.jobs)
        except ConstructionError as exc:
            print(f"construction failed: {exc}", file=sys.stderr)
            return 1
        diag, merged, report, certified = res.ancilla.flatten(), res.merged, res.report, res.certified
        (out / "ancilla.json").write_text(dumps(res.ancilla.to_json()), encoding="utf-8")
    report["targets"] = f2.to_supports(targets)
    report["version"] = __version__
    (out / "diagram.json").write_text(dumps(diagram_to_json(diag)), encoding="utf-8")
    (out / "merged.json").write_text(dumps(merged_to_json(merged)), encoding="utf-8")
    (out / "report.json").write_text(dumps(report), encoding="utf-8")
    (out / "report.time.json").write_text(
        dumps({"wall_time_s": round(time.perf_counter() - t0, 3)}), encoding="utf-8")
    fin = report["final"]
    print(f"|A|={fin['ancilla_size']} measured={fin.get('measured_logical_dim')} "
          f"certified={certified}")
    return 0 if certified else 1


def _step_line(e: dict[str, Any]) -> str:
    return (f"step {e['step']}: layers={e['layers']} |A|={e['ancilla_size']} "
            f"light={e['light_classes']} min_weight={e['min_weight']}")


def _hom_diagram(code, args):
    fac = code.meta.get("hgp_factors")
    if fac is None:
        raise InputError("hom mode needs a code built with 'build hgp'")
    b = ClassicalCode(matrix_from_json(fac["b"]))
    n_cols = args.columns
    d_code = ClassicalCode(block_diag(*[rep(args.rep_length).h] * n_cols).astype(np.uint8))
    homs = [homomorphism_from(b, "identity") for _ in range(n_cols)]
    try:
        return hgp_ancilla_for_hgp_data(code, homs, d_code)
    except ValueError as exc:
        raise InputError(str(exc)) from exc


# ---------------------------------------------------------------- verify

def cmd_verify(args) -> int:
    obj = _load_json(args.diagram)
    try:
        diag = diagram_from_json(obj)
    except (KeyError, TypeError, ValueError, CodeError) as exc:
        print(f"malformed diagram: {exc!r}", file=sys.stderr)
        return 2
    errs = verify_diagram(diag)
    if errs:
        for e in errs:
            print(e)
        return 1
    ms = measured_space(diag)
    print(f"ok: |A|={diag.ancilla_size} measured_dim={ms.dim} "
          f"measured_logicals={ms.coefficients.shape[0]} ier={ms.ier:.6f}")
    return 0


# ---------------------------------------------------------------- report

def cmd_report(args) -> int:
    if args.diagram:
        try:
            diag = diagram_from_json(_load_json(args.diagram))
        except (KeyError, TypeError, ValueError, CodeError) as exc:
            raise InputError(f"malformed diagram: {exc!r}") from exc
        n, k = diag.data.n, diag.data.k
        d = args.d if args.d is not None else 0
        size = diag.ancilla_size
        t = args.t if args.t is not None else int(measured_space(diag).coefficients.shape[0])
        rows = compare_schemes((n, k, d), t, args.degree, size)
    else:
        if not args.code_params:
            raise InputError("give --diagram or --code-params n,k,d")
        n, k, d = (int(x) for x in args.code_params.split(","))
        ts = range(1, k + 1) if args.sweep else [args.t if args.t is not None else 1]
        rows = sweep((n, k, d), ts, args.degree)
    if args.cycles != 1:
        rows = [overhead_from_sizes(r.n, r.k, r.d, r.t, r.space_physical - r.n,
                                    r.time_logical_cycles * args.cycles, r.scheme) for r in rows]
    csv_text = to_csv(rows)
    if args.csv:
        Path(args.csv).write_text(csv_text, encoding="utf-8")
    if args.json:
        Path(args.json).write_text(to_json(rows), encoding="utf-8")
    sys.stdout.write(csv_text)
    return 0


# ---------------------------------------------------------------- main

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="hrsurgery", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=__version__)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--jobs", type=int, default=1)
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp):
        # accepted after the subcommand too; only overrides when given
        sp.add_argument("--seed", type=int, default=argparse.SUPPRESS)
        sp.add_argument("--jobs", type=int, default=argparse.SUPPRESS)

    b = sub.add_parser("build", help="write a code file")
    b.add_argument("family", choices=["hgp", "bb", "sc"])
    b.add_argument("--b", default="hamming3")
    b.add_argument("--d", default="hamming3T")
    b.add_argument("--config", default="gross.json")
    b.add_argument("--rc", type=int, default=3)
    b.add_argument("--nc", type=int, default=6)
    b.add_argument("--L", type=int, default=5)
    b.add_argument("--width", type=int, default=1)
    b.add_argument("--base", default="ones", help="ones, regular, or a classical code name")
    b.add_argument("--base-seed", type=int, default=0)
    b.add_argument("--row-weight", type=int, default=4, help="row weight of a regular base")
    b.add_argument("--name", default="")
    b.add_argument("--distance-trials", type=int, default=0)
    b.add_argument("--out", required=True)
    common(b)
    b.set_defaults(func=cmd_build)

    s = sub.add_parser("surger", help="construct a measurement ancilla")
    s.add_argument("code")
    s.add_argument("--mode", choices=["randomized", "hom"], default="randomized")
    s.add_argument("--targets", default="random:3")
    s.add_argument("--config", help="TOML file; keys of [surger] mirror GrowthConfig")
    s.add_argument("--degree-limit", dest="degree_limit", type=int)
    s.add_argument("--target-d", dest="target_d", type=int)
    s.add_argument("--n-trials", dest="n_trials", type=int)
    s.add_argument("--max-layers", dest="max_layers", type=int)
    s.add_argument("--time-budget", dest="time_budget", type=float)
    s.add_argument("--strict", choices=["on", "off"])
    s.add_argument("--columns", type=int, default=1, help="hom mode: logical columns measured")
    s.add_argument("--rep-length", type=int, default=3, help="hom mode: repetition length per column")
    s.add_argument("--resume", help="checkpoint file from an earlier run")
    s.add_argument("--out-dir", required=True)
    s.add_argument("--verbose", action="store_true")
    common(s)
    s.set_defaults(func=cmd_surger)

    v = sub.add_parser("verify", help="check a diagram file")
    v.add_argument("diagram")
    common(v)
    v.set_defaults(func=cmd_verify)

    r = sub.add_parser("report", help="overhead table")
    r.add_argument("--diagram")
    r.add_argument("--code-params", help="n,k,d")
    r.add_argument("--d", type=int)
    r.add_argument("--t", type=int)
    r.add_argument("--cycles", type=int, default=1)
    r.add_argument("--degree", type=int, default=6)
    r.add_argument("--sweep", action="store_true", help="t = 1..k")
    r.add_argument("--csv")
    r.add_argument("--json")
    common(r)
    r.set_defaults(func=cmd_report)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    try:
        return int(args.func(args))
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
