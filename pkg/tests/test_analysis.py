import csv
import io
import json

import numpy as np
import pytest

from diagrams import path_diagram, small_data_codes
from hrsurgery.analysis import (CSV_COLUMNS, alpha, compare_schemes, memory_report, overhead,
                                overhead_from_sizes, path_ancilla_ier, patch_size, sweep, to_csv, to_json)
from hrsurgery.surgery import measured_space, merge

GROSS = (144, 12, 12)
SC_TABLE = [(136, 34, 4), (405, 101, 6), (720, 164, 8), (1125, 245, 10)]


def test_memory_ratio_is_one():
    r = memory_report(144, 12, 12)
    assert r.alpha == 12.0 and r.ratio_to_memory == 1.0


def test_alpha_formula_and_guard():
    assert alpha(100, 3, 4, 1) == 60.0
    with pytest.raises(ValueError):
        alpha(1, 1, 0, 0)


def test_single_measurement_low_rate_schemes_coincide():
    rows = {r.scheme: r for r in compare_schemes(GROSS, 1)}
    assert rows["low_rate_sequential"].alpha == rows["low_rate_parallel"].alpha


def test_gross_table_values():
    # (n + patch) * cycles / (k + t) divided by n / k, patch = 8 d
    rows = {r.scheme: r for r in compare_schemes(GROSS, 3)}
    assert rows["low_rate_sequential"].ratio_to_memory == pytest.approx((144 + 96) * 3 / 15 / 12)
    assert rows["low_rate_parallel"].ratio_to_memory == pytest.approx((144 + 288) / 15 / 12)
    assert rows["high_rate"].ratio_to_memory == pytest.approx(288 / 15 / 12)


def test_sequential_time_grows_linearly_with_t():
    rows = [r for r in sweep(GROSS, range(1, 13)) if r.scheme == "low_rate_sequential"]
    assert [r.time_logical_cycles for r in rows] == list(range(1, 13))
    assert rows[-1].ratio_to_memory == pytest.approx(10.0)


def test_high_rate_dominates_at_t9():
    rows = {r.scheme: r for r in compare_schemes(GROSS, 9)}
    hr = rows["high_rate"].alpha
    assert hr < rows["low_rate_sequential"].alpha and hr < rows["low_rate_parallel"].alpha


@pytest.mark.parametrize("params", SC_TABLE)
def test_sc_family_high_rate_within_two(params):
    n, k, d = params
    rows = {r.scheme: r for r in compare_schemes(params, k // 4)}
    assert rows["high_rate"].ratio_to_memory < 2
    assert rows["low_rate_sequential"].ratio_to_memory > rows["high_rate"].ratio_to_memory


def test_low_rate_ratio_grows_with_d():
    seq = [next(r for r in compare_schemes(p, 8) if r.scheme == "low_rate_parallel").ratio_to_memory
           for p in [(1000, 200, d) for d in (4, 8, 16)]]
    assert seq == sorted(seq) and seq[0] < seq[-1]


def test_path_ancilla_ier_is_inverse_size():
    for length in (3, 5, 8):
        assert path_ancilla_ier(length) == pytest.approx(1 / (2 * length - 1))


@pytest.mark.parametrize("data", small_data_codes(), ids=lambda c: c.name)
def test_path_diagram_ier(data):
    d = path_diagram(data)
    ms = measured_space(d)
    assert ms.ier == pytest.approx(ms.dim / d.ancilla_size)


def test_overhead_from_merged():
    data = small_data_codes()[3]
    mc = merge(path_diagram(data))
    r = overhead(mc, 1, d=3)
    assert r.space_physical == data.n + mc.diagram.ancilla_size
    assert r.ratio_to_memory == pytest.approx(r.alpha / (data.n / data.k))


def test_csv_and_json_formats():
    rows = sweep(GROSS, [1, 2])
    text = to_csv(rows)
    rd = list(csv.DictReader(io.StringIO(text)))
    assert tuple(rd[0].keys()) == CSV_COLUMNS and len(rd) == 8
    js = json.loads(to_json(rows))
    assert js[0]["scheme"] == "memory"
    assert to_csv(rows) == to_csv(sweep(GROSS, [1, 2]))


def test_patch_size_model():
    assert patch_size(12) == 96 and patch_size(5, degree=4) == 30
    assert overhead_from_sizes(10, 2, 2, 0, 0, 1, "memory").ratio_to_memory == 1.0
