import io
import json

import pytest
from hypothesis import given, strategies as st

from fuzzyprod.analytic import profit_corrected, profit_printed, trajectory_table
from fuzzyprod.export import emit_csv, emit_json, format_csv, read_csv
from fuzzyprod.fuzzy import Side, resolve_cut
from fuzzyprod.sweep import SweepResult, SweepRow, alpha_sweep, discrepancy_report


def right_traj(params):
    return trajectory_table(params, resolve_cut(params.T, params.sigma, 0.4, "right"))


def test_empty_sweep_is_header_only():
    buf = io.BytesIO()
    n = emit_csv(SweepResult(Side.LEFT, ()), buf)
    assert buf.getvalue() == b"alpha,t_end,profit_printed,profit_corrected,profit_quadrature\n"
    assert n == len(buf.getvalue())


def test_trajectory_csv_layout(params):
    text = format_csv(right_traj(params))
    lines = text.split("\n")
    assert lines[0] == "t,u,x,d,status"
    assert text.endswith("\n") and "\r" not in text
    assert len(text.splitlines()) == 16  # header + t = 0..14
    assert lines[1] == "0,123.952,0,7,feasible"
    assert lines[-2] == "14,,,455,out_of_horizon"


def test_number_format_six_digits_minimum(params):
    row = format_csv(right_traj(params)).split("\n")[2].split(",")
    assert row[2] == "115.8186667"
    big = format_csv(discrepancy_report(params)).split("\n")[1].split(",")
    assert big[2] == "249928.932" and "e" not in big[2]


def test_text_sink(params):
    buf = io.StringIO()
    n = emit_csv(discrepancy_report(params), buf)
    assert n == len(buf.getvalue().encode("utf-8"))
    assert buf.getvalue().startswith("label,paper,printed,corrected,printed_rel_delta,corrected_rel_delta\n")


@pytest.mark.parametrize("full", [False, True])
def test_round_trip_is_byte_identical(params, full):
    for result in (right_traj(params), alpha_sweep(params, [0.1, 0.5], "left"),
                   discrepancy_report(params)):
        text = format_csv(result, full_precision=full)
        assert format_csv(read_csv(text), full_precision=full) == text


def test_full_precision_is_lossless(params):
    sweep = alpha_sweep(params, [0.1, 0.3, 0.7], "right")
    back = read_csv(format_csv(sweep, full_precision=True))
    assert back.rows == tuple(tuple(r) for r in sweep.rows)


@given(st.lists(st.floats(allow_nan=False, allow_infinity=False), min_size=5, max_size=5))
def test_full_precision_round_trip_floats(vals):
    result = SweepResult(Side.RIGHT, (SweepRow(*vals),))
    back = read_csv(format_csv(result, full_precision=True))
    assert back.rows[0] == tuple(vals)


def test_json_rows_keyed_by_header(params):
    buf = io.StringIO()
    emit_json(right_traj(params), buf)
    rows = json.loads(buf.getvalue())
    assert rows[0] == {"t": 0.0, "u": pytest.approx(123.952), "x": 0.0, "d": 7.0,
                       "status": "feasible"}
    assert rows[-1]["u"] is None and rows[-1]["status"] == "out_of_horizon"


def test_breakdown_table(params):
    cut = resolve_cut(12, 2, 1.0, "crisp")
    text = format_csv([profit_printed(params, cut), profit_corrected(params, cut)])
    lines = text.splitlines()
    assert lines[0] == "method,revenue,holding,production_linear,production_quadratic,development_setup,total"
    assert lines[1].startswith("printed,") and lines[2].startswith("corrected,")


def test_write_failure_propagates(params, tmp_path):
    sink = open(tmp_path / "f.csv", "w")
    sink.close()
    with pytest.raises(ValueError):
        emit_csv(right_traj(params), sink)


def test_read_csv_empty():
    with pytest.raises(ValueError):
        read_csv("")
