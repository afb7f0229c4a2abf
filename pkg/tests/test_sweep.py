import pytest

from fuzzyprod.analytic import Status
from fuzzyprod.fuzzy import DomainError, Side
from fuzzyprod.sweep import (
    SWEEP_ALPHAS,
    alpha_sweep,
    discrepancy_report,
    reference_values,
    reproduce_tables,
)


@pytest.fixture(scope="module")
def bundle():
    from fuzzyprod.model import DEFAULT_PARAMS
    return reproduce_tables(DEFAULT_PARAMS)


def test_sweep_rows_sorted_and_consistent(params):
    result = alpha_sweep(params, [0.9, 0.1, 0.5], "right")
    assert [r.alpha for r in result.rows] == [0.1, 0.5, 0.9]
    for r in result.rows:
        assert r.profit_quadrature == pytest.approx(r.profit_corrected, rel=1e-9)


def test_sweep_reference_points(params):
    right = alpha_sweep(params, [0.4], Side.RIGHT).row(0.4)
    left = alpha_sweep(params, [0.9], Side.LEFT).row(0.9)
    assert abs(right.profit_printed - 305109.50) / 305109.50 < 0.05
    assert abs(left.profit_printed - 237761.74) / 237761.74 < 0.05
    assert right.t_end == pytest.approx(13.2) and left.t_end == pytest.approx(11.8)


def test_sweep_crisp_rows_coincide(params):
    left = alpha_sweep(params, [1.0], "left").rows[0]
    right = alpha_sweep(params, [1.0], "right").rows[0]
    assert left == right


def test_sweep_records_bad_alphas(params):
    prm = params.replace(sigma=15.0)  # left horizon 12 - 15 (1 - a) <= 0 for a <= 0.2
    result = alpha_sweep(prm, [0.1, 0.2, 0.5, 0.0, 1.2], "left")
    assert [r.alpha for r in result.rows] == [0.5]
    assert sorted(a for a, _ in result.failures) == [0.0, 0.1, 0.2, 1.2]


def test_sweep_rejects_crisp(params):
    with pytest.raises(DomainError):
        alpha_sweep(params, [0.5], "crisp")


def test_sweep_monotonic(params):
    right = [r.profit_printed for r in alpha_sweep(params, SWEEP_ALPHAS, "right").rows]
    left = [r.profit_printed for r in alpha_sweep(params, SWEEP_ALPHAS, "left").rows]
    assert all(a > b for a, b in zip(right, right[1:]))
    assert all(a < b for a, b in zip(left, left[1:]))


def test_bundle_contents(bundle):
    traj = bundle.trajectory("right", 0.4)
    ref = reference_values()["trajectories"]["right"]["0.4"]
    for t in range(13):
        row = traj.row_at(t)
        assert row.u == pytest.approx(ref["u"][t], abs=0.01)
        assert row.x == pytest.approx(ref["x"][t], abs=0.01)
    assert bundle.trajectory("left", 0.8).row_at(0).u == pytest.approx(98.02, abs=0.01)
    assert bundle.trajectory("left", 1.0).rows == bundle.trajectory("right", 1.0).rows
    assert bundle.crisp.rows == bundle.trajectory("left", 1.0).rows
    assert set(bundle.sweeps) == {Side.LEFT, Side.RIGHT}
    stems = [stem for stem, _ in bundle.files()]
    assert len(stems) == len(set(stems)) == 11


def test_bundle_left_cut_infeasible_cells(bundle):
    ref = reference_values()["trajectories"]["left"]["0.4"]
    traj = bundle.trajectory("left", 0.4)
    for t, u in enumerate(ref["u"]):
        if u is None:
            assert traj.row_at(t).status is Status.OUT_OF_HORIZON


def test_discrepancy_report(params):
    report = discrepancy_report(params)
    assert len(report.entries) == 21
    crisp = report.entry("headline crisp alpha=1")
    assert crisp.paper == 247007.20
    assert crisp.printed_rel_delta < 0.02
    assert crisp.corrected_rel_delta > crisp.printed_rel_delta
    assert report.entry("left alpha=0.4").paper == 193834.21
    assert report.entry("left alpha=0.4").printed_rel_delta <= 0.01
    assert report.entry("headline left alpha=0.4").paper == 193834.20
    assert report.entry("right alpha=0.1").paper == 335460.30
    for e in report.entries:
        assert e.printed_rel_delta == pytest.approx(abs(e.printed - e.paper) / abs(e.paper))
    assert report.worst_printed_delta < 0.05


def test_published_trajectory_cells(params):
    # Three published stock cells disagree with their own row and column
    # neighbours; every other published cell matches to two decimals.
    from fuzzyprod.analytic import trajectory_table
    from fuzzyprod.fuzzy import resolve_cut

    ref = reference_values()
    off = set()
    checked = 0
    for side, by_alpha in ref["trajectories"].items():
        for alpha, cols in by_alpha.items():
            traj = trajectory_table(params, resolve_cut(params.T, params.sigma, float(alpha), side))
            for t in ref["trajectory_times"]:
                for name in ("u", "x", "d"):
                    published = cols[name][t]
                    if published is None:
                        continue
                    checked += 1
                    if abs(getattr(traj.row_at(t), name) - published) > 0.01:
                        off.add((side, alpha, t, name))
    assert checked == 222
    assert off == {("left", "0.4", 9, "x"), ("right", "0.6", 1, "x"), ("left", "0.8", 11, "x")}
