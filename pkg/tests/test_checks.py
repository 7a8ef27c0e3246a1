"""Registry hygiene, runner semantics, rendering, and the CLI contract."""
import json
import subprocess
import sys

import pytest

from sasakispin.checks import (
    CLAIM_FAMILIES,
    COMPACT_GRID,
    DEFAULT_GRID,
    REGISTRY,
    ReportEntry,
    coverage,
    coverage_gaps,
    has_failures,
    render_json,
    render_text,
    run_suite,
)
from sasakispin.scalars import SQRT2, Scalar


# -- registry hygiene ------------------------------------------------------


def test_check_ids_unique_and_sorted():
    ids = [spec.check_id for spec in REGISTRY]
    assert ids == sorted(ids)
    assert len(ids) == len(set(ids))


def test_every_family_is_covered():
    assert coverage_gaps() == []


def test_every_check_covers_known_families():
    for spec in REGISTRY:
        assert spec.covers, f"{spec.check_id} covers nothing"
        assert set(spec.covers) <= set(CLAIM_FAMILIES)


def test_coverage_maps_back_to_registry():
    cov = coverage()
    assert set(cov) == set(CLAIM_FAMILIES)
    listed = {check_id for ids in cov.values() for check_id in ids}
    assert listed == {spec.check_id for spec in REGISTRY}


def test_grids_have_expected_shape():
    assert len(DEFAULT_GRID) == 35
    compact = [(a, d) for a, d in COMPACT_GRID]
    assert len(compact) == 25
    assert len(set(compact)) == 25
    for a, d in compact:
        assert (a * d).rational_value() > 0


# -- runner semantics ------------------------------------------------------


def test_unknown_filter_raises():
    with pytest.raises(ValueError, match="no check matches"):
        run_suite("definitely.not-registered")


def test_unsupported_dimension_raises():
    with pytest.raises(ValueError, match="unsupported dimension"):
        run_suite("clifford.*", dims=[9])


def test_malformed_rational_raises():
    with pytest.raises((ValueError, ZeroDivisionError)):
        run_suite("model.calibration", grid=[("nonsense", "1")])


def test_irrational_grid_value_raises():
    with pytest.raises(ValueError, match="rational"):
        run_suite("model.calibration", grid=[(SQRT2, Scalar(1))])


def test_delta_zero_skips_model_checks():
    entries = run_suite("model.calibration", grid=[(1, 0)], dims=[7])
    assert [e.status for e in entries] == ["skip"]
    assert entries[0].reason == "delta = 0 excluded"


def test_non_square_product_skips_deformation():
    entries = run_suite("model.deformation", grid=[(2, 3)], dims=[7])
    assert [e.status for e in entries] == ["skip"]
    assert entries[0].reason == "alpha*delta not a square in Q(sqrt2)"


def test_sqrt2_square_product_is_admitted():
    entries = run_suite("model.deformation", grid=[(1, 2)], dims=[7])
    assert [e.status for e in entries] == ["pass"]


def test_unsupported_dim_becomes_skip_entry():
    entries = run_suite("model.calibration", grid=[(1, 1)], dims=[7, 11])
    by_status = {e.status for e in entries}
    assert by_status == {"pass", "skip"}
    skip = next(e for e in entries if e.status == "skip")
    assert skip.parameters == {"dim": 11}
    assert skip.reason == "dimension not supported"


def test_entries_ordered_by_check_id():
    entries = run_suite("clifford.*", dims=[7])
    ids = [e.check_id for e in entries]
    assert ids == sorted(ids)


def test_failure_carries_witness():
    entries = [ReportEntry("demo.check", {"dim": 7}, "fail",
                           witness="left != right at e_3")]
    assert has_failures(entries)
    text = render_text(entries)
    assert "witness: left != right at e_3" in text
    payload = json.loads(render_json(entries))
    assert payload[0]["witness"] == "left != right at e_3"


# -- rendering -------------------------------------------------------------


def test_json_report_is_deterministic():
    first = run_suite("model.h-killing", grid=[(1, 1), (1, 2)], dims=[7])
    second = run_suite("model.h-killing", grid=[(1, 1), (1, 2)], dims=[7])
    assert render_json(first) == render_json(second)


def test_json_schema_and_shape():
    entries = run_suite("clifford.frame-relations", dims=[7])
    payload = json.loads(render_json(entries))
    assert isinstance(payload, list)
    for item in payload:
        assert item["schema"] == "sasakispin.report/1"
        assert item["status"] in ("pass", "fail", "skip")
        assert "millis" not in item


def test_text_report_has_summary_line():
    entries = run_suite("clifford.frame-relations", dims=[7])
    text = render_text(entries)
    assert text.splitlines()[-1] == "1 entries: 1 passed, 0 skipped, 0 failed"


# -- command line ----------------------------------------------------------


def _cli(*args):
    return subprocess.run(
        [sys.executable, "-m", "sasakispin", *args],
        capture_output=True, text=True)


def test_cli_verify_passes():
    proc = _cli("verify", "--filter", "clifford.frame-relations",
                "--dims", "7")
    assert proc.returncode == 0
    assert "PASS clifford.frame-relations" in proc.stdout


def test_cli_json_format(tmp_path):
    out = tmp_path / "report.json"
    proc = _cli("verify", "--filter", "model.calibration",
                "--alpha", "1", "--delta", "1", "--dims", "7",
                "--format", "json", "--out", str(out))
    assert proc.returncode == 0
    payload = json.loads(out.read_text())
    assert payload[0]["check_id"] == "model.calibration"
    assert payload[0]["parameters"] == {"alpha": "1", "delta": "1", "dim": 7}
    assert "wrote 1 entries" in proc.stdout


def test_cli_rejects_malformed_rational():
    assert _cli("verify", "--alpha", "abc").returncode == 2
    assert _cli("verify", "--alpha", "1/0").returncode == 2


def test_cli_rejects_unknown_filter():
    assert _cli("verify", "--filter", "no.such-check").returncode == 2


def test_cli_rejects_bad_dimension():
    assert _cli("verify", "--dims", "9").returncode == 2


def test_cli_list_checks_names_every_check():
    proc = _cli("list-checks")
    assert proc.returncode == 0
    for spec in REGISTRY:
        assert spec.check_id in proc.stdout
