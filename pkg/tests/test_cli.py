"""
Tests for the command line interface and report rendering
"""

import io
import json

import pandas as pd
import pytest

from dihedral_kring.cli import EXIT_DEFECT, EXIT_OK, EXIT_USAGE, RunConfig, main
from dihedral_kring.reports import (
    Status,
    identities_report,
    parse_json,
    poly_report,
    render_json,
    render_text,
    verify_report,
)


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out.strip(), captured.err


# =============================================================================
# POLY / TABLE / RESTRICT
# =============================================================================

@pytest.mark.parametrize(
    "kind, index, expected",
    [
        ("psi", "2", "0 4 1"),
        ("cheb", "3", "0 9 6 1"),
        ("fmin", "3", "3 1"),
        ("fmin", "5", "5 5 1"),
        ("fmin", "7", "7 14 7 1"),
        ("g", "2", "0 8 6 1"),
    ],
)
def test_poly_text(capsys, kind, index, expected):
    code, out, _ = run(capsys, "poly", kind, index)
    assert code == EXIT_OK
    assert out == expected


def test_poly_json(capsys):
    code, out, _ = run(capsys, "poly", "psi", "2", "--json")
    assert code == EXIT_OK
    doc = json.loads(out)
    assert doc["schema_version"] == 1
    assert doc["command"] == "poly"
    assert doc["results"][0]["coeffs"] == [0, 4, 1]


def test_poly_bad_index(capsys):
    code, _, err = run(capsys, "poly", "fmin", "4")
    assert code == EXIT_USAGE
    assert "error" in err


def test_table_cohomology(capsys):
    code, out, _ = run(capsys, "table", "cohomology", "--n", "3", "--pmax", "4")
    assert code == EXIT_OK
    assert out.splitlines() == ["0 ↦ Z", "1 ↦ 0", "2 ↦ Z_2", "3 ↦ 0", "4 ↦ Z_3⊕Z_2"]


@pytest.mark.parametrize(
    "argv, expected",
    [
        (["--n", "4", "--elem", "phi"], "0 4 3 1"),
        (["--n", "4", "--elem", "v2"], "0 2 1 0"),
        (["--n", "4", "--elem", "v3"], "0"),
        (["--n", "5", "--elem", "v"], "0"),
        (["--n", "4", "--elem", "v2", "--target", "z2s"], "0 1"),
        (["--n", "4", "--elem", "v2", "--target", "z2s", "--swap-eta"], "0"),
    ],
)
def test_restrict(capsys, argv, expected):
    code, out, _ = run(capsys, "restrict", *argv)
    assert code == EXIT_OK
    assert out == expected


def test_restrict_unknown_element(capsys):
    code, _, _ = run(capsys, "restrict", "--n", "5", "--elem", "v3")
    assert code == EXIT_USAGE


# =============================================================================
# VERIFY
# =============================================================================

def test_verify_passes(capsys):
    code, out, _ = run(capsys, "verify", "9")
    assert code == EXIT_OK
    assert "relation 3" in out
    assert "defect" not in out


def test_verify_odd_sweep(capsys):
    code, _, _ = run(capsys, "verify", "--from", "3", "--to", "25", "--odd")
    assert code == EXIT_OK


def test_verify_reports_defect(capsys):
    code, out, _ = run(capsys, "verify", "12", "--json")
    assert code == EXIT_DEFECT
    report = parse_json(out)
    failing = [r for r in report.results if r.status is Status.DEFECT]
    assert [r.item for r in failing] == ["relation 5", "relation 5 [swapped eta]"]
    assert failing[0].detail.startswith("defect -2*v3")
    assert failing[0].basis == ["1", "eta1", "eta2", "eta3", "rho1", "rho2", "rho3", "rho4", "rho5"]
    assert sum(failing[0].defect) == 0
    assert any(r.item == "swapped eta labeling" for r in report.results)


def test_verify_even_sweep_finds_defects(capsys):
    code, _, _ = run(capsys, "verify", "--from", "4", "--to", "10", "--even")
    assert code == EXIT_DEFECT


@pytest.mark.parametrize(
    "argv",
    [
        ["verify", "2"],
        ["table", "cohomology", "--n", "2"],
        ["verify"],
        ["verify", "5", "--from", "3", "--to", "9"],
        ["verify", "--from", "9", "--to", "3"],
        ["verify", "5", "--jobs", "0"],
        ["audit", "--n", "5", "--depth", "0"],
        ["audit", "--n", "4", "--depth", "16"],
    ],
)
def test_usage_errors(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == EXIT_USAGE
    assert err


def test_argparse_errors_exit_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["poly", "bessel", "2"])
    assert exc.value.code == EXIT_USAGE
    with pytest.raises(SystemExit) as exc:
        main([])
    assert exc.value.code == EXIT_USAGE


def test_output_independent_of_jobs():
    serial = verify_report([3, 4, 5, 6], jobs=1)
    parallel = verify_report([3, 4, 5, 6], jobs=2)
    assert serial == parallel


# =============================================================================
# AUDIT / IDENTITIES / ORACLE
# =============================================================================

def test_audit_text(capsys):
    code, out, _ = run(capsys, "audit", "--n", "4", "--depth", "3")
    assert code == EXIT_OK
    assert "degree 6" in out
    assert "|gr|=8" in out


def test_audit_total_grading_mismatch(capsys):
    code, out, _ = run(capsys, "audit", "--n", "3", "--depth", "1", "--grading", "total", "--json")
    assert code == EXIT_DEFECT
    assert parse_json(out).results[0].status is Status.MISMATCH


def test_identities_small(capsys):
    code, out, _ = run(capsys, "identities", "--n-max", "31", "--i-max", "20", "--ab-max", "4", "--json")
    assert code == EXIT_OK
    report = parse_json(out)
    assert len(report.results) == 6
    assert all(r.status is Status.OK for r in report.results)


def test_oracle_small(capsys):
    code, out, _ = run(capsys, "oracle", "--from", "3", "--to", "6", "--samples", "5", "--csv")
    assert code == EXIT_OK
    frame = pd.read_csv(io.StringIO(out))
    assert set(frame["status"]) == {"ok"}
    assert sorted(set(frame["n"])) == [3, 4, 5, 6]


# =============================================================================
# RENDERING
# =============================================================================

def test_json_round_trip():
    report = verify_report([6])
    assert parse_json(report.model_dump_json()) == report
    assert render_text(parse_json(render_json(report))) == render_text(report)


def test_poly_text_is_bare_coefficients():
    text = render_text(poly_report("psi", 3))
    assert text == "0 9 6 1"


def test_run_config_validation():
    assert RunConfig(subcommand="verify", ns=[3, 4]).jobs == 1
    with pytest.raises(ValueError):
        RunConfig(subcommand="verify", ns=[2])
    with pytest.raises(ValueError):
        RunConfig(subcommand="audit", depth=0)


def test_text_table_drops_empty_n_column():
    text = render_text(identities_report(9, 4, 2))
    header = text.splitlines()[0].split()
    assert header == ["item", "status", "detail"]
