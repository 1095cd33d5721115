"""CLI behaviour: JSON reports, determinism, exit codes."""

import json

from expalg import cli


def run_cli(capsys, argv):
    code = cli.main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_canon_poly_and_epoly(capsys):
    code, out, _ = run_cli(capsys, ["canon", "2*x1 - u1 + 1"])
    assert code == 0
    report = json.loads(out)
    assert report["schemaVersion"] == 1
    assert report["result"] == {"canonical": "2*x1 - u1 + 1", "kind": "poly"}

    code, out, _ = run_cli(capsys, ["canon", "2*x1 + 1 - exp(x1)"])
    assert json.loads(out)["result"]["canonical"] == "(2*x1 + 1) + (-1)*exp(x1)"


def test_classify_report_shape(capsys):
    code, out, err = run_cli(capsys, ["classify", "x1*u2 + x2*u1 - x1 - x2"])
    assert code == 0
    report = json.loads(out)
    result = report["result"]
    assert result["verdict"] == "HyperplaneComponents"
    assert [h["equation"] for h in result["hyperplanes"]] == ["x2 = 0", "x1 = 0"]
    assert [h["equation"] for h in result["rejected"]] == ["x1 - x2 = 0"]
    assert result["conditionality"] == "ConditionalOnSchanuel"
    assert report["hypothesisLog"]
    assert report["timings"] is None
    assert "HyperplaneComponents" in err


def test_reports_are_byte_identical(capsys):
    argv = ["classify", "x1*u2 + x2*u1 - x1 - x2", "--seed", "0"]
    _, first, _ = run_cli(capsys, argv)
    _, second, _ = run_cli(capsys, argv)
    assert first == second

    argv = ["roots", "2*x1 + 1 - exp(x1)", "--domain", "-5", "5"]
    _, first, _ = run_cli(capsys, argv)
    _, second, _ = run_cli(capsys, argv)
    assert first == second


def test_roots_report(capsys):
    code, out, _ = run_cli(capsys, ["roots", "2*x1 + 1 - exp(x1)", "--domain", "-5", "5"])
    assert code == 0
    result = json.loads(out)["result"]
    assert result["count"] == 2
    kinds = {c["kind"] for c in result["certified"]}
    assert kinds == {"NewtonContraction", "SignChange"}


def test_sample2d_report(capsys):
    code, out, _ = run_cli(
        capsys,
        ["sample2d", "exp(x1)*exp(x2)", "--box", "0", "1", "0", "1", "--depth", "3"],
    )
    assert code == 0
    result = json.loads(out)["result"]
    assert result["count"] == 0 and result["cells"] == []


def test_transversal_default_and_zero_root(capsys):
    code, out, _ = run_cli(capsys, ["transversal", "2*x1 - u1 + 1"])
    assert code == 0
    checks = json.loads(out)["result"]["checks"]
    assert len(checks) == 1 and checks[0]["verdict"] == "Transverse"
    assert checks[0]["tangencyMargin"] > 1e-6

    code, _, err = run_cli(capsys, ["transversal", "2*x1 - u1 + 1", "--root-index", "0"])
    assert code == 2
    assert "hypothesis violation" in err


def test_transversal_with_lifted_coordinates(capsys):
    code, out, _ = run_cli(
        capsys,
        [
            "transversal",
            "2*x1 - u1 + 1",
            "--ambient",
            "2",
            "--coords",
            "0",
            "--root-of",
            "2*x1 + 1 - exp(x1)",
        ],
    )
    assert code == 0
    checks = json.loads(out)["result"]["checks"]
    assert checks[0]["verdict"] == "Transverse"


def test_parse_error_exit_code(capsys):
    code, out, err = run_cli(capsys, ["canon", "x1 +"])
    assert code == 1 and out == "" and "input error" in err


def test_wrong_driver_exit_code(capsys):
    code, _, err = run_cli(capsys, ["roots", "x1*exp(x2)"])
    assert code == 2 and "hypothesis violation" in err


def test_output_file(tmp_path, capsys):
    target = tmp_path / "report.json"
    code, out, _ = run_cli(
        capsys, ["hyperplanes", "x1*u2 + x2*u1 - x1 - x2", "--output", str(target)]
    )
    assert code == 0
    assert target.read_text() == out
    payload = json.loads(target.read_text())
    assert payload["result"]["count"] == 3


def test_timings_flag_adds_measurements(capsys):
    _, out, _ = run_cli(capsys, ["canon", "x1", "--timings"])
    report = json.loads(out)
    assert report["timings"] is not None and report["timings"]["totalMs"] >= 0.0
