import io
import json

import pytest

from delsarte import cli, deformation

from golden_data import SUMMARY_TABLE


def run_cli(argv):
    out = io.StringIO()
    parser = cli.build_parser()
    args = parser.parse_args(argv)
    status = args.func(args, out)
    return status, out.getvalue()


def run_main(argv):
    """Full entry point including error handling; captures nothing."""
    return cli.main(argv)


def test_analyze_rows():
    for ref, want in [
        ("family2", "family2\t8\t(2,2,2,2)\t3\t12\t6"),
        ("family4", "family4\t28\t(7,7,7,7)\t3\t18\t0"),
        ("family5", "family5\t80\t(20,20,20,20)\t3\t16\t2"),
    ]:
        status, text = run_cli(["analyze", ref])
        assert status == 0
        assert text.splitlines()[1] == want


def test_table10_matches_summary():
    status, text = run_cli(["table10"])
    assert status == 0
    lines = text.splitlines()
    assert lines[0] == "family\tF0\td\tb\tPF\tdimW\tc"
    assert len(lines) == 11
    for line in lines[1:]:
        key, _, d, b, pf, dim_w, c = line.split("\t")
        want = SUMMARY_TABLE[key]
        got = (int(d), tuple(int(x) for x in b.strip("()").split(",")), int(pf), int(dim_w), int(c))
        assert got == want


def test_table10_deterministic():
    assert run_cli(["table10"]) == run_cli(["table10"])


def test_commands_deterministic():
    for argv in (
        ["invariants", "family7"],
        ["classes", "family5", "--kind", "weak"],
        ["common-factor", "family1", "family2", "--q", "17"],
        ["verify-appendix", "--seed", "3"],
    ):
        assert run_cli(argv) == run_cli(argv)


def test_table10_filter_and_empty():
    status, text = run_cli(["table10", "--only", "family7"])
    assert status == 0
    lines = text.splitlines()
    assert len(lines) == 2 and lines[1].startswith("family7\t")
    status, text = run_cli(["table10", "--only", "nomatch"])
    assert status == 0
    assert text.splitlines() == ["family\tF0\td\tb\tPF\tdimW\tc"]


def test_table10_diagnostic_row(monkeypatch):
    monkeypatch.setitem(
        deformation.FAMILIES, "family1", (((1, 1), (1, 1)), (1, 1))
    )
    status, text = run_cli(["table10"])
    assert status == 1
    first_row = text.splitlines()[1]
    assert first_row.startswith("family1\tERROR:")
    assert text.count("\n") == 11  # all ten rows still emitted


def test_invariants_family7():
    status, text = run_cli(["invariants", "family7"])
    assert status == 0
    lines = text.splitlines()
    assert len(lines) == 14
    assert sum(line.endswith("\tPF") for line in lines) == 6
    assert "6,6,8,4\tPF" in lines
    assert "3,15,8,22" in lines


def test_invariants_family1():
    status, text = run_cli(["invariants", "family1"])
    assert len(text.splitlines()) == 21


def test_invariants_family9_all_pf():
    status, text = run_cli(["invariants", "family9", "--group", "G"])
    lines = text.splitlines()
    assert len(lines) == 18
    assert all(line.endswith("\tPF") for line in lines)
    status, text_gmax = run_cli(["invariants", "family9", "--group", "Gmax"])
    assert len(text_gmax.splitlines()) == 18


def test_classes_family4_strong():
    status, text = run_cli(["classes", "family4", "--kind", "strong"])
    lines = text.splitlines()
    assert len(lines) == 7
    assert all(line.startswith("3\t") for line in lines)
    assert any("7,7,7,7 14,14,14,14 21,21,21,21" in line for line in lines)


def test_classes_family1_strong_regression():
    status, text = run_cli(["classes", "family1", "--kind", "strong"])
    sizes = sorted(int(line.split("\t")[0]) for line in text.splitlines())
    assert sizes == [1] * 18 + [3]


def test_classes_family5_weak():
    status, text = run_cli(["classes", "family5", "--kind", "weak"])
    sizes = sorted(int(line.split("\t")[0]) for line in text.splitlines())
    assert sizes == [3, 16]


def test_common_factor_123():
    status, text = run_cli(["common-factor", "family1", "family2", "family3", "--q", "17"])
    assert status == 0
    assert "common_degree\t5" in text
    assert text.count("divides\ttrue") == 3


def test_common_factor_12():
    status, text = run_cli(["common-factor", "family1", "family2", "--q", "17"])
    assert status == 0
    assert "common_degree\t7" in text


def test_common_factor_no_cover_is_usage_error(capsys):
    status = run_main(["common-factor", "family1", "family9", "--q", "17"])
    assert status == cli.USAGE_ERROR
    assert "no common cover" in capsys.readouterr().err


def test_count_family1():
    status, text = run_cli(["count", "family1", "--q", "5", "--lambda", "0"])
    assert status == 0
    assert text.strip() == "0"  # the Fermat quartic has no rational points over F_5
    status, text = run_cli(["count", "family1", "--q", "13", "--lambda", "0"])
    assert text.strip() == "128"


def test_count_ext_flag():
    status, text = run_cli(["count", "family1", "--q", "5", "--ext", "2", "--lambda", "0"])
    assert status == 0
    from delsarte.pointcount import FiniteField, count_points, fermat_hypersurface

    assert int(text.strip()) == count_points(fermat_hypersurface(4, 3), FiniteField(5, 2))


def test_count_scan():
    status, text = run_cli(["count", "family1", "--q", "5", "--scan"])
    assert status == 0
    lines = text.splitlines()
    assert len(lines) == 5
    assert lines[0] == "lambda\t0\tgeneral_position\ttrue"
    assert any(line.endswith("false") for line in lines)


def test_verify_appendix():
    status, text = run_cli(["verify-appendix"])
    assert status == 0
    lines = text.splitlines()
    assert lines and all(line.startswith("PASS\t") for line in lines)


def test_verify_appendix_perturbed_registry(monkeypatch):
    from delsarte import symbolic

    broken = dict(symbolic._REGISTRY)
    broken["q1"] = broken["q1"] + symbolic.MultiPoly.variable("u")
    monkeypatch.setattr(symbolic, "_REGISTRY", broken)
    status, text = run_cli(["verify-appendix", "--only", "discriminant-q"])
    assert status == 1
    assert "FAIL\tdiscriminant-q1" in text
    assert "PASS\tdiscriminant-q2" in text


def test_verify_appendix_only():
    status, text = run_cli(["verify-appendix", "--only", "quotient"])
    assert status == 0
    assert all("quotient" in line for line in text.splitlines())


def test_json_family_input(tmp_path):
    rows, a = deformation.FAMILIES["family6"]
    path = tmp_path / "fam.json"
    path.write_text(json.dumps({"matrix": [list(r) for r in rows], "deformation": list(a)}))
    status, text = run_cli(["analyze", str(path)])
    assert status == 0
    assert "\t12\t(3,3,4,2)\t6\t12\t3" in text


def test_json_family_invalid(tmp_path, capsys):
    path = tmp_path / "bad.json"
    path.write_text(json.dumps({"matrix": [[1, 1], [1, 1]], "deformation": [1, 1]}))
    assert run_main(["analyze", str(path)]) == cli.USAGE_ERROR
    assert "invalid family" in capsys.readouterr().err


def test_unknown_family(capsys):
    assert run_main(["analyze", "family99"]) == cli.USAGE_ERROR
    assert "unknown family" in capsys.readouterr().err


def test_parse_prime_power():
    assert cli.parse_prime_power(25) == (5, 2)
    assert cli.parse_prime_power(17) == (17, 1)
    with pytest.raises(cli.CliError):
        cli.parse_prime_power(12)
