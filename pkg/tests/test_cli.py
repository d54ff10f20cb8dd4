import json

import pytest

from conftest import read_golden


def test_gen_csv(run_cli):
    code, out, _ = run_cli("gen", "--kind", "s", "--k", 3, "--count", 15, "--format", "csv")
    assert code == 0
    assert out == "1,2,4,7,12,21,38,70,129,236,429,778,1412,2567,4672\n"


def test_gen_table(run_cli):
    code, out, _ = run_cli("gen", "--kind", "am", "--k", 2, "--count", 5, "--format", "table")
    assert code == 0
    rows = out.splitlines()[1:]
    assert [r.split() for r in rows] == [["0", "0"], ["1", "0"], ["2", "1"], ["3", "0"], ["4", "1"]]


def test_gen_fib_starts_at_minus_one(run_cli):
    assert run_cli("gen", "--kind", "fib", "--count", 3, "--format", "csv")[1] == "1,0,1\n"


def test_gen_json_and_bfile(run_cli):
    code, out, _ = run_cli("gen", "--kind", "a", "--k", 4, "--count", 3, "--format", "json")
    assert json.loads(out) == {"sequence": "a4", "offset": 0, "values": [1, 1, 2]}
    code, out, _ = run_cli("gen", "--kind", "s", "--k", 2, "--count", 3, "--format", "bfile")
    assert out == "1 1\n2 2\n3 3\n"
    code, out, _ = run_cli("gen", "--kind", "s", "--k", 2, "--count", 2, "--offset", 5, "--format", "csv")
    assert out == "9,16\n"


@pytest.mark.parametrize("argv", [
    ["gen", "--kind", "s", "--count", 3],
    ["gen", "--kind", "s", "--k", 0, "--count", 3],
    ["gen", "--kind", "s", "--k", 2, "--count", 0],
    ["gen", "--kind", "a", "--k", 2, "--count", 3, "--offset", -1],
    ["verify"],
    ["oracle", "--k", 2, "--n", 30],
    ["oeis", "check", "--rule", "bogus"],
    ["oeis", "check"],
    ["oeis", "export", "--kind", "s"],
])
def test_usage_errors_exit_2(run_cli, argv):
    code, out, err = run_cli(*argv)
    assert code == 2 and err.startswith("schreier: error")


def test_argparse_errors_exit_2(run_cli):
    with pytest.raises(SystemExit) as exc:
        run_cli("gen", "--kind", "nope", "--count", 3)
    assert exc.value.code == 2


def test_oracle_listing(run_cli):
    assert run_cli("oracle", "--k", 2, "--n", 2, "--mode", "schreier", "--list")[1] == "2\n{4}\n{2,4}\n"
    assert run_cli("oracle", "--k", 3, "--n", 3, "--mode", "maximal", "--list")[1] == "1\n{3,6,9}\n"
    assert run_cli("oracle", "--k", 1, "--n", 5, "--mode", "schreier")[1] == "5\n"


def test_verify_examples(run_cli):
    code, out, _ = run_cli("verify", "--theorem", "thm1", "--k-max", 6, "--n-max", 60)
    assert code == 0 and out.startswith("PASS thm1")
    assert run_cli("verify", "--theorem", "lemma23", "--k-max", 64)[0] == 0
    assert run_cli("verify", "--theorem", "partition", "--k-max", 4, "--n-max", 14)[0] == 0


def test_verify_json_is_deterministic(run_cli):
    argv = ("verify", "--theorem", "thm3", "--k-max", 3, "--n-max", 40, "--json")
    first, second = run_cli(*argv)[1], run_cli(*argv)[1]
    assert first == second
    report = json.loads(first)
    assert report["schema_version"] == 1 and report["passed"] and report["failures"] == []
    assert list(report) == sorted(report)
    assert "wall_time_s" not in report


def test_verify_timing_flag(run_cli):
    out = run_cli("verify", "--theorem", "hockey", "--n-max", 5, "--json", "--timing")[1]
    assert "wall_time_s" in json.loads(out)


def test_verify_failure_exit_1(run_cli, monkeypatch):
    from schreier import recurrence
    real = recurrence.gen_s_by_corollary
    monkeypatch.setattr(recurrence, "gen_s_by_corollary",
                        lambda k, c: [v + (i == 4) for i, v in enumerate(real(k, c))])
    code, out, _ = run_cli("verify", "--theorem", "thm1", "--k-max", 2, "--n-max", 10)
    assert code == 1 and out.startswith("FAIL thm1")
    assert "extraction=corollary" in out


def test_oeis_check(run_cli):
    code, out, _ = run_cli("oeis", "check", "--rule", "a1_vs_A000045")
    assert code == 0 and out.startswith("PASS a1_vs_A000045")


def test_oeis_check_all_json(run_cli):
    code, out, _ = run_cli("oeis", "check", "--all", "--json")
    reports = [json.loads(line) for line in out.splitlines()]
    assert code == 0 and len(reports) == 16 and all(r["passed"] for r in reports)
    assert sum(r["self_referential"] for r in reports) == 4


def test_oeis_check_with_explicit_fixtures(run_cli, tmp_path):
    from schreier.oeis_sources import build_fixtures
    build_fixtures(tmp_path, terms=60)
    code, out, _ = run_cli("oeis", "check", "--rule", "a1_vs_A000045", "--fixtures", tmp_path, "--verbose")
    assert code == 0 and "n=16 remote[17]: local 1597, remote 1597" in out


def test_oeis_check_mismatch_exit_1(run_cli, tmp_path):
    from schreier.oeis_sources import build_fixtures
    build_fixtures(tmp_path, terms=60)
    path = tmp_path / "b000045.txt"
    path.write_text(path.read_text().replace("\n5 5\n", "\n5 6\n"))
    code, out, _ = run_cli("oeis", "check", "--rule", "s1_vs_A000045", "--fixtures", tmp_path)
    assert code == 1 and "MISMATCH" in out


def test_oeis_check_missing_fixture_exit_3(run_cli, tmp_path):
    code, _, err = run_cli("oeis", "check", "--rule", "a1_vs_A000045", "--fixtures", tmp_path)
    assert code == 3 and "network fetch is disabled" in err


def test_oeis_export(run_cli, tmp_path):
    code, out, _ = run_cli("oeis", "export", "--kind", "s", "--k", 4, "--count", 100, "--offset", 1)
    lines = out.splitlines()
    assert code == 0 and len(lines) == 100 and lines[:3] == ["1 1", "2 2", "3 4"]
    target = tmp_path / "b.txt"
    assert run_cli("oeis", "export", "--kind", "am", "--k", 3, "--count", 5, "--output", target)[0] == 0
    assert target.read_text() == "0 0\n1 0\n2 1\n3 0\n4 0\n"


def test_gen_matches_golden_table(run_cli):
    out = "".join(run_cli("gen", "--kind", "s", "--k", k, "--count", 15, "--format", "csv")[1]
                  for k in range(1, 5))
    assert out == read_golden("table1_s.csv")
