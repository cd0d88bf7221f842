import json

from click.testing import CliRunner

from rootnum.cli import build_cases, main, run_case


def invoke(*args):
    return CliRunner().invoke(main, list(args))


def test_w_basic_pretty():
    r = invoke("w", "--p", "3", "--f", "1", "--char", "alpha=1/9")
    assert r.exit_code == 0, r.output
    assert "z9" in r.output
    assert "agree=True" in r.output
    assert "p_primary=z9" in r.output


def test_w_json_record():
    r = invoke("w", "--p", "3", "--f", "1", "--char", "alpha=1/9", "--format", "json")
    assert r.exit_code == 0, r.output
    rec = json.loads(r.output.strip())
    assert rec["w_oracle"]["root"] == {"m": 9, "k": 1}
    assert rec["agree"] is True
    assert rec["character"]["conductor_exponent"] == 2
    assert rec["decomposition"]["quartic"] == {"m": 1, "k": 0}


def test_w_two_adic():
    r = invoke("w", "--p", "2", "--f", "1", "--char", "alpha=1/8", "--format", "json")
    assert r.exit_code == 0, r.output
    rec = json.loads(r.output.strip())
    root = rec["w_oracle"]["root"]
    assert (8 % root["m"]) == 0  # an eighth root of unity (here: 1)
    assert rec["agree"] is True


def test_w_bad_spec_exits_2():
    r = invoke("w", "--p", "3", "--char", "alpha=nope")
    assert r.exit_code == 2


def test_verify_c7_passes():
    r = invoke("verify", "--suite", "c7", "--p", "3")
    assert r.exit_code == 0, r.output
    assert "FAIL" not in r.output
    assert "cases passed" in r.output


def test_verify_agreement_small():
    r = invoke("verify", "--suite", "p3-agreement", "--p", "3", "--max-n", "2", "--format", "json")
    assert r.exit_code == 0, r.output
    lines = [json.loads(line) for line in r.output.strip().splitlines()]
    assert len(lines) == 6  # units modulo 9
    assert all(rec["equal"] for rec in lines)


def test_verify_unknown_suite_exits_2():
    r = invoke("verify", "--suite", "bogus")
    assert r.exit_code == 2


def test_verify_deterministic_output():
    args = ("verify", "--suite", "c7,witt", "--p", "3", "--seed", "5", "--format", "json")
    out1 = invoke(*args)
    out2 = invoke(*args)
    assert out1.exit_code == out2.exit_code == 0
    assert out1.output == out2.output


def test_verify_parallel_matches_serial():
    base = ("verify", "--suite", "sqrt-lemma,l1b", "--p", "3,5", "--format", "json")
    serial = invoke(*base, "--jobs", "1")
    parallel = invoke(*base, "--jobs", "2")
    assert serial.exit_code == parallel.exit_code == 0
    assert serial.output == parallel.output


def test_verify_json_roundtrip():
    r = invoke("verify", "--suite", "l1b", "--format", "json")
    assert r.exit_code == 0
    rec = json.loads(r.output.strip())
    assert rec["identity"] == "l1b"
    assert rec["equal"] is True
    assert rec["params"] == {"l": 3, "p1": 109, "p2": 31}


def test_suites_listing():
    r = invoke("suites")
    assert r.exit_code == 0
    for name in ("p3-agreement", "c7", "ultra-2adic", "all"):
        assert name in r.output


def test_table_family():
    r = invoke("table", "--p", "3", "--family", "alpha=a/9", "--format", "tsv")
    assert r.exit_code == 0, r.output
    lines = r.output.strip().splitlines()
    assert lines[0].split("\t") == ["a", "conductor", "order", "w", "w_star", "w_p"]
    assert len(lines) == 1 + 6
    assert all(line.split("\t")[1] == "2" for line in lines[1:])


def test_table_row_cap():
    r = invoke("table", "--p", "3", "--family", "alpha=a/27", "--max-rows", "5")
    assert r.exit_code == 2
    ok = invoke("table", "--p", "3", "--family", "alpha=a/27", "--max-rows", "20")
    assert ok.exit_code == 0
    assert len(ok.output.strip().splitlines()) == 1 + 18


def test_table_needs_family_symbol():
    r = invoke("table", "--p", "3", "--family", "alpha=1/9")
    assert r.exit_code == 2


def test_table_json_roundtrip():
    r = invoke("table", "--p", "3", "--family", "alpha=a/9", "--format", "json")
    assert r.exit_code == 0
    rows = [json.loads(line) for line in r.output.strip().splitlines()]
    assert len(rows) == 6
    assert all(row["order"] == 3 for row in rows)


def test_precision_exhaustion_exit_3():
    r = invoke("w", "--p", "3", "--prec", "2", "--char", "alpha=1/27")
    assert r.exit_code == 3


def test_build_cases_cover_ultra():
    cases = build_cases("ultra-2adic", [2], 1, 3, 0)
    assert len(cases) == 5
    rep = run_case(cases[0])
    assert rep["equal"]


def test_verify_out_file(tmp_path):
    target = tmp_path / "report.json"
    r = invoke("verify", "--suite", "l1b", "--format", "json", "--out", str(target))
    assert r.exit_code == 0
    assert json.loads(target.read_text())["equal"] is True
