import json

from absorb.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_classify_reproduces_the_reference_flags(capsys):
    code, out, _ = run_cli(capsys, "classify", "Zn:18", "--phi", "zero,empty")
    assert code == 0
    report = json.loads(out)
    assert report["ring"] == "Zn:18"
    rows = {tuple(r["elements"]): r for r in report["ideals"]}
    assert len(rows) == 5
    zero_row = rows[(0,)]
    assert zero_row["flags"]["phi_one_absorbing:zero"] is True
    assert zero_row["flags"]["phi_one_absorbing:empty"] is False
    assert zero_row["witnesses"]["phi_one_absorbing:empty"] == [2, 2, 9]
    nine_row = rows[(0, 9)]
    assert nine_row["flags"]["phi_one_absorbing:zero"] is True
    assert nine_row["flags"]["phi_prime:zero"] is False
    assert nine_row["witnesses"]["phi_prime:zero"] == [3, 3]


def test_classify_z4(capsys):
    code, out, _ = run_cli(capsys, "classify", "Zn:4", "--phi", "empty")
    assert code == 0
    report = json.loads(out)
    zero_row = next(r for r in report["ideals"] if r["elements"] == [0])
    assert zero_row["flags"]["one_absorbing_prime"] is True
    assert zero_row["flags"]["prime"] is False
    # undefined flags are null, not false
    assert zero_row["flags"]["two_absorbing"] is None


def test_classify_rejects_bad_spec(capsys):
    code, _, err = run_cli(capsys, "classify", "Zn:1")
    assert code == 2
    assert "error" in err


def test_classify_bound_exceeded(capsys):
    code, _, err = run_cli(capsys, "classify", "Zn:500")
    assert code == 3
    assert "bound" in err


def test_classify_deterministic_output(capsys):
    _, first, _ = run_cli(capsys, "classify", "Zn:12")
    _, second, _ = run_cli(capsys, "classify", "Zn:12")
    assert first == second


def test_classify_csv(capsys, tmp_path):
    out_csv = tmp_path / "report.csv"
    code, _, _ = run_cli(capsys, "classify", "Zn:4", "--csv", str(out_csv), "--json", str(tmp_path / "r.json"))
    assert code == 0
    lines = out_csv.read_text().strip().splitlines()
    assert lines[0] == "ring,ideal,flag,value,witness"
    assert any(",prime,false," in line for line in lines)


def test_verify_single_ring(capsys):
    code, out, _ = run_cli(capsys, "verify", "Zn:12", "--theorem", "almost-global")
    assert code == 0
    report = json.loads(out)
    verdict = report["verdicts"][0]
    assert verdict["status"] == "pass"
    assert verdict["details"]["every_ideal_almost"] is False
    assert verdict["details"]["structural"] is False


def test_verify_product(capsys):
    code, out, _ = run_cli(capsys, "verify", "prod(Zn:2,Zn:3)", "--theorem", "product")
    assert code == 0
    report = json.loads(out)
    assert all(v["status"] != "fail" for v in report["verdicts"])


def test_verify_needs_specs(capsys):
    code, _, err = run_cli(capsys, "verify")
    assert code == 2


def test_search_finds_weakly_not_plain(capsys):
    code, out, _ = run_cli(
        capsys, "search", "weakly_one_absorbing & !one_absorbing", "--zn-max", "20"
    )
    assert code == 0
    report = json.loads(out)
    match = report["match"]
    assert match is not None
    # smallest instance: the zero ideal of the residue ring mod 6
    assert match["ring"] == "Zn:6"
    assert match["elements"] == [0]
    assert match["flags"]["weakly_one_absorbing"] is True
    assert match["flags"]["one_absorbing_prime"] is False


def test_search_products_reach_idempotent_example(capsys):
    code, out, _ = run_cli(
        capsys,
        "search",
        "w_one_absorbing & !weakly_one_absorbing",
        "--zn-max", "24",
        "--include-products",
    )
    assert code == 0
    match = json.loads(out)["match"]
    assert match is not None
    assert match["ring"] == "prod(Zn:2,Zn:2,Zn:2)"
    assert match["flags"]["w_one_absorbing"] is True
    assert match["flags"]["weakly_one_absorbing"] is False


def test_search_unsatisfiable(capsys):
    code, out, err = run_cli(capsys, "search", "prime & !prime", "--zn-max", "8")
    assert code == 0
    report = json.loads(out)
    assert report["match"] is None
    assert "exhausted" in err


def test_search_unknown_flag(capsys):
    code, _, err = run_cli(capsys, "search", "shiny_ideal")
    assert code == 2
    assert "unknown flag" in err


def test_jobs_env_override(capsys, monkeypatch):
    monkeypatch.setenv("ABSORB_JOBS", "2")
    code, out, _ = run_cli(capsys, "verify", "Zn:6", "Zn:8", "--theorem", "almost-global")
    assert code == 0
    assert len(json.loads(out)["verdicts"]) == 2


def test_verify_default_corpus_passes(capsys):
    code, out, _ = run_cli(capsys, "verify", "--default-corpus")
    assert code == 0
    report = json.loads(out)
    assert report["ring"].startswith("corpus(")
    statuses = {v["status"] for v in report["verdicts"]}
    assert "fail" not in statuses
