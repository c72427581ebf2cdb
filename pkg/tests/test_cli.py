import json
import re
import subprocess
import sys

import pytest

from qident.cli import main
from qident.identities import CHECKS_BY_ID, REGISTRY

from test_identities import MUTATED


def strip_millis(text: str) -> str:
    return re.sub(r'"millis": \d+', '"millis": 0', text)


def test_list_contains_all_ids(capsys):
    assert main(["list"]) == 0
    out = capsys.readouterr().out
    assert "main_quadratic" in out
    assert "gram_det" in out
    lines = [line for line in out.splitlines() if line.strip()]
    assert len(lines) >= 18
    for check in REGISTRY:
        assert check.id in out


def test_verify_single_identity(capsys):
    rc = main(["verify", "--identity", "desnanot_jacobi", "--trials", "5", "--seed", "7"])
    assert rc == 0
    out = capsys.readouterr().out
    assert "desnanot_jacobi" in out
    assert "failures=0" in out


def test_verify_all_one_trial(tmp_path, capsys):
    report_path = tmp_path / "all.json"
    rc = main(["verify", "--all", "--trials", "1", "--seed", "0", "--json", str(report_path)])
    assert rc == 0
    capsys.readouterr()
    document = json.loads(report_path.read_text())
    assert document["suite"] == "all"
    assert document["seed"] == 0
    ids = [entry["id"] for entry in document["results"]]
    assert ids == [check.id for check in REGISTRY]
    for entry in document["results"]:
        assert set(entry) == {
            "id",
            "paper_anchor",
            "trials",
            "failures",
            "witness_seeds",
            "millis",
        }
        assert entry["trials"] == 1
        assert entry["failures"] == 0
        assert entry["witness_seeds"] == []


def test_verify_json_report(tmp_path, capsys):
    out = tmp_path / "out.json"
    rc = main(
        [
            "verify",
            "--identity",
            "main_quadratic",
            "--trials",
            "3",
            "--seed",
            "1",
            "--order",
            "8",
            "--json",
            str(out),
        ]
    )
    assert rc == 0
    capsys.readouterr()
    document = json.loads(out.read_text())
    (entry,) = document["results"]
    assert entry["id"] == "main_quadratic"
    assert entry["trials"] == 3
    assert entry["failures"] == 0


def test_verify_repeatable_identity_flag(tmp_path, capsys):
    out = tmp_path / "two.json"
    rc = main(
        [
            "verify",
            "--identity", "three_term_kernel",
            "--identity", "connection_coeffs",
            "--trials", "2",
            "--json", str(out),
        ]
    )
    assert rc == 0
    capsys.readouterr()
    document = json.loads(out.read_text())
    assert [e["id"] for e in document["results"]] == [
        "three_term_kernel",
        "connection_coeffs",
    ]
    assert document["suite"] == "three_term_kernel,connection_coeffs"


def test_report_deterministic_modulo_millis(tmp_path, capsys):
    paths = []
    for name in ("r1.json", "r2.json"):
        path = tmp_path / name
        rc = main(
            [
                "verify",
                "--identity", "bordered_det",
                "--identity", "andrews_qwatson",
                "--trials", "4",
                "--seed", "42",
                "--json", str(path),
            ]
        )
        assert rc == 0
        paths.append(path)
    capsys.readouterr()
    r1, r2 = (strip_millis(p.read_text()) for p in paths)
    assert r1 == r2


def test_unknown_identity_is_config_error(capsys):
    rc = main(["verify", "--identity", "not_a_thing"])
    assert rc == 2
    assert "unknown identity" in capsys.readouterr().err


def test_no_selection_is_config_error(capsys):
    rc = main(["verify"])
    assert rc == 2


def test_all_plus_identity_is_config_error(capsys):
    rc = main(["verify", "--all", "--identity", "gram_det"])
    assert rc == 2


def test_negative_trials_is_config_error(capsys):
    rc = main(["verify", "--all", "--trials", "-1"])
    assert rc == 2


def test_parse_error_exits_2():
    with pytest.raises(SystemExit) as exc:
        main(["verify", "--bogus-flag"])
    assert exc.value.code == 2


def test_failure_exit_code(monkeypatch, capsys):
    monkeypatch.setitem(CHECKS_BY_ID, MUTATED.id, MUTATED)
    rc = main(["verify", "--identity", MUTATED.id, "--trials", "2", "--seed", "0"])
    assert rc == 1
    out = capsys.readouterr().out
    assert "FAIL" in out
    assert "witnesses=" in out


def test_exit_code_zero_iff_no_failures(monkeypatch, capsys):
    monkeypatch.setitem(CHECKS_BY_ID, MUTATED.id, MUTATED)
    rc = main(
        ["verify", "--identity", "three_term_kernel", "--identity", MUTATED.id, "--trials", "1"]
    )
    assert rc == 1
    capsys.readouterr()


def test_size_overrides_reach_checks(tmp_path, capsys):
    out = tmp_path / "sized.json"
    rc = main(
        [
            "verify",
            "--identity", "pfaffian_eval",
            "--trials", "1",
            "--mmax", "2",
            "--height", "10",
            "--nmax", "3",
            "--json", str(out),
        ]
    )
    assert rc == 0
    capsys.readouterr()
    assert json.loads(out.read_text())["results"][0]["failures"] == 0


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "qident", "verify", "--identity", "three_term_kernel", "--trials", "2"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert "three_term_kernel" in proc.stdout
