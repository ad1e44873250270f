import io
import json
from pathlib import Path

import pytest

from enhanced_alexander.cli import Config, main, trial_seed

FIX = Path(__file__).resolve().parent.parent / "fixtures"


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out = capsys.readouterr()
    return code, out.out, out.err


def test_validate_ok(capsys):
    code, out, _ = run(capsys, "validate", FIX / "hopf.gauss")
    assert code == 0 and "crossing" in out.lower()


def test_validate_table_json(capsys):
    assert run(capsys, "validate", FIX / "borromean_table.json")[0] == 0


def test_validate_bad_input(capsys):
    code, _, err = run(capsys, "validate", FIX / "bad_duplicate.gauss")
    assert code == 2 and "error" in err


def test_missing_file(capsys):
    assert run(capsys, "validate", FIX / "nope.gauss")[0] == 2


def test_bad_prime(capsys):
    assert run(capsys, "invariants", FIX / "hopf.gauss", "--primes", "4")[0] == 2


def test_stdin(capsys, monkeypatch):
    monkeypatch.setattr("sys.stdin", io.StringIO("O1+ U2+ O3+ U1+ O2+ U3+"))
    code, out, _ = run(capsys, "invariants", "-")
    assert code == 0
    assert json.loads(out)["alexander_polynomial"] == "1 - t + t^2"


def test_invariants_payload(capsys):
    code, out, _ = run(capsys, "invariants", FIX / "borromean.gauss")
    p = json.loads(out)
    assert code == 0 and p["mu"] == 3 and p["degree_bound"] == 10
    assert len(p["longitudes"]) == 3
    assert all("torsion_certificate" in lon for lon in p["longitudes"])


def test_invariants_text(capsys):
    code, out, _ = run(capsys, "invariants", FIX / "hopf.gauss", "--format", "text")
    assert code == 0 and out.startswith("mu: 2")


def test_compare_exit_codes(capsys):
    code, out, _ = run(capsys, "compare", FIX / "borromean.gauss", FIX / "borromean_prime.gauss")
    assert code == 1 and json.loads(out)["witness"].startswith("longitude signature")
    code, out, _ = run(capsys, "compare", FIX / "hopf.gauss", FIX / "virtual_hopf.gauss")
    assert code == 1 and json.loads(out)["witness"] == "linking matrix"
    code, out, _ = run(capsys, "compare", FIX / "trefoil.gauss", FIX / "trefoil.gauss", "--format", "text")
    assert code == 0 and "not distinguished" in out


def test_fuzz_and_replay(capsys, tmp_path):
    code, out, _ = run(capsys, "fuzz", FIX / "hopf.gauss", "--trials", "3", "--moves", "6", "--seed", "4")
    assert code == 0 and json.loads(out)["violations"] == []
    code, out, _ = run(capsys, "fuzz", FIX / "hopf.gauss", "--trials", "2", "--moves", "6", "--welded")
    assert code == 0

    from enhanced_alexander.fixtures import fixture
    from enhanced_alexander.moves import random_equivalent

    final, trail = random_equivalent(fixture("hopf"), 6, trial_seed(4, 0))
    sites = tmp_path / "trail.json"
    sites.write_text(json.dumps({"sites": [tr.site.to_json() for tr in trail]}))
    code, out, _ = run(capsys, "replay", FIX / "hopf.gauss", sites)
    assert code == 0 and out.strip() == str(final.code)


def test_replay_rejects_bad_trail(capsys, tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text("[{\"kind\": \"R1a\"}]")
    assert run(capsys, "replay", FIX / "hopf.gauss", bad)[0] == 2
    invalid = tmp_path / "invalid.json"
    invalid.write_text(json.dumps([{"kind": "R1a", "direction": "delete", "data": [1]}]))
    assert run(capsys, "replay", FIX / "trefoil.gauss", invalid)[0] == 2


def test_experiment(capsys):
    code, out, _ = run(
        capsys, "experiment-sum-longitudes", FIX / "hopf.gauss", FIX / "borromean.gauss", FIX / "virtual_hopf.gauss"
    )
    results = [e["result"] for e in json.loads(out)["sum_of_longitudes"]]
    assert code == 0 and results[:2] == ["ZERO", "ZERO"]
    assert results[2] == "NOT_FOUND_UP_TO(5)"
    # the linking rows of the virtual Hopf link do not cancel, so the sum is not zero at all
    assert json.loads(out)["sum_of_longitudes"][2]["phi_image_zero"] is False


def test_config_validation():
    with pytest.raises(ValueError):
        Config(degree_bound=-1)
    with pytest.raises(ValueError):
        Config(fmt="xml")
    assert Config(degree_bound=3).bound_for(None) == 3
