import json

from equicycle.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_construct_and_verify(tmp_path, capsys):
    path = tmp_path / "k19.txt"
    code, out, _ = run(capsys, "construct", "--ell", "9", "--v", "19", "--out", str(path))
    assert code == 0 and "cycles=19" in out and "route=k2l1-rotational" in out
    code, out, _ = run(capsys, "verify", str(path))
    assert code == 0
    recs = [json.loads(line) for line in out.splitlines()]
    assert recs[-1] == {"overall": "pass", "failing": []}


def test_construct_stdout_structured(capsys):
    code, out, err = run(capsys, "construct", "--ell", "7", "--v", "35", "--format", "structured")
    assert code == 0 and json.loads(out)["header"]["route"] == "vl-blowup"
    assert "cycles=85" in err


def test_unsupported_exit_code(capsys):
    code, _, err = run(capsys, "construct", "--ell", "9", "--v", "20")
    assert code == 2 and "mod 18" in err


def test_budget_exit_code(tmp_path, capsys, monkeypatch):
    from equicycle import core

    def boom(*a, **k):
        raise core.SearchBudgetExceeded("search budget exhausted")

    monkeypatch.setattr("equicycle.cli.construct", boom)
    code, _, err = run(capsys, "construct", "--ell", "7", "--v", "57")
    assert code == 3 and "budget" in err


def test_verify_flipped_colour(tmp_path, capsys):
    path = tmp_path / "k69.txt"
    run(capsys, "construct", "--ell", "17", "--v", "69", "--out", str(path))
    text = path.read_text()
    bad = tmp_path / "bad.txt"
    bad.write_text(text.replace("colour 0_0 red", "colour 0_0 blue", 1))
    code, out, _ = run(capsys, "verify", str(bad))
    assert code == 1
    assert "class_sizes" in json.loads(out.splitlines()[-1])["failing"]


def test_verify_truncated(tmp_path, capsys):
    path = tmp_path / "t.txt"
    run(capsys, "construct", "--ell", "9", "--v", "19", "--out", str(path))
    path.write_text(path.read_text()[:-1])
    code, _, err = run(capsys, "verify", str(path))
    assert code == 2 and "line" in err


def test_inspect_differences(tmp_path, capsys):
    path = tmp_path / "k69.txt"
    run(capsys, "construct", "--ell", "17", "--v", "69", "--out", str(path))
    code, out, _ = run(capsys, "inspect", str(path), "--differences")
    assert code == 0
    rows = dict(line.split(None, 1) for line in out.splitlines() if line.startswith("C_"))
    assert "mixed 0" in rows["C_p"] and "mixed 17" in rows["C_p"]
    assert rows["C_2^0"].strip() == "pure0 +-2"
    assert out.splitlines()[-1].startswith("coverage PASS")


def test_inspect_k19(tmp_path, capsys):
    path = tmp_path / "k19.txt"
    run(capsys, "construct", "--ell", "9", "--v", "19", "--out", str(path))
    code, out, _ = run(capsys, "inspect", str(path), "--differences")
    assert code == 0 and sum(line.startswith("C") for line in out.splitlines()) == 3


def test_inspect_needs_rotational(tmp_path, capsys):
    path = tmp_path / "k35.txt"
    run(capsys, "construct", "--ell", "7", "--v", "35", "--out", str(path))
    code, _, err = run(capsys, "inspect", str(path), "--differences")
    assert code == 2 and "unsupported" in err


def test_cache_commands(tmp_path, capsys, monkeypatch):
    monkeypatch.setenv("EQUICYCLE_CACHE_DIR", str(tmp_path))
    assert run(capsys, "cache", "warm", "--ell", "9")[0] == 0
    code, out, _ = run(capsys, "cache", "list")
    assert code == 0 and "5,9,standard,0" in out
    assert run(capsys, "cache", "clear")[0] == 0
    assert "0 entries" in run(capsys, "cache", "list")[1]


def test_usage_error(capsys):
    assert main(["construct", "--ell", "x"]) == 2
    assert main([]) == 2
