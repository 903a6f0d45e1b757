import io
import json
import sys
from pathlib import Path

import pytest

import ghw.cli as cli
from ghw.betti import betti_fine_matroid
from workeddata import DATA, diagram_rows

GOLDEN = Path(__file__).resolve().parent / "golden"


def run(capsys, *argv):
    code = cli.main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def golden(name):
    return (GOLDEN / name).read_text(encoding="utf-8")


def test_weights_h1(capsys):
    code, out, _ = run(capsys, "weights", str(DATA / "h1.txt"))
    assert code == 0
    assert out == "d: 2 4 6\n"


def test_weights_dual_complex(capsys):
    code, out, _ = run(capsys, "weights", str(DATA / "g7.txt"), "--complex", "dual")
    assert code == 0
    assert out == "d: 3 4 5\n"


def test_weights_stdin(capsys, monkeypatch):
    monkeypatch.setattr(sys, "stdin", io.StringIO('{"uniform": [3, 6]}'))
    code, out, _ = run(capsys, "weights", "-")
    assert code == 0
    assert out == "d: 4 5 6\n"


def test_weights_json_report(capsys):
    code, out, _ = run(capsys, "weights", str(DATA / "h1.txt"), "--json")
    assert code == 0
    obj = json.loads(out)
    assert obj["weights"] == [2, 4, 6]
    assert obj["support"] == 6
    assert obj["whitney"][0] == [3, 0, 1]


def test_diagram_golden_h1(capsys):
    code, out, _ = run(capsys, "diagram", str(DATA / "h1.txt"))
    assert code == 0
    assert out == golden("diagram_h1.txt")


def test_diagram_alexander_h1(capsys):
    code, out, _ = run(capsys, "diagram", str(DATA / "h1.txt"), "--complex", "alexander")
    assert code == 0
    assert out == golden("diagram_h1_alexander.txt")
    assert diagram_rows(out.rstrip("\n")) == ["2 | 13 25 17 4"]


def test_diagram_golden_h6(capsys):
    code, out, _ = run(capsys, "diagram", str(DATA / "h6.txt"))
    assert code == 0
    assert out == golden("diagram_h6.txt")


def test_diagram_golden_g7_dual(capsys):
    code, out, _ = run(capsys, "diagram", str(DATA / "g7.txt"), "--complex", "dual")
    assert code == 0
    assert out == golden("diagram_g7_dual.txt")


def test_whitney_golden(capsys):
    code, out, _ = run(capsys, "whitney", str(DATA / "h1.txt"))
    assert code == 0
    assert out == golden("whitney_h1.txt")


def test_betti_fine_json_round_trip(capsys, m1):
    code, out, _ = run(capsys, "betti", str(DATA / "h1.txt"), "--fine", "--json")
    assert code == 0
    table = betti_fine_matroid(m1)
    assert cli.BettiTable.from_json_dict(json.loads(out), 6) == table
    assert out == golden("betti_h1_fine.json")


def test_betti_text(capsys):
    code, out, _ = run(capsys, "betti", str(DATA / "h2.txt"))
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "global: 1 3 2"
    assert "1 2 1" in lines


def test_mds_output(capsys):
    code, out, _ = run(capsys, "mds", str(DATA / "h6.txt"))
    assert code == 0
    assert "weights: 3 5 6" in out
    assert "mds level: 2" in out
    code, out, _ = run(capsys, "mds", str(DATA / "u_3_6.json"))
    assert code == 0
    assert "is mds: yes" in out
    assert "alexander dual is a matroid: yes" in out


def test_mds_degenerate(capsys):
    code, out, _ = run(capsys, "mds", str(DATA / "g7.txt"), "--complex", "dual")
    assert code == 0
    assert "mds level: none" in out
    assert "linear resolution: yes" in out
    assert "isthmuses: 2" in out


def test_verify_corpus(capsys):
    for path in sorted(DATA.iterdir()):
        code, out, _ = run(capsys, "verify", str(path))
        assert code == 0, (path.name, out)
        assert "FAIL" not in out


def test_verify_reports_failure(capsys, monkeypatch):
    monkeypatch.setattr(cli, "verify_matroid", lambda M, cap: [("forced", False)])
    code, out, _ = run(capsys, "verify", str(DATA / "h2.txt"))
    assert code == cli.EXIT_VERIFY
    assert "forced: FAIL" in out


def test_wei_not_applicable_reported(capsys):
    code, out, _ = run(capsys, "verify", str(DATA / "h4.txt"))
    assert code == 0
    assert "Wei duality partition: not applicable" in out


def test_input_error_composite_field(tmp_path, capsys):
    bad = tmp_path / "bad.txt"
    bad.write_text("field 4\n1 0\n0 1\n")
    code, _, err = run(capsys, "weights", str(bad))
    assert code == 1
    assert "not prime" in err


def test_input_error_ragged_rows(tmp_path, capsys):
    bad = tmp_path / "bad.txt"
    bad.write_text("field 2\n1 0 1\n0 1\n")
    code, _, err = run(capsys, "weights", str(bad))
    assert code == 1
    assert "line 3" in err


def test_input_error_missing_field_line(tmp_path, capsys):
    bad = tmp_path / "bad.txt"
    bad.write_text("1 0 1\n")
    code, _, err = run(capsys, "weights", str(bad))
    assert code == 1
    assert "line 1" in err and "field" in err


def test_input_error_bad_json(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text('{"n": 4, "bases": [[1, 2], [3, 4]]}')
    code, _, err = run(capsys, "weights", str(bad))
    assert code == 1
    assert "exchange" in err


def test_input_error_out_of_range_element(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text('{"n": 3, "bases": [[1, 5]]}')
    code, _, err = run(capsys, "weights", str(bad))
    assert code == 1
    assert "out of range" in err


def test_input_error_two_sources(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text('{"uniform": [1, 2], "n": 2, "bases": [[1]]}')
    code, _, err = run(capsys, "weights", str(bad))
    assert code == 1
    assert "exactly one" in err


def test_missing_file(capsys):
    code, _, err = run(capsys, "weights", "no_such_file.txt")
    assert code == 1
    assert "cannot read" in err


def test_unknown_flag(capsys):
    code, _, err = run(capsys, "weights", str(DATA / "h1.txt"), "--bogus")
    assert code == 1


def test_alexander_complex_rejected_for_weights(capsys):
    code, _, err = run(capsys, "weights", str(DATA / "h1.txt"), "--complex", "alexander")
    assert code == 1
    assert "own data" in err


def test_cap_exceeded(tmp_path, capsys):
    big = tmp_path / "big.json"
    big.write_text('{"uniform": [2, 21]}')
    code, _, err = run(capsys, "weights", str(big))
    assert code == 3
    assert "cap" in err


def test_cap_override_lowered(tmp_path, capsys):
    mid = tmp_path / "mid.json"
    mid.write_text('{"uniform": [2, 12]}')
    code, _, _ = run(capsys, "weights", str(mid), "--max-n", "10")
    assert code == 3
    code, out, err = run(capsys, "weights", str(mid), "--max-n", "12")
    assert code == 0
    assert out == "d: " + " ".join(str(d) for d in range(3, 13)) + "\n"


def test_outputs_are_deterministic(capsys):
    runs = [run(capsys, "betti", str(DATA / "h1.txt"), "--fine", "--json")[1] for _ in range(2)]
    assert runs[0] == runs[1]
