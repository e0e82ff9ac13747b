import csv
import json
from pathlib import Path

import pytest

from sperner.cli import main
from sperner.io import SystemFileError, dump_system, parse_system
from sperner.report import FIGURE_HEADER, TABLE_HEADER

GOLDEN = Path(__file__).parent / "data" / "table_golden.csv"


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_bound_text(capsys):
    code, out, _ = run(capsys, "bound", "--n", "10", "--k", "4")
    assert code == 0
    assert "thm_upper    11" in out and "lower        10" in out and "MAIN(1)" in out


def test_bound_json_exact(capsys):
    code, out, _ = run(capsys, "bound", "--n", "12", "--k", "4", "--json")
    rec = json.loads(out)
    assert code == 0 and rec["exact"] == 55 and rec["thm_upper"] is None


def test_bound_invalid(capsys):
    code, _, err = run(capsys, "bound", "--n", "3", "--k", "5")
    assert code == 2 and "n >= k" in err


def test_table_matches_golden(tmp_path, capsys):
    out = tmp_path / "t.csv"
    assert run(capsys, "table", "--csv", str(out))[0] == 0
    assert out.read_text() == GOLDEN.read_text()


def test_table_single_k(capsys):
    code, out, _ = run(capsys, "table", "--k-min", "5", "--k-max", "5", "--n-max", "23")
    rows = list(csv.DictReader(out.splitlines()))
    assert code == 0 and out.splitlines()[0] == ",".join(TABLE_HEADER)
    assert [int(r["n"]) for r in rows] == list(range(12, 24))
    last = rows[-1]
    assert (last["lower"], last["upper"], last["upper_gap_vs_mms_floor"]) == ("1008", "2808", "366")


def test_figure_rows_and_invariants(tmp_path, capsys):
    out = tmp_path / "f.csv"
    assert run(capsys, "figure", "--k", "5", "--n-max", "100", "--csv", str(out))[0] == 0
    lines = out.read_text().splitlines()
    assert lines[0] == ",".join(FIGURE_HEADER)
    rows = [list(map(int, line.split(","))) for line in lines[1:]]
    assert len(rows) == 89
    for n, lo_naive, lo, up, mms in rows:
        assert lo_naive <= lo <= up <= mms


def test_figure_single_row(capsys):
    code, out, _ = run(capsys, "figure", "--k", "10", "--n-max", "22")
    assert code == 0 and len(out.splitlines()) == 2


def test_figure_plot(tmp_path, capsys):
    out = tmp_path / "f10.csv"
    code, msg, _ = run(capsys, "figure", "--k", "5", "--n-max", "100", "--csv", str(out), "--plot")
    png = tmp_path / "f10.png"
    assert code == 0 and png.exists() and png.read_bytes()[:4] == b"\x89PNG"


def test_construct_and_verify(tmp_path, capsys):
    out = tmp_path / "s.json"
    code, msg, _ = run(capsys, "construct", "--n", "10", "--k", "4", "--method", "main", "--u", "1",
                       "--out", str(out))
    assert code == 0 and "partitions   10" in msg
    assert len(json.loads(out.read_text())["partitions"]) == 10
    code, msg, _ = run(capsys, "verify", str(out), "--detecting")
    assert code == 0 and "sperner      pass" in msg and "detecting    pass" in msg


def test_construct_family(tmp_path, capsys):
    out = tmp_path / "fam.json"
    code, msg, _ = run(capsys, "construct", "--n", "27", "--k", "11", "--method", "family3k6",
                       "--out", str(out))
    assert code == 0 and "partitions   40" in msg


def test_construct_product(tmp_path, capsys):
    out = tmp_path / "prod.json"
    code, msg, _ = run(capsys, "construct", "--n", "20", "--k", "4", "--method", "product",
                       "--m", "10", "--out", str(out))
    assert code == 0 and "partitions   400" in msg


def test_construct_not_applicable(tmp_path, capsys):
    out = tmp_path / "x.json"
    code, _, err = run(capsys, "construct", "--n", "10", "--k", "4", "--method", "alt", "--out", str(out))
    assert code == 2 and "c*k odd" in err and not out.exists()


def test_verify_corrupted(tmp_path, capsys):
    path = tmp_path / "bad.json"
    path.write_text(json.dumps({"n": 4, "k": 2, "partitions": [[[0, 1], [2, 3]], [[0], [1, 2, 3]]]}))
    code, msg, _ = run(capsys, "verify", str(path))
    assert code == 3 and "witness      (0, 1, 1, 1)" in msg


def test_verify_parse_errors(tmp_path, capsys):
    path = tmp_path / "broken.json"
    path.write_text('{"n": 4,\n "k": 2,\n "partitions": [[[0, 1], [2, 3]],]}')
    code, _, err = run(capsys, "verify", str(path))
    assert code == 4 and "line 3" in err
    code, _, err = run(capsys, "verify", str(tmp_path / "missing.json"))
    assert code == 4


def test_parse_path_diagnostics():
    with pytest.raises(SystemFileError, match=r"\$\.partitions\[1\]\[0\]\[1\]"):
        parse_system('{"n": 4, "k": 2, "partitions": [[[0,1],[2,3]], [[0,"x"],[1,3]]]}')
    with pytest.raises(SystemFileError, match="missing key 'k'"):
        parse_system('{"n": 4, "partitions": []}')
    with pytest.raises(SystemFileError, match="misses"):
        parse_system('{"n": 4, "k": 2, "partitions": [[[0],[1]]]}')


def test_dump_round_trip():
    text = '{"n": 4, "k": 2, "partitions": [[[0,1],[2,3]], [[0,2],[1,3]]]}'
    sys_ = parse_system(text)
    assert parse_system(dump_system(sys_)).partitions == sys_.partitions


def test_brute_command(tmp_path, capsys):
    out = tmp_path / "w.json"
    code, msg, _ = run(capsys, "brute", "--n", "7", "--k", "3", "--out", str(out))
    assert code == 0 and "SP(7,3) = 5" in msg
    assert run(capsys, "verify", str(out))[0] == 0


def test_brute_cap_exceeded(capsys):
    code, _, err = run(capsys, "brute", "--n", "12", "--k", "3")
    assert code == 2 and "cap" in err
