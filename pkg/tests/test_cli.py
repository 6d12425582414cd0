import json
import subprocess
import sys
from fractions import Fraction

import pytest

from fibdense import density
from fibdense.cli import main, parse_range, resolve_max_len
from fibdense.density import BoundReport
from fibdense.sequences import fib


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_word(capsys):
    assert run(capsys, "word", "5") == (0, "10110101\n", "")
    assert run(capsys, "word", "0")[1] == "0\n"
    code, out, _ = run(capsys, "word", "60", "--counts-only")
    assert code == 0
    assert out.splitlines()[1] == f"60,{fib(59)},{fib(60)},{fib(61)}"


def test_word_too_long(capsys):
    code, out, err = run(capsys, "word", "40")
    assert code == 2 and out == "" and "fibdense word" in err
    assert run(capsys, "word", "10", "--max-len", "50")[0] == 2


def test_max_len_precedence(capsys, monkeypatch):
    monkeypatch.setenv("FIBDENSE_MAX_LEN", "50")
    assert resolve_max_len(None) == 50
    assert resolve_max_len(200) == 200
    assert run(capsys, "word", "10")[0] == 2
    assert run(capsys, "word", "10", "--max-len", "89")[0] == 0
    monkeypatch.setenv("FIBDENSE_MAX_LEN", "lots")
    assert run(capsys, "word", "3")[0] == 2


def test_density_table_rows(capsys):
    code, out, _ = run(capsys, "density-table", "19")
    lines = out.splitlines()
    assert code == 0 and lines[0] == "k,m,n,DF_m,DF_n"
    assert "18,1597,2584,0.38,0.62" in lines
    assert "2,1,1,0.50,0.50" in lines
    assert "0,1,0,1.00,0.00" in lines
    assert "5,3,5,0.38,0.63" in lines


def test_ratios_rows(capsys):
    code, out, _ = run(capsys, "ratios", "16")
    lines = out.splitlines()
    assert code == 0
    assert "7,1.6,0.6,2.6,1,2,1,4.2" in lines
    assert "1,1,1,2,0,1,1,5" in lines
    _, out40, _ = run(capsys, "ratios", "40", "--decimals", "12")
    assert out40.splitlines()[-1].startswith("40,1.61803398875,0.61803398875,2.61803398875")


def test_claims_examples(capsys):
    code, out, _ = run(capsys, "claims", "--id", "lemma35", "--k", "2..60")
    rows = out.splitlines()[1:]
    assert code == 0 and len(rows) == 59 and all(",holds," in r for r in rows)

    code, out, _ = run(capsys, "claims", "--id", "prop32", "--k", "4..10", "--format", "json")
    doc = json.loads(out)
    assert code == 0
    assert all(r["verdict"] == "reported-only" for r in doc["rows"])
    assert all(Fraction(r["exact"]) > 1 for r in doc["rows"])
    assert [r["exact"] for r in doc["rows"] if r["inputs"] == "k=5"] == ["23/8"]

    code, out, _ = run(capsys, "claims", "--id", "product-rec", "--lambda", "0..8")
    assert code == 0 and out.count(",holds,") == 9


def test_claims_cubic_lambda_ratio_is_reported_only(capsys):
    _, out, _ = run(capsys, "claims", "--id", "thm41", "--lambda", "3", "--format", "json")
    (row,) = json.loads(out)["rows"]
    assert row["verdict"] == "reported-only"
    assert row["value"].startswith("4.236")


def test_claims_all_pass_by_default(capsys):
    code, out, err = run(capsys, "claims")
    assert code == 0 and err == ""
    assert ",fails," not in out


def test_claims_failure_exit_code(capsys, monkeypatch):
    monkeypatch.setattr(density, "lemma35_bound",
                        lambda k: BoundReport(k, Fraction(2), Fraction(1)))
    code, out, err = run(capsys, "claims", "--id", "lemma35", "--k", "3")
    assert code == 3
    assert ",fails," in out and "lemma35" in err


def test_claims_bad_input(capsys):
    assert run(capsys, "claims", "--id", "nope")[0] == 2
    assert run(capsys, "claims", "--id", "lemma35", "--k", "5..2")[0] == 2
    assert run(capsys, "claims", "--id", "lemma35", "--k", "0")[0] == 2
    code, out, _ = run(capsys, "claims", "--list")
    assert code == 0 and "thm23" in out


def test_complexity_and_palindromes(capsys):
    code, out, _ = run(capsys, "complexity", "--max-n", "10")
    lines = out.splitlines()
    assert code == 0 and lines[0] == "n,fac,pal,stabilized"
    assert lines[11] == "10,11,1,true"
    code, out, _ = run(capsys, "palindromes", "--k-max", "16")
    assert code == 0 and out.splitlines()[16] == "16,1,21,21,true"


def test_complexity_from_file(capsys, tmp_path):
    f = tmp_path / "w.txt"
    f.write_text("10110101\n")
    code, out, _ = run(capsys, "complexity", "--input", str(f), "--max-n", "3")
    assert code == 0 and out.splitlines()[4] == "3,4,2,"
    f.write_text("102")
    assert run(capsys, "complexity", "--input", str(f))[0] == 2
    assert run(capsys, "complexity", "--input", str(tmp_path / "missing"))[0] == 2


def test_index(capsys):
    code, out, _ = run(capsys, "index", "--summary", "--decimals", "6")
    assert code == 0 and out.splitlines()[1].startswith("30,3.618")
    code, out, _ = run(capsys, "index", "--cf", "0,2", "--depth", "0")
    assert out.splitlines()[1].split(",")[3] == "2"
    assert run(capsys, "index", "--cf", "1,1", "--depth", "5")[0] == 2


def test_gf(capsys):
    _, out, _ = run(capsys, "gf", "--kind", "kfib", "--k", "2", "--terms", "6")
    assert [line.split(",")[1] for line in out.splitlines()[1:]] == ["0", "1", "2", "5", "12", "29"]
    _, out, _ = run(capsys, "gf", "--kind", "custom", "--num", "1", "--den", "2,-1", "--terms", "3")
    assert out.splitlines()[1:] == ["0,1/2", "1,1/4", "2,1/8"]
    assert run(capsys, "gf", "--kind", "custom", "--num", "1", "--den", "0,1")[0] == 2
    assert run(capsys, "gf", "--kind", "custom")[0] == 2


def test_natural_density(capsys):
    code, out, _ = run(capsys, "natural-density", "1000", "--powers", "6")
    lines = out.splitlines()
    assert code == 0
    assert lines[1].startswith("1000,15,3/200,")
    assert lines[2].startswith("1000000,29,29/1000000,")
    assert run(capsys, "natural-density")[0] == 2


def test_figure_data(capsys):
    code, out, _ = run(capsys, "figure-data", "5")
    lines = out.splitlines()
    assert code == 0 and lines[0] == "k,fib_k,fib_k_fib_k1,product_norm_exact,product_norm"
    assert lines[1].split(",")[3] == "1"
    assert lines[3].split(",")[3] == "3/2"
    assert run(capsys, "figure-data", "5", "--prec", "16")[0] == 2


@pytest.mark.parametrize("argv", [
    ["density-table", "12"], ["ratios", "10"], ["claims", "--id", "thm41,lemma35"],
    ["gf", "--kind", "product", "--lambda", "3"], ["index"],
])
def test_json_round_trip_and_determinism(capsys, argv):
    _, first, _ = run(capsys, *argv, "--format", "json")
    _, second, _ = run(capsys, *argv, "--format", "json")
    assert first == second
    doc = json.loads(first)
    assert set(doc) == {"meta", "rows"}
    assert doc["meta"]["version"]
    again = json.dumps(doc, indent=2)
    assert json.loads(again) == doc
    assert json.dumps(json.loads(again), indent=2) == again


def test_tsv_and_out_file(capsys, tmp_path):
    target = tmp_path / "t.tsv"
    code, out, _ = run(capsys, "density-table", "3", "--format", "tsv", "--out", str(target))
    assert code == 0 and out == ""
    assert target.read_text().splitlines()[0] == "k\tm\tn\tDF_m\tDF_n"
    assert b"\r\n" not in target.read_bytes()


def test_decimals_validation(capsys):
    assert run(capsys, "ratios", "5", "--decimals", "31")[0] == 2


def test_parse_range():
    assert parse_range("2..5") == (2, 3, 4, 5)
    assert parse_range("1,3") == (1, 3)
    assert parse_range("7") == (7,)


def test_module_entry_point():
    done = subprocess.run([sys.executable, "-m", "fibdense", "word", "4"],
                          capture_output=True, text=True, check=False)
    assert done.returncode == 0 and done.stdout == "10110\n"
