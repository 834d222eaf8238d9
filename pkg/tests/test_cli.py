"""Command-line surface: modes, formats, exit codes, round-trips."""

import csv
import io
import json

from click.testing import CliRunner

from sumbounds.cli import main


def run(*args):
    return CliRunner().invoke(main, list(args))


def test_compute_h_fold():
    r = run("compute", "--set", "0,1,3", "--h", "2")
    assert r.exit_code == 0
    assert r.output.strip() == "0 1 2 3 4 6 (|·|=6)"


def test_compute_restricted():
    r = run("compute", "--set", "0,1,3", "--h", "2", "--restricted")
    assert r.output.strip() == "1 3 4 (|·|=3)"


def test_compute_subset_alpha():
    r = run("compute", "--set", "1,2,3", "--subset-sums", "--alpha", "2")
    assert r.output.strip() == "3 4 5 6 (|·|=4)"


def test_compute_bounded():
    r = run("compute", "--set", "1,2,3", "--subset-sums", "--alpha", "1",
            "--bounded")
    assert r.output.strip() == "1 2 3 4 5 (|·|=5)"


def test_compute_sequence():
    r = run("compute", "--values", "1,2", "--mult", "2,1", "--subseq-sums")
    assert r.output.strip() == "1 2 3 4 (|·|=4)"


def test_compute_usage_errors():
    assert run("compute").exit_code == 2
    assert run("compute", "--set", "1,2", "--values", "1,2").exit_code == 2
    assert run("compute", "--set", "1,1,2", "--h", "2").exit_code == 2
    assert run("compute", "--set", "1,2", "--h", "0").exit_code == 2


def test_verify_lemma_json():
    r = run("verify", "--theorem", "SUBSET_MIN_LEMMA_A", "--k", "4",
            "--max-elem", "12")
    assert r.exit_code == 0
    body = json.loads(r.output)
    assert body["counts"]["violation"] == 0
    assert body["equality_witnesses"] == ["1,2,3,4"]
    assert body["version"] == "1"
    # round trip
    assert json.loads(json.dumps(body)) == body


def test_verify_case_insensitive_tag():
    r = run("verify", "--theorem", "subset_min_lemma_a", "--k", "4",
            "--max-elem", "10", "--format", "plain")
    assert r.exit_code == 0
    assert "violation=0" in r.output


def test_verify_bad_tag_exits_2():
    r = run("verify", "--theorem", "NOPE", "--k", "4", "--max-elem", "10")
    assert r.exit_code == 2
    assert "NATHANSON_HFOLD" in r.output


def test_verify_bad_ranges_exit_2():
    r = run("verify", "--theorem", "SUBSET_MIN_LEMMA_A", "--k", "9-3",
            "--max-elem", "10")
    assert r.exit_code == 2
    r = run("verify", "--theorem", "SUBSET_MIN_LEMMA_A", "--k", "4",
            "--max-elem", "10", "--jobs", "0")
    assert r.exit_code == 2


def test_verify_csv_format():
    r = run("verify", "--theorem", "SUBSET_MIN_LEMMA_A", "--k", "4",
            "--max-elem", "12", "--format", "csv")
    rows = list(csv.reader(io.StringIO(r.output)))
    assert rows[0][:6] == ["theorem", "k_min", "k_max", "max_elem",
                           "mult_max", "alpha_policy"]
    assert rows[1][0] == "SUBSET_MIN_LEMMA_A"


def test_verify_out_file(tmp_path):
    out = tmp_path / "report.json"
    r = run("verify", "--theorem", "SUBSET_MIN_LEMMA_A", "--k", "4",
            "--max-elem", "12", "--out", str(out))
    assert r.exit_code == 0
    assert json.loads(out.read_text())["theorem"] == "SUBSET_MIN_LEMMA_A"


def test_catalog_formats():
    r = run("catalog")
    assert r.exit_code == 0
    assert sum(1 for line in r.output.splitlines()
               if line and not line.startswith(" ")) == 28
    r = run("catalog", "--format", "json")
    entries = json.loads(r.output)
    assert len(entries) == 28
    assert {"id", "statement", "hypotheses", "measures",
            "conjecture"} <= set(entries[0])
    r = run("catalog", "--format", "csv")
    assert r.output.splitlines()[0] == "id,statement,hypotheses,measures,conjecture"


def test_tightness():
    r = run("tightness", "--k", "9", "--a-last", "20")
    assert r.exit_code == 0 and "expected 20 measured 20" in r.output
    r = run("tightness", "--k", "9", "--a-last", "13")
    assert r.exit_code == 0
    r = run("tightness", "--k", "5", "--a-last", "10")
    assert r.exit_code == 2
