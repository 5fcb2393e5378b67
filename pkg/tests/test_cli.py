import io
import json
from pathlib import Path

import pytest

from comparatives.cli import main
from comparatives.termio import read_term, show

FIXTURES = Path(__file__).parent / "fixtures"
STANDARD = "George owns a faster car than Bill"


def run(*argv):
    out = io.StringIO()
    status = main(list(argv), out=out)
    return status, out.getvalue()


def rows(text, kind):
    return [line.split("\t")[1:] for line in text.splitlines() if line.split("\t")[0] == kind]


def test_parse():
    status, out = run("parse", STANDARD)
    assert status == 0
    assert out.splitlines() == [
        "[1] WRA [IP George owns [NP [NP a faster car] [PP than Bill]]]",
        "[2] NRA [IP George owns [NP [NP a faster car] [PP than [SC WH Bill]]]]",
    ]


def test_judge():
    assert run("judge", "George owns every faster car than Bill")[1].startswith("bad\t")
    assert run("judge", STANDARD)[1].startswith("ok\t")


def test_eval_standard_sentence_in_m0():
    status, out = run("eval", STANDARD, "--model", "M0", "--format", "machine")
    assert status == 0
    assert rows(out, "truth") == [["1", "WH>NP", "true"], ["2", "direct", "true"]]
    assert rows(out, "note") == [["2", "direct", "b* has no speed"]]


def test_eval_predicative_with_model_file(tmp_path):
    path = tmp_path / "rich.json"
    path.write_text(json.dumps({"entities": ["g", "b"], "measures": {"wealth": {"g": 5, "b": 3}},
                                "constants": {"g*": "g", "b*": "b"}}))
    status, out = run("eval", "George is richer than Bill", "--model", str(path), "--format", "machine")
    assert status == 0 and rows(out, "truth") == [["1", "direct", "true"]]


def test_bad_sentence_is_reported_but_not_composed():
    status, out = run("lf", "George owns every faster car than Bill", "--format", "machine")
    assert status == 0
    assert [r[1] for r in rows(out, "judgment")] == ["bad", "bad"]
    assert rows(out, "reading") == []
    assert len(rows(out, "skipped")) == 2
    status, forced = run("lf", "George owns every faster car than Bill", "--force", "--format", "machine")
    assert status == 0 and rows(forced, "reading")


def test_machine_readings_round_trip():
    _, out = run("lf", "George owns a faster car than Bill or Richard", "--format", "machine", "--trace")
    forms = [r[-1] for r in rows(out, "reading")] + [r[-1] for r in rows(out, "step")]
    assert len(rows(out, "reading")) == 2
    for text in forms:
        assert show(read_term(text)) == text


def test_derivation_lines_match_fixture():
    _, out = run("lf", STANDARD, "--derivation", "--format", "machine")
    lines = [r[1] for r in rows(out, "derivation")]
    assert "\n".join(lines) + "\n" == (FIXTURES / "lf_standard.txt").read_text(encoding="utf-8")


def test_baseline():
    status, out = run("baseline", "heim", "George owns at least two faster cars than Bill", "--model", "Mdagger",
                      "--format", "machine")
    assert status == 0
    heim = rows(out, "heim")
    assert heim[0][-1] == "true"
    assert rows(out, "reading")[0][-1] == "false"


def test_access():
    _, out = run("access", STANDARD, "--format", "machine")
    assert [r[2] for r in rows(out, "accessible")] == ["x", "x"]
    assert [r[2] for r in rows(out, "inaccessible")] == ["y"]


def test_corpus():
    status, out = run("judge", "--corpus", "--format", "machine")
    assert status == 0
    assert len(rows(out, "sentence")) == len(rows(out, "judgment")) > 20


def test_output_is_deterministic():
    args = ("lf", "George owns a faster car than Bill or Richard", "--trace", "--derivation")
    assert run(*args) == run(*args)
    args = ("eval", "--corpus", "--model", "M3", "--format", "machine")
    assert run(*args) == run(*args)
    assert run("access", "--corpus") == run("access", "--corpus")


@pytest.mark.parametrize("argv,status", [
    (("parse", "George eats a car"), 1),
    (("parse", "owns George"), 1),
    (("lf", "George is richer than last year"), 1),
    (("parse",), 1),
    (("eval", STANDARD, "--model", "no/such/model.json"), 2),
    (("eval", STANDARD, "--model", "M99"), 2),
])
def test_exit_codes(argv, status):
    assert run(*argv)[0] == status


def test_malformed_model_file(tmp_path):
    path = tmp_path / "bad.json"
    path.write_text("{not json")
    assert run("eval", STANDARD, "--model", str(path))[0] == 2


def test_evaluation_error_exit(tmp_path):
    path = tmp_path / "sparse.json"
    path.write_text(json.dumps({"entities": ["g", "c"], "sorts": {"car": ["c"]}, "measures": {"speed": {"c": 1}},
                                "constants": {"g*": "g"}}))
    status, out = run("eval", STANDARD, "--model", str(path))
    assert status == 2 and "error:" in out


def test_missing_corpus_file(tmp_path):
    assert run("judge", "--corpus", str(tmp_path / "none.tsv"))[0] == 1
