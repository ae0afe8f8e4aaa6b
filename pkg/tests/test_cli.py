"""End-to-end tests of the command-line surface."""

import contextlib
import io
import json

import pytest

from webkup.cli import main
from webkup.webs import LadderWeb, Slice, close


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    with contextlib.redirect_stdout(out), contextlib.redirect_stderr(err):
        try:
            code = main(list(argv))
        except SystemExit as exc:  # argparse usage failures
            code = exc.code
    return code, out.getvalue(), err.getvalue()


CIRCLE = LadderWeb((0, 3), (Slice("+", 1), Slice("-", 1)))
TRIPOD = LadderWeb((3, 0, 0), (Slice("-", 1), Slice("-", 2), Slice("-", 1)))


@pytest.fixture
def circle_file(tmp_path):
    p = tmp_path / "circle.json"
    p.write_text(json.dumps(CIRCLE.to_json()))
    return str(p)


def test_enumerate_single_web():
    code, out, _ = run("enumerate", "+-")
    assert code == 0
    lines = out.strip().splitlines()
    assert len(lines) == 1
    key, blob = lines[0].split(" ", 1)
    assert key == "1m"
    assert LadderWeb.from_json(json.loads(blob)) == LadderWeb((0, 3), (Slice("+", 1),))


def test_enumerate_json_payload():
    code, out, _ = run("enumerate", "+++---", "--json")
    assert code == 0
    doc = json.loads(out)
    assert doc["signs"] == "+++---"
    assert len(doc["webs"]) == 6


def test_eval_circle(circle_file):
    code, out, _ = run("eval", "--closed", circle_file)
    assert (code, out.strip()) == (0, "q^2 + 1 + q^-2")
    code, out, _ = run("eval", "--closed", circle_file, "--q1")
    assert (code, out.strip()) == (0, "3")
    code, out, _ = run("eval", "--closed", circle_file, "--route", "both")
    assert (code, out.strip()) == (0, "q^2 + 1 + q^-2")


def test_eval_rejects_open_web(tmp_path):
    p = tmp_path / "open.json"
    p.write_text(json.dumps(LadderWeb((0, 3), (Slice("+", 1),)).to_json()))
    code, _, err = run("eval", "--closed", str(p))
    assert code == 2
    assert "closed" in err


def test_eval_missing_file():
    code, _, err = run("eval", "--closed", "/does/not/exist.json")
    assert code == 2 and "cannot read" in err


def test_expand_web_file(tmp_path):
    p = tmp_path / "tripod.json"
    p.write_text(json.dumps(TRIPOD.to_json()))
    code, out, _ = run("expand", str(p))
    assert code == 0
    doc = json.loads(out)
    assert doc["10m"] == "1"
    assert doc["m01"] == "q^-3"
    assert set(doc) == {"10m", "1m0", "01m", "0m1", "m01", "m10"}
    code, out, _ = run("expand", str(p), "--q1")
    assert json.loads(out)["m10"] == 1


def test_expand_boundary_matrix():
    code, out, _ = run("expand", "--boundary", "+-")
    assert code == 0
    doc = json.loads(out)
    assert doc == {"1m": {"1m": "1", "00": "q^-1", "m1": "q^-2"}}


def test_expand_wants_exactly_one_input(circle_file):
    code, _, err = run("expand")
    assert code == 2
    code, _, err = run("expand", circle_file, "--boundary", "+-")
    assert code == 2


def test_dualcan_output():
    code, out, _ = run("dualcan", "+-")
    assert code == 0
    doc = json.loads(out)
    assert doc["elements"]["1m"] == {"1m": "1", "00": "q^-1", "m1": "q^-2"}
    assert doc["d_matrix"] == {}


def test_howe_verify():
    code, out, _ = run("howe-verify", "--k", "3")
    assert code == 0
    assert "536 relation instances hold: PASS" in out


def test_center_dim():
    assert run("center-dim", "+++") == (0, "6\n", "")
    assert run("center-dim", "+-")[1] == "3\n"


def test_blocks():
    code, out, _ = run("blocks", "+-")
    doc = json.loads(out)
    assert doc["multiplicities"] == {"1m": 1, "00": 1, "m1": 1}
    assert doc["sum_of_squares"] == 3


def test_tableau():
    code, out, _ = run("tableau", "++-+--", "1100mm")
    assert code == 0
    doc = json.loads(out)
    assert doc["columns"] == {"1": [1, 2, 3], "0": [4, 5, 6], "-1": [3, 5, 6]}
    assert doc["rows"] == [[1, 4, 3], [2, 5, 5], [3, 6, 6]]
    assert doc["balanced"] and not doc["semistandard"]


def test_tableau_unbalanced_has_no_rows():
    code, out, _ = run("tableau", "+-", "11")
    doc = json.loads(out)
    assert doc["rows"] is None and not doc["balanced"]


def test_inverse_growth_json_and_pretty():
    code, out, _ = run("inverse-growth", "+++", "10m")
    assert code == 0
    word = json.loads(out)
    assert word == [
        {"sign": "-", "index": 1, "power": 1},
        {"sign": "-", "index": 2, "power": 1},
        {"sign": "-", "index": 1, "power": 1},
    ]
    code, out, _ = run("inverse-growth", "+++", "10m", "--pretty")
    assert out.strip() == "1_(1,1,1) E_{-1} E_{-2} E_{-1} 1_(3,0,0)"


def test_inverse_growth_rejects_non_dominant():
    code, _, err = run("inverse-growth", "+++", "m01")
    assert code == 2 and "not dominant" in err


def test_search_counterexample_small():
    code, out, _ = run("search-counterexample", "--max-strands", "3",
                       "--budget-s", "30")
    assert code == 0
    assert "no counterexample found" in out
    assert "complete" in out


def test_render_to_file(tmp_path):
    out_path = tmp_path / "w.svg"
    code, _, _ = run("render", "+++", "10m", "-o", str(out_path))
    assert code == 0
    svg = out_path.read_text()
    assert svg.startswith("<svg") and svg.rstrip().endswith("</svg>")
    assert 'class="fl"' in svg  # canonical flow overlay present
    code, _, _ = run("render", "+++", "10m", "-o", str(out_path), "--no-flow")
    assert 'class="fl"' not in out_path.read_text()


def test_render_web_file(tmp_path, circle_file):
    code, out, _ = run("render", "--web", circle_file)
    assert code == 0 and out.startswith("<svg")


def test_render_usage_errors():
    assert run("render")[0] == 2
    assert run("render", "+++")[0] == 2  # boundary without state


def test_bad_sign_and_state_strings():
    assert run("center-dim", "+*-")[0] == 2
    assert run("tableau", "+-", "12")[0] == 2
    assert run("nonsense")[0] == 2


def test_selftest_subset_and_bad_only():
    code, out, _ = run("selftest", "--only", "2")
    assert code == 0
    assert out.count("AC02 PASS") == 1
    assert run("selftest", "--only", "99")[0] == 2
    assert run("selftest", "--only", "two")[0] == 2


def test_cache_flag_byte_identical(tmp_path, monkeypatch):
    monkeypatch.setenv("WEBKUP_CACHE", str(tmp_path))
    first = run("dualcan", "++--", "--cache")
    again = run("dualcan", "++--", "--cache")
    plain = run("dualcan", "++--")
    assert first == again == plain
    assert (tmp_path / "dualcan" / "S_++--.json").exists()
