import pytest

from eventspan.cli import main

from conftest import FIXTURES


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_classify_fixture(capsys):
    code, out, _ = run(capsys, "classify", "--model", str(FIXTURES / "fig05a.model"))
    assert code == 0
    assert out == "(PICK-UP MOVING RED GREEN)@{[[0,1],[14,22]]}\n"


def test_classify_non_event(capsys):
    code, out, _ = run(capsys, "classify", "--model", str(FIXTURES / "fig35a.model"))
    assert (code, out) == (0, "")


def test_classify_event_and_object_filters(capsys):
    model = str(FIXTURES / "fig23.model")
    _, out, _ = run(capsys, "classify", "--model", model, "--events", "MOVE")
    assert out.startswith("(MOVE MOVING RED GREEN BLUE)") and out.count("\n") == 1
    _, out, _ = run(capsys, "classify", "--model", model, "--objects", "MOVING,RED,GREEN")
    assert out == "(PICK-UP MOVING RED GREEN)@{[[0,9],[17,46]]}\n"


def test_eval_primitive(capsys):
    code, out, _ = run(capsys, "eval", "--model", str(FIXTURES / "fig05a.model"),
                       "--expr", "SUPPORTS?(GREEN,RED)")
    assert (code, out) == (0, "{[[0:14]]}\n")


def test_eval_literal_shows_openness(capsys):
    code, out, _ = run(capsys, "eval", "--model", str(FIXTURES / "fig05a.model"), "--literal",
                       "--show-openness", "--expr", "SUPPORTS?(GREEN,RED) ; SUPPORTS?(MOVING,RED)")
    assert (code, out) == (0, "{}\n")


def test_custom_lexicon(capsys, tmp_path):
    lex = tmp_path / "verbs.lex"
    lex.write_text("DEFINE RESTS(x, y) = SUPPORTS?(y, x)\n")
    _, out, _ = run(capsys, "classify", "--model", str(FIXTURES / "fig05a.model"),
                    "--lexicon", str(lex), "--objects", "RED,GREEN")
    assert out == "(RESTS RED GREEN)@{[[0:14]]}\n"


def test_filter_writes_model(capsys, tmp_path):
    raw = tmp_path / "raw.txt"
    raw.write_text("SUPPORTED? RED 0 1111011111\nSUPPORTS? GREEN RED 0 1111100000\n")
    out = tmp_path / "model.txt"
    assert run(capsys, "filter", "--raw", str(raw), "--out", str(out))[0] == 0
    assert out.read_text() == "(SUPPORTED? RED)@{[[0:10]]}\n(SUPPORTS? GREEN RED)@{[[0:5]]}\n"


@pytest.mark.parametrize("argv", [["classify", "--model", "missing.model"],
                                  ["eval", "--model", "{bad}", "--expr", "A"]])
def test_errors_exit_nonzero(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code != 0 and err.startswith("error:")


def test_parse_error_exit(capsys, tmp_path):
    bad = tmp_path / "bad.model"
    bad.write_text("(P A)@{[[0:1]")
    code, _, err = run(capsys, "classify", "--model", str(bad))
    assert code == 2 and "line 1" in err


def test_selftest_small_grid(capsys):
    code, out, _ = run(capsys, "selftest", "--grid", "2")
    assert "normalize: exact" in out and "complement: exact" in out
    assert code == 0
