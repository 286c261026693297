"""
Tests for the command-line frontend
"""

import io
import json

import pytest

from nlmlkit.src.cli.main import EXIT_DOMAIN, EXIT_OK, EXIT_USAGE, main


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = main(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


@pytest.fixture
def cli(lexicon_path, store_path):
    """Runs a subcommand against the demo lexicon and a scratch store"""
    def invoke(*argv):
        return run(*argv, "--lexicon", lexicon_path, "--store", store_path)
    return invoke


def test_parse_prints_nlml(cli, golden):
    code, out, _ = cli("parse", "I come.")
    assert code == EXIT_OK
    assert out == golden["i_come"] + "\n"


def test_parse_tree(cli):
    code, out, _ = cli("parse", "I come.", "--format", "tree")
    assert code == EXIT_OK
    assert out.splitlines()[0] == "mood: statement"


def test_parse_json_lines_all(cli):
    code, out, _ = cli("parse", "that book on the desk.", "--format", "json-lines", "--all")
    assert code == EXIT_OK
    rows = [json.loads(line) for line in out.splitlines()]
    assert rows[0]["mood"] == "np"
    assert rows[0]["penalty"] == 10
    assert len(rows) >= 1


def test_parse_no_parse(cli):
    code, out, err = cli("parse", "zzzz qqq")
    assert code == EXIT_DOMAIN
    assert out == ""
    assert err.startswith("error: NoParse:")


def test_validate_ok(cli, golden):
    code, out, _ = cli("validate", golden["if_it_rains"])
    assert code == EXIT_OK
    assert out.strip() == "ok"


def test_validate_reports_violations(cli):
    code, out, _ = cli("validate", "<mood>banana</mood>")
    assert code == EXIT_DOMAIN
    assert "banana" in out


def test_validate_syntax_error(cli):
    code, _, err = cli("validate", "<mood>statement</complexity>")
    assert code == EXIT_DOMAIN
    assert "UnbalancedTag" in err


def test_transform_negate_with_text(cli):
    code, out, _ = cli("transform", "negate", "I come", "--text")
    assert code == EXIT_OK
    lines = out.splitlines()
    assert lines[0].startswith("<mood>statement</mood>")
    assert "<verb_word>do not</verb_word>" in lines[0]
    assert lines[1] == "I do not come ."


def test_transform_to_question(cli):
    code, out, _ = cli("transform", "to-question", "I come", "--text")
    assert code == EXIT_OK
    assert out.splitlines()[1] == "Do I come ?"


def test_transform_unsupported_mood(cli):
    code, _, err = cli("transform", "to-statement", "Which book will you buy?")
    assert code == EXIT_DOMAIN
    assert "UnsupportedMood" in err


def test_answer(cli):
    code, out, _ = cli("answer", "verb_word", "1", "If it rains today, you will not go, and I will not come.")
    assert code == EXIT_OK
    assert out == "come\n"


def test_answer_index_out_of_range(cli):
    code, _, err = cli("answer", "subject", "5", "I come.")
    assert code == EXIT_DOMAIN
    assert "IndexOutOfRange" in err


def test_db_put_get_query(cli, golden):
    code, out, _ = cli("db", "put", golden["i_come"])
    assert code == EXIT_OK
    assert out == "1\n"
    assert cli("db", "put", "Which book will you buy?")[1] == "2\n"

    code, out, _ = cli("db", "get", "1")
    assert code == EXIT_OK
    assert out == golden["i_come"] + "\n"

    code, out, _ = cli("db", "query", "question")
    assert code == EXIT_OK
    assert len(out.splitlines()) == 1
    assert out.startswith("2\tquestion\t")

    code, out, _ = cli("db", "rebuild")
    assert out.splitlines() == ["I come .", "Which book will you buy ?"]


def test_db_get_json(cli, golden):
    cli("db", "put", golden["i_come"])
    code, out, _ = cli("db", "get", "1", "--format", "json-lines")
    assert code == EXIT_OK
    assert json.loads(out)["class"] == "fact"


def test_db_missing_key(cli):
    code, _, err = cli("db", "get", "9")
    assert code == EXIT_DOMAIN
    assert "KeyNotFound" in err


def test_db_unclassifiable(cli):
    code, _, err = cli("db", "put", "What a pity!")
    assert code == EXIT_DOMAIN
    assert "Unclassifiable" in err


def test_missing_lexicon(tmp_path):
    code, _, err = run("parse", "I come.", "--lexicon", str(tmp_path / "missing.lex"))
    assert code == EXIT_USAGE
    assert err.startswith("error:")


def test_malformed_lexicon(tmp_path):
    path = tmp_path / "bad.lex"
    path.write_text("book\tbook\tgerund\n", encoding="utf-8")
    code, _, err = run("parse", "book", "--lexicon", str(path))
    assert code == EXIT_USAGE
    assert "MalformedLine" in err


def test_bad_log_level(lexicon_path):
    code, _, err = run("parse", "I come.", "--lexicon", lexicon_path, "--log-level", "chatty")
    assert code == EXIT_USAGE
    assert "ConfigError" in err


def test_lexicon_from_environment(monkeypatch, lexicon_path, golden):
    monkeypatch.setenv("NLMLKIT_LEXICON", lexicon_path)
    code, out, _ = run("parse", "I come.")
    assert code == EXIT_OK
    assert out == golden["i_come"] + "\n"


def test_usage_error():
    code, _, _ = run("frobnicate")
    assert code == EXIT_USAGE


def test_db_options_before_subcommand(lexicon_path, tmp_path, golden):
    store = str(tmp_path / "early.tsv")
    code, out, _ = run("db", "--store", store, "--lexicon", lexicon_path, "put", "I come.")
    assert code == EXIT_OK
    assert out == "1\n"
    code, out, _ = run("db", "--store", store, "get", "1")
    assert code == EXIT_OK
    assert out == golden["i_come"] + "\n"


def test_subcommand_option_wins(lexicon_path, tmp_path):
    outer, inner = str(tmp_path / "outer.tsv"), str(tmp_path / "inner.tsv")
    code, _, _ = run("db", "--store", outer, "put", "--store", inner, "--lexicon", lexicon_path, "I come")
    assert code == EXIT_OK
    with open(inner, encoding="utf-8") as handle:
        assert handle.read().startswith("1\tfact\t")


def test_transform_flag_before_input(lexicon_path):
    code, out, _ = run("transform", "to-question", "--lexicon", lexicon_path, "--text", "I come")
    assert code == EXIT_OK
    assert out.splitlines()[1] == "Do I come ?"


def test_parse_option_before_text(lexicon_path, golden):
    code, out, _ = run("parse", "--lexicon", lexicon_path, "I come.")
    assert code == EXIT_OK
    assert out == golden["i_come"] + "\n"


def test_surplus_positional_is_usage_error(lexicon_path):
    code, _, _ = run("transform", "negate", "--lexicon", lexicon_path, "I come", "I go")
    assert code == EXIT_USAGE
