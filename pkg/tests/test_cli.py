import json

import pytest
import yaml

from moserpoly.__main__ import main
from moserpoly.cli import load_config
from moserpoly.cli import parse_args
from moserpoly.cli import resolve_settings
from moserpoly.errors import EXIT_INVALID
from moserpoly.errors import EXIT_OK
from moserpoly.errors import EXIT_SIZE
from moserpoly.errors import EXIT_UNSOLVABLE
from moserpoly.errors import EXIT_VERIFICATION
from moserpoly.errors import InvalidArgumentError


def run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr().out


def run_json(capsys, *argv):
    code, out = run(capsys, *argv, "--format", "json")
    return code, json.loads(out) if out else None


@pytest.fixture
def multiset_file(tmp_path):

    def write(content, name="input.json"):
        path = tmp_path / name
        path.write_text(content)
        return str(path)

    return write


@pytest.fixture(autouse=True)
def clean_environment(monkeypatch, tmp_path):
    for key in ("MOSERPOLY_FORMAT", "MOSERPOLY_SEED", "MOSERPOLY_TOL",
                "MOSERPOLY_TRIALS", "MOSERPOLY_WORKERS"):
        monkeypatch.delenv(key, raising=False)
    # Keep a developer's .env out of the tests
    monkeypatch.chdir(tmp_path)


def test_eulerian_table_plain(capsys):
    code, out = run(capsys, "table", "eulerian", "--rows", "8", "--format",
                    "plain")
    assert code == EXIT_OK
    lines = out.splitlines()
    assert len(lines) == 8
    assert lines[0] == "1"
    assert lines[3] == "1 11 11 1"
    assert lines[7] == "1 247 4293 15619 15619 4293 247 1"


def test_eulerian_table_json(capsys):
    code, document = run_json(capsys, "table", "eulerian", "--rows", "8")
    assert code == EXIT_OK
    assert document["rows"][7] == {
        "n": 8,
        "values": ["1", "247", "4293", "15619", "15619", "4293", "247", "1"]
    }
    assert sum(len(row["values"]) for row in document["rows"]) == 36


def test_stirling2_table_csv(capsys):
    code, out = run(capsys, "table", "stirling2", "--rows", "5", "--format",
                    "csv")
    assert code == EXIT_OK
    lines = out.splitlines()
    assert lines[0] == "n,m,value"
    assert "4,2,7" in lines


def test_moser_table(capsys):
    code, document = run_json(capsys, "table", "moser", "--s", "2", "--k-max",
                              "4", "--n", "4")
    assert code == EXIT_OK
    assert document["values"] == [
        {"k": 1, "value": "3"},
        {"k": 2, "value": "2"},
        {"k": 3, "value": "0"},
        {"k": 4, "value": "-4"},
    ]


def test_solvability_table(capsys):
    code, out = run(capsys, "table", "solvability", "--rows", "4", "--format",
                    "csv")
    assert code == EXIT_OK
    assert "4,2,false,3" in out.splitlines()
    assert "4,3,true," in out.splitlines()


@pytest.mark.parametrize("argv", [
    ["table", "eulerian", "--rows", "65"],
    ["table", "moser", "--s", "2", "--n", "4"],
    ["table", "moser", "--s", "0", "--k-max", "3", "--n", "4"],
])
def test_table_rejects_bad_params(capsys, argv):
    code, out = run(capsys, *argv)
    assert code == EXIT_INVALID
    assert out == ""


@pytest.mark.parametrize("argv, expected", [
    (["--s", "2", "--k", "5", "--x", "5"], "-11"),
    (["--s", "1", "--k", "9", "--x", "7/2"], "1"),
    (["--s", "2", "--k", "2", "--x", "4", "--form", "stirling1"], "2"),
    (["--s", "2", "--k", "2", "--x", "4", "--form", "stirling2"], "2"),
    (["--s", "2", "--k", "5", "--x", "5", "--form", "eulerian"], "-11"),
])
def test_eval(capsys, argv, expected):
    code, out = run(capsys, "eval", *argv, "--format", "plain")
    assert code == EXIT_OK
    assert out.strip() == expected


def test_eval_coefficients(capsys):
    code, document = run_json(capsys, "eval", "--s", "3", "--k", "2",
                              "--normalized")
    assert code == EXIT_OK
    assert document["coefficients"] == ["6", "-5", "1"]

    code, document = run_json(capsys, "eval", "--s", "3", "--k", "2")
    assert document["coefficients"] == ["3", "-5/2", "1/2"]


def test_eval_rejects_bad_rational(capsys):
    code, out = run(capsys, "eval", "--s", "2", "--k", "2", "--x", "1/0")
    assert code == EXIT_INVALID
    assert out == ""


def test_qpoly(capsys):
    code, document = run_json(capsys, "qpoly", "--s", "2", "--k", "2", "--n",
                              "4")
    assert code == EXIT_OK
    assert document == {
        "s": 2,
        "k": 2,
        "n": 4,
        "terms": [
            {"partition": [2], "coeff": "2"},
            {"partition": [1, 1], "coeff": "1"},
        ],
    }

    code, document = run_json(capsys, "qpoly", "--s", "1", "--k", "3", "--n",
                              "5")
    assert document["terms"] == [{"partition": [3], "coeff": "1"}]


def test_qpoly_rejects_k_above_n(capsys):
    code, _ = run(capsys, "qpoly", "--s", "2", "--k", "3", "--n", "2")
    assert code == EXIT_INVALID


@pytest.mark.parametrize("content, s, expected", [
    ("[0, 1, 2]", 2, "1,2,3"),
    ("1\n4\n5\n6\n", 2, "5,6,7,9,10,11"),
    ("[\"1/2\", \"1/3\"]", 2, "5/6"),
])
def test_sums(capsys, multiset_file, content, s, expected):
    code, out = run(capsys, "sums", multiset_file(content), "--s", str(s),
                    "--format", "plain")
    assert code == EXIT_OK
    assert out.strip() == expected


def test_sums_size_error(capsys, multiset_file):
    code, out = run(capsys, "sums", multiset_file("[1, 2]"), "--s", "3")
    assert code == EXIT_SIZE
    assert out == ""


@pytest.mark.parametrize("content", ["[1, 2.5]", "[1, \"a/b\"]"])
def test_sums_parse_error(capsys, multiset_file, content):
    code, _ = run(capsys, "sums", multiset_file(content), "--s", "1")
    assert code == EXIT_INVALID


def test_sums_missing_file(capsys, tmp_path):
    code, _ = run(capsys, "sums", str(tmp_path / "missing.json"), "--s", "1")
    assert code == EXIT_INVALID


def test_recover(capsys, multiset_file):
    path = multiset_file("[3, 4, 5, 5, 6, 7, 7, 8, 9, 10]")
    code, document = run_json(capsys, "recover", path, "--n", "5", "--s", "2")
    assert code == EXIT_OK
    assert document["mode"] == "exact"
    assert document["multiset"] == ["1", "2", "3", "4", "6"]
    assert document["power_sums"] == ["16", "66", "316", "1650", "9156"]


def test_recover_unsolvable(capsys, multiset_file):
    path = multiset_file("[5, 6, 7, 9, 10, 11]")
    code, document = run_json(capsys, "recover", path, "--n", "4", "--s",
                              "2")
    assert code == EXIT_UNSOLVABLE
    assert document["vanishing_k"] == [3]
    assert document["solvable"] is False


def test_recover_wrong_size(capsys, multiset_file):
    code, _ = run(capsys, "recover", multiset_file("[1, 2, 3]"), "--n", "5",
                  "--s", "2")
    assert code == EXIT_INVALID


def test_recover_unrealizable_sums(capsys, multiset_file):
    path = multiset_file("\n".join(["0"] * 9 + ["1"]))
    code, out = run(capsys, "recover", path, "--n", "5", "--s", "2", "--mode",
                    "exact")
    assert code == EXIT_VERIFICATION
    assert out == ""


def test_pairs(capsys):
    code, document = run_json(capsys, "pairs", "--n", "4", "--s", "2",
                              "--range", "7", "--cap", "100000")
    assert code == EXIT_OK
    assert {
        "first": ["1", "4", "5", "6"],
        "second": ["2", "3", "4", "7"]
    } in document["pairs"]

    code, document = run_json(capsys, "pairs", "--n", "5", "--s", "2",
                              "--range", "7")
    assert document["pairs"] == []


def test_verify_recovery_suite(capsys):
    code, document = run_json(capsys, "verify", "--suite", "recovery",
                              "--trials", "2", "--seed", "42")
    assert code == EXIT_OK
    assert document["passed"] is True
    assert [suite["suite"] for suite in document["suites"]] == ["recovery"]


def test_verify_is_deterministic(capsys):
    argv = ["verify", "--suite", "oracle", "--trials", "2", "--seed", "7"]
    first = run(capsys, *argv)
    second = run(capsys, *argv)
    assert first == second
    assert first[0] == EXIT_OK


def test_verify_rejects_bad_seed(capsys):
    code, _ = run(capsys, "verify", "--seed", str(1 << 64))
    assert code == EXIT_INVALID


def test_unknown_command_is_a_usage_error(capsys):
    assert main(["frobnicate"]) == EXIT_INVALID
    assert main(["eval", "--s", "2"]) == EXIT_INVALID


def test_init_writes_template_and_backup(capsys, tmp_path):
    path = tmp_path / "moserpoly.yaml"
    assert main(["init", "--config-path", str(path)]) == EXIT_OK
    template = yaml.safe_load(path.read_text())
    assert template["general"]["format"] == "json"
    assert template["verify"]["trials"] == 25

    assert main(["init", "--config-path", str(path)]) == EXIT_OK
    assert (tmp_path / "moserpoly.yaml.backup").exists()


def test_config_file_sets_defaults(capsys, tmp_path):
    config = tmp_path / "config.json"
    config.write_text(json.dumps({"general": {"format": "plain"}}))
    code, out = run(capsys, "eval", "--s", "2", "--k", "5", "--x", "5",
                    "--config", str(config))
    assert code == EXIT_OK
    assert out == "-11\n"

    code, out = run(capsys, "eval", "--s", "2", "--k", "5", "--x", "5",
                    "--config", str(config), "--format", "csv")
    assert out.splitlines()[0] == "s,k,x,form,value"


def test_missing_config_file(capsys, tmp_path):
    code, _ = run(capsys, "eval", "--s", "2", "--k", "5", "--x", "5",
                  "--config", str(tmp_path / "nope.yaml"))
    assert code == EXIT_INVALID


def test_settings_precedence(tmp_path):
    config = {"general": {"seed": 5, "format": "csv"}, "verify": {"workers": 2}}
    environ = {"MOSERPOLY_SEED": "9", "MOSERPOLY_WORKERS": "4",
               "MOSERPOLY_TRIALS": "3"}

    args = parse_args(["verify", "--seed", "1"])
    settings = resolve_settings(args, config, environ)
    assert settings.seed == 1
    assert settings.format == "csv"
    assert settings.workers == 2
    assert settings.trials == 3
    assert settings.tol == 1e-6

    args = parse_args(["verify"])
    assert resolve_settings(args, config, environ).seed == 5
    assert resolve_settings(args, {}, environ).seed == 9
    assert resolve_settings(args, {}, {}).seed == 0


def test_settings_validation():
    args = parse_args(["verify"])
    with pytest.raises(InvalidArgumentError):
        resolve_settings(args, {"general": {"tol": -1}}, {})
    with pytest.raises(InvalidArgumentError):
        resolve_settings(args, {"recovery": {"mode": "guess"}}, {})
    with pytest.raises(InvalidArgumentError):
        resolve_settings(args, {}, {"MOSERPOLY_SEED": "abc"})


def test_load_yaml_config(tmp_path):
    path = tmp_path / "config.yml"
    path.write_text("recovery:\n  mode: numeric\n")
    assert load_config(str(path)) == {"recovery": {"mode": "numeric"}}
    assert load_config(None) == {}
