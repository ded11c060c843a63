import io
import logging

import pytest

from treelike.cli import argument_parser, main
from treelike.lib.core.constants import EXIT_OK, EXIT_USAGE


@pytest.fixture(autouse=True)
def restore_logging():
    root = logging.getLogger()
    handlers, level = root.handlers[:], root.level
    yield
    root.handlers[:] = handlers
    root.setLevel(level)


def run(capsys, monkeypatch, argv, stdin=""):
    monkeypatch.setattr("sys.stdin", io.StringIO(stdin))
    code = main(argv)
    return code, capsys.readouterr().out


def test_gen(capsys, monkeypatch):
    assert run(capsys, monkeypatch, ["gen", "--size", "2"]) == (EXIT_OK, "1\n1\n\n11\n")
    code, out = run(capsys, monkeypatch, ["gen", "--size", "5", "--limit", "3"])
    assert code == EXIT_OK
    assert len(out.strip().split("\n\n")) == 3


def test_sym_gen(capsys, monkeypatch):
    code, out = run(capsys, monkeypatch, ["sym-gen", "--size", "3"])
    assert code == EXIT_OK
    assert sorted(out.strip().split("\n\n")) == ["11\n1", "11\n10"]
    assert run(capsys, monkeypatch, ["sym-gen", "--size", "4"])[0] == EXIT_USAGE


def test_budget_and_overrides(capsys, monkeypatch):
    assert run(capsys, monkeypatch, ["gen", "--size", "9"]) == (EXIT_USAGE, "")
    code, out = run(capsys, monkeypatch,
                    ["gen", "--size", "9", "--limit", "1", "budget.max_size", "9"])
    assert code == EXIT_OK
    assert out == "1\n" * 9


def test_stats(capsys, monkeypatch):
    assert run(capsys, monkeypatch, ["stats", "--size", "3", "--stat", "rows"]) == \
        (EXIT_OK, "1\t1\n2\t4\n3\t1\n")
    assert run(capsys, monkeypatch, ["stats", "--size", "3", "--sym", "--stat", "diag"]) == \
        (EXIT_OK, "1\t1\n2\t1\naverage\t3/2\n")
    code, out = run(capsys, monkeypatch, ["stats", "--size", "3"])
    assert code == EXIT_OK
    assert out.startswith("count\ttotal\t6\n")
    assert run(capsys, monkeypatch, ["stats", "--size", "3", "--stat", "diag"])[0] == \
        EXIT_USAGE


def test_verify(capsys, monkeypatch):
    code, out = run(capsys, monkeypatch, ["verify", "--max", "3", "--sym-max", "2"])
    assert code == EXIT_OK
    lines = out.splitlines()
    assert lines[0] == "check\tn\tstatus\texpected\tactual\tnote"
    assert not [line for line in lines if "\tFAIL\t" in line]


@pytest.mark.parametrize("args,stdin,expected", [
    (["--via", "phi1", "--dir", "to-perm"], "111\n100\n010\n", "3,4,1,5,2\n"),
    (["--via", "phi1", "--dir", "to-tab"], "34152", "111\n100\n010\n"),
    (["--via", "phi2", "--dir", "to-tab"], "2,1", "1\n1\n"),
    (["--via", "phi2", "--dir", "to-perm"], "11\n10", "3,1,2\n"),
    (["--via", "xi", "--dir", "to-partition"], "11\n10", "1\n"),
    (["--via", "xi", "--dir", "to-square"], "1", "11\n10\n"),
])
def test_map(capsys, monkeypatch, args, stdin, expected):
    assert run(capsys, monkeypatch, ["map"] + args, stdin) == (EXIT_OK, expected)


@pytest.mark.parametrize("args,stdin", [
    (["--via", "xi", "--dir", "to-perm"], "11\n10"),
    (["--via", "phi1", "--dir", "to-perm"], "10\n01"),
    (["--via", "phi2", "--dir", "to-tab"], "1,1"),
    (["--via", "xi", "--dir", "to-partition"], "11\n1"),
])
def test_map_errors(capsys, monkeypatch, args, stdin):
    assert run(capsys, monkeypatch, ["map"] + args, stdin) == (EXIT_USAGE, "")


def test_render(capsys, monkeypatch):
    assert run(capsys, monkeypatch, ["render"], "0,1,0,3,1") == \
        (EXIT_OK, "111\n100\n010\n")
    assert run(capsys, monkeypatch, ["render", "--sym"], "") == (EXIT_OK, "1\n")
    assert run(capsys, monkeypatch, ["render", "--sym"], "0:+") == (EXIT_OK, "11\n1\n")
    assert run(capsys, monkeypatch, ["render", "--sym"], "0:-") == (EXIT_OK, "11\n10\n")
    assert run(capsys, monkeypatch, ["render"], "0,2")[0] == EXIT_USAGE


def test_configuration_errors(capsys, monkeypatch, tmp_path):
    missing = str(tmp_path / "missing.yaml")
    assert run(capsys, monkeypatch, ["gen", "--size", "2", "--config", missing])[0] == \
        EXIT_USAGE
    assert run(capsys, monkeypatch, ["gen", "--size", "2", "budget.colors", "1"])[0] == \
        EXIT_USAGE


def test_argument_errors():
    with pytest.raises(SystemExit):
        argument_parser().parse_args(["gen"])
    with pytest.raises(SystemExit):
        argument_parser().parse_args(["map", "--via", "phi3", "--dir", "to-tab"])
