import logging

import pytest

from treelike.lib.core.config import check_budget, default_config, load_config
from treelike.lib.core.errors import BudgetExceededError


def test_defaults():
    cfg = load_config()
    assert cfg == default_config
    assert cfg.is_frozen()
    assert (cfg.budget.max_size, cfg.budget.max_sym_half_size) == (8, 6)
    assert cfg.parallel.n_jobs == 1


def test_overrides(caplog):
    with caplog.at_level(logging.WARNING):
        cfg = load_config(overrides=["budget.max_size", "9", "parallel.n_jobs", "2"])
    assert (cfg.budget.max_size, cfg.parallel.n_jobs) == (9, 2)
    assert "budget.max_size" in caplog.text
    assert default_config.budget.max_size == 8


def test_lowering_a_budget_is_silent(caplog, tmp_path):
    path = tmp_path / "small.yaml"
    path.write_text("budget:\n  max_size: 5\nparallel:\n  prefix_depth: 2\n")
    with caplog.at_level(logging.WARNING):
        cfg = load_config(path)
    assert (cfg.budget.max_size, cfg.parallel.prefix_depth) == (5, 2)
    assert not caplog.records


def test_file_then_overrides(tmp_path):
    path = tmp_path / "cfg.yaml"
    path.write_text("budget:\n  max_size: 5\n")
    assert load_config(path, ["budget.max_size", "6"]).budget.max_size == 6


def test_unknown_keys(tmp_path):
    with pytest.raises(AssertionError):
        load_config(overrides=["budget.max_depth", "3"])
    path = tmp_path / "bad.yaml"
    path.write_text("colors: true\n")
    with pytest.raises(KeyError):
        load_config(path)


def test_check_budget():
    assert check_budget(default_config, "max_size", 8, "tableaux of size") == 8
    with pytest.raises(BudgetExceededError) as info:
        check_budget(default_config, "max_size", 9, "tableaux of size")
    assert (info.value.requested, info.value.limit) == (9, 8)
    assert "budget.max_size" in str(info.value)
