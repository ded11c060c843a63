import time

import pytest

from treelike.enumeration import verification
from treelike.enumeration.verification import REPLAY_MAX_SIZE, Check, VerificationReport, \
    Verifier, verify
from treelike.lib.core.config import load_config
from treelike.lib.core.errors import BudgetExceededError


def test_small_run_passes():
    report = verify(4, 3)
    assert report.passed, report.to_tsv()
    assert not report.failures
    assert [c.n for c in report.find("count")] == [1, 2, 3, 4]
    assert report.find("crossings_total", 4)[0].actual == 24 * 3 * 2 // 12
    assert report.find("phi2_trees", 4)[0].passed
    assert [c.n for c in report.find("square_count")] == [1, 2, 3]


def test_removals_are_checked_one_step_at_a_time(monkeypatch):
    calls = []
    original = verification.remove_special_point

    def counting(tableau):
        calls.append(tableau.size)
        return original(tableau)

    monkeypatch.setattr(verification, "remove_special_point", counting)
    report = verify(4, 2)
    assert report.passed, report.to_tsv()
    assert sorted(calls) == [2] * 2 + [3] * 6 + [4] * 24
    assert [c.n for c in report.find("history_unwind") if c.status == "pass"] == [2, 3, 4]
    assert [c.n for c in report.find("sym_history_unwind")] == [1, 2]
    assert [c.n for c in report.find("ribbons_sum_to_crossings")] == [2, 3, 4]


def test_full_replay_stops_at_replay_size():
    report = verify(REPLAY_MAX_SIZE + 1, 1)
    assert report.passed, report.to_tsv()
    assert [c.n for c in report.find("history_encode")] == list(range(1, REPLAY_MAX_SIZE + 1))
    assert report.find("history_unwind", REPLAY_MAX_SIZE + 1)[0].passed


def test_tiny_run_records_notes():
    report = verify(1, 1)
    assert report.passed
    notes = [c for c in report.checks if c.status == "info"]
    assert notes
    assert report.find("sym_crossings_average", 0)[0].status == "info"


def test_budgets_are_capped_by_configuration():
    cfg = load_config(overrides=["budget.max_bijection_size", "2",
                                 "budget.max_square_half_size", "1"])
    report = verify(3, 2, cfg=cfg)
    assert report.passed
    assert [c.n for c in report.find("phi1_bijective")] == [1, 2]
    assert [c.n for c in report.find("square_count")] == [1]


def test_budget_errors():
    with pytest.raises(BudgetExceededError):
        verify(9, 1)
    with pytest.raises(BudgetExceededError):
        verify(2, 7)


def test_verifier_records_failures_and_errors():
    v = Verifier()
    assert v.check("same", 1, 2, 2)
    assert not v.check("different", 1, 2, 3)
    v.check("informational", 1, 2, 3, gate=False)
    v.check_all("odd", 1, [1, 3, 4, 6], lambda k: k % 2 == 1)
    v.run("broken", 2, lambda: 1 // 0)

    report = v.report
    assert not report.passed
    assert [c.name for c in report.failures] == ["different", "odd", "broken"]
    assert report.find("odd")[0].actual == 2
    assert report.find("odd")[0].note == "first failure: '4'"
    assert report.find("informational")[0].status == "info"
    assert "ZeroDivisionError" in report.find("broken", 2)[0].actual


def test_report_tsv():
    report = VerificationReport([Check("count", 3, 6, 6, True)])
    assert report.to_tsv() == "check\tn\tstatus\texpected\tactual\tnote\n" \
                              "count\t3\tpass\t6\t6\t\n"


@pytest.mark.slow
def test_default_budgets_run_within_a_minute():
    start = time.perf_counter()
    report = verify(8, 6)
    elapsed = time.perf_counter() - start
    assert report.passed, report.to_tsv()
    assert elapsed < 60


@pytest.mark.slow
def test_symmetric_sizes_up_to_eleven():
    report = verify(4, 5)
    assert report.passed, report.to_tsv()
    assert report.find("count", 4)[0].actual == 24
    assert [c.n for c in report.find("sym_diagonal_recursion")] == [1, 2, 3, 4, 5]
    assert report.find("square_count", 5)[0].actual == 541
