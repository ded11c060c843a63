import pytest

from treelike.enumeration.generators import iter_histories, iter_sym_histories
from treelike.insertion.history import check_history, check_sym_history, format_history, \
    format_sym_history, history_decode, history_encode, parse_history, parse_sym_history, \
    ribbon_lengths, sym_history_decode, sym_history_encode
from treelike.lib.core.constants import Sign
from treelike.lib.core.errors import TableauParseError
from treelike.tableaux.statistics import crossings


@pytest.mark.parametrize("a,name", [
    ((0,), "single"),
    ((0, 0), "vertical_domino"),
    ((0, 1), "horizontal_domino"),
    ((0, 1, 0), "square3"),
    ((0, 1, 0, 3, 1), "worked_example"),
])
def test_encode_decode(request, a, name):
    tableau = request.getfixturevalue(name)
    assert history_decode(a) == tableau
    assert history_encode(tableau) == a


def test_ribbon_lengths_sum_to_crossings(worked_example):
    assert ribbon_lengths(worked_example) == (0, 0, 1, 0, 2)
    assert sum(ribbon_lengths(worked_example)) == crossings(worked_example) == 3


@pytest.mark.parametrize("a", [(), (1,), (0, 2), (0, 1, -1), (0, 1.0)])
def test_invalid_histories(a):
    with pytest.raises(ValueError):
        check_history(a)


def test_text_forms():
    assert format_history((0, 1, 0, 3, 1)) == "0,1,0,3,1"
    assert parse_history(" 0, 1,0,3,1\n") == (0, 1, 0, 3, 1)
    steps = ((0, Sign.Plus), (1, Sign.Minus))
    assert format_sym_history(steps) == "0:+;1:-"
    assert parse_sym_history("0:+;1:-") == steps
    assert parse_sym_history("") == ()


@pytest.mark.parametrize("text", ["0,x", "0,2", "1"])
def test_history_parse_errors(text):
    with pytest.raises(TableauParseError):
        parse_history(text)


@pytest.mark.parametrize("text", ["0+", "0:*", "1:+", "0:+;2:-"])
def test_sym_history_parse_errors(text):
    with pytest.raises(TableauParseError):
        parse_sym_history(text)


def test_sym_history_accepts_integer_signs():
    assert check_sym_history([(0, -1)]) == ((0, Sign.Minus),)


@pytest.mark.parametrize("n", range(1, 6))
def test_histories_round_trip(n):
    for a in iter_histories(n):
        assert history_encode(history_decode(a)) == a


@pytest.mark.parametrize("n", range(0, 4))
def test_sym_histories_round_trip(n):
    for steps in iter_sym_histories(n):
        assert sym_history_encode(sym_history_decode(steps)) == steps
