import pytest

from treelike.enumeration.generators import iter_tableaux
from treelike.lib.core.errors import TableauParseError
from treelike.tableaux.serialization import parse, parse_many, render, render_many


def test_render(single, square3, worked_example):
    assert render(single) == "1"
    assert render(square3) == "11\n10"
    assert render(worked_example) == "111\n100\n010"
    assert str(square3) == "11\n10"


def test_parse(single, square3):
    assert parse("1") == single
    assert parse("11\n10\n") == square3
    assert parse("\n11  \n10") == square3


@pytest.mark.parametrize("text,line,column", [
    ("10\n01", 2, 2),
    ("1x", 1, 2),
    ("11\n111", 2, 3),
    ("1\n\n1", 2, None),
    ("", 1, None),
    ("1\n0", 2, None),
])
def test_parse_errors(text, line, column):
    with pytest.raises(TableauParseError) as info:
        parse(text)
    assert (info.value.line, info.value.column) == (line, column)


def test_parse_error_message_names_location():
    with pytest.raises(TableauParseError, match=r"^line 2, column 2: .*condition \(2\)"):
        parse("10\n01")


def test_many(single, vertical_domino):
    text = render_many([single, vertical_domino])
    assert text == "1\n\n1\n1"
    assert parse_many(text) == [single, vertical_domino]
    assert parse_many("\n\n1\n\n\n") == [single]


def test_many_reports_absolute_lines():
    with pytest.raises(TableauParseError) as info:
        parse_many("1\n\n10\n01")
    assert (info.value.line, info.value.column) == (4, 2)


@pytest.mark.parametrize("n", range(1, 6))
def test_round_trip(n):
    for tableau in iter_tableaux(n):
        assert parse(render(tableau)) == tableau


@pytest.mark.slow
def test_round_trip_size_7():
    for tableau in iter_tableaux(7):
        assert parse(render(tableau)) == tableau
