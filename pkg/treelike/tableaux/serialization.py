"""
Text format of tree-like tableaux: one line per row, top to bottom, with the character '1'
for a pointed cell and '0' for an empty one. The row lengths define the shape. Several
tableaux in one text are separated by blank lines.
"""

from typing import Iterator, List

from treelike.lib.core.constants import EMPTY_CHAR, POINT_CHAR
from treelike.lib.core.errors import InvalidShapeError, InvalidTableauError, \
    TableauParseError
from treelike.tableaux.shapes import Cell, FerrersShape
from treelike.tableaux.tableau import TreeLikeTableau, check_tableau


def render(tableau: TreeLikeTableau) -> str:
    lines = []
    for r, length in enumerate(tableau.shape.row_lengths, start=1):
        lines.append("".join(POINT_CHAR if Cell(r, c) in tableau.points else EMPTY_CHAR
                             for c in range(1, length + 1)))
    return "\n".join(lines)


def parse(text: str, first_line: int = 1) -> TreeLikeTableau:
    """ Parse a single tableau. 'first_line' is the line number of the first row within a
    larger input and only affects error locations. """

    lines = text.strip("\n").split("\n")
    lines = [line.rstrip() for line in lines]
    if not any(lines):
        raise TableauParseError("Empty input, expected at least one row.", line=first_line)

    points = []
    for r, line in enumerate(lines, start=1):
        lineno = first_line + r - 1
        if not line:
            raise TableauParseError("Empty row inside a tableau.", line=lineno)
        for c, char in enumerate(line, start=1):
            if char == POINT_CHAR:
                points.append(Cell(r, c))
            elif char != EMPTY_CHAR:
                raise TableauParseError(f"Invalid character {char!r}, expected "
                                        f"'{POINT_CHAR}' or '{EMPTY_CHAR}'.", line=lineno,
                                        column=c)
        if r > 1 and len(line) > len(lines[r - 2]):
            raise TableauParseError(f"Row of length {len(line)} below a row of length "
                                    f"{len(lines[r - 2])}, row lengths must be weakly "
                                    f"decreasing.", line=lineno, column=len(lines[r - 2]) + 1)

    try:
        shape = FerrersShape(tuple(len(line) for line in lines))
        return check_tableau(shape, points)
    except InvalidShapeError as e:
        raise TableauParseError(str(e), line=first_line) from e
    except InvalidTableauError as e:
        first = e.violations[0]
        if first.kind == "cell":
            line, column = first_line + first.witness.row - 1, first.witness.col
        elif first.kind == "row":
            line, column = first_line + first.witness - 1, None
        else:
            line, column = first_line, first.witness
        raise TableauParseError(str(e), line=line, column=column) from e


def split_blocks(text: str) -> Iterator[tuple]:
    """ Yield (first line number, block text) for every blank-line separated block. """

    block: List[str] = []
    start = 1
    for lineno, line in enumerate(text.split("\n"), start=1):
        if line.strip():
            if not block:
                start = lineno
            block.append(line)
        elif block:
            yield start, "\n".join(block)
            block = []
    if block:
        yield start, "\n".join(block)


def parse_many(text: str) -> List[TreeLikeTableau]:
    return [parse(block, first_line=start) for start, block in split_blocks(text)]


def render_many(tableaux) -> str:
    return "\n\n".join(render(t) for t in tableaux)
