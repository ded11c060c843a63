""" A collection of constant values that are or may be re-used throughout the rest of the
code base. """

import enum


@enum.unique
class EdgeKind(enum.Enum):
    """ The two kinds of boundary edges of a Ferrers diagram. A bottom edge terminates a
    column, a right edge terminates a row. """
    Bottom = "bottom"
    Right = "right"


@enum.unique
class Arrow(enum.Enum):
    Up = "up"
    Left = "left"


@enum.unique
class Sign(enum.Enum):
    """ The second component of a symmetric insertion step. """
    Plus = 1
    Minus = -1

    @property
    def symbol(self) -> str:
        return "+" if self is Sign.Plus else "-"

    @classmethod
    def from_symbol(cls, symbol: str) -> "Sign":
        try:
            return {"+": cls.Plus, "+1": cls.Plus, "1": cls.Plus,
                    "-": cls.Minus, "-1": cls.Minus}[symbol.strip()]
        except KeyError as e:
            raise ValueError(f"Invalid sign '{symbol}'. Must be one of '+' or '-'.") from e


@enum.unique
class Bijection(enum.Enum):
    Phi1 = "phi1"
    Phi2 = "phi2"
    Xi = "xi"


@enum.unique
class Direction(enum.Enum):
    ToPerm = "to-perm"
    ToTab = "to-tab"
    ToPartition = "to-partition"
    ToSquare = "to-square"


# Which directions make sense for which bijection, and the direction going back.
valid_directions = {
    Bijection.Phi1: (Direction.ToPerm, Direction.ToTab),
    Bijection.Phi2: (Direction.ToPerm, Direction.ToTab),
    Bijection.Xi: (Direction.ToPartition, Direction.ToSquare),
}

# Names of the statistics known to the stats command, in the order they are reported.
STAT_NAMES = ("crossings", "rows", "cells", "diag", "poly")

# Characters of the tableau text format.
POINT_CHAR = "1"
EMPTY_CHAR = "0"

# Separators of the remaining text formats.
HISTORY_SEP = ","
SYM_HISTORY_SEP = ";"
SYM_STEP_SEP = ":"
PERMUTATION_SEP = ","
BLOCK_SEP = "|"
BLOCK_ELEMENT_SEP = ","
TREE_LEAF = "L"

# Exit codes of the command line tool.
EXIT_OK = 0
EXIT_VERIFICATION_FAILED = 1
EXIT_USAGE = 2
