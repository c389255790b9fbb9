"""Symbolic color arithmetic for red-black tree rebalancing.

Colors form a tiny directional algebra. Adding a black unit to a node
darkens it (red + black = black, black + black = double black) and
subtracting a black unit lightens it (double black - black = black,
black - black = red). A vacated leaf position contributes a NULL_LEAF
operand: absorbing a null leaf is what turns a deletion survivor's
parent double black in the first place.

The tables are deliberately partial. Any combination outside them is a
logic error in the caller and raises UndefinedColorOp rather than
guessing.
"""
from __future__ import annotations

import enum


class Color(enum.Enum):
    RED = "R"
    BLACK = "B"
    DOUBLE_BLACK = "DB"

    def __repr__(self) -> str:  # keeps trace diffs readable
        return self.value


class _NullLeaf:
    """Singleton operand standing for an empty (null) leaf position."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "NULL_LEAF"


NULL_LEAF = _NullLeaf()


class UndefinedColorOp(Exception):
    """Raised when an addition or subtraction has no defined result."""


_ADD_TABLE = {
    (Color.BLACK, Color.BLACK): Color.DOUBLE_BLACK,
    (Color.RED, Color.BLACK): Color.BLACK,
    (Color.RED, Color.DOUBLE_BLACK): Color.BLACK,
    (Color.RED, NULL_LEAF): Color.BLACK,
    (Color.BLACK, NULL_LEAF): Color.DOUBLE_BLACK,
}

_SUB_TABLE = {
    (Color.DOUBLE_BLACK, Color.BLACK): Color.BLACK,
    (Color.BLACK, Color.BLACK): Color.RED,
    (Color.RED, Color.BLACK): Color.BLACK,
}


def color_add(a, b):
    """Combine color a with operand b. Directional: add(a, b) != add(b, a)."""
    try:
        return _ADD_TABLE[(a, b)]
    except KeyError:
        raise UndefinedColorOp(f"no rule for {a!r} + {b!r}") from None


def color_sub(a, b, *, phantom=False):
    """Remove operand b from color a.

    A phantom double black occupies a position that holds no real node,
    so subtracting its black unit does not leave a black node behind;
    the position reverts to a null leaf. Pass phantom=True for that
    case and the function returns NULL_LEAF instead of BLACK.
    """
    if phantom:
        if (a, b) == (Color.DOUBLE_BLACK, Color.BLACK):
            return NULL_LEAF
        raise UndefinedColorOp(f"no phantom rule for {a!r} - {b!r}")
    try:
        return _SUB_TABLE[(a, b)]
    except KeyError:
        raise UndefinedColorOp(f"no rule for {a!r} - {b!r}") from None
