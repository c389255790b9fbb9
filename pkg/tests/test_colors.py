"""Frozen tables for the color algebra.

The expected values are written out literally so that any change to the
tables shows up as a test diff, not as a silent behavior shift.
"""
import pytest

from rbsa.colors import NULL_LEAF, Color, UndefinedColorOp, color_add, color_sub

R = Color.RED
B = Color.BLACK
DB = Color.DOUBLE_BLACK


def test_addition_table_frozen():
    assert color_add(B, B) is DB
    assert color_add(R, B) is B
    assert color_add(R, DB) is B
    assert color_add(R, NULL_LEAF) is B
    assert color_add(B, NULL_LEAF) is DB


def test_subtraction_table_frozen():
    assert color_sub(DB, B) is B
    assert color_sub(B, B) is R
    assert color_sub(R, B) is B


def test_phantom_subtraction_reverts_to_null_leaf():
    assert color_sub(DB, B, phantom=True) is NULL_LEAF


def test_phantom_flag_rejects_other_operands():
    with pytest.raises(UndefinedColorOp):
        color_sub(B, B, phantom=True)


@pytest.mark.parametrize(
    "a,b",
    [
        (B, R),       # nothing adds a red unit
        (B, DB),
        (DB, DB),
        (DB, R),
        (R, R),
        (DB, NULL_LEAF),
    ],
)
def test_undefined_additions_raise(a, b):
    with pytest.raises(UndefinedColorOp):
        color_add(a, b)


@pytest.mark.parametrize(
    "a,b",
    [
        (R, R),
        (B, R),
        (DB, R),
        (R, DB),
        (B, DB),
        (DB, DB),
    ],
)
def test_undefined_subtractions_raise(a, b):
    with pytest.raises(UndefinedColorOp):
        color_sub(a, b)


def test_add_is_directional():
    # (R, B) is defined while (B, R) is not; order carries meaning.
    assert color_add(R, B) is B
    with pytest.raises(UndefinedColorOp):
        color_add(B, R)


def test_null_leaf_is_a_singleton():
    from rbsa.colors import _NullLeaf

    assert _NullLeaf() is NULL_LEAF


def test_darken_then_lighten_round_trips():
    # black + black = double black, double black - black = black
    assert color_sub(color_add(B, B), B) is B
    # red + black = black, black - black = red
    assert color_sub(color_add(R, B), B) is R
