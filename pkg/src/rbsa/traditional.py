"""Traditional four-case red-black deletion, used as the oracle engine.

This is the standard textbook fixup. The node that replaced the deleted
one (possibly an empty position) carries an extra black unit; the loop
walks it upward resolving one case per iteration:

    RedSibling                rotate the parent, swap colors, retry
    BlackSiblingBlackNephews  redden the sibling, push the extra black up
    NearRedNephew             rotate the sibling to expose a far red nephew
    FarRedNephew              rotate the parent, terminal

Traces reuse the shared vocabulary: each case application is one
RuleApplied event whose rule field names the case, preceded by a Rotate
event when the case rotates. Rotation and recolor batch commute inside
a case, and listing the rotation first matches how the two engines'
steps are tabulated side by side. The loop-exit blackening of a red
pushed-up node is folded into the BlackSiblingBlackNephews event that
produced it; blackening the node the loop exits on at the top is a
RootBlackened event.

Only color changes that actually happen are emitted, so a case that
"recolors" a node to the color it already has adds nothing to the
batch.
"""
from __future__ import annotations

from .colors import Color
from .core import KeyNotFound, Tree, tree_to_doc
from .trace import (
    Trace,
    count_steps,
    ev_balanced,
    ev_delete,
    ev_root_blackened,
    ev_rotate,
    ev_rule,
    finish_trace,
    recolor,
)

RED_SIBLING = "RedSibling"
BLACK_SIBLING_BLACK_NEPHEWS = "BlackSiblingBlackNephews"
NEAR_RED_NEPHEW = "NearRedNephew"
FAR_RED_NEPHEW = "FarRedNephew"

TA_CASES = (
    RED_SIBLING,
    BLACK_SIBLING_BLACK_NEPHEWS,
    NEAR_RED_NEPHEW,
    FAR_RED_NEPHEW,
)


def _is_red(node):
    return node is not None and node.color is Color.RED


def _is_black(node):
    return node is None or node.color is Color.BLACK


def delete_traditional(tree, key, *, snapshots=False):
    """Delete key from tree in place and return the Trace."""
    node = tree.find(key)
    if node is None:
        raise KeyNotFound(f"key {key} not in tree")
    trace = Trace("ta", tree_to_doc(tree))
    emit = _emitter(trace, tree, snapshots)

    successor_key = None
    if node.left is not None and node.right is not None:
        succ = node.right
        while succ.left is not None:
            succ = succ.left
        successor_key = succ.key
        node.key = succ.key
        node = succ

    parent = node.parent
    side = node.side_of()
    child = node.left if node.left is not None else node.right
    was_black = node.color is Color.BLACK
    tree._replace_in_parent(node, child)

    if not was_black:
        emit(ev_delete(key, "red-leaf", successor_key))
    elif child is not None and child.color is Color.RED:
        child.color = Color.BLACK
        emit(ev_delete(key, "one-child", successor_key, child.key))
    else:
        if child is not None:
            # black node over a single black child cannot occur in a
            # valid tree; treat the child as the carrier and fix up
            emit(ev_delete(key, "one-child", successor_key))
        else:
            emit(ev_delete(key, "black-leaf", successor_key))
        _fixup(tree, child, parent, side, emit)
    return _finish(trace, tree, emit)


def _fixup(tree, x, parent, side, emit):
    while parent is not None and _is_black(x):
        sibling = parent.child("right" if side == "left" else "left")
        if sibling is None:
            return  # corrupted input; nothing sound left to do

        if sibling.color is Color.RED:
            changes = [
                recolor(sibling.key, "R", "B"),
                recolor(parent.key, parent.color.value, "R"),
            ]
            _rotate_toward(tree, parent, side, emit, role="p")
            _apply(tree, changes)
            emit(_case_event(RED_SIBLING, changes))
            continue  # same position, new sibling

        near = sibling.child(side)
        far = sibling.child("right" if side == "left" else "left")

        if _is_black(near) and _is_black(far):
            changes = [recolor(sibling.key, "B", "R")]
            new_x, new_parent = parent, parent.parent
            if _is_red(new_x) and new_parent is not None:
                # the pushed-up carrier is red: absorb in the same batch
                changes.append(recolor(new_x.key, "R", "B"))
                _apply(tree, changes)
                emit(_case_event(BLACK_SIBLING_BLACK_NEPHEWS, changes))
                return
            _apply(tree, changes)
            emit(_case_event(BLACK_SIBLING_BLACK_NEPHEWS, changes))
            x, parent, side = new_x, new_parent, new_x.side_of()
            continue

        if _is_black(far):
            changes = [
                recolor(near.key, "R", "B"),
                recolor(sibling.key, "B", "R"),
            ]
            _rotate_toward(tree, sibling, "right" if side == "left" else "left", emit, role="s")
            _apply(tree, changes)
            emit(_case_event(NEAR_RED_NEPHEW, changes))
            sibling = parent.child("right" if side == "left" else "left")
            far = sibling.child("right" if side == "left" else "left")

        changes = []
        if sibling.color is not parent.color:
            changes.append(
                recolor(sibling.key, sibling.color.value, parent.color.value)
            )
        if parent.color is not Color.BLACK:
            changes.append(recolor(parent.key, parent.color.value, "B"))
        if far.color is not Color.BLACK:
            changes.append(recolor(far.key, far.color.value, "B"))
        _rotate_toward(tree, parent, side, emit, role="p")
        _apply(tree, changes)
        if changes:
            emit(_case_event(FAR_RED_NEPHEW, changes))
        x, parent = tree.root, None  # terminal

    if x is not None and _is_red(x):
        # the carrier node absorbs the extra black at the top
        emit(ev_root_blackened(x.key, "R"))
        x.color = Color.BLACK


def _rotate_toward(tree, node, side, emit, role):
    """Rotate node so its opposite-side child rises; emit the event."""
    if side == "left":
        tree.rotate_left(node)
        emit(ev_rotate("left", node.key, role))
    else:
        tree.rotate_right(node)
        emit(ev_rotate("right", node.key, role))


def _apply(tree, changes):
    for change in changes:
        node = _locate(tree.root, change["key"])
        node.color = Color(change["after"])


def _locate(node, key):
    if node is None:
        return None
    if node.key == key:
        return node
    found = _locate(node.left, key)
    return found if found is not None else _locate(node.right, key)


def _case_event(case_name, changes):
    return ev_rule(
        case_name,
        None,
        [c["key"] for c in changes],
        [],
        changes,
        False,
        None,
    )


def _emitter(trace, tree, snapshots):
    def emit(event):
        if snapshots:
            event["snapshot"] = tree.render()
        trace.events.append(event)

    return emit


def _finish(trace, tree, emit):
    finish_trace(trace, tree)
    emit(ev_balanced(trace.final["blackHeight"], trace.final["violations"]))
    trace.steps = count_steps(trace)
    return trace
