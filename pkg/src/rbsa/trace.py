"""Structured deletion traces.

Both deletion engines emit the same event vocabulary so their traces
can be stepped, replayed, and step-counted uniformly:

    Delete        the BST removal itself (carries how the node left)
    DbFormed      a double black appeared (key null means phantom)
    Rotate        one rotation; subjectRole says which role the pivot
                  played (s, p, or newDB). A Rotate may carry recolors
                  when the rotation itself transfers a color upward.
    RuleApplied   one recoloring rule; batches its recolors
    DbRemoved     a double black left the tree with no successor
    RootBlackened the root absorbed the extra black unit
    Balanced      terminal summary event

Step counting matches how the engines' work is tabulated side by side:
a Delete is one step, a Rotate is one step, and a run of consecutive
RuleApplied events with no rotation between them is one Re-color step.
Bookkeeping events (DbFormed, DbRemoved, RootBlackened, Balanced) fold
into the step they follow and never start one.

Serialized documents carry version "rbsa-trace/1", have a fixed key
order, and contain no floats, so equal traces serialize to equal bytes.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field

from .colors import Color
from .core import MalformedDocument, Node, Tree, doc_to_tree

TRACE_VERSION = "rbsa-trace/1"

DELETE = "Delete"
DB_FORMED = "DbFormed"
ROTATE = "Rotate"
RULE_APPLIED = "RuleApplied"
DB_REMOVED = "DbRemoved"
ROOT_BLACKENED = "RootBlackened"
BALANCED = "Balanced"

_EVENT_KINDS = {
    DELETE,
    DB_FORMED,
    ROTATE,
    RULE_APPLIED,
    DB_REMOVED,
    ROOT_BLACKENED,
    BALANCED,
}


@dataclass
class Trace:
    method: str
    initial_tree: dict
    events: list = field(default_factory=list)
    final: dict = field(default_factory=dict)
    steps: dict = field(default_factory=dict)

    def to_doc(self):
        return {
            "version": TRACE_VERSION,
            "method": self.method,
            "initialTree": self.initial_tree,
            "events": self.events,
            "final": self.final,
            "steps": self.steps,
        }


# -- event builders (plain dicts, fixed field order) ----------------------


def recolor(key, before, after):
    return {"kind": "Recolor", "key": key, "before": before, "after": after}


def ev_delete(key, removed, successor=None, replacement_blackened=None):
    return {
        "kind": DELETE,
        "key": key,
        "removed": removed,
        "successor": successor,
        "replacementBlackened": replacement_blackened,
    }


def ev_db_formed(key, parent, side):
    return {"kind": DB_FORMED, "key": key, "parent": parent, "side": side}


def ev_rotate(direction, pivot, subject_role, recolors=None):
    return {
        "kind": ROTATE,
        "direction": direction,
        "pivot": pivot,
        "subjectRole": subject_role,
        "recolors": recolors or [],
    }


def ev_rule(rule, case, operated, exempted, recolors, db_resolved, new_db):
    return {
        "kind": RULE_APPLIED,
        "rule": rule,
        "case": case,
        "operated": operated,
        "exempted": exempted,
        "recolors": recolors,
        "dbResolved": db_resolved,
        "newDb": new_db,
    }


def ev_db_removed(key=None, before=None, after=None):
    return {"kind": DB_REMOVED, "key": key, "before": before, "after": after}


def ev_root_blackened(key, before):
    return {"kind": ROOT_BLACKENED, "key": key, "before": before, "after": "B"}


def ev_balanced(black_height, violations):
    return {"kind": BALANCED, "blackHeight": black_height, "violations": violations}


# -- step counting ---------------------------------------------------------


def count_steps(trace_or_events):
    """Group events into Delete / Rotate / Re-color steps.

    Returns {"count": n, "breakdown": [labels...]}.
    """
    events = (
        trace_or_events.events
        if isinstance(trace_or_events, Trace)
        else trace_or_events
    )
    breakdown = []
    recolor_open = False
    for ev in events:
        kind = ev["kind"]
        if kind == DELETE:
            breakdown.append("Delete")
            recolor_open = False
        elif kind == ROTATE:
            breakdown.append("Rotate")
            recolor_open = False
        elif kind == RULE_APPLIED:
            if not recolor_open:
                breakdown.append("Re-color")
                recolor_open = True
        # DbFormed, DbRemoved, RootBlackened, Balanced absorb into the
        # step they follow.
    return {"count": len(breakdown), "breakdown": breakdown}


def finish_trace(trace, tree):
    """Fill in the final summary and step counts after the engine ran."""
    violations = tree.validate()
    try:
        bh = tree.black_height() if tree.root is not None else 0
    except Exception:
        bh = None
    from .core import tree_to_doc

    final_tree = None
    try:
        final_tree = tree_to_doc(tree)
    except ValueError:
        pass  # a tree still carrying a double black has no document form
    trace.final = {
        "balanced": not violations,
        "blackHeight": bh,
        "violations": [
            {"kind": v.kind, "location": v.location} for v in violations
        ],
        "tree": final_tree,
    }
    trace.steps = count_steps(trace)
    return trace


# -- serialization ---------------------------------------------------------


def serialize(trace) -> str:
    """Canonical JSON text. Deterministic: same trace, same bytes."""
    return json.dumps(trace.to_doc(), indent=2, ensure_ascii=False)


def deserialize(text) -> Trace:
    try:
        doc = json.loads(text)
    except (json.JSONDecodeError, TypeError) as exc:
        raise MalformedDocument(f"not valid JSON: {exc}") from None
    if not isinstance(doc, dict):
        raise MalformedDocument("trace document must be an object")
    if doc.get("version") != TRACE_VERSION:
        raise MalformedDocument(
            f"unsupported trace version {doc.get('version')!r}"
        )
    for fieldname in ("method", "initialTree", "events", "final", "steps"):
        if fieldname not in doc:
            raise MalformedDocument(f"trace document missing {fieldname!r}")
    if doc["method"] not in ("sa", "ta"):
        raise MalformedDocument(f"unknown method {doc['method']!r}")
    if not isinstance(doc["events"], list):
        raise MalformedDocument("events must be a list")
    for ev in doc["events"]:
        if not isinstance(ev, dict) or ev.get("kind") not in _EVENT_KINDS:
            raise MalformedDocument(f"unknown event {ev!r}")
    return Trace(
        method=doc["method"],
        initial_tree=doc["initialTree"],
        events=doc["events"],
        final=doc["final"],
        steps=doc["steps"],
    )


# -- replay -----------------------------------------------------------------

_COLOR_FROM_LABEL = {"R": Color.RED, "B": Color.BLACK, "DB": Color.DOUBLE_BLACK}


def replay(trace) -> Tree:
    """Re-apply a trace's events to its initial tree snapshot.

    Deterministic by construction; the result must equal the engine's
    final tree, which is what the round-trip tests assert.
    """
    tree = doc_to_tree(trace.initial_tree)
    for ev in trace.events:
        _apply_event(tree, ev)
    return tree


def _apply_event(tree, ev):
    kind = ev["kind"]
    if kind == DELETE:
        _replay_delete(tree, ev)
    elif kind == ROTATE:
        node = _find_any(tree, ev["pivot"])
        if ev["direction"] == "left":
            tree.rotate_left(node)
        else:
            tree.rotate_right(node)
        _apply_recolors(tree, ev.get("recolors", []))
    elif kind == RULE_APPLIED:
        _apply_recolors(tree, ev["recolors"])
        if ev["dbResolved"] and ev["operated"] and ev["operated"][0] is None:
            _drop_phantom(tree)
    elif kind == DB_REMOVED:
        if ev.get("after") == "B" and ev.get("key") is not None:
            _find_any(tree, ev["key"]).color = Color.BLACK
        elif ev.get("key") is None and _phantom(tree) is not None:
            _drop_phantom(tree)
    elif kind == ROOT_BLACKENED:
        _find_any(tree, ev["key"]).color = Color.BLACK
    # DbFormed and Balanced need no replay action


def _replay_delete(tree, ev):
    node = _find_any(tree, ev["key"])
    if ev["successor"] is not None:
        succ = _find_any(tree, ev["successor"])
        node.key = ev["successor"]
        node = succ
    removed = ev["removed"]
    if removed == "red-leaf":
        tree._replace_in_parent(node, None)
    elif removed == "black-leaf":
        phantom = Node(None, Color.DOUBLE_BLACK)
        tree._replace_in_parent(node, phantom)
        if tree.root is phantom:
            tree.root = None  # deleting the last node empties the tree
    elif removed == "one-child":
        child = node.left if node.left is not None else node.right
        tree._replace_in_parent(node, child)
        if ev["replacementBlackened"] is not None:
            child.color = Color.BLACK
    else:
        raise MalformedDocument(f"unknown removal kind {removed!r}")


def _apply_recolors(tree, recolors):
    for rec in recolors:
        node = _find_any(tree, rec["key"])
        node.color = _COLOR_FROM_LABEL[rec["after"]]


def _phantom(tree):
    for node in _iter_nodes(tree.root):
        if node.is_phantom:
            return node
    return None


def _drop_phantom(tree):
    phantom = _phantom(tree)
    if phantom is None:
        raise MalformedDocument("trace resolves a phantom that is not present")
    tree._replace_in_parent(phantom, None)


def _find_any(tree, key):
    """Find by key without assuming BST order (traces may rotate first)."""
    for node in _iter_nodes(tree.root):
        if node.key == key:
            return node
    raise MalformedDocument(f"trace references missing key {key}")


def _iter_nodes(node):
    if node is None:
        return
    yield node
    yield from _iter_nodes(node.left)
    yield from _iter_nodes(node.right)
