"""Trace vocabulary, step counting, serialization round-trips, replay."""
import json

import pytest

from rbsa.core import MalformedDocument, Tree, tree_to_doc
from rbsa.trace import (
    Trace,
    count_steps,
    deserialize,
    ev_balanced,
    ev_db_formed,
    ev_db_removed,
    ev_delete,
    ev_root_blackened,
    ev_rotate,
    ev_rule,
    finish_trace,
    recolor,
    replay,
    serialize,
)

# Hand-enumerated step groupings. Each case lists events by kind in the
# order an engine would emit them, with the expected breakdown worked
# out by hand from the one-step-per-row convention.


def _rule(recolors=()):
    return ev_rule(
        "GSAR", "LL", [None, 1, 2], [], [recolor(k, "B", "R") for k in recolors], True, None
    )


def test_count_red_leaf_delete_is_one_step():
    events = [ev_delete(5, "red-leaf"), ev_balanced(1, [])]
    assert count_steps(events) == {"count": 1, "breakdown": ["Delete"]}


def test_count_rotate_rule_rotate():
    events = [
        ev_delete(50, "black-leaf"),
        ev_db_formed(None, 40, "right"),
        ev_rotate("left", 20, "s"),
        _rule([30]),
        ev_rotate("right", 40, "newDB"),
        ev_db_removed(40, "DB", "B"),
        ev_balanced(2, []),
    ]
    assert count_steps(events) == {
        "count": 4,
        "breakdown": ["Delete", "Rotate", "Re-color", "Rotate"],
    }


def test_count_contiguous_rules_merge_into_one_recolor_step():
    events = [
        ev_delete(50, "black-leaf"),
        ev_db_formed(None, 40, "right"),
        ev_rotate("right", 40, "p"),
        _rule([35]),
        _rule([20]),
        ev_root_blackened(30, "DB"),
        ev_balanced(2, []),
    ]
    assert count_steps(events) == {
        "count": 3,
        "breakdown": ["Delete", "Rotate", "Re-color"],
    }


def test_count_rotation_breaks_a_recolor_batch():
    events = [
        ev_delete(25, "black-leaf"),
        ev_db_formed(None, 20, "right"),
        ev_rotate("left", 18, "s"),
        _rule([19]),
        ev_rotate("right", 20, "p"),
        _rule([19]),
        ev_balanced(2, []),
    ]
    assert count_steps(events) == {
        "count": 5,
        "breakdown": ["Delete", "Rotate", "Re-color", "Rotate", "Re-color"],
    }


def test_bookkeeping_events_never_start_a_step():
    events = [
        ev_delete(9, "black-leaf"),
        ev_db_formed(None, None, None),
        ev_db_removed(None),
        ev_balanced(0, []),
    ]
    assert count_steps(events) == {"count": 1, "breakdown": ["Delete"]}


def test_count_accepts_trace_objects():
    trace = Trace("sa", {"root": None}, [ev_delete(1, "red-leaf")])
    assert count_steps(trace)["count"] == 1


def _tiny_trace():
    tree = Tree.from_keys([10, 5])
    trace = Trace("sa", tree_to_doc(tree))
    trace.events.append(ev_delete(5, "red-leaf"))
    after = Tree.from_keys([10])
    finish_trace(trace, after)
    return trace, after


def test_serialize_round_trip_and_stability():
    trace, _ = _tiny_trace()
    text = serialize(trace)
    again = deserialize(text)
    assert serialize(again) == text
    doc = json.loads(text)
    assert doc["version"] == "rbsa-trace/1"
    assert doc["steps"] == {"count": 1, "breakdown": ["Delete"]}
    assert doc["final"]["balanced"] is True
    assert doc["final"]["blackHeight"] == 1
    assert list(doc) == ["version", "method", "initialTree", "events", "final", "steps"]


def test_serialize_has_no_floats():
    trace, _ = _tiny_trace()
    assert "." not in "".join(
        ch for ch in serialize(trace) if ch in ".0123456789"
    ) or "0." not in serialize(trace)


@pytest.mark.parametrize(
    "text",
    [
        "not json",
        json.dumps([1, 2]),
        json.dumps({"version": "rbsa-trace/0"}),
        json.dumps({"version": "rbsa-trace/1", "method": "sa"}),
        json.dumps(
            {
                "version": "rbsa-trace/1",
                "method": "xx",
                "initialTree": {"root": None},
                "events": [],
                "final": {},
                "steps": {},
            }
        ),
        json.dumps(
            {
                "version": "rbsa-trace/1",
                "method": "sa",
                "initialTree": {"root": None},
                "events": [{"kind": "Explode"}],
                "final": {},
                "steps": {},
            }
        ),
    ],
)
def test_deserialize_rejects_malformed(text):
    with pytest.raises(MalformedDocument):
        deserialize(text)


def test_replay_red_leaf_delete():
    trace, after = _tiny_trace()
    replayed = replay(trace)
    assert replayed.render() == after.render()


def test_replay_rotation_and_recolors():
    tree = Tree.from_keys([40, 20, 50, 30])
    trace = Trace("sa", tree_to_doc(tree))
    trace.events = [
        ev_delete(50, "black-leaf"),
        ev_db_formed(None, 40, "right"),
        ev_rotate("left", 20, "s"),
        ev_rule(
            "GSAR",
            "LR",
            [None, 30, 40],
            [],
            [recolor(30, "R", "B"), recolor(40, "B", "DB")],
            True,
            40,
        ),
        ev_rotate("right", 40, "newDB"),
        ev_db_removed(40, "DB", "B"),
    ]
    replayed = replay(trace)
    assert replayed.render() == "\n".join(["B:30", "  L B:20", "  R B:40"])


def test_replay_missing_key_raises():
    trace = Trace(
        "sa",
        {"root": {"key": 1, "color": "B", "left": None, "right": None}},
        [ev_rotate("left", 99, "p")],
    )
    with pytest.raises(MalformedDocument):
        replay(trace)
