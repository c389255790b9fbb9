"""Red-black tree core: nodes, insertion, rotations, validation, rendering.

Keys are signed 64-bit integers. Leaves are represented as None rather
than a shared sentinel node; every helper treats None as a black leaf
of height zero. Nodes carry parent pointers, kept eagerly consistent by
every structural operation.

During deletion fixup a tree may temporarily contain one double-black
node. A "phantom" is the special case where the double black sits on a
vacated position that holds no key; it is modeled as a node whose key
is None. validate() reports any double black as a violation, so a tree
mid-fixup is by definition not valid yet.
"""
from __future__ import annotations

from dataclasses import dataclass

from .colors import Color

KEY_MIN = -(2**63)
KEY_MAX = 2**63 - 1


class DuplicateKey(Exception):
    """Key already present on insert."""


class KeyNotFound(Exception):
    """Key absent on delete or lookup that requires presence."""


class MissingChild(Exception):
    """Rotation pivot lacks the child the rotation needs."""


class UnequalBlackHeight(Exception):
    """black_height() found sibling subtrees with different black counts."""


class MalformedDocument(Exception):
    """A tree or trace document failed structural validation."""


@dataclass(frozen=True)
class Violation:
    kind: str
    location: str


RED_RED = "RedRed"
ROOT_NOT_BLACK = "RootNotBlack"
UNEQUAL_BLACK_HEIGHT = "UnequalBlackHeight"
BST_ORDER = "BstOrder"
DOUBLE_BLACK_PRESENT = "DoubleBlackPresent"


class Node:
    __slots__ = ("key", "color", "left", "right", "parent")

    def __init__(self, key, color=Color.RED, left=None, right=None, parent=None):
        self.key = key  # None marks the phantom double-black leaf
        self.color = color
        self.left = left
        self.right = right
        self.parent = parent

    @property
    def is_phantom(self):
        return self.key is None

    def child(self, side):
        return self.left if side == "left" else self.right

    def set_child(self, side, node):
        if side == "left":
            self.left = node
        else:
            self.right = node
        if node is not None:
            node.parent = self

    def side_of(self):
        """Which side of its parent this node hangs on, or None for the root."""
        if self.parent is None:
            return None
        return "left" if self.parent.left is self else "right"

    def __repr__(self):
        label = "*" if self.is_phantom else self.key
        return f"Node({self.color.value}:{label})"


def _weight(node):
    """Black units a node contributes to paths through it."""
    if node is None:
        return 0
    if node.color is Color.DOUBLE_BLACK:
        return 1 if node.is_phantom else 2
    return 1 if node.color is Color.BLACK else 0


class Tree:
    """A mutable red-black tree over unique integer keys."""

    def __init__(self):
        self.root = None

    # -- construction -------------------------------------------------

    @classmethod
    def from_keys(cls, keys):
        tree = cls()
        for key in keys:
            tree.insert(key)
        return tree

    def insert(self, key):
        """Standard insert with recolor/rotate fixup. Root ends black."""
        _check_key(key)
        parent = None
        cur = self.root
        while cur is not None:
            if key == cur.key:
                raise DuplicateKey(f"key {key} already present")
            parent = cur
            cur = cur.left if key < cur.key else cur.right
        node = Node(key, Color.RED, parent=parent)
        if parent is None:
            self.root = node
        elif key < parent.key:
            parent.left = node
        else:
            parent.right = node
        self._insert_fixup(node)

    def _insert_fixup(self, node):
        while node.parent is not None and node.parent.color is Color.RED:
            parent = node.parent
            grand = parent.parent
            if grand is None:
                break
            if parent is grand.left:
                uncle = grand.right
                if uncle is not None and uncle.color is Color.RED:
                    parent.color = Color.BLACK
                    uncle.color = Color.BLACK
                    grand.color = Color.RED
                    node = grand
                    continue
                if node is parent.right:
                    node = parent
                    self.rotate_left(node)
                    parent = node.parent
                parent.color = Color.BLACK
                grand.color = Color.RED
                self.rotate_right(grand)
            else:
                uncle = grand.left
                if uncle is not None and uncle.color is Color.RED:
                    parent.color = Color.BLACK
                    uncle.color = Color.BLACK
                    grand.color = Color.RED
                    node = grand
                    continue
                if node is parent.left:
                    node = parent
                    self.rotate_right(node)
                    parent = node.parent
                parent.color = Color.BLACK
                grand.color = Color.RED
                self.rotate_left(grand)
        self.root.color = Color.BLACK

    # -- lookup --------------------------------------------------------

    def find(self, key):
        cur = self.root
        while cur is not None and not cur.is_phantom:
            if key == cur.key:
                return cur
            cur = cur.left if key < cur.key else cur.right
        return None

    def search(self, key) -> bool:
        return self.find(key) is not None

    # -- rotations -----------------------------------------------------

    def rotate_left(self, node):
        """Rotate node down-left; its right child rises. Colors untouched."""
        riser = node.right
        if riser is None:
            raise MissingChild(f"cannot rotate {node!r} left: no right child")
        node.right = riser.left
        if riser.left is not None:
            riser.left.parent = node
        self._replace_in_parent(node, riser)
        riser.left = node
        node.parent = riser
        return riser

    def rotate_right(self, node):
        """Mirror of rotate_left: the left child rises."""
        riser = node.left
        if riser is None:
            raise MissingChild(f"cannot rotate {node!r} right: no left child")
        node.left = riser.right
        if riser.right is not None:
            riser.right.parent = node
        self._replace_in_parent(node, riser)
        riser.right = node
        node.parent = riser
        return riser

    def _replace_in_parent(self, old, new):
        parent = old.parent
        if new is not None:
            new.parent = parent
        if parent is None:
            self.root = new
        elif parent.left is old:
            parent.left = new
        else:
            parent.right = new

    # -- measurements ---------------------------------------------------

    def black_height(self, node=None) -> int:
        """Black units on every path from node (default root) to its leaves.

        Raises UnequalBlackHeight when two sibling subtrees disagree, so
        the return value is only produced for black-balanced subtrees.
        """
        start = self.root if node is None else node
        return _black_height(start)

    def inorder(self):
        out = []
        _inorder(self.root, out)
        return out

    def size(self) -> int:
        return sum(1 for _ in _walk(self.root))

    # -- validation -----------------------------------------------------

    def validate(self):
        """All red-black property violations, empty list when valid."""
        violations = []
        if self.root is not None and self.root.color is not Color.BLACK:
            violations.append(Violation(ROOT_NOT_BLACK, _loc(self.root)))
        for node in _walk(self.root):
            if node.color is Color.DOUBLE_BLACK:
                violations.append(Violation(DOUBLE_BLACK_PRESENT, _loc(node)))
            if node.color is Color.RED:
                for child in (node.left, node.right):
                    if child is not None and child.color is Color.RED:
                        violations.append(
                            Violation(RED_RED, f"{_loc(node)} -> {_loc(child)}")
                        )
        violations.extend(_check_order(self.root, None, None))
        violations.extend(_check_black_heights(self.root))
        return violations

    # -- copies and rendering --------------------------------------------

    def clone(self):
        tree = Tree()
        tree.root = _clone(self.root, None)
        return tree

    def render(self) -> str:
        """Indented single-string rendering; '(nil)' for the empty tree."""
        if self.root is None:
            return "(nil)"
        lines = []
        _render(self.root, 0, "", lines)
        return "\n".join(lines)

    def to_dot(self) -> str:
        """Graphviz form. Red nodes are drawn filled so they stand out."""
        lines = [
            "digraph rbtree {",
            '  node [shape=circle, fontname="Helvetica"];',
        ]
        order = list(_walk(self.root))
        names = {id(n): f"n{i}" for i, n in enumerate(order)}
        for node in order:
            name = names[id(node)]
            label = "*" if node.is_phantom else str(node.key)
            style = ""
            if node.color is Color.RED:
                style = ', style=filled, fillcolor="#cc3333", fontcolor=white'
            elif node.color is Color.DOUBLE_BLACK:
                style = ", peripheries=2"
            lines.append(f'  {name} [label="{label}\\n{node.color.value}"{style}];')
        for node in order:
            for child in (node.left, node.right):
                if child is not None:
                    lines.append(f"  {names[id(node)]} -> {names[id(child)]};")
        lines.append("}")
        return "\n".join(lines)


# -- module helpers ------------------------------------------------------


def _check_key(key):
    if not isinstance(key, int) or isinstance(key, bool):
        raise MalformedDocument(f"key must be an integer, got {key!r}")
    if not (KEY_MIN <= key <= KEY_MAX):
        raise MalformedDocument(f"key {key} outside signed 64-bit range")


def _loc(node):
    return "*" if node.is_phantom else str(node.key)


def _walk(node):
    if node is None:
        return
    yield node
    yield from _walk(node.left)
    yield from _walk(node.right)


def _inorder(node, out):
    if node is None:
        return
    _inorder(node.left, out)
    if not node.is_phantom:
        out.append(node.key)
    _inorder(node.right, out)


def _black_height(node):
    if node is None:
        return 0
    left = _black_height(node.left)
    right = _black_height(node.right)
    if left != right:
        raise UnequalBlackHeight(
            f"at {_loc(node)}: left {left} != right {right}"
        )
    return left + _weight(node)


def _check_order(node, lo, hi):
    if node is None or node.is_phantom:
        return []
    out = []
    if (lo is not None and node.key <= lo) or (hi is not None and node.key >= hi):
        out.append(Violation(BST_ORDER, _loc(node)))
    out.extend(_check_order(node.left, lo, node.key))
    out.extend(_check_order(node.right, node.key, hi))
    return out


def _check_black_heights(node):
    """One violation per node whose children's black heights disagree."""
    out = []

    def height(n):
        if n is None:
            return 0
        left = height(n.left)
        right = height(n.right)
        if left != right:
            out.append(Violation(UNEQUAL_BLACK_HEIGHT, _loc(n)))
        return max(left, right) + _weight(n)

    height(node)
    return out


def _clone(node, parent):
    if node is None:
        return None
    copy = Node(node.key, node.color, parent=parent)
    copy.left = _clone(node.left, copy)
    copy.right = _clone(node.right, copy)
    return copy


def _render(node, depth, prefix, lines):
    label = "*" if node.is_phantom else str(node.key)
    lines.append(f"{'  ' * depth}{prefix}{node.color.value}:{label}")
    if node.left is not None:
        _render(node.left, depth + 1, "L ", lines)
    if node.right is not None:
        _render(node.right, depth + 1, "R ", lines)


# -- document encoding ----------------------------------------------------

_COLOR_FROM_DOC = {"R": Color.RED, "B": Color.BLACK}


def tree_to_doc(tree):
    """Nested {key, color, left, right} encoding wrapped as {"root": ...}."""
    return {"root": _node_to_doc(tree.root)}


def _node_to_doc(node):
    if node is None:
        return None
    if node.color not in (Color.RED, Color.BLACK) or node.is_phantom:
        raise ValueError("cannot encode a tree that still carries a double black")
    return {
        "key": node.key,
        "color": node.color.value,
        "left": _node_to_doc(node.left),
        "right": _node_to_doc(node.right),
    }


def doc_to_tree(doc):
    """Parse a tree document. Structural checks only: an unbalanced or
    red-rooted document parses fine so that validate() can report on it."""
    if not isinstance(doc, dict) or "root" not in doc:
        raise MalformedDocument('tree document must be an object with a "root" field')
    tree = Tree()
    tree.root = _node_from_doc(doc["root"], None)
    return tree


def _node_from_doc(entry, parent):
    if entry is None:
        return None
    if not isinstance(entry, dict):
        raise MalformedDocument(f"tree node must be an object, got {entry!r}")
    missing = {"key", "color", "left", "right"} - set(entry)
    if missing:
        raise MalformedDocument(f"tree node missing fields: {sorted(missing)}")
    _check_key(entry["key"])
    color = _COLOR_FROM_DOC.get(entry["color"])
    if color is None:
        raise MalformedDocument(f"unknown color {entry['color']!r}")
    node = Node(entry["key"], color, parent=parent)
    node.left = _node_from_doc(entry["left"], node)
    node.right = _node_from_doc(entry["right"], node)
    return node
