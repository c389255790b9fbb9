"""Red-black tree deletion by symbolic color arithmetic.

The package pairs two deletion engines over one tree core: an engine
that resolves double blacks with rotation plus three recoloring rules
expressed as color arithmetic, and a traditional four-case engine used
as an oracle. Both emit structured traces that share one vocabulary,
which is what makes their step counts comparable.
"""

__version__ = "0.1.0"

from .colors import NULL_LEAF, Color, UndefinedColorOp, color_add, color_sub
from .core import (
    DuplicateKey,
    KeyNotFound,
    MalformedDocument,
    MissingChild,
    Node,
    Tree,
    UnequalBlackHeight,
    Violation,
    doc_to_tree,
    tree_to_doc,
)

__all__ = [
    "NULL_LEAF",
    "Color",
    "UndefinedColorOp",
    "color_add",
    "color_sub",
    "DuplicateKey",
    "KeyNotFound",
    "MalformedDocument",
    "MissingChild",
    "Node",
    "Tree",
    "UnequalBlackHeight",
    "Violation",
    "doc_to_tree",
    "tree_to_doc",
    "__version__",
]
