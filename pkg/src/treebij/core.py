"""Rooted labeled trees and forests, their plane and slotted variants.

Every structure keeps a parent map as its primary representation and
derives child lists from it.  Vertex labels are positive integers; the
structures built by :mod:`treebij.enumerate` live on ``{1, ..., n}`` but
descendant subtrees keep their original labels.

Colors are optional and carried on the structure itself.  All objects are
immutable after construction and compare by value.

Unlabeled binary shapes are plain nested tuples: ``None`` is the empty
shape and ``(left, right)`` a node.  The same encoding with ``k`` entries is
used internally for k-ary shapes.  Shape vertices are addressed by their
1-based preorder position.
"""
from __future__ import annotations

import math
from enum import Enum
from functools import cached_property, lru_cache
from typing import Mapping, Optional, Sequence, Union

from .errors import DomainError, InvalidStructureError, InvalidVertexError

INFINITY = math.inf
"""Minimum label of an empty tree; compares greater than every label."""


class Color(str, Enum):
    BLACK = "b"
    WHITE = "w"

    def toggled(self) -> Color:
        return Color.WHITE if self is Color.BLACK else Color.BLACK


BLACK = Color.BLACK
WHITE = Color.WHITE


class Side(str, Enum):
    LEFT = "left"
    RIGHT = "right"


def _check_label(v) -> None:
    if not isinstance(v, int) or isinstance(v, bool) or v < 1:
        raise InvalidStructureError(f"vertex labels must be positive integers, got {v!r}")


def _normalize_colors(color, vertices) -> Optional[dict]:
    if color is None:
        return None
    out = {}
    for v, c in dict(color).items():
        try:
            out[v] = Color(c)
        except ValueError:
            raise InvalidStructureError(f"bad color {c!r} for vertex {v}") from None
    if set(out) != set(vertices):
        raise InvalidStructureError("coloring must be defined on exactly the vertex set")
    return out


class _Structure:
    """Shared behaviour: parent/children views, colors, equality."""

    _parent: dict
    _color: Optional[dict]

    @property
    def roots(self) -> tuple:
        raise NotImplementedError

    def children(self, v: int) -> tuple:
        raise NotImplementedError

    def _key(self):
        raise NotImplementedError

    def _recolored(self, color: Optional[dict]):
        raise NotImplementedError

    @cached_property
    def vertices(self) -> tuple:
        return tuple(sorted(self._parent))

    @property
    def n(self) -> int:
        return len(self._parent)

    def __len__(self) -> int:
        return len(self._parent)

    def __contains__(self, v) -> bool:
        return v in self._parent

    def check_vertex(self, v) -> None:
        if v not in self._parent:
            raise InvalidVertexError(f"vertex {v!r} is not in this structure")

    def parent(self, v: int) -> Optional[int]:
        self.check_vertex(v)
        return self._parent[v]

    def is_on_range(self) -> bool:
        """True when the vertex set is exactly ``{1, ..., n}``."""
        vs = self.vertices
        return not vs or (vs[0] == 1 and vs[-1] == len(vs))

    @property
    def is_colored(self) -> bool:
        return self._color is not None

    def color(self, v: int) -> Color:
        self.check_vertex(v)
        if self._color is None:
            raise DomainError("structure is not colored")
        return self._color[v]

    @property
    def colors(self) -> Optional[dict]:
        return None if self._color is None else dict(self._color)

    def with_colors(self, color: Mapping[int, Union[Color, str]]):
        return self._recolored(_normalize_colors(color, self._parent))

    def uncolored(self):
        return self if self._color is None else self._recolored(None)

    def _color_key(self) -> tuple:
        if self._color is None:
            return ()
        return tuple(self._color[v].value for v in self.vertices)

    @cached_property
    def preorder(self) -> tuple:
        out = []
        stack = list(reversed(self.roots))
        while stack:
            v = stack.pop()
            out.append(v)
            stack.extend(reversed(self.children(v)))
        return tuple(out)

    def descendants(self, v: int) -> tuple:
        """Descendants of ``v`` in preorder, ``v`` first."""
        self.check_vertex(v)
        out = []
        stack = [v]
        while stack:
            u = stack.pop()
            out.append(u)
            stack.extend(reversed(self.children(u)))
        return tuple(out)

    @cached_property
    def _stats(self) -> tuple:
        # (subtree minimum, subtree size) per vertex, in one postorder sweep
        mins, sizes = {}, {}
        for v in reversed(self.preorder):
            m, s = v, 1
            for c in self.children(v):
                if mins[c] < m:
                    m = mins[c]
                s += sizes[c]
            mins[v] = m
            sizes[v] = s
        return mins, sizes

    @cached_property
    def _hash_key(self):
        return (type(self).__name__, self._key(), self._color_key())

    def __eq__(self, other):
        if not isinstance(other, _Structure):
            return NotImplemented
        return type(self) is type(other) and self._hash_key == other._hash_key

    def __hash__(self):
        return hash(self._hash_key)


def _validate_parent_map(parent: Mapping) -> dict:
    pm = {}
    for v, p in parent.items():
        _check_label(v)
        if p == 0:
            p = None
        if p is not None and p not in parent:
            raise InvalidStructureError(f"parent {p!r} of vertex {v} is not a vertex")
        if p == v:
            raise InvalidStructureError(f"vertex {v} is its own parent")
        pm[v] = p
    settled = set()
    for v in pm:
        path = []
        u = v
        while u is not None and u not in settled:
            if u in path:
                raise InvalidStructureError("parent map contains a cycle")
            path.append(u)
            u = pm[u]
        settled.update(path)
    return pm


class Forest(_Structure):
    """Rooted forest; children and roots are unordered (kept ascending)."""

    def __init__(self, parent: Mapping[int, Optional[int]], color=None):
        self._parent = _validate_parent_map(parent)
        self._color = _normalize_colors(color, self._parent)

    @classmethod
    def _trusted(cls, parent: dict, color: Optional[dict]):
        obj = cls.__new__(cls)
        obj._parent = parent
        obj._color = color
        return obj

    def _recolored(self, color):
        return type(self)._trusted(self._parent, color)

    @cached_property
    def _kids(self) -> dict:
        kids = {v: [] for v in self._parent}
        for v in self.vertices:
            p = self._parent[v]
            if p is not None:
                kids[p].append(v)
        return {v: tuple(c) for v, c in kids.items()}

    @cached_property
    def roots(self) -> tuple:
        return tuple(v for v in self.vertices if self._parent[v] is None)

    def children(self, v: int) -> tuple:
        self.check_vertex(v)
        return self._kids[v]

    def _key(self):
        return tuple((v, self._parent[v] or 0) for v in self.vertices)

    def __repr__(self):
        body = ", ".join(f"{v}: {self._parent[v]}" for v in self.vertices)
        return f"{type(self).__name__}({{{body}}})"


class LabeledTree(Forest):
    """Rooted tree: a forest with a single root."""

    def __init__(self, parent: Mapping[int, Optional[int]], color=None):
        super().__init__(parent, color)
        if len(self.roots) != 1:
            raise InvalidStructureError(f"a tree needs exactly one root, got {len(self.roots)}")

    @property
    def root(self) -> int:
        return self.roots[0]


class PlaneTree(_Structure):
    """Rooted tree whose child lists are ordered."""

    def __init__(self, root: int, children: Mapping[int, Sequence[int]] = None, color=None):
        _check_label(root)
        children = children or {}
        parent = {root: None}
        kids = {}
        stack = [root]
        while stack:
            v = stack.pop()
            cs = tuple(children.get(v, ()))
            for c in cs:
                _check_label(c)
                if c in parent:
                    raise InvalidStructureError(f"vertex {c} appears twice in the plane tree")
                parent[c] = v
            kids[v] = cs
            stack.extend(cs)
        stray = set(children) - set(parent)
        if any(children[v] for v in stray):
            raise InvalidStructureError("children map has entries unreachable from the root")
        self._root = root
        self._parent = parent
        self._ckids = kids
        self._color = _normalize_colors(color, parent)

    @classmethod
    def _trusted(cls, root, parent, kids, color):
        obj = cls.__new__(cls)
        obj._root, obj._parent, obj._ckids, obj._color = root, parent, kids, color
        return obj

    def _recolored(self, color):
        return PlaneTree._trusted(self._root, self._parent, self._ckids, color)

    @property
    def root(self) -> int:
        return self._root

    @property
    def roots(self) -> tuple:
        return (self._root,)

    def children(self, v: int) -> tuple:
        self.check_vertex(v)
        return self._ckids[v]

    def _key(self):
        return (self._root, tuple((v, self._ckids[v]) for v in self.vertices))

    def to_labeled_tree(self) -> LabeledTree:
        """Forget the child order."""
        return LabeledTree._trusted(self._parent, self._color)

    def __repr__(self):
        body = ", ".join(f"{v}: {list(c)}" for v, c in self._ckids.items() if c)
        return f"PlaneTree({self._root}, {{{body}}})"


class PlaneForest(_Structure):
    """Ordered sequence of non-empty plane trees with disjoint vertex sets."""

    def __init__(self, trees: Sequence[PlaneTree]):
        trees = tuple(trees)
        parent, kids = {}, {}
        for tr in trees:
            if not isinstance(tr, PlaneTree):
                raise InvalidStructureError("plane forest members must be PlaneTree objects")
            if set(tr._parent) & set(parent):
                raise InvalidStructureError("plane forest trees must have disjoint vertex sets")
            parent.update(tr._parent)
            kids.update(tr._ckids)
        colored = {tr.is_colored for tr in trees}
        if len(colored) > 1:
            raise InvalidStructureError("either all trees of a plane forest are colored or none")
        self.trees = trees
        self._parent = parent
        self._ckids = kids
        if colored == {True}:
            self._color = {}
            for tr in trees:
                self._color.update(tr._color)
        else:
            self._color = None

    def _recolored(self, color):
        if color is None:
            return PlaneForest([tr.uncolored() for tr in self.trees])
        return PlaneForest([tr.with_colors({v: color[v] for v in tr._parent}) for tr in self.trees])

    @property
    def roots(self) -> tuple:
        return tuple(tr.root for tr in self.trees)

    def children(self, v: int) -> tuple:
        self.check_vertex(v)
        return self._ckids[v]

    def _key(self):
        return tuple(tr._key() for tr in self.trees)

    def __repr__(self):
        return f"PlaneForest({list(self.trees)!r})"


class SlottedTree(_Structure):
    """k-ary tree: each child sits in one of ``k`` numbered slots.

    ``slots[v]`` lists the occupant of slots ``1..k`` of ``v`` (``None`` for
    an empty slot); shorter sequences are padded.  For ``k == 2`` slot 1 is
    the left child and slot 2 the right child.  ``root=None`` gives the
    empty tree.
    """

    def __init__(self, k: int, root: Optional[int], slots: Mapping[int, Sequence[Optional[int]]] = None,
                 color=None):
        if not isinstance(k, int) or k < 2:
            raise InvalidStructureError(f"arity must be an integer >= 2, got {k!r}")
        slots = slots or {}
        parent, table = {}, {}
        if root is not None:
            _check_label(root)
            parent[root] = None
            stack = [root]
            while stack:
                v = stack.pop()
                row = tuple(slots.get(v, ()))
                if len(row) > k:
                    raise InvalidStructureError(f"vertex {v} has more than {k} slots")
                row = row + (None,) * (k - len(row))
                for c in row:
                    if c is None:
                        continue
                    _check_label(c)
                    if c in parent:
                        raise InvalidStructureError(f"vertex {c} occupies more than one slot")
                    parent[c] = v
                    stack.append(c)
                table[v] = row
        stray = set(slots) - set(parent)
        if any(any(c is not None for c in slots[v]) for v in stray):
            raise InvalidStructureError("slot map has entries unreachable from the root")
        self.k = k
        self._root = root
        self._parent = parent
        self._slots = table
        self._color = _normalize_colors(color, parent)

    @classmethod
    def binary(cls, root: Optional[int], left: Mapping[int, int] = None, right: Mapping[int, int] = None,
               color=None) -> SlottedTree:
        left, right = left or {}, right or {}
        slots = {v: (left.get(v), right.get(v)) for v in set(left) | set(right)}
        return cls(2, root, slots, color)

    @classmethod
    def _trusted(cls, k, root, parent, table, color):
        obj = cls.__new__(cls)
        obj.k, obj._root, obj._parent, obj._slots, obj._color = k, root, parent, table, color
        return obj

    def _recolored(self, color):
        return SlottedTree._trusted(self.k, self._root, self._parent, self._slots, color)

    @property
    def root(self) -> Optional[int]:
        return self._root

    @property
    def roots(self) -> tuple:
        return () if self._root is None else (self._root,)

    @cached_property
    def _kids(self) -> dict:
        return {v: tuple(c for c in row if c is not None) for v, row in self._slots.items()}

    def children(self, v: int) -> tuple:
        self.check_vertex(v)
        return self._kids[v]

    def slot_row(self, v: int) -> tuple:
        self.check_vertex(v)
        return self._slots[v]

    def child(self, v: int, slot: int) -> Optional[int]:
        self.check_vertex(v)
        if not 1 <= slot <= self.k:
            raise InvalidVertexError(f"slot {slot} outside 1..{self.k}")
        return self._slots[v][slot - 1]

    def left(self, v: int) -> Optional[int]:
        return self.child(v, 1)

    def right(self, v: int) -> Optional[int]:
        return self.child(v, 2)

    def slot_of(self, v: int) -> Optional[int]:
        """Slot (1-based) that ``v`` occupies under its parent; None for the root."""
        p = self.parent(v)
        if p is None:
            return None
        return self._slots[p].index(v) + 1

    def _key(self):
        return (self.k, self._root, tuple((v, self._slots[v]) for v in self.vertices))

    def __repr__(self):
        body = ", ".join(f"{v}: {list(r)}" for v, r in self._slots.items() if any(c is not None for c in r))
        return f"SlottedTree(k={self.k}, root={self._root}, {{{body}}})"


Structure = Union[Forest, LabeledTree, PlaneTree, PlaneForest, SlottedTree]


# -- unlabeled shapes ------------------------------------------------------

@lru_cache(maxsize=None)
def shape_size(shape) -> int:
    if shape is None:
        return 0
    return 1 + sum(shape_size(c) for c in shape)


def shape_hooks(shape) -> tuple:
    """Hook of every shape vertex, in preorder."""
    out = []

    def walk(s):
        if s is None:
            return 0
        i = len(out)
        out.append(0)
        h = 1 + sum(walk(c) for c in s)
        out[i] = h
        return h

    walk(shape)
    return tuple(out)


def label_shape(shape, labels: Sequence[int], color=None) -> SlottedTree:
    """Attach ``labels`` (given in preorder) to a shape, giving a slotted tree."""
    if len(labels) != shape_size(shape):
        raise InvalidStructureError("need one label per shape vertex")
    if shape is None:
        return SlottedTree(2, None, {}, color)
    k = len(shape)
    it = iter(labels)
    slots = {}

    def walk(s):
        v = next(it)
        row = []
        for c in s:
            row.append(None if c is None else walk(c))
        slots[v] = tuple(row)
        return v

    root = walk(shape)
    return SlottedTree(k, root, slots, color)


def shape_of(tree: SlottedTree):
    """Forget the labels of a slotted tree."""

    def walk(v):
        if v is None:
            return None
        return tuple(walk(c) for c in tree._slots[v])

    return walk(tree.root)


# -- vertex statistics -----------------------------------------------------

def subtree(T: Structure, v: int):
    """Descendant subtree of ``v``, rooted at ``v``, in the same family.

    Forests give a :class:`LabeledTree` and plane forests a
    :class:`PlaneTree`, since a descendant subtree is always a single tree.
    """
    desc = T.descendants(v)
    color = None if T._color is None else {d: T._color[d] for d in desc}
    if isinstance(T, Forest):
        parent = {d: T._parent[d] for d in desc}
        parent[v] = None
        return LabeledTree._trusted(parent, color)
    if isinstance(T, (PlaneTree, PlaneForest)):
        parent = {d: T._parent[d] for d in desc}
        parent[v] = None
        return PlaneTree._trusted(v, parent, {d: T._ckids[d] for d in desc}, color)
    if isinstance(T, SlottedTree):
        parent = {d: T._parent[d] for d in desc}
        parent[v] = None
        return SlottedTree._trusted(T.k, v, parent, {d: T._slots[d] for d in desc}, color)
    raise TypeError(f"unsupported structure {type(T).__name__}")


def min_label(T) -> Union[int, float]:
    """Smallest label in ``T``; :data:`INFINITY` for ``None`` or an empty tree."""
    if T is None or len(T) == 0:
        return INFINITY
    return T.vertices[0]


def hook(obj, v: int) -> int:
    """Number of descendants of ``v``, itself included.

    ``obj`` is either a structure (``v`` a label) or a shape (``v`` a
    1-based preorder position).
    """
    if obj is None or isinstance(obj, tuple):
        hooks = shape_hooks(obj)
        if not isinstance(v, int) or not 1 <= v <= len(hooks):
            raise InvalidVertexError(f"shape has no vertex at preorder position {v!r}")
        return hooks[v - 1]
    obj.check_vertex(v)
    return obj._stats[1][v]


def subtree_minima(T: Structure) -> dict:
    return dict(T._stats[0])


def is_proper(T: Structure, v: int) -> bool:
    T.check_vertex(v)
    return T._stats[0][v] == v


def proper_set(T: Structure) -> frozenset:
    mins = T._stats[0]
    return frozenset(v for v, m in mins.items() if m == v)


def improper_set(T: Structure) -> frozenset:
    mins = T._stats[0]
    return frozenset(v for v, m in mins.items() if m != v)


def pv(T: Structure) -> int:
    mins = T._stats[0]
    return sum(1 for v, m in mins.items() if m == v)


def improper_side(B: SlottedTree, v: int) -> Side:
    """Whether improper ``v`` of a binary tree is left or right improper."""
    if not isinstance(B, SlottedTree) or B.k != 2:
        raise DomainError("improper_side is defined on binary trees only")
    if is_proper(B, v):
        raise DomainError(f"vertex {v} is proper; left/right improper is undefined")
    mins = B._stats[0]
    lc, rc = B._slots[v]
    ml = INFINITY if lc is None else mins[lc]
    mr = INFINITY if rc is None else mins[rc]
    return Side.RIGHT if ml > mr else Side.LEFT


def right_improper_set(B: SlottedTree) -> frozenset:
    return frozenset(v for v in improper_set(B) if improper_side(B, v) is Side.RIGHT)


def leaves(T: Structure) -> tuple:
    return tuple(v for v in T.vertices if not T.children(v))

