"""Exhaustive generators and closed-form counts for every tree family.

Families (with accepted aliases):

* ``binary``         labeled binary trees on [n]
* ``kary``           labeled k-ary trees on [n] (``k >= 2``)
* ``trees``          rooted labeled trees on [n]
* ``forests``        rooted labeled forests on [n]
* ``plane_trees``    plane trees on [n]
* ``plane_forests``  plane forests on [n]

Slotted families are produced shape by shape (canonical shape order, then
labelings in lexicographic order), which makes them splittable by shape
index.  Forests and plane forests are built by recursive set decomposition
of the label set.
"""
from __future__ import annotations

import itertools
from functools import lru_cache
from math import comb, factorial
from typing import Iterator, Optional

from .core import BLACK, WHITE, Forest, LabeledTree, PlaneForest, PlaneTree, Side, SlottedTree
from .core import improper_set, improper_side, label_shape, proper_set, shape_size
from .errors import CeilingExceededError, UnsupportedFamilyError

DEFAULT_CEILING = 10 ** 7

FAMILIES = ("binary", "kary", "trees", "forests", "plane_trees", "plane_forests")

_ALIASES = {
    "binary_trees": "binary",
    "tree": "trees",
    "rooted_tree": "trees",
    "rooted_trees": "trees",
    "forest": "forests",
    "plane_tree": "plane_trees",
    "plane_forest": "plane_forests",
}

CONSTRAINTS = ("all", "Dn", "En", "Gn", "Qn")


def normalize_family(family: str) -> str:
    name = _ALIASES.get(family, family)
    if name not in FAMILIES:
        raise UnsupportedFamilyError(f"unsupported family {family!r}; expected one of {', '.join(FAMILIES)}")
    return name


def _arity(family: str, k: Optional[int]) -> int:
    if family == "binary":
        if k not in (None, 2):
            raise UnsupportedFamilyError("binary trees have arity 2")
        return 2
    if k is None or not isinstance(k, int) or k < 2:
        raise UnsupportedFamilyError("k-ary trees need an integer k >= 2")
    return k


def catalan(n: int) -> int:
    return comb(2 * n, n) // (n + 1)


def fuss_catalan(n: int, k: int) -> int:
    """Number of unlabeled k-ary trees on n vertices."""
    return comb(k * n, n) // ((k - 1) * n + 1)


def count(family: str, n: int, k: Optional[int] = None) -> int:
    """Exact number of labeled structures of ``family`` on [n]."""
    if n < 0:
        raise ValueError("n must be non-negative")
    family = normalize_family(family)
    if family in ("binary", "kary"):
        return factorial(n) * fuss_catalan(n, _arity(family, k))
    if family == "forests":
        return (n + 1) ** (n - 1) if n else 1
    if family == "trees":
        return n ** (n - 1) if n else 0
    if family == "plane_forests":
        return factorial(n) * catalan(n)
    if family == "plane_trees":
        return factorial(n) * catalan(n - 1) if n else 0
    raise AssertionError(family)


def check_ceiling(total: int, ceiling: Optional[int] = None) -> None:
    limit = DEFAULT_CEILING if ceiling is None else ceiling
    if total > limit:
        raise CeilingExceededError(f"refusing to generate {total} structures (ceiling {limit})")


# -- shapes -----------------------------------------------------------------

def compositions(total: int, parts: int) -> Iterator[tuple]:
    """Weak compositions of ``total`` into ``parts`` parts, lexicographically."""
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in compositions(total - first, parts - 1):
            yield (first,) + rest


@lru_cache(maxsize=None)
def kary_shapes(n: int, k: int) -> tuple:
    """All unlabeled k-ary shapes on n vertices, in canonical order."""
    if n == 0:
        return (None,)
    out = []
    for sizes in compositions(n - 1, k):
        for kids in itertools.product(*(kary_shapes(s, k) for s in sizes)):
            out.append(tuple(kids))
    return tuple(out)


def gen_binary_shapes(n: int, start: int = 0, stop: Optional[int] = None) -> Iterator:
    """Binary shapes on n vertices with index in ``[start, stop)``.

    Order: left-subtree size ascending, then left index, then right index.
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    yield from kary_shapes(n, 2)[start:stop]


def shape_rank(shape) -> int:
    """Index of a binary shape within the canonical order of its size."""
    if shape is None:
        return 0
    left, right = shape
    nl, nr = shape_size(left), shape_size(right)
    n = nl + nr + 1
    offset = sum(catalan(i) * catalan(n - 1 - i) for i in range(nl))
    return offset + shape_rank(left) * catalan(nr) + shape_rank(right)


def shape_unrank(n: int, index: int):
    if not 0 <= index < catalan(n):
        raise IndexError(f"shape index {index} out of range for n={n}")
    if n == 0:
        return None
    for nl in range(n):
        nr = n - 1 - nl
        block = catalan(nl) * catalan(nr)
        if index < block:
            li, ri = divmod(index, catalan(nr))
            return (shape_unrank(nl, li), shape_unrank(nr, ri))
        index -= block
    raise AssertionError("unreachable")


def shape_ranges(n: int, parts: int, k: int = 2) -> list:
    """Split shape indices of size n into at most ``parts`` contiguous ranges."""
    total = len(kary_shapes(n, k))
    parts = max(1, min(parts, total))
    step, extra = divmod(total, parts)
    out, lo = [], 0
    for i in range(parts):
        hi = lo + step + (1 if i < extra else 0)
        out.append((lo, hi))
        lo = hi
    return out


# -- labeled structures -----------------------------------------------------

def _gen_slotted(n: int, k: int, shape_range=None) -> Iterator[SlottedTree]:
    shapes = kary_shapes(n, k)
    if shape_range is not None:
        shapes = shapes[shape_range[0]:shape_range[1]]
    labels = range(1, n + 1)
    for shape in shapes:
        if shape is None:
            yield SlottedTree(k, None)
            continue
        for perm in itertools.permutations(labels):
            yield label_shape(shape, perm)


@lru_cache(maxsize=None)
def _forest_maps(labels: tuple) -> tuple:
    """Parent maps (as sorted item tuples) of all rooted forests on ``labels``."""
    if not labels:
        return ((),)
    first, rest = labels[0], labels[1:]
    out = []
    # the component holding the smallest label, then a forest on what is left
    for size in range(len(rest) + 1):
        for others in itertools.combinations(rest, size):
            comp = (first,) + others
            remaining = tuple(x for x in rest if x not in others)
            tails = _forest_maps(remaining)
            for tree in _tree_maps(comp):
                for tail in tails:
                    out.append(tuple(sorted(tree + tail)))
    return tuple(out)


@lru_cache(maxsize=None)
def _tree_maps(labels: tuple) -> tuple:
    out = []
    for r in labels:
        sub = tuple(x for x in labels if x != r)
        for f in _forest_maps(sub):
            out.append(((r, None),) + tuple((v, r if p is None else p) for v, p in f))
    return tuple(out)


@lru_cache(maxsize=None)
def _plane_forest_nests(labels: tuple) -> tuple:
    """Plane forests on ``labels`` as tuples of ``(root, subforest)`` nests."""
    if not labels:
        return ((),)
    out = []
    for size in range(1, len(labels) + 1):
        for first in itertools.combinations(labels, size):
            remaining = tuple(x for x in labels if x not in first)
            tails = _plane_forest_nests(remaining)
            for tree in _plane_tree_nests(first):
                for tail in tails:
                    out.append((tree,) + tail)
    return tuple(out)


@lru_cache(maxsize=None)
def _plane_tree_nests(labels: tuple) -> tuple:
    out = []
    for r in labels:
        sub = tuple(x for x in labels if x != r)
        for f in _plane_forest_nests(sub):
            out.append((r, f))
    return tuple(out)


def _nest_to_plane_tree(nest) -> PlaneTree:
    children = {}
    stack = [nest]
    while stack:
        v, sub = stack.pop()
        children[v] = tuple(s[0] for s in sub)
        stack.extend(sub)
    return PlaneTree(nest[0], children)


def gen_labeled(family: str, n: int, k: Optional[int] = None, *, ceiling: Optional[int] = None,
                shape_range: Optional[tuple] = None) -> Iterator:
    """Every labeled structure of ``family`` on [n], each exactly once.

    ``shape_range`` restricts slotted families to a half-open range of shape
    indices; concatenating consecutive ranges reproduces the full stream.
    """
    family = normalize_family(family)
    if n < 0:
        raise ValueError("n must be non-negative")
    check_ceiling(count(family, n, k), ceiling)
    labels = tuple(range(1, n + 1))
    if family in ("binary", "kary"):
        yield from _gen_slotted(n, _arity(family, k), shape_range)
    elif shape_range is not None:
        raise UnsupportedFamilyError("shape ranges apply to binary and k-ary families only")
    elif family == "forests":
        for items in _forest_maps(labels):
            yield Forest(dict(items))
    elif family == "trees":
        if n:
            for items in _tree_maps(labels):
                yield LabeledTree(dict(items))
    elif family == "plane_forests":
        for nests in _plane_forest_nests(labels):
            yield PlaneForest([_nest_to_plane_tree(t) for t in nests])
    elif family == "plane_trees":
        if n:
            for nest in _plane_tree_nests(labels):
                yield _nest_to_plane_tree(nest)


def _colorings(vertices: tuple, free: tuple) -> Iterator[dict]:
    """All colorings that may whiten only ``free`` vertices (others black)."""
    for whites in itertools.product((False, True), repeat=len(free)):
        color = dict.fromkeys(vertices, BLACK)
        for v, w in zip(free, whites):
            if w:
                color[v] = WHITE
        yield color


def gen_colored(family: Optional[str], n: int, constraint: str = "all", k: Optional[int] = None, *,
                ceiling: Optional[int] = None) -> Iterator:
    """Bicolored structures satisfying ``constraint``.

    * ``all`` -- every bicoloring of every structure of ``family`` on [n]
    * ``Dn``  -- binary trees on [n] whose improper vertices are black
    * ``En``  -- binary trees on [n] whose improper vertices are left improper
    * ``Gn``  -- trees on [n+1] rooted at a black n+1, as plane trees whose
      sibling subtrees appear in increasing order of their minima
    * ``Qn``  -- plane trees on [n+1] rooted at a black n+1
    """
    if constraint not in CONSTRAINTS:
        raise UnsupportedFamilyError(f"unsupported constraint {constraint!r}; expected one of {CONSTRAINTS}")
    if constraint == "all":
        if family is None:
            raise UnsupportedFamilyError("constraint 'all' needs a family")
        family = normalize_family(family)
        check_ceiling(count(family, n, k) * 2 ** n, ceiling)
        for s in gen_labeled(family, n, k, ceiling=ceiling):
            for color in _colorings(s.vertices, s.vertices):
                yield s.with_colors(color)
        return
    if constraint in ("Dn", "En"):
        if family is not None and normalize_family(family) != "binary":
            raise UnsupportedFamilyError(f"{constraint} consists of binary trees")
        check_ceiling(count("binary", n) * 2 ** n, ceiling)
        for b in gen_labeled("binary", n):
            if constraint == "Dn":
                free = tuple(sorted(proper_set(b)))
            else:
                if any(improper_side(b, v) is Side.RIGHT for v in improper_set(b)):
                    continue
                free = b.vertices
            for color in _colorings(b.vertices, free):
                yield b.with_colors(color)
        return
    # Gn / Qn live on [n+1] with the root n+1
    if family is not None:
        expected = "trees" if constraint == "Gn" else "plane_trees"
        if normalize_family(family) not in (expected, "plane_trees"):
            raise UnsupportedFamilyError(f"{constraint} consists of {expected}")
    top = n + 1
    labels = tuple(range(1, n + 1))
    if constraint == "Gn":
        check_ceiling(count("forests", n) * 2 ** n, ceiling)
        for items in _forest_maps(labels):
            parent = {v: top if p is None else p for v, p in items}
            parent[top] = None
            tree = LabeledTree(parent)
            mins = tree._stats[0]
            children = {v: tuple(sorted(tree.children(v), key=mins.__getitem__)) for v in tree.vertices}
            plane = PlaneTree(top, children)
            for color in _colorings(plane.vertices, labels):
                yield plane.with_colors(color)
    else:
        check_ceiling(count("plane_forests", n) * 2 ** n, ceiling)
        for nests in _plane_forest_nests(labels):
            plane = _nest_to_plane_tree((top, nests))
            for color in _colorings(plane.vertices, labels):
                yield plane.with_colors(color)


def colored_count(n: int, constraint: str) -> int:
    """Size of the constrained colored set, by closed form where one exists."""
    if constraint in ("Dn", "En"):
        return 2 ** n * (n + 1) ** (n - 1) if n else 1
    if constraint == "Gn":
        return 2 ** n * count("forests", n)
    if constraint == "Qn":
        return 2 ** n * count("plane_forests", n)
    raise UnsupportedFamilyError(f"no closed form for constraint {constraint!r}")
