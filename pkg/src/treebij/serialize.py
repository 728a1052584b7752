"""JSON records for trees and forests.

A record carries ``family``, ``n`` and a ``parent`` array where entry
``i-1`` is the parent of vertex ``i`` (0 for a root).  Slotted trees add
``k`` and a ``slot`` array (0 for the root); plane families add a
``children`` object of ordered child lists (non-leaves only, keys are
decimal strings) and plane forests a ``trees`` list of roots in order.
``color`` is an optional array of ``"b"``/``"w"``.
"""
from __future__ import annotations

import json
from typing import Any

from .core import Forest, LabeledTree, PlaneForest, PlaneTree, SlottedTree
from .errors import InvalidStructureError


def family_of(s) -> str:
    if isinstance(s, SlottedTree):
        return "binary" if s.k == 2 else "kary"
    if isinstance(s, LabeledTree):
        return "trees"
    if isinstance(s, Forest):
        return "forests"
    if isinstance(s, PlaneTree):
        return "plane_trees"
    if isinstance(s, PlaneForest):
        return "plane_forests"
    raise TypeError(f"cannot serialize {type(s).__name__}")


def encode(s) -> dict:
    if not s.is_on_range():
        raise InvalidStructureError("only structures on {1, ..., n} can be serialized")
    family = family_of(s)
    n = s.n
    rec: dict[str, Any] = {"family": family, "n": n}
    rec["parent"] = [s.parent(v) or 0 for v in range(1, n + 1)]
    if isinstance(s, SlottedTree):
        rec["k"] = s.k
        rec["slot"] = [s.slot_of(v) or 0 for v in range(1, n + 1)]
    if isinstance(s, (PlaneTree, PlaneForest)):
        rec["children"] = {str(v): list(s.children(v)) for v in range(1, n + 1) if s.children(v)}
    if isinstance(s, PlaneForest):
        rec["trees"] = list(s.roots)
    if s.is_colored:
        rec["color"] = [s.color(v).value for v in range(1, n + 1)]
    return rec


def dumps(s) -> str:
    """Canonical one-line JSON for a structure."""
    return json.dumps(encode(s), sort_keys=True, separators=(",", ":"))


def _int(value, what: str) -> int:
    if not isinstance(value, int) or isinstance(value, bool):
        raise InvalidStructureError(f"{what} must be an integer")
    return value


def _reachable(root: int, children: dict) -> dict:
    out, stack, seen = {}, [root], {root}
    while stack:
        v = stack.pop()
        kids = children.get(v, [])
        out[v] = kids
        for c in kids:
            if c in seen:
                raise InvalidStructureError(f"vertex {c} appears twice in the children lists")
            seen.add(c)
            stack.append(c)
    return out


def decode(rec: Any):
    """Rebuild a structure from a record, validating every field."""
    if not isinstance(rec, dict):
        raise InvalidStructureError("a tree record must be a JSON object")
    family = rec.get("family")
    n = _int(rec.get("n"), "n")
    if n < 0:
        raise InvalidStructureError("n must be non-negative")
    parent = rec.get("parent")
    if not isinstance(parent, list) or len(parent) != n:
        raise InvalidStructureError("parent must be an array of length n")
    parent = [_int(p, "parent entry") for p in parent]
    if any(not 0 <= p <= n for p in parent):
        raise InvalidStructureError("parent entries must lie in 0..n")
    pmap = {v: (parent[v - 1] or None) for v in range(1, n + 1)}
    color = rec.get("color")
    if color is not None:
        if not isinstance(color, list) or len(color) != n:
            raise InvalidStructureError("color must be an array of length n")
        color = {v: color[v - 1] for v in range(1, n + 1)}
    roots = [v for v, p in pmap.items() if p is None]

    if family in ("binary", "kary"):
        k = _int(rec.get("k", 2 if family == "binary" else None), "k")
        if family == "binary" and k != 2:
            raise InvalidStructureError("binary records have k = 2")
        slot = rec.get("slot")
        if not isinstance(slot, list) or len(slot) != n:
            raise InvalidStructureError("slot must be an array of length n")
        if len(roots) > 1 or (n and not roots):
            raise InvalidStructureError("a slotted tree has exactly one root")
        table: dict[int, list] = {v: [None] * k for v in pmap}
        for v, p in pmap.items():
            s = _int(slot[v - 1], "slot entry")
            if p is None:
                if s != 0:
                    raise InvalidStructureError("the root has slot 0")
                continue
            if not 1 <= s <= k:
                raise InvalidStructureError(f"slot of vertex {v} must lie in 1..{k}")
            if table[p][s - 1] is not None:
                raise InvalidStructureError(f"slot {s} of vertex {p} is used twice")
            table[p][s - 1] = v
        tree = SlottedTree(k, roots[0] if roots else None, table, color)
        if len(tree) != n:
            raise InvalidStructureError("parent array is not a tree")
        return tree

    if family in ("trees", "forests"):
        if family == "trees":
            return LabeledTree(pmap, color)
        return Forest(pmap, color)

    if family in ("plane_trees", "plane_forests"):
        raw = rec.get("children", {})
        if not isinstance(raw, dict):
            raise InvalidStructureError("children must be an object")
        try:
            children = {int(key): [_int(c, "child") for c in val] for key, val in raw.items()}
        except (TypeError, ValueError):
            raise InvalidStructureError("children keys must be vertex labels and values arrays") from None
        if family == "plane_trees":
            if len(roots) != 1:
                raise InvalidStructureError("a plane tree has exactly one root")
            order = [roots[0]]
        else:
            order = rec.get("trees")
            if not isinstance(order, list) or sorted(order) != roots:
                raise InvalidStructureError("trees must list every root exactly once")
        trees = []
        for r in order:
            tr = PlaneTree(r, _reachable(r, children))
            if color is not None:
                tr = tr.with_colors({v: color[v] for v in tr.vertices})
            trees.append(tr)
        out = trees[0] if family == "plane_trees" else PlaneForest(trees)
        if len(out) != n or any(out.parent(v) != pmap[v] for v in pmap):
            raise InvalidStructureError("children lists disagree with the parent array")
        return out

    raise InvalidStructureError(f"unknown family {family!r}")


def loads(text: str):
    try:
        rec = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InvalidStructureError(f"malformed JSON: {exc}") from None
    return decode(rec)
