"""Maps between colored binary trees, plane trees and forests.

The chain, for colored binary trees ``D`` whose improper vertices are all
black::

    D --big_flip--> E --restricted_phi--> G --gamma--> bicolored forest

``big_flip`` flips every right-improper vertex, ``phi`` is the
first-child / next-sibling correspondence that hangs a binary tree on [n]
below a new black root ``n+1``, and ``gamma`` deletes that root.  Each stage
has an inverse, and the domain predicates ``is_in_*`` are checked directly
from their definitions, independently of the maps.
"""
from __future__ import annotations

from .core import (
    BLACK,
    LabeledTree,
    Forest,
    PlaneForest,
    PlaneTree,
    Side,
    SlottedTree,
    improper_set,
    improper_side,
    is_proper,
    pv,
    right_improper_set,
    subtree,
)
from .enumerate import gen_colored, gen_labeled
from .errors import DomainError, InvalidStructureError, MembershipError
from .report import Check

MAP_NAMES = ("gamma", "gamma_bar", "flip_at", "big_flip", "phi", "full")


def _require_range(T, what: str) -> None:
    if not T.is_on_range():
        raise DomainError(f"{what} must have vertex set {{1, ..., n}}")


def _is_colored_binary(B) -> bool:
    return isinstance(B, SlottedTree) and B.k == 2 and B.is_colored


# -- membership predicates ----------------------------------------------------

def is_in_Dn(B) -> bool:
    """Colored binary tree on [n] in which every improper vertex is black."""
    if not _is_colored_binary(B) or not B.is_on_range():
        return False
    return all(B.color(v) is BLACK for v in B.vertices if not is_proper(B, v))


def is_in_En(B) -> bool:
    """Colored binary tree on [n] in which every improper vertex is left improper."""
    if not _is_colored_binary(B) or not B.is_on_range():
        return False
    mins = {}
    for v in reversed(B.preorder):
        mins[v] = min([v] + [mins[c] for c in B.children(v)])
    inf = float("inf")
    for v in B.vertices:
        if mins[v] == v:
            continue
        lc, rc = B.left(v), B.right(v)
        if (inf if lc is None else mins[lc]) > (inf if rc is None else mins[rc]):
            return False
    return True


def is_in_Qn(Q) -> bool:
    """Colored plane tree on [n+1] rooted at a black n+1."""
    if not isinstance(Q, PlaneTree) or not Q.is_colored or not Q.is_on_range():
        return False
    return Q.root == Q.n and Q.color(Q.root) is BLACK


def is_in_Gn(G) -> bool:
    """Colored tree on [n+1] rooted at a black n+1.

    Plane trees qualify only when every child list is ordered by increasing
    subtree minimum, which is how unordered trees sit inside the plane ones.
    """
    if isinstance(G, PlaneTree):
        if not is_in_Qn(G):
            return False
        for v in G.vertices:
            minima = [min(G.descendants(c)) for c in G.children(v)]
            if any(a >= b for a, b in zip(minima, minima[1:])):
                return False
        return True
    if isinstance(G, LabeledTree):
        return G.is_colored and G.is_on_range() and G.root == G.n and G.color(G.root) is BLACK
    return False


# -- gamma / gamma_bar ----------------------------------------------------------

def gamma(T: LabeledTree) -> Forest:
    """Delete the root n+1; its children become the roots of a forest on [n]."""
    if isinstance(T, PlaneTree):
        T = T.to_labeled_tree()
    if not isinstance(T, LabeledTree):
        raise DomainError("gamma takes a rooted labeled tree")
    _require_range(T, "gamma input")
    top = T.n
    if T.root != top:
        raise MembershipError("root_is_n_plus_1", f"root must be {top}, got {T.root}")
    if T.is_colored and T.color(top) is not BLACK:
        raise MembershipError("is_in_Gn", "root of a colored input must be black")
    parent = {v: (None if p == top else p) for v, p in T._parent.items() if v != top}
    color = None if T._color is None else {v: c for v, c in T._color.items() if v != top}
    return Forest(parent, color)


def gamma_inv(F: Forest) -> LabeledTree:
    if not isinstance(F, Forest):
        raise DomainError("gamma_inv takes a forest")
    _require_range(F, "gamma_inv input")
    top = F.n + 1
    parent = {v: (top if p is None else p) for v, p in F._parent.items()}
    parent[top] = None
    color = None
    if F._color is not None:
        color = dict(F._color)
        color[top] = BLACK
    return LabeledTree(parent, color)


def gamma_bar(P: PlaneTree) -> PlaneForest:
    """Plane forest of the descendant subtrees of the root's children, in order."""
    if not isinstance(P, PlaneTree):
        raise DomainError("gamma_bar takes a plane tree")
    _require_range(P, "gamma_bar input")
    top = P.n
    if P.root != top:
        raise MembershipError("root_is_n_plus_1", f"root must be {top}, got {P.root}")
    if P.is_colored and P.color(top) is not BLACK:
        raise MembershipError("is_in_Qn", "root of a colored input must be black")
    return PlaneForest([subtree(P, c) for c in P.children(top)])


def gamma_bar_inv(PF: PlaneForest) -> PlaneTree:
    if not isinstance(PF, PlaneForest):
        raise DomainError("gamma_bar_inv takes a plane forest")
    _require_range(PF, "gamma_bar_inv input")
    top = PF.n + 1
    children = {v: PF.children(v) for v in PF.vertices}
    children[top] = PF.roots
    color = None
    if PF.is_colored:
        color = PF.colors
        color[top] = BLACK
    return PlaneTree(top, children, color)


# -- flips ----------------------------------------------------------------------

def _flip_many(B: SlottedTree, vs) -> SlottedTree:
    slots = dict(B._slots)
    color = dict(B._color)
    for v in vs:
        B.check_vertex(v)
        left, right = slots[v]
        slots[v] = (right, left)
        color[v] = color[v].toggled()
    parent = B._parent
    return SlottedTree._trusted(2, B.root, parent, slots, color)


def flip_at(B: SlottedTree, v: int) -> SlottedTree:
    """Swap the two subtrees below ``v`` and toggle the color of ``v``."""
    if not _is_colored_binary(B):
        raise DomainError("flips act on colored binary trees")
    return _flip_many(B, (v,))


def big_flip(D: SlottedTree) -> SlottedTree:
    """Flip at every right-improper vertex at once; maps D_n onto E_n."""
    if not is_in_Dn(D):
        raise MembershipError("is_in_Dn")
    targets = [v for v in improper_set(D) if improper_side(D, v) is Side.RIGHT]
    return _flip_many(D, targets)


def big_flip_inv(E: SlottedTree) -> SlottedTree:
    """Flip at every white improper vertex at once; maps E_n onto D_n."""
    if not is_in_En(E):
        raise MembershipError("is_in_En")
    targets = [v for v in improper_set(E) if E.color(v) is not BLACK]
    return _flip_many(E, targets)


# -- phi ------------------------------------------------------------------------

def phi(B: SlottedTree) -> PlaneTree:
    """Binary tree on [n] -> plane tree on [n+1] rooted at n+1.

    The binary root becomes the first child of n+1, a left child becomes a
    first child, and a right child becomes the next sibling to the right.
    Colors carry over and the new root is black.
    """
    if not isinstance(B, SlottedTree) or B.k != 2:
        raise DomainError("phi takes a binary tree")
    _require_range(B, "phi input")
    top = B.n + 1

    def sibling_run(v):
        run = []
        while v is not None:
            run.append(v)
            v = B._slots[v][1]
        return tuple(run)

    children = {top: sibling_run(B.root)}
    for v in B.vertices:
        children[v] = sibling_run(B._slots[v][0])
    color = None
    if B._color is not None:
        color = dict(B._color)
        color[top] = BLACK
    return PlaneTree(top, children, color)


def phi_inv(Q: PlaneTree) -> SlottedTree:
    if not isinstance(Q, PlaneTree):
        raise DomainError("phi_inv takes a plane tree")
    _require_range(Q, "phi_inv input")
    top = Q.n
    if Q.root != top:
        raise MembershipError("root_is_n_plus_1", f"root must be {top}, got {Q.root}")
    if Q.is_colored and Q.color(top) is not BLACK:
        raise MembershipError("is_in_Qn", "root must be black")
    left, right = {}, {}
    for u in Q.vertices:
        kids = Q.children(u)
        if kids and u != top:
            left[u] = kids[0]
        for a, b in zip(kids, kids[1:]):
            right[a] = b
    root = Q.children(top)[0] if Q.children(top) else None
    color = None
    if Q.is_colored:
        color = {v: c for v, c in Q._color.items() if v != top}
    return SlottedTree.binary(root, left, right, color)


def restricted_phi(E: SlottedTree) -> PlaneTree:
    if not is_in_En(E):
        raise MembershipError("is_in_En")
    return phi(E)


def restricted_phi_inv(G) -> SlottedTree:
    if isinstance(G, LabeledTree):
        G = order_by_minima(G)
    if not is_in_Gn(G):
        raise MembershipError("is_in_Gn")
    return phi_inv(G)


def order_by_minima(T: LabeledTree) -> PlaneTree:
    """Plane tree whose child lists are sorted by subtree minimum."""
    mins = T._stats[0]
    children = {v: tuple(sorted(T.children(v), key=mins.__getitem__)) for v in T.vertices}
    return PlaneTree(T.root, children, T._color)


# -- composite ------------------------------------------------------------------

def full_map(D: SlottedTree) -> Forest:
    """D_n -> bicolored forests on [n]: gamma after phi after the big flip."""
    G = restricted_phi(big_flip(D))
    return gamma(G.to_labeled_tree())


def full_map_inv(F: Forest) -> SlottedTree:
    if not isinstance(F, Forest) or not F.is_colored:
        raise MembershipError("is_bicolored_forest")
    if not F.is_on_range():
        raise MembershipError("is_bicolored_forest", "forest must live on {1, ..., n}")
    return big_flip_inv(restricted_phi_inv(gamma_inv(F)))


def apply_map(name: str, structure, inverse: bool = False, vertex: int | None = None):
    """Dispatch by map name, as used by the command line."""
    if name == "flip_at":
        if vertex is None:
            raise DomainError("flip_at needs a vertex")
        return flip_at(structure, vertex)
    table = {
        "gamma": (gamma, gamma_inv),
        "gamma_bar": (gamma_bar, gamma_bar_inv),
        "big_flip": (big_flip, big_flip_inv),
        "phi": (phi, phi_inv),
        "full": (full_map, full_map_inv),
    }
    if name not in table:
        raise InvalidStructureError(f"unknown map {name!r}")
    forward, backward = table[name]
    return backward(structure) if inverse else forward(structure)


def verify_bijection(n: int) -> list:
    """Exhaustively check the D_n -> E_n -> G_n -> forests chain for one n."""
    D = list(gen_colored("binary", n, "Dn"))
    expected = 2 ** n * (n + 1) ** (n - 1) if n else 1
    weighted = sum(2 ** pv(b) for b in gen_labeled("binary", n))
    checks = [
        Check(f"|D_{n}| vs sum of 2^pv over binary trees", len(D), weighted),
        Check(f"|D_{n}| vs 2^n (n+1)^(n-1)", len(D), expected),
    ]
    outside_E = outside_G = side_mismatch = not_identity = 0
    images = set()
    for d in D:
        e = big_flip(d)
        if not is_in_En(e):
            outside_E += 1
        white_improper = frozenset(v for v in improper_set(e) if e.color(v) is not BLACK)
        if white_improper != right_improper_set(d):
            side_mismatch += 1
        g = restricted_phi(e)
        if not is_in_Gn(g):
            outside_G += 1
        f = gamma(g.to_labeled_tree())
        images.add(f)
        if full_map_inv(f) != d:
            not_identity += 1
    forests = set(gen_colored("forests", n, "all"))
    checks += [
        Check("big_flip outputs not in E_n", outside_E, 0),
        Check("trees whose right-improper set differs from the white-improper set after big_flip", side_mismatch, 0),
        Check("restricted_phi outputs not in G_n", outside_G, 0),
        Check("distinct images of full_map", len(images), len(D)),
        Check(f"image equals bicolored forests on [{n}]", images == forests, True),
        Check("|bicolored forests|", len(forests), expected),
        Check("roundtrip failures of the inverse", not_identity, 0),
    ]
    return checks
