"""Exact hook-product sums and proper-vertex polynomials.

Hook sums run over unlabeled binary shapes::

    sum over shapes b on n vertices of  n!/2^n * prod_v (1 + 1/h(v))  ==  (n+1)^(n-1)

and, multiplied out,  ``sum_b n! sum_{a subset V(b)} prod_{v in a} 1/h(v) == 2^n (n+1)^(n-1)``.

Proper-vertex polynomials ``sum_T t^pv(T)`` are computed three ways: closed
product formulas, brute force over the exhaustive generators, and (for
k-ary trees) the root-deletion recurrence.
"""
from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from math import factorial, prod
from typing import Iterable, Optional

from .core import label_shape, proper_set, pv, shape_hooks, shape_size
from .enumerate import catalan, compositions, count, gen_binary_shapes, gen_labeled, normalize_family, shape_ranges
from .errors import DomainError
from .poly import ONE, Poly, T
from .report import Check


def _check_size(shape, n: Optional[int]) -> int:
    size = shape_size(shape)
    if n is not None and n != size:
        raise DomainError(f"shape has {size} vertices, expected {n}")
    return size


def shape_weight(shape, n: Optional[int] = None) -> Fraction:
    """n!/2^n * prod over vertices of (1 + 1/hook)."""
    n = _check_size(shape, n)
    w = Fraction(factorial(n), 2 ** n)
    for h in shape_hooks(shape):
        w *= Fraction(h + 1, h)
    return w


def shape_contributions(n: int) -> list:
    return [shape_weight(s, n) for s in gen_binary_shapes(n)]


def _weight_range(n: int, lo: int, hi: int) -> Fraction:
    return sum((shape_weight(s, n) for s in gen_binary_shapes(n, lo, hi)), Fraction(0))


def _partitioned_sum(fn, n: int, workers: int):
    if workers <= 1:
        return fn(n, 0, catalan(n))
    ranges = shape_ranges(n, workers)
    with ProcessPoolExecutor(max_workers=workers) as pool:
        parts = list(pool.map(fn, *zip(*((n, lo, hi) for lo, hi in ranges))))
    return sum(parts, type(parts[0])(0))


def rhs_postnikov(n: int, workers: int = 1) -> Fraction:
    """Sum of :func:`shape_weight` over all binary shapes on n vertices."""
    if n < 1:
        raise DomainError("n must be at least 1")
    return _partitioned_sum(_weight_range, n, workers)


def shape_product_term(shape) -> Fraction:
    """n! * prod_v (1 + 1/h(v)) for one shape."""
    n = shape_size(shape)
    acc = Fraction(factorial(n))
    for h in shape_hooks(shape):
        acc *= Fraction(h + 1, h)
    return acc


def shape_subset_term(shape) -> Fraction:
    """n! * sum over vertex subsets a of prod_{v in a} 1/h(v), summed literally."""
    n = shape_size(shape)
    hooks = shape_hooks(shape)
    total = Fraction(0)
    for r in range(n + 1):
        for alpha in itertools.combinations(hooks, r):
            total += Fraction(1, prod(alpha))
    return factorial(n) * total


def _as_integer(x: Fraction, what: str) -> int:
    if x.denominator != 1:
        raise ArithmeticError(f"{what} is not an integer: {x}")
    return x.numerator


def _expanded_range(n: int, lo: int, hi: int) -> Fraction:
    return sum((shape_product_term(s) for s in gen_binary_shapes(n, lo, hi)), Fraction(0))


def rhs_expanded(n: int, workers: int = 1) -> int:
    """Multiplied-out hook sum, evaluated in product form per shape."""
    if n < 1:
        raise DomainError("n must be at least 1")
    return _as_integer(_partitioned_sum(_expanded_range, n, workers), f"expanded sum for n={n}")


def rhs_expanded_subsets(n: int) -> int:
    """Same quantity as :func:`rhs_expanded`, by explicit subset sums."""
    if n < 1:
        raise DomainError("n must be at least 1")
    total = sum((shape_subset_term(s) for s in gen_binary_shapes(n)), Fraction(0))
    return _as_integer(total, f"subset sum for n={n}")


def _positions(shape, alpha: Iterable[int]) -> tuple:
    n = shape_size(shape)
    alpha = tuple(sorted(set(alpha)))
    if any(not 1 <= a <= n for a in alpha):
        raise DomainError("subset must consist of preorder positions 1..n")
    return alpha


def labeling_count(shape, alpha: Iterable[int]) -> int:
    """Labelings of ``shape`` in which every vertex of ``alpha`` is proper.

    ``alpha`` holds 1-based preorder positions.
    """
    alpha = _positions(shape, alpha)
    hooks = shape_hooks(shape)
    n = len(hooks)
    denom = prod(hooks[a - 1] for a in alpha)
    q, r = divmod(factorial(n), denom)
    if r:
        raise ArithmeticError(f"{n}! is not divisible by the hook product {denom}")
    return q


def proper_positions(shape, labels) -> frozenset:
    """Preorder positions that are proper under the labeling ``labels``."""
    tree = label_shape(shape, labels)
    where = {lab: i for i, lab in enumerate(labels, 1)}
    return frozenset(where[v] for v in proper_set(tree))


def labeling_count_brute(shape, alpha: Iterable[int]) -> int:
    alpha = frozenset(_positions(shape, alpha))
    n = shape_size(shape)
    return sum(1 for perm in itertools.permutations(range(1, n + 1))
               if alpha <= proper_positions(shape, perm))


# -- proper-vertex polynomials ----------------------------------------------

POLY_FAMILIES = ("kary", "forests", "plane_forests", "trees", "plane_trees")


def _poly_family(family: str, k: Optional[int]) -> tuple:
    family = normalize_family(family)
    if family == "binary":
        if k not in (None, 2):
            raise DomainError("binary trees have arity 2")
        return "kary", 2
    if family == "kary":
        if k is None or k < 2:
            raise DomainError("k-ary polynomials need k >= 2")
        return "kary", k
    return family, None


def poly_closed(family: str, n: int, k: Optional[int] = None) -> Poly:
    """Closed-form proper-vertex polynomial.

    For ``kary``, ``forests`` and ``plane_forests`` this is the sum over
    structures on [n]; for ``trees`` and ``plane_trees`` it is the sum over
    trees on [n+1].
    """
    family, k = _poly_family(family, k)
    if n < 0:
        raise DomainError("n must be non-negative")
    if family == "trees":
        return T * prod(((i + 1) * T + (n - i) for i in range(n)), start=ONE)
    if family == "plane_trees":
        return T * prod(((2 * i + 1) * T + (n - i) for i in range(n)), start=ONE)
    if n == 0:
        return ONE
    if family == "kary":
        factors = ((k * i - i + 1) * T + k * (n - i) for i in range(1, n))
    elif family == "forests":
        factors = ((i + 1) * T + (n - i) for i in range(1, n))
    else:
        factors = ((2 * i + 1) * T + (n - i) for i in range(1, n))
    return T * prod(factors, start=ONE)


def poly_brute(family: str, n: int, k: Optional[int] = None, *, ceiling: Optional[int] = None) -> Poly:
    """Sum of t^pv over the exhaustive generator (independent of the closed forms)."""
    family, k = _poly_family(family, k)
    size = n + 1 if family in ("trees", "plane_trees") else n
    hist = [0] * (size + 1)
    for s in gen_labeled(family, size, k, ceiling=ceiling):
        hist[pv(s)] += 1
    return Poly(hist)


def _multinomial(parts) -> int:
    out = factorial(sum(parts))
    for p in parts:
        out //= factorial(p)
    return out


def poly_recurrence(n: int, k: int) -> Poly:
    """k-ary proper-vertex polynomial from the root-deletion recurrence.

    Trees on {0} u [m] split at the root into k slot subtrees.  Either 0
    sits in one of the subtrees (the root is then improper) or 0 is the
    root (which is proper and contributes a factor t).
    """
    if k < 2:
        raise DomainError("k must be at least 2")
    if n < 0:
        raise DomainError("n must be non-negative")
    a = [ONE]
    for m in range(n):
        # a[m+1] from trees on {0} u [m]
        total = Poly()
        if m >= 1:
            for sizes in compositions(m - 1, k):
                weight = m * _multinomial(sizes)  # m choices of root label
                base = [a[s] for s in sizes]
                for i in range(k):
                    term = prod(base[:i] + [a[sizes[i] + 1]] + base[i + 1:], start=ONE)
                    total = total + weight * term
        for sizes in compositions(m, k):
            total = total + T * (_multinomial(sizes) * prod((a[s] for s in sizes), start=ONE))
        a.append(total)
    return a[n]


# -- specializations --------------------------------------------------------

def falling_product(top: int, length: int) -> int:
    """top * (top-1) * ... with ``length`` factors."""
    return prod(range(top, top - length, -1))


def special_values(n: int, k: int = 2) -> list:
    """Evaluate the closed forms at t=1 (and t=2 for binary) against known counts."""
    if n < 1:
        raise DomainError("n must be at least 1")
    fact_cat = factorial(n) * catalan(n)
    return [
        Check(f"a_{n}(1) k={k}", poly_closed("kary", n, k)(1), falling_product(k * n, n - 1)),
        Check(f"a_{n}(1) k={k} vs |A^k_n|", poly_closed("kary", n, k)(1), count("kary", n, k)),
        Check(f"a_{n}(2) k=2", poly_closed("kary", n, 2)(2), 2 ** n * (n + 1) ** (n - 1)),
        Check(f"f_{n}(1)", poly_closed("forests", n)(1), (n + 1) ** (n - 1)),
        Check(f"p_{n}(1)", poly_closed("plane_forests", n)(1), fact_cat),
        Check(f"rooted trees on {n + 1} at t=1", poly_closed("trees", n)(1), (n + 1) ** n),
        Check(f"plane trees on {n + 1} at t=1", poly_closed("plane_trees", n)(1), factorial(n + 1) * catalan(n)),
    ]
