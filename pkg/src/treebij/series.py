"""Truncated power series in x whose coefficients are polynomials in t.

Used to check, coefficient by coefficient, the differential and functional
equations satisfied by the exponential generating functions

    A(x) = sum_n a_n(t) x^n/n!   (k-ary trees)
    F(x) = sum_n f_n(t) x^n/n!   (forests)
    P(x) = sum_n p_n(t) x^n/n!   (plane forests)

Everything is exact; there is no tolerance anywhere in this module.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from numbers import Rational
from typing import Optional, Sequence

from .errors import DegenerateExponentError, DomainError, OrderMismatchError
from .identity import poly_closed
from .enumerate import normalize_family
from .poly import Poly, T


def _as_poly(c) -> Poly:
    if isinstance(c, Poly):
        return c
    if isinstance(c, Rational):
        return Poly.const(c)
    raise TypeError(f"cannot use {type(c).__name__} as a series coefficient")


class Series:
    """Power series truncated after ``x^order``."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Sequence, order: int):
        if order < 0:
            raise ValueError("order must be non-negative")
        cs = [_as_poly(c) for c in list(coeffs)[:order + 1]]
        cs.extend(Poly() for _ in range(order + 1 - len(cs)))
        self.coeffs = tuple(cs)

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    @classmethod
    def one(cls, order: int) -> Series:
        return cls([1], order)

    @classmethod
    def x(cls, order: int) -> Series:
        return cls([0, 1], order)

    def __getitem__(self, i: int) -> Poly:
        return self.coeffs[i]

    def _same_order(self, other: Series) -> None:
        if self.order != other.order:
            raise OrderMismatchError(f"series orders differ: {self.order} vs {other.order}")

    def __add__(self, other):
        if not isinstance(other, Series):
            other = Series([other], self.order)
        self._same_order(other)
        return Series([a + b for a, b in zip(self.coeffs, other.coeffs)], self.order)

    __radd__ = __add__

    def __neg__(self) -> Series:
        return Series([-a for a in self.coeffs], self.order)

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, Series):
            c = _as_poly(other)
            return Series([c * a for a in self.coeffs], self.order)
        self._same_order(other)
        N = self.order
        out = [Poly() for _ in range(N + 1)]
        for i, a in enumerate(self.coeffs):
            if a.is_zero():
                continue
            for j in range(N + 1 - i):
                b = other.coeffs[j]
                if not b.is_zero():
                    out[i + j] = out[i + j] + a * b
        return Series(out, N)

    __rmul__ = __mul__

    def pow_int(self, m: int) -> Series:
        if not isinstance(m, int) or m < 0:
            raise ValueError("pow_int needs a non-negative integer exponent")
        result, base = Series.one(self.order), self
        while m:
            if m & 1:
                result = result * base
            base = base * base
            m >>= 1
        return result

    __pow__ = pow_int

    def derivative(self) -> Series:
        """d/dx; the result is one order shorter."""
        if self.order == 0:
            raise DomainError("cannot differentiate an order-0 series")
        return Series([i * self.coeffs[i] for i in range(1, self.order + 1)], self.order - 1)

    def shift(self) -> Series:
        """Multiply by x."""
        return Series((Poly(),) + self.coeffs[:-1], self.order)

    def truncate(self, order: int) -> Series:
        if order > self.order:
            raise OrderMismatchError("cannot extend a truncated series")
        return Series(self.coeffs[:order + 1], order)

    def reciprocal(self) -> Series:
        """1/S, for a series whose constant term is a nonzero constant."""
        c0 = self.coeffs[0]
        if not c0.is_constant() or c0.is_zero():
            raise DomainError("reciprocal needs a nonzero constant leading coefficient")
        inv0 = Fraction(1) / c0.constant_term()
        out = [Poly.const(inv0)]
        for m in range(1, self.order + 1):
            acc = Poly()
            for i in range(1, m + 1):
                acc = acc + self.coeffs[i] * out[m - i]
            out.append(-inv0 * acc)
        return Series(out, self.order)

    def specialize(self, t0) -> Series:
        """Substitute t = t0 in every coefficient."""
        return Series([Poly.const(c(t0)) for c in self.coeffs], self.order)

    def __eq__(self, other):
        if not isinstance(other, Series):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        terms = [f"({c})*x^{i}" for i, c in enumerate(self.coeffs) if not c.is_zero()]
        return f"Series[{self.order}](" + (" + ".join(terms) or "0") + ")"


def first_difference(a: Series, b: Series) -> Optional[int]:
    a._same_order(b)
    for i, (x, y) in enumerate(zip(a.coeffs, b.coeffs)):
        if x != y:
            return i
    return None


@dataclass(frozen=True)
class SeriesCheck:
    name: str
    order: int
    failed_order: Optional[int] = None

    @property
    def passed(self) -> bool:
        return self.failed_order is None

    def line(self) -> str:
        if self.passed:
            return f"PASS {self.name} through x^{self.order}"
        return f"FAIL {self.name}: first mismatch at x^{self.failed_order}"

    def as_dict(self) -> dict:
        return {"name": self.name, "passed": self.passed, "order": self.order, "failed_order": self.failed_order}


SERIES_FAMILIES = ("kary", "forests", "plane_forests")


def _series_family(family: str, k: Optional[int]) -> tuple:
    name = normalize_family(family)
    if name == "binary":
        return "kary", 2
    if name == "kary":
        if k is None or k < 2:
            raise DomainError("k-ary series need k >= 2")
        return "kary", k
    if name not in SERIES_FAMILIES:
        raise DomainError(f"no generating-function equation for {family!r}")
    return name, None


def build_series(family: str, N: int, k: Optional[int] = None) -> Series:
    """EGF of the proper-vertex polynomials, truncated after x^N."""
    family, k = _series_family(family, k)
    if N < 1:
        raise DomainError("N must be at least 1")
    return Series([poly_closed(family, n, k) / factorial(n) for n in range(N + 1)], N)


def _ode_shape(family: str, k: Optional[int]) -> tuple:
    # S' = c x S^j S' + t S^(j+1)
    if family == "kary":
        return k, k - 1
    if family == "forests":
        return 1, 1
    return 1, 2


def _label(family: str, k: Optional[int]) -> str:
    return f"kary k={k}" if family == "kary" else family


def check_ode(family: str, N: int, k: Optional[int] = None) -> SeriesCheck:
    """Verify the EGF's differential equation symbolically in t, through x^(N-1)."""
    family, k = _series_family(family, k)
    if N < 2:
        raise DomainError("N must be at least 2")
    S = build_series(family, N, k)
    dS = S.derivative()
    S = S.truncate(N - 1)
    c, j = _ode_shape(family, k)
    rhs = c * (S.pow_int(j) * dS).shift() + T * S.pow_int(j + 1)
    return SeriesCheck(f"ode {_label(family, k)}", N - 1, first_difference(dS, rhs))


def degenerate_exponent(family: str, t0: int, k: Optional[int] = None) -> int:
    """The exponent denominator (k-1)t - k, t - 1 or 2t - 1 at t = t0."""
    family, k = _series_family(family, k)
    if family == "kary":
        return k * t0 - t0 - k
    if family == "forests":
        return t0 - 1
    return 2 * t0 - 1


def check_functional(family: str, N: int, t0: int, k: Optional[int] = None) -> SeriesCheck:
    """Verify S^e == (1 + e x S^j)^t0 at t = t0, through x^N.

    ``e`` is the exponent denominator at t0.  Negative powers are moved to
    the opposite side so only non-negative integer powers are formed.
    """
    family, k = _series_family(family, k)
    if not isinstance(t0, int):
        raise DomainError("t0 must be an integer")
    e = degenerate_exponent(family, t0, k)
    if e == 0:
        raise DegenerateExponentError(f"exponent denominator vanishes at t={t0} for {_label(family, k)}")
    j = _ode_shape(family, k)[1]
    S = build_series(family, N, k).specialize(t0)
    inner = Series.one(N) + e * S.pow_int(j).shift()
    left = S.pow_int(max(e, 0)) * inner.pow_int(max(-t0, 0))
    right = inner.pow_int(max(t0, 0)) * S.pow_int(max(-e, 0))
    return SeriesCheck(f"functional {_label(family, k)} t={t0}", N, first_difference(left, right))
