"""Exact arithmetic for Beatty slopes.

An alpha value is either an exact rational or a refinable rational
interval.  The only interval in use is the even-factorial series

    alpha = 2 - e/2 - 1/(2e) = 1 - sum_{i>=1} 1/(2i)!

enclosed by ``[1 - S_I - T_I, 1 - S_I]`` with ``S_I`` the partial sum of
``I`` terms and ``T_I = 2/(2I+2)!``.  No floating point is used here.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Union

DEFAULT_REFINE_CAP = 64


class AmbiguousError(ArithmeticError):
    """The interval could not be narrowed enough within the refinement cap."""

    kind = "ambiguous"


class StraddlesBoundaryError(AmbiguousError):
    kind = "straddles boundary"


def format_rational(x: Fraction | int) -> str:
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def parse_rational(text: str) -> Fraction:
    return Fraction(text.strip())


@dataclass(frozen=True)
class Interval:
    """Closed rational interval ``[lo, hi]``."""

    lo: Fraction
    hi: Fraction

    def __post_init__(self) -> None:
        if self.lo > self.hi:
            raise ValueError(f"empty interval [{self.lo}, {self.hi}]")

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    @property
    def midpoint(self) -> Fraction:
        return (self.lo + self.hi) / 2

    def __contains__(self, x) -> bool:
        return self.lo <= x <= self.hi

    def within(self, lo, hi, *, open_hi: bool = False) -> bool:
        """True if this interval lies in ``[lo, hi]`` (or ``[lo, hi)``)."""
        if open_hi:
            return lo <= self.lo and self.hi < hi
        return lo <= self.lo and self.hi <= hi

    def __str__(self) -> str:
        return f"[{format_rational(self.lo)}, {format_rational(self.hi)}]"


@dataclass(frozen=True)
class ExactRational:
    value: Fraction

    def __post_init__(self) -> None:
        object.__setattr__(self, "value", Fraction(self.value))

    def bounds(self) -> Interval:
        return Interval(self.value, self.value)

    def describe(self) -> dict:
        return {"kind": "rational", "alpha": format_rational(self.value)}


class SeriesInterval:
    """Refinable enclosure of ``1 - sum_{i>=1} 1/(2i)!``.

    ``lo < alpha < hi`` always holds.  ``refine`` doubles the number of
    series terms; it is serialized by a lock so concurrent readers see a
    consistent ``(lo, hi)`` pair.
    """

    def __init__(self, terms: int = 1) -> None:
        if terms < 1:
            raise ValueError("precision needs at least one series term")
        self._lock = threading.Lock()
        self._terms = 0
        self._partial = Fraction(0)
        self._lo = self._hi = Fraction(0)
        self._extend_to(terms)

    def _extend_to(self, terms: int) -> None:
        s = self._partial
        for i in range(self._terms + 1, terms + 1):
            s += Fraction(1, factorial(2 * i))
        self._partial = s
        self._terms = terms
        self._hi = 1 - s
        self._lo = self._hi - tail_bound(terms)

    @property
    def terms_used(self) -> int:
        return self._terms

    @property
    def lo(self) -> Fraction:
        return self._lo

    @property
    def hi(self) -> Fraction:
        return self._hi

    def bounds(self) -> Interval:
        with self._lock:
            return Interval(self._lo, self._hi)

    def refine(self, terms: int | None = None) -> Interval:
        """Extend to ``terms`` series terms (default: double the current count)."""
        with self._lock:
            target = 2 * self._terms if terms is None else terms
            if target > self._terms:
                self._extend_to(target)
            return Interval(self._lo, self._hi)

    def describe(self) -> dict:
        b = self.bounds()
        return {"kind": "factorial-series", "terms": self.terms_used, "interval": str(b)}

    def __repr__(self) -> str:
        return f"SeriesInterval(terms={self._terms}, {self.bounds()})"


AlphaValue = Union[ExactRational, SeriesInterval]


def tail_bound(terms: int) -> Fraction:
    """Upper bound on sum_{i>terms} 1/(2i)!: twice the first omitted term."""
    return Fraction(2, factorial(2 * terms + 2))


def factorial_alpha(precision_terms: int = 8) -> SeriesInterval:
    return SeriesInterval(precision_terms)


def as_alpha(value) -> AlphaValue:
    if isinstance(value, (ExactRational, SeriesInterval)):
        return value
    return ExactRational(Fraction(value))


def floor_parity(alpha, m: int, refine_cap: int = DEFAULT_REFINE_CAP) -> int:
    """Parity of floor(m * alpha)."""
    return floor_value(alpha, m, refine_cap) & 1


def floor_value(alpha, m: int, refine_cap: int = DEFAULT_REFINE_CAP) -> int:
    alpha = as_alpha(alpha)
    if isinstance(alpha, ExactRational):
        v = alpha.value
        return (m * v.numerator) // v.denominator
    for _ in range(refine_cap + 1):
        b = alpha.bounds()
        lo_f = (m * b.lo.numerator) // b.lo.denominator
        hi_f = (m * b.hi.numerator) // b.hi.denominator
        if lo_f == hi_f:
            return lo_f
        alpha.refine()
    raise AmbiguousError(f"floor({m}*alpha) unresolved after {refine_cap} refinements")


def scaled_mod2_range(alpha, d: int, refine_cap: int = DEFAULT_REFINE_CAP) -> Interval:
    """Closed interval inside [0, 2) containing ``d * alpha mod 2``.

    For interval alphas the enclosure is refined until it is narrower than
    1/12, does not wrap past an even integer and has no integer endpoint.
    """
    alpha = as_alpha(alpha)
    if isinstance(alpha, ExactRational):
        x = (d * alpha.value) % 2
        return Interval(x, x)
    for _ in range(refine_cap + 1):
        b = alpha.bounds()
        lo, hi = d * b.lo, d * b.hi
        shift = 2 * ((lo.numerator // lo.denominator) // 2)
        x, y = lo - shift, hi - shift
        # alpha is strictly inside (lo, hi): an endpoint on an integer only means more terms
        if y < 2 and y - x < Fraction(1, 12) and x.denominator != 1 and y.denominator != 1:
            return Interval(x, y)
        alpha.refine()
    raise StraddlesBoundaryError(f"{d}*alpha mod 2 not localized after {refine_cap} refinements")


def floor_parities(alpha, count: int, refine_cap: int = DEFAULT_REFINE_CAP) -> bytearray:
    """Parities of floor(m * alpha) for m = 1..count, as a bytearray.

    Floors are advanced incrementally with exact integer division; for an
    interval alpha both endpoints are tracked and any position where they
    disagree is resolved individually by refinement.
    """
    alpha = as_alpha(alpha)
    out = bytearray(count)
    if isinstance(alpha, ExactRational):
        _fill_floor_parities(out, alpha.value)
        return out
    # tighten up front so endpoint disagreements are rare
    while alpha.bounds().width * count * 2**20 >= 1:
        alpha.refine()
    b = alpha.bounds()
    lo_f = _floor_walk(b.lo)
    hi_f = _floor_walk(b.hi)
    for i in range(count):
        f = next(hi_f)
        if next(lo_f) == f:
            out[i] = f & 1
        else:
            out[i] = floor_parity(alpha, i + 1, refine_cap)
    return out


def _floor_walk(x: Fraction):
    p, q = x.numerator, x.denominator
    f, rem = 0, 0
    while True:
        f += p // q
        rem += p % q
        if rem >= q:
            f += 1
            rem -= q
        yield f


def _fill_floor_parities(out: bytearray, x: Fraction) -> None:
    walk = _floor_walk(x)
    for i in range(len(out)):
        out[i] = next(walk) & 1
