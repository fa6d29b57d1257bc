"""Difference sets D and their enumeration.

A gap set is immutable and enumerates its members lazily, in increasing
order.  Five families are supported:

``pow2``                 powers of two, {1, 2, 4, ...}
``factorial``            factorials, {1, 2, 6, 24, ...}
``dividing:P|T``         partial products of a generator a_1, a_2, ... given
                         as a finite prefix ``P`` followed by a tail ``T``
                         repeated forever (``T`` may be empty)
``explicit:1,2,6``       a finite list
``floorpow:p/q:floor``   {floor((p/q)^i) : i >= 0}, or ``ceil`` rounding
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from itertools import count, islice
from typing import Iterator, Sequence


class GapSetError(ValueError):
    """Malformed gap-set descriptor or an operation applied to the wrong kind."""


class Kind(enum.Enum):
    POWERS_OF_TWO = "pow2"
    FACTORIALS = "factorial"
    DIVIDING = "dividing"
    EXPLICIT = "explicit"
    FLOOR_POWERS = "floorpow"


DIVIDING_KINDS = (Kind.POWERS_OF_TWO, Kind.FACTORIALS, Kind.DIVIDING)


@dataclass(frozen=True)
class GapSet:
    kind: Kind
    prefix: tuple[int, ...] = ()
    tail: tuple[int, ...] = ()
    values: tuple[int, ...] = ()
    base: Fraction | None = None
    rounding: str = "floor"

    def __post_init__(self) -> None:
        if self.kind is Kind.DIVIDING:
            if not self.prefix and not self.tail:
                raise GapSetError("dividing generator is empty")
            if any(a < 1 for a in self.prefix + self.tail):
                raise GapSetError("generator values must be positive")
            later = list(self.prefix[1:]) + list(self.tail if self.prefix else self.tail[1:])
            if any(a < 2 for a in later):
                raise GapSetError("generator values a_i must be >= 2 for i >= 2")
            # a tail of 1's would repeat the last member forever
            if self.tail and min(self.tail) < 2:
                raise GapSetError("repeating tail values must be >= 2")
        elif self.kind is Kind.EXPLICIT:
            if any(v < 1 for v in self.values):
                raise GapSetError("explicit gaps must be positive integers")
            object.__setattr__(self, "values", tuple(sorted(set(self.values))))
        elif self.kind is Kind.FLOOR_POWERS:
            if self.base is None or self.base <= 1:
                raise GapSetError("floorpow base must be a rational > 1")
            if self.rounding not in ("floor", "ceil"):
                raise GapSetError(f"unknown rounding mode {self.rounding!r}")

    # -- constructors -----------------------------------------------------

    @classmethod
    def powers_of_two(cls) -> GapSet:
        return cls(Kind.POWERS_OF_TWO)

    @classmethod
    def factorials(cls) -> GapSet:
        return cls(Kind.FACTORIALS)

    @classmethod
    def dividing(cls, prefix: Sequence[int], tail: Sequence[int] = ()) -> GapSet:
        return cls(Kind.DIVIDING, prefix=tuple(prefix), tail=tuple(tail))

    @classmethod
    def explicit(cls, values: Sequence[int]) -> GapSet:
        return cls(Kind.EXPLICIT, values=tuple(values))

    @classmethod
    def floor_powers(cls, base: Fraction | int | str, rounding: str = "floor") -> GapSet:
        return cls(Kind.FLOOR_POWERS, base=Fraction(base), rounding=rounding)

    @classmethod
    def parse(cls, text: str) -> GapSet:
        """Parse a textual descriptor such as ``dividing:1,2,3|2,3``."""
        text = text.strip()
        head, _, rest = text.partition(":")
        try:
            if head == "pow2" and not rest:
                return cls.powers_of_two()
            if head == "factorial" and not rest:
                return cls.factorials()
            if head == "dividing":
                pre, _, tl = rest.partition("|")
                return cls.dividing(_int_list(pre), _int_list(tl))
            if head == "explicit":
                return cls.explicit(_int_list(rest))
            if head == "floorpow":
                base, _, mode = rest.partition(":")
                return cls.floor_powers(Fraction(base), mode or "floor")
        except (ValueError, ZeroDivisionError) as exc:
            if isinstance(exc, GapSetError):
                raise
            raise GapSetError(f"bad gap-set descriptor {text!r}: {exc}") from None
        raise GapSetError(f"unknown gap-set descriptor {text!r}")

    def __str__(self) -> str:
        if self.kind is Kind.DIVIDING:
            pre = ",".join(map(str, self.prefix))
            if self.tail:
                return f"dividing:{pre}|{','.join(map(str, self.tail))}"
            return f"dividing:{pre}"
        if self.kind is Kind.EXPLICIT:
            return "explicit:" + ",".join(map(str, self.values))
        if self.kind is Kind.FLOOR_POWERS:
            return f"floorpow:{self.base}:{self.rounding}"
        return self.kind.value

    # -- generators of dividing sequences ----------------------------------

    @property
    def is_dividing(self) -> bool:
        return self.kind in DIVIDING_KINDS

    @property
    def is_finite(self) -> bool:
        return self.kind is Kind.EXPLICIT or (self.kind is Kind.DIVIDING and not self.tail)

    def generator(self) -> Iterator[int]:
        """Yield a_1, a_2, ... for a dividing-type gap set."""
        if self.kind is Kind.POWERS_OF_TWO:
            yield 1
            while True:
                yield 2
        elif self.kind is Kind.FACTORIALS:
            yield from count(1)
        elif self.kind is Kind.DIVIDING:
            yield from self.prefix
            while self.tail:
                yield from self.tail
        else:
            raise GapSetError(f"{self} is not a dividing sequence")

    def generator_prefix(self, t: int) -> list[int]:
        """The first ``t`` generator values (fewer if the generator is finite)."""
        return list(islice(self.generator(), t))

    def max_two_run(self) -> int | None:
        """Longest run of consecutive 2's among a_2, a_3, ...; None if unbounded."""
        if self.kind is Kind.POWERS_OF_TWO:
            return None
        if self.kind is Kind.FACTORIALS:
            return 1
        if self.kind is not Kind.DIVIDING:
            raise GapSetError(f"{self} is not a dividing sequence")
        if self.tail and all(a == 2 for a in self.tail):
            return None
        # three tail copies cover any run that wraps across a period boundary
        span = len(self.prefix) + 3 * len(self.tail)
        return _longest_two_run(self.generator_prefix(span)[1:])

    # -- members ------------------------------------------------------------

    def iter_members(self) -> Iterator[int]:
        """Members in strictly increasing order (possibly infinite)."""
        if self.kind is Kind.EXPLICIT:
            yield from self.values
            return
        if self.kind is Kind.FLOOR_POWERS:
            p, q = self.base.numerator, self.base.denominator
            last = 0
            pi, qi = 1, 1
            while True:
                v = pi // qi if self.rounding == "floor" else -(-pi // qi)
                if v > last:
                    yield v
                    last = v
                pi *= p
                qi *= q
        d = 1
        for a in self.generator():
            d *= a
            yield d

    def members_up_to(self, n: int) -> list[int]:
        """All members d <= n, increasing."""
        out = []
        for d in self.iter_members():
            if d > n:
                break
            out.append(d)
        return out

    def contains(self, d: int) -> bool:
        for m in self.iter_members():
            if m >= d:
                return m == d
        return False

    __contains__ = contains

    def reduce_by_first(self) -> GapSet:
        """The gap set {d / a_1 : d in D}: same generator with a_1 replaced by 1."""
        if self.kind is not Kind.DIVIDING:
            if self.kind in DIVIDING_KINDS:
                return self  # a_1 = 1 already
            raise GapSetError("reduce_by_first needs a dividing gap set")
        if self.prefix:
            return GapSet.dividing((1,) + self.prefix[1:], self.tail)
        return GapSet.dividing((1,) + self.tail[1:], self.tail)


def _int_list(text: str) -> list[int]:
    text = text.strip()
    if not text:
        return []
    return [int(x) for x in text.split(",")]


def _longest_two_run(values: Sequence[int]) -> int:
    best = run = 0
    for a in values:
        run = run + 1 if a == 2 else 0
        best = max(best, run)
    return best
