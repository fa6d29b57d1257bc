"""Nested-interval Beatty colorings for dividing gap sets.

For a generator a_1 = 1, a_2, ..., a_t (a_i >= 2) the table of intervals
I_b = [C_b, D_b], b = t, t-1, ..., 1, starts from I_t = [1/2, 1] and steps
down by

    odd a_b:   C_{b-1} = (a_b - 1 + C_b) / a_b
    even a_b:  C_{b-1} = (a_b - 2 + C_b) / a_b        (same for D)

If d_b * gamma lies in I_b (mod 2) then d_h * gamma lies in I_h (mod 2)
for every h > b, and every I_b sits inside [1/2^k, 1] where k - 1 is the
longest run of 2's.  A rational alpha in I_1 therefore puts d_h * alpha
mod 2 inside the window for all h <= t, and the coloring n -> parity of
floor(n * alpha) has no monochromatic diffsequence of length 2^k + 1 among
gaps d_1..d_t.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from diffseq.coloring import BeattyColoring
from diffseq.exactreal import ExactRational, Interval, format_rational
from diffseq.gapset import GapSet, GapSetError


class ConstructionError(RuntimeError):
    """Internal-consistency failure of the interval construction."""

    kind = "internal consistency"


@dataclass(frozen=True)
class IntervalTable:
    a: tuple[int, ...]
    C: tuple[Fraction, ...]
    D: tuple[Fraction, ...]
    run_bound: int

    @property
    def t(self) -> int:
        return len(self.a)

    def interval(self, b: int) -> Interval:
        """I_b for 1 <= b <= t."""
        return Interval(self.C[b - 1], self.D[b - 1])

    @property
    def window(self) -> Interval:
        return Interval(Fraction(1, 2**self.run_bound), Fraction(1))

    def to_json(self) -> dict:
        return {
            "t": self.t,
            "a": list(self.a),
            "C": [format_rational(c) for c in self.C],
            "D": [format_rational(d) for d in self.D],
            "runBound": self.run_bound,
        }


@dataclass(frozen=True)
class JtInterval:
    """J_t, the intersection of I_1 over the tables of sizes 1..t (possibly empty)."""

    t: int
    lo: Fraction
    hi: Fraction

    @property
    def empty(self) -> bool:
        return self.lo > self.hi

    def to_json(self) -> dict:
        return {"t": self.t, "Clo": format_rational(self.lo), "Dhi": format_rational(self.hi),
                "empty": self.empty}


@dataclass(frozen=True)
class NestedAlpha:
    alpha: Fraction
    T: int
    run_bound: int
    table: IntervalTable
    gaps: tuple[int, ...]

    @property
    def window(self) -> Interval:
        return Interval(Fraction(1, 2**self.run_bound), Fraction(1))

    def to_json(self) -> dict:
        return {
            "alpha": format_rational(self.alpha),
            "T": self.T,
            "k_run": self.run_bound,
            "window": f"[1/{2**self.run_bound}, 1]",
        }


def _run_bound(values: Sequence[int]) -> int:
    best = run = 0
    for a in values:
        run = run + 1 if a == 2 else 0
        best = max(best, run)
    return best + 1


def build_intervals(a: Sequence[int]) -> IntervalTable:
    a = tuple(int(x) for x in a)
    if not a:
        raise GapSetError("generator must have at least one term")
    if a[0] != 1:
        raise GapSetError("build_intervals needs a_1 = 1 (apply reduce_by_first)")
    if any(x < 2 for x in a[1:]):
        raise GapSetError("generator values a_i must be >= 2 for i >= 2")
    t = len(a)
    C = [Fraction(0)] * t
    D = [Fraction(0)] * t
    C[t - 1], D[t - 1] = Fraction(1, 2), Fraction(1)
    for b in range(t, 1, -1):
        ab = a[b - 1]
        shift = ab - 1 if ab % 2 else ab - 2
        C[b - 2] = (shift + C[b - 1]) / ab
        D[b - 2] = (shift + D[b - 1]) / ab
    return IntervalTable(a, tuple(C), tuple(D), _run_bound(a[1:]))


def j_interval(a: Sequence[int], t: int | None = None) -> JtInterval:
    """J_t = ∩_{b=1..t} I_1 of the size-b table."""
    a = tuple(a)
    t = len(a) if t is None else t
    lo, hi = Fraction(0), Fraction(2)
    for b in range(1, t + 1):
        first = build_intervals(a[:b]).interval(1)
        lo, hi = max(lo, first.lo), min(hi, first.hi)
    return JtInterval(t, lo, hi)


def _as_generator(g: GapSet | Sequence[int]) -> GapSet:
    if isinstance(g, GapSet):
        if not g.is_dividing:
            raise GapSetError(f"{g} is not a dividing gap set")
        return g
    return GapSet.dividing(tuple(g))


def nested_alpha(g: GapSet | Sequence[int], n: int) -> NestedAlpha:
    """Exact rational alpha good for every gap d_t <= n.

    T is the least index with d_T > n (or the generator length if it ends
    first); alpha is the midpoint of I_1 in the size-T table, so each
    d_t * alpha mod 2 lies strictly inside I_t and hence in the window.
    """
    gen = _as_generator(g)
    if gen.generator_prefix(1)[0] != 1:
        raise GapSetError("nested_alpha needs a_1 = 1 (apply reduce_by_first)")
    two_run = gen.max_two_run()
    if two_run is None:
        raise GapSetError(f"{gen} has unbounded runs of 2's; no avoiding coloring exists")
    a: list[int] = []
    d = 1
    for x in gen.generator():
        a.append(x)
        d *= x
        if d > n:
            break
    table = build_intervals(a)
    first = table.interval(1)
    if not first.lo < first.hi:
        raise ConstructionError(f"degenerate interval I_1 = {first}")
    alpha = first.midpoint
    gaps = []
    d = 1
    for x in a:
        d *= x
        gaps.append(d)
    result = NestedAlpha(alpha, len(a), two_run + 1, table, tuple(gaps))
    for dt in gaps:
        if (dt * alpha) % 2 not in result.window:
            raise ConstructionError(f"d={dt}: d*alpha mod 2 outside {result.window}")
    return result


@dataclass(frozen=True)
class DividingConstruction:
    gapset: GapSet
    n: int
    index_scale: int
    nested: NestedAlpha
    coloring: BeattyColoring

    @property
    def avoided_length(self) -> int:
        return 2**self.nested.run_bound + 1

    def to_json(self) -> dict:
        return {**self.nested.to_json(), "indexScale": self.index_scale,
                "avoidedLength": self.avoided_length}


def dividing_construction(g: GapSet, n: int) -> DividingConstruction:
    """Beatty coloring of [1..n] for a dividing gap set with bounded 2-runs.

    Residue classes mod a_1 are colored independently through the reduced
    gap set: n is sent to m = (n - 1) // a_1 + 1.
    """
    if n < 1:
        raise ValueError("n must be positive")
    gen = _as_generator(g)
    a1 = gen.generator_prefix(1)[0]
    reduced = gen.reduce_by_first()
    nested = nested_alpha(reduced, -(-n // a1))
    return DividingConstruction(gen, n, a1, nested, BeattyColoring(ExactRational(nested.alpha), a1))


def dividing_coloring(g: GapSet, n: int) -> BeattyColoring:
    return dividing_construction(g, n).coloring
