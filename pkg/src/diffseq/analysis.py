"""Monochromatic diffsequences in colored prefixes [1..n].

The core recurrence, for a position a with color c, is

    L(a) = 1 + max{ L(a - d) : d in D, d < a, color(a - d) = c }

(an empty max is 0).  It runs in O(n * |D ∩ [1, n]|) inside the kernel.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from diffseq import kernels
from diffseq.coloring import Coloring, coloring_from_description
from diffseq.gapset import GapSet


@dataclass(frozen=True)
class DiffseqWitness:
    positions: tuple[int, ...]
    color: int

    def __len__(self) -> int:
        return len(self.positions)

    def to_json(self) -> dict:
        return {"positions": list(self.positions), "color": self.color}


@dataclass(frozen=True)
class Certificate:
    """Coloring of [1..n] with no monochromatic length-k D-diffsequence."""

    gapset: str
    k: int
    n: int
    coloring: dict
    longest_found: int
    r: int = 2
    witness: DiffseqWitness | None = field(default=None, compare=False)

    def __post_init__(self) -> None:
        if self.longest_found >= self.k:
            raise ValueError("a certificate needs longest_found < k")

    @property
    def implied_bound(self) -> int:
        return self.n + 1

    def to_json(self) -> dict:
        return {
            "gapset": self.gapset,
            "k": self.k,
            "r": self.r,
            "n": self.n,
            "coloring": self.coloring,
            "longestFound": self.longest_found,
            "impliedBound": self.implied_bound,
            "claim": f"Delta({self.gapset},{self.k};{self.r}) >= {self.implied_bound}",
        }

    @classmethod
    def from_json(cls, data: dict | str) -> Certificate:
        if isinstance(data, str):
            data = json.loads(data)
        return cls(
            gapset=data["gapset"],
            k=int(data["k"]),
            n=int(data["n"]),
            coloring=data["coloring"],
            longest_found=int(data["longestFound"]),
            r=int(data.get("r", 2)),
        )

    def recheck(self) -> bool:
        """Re-run the DP on the stored coloring and compare."""
        col = coloring_from_description(self.coloring)
        length, _ = longest_mono(col, GapSet.parse(self.gapset), self.n)
        return length == self.longest_found and length < self.k


def _colors(c: Coloring | Sequence[int] | np.ndarray, n: int) -> np.ndarray:
    if hasattr(c, "materialize"):
        return np.asarray(c.materialize(n), dtype=np.uint8)
    arr = np.asarray(c, dtype=np.uint8)
    if arr.size < n:
        raise ValueError(f"coloring covers only [1..{arr.size}], need [1..{n}]")
    return arr[:n]


def _gaps(g: GapSet, n: int) -> np.ndarray:
    return np.array(g.members_up_to(max(n - 1, 0)), dtype=np.int64)


def is_mono_diffsequence(positions: Sequence[int], g: GapSet, c: Coloring) -> bool:
    if not positions:
        raise ValueError("positions must be nonempty")
    if positions[0] < 1:
        return False
    for a, b in zip(positions, positions[1:]):
        if b <= a or not g.contains(b - a):
            return False
    first = c.color_of(positions[0])
    return all(c.color_of(p) == first for p in positions[1:])


def chain_table(c, g: GapSet, n: int) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """(colors, lengths, preds) over [1..n]; arrays are 0-indexed."""
    colors = _colors(c, n)
    lengths, preds = kernels.chain_lengths(colors, _gaps(g, n))
    return colors, lengths, preds


def _backtrack(colors, preds, end: int, count: int) -> DiffseqWitness:
    path = []
    i = end
    while i >= 0 and len(path) < count:
        path.append(i + 1)
        i = int(preds[i])
    path.reverse()
    return DiffseqWitness(tuple(path), int(colors[end]))


def longest_mono(c, g: GapSet, n: int) -> tuple[int, DiffseqWitness | None]:
    """Length of the longest monochromatic D-diffsequence in [1..n] and a witness.

    The witness ends at the smallest position attaining the maximum and each
    step back takes the smallest predecessor position.
    """
    if n < 1:
        return 0, None
    colors, lengths, preds = chain_table(c, g, n)
    end = int(np.argmax(lengths))
    length = int(lengths[end])
    return length, _backtrack(colors, preds, end, length)


def max_gap_count(c, g: GapSet, gap_size: int, n: int) -> int:
    """Max number of steps of exactly ``gap_size`` over monochromatic diffsequences."""
    if n < 1 or not g.contains(gap_size):
        return 0
    return int(kernels.max_gap_count(_colors(c, n), _gaps(g, n), gap_size))


def first_failure(c, g: GapSet, k: int, n: int) -> tuple[int | None, DiffseqWitness | None]:
    """Smallest position ending a monochromatic length-k diffsequence, with witness."""
    colors, lengths, preds = chain_table(c, g, n)
    hits = np.flatnonzero(lengths >= k)
    if hits.size == 0:
        return None, None
    end = int(hits[0])
    return end + 1, _backtrack(colors, preds, end, k)


def verify_avoidance(c, g: GapSet, k: int, n: int) -> Certificate | DiffseqWitness:
    """Certificate that ``c`` avoids length-k sequences on [1..n], or a witness."""
    if k < 2:
        raise ValueError("k must be at least 2")
    colors, lengths, preds = chain_table(c, g, n)
    hits = np.flatnonzero(lengths >= k)
    if hits.size:
        return _backtrack(colors, preds, int(hits[0]), k)
    longest = int(lengths.max()) if n else 0
    desc = c.describe() if hasattr(c, "describe") else {
        "type": "explicit", "bits": "".join(map(str, colors.tolist()))}
    return Certificate(gapset=str(g), k=k, n=n, coloring=desc, longest_found=longest,
                       r=getattr(c, "r", 2))
