"""Exact Delta(D, k; r) by backtracking over colorings of [1..n].

Positions are colored in order 1, 2, ..., n.  Each assigned position keeps
the length of the longest monochromatic diffsequence ending there, so a
new color is checked in O(|D ∩ [1, n]|) and any branch reaching length k
is cut.  Position 1 is fixed to color 0 and a color c > 0 is only tried
once color c - 1 has appeared, which removes all color permutations.
"""

from __future__ import annotations

import enum
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from diffseq import kernels
from diffseq.coloring import bits_to_str
from diffseq.gapset import GapSet

DEFAULT_BUDGET = 10**8


class Status(enum.Enum):
    FOUND = "found"
    EXCEEDS_CAP = "exceeds-cap"
    INCONCLUSIVE = "inconclusive"


class BudgetExceeded(RuntimeError):
    kind = "resource cap"


@dataclass
class SolverStats:
    nodes: int = 0
    seconds: float = 0.0


@dataclass
class SolverResult:
    status: Status
    gapset: str
    k: int
    r: int
    delta: int | None = None
    cap: int | None = None
    coloring: np.ndarray | None = None
    reached: int = 0
    stats: SolverStats = field(default_factory=SolverStats)

    def to_json(self) -> dict:
        out = {"status": self.status.value, "gapset": self.gapset, "k": self.k, "r": self.r}
        if self.status is Status.FOUND:
            out["delta"] = self.delta
        else:
            out["cap"] = self.cap
            out["reached"] = self.reached
        out["coloring"] = _digits(self.coloring) if self.coloring is not None else ""
        out["stats"] = {"nodes": self.stats.nodes, "seconds": round(self.stats.seconds, 6)}
        return out


def _digits(colors: np.ndarray) -> str:
    if colors.size and colors.max() > 1:
        return "".join(str(int(c)) for c in colors)
    return bits_to_str(colors)


def _gaps(g: GapSet, n: int) -> np.ndarray:
    return np.array(g.members_up_to(max(n - 1, 0)), dtype=np.int64)


def _check_args(k: int, r: int, n: int) -> None:
    if k < 2:
        raise ValueError("k must be at least 2")
    if r < 2:
        raise ValueError("r must be at least 2")
    if n < 1:
        raise ValueError("n must be positive")


def _valid_prefixes(gaps, k: int, r: int, depth: int) -> list[np.ndarray]:
    """All symmetry-reduced valid colorings of [1..depth], in search order."""
    frontier = [np.zeros(1, dtype=np.uint8)]
    for _ in range(depth - 1):
        nxt = []
        for p in frontier:
            for c in range(min(r, int(p.max()) + 2)):
                cand = np.append(p, np.uint8(c))
                status, _, _ = kernels.search(gaps, k, r, len(cand), cand, 0)
                if status == kernels.FOUND:
                    nxt.append(cand)
        frontier = nxt
    return frontier


def _search_task(args):
    gaps, k, r, n, prefix, budget = args
    return kernels.search(gaps, k, r, n, prefix, budget)


def _search(g: GapSet, k: int, r: int, n: int, budget: int, threads: int,
            prefix=None):
    gaps = _gaps(g, n)
    if prefix is None:
        prefix = np.zeros(1, dtype=np.uint8)
    if threads <= 1 or n < 12:
        return kernels.search(gaps, k, r, n, prefix, budget)
    # split on the first few positions; the first subtree in search order wins
    depth = min(n - 1, 8)
    subtrees = _valid_prefixes(gaps, k, r, depth)
    total = 0
    with ProcessPoolExecutor(max_workers=threads) as pool:
        tasks = [(gaps, k, r, n, p, budget) for p in subtrees]
        for status, coloring, nodes in pool.map(_search_task, tasks):
            total += nodes
            if status == kernels.FOUND:
                return status, coloring, total
            if status == kernels.BUDGET or total > budget:
                return kernels.BUDGET, None, total
    return kernels.NONE, None, total


def exists_valid_coloring(g: GapSet, k: int, r: int, n: int, *,
                          budget: int = DEFAULT_BUDGET, threads: int = 1) -> np.ndarray | None:
    """A coloring of [1..n] with no monochromatic length-k diffsequence, or None.

    Raises :class:`BudgetExceeded` if the node budget runs out first.
    """
    _check_args(k, r, n)
    status, coloring, nodes = _search(g, k, r, n, budget, threads)
    if status == kernels.BUDGET:
        raise BudgetExceeded(f"node budget {budget} exhausted at n={n} after {nodes} nodes")
    return coloring if status == kernels.FOUND else None


def delta(g: GapSet, k: int, r: int = 2, cap: int = 4096, *,
          budget: int = DEFAULT_BUDGET, threads: int = 1) -> SolverResult:
    """Smallest n such that every r-coloring of [1..n] has a monochromatic length-k sequence.

    n runs upward from k.  The previous valid coloring is tried first with
    one extra position appended; only when no extension works is a full
    search run at n.  Valid colorings restrict to valid colorings of
    shorter prefixes, so the first n without one is Delta.
    """
    start = time.perf_counter()
    stats = SolverStats()
    name = str(g)
    if k == 1:
        return SolverResult(Status.FOUND, name, k, r, delta=1,
                            coloring=np.zeros(0, dtype=np.uint8), stats=stats)
    _check_args(k, r, 1)
    # any coloring of [1..k-1] is valid
    current = np.zeros(k - 1, dtype=np.uint8)
    current[1::2] = 1
    n = k
    while n <= cap:
        gaps = _gaps(g, n)
        found = None
        for c in range(min(r, int(current.max()) + 2)):
            cand = np.append(current, np.uint8(c))
            status, _, _ = kernels.search(gaps, k, r, n, cand, 0)
            if status == kernels.FOUND:
                found = cand
                break
        if found is None:
            status, found, nodes = _search(g, k, r, n, budget - stats.nodes, threads)
            stats.nodes += nodes
            if status == kernels.BUDGET:
                stats.seconds = time.perf_counter() - start
                return SolverResult(Status.INCONCLUSIVE, name, k, r, cap=cap, coloring=current,
                                    reached=n - 1, stats=stats)
            if status == kernels.NONE:
                stats.seconds = time.perf_counter() - start
                return SolverResult(Status.FOUND, name, k, r, delta=n, coloring=current,
                                    reached=n - 1, stats=stats)
        current = found
        n += 1
    stats.seconds = time.perf_counter() - start
    return SolverResult(Status.EXCEEDS_CAP, name, k, r, cap=cap, coloring=current,
                        reached=cap, stats=stats)
