"""Pure-Python kernels; the fallback when the compiled ``_kernels`` is absent.

Conventions shared with the compiled module: ``colors`` is a 0-indexed
sequence where ``colors[i]`` is the color of the integer ``i + 1``; ``gaps``
is strictly increasing.
"""

from __future__ import annotations

import numpy as np

FOUND = 1
NONE = 0
BUDGET = -1


def chain_lengths(colors, gaps):
    """Longest monochromatic diffsequence ending at each position.

    Returns ``(lengths, preds)`` where ``preds[i]`` is the index of the
    predecessor in one longest chain ending at ``i`` (smallest such index),
    or -1.
    """
    cols = bytes(np.asarray(colors, dtype=np.uint8))
    gs = [int(g) for g in gaps][::-1]
    n = len(cols)
    lengths = [0] * n
    preds = [-1] * n
    for i in range(n):
        c = cols[i]
        best = 0
        bp = -1
        for d in gs:
            j = i - d
            if j < 0:
                continue
            if cols[j] == c and lengths[j] > best:
                best = lengths[j]
                bp = j
        lengths[i] = best + 1
        preds[i] = bp
    return np.array(lengths, dtype=np.int32), np.array(preds, dtype=np.int64)


def max_gap_count(colors, gaps, target):
    """Max number of steps equal to ``target`` over monochromatic diffsequences."""
    cols = bytes(np.asarray(colors, dtype=np.uint8))
    gs = [int(g) for g in gaps]
    n = len(cols)
    m = [0] * n
    best = 0
    for i in range(n):
        c = cols[i]
        v = 0
        for d in gs:
            j = i - d
            if j < 0:
                break
            if cols[j] == c:
                w = m[j] + (d == target)
                if w > v:
                    v = w
        m[i] = v
        if v > best:
            best = v
    return best


def search(gaps, k, r, n, prefix, budget):
    """Depth-first search for an r-coloring of [1..n] avoiding length k.

    ``prefix`` fixes the first positions.  Colors are tried in increasing
    order and a fresh color is only opened as ``max_used + 1``.  Returns
    ``(status, coloring, nodes)`` with status FOUND, NONE or BUDGET.
    """
    gs = [int(g) for g in gaps]
    prefix = [int(c) for c in prefix]
    colors = [0] * n
    lens = [0] * n
    maxused = [-1] * (n + 1)
    nodes = 0
    start = min(len(prefix), n)
    for i in range(start):
        c = prefix[i]
        best = 0
        for d in gs:
            j = i - d
            if j < 0:
                break
            if colors[j] == c and lens[j] > best:
                best = lens[j]
        if best + 1 >= k:
            return NONE, None, nodes
        colors[i] = c
        lens[i] = best + 1
        maxused[i + 1] = max(maxused[i], c)
    if start == n:
        return FOUND, np.array(colors, dtype=np.uint8), nodes

    choice = [0] * (n + 1)
    i = start
    while True:
        if i == n:
            return FOUND, np.array(colors, dtype=np.uint8), nodes
        c = choice[i]
        if c >= r or c > maxused[i] + 1:
            if i == start:
                return NONE, None, nodes
            i -= 1
            choice[i] += 1
            continue
        nodes += 1
        if nodes > budget:
            return BUDGET, None, nodes
        best = 0
        for d in gs:
            j = i - d
            if j < 0:
                break
            if colors[j] == c and lens[j] > best:
                best = lens[j]
        if best + 1 >= k:
            choice[i] = c + 1
            continue
        colors[i] = c
        lens[i] = best + 1
        maxused[i + 1] = maxused[i] if maxused[i] >= c else c
        i += 1
        choice[i] = 0
