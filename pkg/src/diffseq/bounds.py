"""Lower bounds on Delta(pow2, k) from the stretched Thue-Morse colorings.

``refined_bound(k, t, u)`` is the value certified by P_{t,u}:

    2^(t+u) * (k - 2^(u+1) - t^2/2 + t) + 2^(u+1)

``simple_bound`` is the u = 0, t = isqrt(2k) special form and
``theorem_bound`` is the closed-form expression in sqrt(2k).  Everything is
exact except ``theorem_bound``, which is enclosed with mpmath interval
arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import floor, isqrt

import mpmath

from diffseq import analysis
from diffseq.analysis import Certificate, DiffseqWitness
from diffseq.coloring import PeriodicColoring
from diffseq.gapset import GapSet

THEOREM_PRECISION = Fraction(1, 10**6)


def refined_bound(k: int, t: int, u: int) -> int:
    value = 2 ** (t + u) * (k - 2 ** (u + 1) - Fraction(t * t, 2) + t) + 2 ** (u + 1)
    return floor(value)


def simple_bound(k: int) -> int:
    s = isqrt(2 * k)
    return 2**s * (s - 2) + 2


@dataclass(frozen=True)
class TheoremValue:
    lo: mpmath.mpf
    hi: mpmath.mpf

    @property
    def value(self) -> Fraction:
        """Midpoint of the enclosure, as an exact rational."""
        return (_mpf_fraction(self.lo) + _mpf_fraction(self.hi)) / 2

    def __float__(self) -> float:
        return float(self.value)

    def to_json(self) -> dict:
        return {"value": mpmath.nstr((self.lo + self.hi) / 2, 12), "precision": "1e-6",
                "enclosure": [mpmath.nstr(self.lo, 15), mpmath.nstr(self.hi, 15)]}


def _mpf_fraction(x: mpmath.mpf) -> Fraction:
    man, exp = x.man_exp
    return Fraction(int(man)) * Fraction(2) ** int(exp)


def theorem_bound(k: int, dps: int = 30) -> TheoremValue:
    """Enclose 2^sqrt(2k) * ((sqrt2 - 1) k / 8 - sqrt(k)/8) + sqrt(k)/2."""
    iv = mpmath.iv
    old = iv.dps
    try:
        iv.dps = dps
        kk = iv.mpf(k)
        expr = (iv.mpf(2) ** iv.sqrt(2 * kk)) * ((iv.sqrt(2) - 1) * kk / 8 - iv.sqrt(kk) / 8) \
            + iv.sqrt(kk) / 2
        lo, hi = mpmath.mpf(expr.a), mpmath.mpf(expr.b)
    finally:
        iv.dps = old
    if hi - lo > mpmath.mpf(THEOREM_PRECISION.numerator) / THEOREM_PRECISION.denominator:
        raise ArithmeticError("theorem bound enclosure wider than 1e-6")
    return TheoremValue(lo, hi)


def standard_params(k: int) -> tuple[int, int]:
    """t = floor(sqrt(2k)), u = floor(log2(sqrt(k)/2)); u may be negative."""
    t = isqrt(2 * k)
    # 2^u <= sqrt(k)/2  <=>  4^(u+1) <= k
    u = -1
    while 4 ** (u + 2) <= k:
        u += 1
    return t, u


def best_params(k: int) -> tuple[int, int, int]:
    """(t, u, bound) maximizing refined_bound; ties go to smaller t + u, then smaller t."""
    t_max = 2 * (isqrt(2 * k - 1) + 1) + 4  # 2*ceil(sqrt(2k)) + 4
    u_max = (k - 1).bit_length()  # ceil(log2 k)
    best = None
    for t in range(2, t_max + 1):
        for u in range(0, u_max + 1):
            b = refined_bound(k, t, u)
            key = (-b, t + u, t)
            if best is None or key < best[0]:
                best = (key, t, u, b)
    _, t, u, b = best
    return t, u, b


@dataclass(frozen=True)
class Discrepancy:
    k: int
    t: int
    u: int
    claimed: int
    witness: DiffseqWitness
    verified_n: int

    def to_json(self) -> dict:
        return {"status": "discrepancy", "k": self.k, "t": self.t, "u": self.u,
                "refinedBound": self.claimed, "witness": self.witness.to_json(),
                "largestVerifiedN": self.verified_n}


def certify_bound(k: int, t: int, u: int, *, cap: int | None = None) -> Certificate | Discrepancy:
    """Check with the DP that P_{t,u} avoids length k on [1..refined_bound - 1]."""
    n = refined_bound(k, t, u) - 1
    if n < 1:
        raise ValueError(f"refined bound {n + 1} is below 2; nothing to certify")
    coloring = PeriodicColoring.thue_morse(t, u, cap=cap)
    g = GapSet.powers_of_two()
    out = analysis.verify_avoidance(coloring, g, k, n)
    if isinstance(out, Certificate):
        return out
    first, _ = analysis.first_failure(coloring, g, k, n)
    return Discrepancy(k, t, u, n + 1, out, first - 1)


@dataclass
class BoundReport:
    k: int
    t: int
    u: int
    refined: int
    theorem: TheoremValue
    simple: int
    certified: int | None = None
    certificate: Certificate | None = None
    discrepancy: Discrepancy | None = None

    @property
    def consistent(self) -> bool:
        return self.certified is None or self.certified >= self.refined

    def to_json(self) -> dict:
        out = {
            "k": self.k, "t": self.t, "u": self.u,
            "refinedBound": self.refined,
            "theoremBound": self.theorem.to_json(),
            "simpleBound": self.simple,
            "certifiedBound": self.certified if self.certified is not None else "not run",
            "consistent": self.consistent,
        }
        if self.certificate is not None:
            out["certificate"] = self.certificate.to_json()
        if self.discrepancy is not None:
            out["discrepancy"] = self.discrepancy.to_json()
        return out


def bound_report(k: int, t: int | None = None, u: int | None = None, *,
                 certify: bool = False) -> BoundReport:
    if t is None:
        t, u, _ = best_params(k)
    u = 0 if u is None else u
    report = BoundReport(k, t, u, refined_bound(k, t, u), theorem_bound(k), simple_bound(k))
    if certify:
        res = certify_bound(k, t, u)
        if isinstance(res, Certificate):
            report.certificate = res
            report.certified = res.implied_bound
        else:
            report.discrepancy = res
            report.certified = res.verified_n + 1
    return report
