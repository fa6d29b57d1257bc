import numpy as np
import pytest

from diffseq import analysis, solver
from diffseq.gapset import GapSet
from diffseq.solver import BudgetExceeded, Status

from oracles import all_colorings_first_failure, exists_valid_bruteforce

POW2 = GapSet.powers_of_two()
# computed by this solver, cross-checked against full enumeration below for k <= 4
POW2_DELTA = {2: 3, 3: 7, 4: 11, 5: 17}


def test_exists_examples():
    c = solver.exists_valid_coloring(POW2, 2, 2, 2)
    assert c.tolist() == [0, 1]
    assert solver.exists_valid_coloring(POW2, 2, 2, 3) is None
    alt = solver.exists_valid_coloring(GapSet.explicit([1]), 2, 2, 100)
    assert alt.tolist() == [i % 2 for i in range(100)]


def test_delta_trivial():
    assert solver.delta(POW2, 1).delta == 1
    res = solver.delta(POW2, 2, cap=10)
    assert res.status is Status.FOUND and res.delta == 3


@pytest.mark.parametrize("k", [3, 4, 5])
def test_delta_pow2(k):
    res = solver.delta(POW2, k, cap=2**k)
    assert res.status is Status.FOUND
    assert res.delta == POW2_DELTA[k]
    assert res.delta <= 2**k - 1
    ev = analysis.verify_avoidance(res.coloring, POW2, k, res.delta - 1)
    assert isinstance(ev, analysis.Certificate)


def test_delta_strictly_increasing():
    values = [solver.delta(POW2, k).delta for k in range(2, 6)]
    assert values == sorted(set(values))


@pytest.mark.parametrize("gapset", ["pow2", "explicit:1,3,4", "factorial", "explicit:2,3"])
@pytest.mark.parametrize("k", [2, 3, 4])
def test_agrees_with_enumeration(gapset, k):
    g = GapSet.parse(gapset)
    for n in range(k, 15 if k < 4 else 17):
        gaps = g.members_up_to(n - 1)
        any_valid = bool((all_colorings_first_failure(n, gaps, k) == n + 1).any())
        got = solver.exists_valid_coloring(g, k, 2, n)
        assert (got is not None) == any_valid, n
        if got is not None:
            assert analysis.longest_mono(got, g, n)[0] < k


@pytest.mark.slow
def test_agrees_with_enumeration_n20():
    for k in (3, 4):
        for n in (18, 20):
            gaps = POW2.members_up_to(n - 1)
            any_valid = bool((all_colorings_first_failure(n, gaps, k) == n + 1).any())
            assert (solver.exists_valid_coloring(POW2, k, 2, n) is not None) == any_valid


def test_three_colors_against_bruteforce():
    for gaps, k in (([1, 2, 3], 2), ([1, 2], 2), ([1, 2, 4], 3)):
        g = GapSet.explicit(gaps)
        for n in range(2, 9):
            got = solver.exists_valid_coloring(g, k, 3, n)
            assert (got is not None) == exists_valid_bruteforce(n, gaps, k, 3)
    # four consecutive integers pairwise within distance 3 need four colors
    assert solver.delta(GapSet.explicit([1, 2, 3]), 2, r=3).delta == 4
    # period 012 avoids gaps 1 and 2 forever
    assert solver.delta(GapSet.explicit([1, 2]), 2, r=3, cap=60).status is Status.EXCEEDS_CAP


def test_delta_matches_enumeration():
    for k in (2, 3, 4):
        n = POW2_DELTA[k]
        gaps = POW2.members_up_to(n - 1)
        assert not (all_colorings_first_failure(n, gaps, k) == n + 1).any()
        gaps = POW2.members_up_to(n - 2)
        assert (all_colorings_first_failure(n - 1, gaps, k) == n).any()


def test_exceeds_cap():
    res = solver.delta(GapSet.explicit([1]), 3, cap=50)
    assert res.status is Status.EXCEEDS_CAP
    assert res.reached == 50
    assert res.to_json()["cap"] == 50


def test_budget_inconclusive():
    res = solver.delta(POW2, 5, budget=5)
    assert res.status is Status.INCONCLUSIVE
    with pytest.raises(BudgetExceeded):
        solver.exists_valid_coloring(POW2, 5, 2, 17, budget=5)


def test_threads_give_identical_result():
    a = solver.delta(POW2, 5)
    b = solver.delta(POW2, 5, threads=2)
    assert a.delta == b.delta
    assert np.array_equal(a.coloring, b.coloring)
    for n in (14, 16, 17):
        x = solver.exists_valid_coloring(POW2, 5, 2, n)
        y = solver.exists_valid_coloring(POW2, 5, 2, n, threads=2)
        assert (x is None and y is None) or np.array_equal(x, y)


def test_bad_arguments():
    with pytest.raises(ValueError):
        solver.exists_valid_coloring(POW2, 1, 2, 5)
    with pytest.raises(ValueError):
        solver.exists_valid_coloring(POW2, 3, 1, 5)


def test_result_json():
    doc = solver.delta(POW2, 3).to_json()
    assert doc["status"] == "found" and doc["delta"] == 7
    assert len(doc["coloring"]) == 6
    assert set(doc["stats"]) == {"nodes", "seconds"}
