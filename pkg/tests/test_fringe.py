from fractions import Fraction

import pytest

from boundedcode.fringe import FringeProblem, fringe_solve, windows
from boundedcode.model import Infeasible, Penalty, pad_dummies
from boundedcode.oracle import brute_force_fringe

F = Fraction


def test_examples():
    r = fringe_solve(FringeProblem.create([1] * 7, 3, 1))
    assert r.l_top == 2 and r.solves == 1
    assert r.result.lengths == (1, 2, 2, 2, 2, 2, 2)
    assert fringe_solve(FringeProblem.create([1] * 9, 3, 0)).result.lengths == (2,) * 9
    with pytest.raises(Infeasible):
        fringe_solve(FringeProblem.create([1] * 6, 2, 0))
    r = fringe_solve(FringeProblem.create([1] * 6, 2, 0, extra_dummy_blocks=2))
    assert r.result.lengths == (3,) * 6


def test_window_range():
    assert windows(6, 2, 0) == []
    assert windows(7, 3, 1) == [(1, 2)]
    assert windows(20, 2, 3) == [(2, 5), (3, 6), (4, 7)]
    assert windows(1, 2, 2) == [(0, 0), (0, 1), (0, 2)]


def test_objective_is_comparable_across_windows():
    ws = [40, 30, 20, 5, 3, 1, 1]
    r = fringe_solve(FringeProblem.create(ws, 2, 3))
    # linear penalty compares expected lengths
    assert r.result.penalty_value == r.result.expected_length
    assert [e.penalty_value for e in r.sweep if e.l_top == r.l_top][0] == r.result.penalty_value


@pytest.mark.parametrize("radix", [2, 3])
@pytest.mark.parametrize("d", [0, 1, 2])
@pytest.mark.parametrize("pen", [Penalty.linear(), Penalty.quadratic(),
                                 Penalty.exponential(F(1, 2))])
def test_matches_brute_force(radix, d, pen):
    import random
    rng = random.Random(radix * 10 + d)
    for n in range(1, 8):
        if pad_dummies(n, radix) > 7:
            continue
        for _ in range(8):
            ws = [F(rng.randint(1, 30), rng.randint(1, 5)) for _ in range(n)]
            best, argmins = brute_force_fringe(ws, radix, d, pen)
            try:
                r = fringe_solve(FringeProblem.create(ws, radix, d, pen))
            except Infeasible:
                assert best is None
                continue
            assert r.result.penalty_value == best
            assert r.result.padded_lengths in argmins
            assert r.solves <= d + 1
            assert max(r.result.lengths) - min(r.result.lengths) <= d


def test_more_fringe_never_hurts():
    ws = [100, 60, 30, 10, 9, 5, 2, 2, 1, 1, 1]
    prev = None
    for d in range(0, 7):
        try:
            v = fringe_solve(FringeProblem.create(ws, 2, d)).result.penalty_value
        except Infeasible:
            continue
        assert prev is None or v <= prev
        prev = v


def test_linear_space_sweep_agrees():
    ws = list(range(40, 0, -1))
    a = fringe_solve(FringeProblem.create(ws, 3, 4))
    b = fringe_solve(FringeProblem.create(ws, 3, 4), space="linear")
    assert a == b
