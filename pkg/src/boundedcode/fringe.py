"""Optimal codes with bounded fringe (longest minus shortest codeword).

Every complete code with fringe at most ``d`` has all lengths in
``[l' - d, l']`` for some ``l'`` between ``ceil(log_D n)`` and
``floor(log_D n) + d``; solving the bounded-length problem for each such
window and keeping the cheapest covers them all.

Candidates from different windows are compared on ``sum p_i phi(l_i)``, the
penalty taken with reference length 0, because ``phi(l_i - l_min)`` shifts
with the window.  For the linear penalty this is the expected length.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable

from .model import (
    CodingError, Infeasible, LengthBounds, Penalty, WeightVector, ceil_log,
    check_radix, floor_log,
)
from .linspace import solve_linear_space
from .solver import CodingProblem, SolveResult, solve


@dataclass(frozen=True)
class FringeProblem:
    weights: WeightVector
    radix: int
    d: int
    penalty: Penalty = field(default_factory=Penalty.linear)
    extra_dummy_blocks: int = 0

    @classmethod
    def create(cls, weights: Iterable, radix: int = 2, d: int = 0,
               penalty: Penalty | None = None,
               extra_dummy_blocks: int = 0) -> "FringeProblem":
        """``extra_dummy_blocks`` adds ``k * (radix - 1)`` zero-weight symbols,
        which lets a window use codes with unused leaves."""
        check_radix(radix)
        if d < 0:
            raise CodingError("fringe bound must be nonnegative")
        if extra_dummy_blocks < 0:
            raise CodingError("extra_dummy_blocks must be nonnegative")
        wv = WeightVector.from_weights(weights, radix, extra_dummy_blocks * (radix - 1))
        return cls(wv, radix, d, penalty or Penalty.linear(), extra_dummy_blocks)


@dataclass(frozen=True)
class SweepEntry:
    l_top: int
    l_low: int
    penalty_value: Fraction | None  # None when the window is infeasible


@dataclass(frozen=True)
class FringeResult:
    result: SolveResult
    l_top: int
    sweep: tuple[SweepEntry, ...]

    @property
    def solves(self) -> int:
        return len(self.sweep)


def windows(n: int, radix: int, d: int) -> list[tuple[int, int]]:
    """``(low, top)`` length windows to try, in increasing ``top``."""
    out = []
    for top in range(ceil_log(n, radix), floor_log(n, radix) + d + 1):
        # length 0 only works for a lone symbol
        low = max(top - d, 0 if n == 1 else 1)
        out.append((low, top))
    return out


def fringe_solve(problem: FringeProblem, space: str = "full") -> FringeResult:
    """Best code with fringe <= d; ties go to the smaller maximum length."""
    wv, D = problem.weights, problem.radix
    n = wv.n_padded
    plan = windows(n, D, problem.d)
    if not plan:
        raise Infeasible(
            f"no complete code on {n} symbols has fringe <= {problem.d}: "
            f"ceil(log_{D} {n}) = {ceil_log(n, D)} > floor(log_{D} {n}) + {problem.d}")
    absolute = problem.penalty.values(D, 0, plan[-1][1] + 1)
    run = solve_linear_space if space == "linear" else solve
    best: tuple[SolveResult, int] | None = None
    sweep = []
    for low, top in plan:
        shifted = Penalty.custom(absolute[low:top + 1])
        sub = CodingProblem(wv, D, LengthBounds(low, top), shifted)
        try:
            res = run(sub)
        except Infeasible:
            sweep.append(SweepEntry(top, low, None))
            continue
        sweep.append(SweepEntry(top, low, res.penalty_value))
        if best is None or res.penalty_value < best[0].penalty_value:
            best = (res, top)
    if best is None:
        raise Infeasible(f"every window for fringe <= {problem.d} is infeasible")
    return FringeResult(best[0], best[1], tuple(sweep))
