"""O(n)-space Package-Merge for bounded-length codes.

A first pass over the grid keeps, for every live element, only its weight,
its count of nodes on the middle level and its width above the middle level.
Because the optimal nodeset is monotone, those totals pin down everything on
and below the middle level for the ``nu`` highest-index symbols; what is left
is two smaller grids (upper-left and lower-right) with known target widths,
solved the same way.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .model import NodeSet, WidthValue
from .packmerge import (
    MergeStats, PackageAttr, merge_classes, merge_classes_tracked, target_digits,
)
from .solver import CodingProblem, SolveResult, finish, level_classes, solve, total_width

BASE_THRESHOLD = 2


@dataclass(frozen=True)
class GridRegion:
    """Symbols ``[first, stop)`` by levels ``[low, high]``."""

    first: int
    stop: int
    low: int
    high: int

    @property
    def l_mid(self) -> int:
        # the region's own l_min is low - 1
        return (self.high + self.low) // 2

    @property
    def area(self) -> int:
        return max(self.stop - self.first, 0) * max(self.high - self.low + 1, 0)


@dataclass(frozen=True)
class Split:
    upper: GridRegion
    upper_width: WidthValue
    block_width: WidthValue
    row_width: WidthValue
    lower: GridRegion
    lower_width: WidthValue
    n_mid: int


def decompose(attrs: PackageAttr, region: GridRegion, radix: int) -> Split:
    """Split an optimal monotone nodeset of ``region`` using its aggregates.

    The ``nu`` highest-index symbols are full from ``low`` through the middle
    level (the block and the middle row); ``psi`` is the width of the part
    above the middle level; the rest of the width belongs to the remaining
    symbols strictly below the middle level.
    """
    mid, nu = region.l_mid, attrs.nu
    D = radix
    block = WidthValue.of(nu * sum(Fraction(1, D**l) for l in range(region.low, mid)), D)
    row = WidthValue.of(Fraction(nu, D**mid), D)
    upper_width = attrs.rho.value - block.value - row.value - attrs.psi.value
    assert upper_width >= 0 and nu <= region.stop - region.first, "inconsistent aggregates"
    cut = region.stop - nu
    return Split(
        upper=GridRegion(region.first, cut, region.low, mid - 1),
        upper_width=WidthValue.of(upper_width, D),
        block_width=block,
        row_width=row,
        lower=GridRegion(cut, region.stop, mid + 1, region.high),
        lower_width=attrs.psi,
        n_mid=nu,
    )


@dataclass
class LinearSpaceStats(MergeStats):
    """Adds the area bookkeeping of every split to :class:`MergeStats`."""

    splits: list = field(default_factory=list)


class _Run:
    def __init__(self, problem: CodingProblem, stats: LinearSpaceStats | None):
        self.problem = problem
        self.stats = stats
        self.D = problem.radix
        self.L = problem.l_max
        self.counts = [0] * problem.bounds.span

    def width(self, scaled: int) -> WidthValue:
        return WidthValue(scaled, self.L, self.D)

    def digits(self, region: GridRegion, scaled: int) -> list[int]:
        unit = self.D ** (self.L - region.high)
        assert scaled % unit == 0
        return target_digits(scaled // unit, self.D)

    def add(self, levels: range, amount: int) -> None:
        base = self.problem.l_min + 1
        for l in levels:
            self.counts[l - base] += amount

    def fill(self, region: GridRegion, scaled: int) -> int:
        """Add the optimal selection of ``region`` at width ``scaled`` to the
        level counts; return its scaled weight."""
        if scaled == 0:
            return 0
        problem, D = self.problem, self.D
        symbols = range(region.first, region.stop)
        levels = range(region.low, region.high + 1)
        if len(levels) <= BASE_THRESHOLD:
            classes = level_classes(problem, symbols, levels)
            taken, mu = merge_classes(classes, self.digits(region, scaled), D)
            for k, t in enumerate(taken[:len(levels)]):
                self.add(range(region.high - k, region.high - k + 1), t)
            return mu

        mid = region.l_mid
        m = len(symbols)

        def classes():
            for l, ws in zip(reversed(levels), level_classes(problem, symbols, levels)):
                yield (ws, [int(l == mid)] * m, [D ** (self.L - l) if l > mid else 0] * m)

        mu, nu, psi = merge_classes_tracked(classes(), self.digits(region, scaled), D,
                                            self.stats)
        attrs = PackageAttr(Fraction(mu), self.width(scaled), nu, self.width(psi))
        split = decompose(attrs, region, D)
        if self.stats is not None:
            self.stats.splits.append((region.area, split.upper.area + split.lower.area))
        self.add(range(region.low, mid + 1), nu)
        unit = D**self.L
        self.fill(split.upper, int(split.upper_width.value * unit))
        self.fill(split.lower, psi)
        return mu


def solve_linear_space(problem: CodingProblem,
                       stats: LinearSpaceStats | None = None) -> SolveResult:
    """Same result as :func:`solver.solve` using memory linear in n."""
    problem.check_feasible()
    if problem.bounds.span <= BASE_THRESHOLD:
        return solve(problem)
    run = _Run(problem, stats)
    target = total_width(problem.n, problem.radix, problem.l_min)
    region = GridRegion(0, problem.n, problem.l_min + 1, problem.l_max)
    mu = run.fill(region, target.scaled * problem.radix ** (problem.l_max - problem.l_min))
    nodeset = NodeSet.from_level_counts(run.counts, problem.n, problem.l_min)
    return finish(problem, nodeset, mu)
