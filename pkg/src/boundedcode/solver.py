"""Bounded-length optimal prefix codes via the Coin Collector reduction.

Each node ``(i, l)`` of the grid ``symbols x [l_min + 1, l_max]`` is a coin of
width ``D**-l`` whose weight is the extra penalty symbol ``i`` pays for
having a codeword of length ``l`` rather than ``l - 1``.  The optimal coin set
for the target width ``(n - D**l_min) / (D - 1) * D**-l_min`` is the nodeset of
an optimal length vector.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from math import lcm
from typing import Iterable

from .model import (
    CodingError, Infeasible, LengthBounds, NodeSet, Penalty, WeightVector,
    WidthValue, check_radix, kraft_sum,
)
from .packmerge import Coin, CoinInstance, MergeStats, merge_classes, target_digits


@dataclass(frozen=True)
class CodingProblem:
    weights: WeightVector
    radix: int
    bounds: LengthBounds
    penalty: Penalty = field(default_factory=Penalty.linear)

    @classmethod
    def create(cls, weights: Iterable, radix: int = 2, l_min: int = 0,
               l_max: int | None = None, penalty: Penalty | None = None,
               extra_dummies: int = 0) -> "CodingProblem":
        """Build a problem from raw weights in caller order.

        ``l_max`` defaults to ``ceil((n - 1) / (radix - 1))``, which never
        binds.  ``extra_dummies`` adds zero-weight symbols beyond the minimum
        padding (rounded up to keep ``n % (radix - 1) == 1``).
        """
        check_radix(radix)
        wv = WeightVector.from_weights(weights, radix, extra_dummies)
        if l_max is None:
            l_max = max(l_min, -(-(wv.n_real - 1) // (radix - 1)))
        return cls(wv, radix, LengthBounds(l_min, l_max), penalty or Penalty.linear())

    @property
    def n(self) -> int:
        return self.weights.n_padded

    @property
    def l_min(self) -> int:
        return self.bounds.l_min

    @property
    def l_max(self) -> int:
        return self.bounds.l_max

    @cached_property
    def phi(self) -> list[Fraction]:
        return self.penalty.values(self.radix, self.l_min, self.bounds.span + 1)

    @cached_property
    def scaled(self) -> tuple[list[int], list[int], int]:
        """Integer form of the node weights: ``(p, dphi, scale)``.

        ``mu(i, l) == p[i] * dphi[l - l_min] / scale`` exactly.  Solving on
        integers keeps every comparison exact and much cheaper than Fractions.
        """
        ws = self.weights.weights
        pw = lcm(*(w.denominator for w in ws))
        steps = [Fraction(0)] + [self.phi[d] - self.phi[d - 1]
                                 for d in range(1, len(self.phi))]
        pf = lcm(*(s.denominator for s in steps))
        p = [int(w * pw) for w in ws]
        dphi = [int(s * pf) for s in steps]
        return p, dphi, pw * pf

    def check_feasible(self) -> None:
        """Raise :class:`Infeasible` naming the violated bound."""
        n, D = self.n, self.radix
        if D**self.l_min > n:
            raise Infeasible(
                f"l_min={self.l_min} needs at least {D}**{self.l_min}={D**self.l_min} "
                f"symbols for a complete code, have {n} (after padding)")
        if D**self.l_max < n:
            raise Infeasible(
                f"l_max={self.l_max} allows at most {D}**{self.l_max}={D**self.l_max} "
                f"codewords, need {n} (after padding)")


@dataclass(frozen=True)
class SolveResult:
    lengths: tuple[int, ...]
    penalty_value: Fraction
    nodeset_weight: Fraction
    kraft: Fraction
    padded_lengths: tuple[int, ...]
    weights: tuple[Fraction, ...]

    @property
    def expected_length(self) -> Fraction:
        """``sum(p_i * l_i)`` over real symbols, in the caller's weight units."""
        return sum((p * l for p, l in zip(self.weights, self.lengths)), Fraction(0))


def node_weight(i: int, l: int, problem: CodingProblem) -> Fraction:
    """``p_i * (phi(l - l_min) - phi(l - l_min - 1))`` for 0-based sorted symbol ``i``."""
    if not (0 <= i < problem.n and problem.l_min < l <= problem.l_max):
        raise CodingError(f"node {(i, l)} outside the grid")
    d = l - problem.l_min
    return problem.weights.weights[i] * (problem.phi[d] - problem.phi[d - 1])


def total_width(n_padded: int, radix: int, l_min: int) -> WidthValue:
    """Target width ``(n - D**l_min) / (D - 1) * D**-l_min``."""
    num = n_padded - radix**l_min
    if num < 0:
        raise Infeasible(f"{n_padded} symbols cannot fill a code with l_min={l_min}")
    if num % (radix - 1):
        raise CodingError(f"n={n_padded} is not 1 mod {radix - 1}; pad with dummies first")
    return WidthValue(num // (radix - 1), l_min, radix)


def coin_id(i: int, l: int, problem: CodingProblem) -> int:
    """Coin id for node (i, l): within a level, higher symbol index gives higher id."""
    return (l - problem.l_min - 1) * problem.n + i


def build_instance(problem: CodingProblem) -> CoinInstance:
    """The full node grid as an explicit Coin Collector instance."""
    problem.check_feasible()
    D = problem.radix
    coins = [Coin(coin_id(i, l, problem), Fraction(1, D**l), node_weight(i, l, problem))
             for l in range(problem.l_min + 1, problem.l_max + 1)
             for i in range(problem.n)]
    return CoinInstance(tuple(coins), total_width(problem.n, D, problem.l_min).value, D)


def nodeset_from_ids(ids: Iterable[int], problem: CodingProblem) -> NodeSet:
    n = problem.n
    nodes = [(c % n, c // n + problem.l_min + 1) for c in ids]
    return NodeSet.from_nodes(nodes, n, problem.l_min)


def recover_lengths(nodeset: NodeSet, problem: CodingProblem) -> list[int]:
    """Padded length vector in sorted order: ``l_min`` plus each column height."""
    assert len(nodeset.heights) == problem.n
    return [problem.l_min + h for h in nodeset.heights]


def level_classes(problem: CodingProblem, symbols: range, levels: range):
    """Scaled node weights per level, narrowest (deepest) level first.

    Weights at a level are nonincreasing in symbol index, so walking symbols
    from the highest index gives ascending weight with the higher id first
    among ties: exactly the tie order Package-Merge expects.
    """
    p, dphi, _ = problem.scaled
    l_min = problem.l_min
    rev = [p[i] for i in reversed(symbols)]
    for l in reversed(levels):
        step = dphi[l - l_min]
        yield [w * step for w in rev]


def finish(problem: CodingProblem, nodeset: NodeSet, mu_scaled: int) -> SolveResult:
    """Assemble a :class:`SolveResult` and check the exact invariants."""
    padded = recover_lengths(nodeset, problem)
    D = problem.radix
    assert kraft_sum(padded, D) == 1, "padded code is not complete"
    wv = problem.weights
    real = wv.to_caller(padded)
    phi = problem.phi
    penalty = sum((w * phi[l - problem.l_min] for w, l in zip(wv.weights, padded)),
                  Fraction(0))
    mu = Fraction(mu_scaled, problem.scaled[2])
    assert mu + phi[0] * sum(wv.weights) == penalty
    return SolveResult(
        lengths=tuple(real),
        penalty_value=penalty,
        nodeset_weight=mu,
        kraft=kraft_sum(real, D),
        padded_lengths=tuple(padded),
        weights=tuple(wv.to_caller(wv.weights)),
    )


def solve(problem: CodingProblem, stats: MergeStats | None = None) -> SolveResult:
    """Optimal length vector within the bounds (full-space Package-Merge).

    Among optimal monotone codes the one with the smallest maximum length is
    returned.  Raises :class:`Infeasible` when no complete code fits.
    """
    problem.check_feasible()
    n, D = problem.n, problem.radix
    target = total_width(n, D, problem.l_min)
    levels = range(problem.l_min + 1, problem.l_max + 1)
    # class k is level l_max - k; scale widths by D**l_max
    digits = target_digits(target.scaled * D ** (problem.l_max - problem.l_min), D)
    taken, mu = merge_classes(level_classes(problem, range(n), levels), digits, D, stats)
    # the widest class (width D**-l_min) holds packages only
    assert not any(taken[len(levels):])
    taken = (taken + [0] * len(levels))[:len(levels)]
    counts = taken[::-1]
    return finish(problem, NodeSet.from_level_counts(counts, n, problem.l_min), mu)
