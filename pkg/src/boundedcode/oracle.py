"""Slow, independent references for testing.  Never used by the solvers."""

from __future__ import annotations

import heapq
from fractions import Fraction
from itertools import count
from typing import Iterable, Sequence

from .model import (
    CodingError, Infeasible, Penalty, WidthValue, as_fraction, floor_log,
    pad_dummies,
)
from .packmerge import CoinInstance


class TooLarge(CodingError):
    """Instance exceeds the brute-force guard rails."""


def _complete_vectors(n: int, radix: int, lo: int, hi: int):
    """All nondecreasing length vectors in [lo, hi]^n with Kraft sum exactly 1."""
    unit = radix**hi  # Kraft sums scaled by radix**hi
    out: list[tuple[int, ...]] = []
    vec: list[int] = []

    def rec(left: int, start: int, room: int):
        if left == 0:
            if room == 0:
                out.append(tuple(vec))
            return
        for l in range(start, hi + 1):
            share = radix ** (hi - l)
            # remaining symbols are at least this long, so each costs <= share
            if left * share < room:
                break
            if share > room:
                continue
            vec.append(l)
            rec(left - 1, l, room - share)
            vec.pop()

    rec(n, lo, unit)
    return out


def brute_force_code(problem) -> tuple[Fraction | None, list[tuple[int, ...]]]:
    """Minimum of ``sum p_i phi(l_i - l_min)`` over complete monotone codes.

    Returns ``(minimum, argmins)`` with lengths in sorted (padded) order, or
    ``(None, [])`` when no complete code fits the bounds.
    """
    n, D = problem.n, problem.radix
    if n > 10 or problem.l_max > 6:
        raise TooLarge(f"brute force limited to n <= 10 and l_max <= 6, got {n}, {problem.l_max}")
    phi = problem.phi
    ws = problem.weights.weights
    best, argmins = None, []
    for vec in _complete_vectors(n, D, problem.l_min, problem.l_max):
        cost = sum((w * phi[l - problem.l_min] for w, l in zip(ws, vec)), Fraction(0))
        if best is None or cost < best:
            best, argmins = cost, [vec]
        elif cost == best:
            argmins.append(vec)
    return best, argmins


def brute_force_fringe(weights: Iterable, radix: int, d: int,
                       penalty: Penalty | None = None, extra_dummies: int = 0):
    """Best complete monotone code with ``max(l) - min(l) <= d``.

    The objective is ``sum p_i phi(l_i)`` with phi taken at ``l_min = 0``.
    Returns ``(minimum, argmins)`` over sorted padded vectors.
    """
    ws = sorted((as_fraction(w) for w in weights), reverse=True)
    n = pad_dummies(len(ws) + extra_dummies, radix)
    if n > 10:
        raise TooLarge("brute force fringe limited to n <= 10")
    ws += [Fraction(0)] * (n - len(ws))
    hi = floor_log(n, radix) + d
    phi = (penalty or Penalty.linear()).values(radix, 0, hi + 1)
    best, argmins = None, []
    for vec in _complete_vectors(n, radix, 0, hi):
        if vec[-1] - vec[0] > d:
            continue
        cost = sum((w * phi[l] for w, l in zip(ws, vec)), Fraction(0))
        if best is None or cost < best:
            best, argmins = cost, [vec]
        elif cost == best:
            argmins.append(vec)
    return best, argmins


def brute_force_cc(instance: CoinInstance) -> Fraction:
    """Exhaustive minimum over all coin subsets; raises Infeasible if none fits."""
    coins = instance.coins
    if len(coins) > 20:
        raise TooLarge("brute force limited to 20 coins")
    target = instance.total_width
    best = None
    m = len(coins)
    for mask in range(1 << m):
        width, weight = Fraction(0), Fraction(0)
        for j in range(m):
            if mask >> j & 1:
                width += coins[j].width
                weight += coins[j].weight
        if width == target and (best is None or weight < best):
            best = weight
    if best is None:
        raise Infeasible("no subset matches the total width")
    return best


def recursive_package_merge(instance: CoinInstance) -> tuple[int, ...]:
    """Direct transcription of the recursive procedure, for tie-rule checks.

    Items carry an index tuple: coins ``(1, id)``, packages ``(0, -k)`` for
    the k-th package made, so a package ranks below every coin and every
    earlier package.  Minimum selection breaks weight ties toward the
    highest index.  Returns the selected coin ids, sorted.
    """
    radix = instance.radix
    made = count(1)
    # item: (index, width, weight, coin ids)
    items = [((1, c.id), c.width, c.weight, (c.id,)) for c in instance.coins]

    def order(pool):
        pool = sorted(pool, key=lambda it: it[0], reverse=True)
        return sorted(pool, key=lambda it: it[2])

    def cc(pool, total):
        if total == 0:
            return ()
        if not pool:
            raise Infeasible("items exhausted")
        _, k = WidthValue.of(total, radix).decompose()
        rho_pow = Fraction(radix) ** k
        rho_star = min(it[1] for it in pool)
        if rho_star > rho_pow:
            raise Infeasible("narrowest item wider than the remainder")
        small = order(it for it in pool if it[1] == rho_star)
        rest = [it for it in pool if it[1] != rho_star]
        if rho_star == rho_pow:
            first = small[0]
            return cc(rest + small[1:], total - rho_star) + first[3]
        if len(small) < radix:
            return cc(rest, total)
        group = small[:radix]
        pkg = ((0, -next(made)), radix * rho_star, sum(it[2] for it in group),
               tuple(i for it in group for i in it[3]))
        return cc(rest + small[radix:] + [pkg], total)

    return tuple(sorted(cc(items, instance.total_width)))


def reference_huffman(weights: Sequence, radix: int) -> list[int]:
    """D-ary Huffman code lengths (caller order) after zero-weight padding."""
    ws = [as_fraction(w) for w in weights]
    n = pad_dummies(len(ws), radix)
    if n == 1:
        return [0]
    tick = count()
    heap = [(w, next(tick), [j]) for j, w in enumerate(ws)]
    heap += [(Fraction(0), next(tick), []) for _ in range(n - len(ws))]
    heapq.heapify(heap)
    depth = [0] * len(ws)
    while len(heap) > 1:
        total, members = Fraction(0), []
        for _ in range(radix):
            w, _, m = heapq.heappop(heap)
            total += w
            members += m
        for j in members:
            depth[j] += 1
        heapq.heappush(heap, (total, next(tick), members))
    return depth
