"""D-ary Package-Merge for the Coin Collector's problem.

Choose a minimum-weight set of coins, each with a width that is an integer
power of the radix, whose widths sum exactly to a target.

The recursive procedure is run iteratively, one width class at a time from
the narrowest upward.  In a class, elements (coins plus packages carried up
from the class below) are ordered by weight; the class's base-D digit of the
remaining target says how many elements are taken outright, the rest are
grouped D at a time into packages for the next class and any leftovers
(fewer than D) are dropped.

Ties follow a fixed rule: among equal weights a coin with a higher id goes
first, and every package goes after all coins and all earlier packages of the
same weight.  With that rule the elements selected in every class form a
prefix of the class order, so the selection can be recovered from one flag
per element (coin or package) without storing package contents.
"""

from __future__ import annotations

from bisect import bisect_right
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Iterator, Sequence

from .model import CodingError, Infeasible, WidthValue, as_fraction, check_radix


@dataclass(frozen=True)
class Coin:
    id: int
    width: Fraction
    weight: Fraction

    def exponent(self, radix: int) -> int:
        """k such that width == radix ** k; raises if width is not a power of radix."""
        w = WidthValue.of(self.width, radix)
        omega, k = w.decompose()
        if omega != 1:
            raise CodingError(f"coin {self.id}: width {self.width} is not a power of {radix}")
        return k


@dataclass(frozen=True)
class CoinInstance:
    coins: tuple[Coin, ...]
    total_width: Fraction
    radix: int = 2

    @classmethod
    def build(cls, coins: Iterable, total_width, radix: int = 2) -> "CoinInstance":
        """Accept Coin objects or ``(id, width, weight)`` triples."""
        check_radix(radix)
        out = []
        for c in coins:
            if not isinstance(c, Coin):
                cid, width, weight = c
                c = Coin(cid, as_fraction(width), as_fraction(weight))
            out.append(c)
        ids = [c.id for c in out]
        if len(set(ids)) != len(ids):
            raise CodingError("coin ids must be unique")
        total = total_width.value if isinstance(total_width, WidthValue) else as_fraction(total_width)
        if total < 0:
            raise CodingError("total width must be nonnegative")
        return cls(tuple(out), total, radix)


@dataclass(frozen=True)
class CoinSolution:
    ids: tuple[int, ...]
    weight: Fraction


@dataclass(frozen=True)
class PackageAttr:
    """Aggregates of a node set: total weight, total width, count at the
    middle level, and width above the middle level."""

    mu: Fraction
    rho: WidthValue
    nu: int
    psi: WidthValue


@dataclass
class MergeStats:
    """Instrumentation filled in by the engines."""

    peak_live: int = 0
    classes: int = 0

    def see(self, live: int) -> None:
        self.classes += 1
        if live > self.peak_live:
            self.peak_live = live


def target_digits(scaled: int, radix: int) -> list[int]:
    """Base-radix digits of a nonnegative integer, least significant first."""
    out = []
    while scaled:
        scaled, d = divmod(scaled, radix)
        out.append(d)
    return out


def _cuts(singles: Sequence, packs: Sequence) -> list[int]:
    # insertion point of each package among the singles; singles win ties
    cuts, pos = [], 0
    for w in packs:
        pos = bisect_right(singles, w, pos)
        cuts.append(pos)
    return cuts


def _interleave(singles: Sequence, packs: Sequence, cuts: Sequence[int]) -> list:
    out, pos = [], 0
    for p, cut in zip(packs, cuts):
        out.extend(singles[pos:cut])
        out.append(p)
        pos = cut
    out.extend(singles[pos:])
    return out


def _package(rest: Sequence, radix: int) -> list:
    if radix == 2:
        return [a + b for a, b in zip(rest[0::2], rest[1::2])]
    return [sum(g) for g in zip(*[iter(rest)] * radix)]


def merge_classes(classes: Iterable[Sequence], digits: Sequence[int], radix: int,
                  stats: MergeStats | None = None) -> tuple[list[int], object]:
    """Run Package-Merge over width classes.

    ``classes`` yields, narrowest class first, the weights of the coins in
    each class already in tie order (ascending weight; among equal weights
    the preferred coin first).  ``digits[k]`` is the target's digit for class
    ``k``.  Returns ``(taken, weight)``: ``taken[k]`` is how many coins of
    class ``k`` are selected (always a prefix of that class's order).
    """
    top = len(digits) - 1
    while top >= 0 and digits[top] == 0:
        top -= 1
    if top < 0:
        return [], 0
    source: Iterator = iter(classes)
    flags: list[bytearray] = []
    packs: list = []
    total = 0
    for k in range(top + 1):
        singles = next(source, ())
        if packs:
            cuts = _cuts(singles, packs)
            merged = _interleave(singles, packs, cuts)
            flag = bytearray(len(merged))
            for j, cut in enumerate(cuts):
                flag[cut + j] = 1
        else:
            merged = list(singles)
            flag = bytearray(len(merged))
        if stats is not None:
            stats.see(len(merged))
        d = digits[k]
        if d > len(merged):
            raise Infeasible(f"width class {k} needs {d} elements, only {len(merged)} available")
        total += sum(merged[:d])
        flags.append(flag)
        packs = _package(merged[d:], radix) if k < top else []
    taken = [0] * (top + 1)
    count = digits[top]
    for k in range(top, -1, -1):
        n_packs = flags[k].count(1, 0, count)
        taken[k] = count - n_packs
        if k:
            count = digits[k - 1] + radix * n_packs
    return taken, total


def merge_classes_tracked(classes: Iterable[tuple[Sequence, Sequence, Sequence]],
                          digits: Sequence[int], radix: int,
                          stats: MergeStats | None = None) -> tuple[object, int, int]:
    """Like :func:`merge_classes` but keeps only aggregates per element.

    Each class yields ``(weights, nus, psis)`` in tie order.  Returns the
    summed weight, nu and psi of the optimal selection; nothing about which
    coins were chosen is retained, so memory is bounded by the widest class.
    """
    top = len(digits) - 1
    while top >= 0 and digits[top] == 0:
        top -= 1
    mu, nu, psi = 0, 0, 0
    if top < 0:
        return mu, nu, psi
    source: Iterator = iter(classes)
    pw: list = []
    pn: list = []
    pp: list = []
    for k in range(top + 1):
        sw, sn, sp = next(source, ((), (), ()))
        if pw:
            cuts = _cuts(sw, pw)
            w = _interleave(sw, pw, cuts)
            n = _interleave(sn, pn, cuts)
            p = _interleave(sp, pp, cuts)
        else:
            w, n, p = list(sw), list(sn), list(sp)
        if stats is not None:
            stats.see(len(w))
        d = digits[k]
        if d > len(w):
            raise Infeasible(f"width class {k} needs {d} elements, only {len(w)} available")
        mu += sum(w[:d])
        nu += sum(n[:d])
        psi += sum(p[:d])
        if k < top:
            pw = _package(w[d:], radix)
            pn = _package(n[d:], radix)
            pp = _package(p[d:], radix)
    return mu, nu, psi


def _prepare(instance: CoinInstance):
    """Group coins into width classes and scale the target to an integer."""
    radix = instance.radix
    by_exp: dict[int, list[Coin]] = {}
    for c in instance.coins:
        by_exp.setdefault(c.exponent(radix), []).append(c)
    total = instance.total_width
    if total == 0:
        return None
    try:
        omega, low = WidthValue.of(total, radix).decompose()
    except CodingError:
        raise Infeasible(f"total width {total} is not a sum of powers of {radix}")
    base = min([low, *by_exp])
    scaled = omega * radix ** (low - base)
    digits = target_digits(scaled, radix)
    top = base + len(digits) - 1
    groups = []
    for e in range(base, top + 1):
        group = by_exp.get(e, [])
        # ascending weight, higher id first among equals
        group.sort(key=lambda c: -c.id)
        group.sort(key=lambda c: c.weight)
        groups.append(group)
    return groups, digits


def cc_solve(instance: CoinInstance, stats: MergeStats | None = None) -> CoinSolution:
    """Minimum-weight coin subset with widths summing to ``instance.total_width``.

    Raises :class:`Infeasible` when no subset hits the target exactly.
    """
    prepared = _prepare(instance)
    if prepared is None:
        return CoinSolution((), Fraction(0))
    groups, digits = prepared
    taken, weight = merge_classes(([c.weight for c in g] for g in groups),
                                  digits, instance.radix, stats)
    ids = sorted(c.id for g, t in zip(groups, taken) for c in g[:t])
    return CoinSolution(tuple(ids), Fraction(weight))


LOW, MID, HIGH = "lo", "mid", "hi"


def cc_solve_tracked(instance: CoinInstance, classifier: Callable[[Coin], str],
                     stats: MergeStats | None = None) -> PackageAttr:
    """Aggregates of the :func:`cc_solve` optimum without materializing it.

    ``classifier(coin)`` returns ``"lo"``, ``"mid"`` or ``"hi"``: mid coins
    count toward ``nu`` and hi coins contribute their width to ``psi``.
    """
    radix = instance.radix
    prepared = _prepare(instance)
    zero = WidthValue(0, 0, radix)
    if prepared is None:
        return PackageAttr(Fraction(0), zero, 0, zero)
    groups, digits = prepared

    def classes():
        for g in groups:
            kinds = [classifier(c) for c in g]
            yield ([c.weight for c in g],
                   [int(k == MID) for k in kinds],
                   [c.width if k == HIGH else 0 for c, k in zip(g, kinds)])

    mu, nu, psi = merge_classes_tracked(classes(), digits, radix, stats)
    return PackageAttr(Fraction(mu), WidthValue.of(instance.total_width, radix), nu,
                       WidthValue.of(psi, radix))
