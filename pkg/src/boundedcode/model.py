"""Exact domain types shared by the solvers.

Everything here is immutable and uses exact arithmetic: weights and penalty
values are :class:`fractions.Fraction`, widths are integers scaled by a power
of the radix.  Floating point never enters a width or weight comparison.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterable, NamedTuple, Sequence


class CodingError(ValueError):
    """Base class for errors raised by this package."""


class Infeasible(CodingError):
    """No code (or coin selection) satisfies the constraints."""


class InvalidPenalty(CodingError):
    """A penalty table is not nondecreasing and convex on the range used."""


def check_radix(radix: int) -> int:
    if isinstance(radix, bool) or not isinstance(radix, int) or radix < 2:
        raise CodingError(f"radix must be an integer >= 2, got {radix!r}")
    return radix


def as_fraction(value) -> Fraction:
    """Convert int, Fraction, Decimal or a string like ``"3/8"`` exactly.

    Floats are converted exactly too (``Fraction(0.1)`` is not 1/10), so pass
    strings when a decimal literal is meant.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, str):
        return Fraction(value.strip())
    return Fraction(value)


def pad_dummies(n_real: int, radix: int) -> int:
    """Smallest ``n >= n_real`` with ``n % (radix - 1) == 1 % (radix - 1)``."""
    check_radix(radix)
    if n_real < 1:
        raise CodingError("need at least one symbol")
    if radix == 2:
        return n_real
    return n_real + (1 - n_real) % (radix - 1)


def kraft_sum(lengths: Iterable[int], radix: int) -> Fraction:
    """Exact Kraft sum ``sum(radix ** -l)``."""
    lengths = list(lengths)
    if not lengths:
        return Fraction(0)
    top = max(lengths)
    if min(lengths) < 0:
        raise CodingError("codeword lengths must be nonnegative")
    return Fraction(sum(radix ** (top - l) for l in lengths), radix**top)


def ceil_log(n: int, radix: int) -> int:
    """Smallest k with ``radix**k >= n``."""
    k, p = 0, 1
    while p < n:
        p *= radix
        k += 1
    return k


def floor_log(n: int, radix: int) -> int:
    """Largest k with ``radix**k <= n`` (n >= 1)."""
    k, p = 0, radix
    while p <= n:
        p *= radix
        k += 1
    return k


# -- widths -----------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class WidthValue:
    """Exact width ``scaled * radix ** -exponent``.

    Equality and hashing go through the represented value, so
    ``WidthValue(3, 1, 3) == WidthValue(1, 0, 3)``.
    """

    scaled: int
    exponent: int
    radix: int = 2

    @classmethod
    def of(cls, value, radix: int) -> "WidthValue":
        """Build from a Fraction/int; the denominator must divide a power of radix."""
        if isinstance(value, WidthValue):
            return value
        value = as_fraction(value)
        if value < 0:
            raise CodingError(f"width must be nonnegative, got {value}")
        den, e = value.denominator, 0
        while den != 1:
            g = gcd(den, radix)
            if g == 1:
                raise CodingError(f"{value} is not a finite base-{radix} fraction")
            den //= g
            e += 1
        return cls(value.numerator * radix**e // value.denominator, e, radix)

    @property
    def value(self) -> Fraction:
        if self.exponent >= 0:
            return Fraction(self.scaled, self.radix**self.exponent)
        return Fraction(self.scaled * self.radix ** (-self.exponent))

    def __eq__(self, other):
        if isinstance(other, WidthValue):
            return self.value == other.value
        if isinstance(other, (int, Fraction)):
            return self.value == other
        return NotImplemented

    def __hash__(self):
        return hash(self.value)

    def __lt__(self, other):
        return self.value < _width_value(other)

    def __le__(self, other):
        return self.value <= _width_value(other)

    def __add__(self, other):
        return WidthValue.of(self.value + _width_value(other), self.radix)

    def __sub__(self, other):
        return WidthValue.of(self.value - _width_value(other), self.radix)

    def decompose(self) -> tuple[int, int]:
        """Return ``(omega, k)`` with value = omega * radix**k and radix not dividing omega.

        Raises for a zero width, which has no such decomposition.
        """
        if self.scaled == 0:
            raise CodingError("zero width has no power decomposition")
        omega, k = self.scaled, -self.exponent
        while omega % self.radix == 0:
            omega //= self.radix
            k += 1
        return omega, k

    def __repr__(self):
        return f"WidthValue({self.value})"


def _width_value(x) -> Fraction:
    return x.value if isinstance(x, WidthValue) else as_fraction(x)


# -- penalties --------------------------------------------------------------

LINEAR = "linear"
QUADRATIC = "quadratic"
EXPONENTIAL = "exp"
TABLE = "table"

DEFAULT_PRECISION = 10**12


@dataclass(frozen=True)
class Penalty:
    """Convex nondecreasing penalty ``phi`` applied to ``l_i - l_min``.

    ``quadratic`` is ``(delta + l_min) ** 2`` and ``exp`` is
    ``radix ** (t * (delta + l_min))`` rounded to the nearest multiple of
    ``1 / precision``; both therefore depend on the problem's ``l_min`` and
    radix.  ``table`` gives ``phi(0), phi(1), ...`` literally.
    """

    kind: str = LINEAR
    t: Fraction | None = None
    table: tuple[Fraction, ...] | None = None
    precision: int = DEFAULT_PRECISION

    @classmethod
    def linear(cls) -> "Penalty":
        return cls(LINEAR)

    @classmethod
    def quadratic(cls) -> "Penalty":
        return cls(QUADRATIC)

    @classmethod
    def exponential(cls, t, precision: int = DEFAULT_PRECISION) -> "Penalty":
        t = as_fraction(t)
        if t <= 0:
            raise InvalidPenalty("exponential penalty needs t > 0")
        if precision < 1:
            raise InvalidPenalty("precision must be a positive integer")
        return cls(EXPONENTIAL, t=t, precision=precision)

    @classmethod
    def custom(cls, values: Iterable) -> "Penalty":
        table = tuple(as_fraction(v) for v in values)
        if not table:
            raise InvalidPenalty("empty penalty table")
        _validate(table, len(table))
        return cls(TABLE, table=table)

    @classmethod
    def parse(cls, text: str, precision: int = DEFAULT_PRECISION) -> "Penalty":
        """Parse ``linear``, ``quadratic``, ``exp:<t>`` or ``table:v0,v1,...``."""
        text = text.strip()
        if text == LINEAR:
            return cls.linear()
        if text == QUADRATIC:
            return cls.quadratic()
        if text.startswith("exp:"):
            return cls.exponential(text[4:], precision)
        if text.startswith("table:"):
            return cls.custom(v for v in text[6:].split(",") if v.strip())
        raise InvalidPenalty(f"unknown penalty {text!r}")

    def values(self, radix: int, l_min: int, count: int) -> list[Fraction]:
        """``phi(0) ... phi(count - 1)``, validated as nondecreasing and convex."""
        if self.kind == LINEAR:
            vals = [Fraction(d) for d in range(count)]
        elif self.kind == QUADRATIC:
            vals = [Fraction((d + l_min) ** 2) for d in range(count)]
        elif self.kind == EXPONENTIAL:
            vals = [_rational_power(radix, self.t * (d + l_min), self.precision)
                    for d in range(count)]
        elif self.kind == TABLE:
            if count > len(self.table):
                raise InvalidPenalty(
                    f"penalty table has {len(self.table)} entries, {count} needed")
            vals = list(self.table[:count])
        else:
            raise InvalidPenalty(f"unknown penalty kind {self.kind!r}")
        _validate(vals, count)
        return vals

    def to_json(self) -> dict:
        out: dict = {"kind": self.kind}
        if self.kind == EXPONENTIAL:
            out["t"] = fraction_str(self.t)
            out["precision"] = self.precision
        elif self.kind == TABLE:
            out["table"] = [fraction_str(v) for v in self.table]
        return out


def _validate(vals: Sequence[Fraction], count: int) -> None:
    for d in range(1, count):
        step = vals[d] - vals[d - 1]
        if step < 0:
            raise InvalidPenalty(f"penalty decreases between {d - 1} and {d}")
        if d >= 2 and step < vals[d - 1] - vals[d - 2]:
            raise InvalidPenalty(f"penalty is not convex at {d - 1}")


def _iroot(x: int, k: int) -> int:
    """floor(x ** (1/k)) for x >= 0."""
    if x < 2 or k == 1:
        return x
    y = 1 << -(-x.bit_length() // k)
    while True:
        z = ((k - 1) * y + x // y ** (k - 1)) // k
        if z >= y:
            return y
        y = z


def _rational_power(radix: int, exponent: Fraction, precision: int) -> Fraction:
    """radix**exponent rounded to the nearest multiple of 1/precision (ties up)."""
    num, den = exponent.numerator, exponent.denominator
    if num < 0:
        raise InvalidPenalty("negative exponent")
    if den == 1:
        return Fraction(round(Fraction(radix**num * precision)), precision)
    target = radix**num * precision**den
    y = _iroot(target, den)
    # y <= value < y + 1; round up when value >= y + 1/2
    if (2 * y + 1) ** den <= target * 2**den:
        y += 1
    return Fraction(y, precision)


def penalty_eval(penalty: Penalty, delta: int, *, radix: int = 2,
                 l_min: int = 0) -> Fraction:
    """phi(delta) for a problem with the given radix and minimum length."""
    if delta < 0:
        raise CodingError("delta must be nonnegative")
    return penalty.values(radix, l_min, delta + 1)[delta]


def fraction_str(x: Fraction) -> str:
    """Always ``"a/b"``, including integers (``"3/1"``)."""
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


# -- weights and bounds -----------------------------------------------------


@dataclass(frozen=True)
class WeightVector:
    """Weights sorted nonincreasing, with zero-weight dummies at the end.

    ``order[k]`` is the caller position of sorted position ``k`` for the
    ``n_real`` caller-supplied symbols.  Equal weights keep caller order.
    """

    weights: tuple[Fraction, ...]
    order: tuple[int, ...]
    n_real: int

    @classmethod
    def from_weights(cls, weights: Iterable, radix: int,
                     extra_dummies: int = 0) -> "WeightVector":
        ws = [as_fraction(w) for w in weights]
        if not ws:
            raise CodingError("need at least one symbol")
        for j, w in enumerate(ws):
            if w <= 0:
                raise CodingError(f"weight {j} is {w}; weights must be positive")
        if extra_dummies < 0:
            raise CodingError("extra_dummies must be nonnegative")
        order = tuple(sorted(range(len(ws)), key=lambda j: -ws[j]))
        n_padded = pad_dummies(len(ws) + extra_dummies, radix)
        sorted_ws = tuple(ws[j] for j in order) + (Fraction(0),) * (n_padded - len(ws))
        return cls(sorted_ws, order, len(ws))

    @property
    def n_padded(self) -> int:
        return len(self.weights)

    @property
    def n_dummies(self) -> int:
        return len(self.weights) - self.n_real

    def to_caller(self, values: Sequence) -> list:
        """Map per-sorted-position values (padded or not) back to caller order."""
        out = [None] * self.n_real
        for k, j in enumerate(self.order):
            out[j] = values[k]
        return out


@dataclass(frozen=True)
class LengthBounds:
    l_min: int
    l_max: int

    def __post_init__(self):
        if self.l_min < 0 or self.l_max < self.l_min:
            raise CodingError(
                f"need 0 <= l_min <= l_max, got [{self.l_min}, {self.l_max}]")

    @property
    def span(self) -> int:
        return self.l_max - self.l_min


# -- nodes ------------------------------------------------------------------


class Node(NamedTuple):
    """Grid coordinate: ``symbol`` is a 0-based sorted index, ``level`` a codeword depth."""

    symbol: int
    level: int


@dataclass(frozen=True)
class NodeSet:
    """A nodeset with contiguous columns, stored as per-symbol column heights.

    Column ``i`` holds levels ``l_min + 1 ... l_min + heights[i]``.
    """

    heights: tuple[int, ...]
    l_min: int

    @classmethod
    def from_nodes(cls, nodes: Iterable, n: int, l_min: int) -> "NodeSet":
        cols: list[set[int]] = [set() for _ in range(n)]
        for i, l in nodes:
            cols[i].add(l)
        heights = []
        for i, col in enumerate(cols):
            h = len(col)
            if col != set(range(l_min + 1, l_min + h + 1)):
                raise CodingError(f"column {i} is not contiguous from level {l_min + 1}")
            heights.append(h)
        return cls(tuple(heights), l_min)

    @classmethod
    def from_level_counts(cls, counts: Sequence[int], n: int,
                          l_min: int) -> "NodeSet":
        """Build from ``counts[k]`` = nodes at level ``l_min + 1 + k``.

        The nodes at each level must be the highest-index symbols and counts
        must not grow with level; anything else is a solver bug.
        """
        for k in range(1, len(counts)):
            assert counts[k] <= counts[k - 1], f"level counts not monotone: {counts}"
        heights = [0] * n
        for c in counts:
            for i in range(n - c, n):
                heights[i] += 1
        return cls(tuple(heights), l_min)

    def nodes(self) -> list[Node]:
        return [Node(i, self.l_min + k)
                for i, h in enumerate(self.heights) for k in range(1, h + 1)]

    def __len__(self):
        return sum(self.heights)

    def __contains__(self, node) -> bool:
        i, l = node
        return 0 <= i < len(self.heights) and self.l_min < l <= self.l_min + self.heights[i]

    def is_monotone(self) -> bool:
        """Heights nondecreasing in symbol index (lower indices have larger weight)."""
        h = self.heights
        return all(h[i] <= h[i + 1] for i in range(len(h) - 1))
