from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from boundedcode.model import (
    CodingError, InvalidPenalty, NodeSet, Penalty, WeightVector, WidthValue,
    kraft_sum, pad_dummies, penalty_eval,
)


@pytest.mark.parametrize("n, radix, expected", [(6, 3, 7), (7, 2, 7), (5, 4, 7), (1, 3, 1)])
def test_pad_dummies(n, radix, expected):
    assert pad_dummies(n, radix) == expected


@given(st.integers(1, 500), st.integers(2, 12))
def test_pad_dummies_properties(n, radix):
    m = pad_dummies(n, radix)
    assert 0 <= m - n < radix - 1 or radix == 2 and m == n
    assert (m - 1) % (radix - 1) == 0


def test_penalty_examples():
    assert penalty_eval(Penalty.linear(), 5) == 5
    assert penalty_eval(Penalty.quadratic(), 2, l_min=1) == 9
    assert penalty_eval(Penalty.quadratic(), 0, l_min=0) == 0


def test_exponential_is_rounded_to_precision():
    pen = Penalty.exponential(Fraction(1, 2), precision=1000)
    # 2 ** (1/2 * 3) = 2.828427...
    assert penalty_eval(pen, 2, radix=2, l_min=1) == Fraction(2828, 1000)
    # integer exponents are exact
    assert penalty_eval(Penalty.exponential(2), 3, radix=3) == 729


def test_exponential_values_track_the_real_function():
    pen = Penalty.exponential(Fraction(3, 7), precision=10**9)
    for d, v in enumerate(pen.values(3, 2, 8)):
        assert abs(float(v) - 3 ** (3 / 7 * (d + 2))) < 1e-8


def test_custom_table_validation():
    assert penalty_eval(Penalty.custom([0, 1, 3]), 2) == 3
    with pytest.raises(InvalidPenalty):
        Penalty.custom([0, 2, 3])  # concave
    with pytest.raises(InvalidPenalty):
        Penalty.custom([1, 0, 0])  # decreasing
    with pytest.raises(InvalidPenalty):
        Penalty.custom([0, 1]).values(2, 0, 3)  # too short


def test_exponential_rounding_that_breaks_convexity_is_rejected():
    # 2 ** (0.07 d) = 1, 1.0497, 1.1019, 1.1567, 1.2142 -> 1.0, 1.0, 1.1, 1.2, 1.2
    pen = Penalty.exponential(Fraction(7, 100), precision=10)
    with pytest.raises(InvalidPenalty):
        pen.values(2, 0, 5)


@given(st.sampled_from(["linear", "quadratic", "exp:1/3", "exp:2"]),
       st.integers(2, 5), st.integers(0, 4), st.integers(1, 12))
def test_penalties_are_nondecreasing_and_convex(text, radix, l_min, count):
    vals = Penalty.parse(text).values(radix, l_min, count)
    steps = [b - a for a, b in zip(vals, vals[1:])]
    assert all(s >= 0 for s in steps)
    assert all(b >= a for a, b in zip(steps, steps[1:]))


@pytest.mark.parametrize("lengths, radix, expected", [
    ((1, 2, 2, 2, 2, 2, 2), 3, Fraction(1)),
    ((1, 1), 2, Fraction(1)),
    ((1, 2, 3), 2, Fraction(7, 8)),
])
def test_kraft_sum(lengths, radix, expected):
    assert kraft_sum(lengths, radix) == expected


def test_width_value_equality_ignores_scale():
    assert WidthValue(3, 2, 3) == WidthValue(1, 1, 3)
    assert hash(WidthValue(3, 2, 3)) == hash(WidthValue(1, 1, 3))
    assert WidthValue.of(Fraction(2, 3), 3) == Fraction(2, 3)
    assert WidthValue.of(Fraction(2, 3), 3).decompose() == (2, -1)
    assert WidthValue.of(18, 3).decompose() == (2, 2)
    with pytest.raises(CodingError):
        WidthValue.of(Fraction(1, 3), 2)


def test_weight_vector_sorts_stably_and_pads():
    wv = WeightVector.from_weights([1, 5, "5", Fraction(1, 2)], 3)
    assert wv.weights == (5, 5, 1, Fraction(1, 2), 0)
    assert wv.order == (1, 2, 0, 3)
    assert wv.n_dummies == 1
    assert wv.to_caller(["a", "b", "c", "d", "dummy"]) == ["c", "a", "b", "d"]
    with pytest.raises(CodingError):
        WeightVector.from_weights([1, 0], 2)


def test_nodeset_column_property():
    ns = NodeSet.from_nodes([(1, 2), (1, 3), (0, 2)], 2, 1)
    assert ns.heights == (1, 2)
    assert (1, 3) in ns and (0, 3) not in ns
    with pytest.raises(CodingError):
        NodeSet.from_nodes([(0, 3)], 1, 1)
