import random
from fractions import Fraction

import pytest

from boundedcode.model import Infeasible
from boundedcode.oracle import (
    TooLarge, brute_force_cc, brute_force_code, reference_huffman,
)
from boundedcode.packmerge import CoinInstance
from boundedcode.solver import CodingProblem

F = Fraction


def test_brute_force_code_examples():
    best, argmins = brute_force_code(CodingProblem.create([F(1, 7)] * 7, 3, 1, 4))
    # penalty is sum p (l - 1); expected length is 1 more
    assert best + 1 == F(13, 7) and argmins == [(1, 2, 2, 2, 2, 2, 2)]
    assert brute_force_code(CodingProblem.create([1] * 9, 3, 2, 4))[1] == [(2,) * 9]
    assert brute_force_code(CodingProblem.create([1] * 5, 2, 0, 2)) == (None, [])
    with pytest.raises(TooLarge):
        brute_force_code(CodingProblem.create([1] * 11, 2, 0, 5))


def test_brute_force_cc_examples():
    assert brute_force_cc(CoinInstance.build(
        [(0, F(1, 2), 5), (1, F(1, 2), 3), (2, F(1, 2), 9)], 0, 2)) == 0
    assert brute_force_cc(CoinInstance.build(
        [(0, F(1, 2), 5), (1, F(1, 2), 3), (2, F(1, 2), 9)], 1, 2)) == 8
    assert brute_force_cc(CoinInstance.build(
        [(0, F(1, 4), 1), (1, F(1, 4), 1), (2, F(1, 4), 4), (3, F(1, 2), 3)], F(1, 2), 2)) == 2
    with pytest.raises(Infeasible):
        brute_force_cc(CoinInstance.build([(0, F(1, 2), 1)], 1, 2))


def test_reference_huffman():
    assert reference_huffman([8, 4, 2, 1, 1], 2) == [1, 2, 3, 4, 4]
    assert reference_huffman([1] * 27, 3) == [3] * 27
    assert reference_huffman([5, 5], 2) == [1, 1]
    assert reference_huffman([7], 4) == [0]


def test_huffman_and_brute_force_agree():
    rng = random.Random(2)
    for _ in range(200):
        radix = rng.choice([2, 3])
        n = rng.randint(1, 7)
        ws = [F(rng.randint(1, 20)) for _ in range(n)]
        p = CodingProblem.create(ws, radix)
        if p.l_max > 6:
            continue
        best, _ = brute_force_code(p)
        huff = reference_huffman(ws, radix)
        assert best == sum(w * l for w, l in zip(ws, huff))
