"""Optimal D-ary prefix codes with codeword lengths confined to [l_min, l_max].

Quick start::

    >>> from boundedcode import CodingProblem, solve, assign_canonical
    >>> res = solve(CodingProblem.create([8, 4, 2, 1, 1], radix=2, l_max=3))
    >>> res.lengths
    (1, 3, 3, 3, 3)
    >>> assign_canonical(res.lengths, 2).strings()
    ['0', '100', '101', '110', '111']
"""

from .codebook import Codebook, DecodeError, assign_canonical, decode, encode, verify
from .fringe import FringeProblem, FringeResult, fringe_solve
from .linspace import LinearSpaceStats, solve_linear_space
from .model import (
    CodingError, Infeasible, InvalidPenalty, LengthBounds, Node, NodeSet, Penalty,
    WeightVector, WidthValue, kraft_sum, pad_dummies, penalty_eval,
)
from .packmerge import (
    Coin, CoinInstance, CoinSolution, MergeStats, PackageAttr, cc_solve, cc_solve_tracked,
)
from .solver import CodingProblem, SolveResult, build_instance, solve, total_width

__all__ = [
    "Codebook", "DecodeError", "assign_canonical", "decode", "encode", "verify",
    "FringeProblem", "FringeResult", "fringe_solve", "LinearSpaceStats", "solve_linear_space",
    "CodingError", "Infeasible", "InvalidPenalty", "LengthBounds", "Node", "NodeSet",
    "Penalty", "WeightVector", "WidthValue", "kraft_sum", "pad_dummies", "penalty_eval",
    "Coin", "CoinInstance", "CoinSolution", "MergeStats", "PackageAttr", "cc_solve", "cc_solve_tracked",
    "CodingProblem", "SolveResult", "build_instance", "solve", "total_width",
]
