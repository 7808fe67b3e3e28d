"""The coin-collecting problem underneath everything else.

Pick coins whose widths (powers of the radix) add up exactly to a target,
spending as little total weight as possible.
"""

from fractions import Fraction as F

from boundedcode import CoinInstance, Infeasible, cc_solve
from boundedcode.oracle import recursive_package_merge

coins = [
    (0, F(1, 2), 5), (1, F(1, 2), 3), (2, F(1, 4), 1), (3, F(1, 4), 1),
    (4, F(1, 4), 4), (5, F(1, 8), 1), (6, F(1, 8), 2), (7, 1, 9),
]
for target in (F(1), F(3, 4), F(13, 8), F(3)):
    inst = CoinInstance.build(coins, target, radix=2)
    try:
        sol = cc_solve(inst)
    except Infeasible:
        print(f"target {target}: no subset adds up")
        continue
    print(f"target {target}: coins {list(sol.ids)}  weight {sol.weight}")
    assert sol.ids == recursive_package_merge(inst)
