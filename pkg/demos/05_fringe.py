"""Bounding the spread between the longest and shortest codeword.

Fringe 0 forces a block code; each extra unit lets the code follow the
weights more closely.
"""

from boundedcode import FringeProblem, Infeasible, fringe_solve

weights = [30, 20, 15, 10, 8, 6, 5, 3, 2, 1]
for d in range(4):
    try:
        fr = fringe_solve(FringeProblem.create(weights, radix=2, d=d))
    except Infeasible as exc:
        print(f"d = {d}: infeasible ({exc})")
        continue
    r = fr.result
    print(f"d = {d}: lengths {r.lengths}  expected {r.expected_length}  "
          f"after {fr.solves} bounded-length solves")

# 10 symbols have no complete binary block code; unused leaves fix that
fr = fringe_solve(FringeProblem.create(weights, radix=2, d=0, extra_dummy_blocks=6))
print("d = 0 with 6 unused leaves:", fr.result.lengths)
