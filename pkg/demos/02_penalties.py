"""The same weights under different convex penalties.

A steeper penalty punishes long codewords harder, so the optimum flattens
toward equal lengths.
"""

from boundedcode import CodingProblem, Penalty, penalty_eval, solve

weights = [40, 20, 12, 10, 8, 5, 3, 2]
for name, pen in [("linear", Penalty.linear()),
                  ("quadratic", Penalty.quadratic()),
                  ("exp t=1", Penalty.exponential(1)),
                  ("table 0,1,3,8,20", Penalty.custom([0, 1, 3, 8, 20]))]:
    r = solve(CodingProblem.create(weights, radix=2, l_max=4, penalty=pen))
    print(f"{name:18s} lengths {r.lengths}  penalty {r.penalty_value}")

# exponential penalties are rounded to a fixed grid so arithmetic stays exact
pen = Penalty.exponential("1/2", precision=10**6)
print("2^(delta/2) on a 1e-6 grid:", [str(penalty_eval(pen, k)) for k in range(4)])
