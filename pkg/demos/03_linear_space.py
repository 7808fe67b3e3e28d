"""The linear-space solver gives the same code with far fewer live elements."""

import random
import time

from boundedcode import CodingProblem, LinearSpaceStats, MergeStats, solve, solve_linear_space

rng = random.Random(1)
weights = [rng.randint(1, 10**6) for _ in range(20_000)]
problem = CodingProblem.create(weights, radix=3, l_min=2, l_max=16)

full_stats, lin_stats = MergeStats(), LinearSpaceStats()
t = time.perf_counter()
a = solve(problem, full_stats)
t_full = time.perf_counter() - t
t = time.perf_counter()
b = solve_linear_space(problem, lin_stats)
t_lin = time.perf_counter() - t

print("same lengths:", a.lengths == b.lengths, " same penalty:", a.penalty_value == b.penalty_value)
print(f"full solver   {t_full:.2f}s")
print(f"linear space  {t_lin:.2f}s, peak live elements {lin_stats.peak_live} "
      f"for n = {problem.n} (bound 2n = {2 * problem.n})")
print("grid splits:", len(lin_stats.splits), "; each leaves at most half the area:",
      all(child * 2 <= parent for parent, child in lin_stats.splits))
