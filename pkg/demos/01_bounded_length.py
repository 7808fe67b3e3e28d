"""A length-limited code versus an unconstrained one.

Huffman's code for steep weights gets very deep.  Capping the maximum
length costs a little expected length and buys a short worst case.
"""

from fractions import Fraction

from boundedcode import CodingProblem, assign_canonical, solve

weights = [2 ** (12 - i) for i in range(12)] + [1]
free = solve(CodingProblem.create(weights, radix=2))
print("no cap      lengths", free.lengths, "expected", free.expected_length)

for cap in (8, 6, 4):
    r = solve(CodingProblem.create(weights, radix=2, l_max=cap))
    print(f"l_max = {cap}   lengths", r.lengths, "expected", r.expected_length,
          f"(+{float(r.expected_length / free.expected_length - 1):.1%})")

# a lower bound too: no codeword shorter than 3 digits
r = solve(CodingProblem.create(weights, radix=2, l_min=3, l_max=6))
print("lengths in [3, 6]", r.lengths)
print("codewords        ", assign_canonical(r.lengths, 2).strings())
print("Kraft sum is", r.kraft, "so the code is complete")
assert r.kraft == Fraction(1)
