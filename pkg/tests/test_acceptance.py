"""Exit criteria for the package; each test reports one summary line."""

import io
import json
import random
import time
from contextlib import redirect_stdout
from fractions import Fraction

from boundedcode.cli import main
from boundedcode.fringe import FringeProblem, fringe_solve
from boundedcode.linspace import LinearSpaceStats, solve_linear_space
from boundedcode.model import Infeasible, Penalty, kraft_sum, pad_dummies
from boundedcode.oracle import (
    brute_force_cc, brute_force_code, brute_force_fringe, reference_huffman,
)
from boundedcode.packmerge import CoinInstance, cc_solve
from boundedcode.solver import CodingProblem, build_instance, solve, total_width

F = Fraction


def _rational_weights(rng, n):
    return [F(rng.randint(1, 60), rng.randint(1, 12)) for _ in range(n)]


def test_1_seven_symbol_ternary_grid(criterion):
    start = time.perf_counter()
    ps = [F(k, 28) for k in (7, 6, 5, 4, 3, 2, 1)]
    p = CodingProblem.create(ps, 3, 1, 4, Penalty.custom([0, 1, 4, 9]))
    inst = build_instance(p)
    by_width = {}
    for c in inst.coins:
        by_width.setdefault(c.width, []).append(c)
    ok = len(inst.coins) == 21 and set(by_width) == {F(1, 9), F(1, 27), F(1, 81)}
    for width, factor in ((F(1, 9), 1), (F(1, 27), 3), (F(1, 81), 5)):
        got = sorted(c.weight for c in by_width.get(width, []))
        ok = ok and got == sorted(factor * q for q in ps)
    elapsed = time.perf_counter() - start
    ok = ok and elapsed < 1
    assert criterion(1, ok, f"21 coins, widths 1/9 1/27 1/81, weights p, 3p, 5p ({elapsed:.3f}s)")


def test_2_total_width_constants(criterion):
    start = time.perf_counter()
    ok = total_width(21, 3, 2) == F(2, 3) and total_width(7, 3, 1) == F(2, 3)
    elapsed = time.perf_counter() - start
    assert criterion(2, ok and elapsed < 1, f"total widths 2/3 and 2/3 ({elapsed:.3f}s)")


def test_3_solver_vs_brute_force(criterion):
    rng = random.Random(2024)
    start = time.perf_counter()
    checked = feasible = 0
    failures = []
    for radix in (2, 3):
        for n in range(2, 8):
            for l_min in (0, 1, 2):
                for l_max in range(l_min + 1, 6):
                    for pen in (Penalty.linear(), Penalty.quadratic()):
                        for _ in range(50):
                            p = CodingProblem.create(_rational_weights(rng, n), radix,
                                                     l_min, l_max, pen)
                            best, _ = brute_force_code(p)
                            checked += 1
                            try:
                                r = solve(p)
                            except Infeasible:
                                if best is not None:
                                    failures.append(p)
                                continue
                            feasible += 1
                            padded = r.padded_lengths
                            good = (r.penalty_value == best
                                    and kraft_sum(padded, radix) == 1
                                    and all(l_min <= l <= l_max for l in padded)
                                    and list(padded) == sorted(padded))
                            if not good:
                                failures.append(p)
    elapsed = time.perf_counter() - start
    ok = not failures and elapsed < 300
    assert criterion(3, ok, f"{checked} instances ({feasible} feasible), "
                            f"{len(failures)} mismatches ({elapsed:.1f}s)")


def test_4_package_merge_vs_subsets(criterion):
    rng = random.Random(4)
    start = time.perf_counter()
    failures = 0
    for _ in range(1000):
        radix = rng.choice([2, 3])
        m = rng.randint(0, 12)
        coins = [(j, F(1, radix ** rng.randint(0, 3)), F(rng.randint(0, 40), rng.randint(1, 4)))
                 for j in range(m)]
        inst = CoinInstance.build(coins, F(rng.randint(0, 3 * radix**3), radix**3), radix)
        try:
            expected = brute_force_cc(inst)
        except Infeasible:
            expected = None
        try:
            got = cc_solve(inst).weight
        except Infeasible:
            got = None
        failures += got != expected
    elapsed = time.perf_counter() - start
    ok = failures == 0 and elapsed < 60
    assert criterion(4, ok, f"1000 coin instances, {failures} mismatches ({elapsed:.1f}s)")


def _random_large_problem(rng):
    radix = rng.choice([2, 3, 4])
    n = rng.randint(1, 200)
    n_padded = pad_dummies(n, radix)
    l_min = rng.randint(0, 3)
    while radix**l_min > n_padded:
        l_min -= 1
    span = rng.randint(0, 12)
    pen = rng.choice([Penalty.linear(), Penalty.quadratic(), Penalty.exponential(F(1, 2)),
                      Penalty.custom([F(k * k + k, 3) for k in range(13)])])
    style = rng.random()
    if style < 0.3:
        ws = [rng.randint(1, 3) for _ in range(n)]
    elif style < 0.4:
        ws = [1] * n
    else:
        ws = _rational_weights(rng, n)
    return CodingProblem.create(ws, radix, l_min, l_min + span, pen)


def _criteria_5_and_6():
    rng = random.Random(5)
    start = time.perf_counter()
    mismatches = feasible = 0
    worst = 0.0
    for _ in range(1000):
        p = _random_large_problem(rng)
        try:
            expected = solve(p)
        except Infeasible:
            expected = None
        stats = LinearSpaceStats()
        try:
            got = solve_linear_space(p, stats)
        except Infeasible:
            got = None
        feasible += expected is not None
        mismatches += got != expected
        worst = max(worst, stats.peak_live / p.n)
    return mismatches, feasible, worst, time.perf_counter() - start


_RESULT_5_6 = []


def _shared_5_6():
    if not _RESULT_5_6:
        _RESULT_5_6.append(_criteria_5_and_6())
    return _RESULT_5_6[0]


def test_5_linear_space_equivalence(criterion):
    mismatches, feasible, _, elapsed = _shared_5_6()
    ok = mismatches == 0 and elapsed < 300
    assert criterion(5, ok, f"1000 instances ({feasible} feasible), {mismatches} differ "
                            f"({elapsed:.1f}s)")


def test_6_memory_bound(criterion):
    _, _, worst, _ = _shared_5_6()
    assert criterion(6, worst <= 2, f"peak live elements / n_padded = {worst:.3f} (limit 2)")


def test_7_huffman_agreement(criterion):
    rng = random.Random(7)
    start = time.perf_counter()
    failures = 0
    for _ in range(500):
        radix = rng.choice([2, 3, 4])
        ws = _rational_weights(rng, rng.randint(1, 50))
        r = solve(CodingProblem.create(ws, radix))  # l_min 0, l_max (n-1)/(D-1)
        huff = reference_huffman(ws, radix)
        failures += r.expected_length != sum(w * l for w, l in zip(ws, huff))
    elapsed = time.perf_counter() - start
    ok = failures == 0 and elapsed < 60
    assert criterion(7, ok, f"500 instances, {failures} mismatches ({elapsed:.1f}s)")


def test_8_fringe(criterion):
    rng = random.Random(8)
    start = time.perf_counter()
    checked = failures = 0
    for radix in (2, 3):
        for d in (0, 1, 2):
            for n in range(1, 8):
                if pad_dummies(n, radix) > 7:
                    continue
                for pen in (Penalty.linear(), Penalty.quadratic()):
                    for _ in range(20):
                        ws = _rational_weights(rng, n)
                        best, _ = brute_force_fringe(ws, radix, d, pen)
                        checked += 1
                        try:
                            r = fringe_solve(FringeProblem.create(ws, radix, d, pen))
                        except Infeasible:
                            failures += best is not None
                            continue
                        failures += r.result.penalty_value != best or r.solves > d + 1
    elapsed = time.perf_counter() - start
    ok = failures == 0 and elapsed < 120
    assert criterion(8, ok, f"{checked} fringe instances, {failures} mismatches ({elapsed:.1f}s)")


def _best_time(fn, repeat=2):
    best = float("inf")
    for _ in range(repeat):
        start = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - start)
    return best


def test_9_scaling(criterion):
    rng = random.Random(9)
    weights = [rng.randint(1, 10**6) for _ in range(200_000)]
    small = CodingProblem.create(weights[:100_000], 2, 2, 18)
    large = CodingProblem.create(weights, 2, 2, 18)
    ratios = {}
    for name, fn in (("full", solve), ("linear", solve_linear_space)):
        t1 = _best_time(lambda: fn(small), 1)
        t2 = _best_time(lambda: fn(large), 1)
        ratios[name] = t2 / t1
    fws = [rng.randint(1, 10**6) for _ in range(3000)]
    sweep = [_best_time(lambda: fringe_solve(FringeProblem.create(fws, 2, d)))
             for d in (4, 8, 16)]
    growth = [sweep[1] / sweep[0], sweep[2] / sweep[1]]
    ok = all(r < 4 for r in ratios.values()) and all(g < 5 for g in growth)
    assert criterion(9, ok, "n 1e5 -> 2e5 time ratio full {full:.2f}, linear {linear:.2f} "
                            "(limit 4); fringe d 4->8->16 growth {g0:.2f}, {g1:.2f} (limit 5)"
                     .format(g0=growth[0], g1=growth[1], **ratios))


CLI_RUNS = [
    (["solve", "--radix", "3", "--min-len", "1", "--max-len", "4"], "1\n" * 7, 0),
    (["solve", "--min-len", "0"], "1\n", 0),
    (["solve", "--radix", "2", "--min-len", "2", "--max-len", "2"], "1\n1\n", 2),
    (["solve", "--penalty", "exp:1/2", "--space", "full"], "5\n3\n3/2\n0.5\n", 0),
    (["fringe", "--radix", "3", "--max-fringe", "0"], "1\n" * 9, 0),
    (["fringe", "--radix", "2", "--max-fringe", "0"], "1\n" * 6, 2),
    (["fringe", "--radix", "2", "--max-fringe", "0", "--extra-dummy-blocks", "2"], "1\n" * 6, 0),
]


def _run_cli(args, stdin, monkeypatch):
    monkeypatch.setattr("sys.stdin", io.StringIO(stdin))
    buf = io.StringIO()
    with redirect_stdout(buf):
        code = main(args)
    return code, buf.getvalue()


def test_10_cli_determinism(criterion, monkeypatch, tmp_path, capsys):
    ok = True
    outputs = []
    for args, stdin, want in CLI_RUNS:
        first = _run_cli(args, stdin, monkeypatch)
        second = _run_cli(args, stdin, monkeypatch)
        ok = ok and first == second and first[0] == want
        if want == 0:
            json.loads(first[1])
            outputs.append(first[1])
    book = tmp_path / "book.json"
    book.write_text(outputs[0])
    verify_runs = [_run_cli(["verify", str(book)], "", monkeypatch) for _ in range(2)]
    ok = ok and verify_runs[0] == verify_runs[1] and verify_runs[0][0] == 0
    capsys.readouterr()
    assert criterion(10, ok, f"{len(CLI_RUNS) + 1} CLI runs repeated twice, byte-identical")
