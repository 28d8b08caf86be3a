"""Feasibility-kernel experiment: oracle agreement and timing by problem size.

For each (number of vectors, dimension) cell, draws random integer problems,
checks that the simplex decision matches Fourier-Motzkin elimination, and
reports feasible-rate plus per-call timings for both deciders.

Usage: python scripts/bench_feasibility.py [--cases N] [--seed S]
"""

from __future__ import annotations

import argparse
import random
import time

from choicekit import fm_oracle, verify_certificate
from choicekit.lp import FeasibilityProblem, is_feasible
from choicekit.space import OptionVec, OutcomeSpace


def random_problem(rng: random.Random, n: int, dim: int) -> FeasibilityProblem:
    space = OutcomeSpace([f"x{i}" for i in range(dim)])
    vecs = tuple(
        OptionVec(space, [rng.randint(-5, 5) for _ in range(dim)]) for _ in range(n)
    )
    target = OptionVec(space, [rng.randint(-5, 5) for _ in range(dim)])
    return FeasibilityProblem(vecs, target)


def main() -> None:
    parser = argparse.ArgumentParser()
    parser.add_argument("--cases", type=int, default=200, help="problems per cell")
    parser.add_argument("--seed", type=int, default=11)
    args = parser.parse_args()

    rng = random.Random(args.seed)
    print(f"{'n':>3} {'dim':>4} {'feasible':>9} {'simplex ms':>11} {'fm ms':>8} {'agree':>6}")
    for n in (1, 2, 4, 6):
        for dim in (2, 3, 4):
            problems = [random_problem(rng, n, dim) for _ in range(args.cases)]

            t0 = time.perf_counter()
            certificates = [is_feasible(p) for p in problems]
            simplex_ms = (time.perf_counter() - t0) / args.cases * 1000

            t0 = time.perf_counter()
            oracle = [fm_oracle(p) for p in problems]
            fm_ms = (time.perf_counter() - t0) / args.cases * 1000

            agree = sum(
                (c is not None) == o for c, o in zip(certificates, oracle)
            )
            assert all(
                c is None or verify_certificate(p, c)
                for p, c in zip(problems, certificates)
            )
            feasible_rate = sum(c is not None for c in certificates) / args.cases
            print(
                f"{n:>3} {dim:>4} {feasible_rate:>9.0%} {simplex_ms:>11.3f} "
                f"{fm_ms:>8.3f} {agree:>3}/{args.cases}"
            )


if __name__ == "__main__":
    main()
