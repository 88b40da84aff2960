"""Tour of the nonparametric comparison toolbox on synthetic samples.

Three algorithms' final costs on six problems are faked with known
effect sizes, then pushed through the same machinery the harness uses:
descriptive stats, mean ranks, the Friedman test, and rank-sum tests
(normal approximation cross-checked against the exact enumeration on a
small sample).
"""

import numpy as np

from seahorse_opt.stats import (
    descriptive_stats,
    friedman_mean_rank,
    friedman_test,
    rank_by_mean,
    wilcoxon_rank_sum,
    wilcoxon_rank_sum_exact,
    win_tie_loss,
)


def main() -> None:
    rng = np.random.default_rng(7)
    # algo A is best, B trails slightly, C is clearly worse
    shifts = {"A": 0.0, "B": 0.3, "C": 2.0}
    runs = {name: rng.normal(loc=shift, scale=1.0, size=15)
            for name, shift in shifts.items()}

    print("descriptive stats (15 runs each)")
    for name, sample in runs.items():
        st = descriptive_stats(sample)
        print(f"  {name}: min {st.min:7.4f}  mean {st.mean:7.4f}  "
              f"max {st.max:7.4f}  std {st.std:6.4f}")

    # one score row per problem (mean cost of each algorithm), ranked
    # within the row before anything Friedman-shaped sees it
    scores = [
        [float(np.mean(rng.normal(loc=shifts[name], scale=0.5, size=10)))
         for name in shifts]
        for _ in range(6)
    ]
    rank_matrix = [rank_by_mean(row) for row in scores]
    means = friedman_mean_rank(rank_matrix)
    print("\nFriedman mean ranks over 6 problems (lower is better)")
    for name, rank in zip(shifts, means):
        print(f"  {name}: {rank:.3f}")
    result = friedman_test(rank_matrix)
    print(f"  statistic {result.statistic:.4f}, p={result.p_value:.4g}")

    print("\nper-problem ranks of the last score row:", rank_by_mean(scores[-1]))

    print("\nrank-sum: A vs C")
    p = wilcoxon_rank_sum(runs["A"], runs["C"])
    direction = float(np.median(runs["C"]) - np.median(runs["A"]))
    print(f"  approximate p = {p:.6g} -> "
          f"{win_tie_loss(p, direction)} for A at alpha 0.05")

    small_a, small_b = runs["A"][:5], runs["C"][:5]
    print("\nsmall-sample cross-check (n=m=5)")
    print(f"  approximation {wilcoxon_rank_sum(small_a, small_b):.6g}")
    print(f"  exact         {wilcoxon_rank_sum_exact(small_a, small_b):.6g}")


if __name__ == "__main__":
    main()
