"""Run one seeded optimization and watch the best-so-far curve.

Usage:
    python3 demos/single_run_convergence.py [problem] [seed]

Defaults to the 10-D rastrigin surrogate with seed 0. Any registered
problem name works; engineering designs ignore the dimension.
"""

import sys

from seahorse_opt import AlgoParams, run_msho, run_sho
from seahorse_opt.problems import get_problem_spec, list_problems


def main() -> None:
    name = sys.argv[1] if len(sys.argv) > 1 else "rastrigin"
    seed = int(sys.argv[2]) if len(sys.argv) > 2 else 0

    groups = list_problems()
    dim = 10 if name in groups["surrogate"] else None
    spec = get_problem_spec(name, dim)
    params = AlgoParams(pop=30, max_iter=300)

    print(f"problem {spec.name} ({spec.dim}-D), pop={params.pop}, "
          f"{params.max_iter} iterations, seed {seed}\n")
    print(f"{'iteration':>9}  {'sho best':>14}  {'msho best':>14}")

    sho = run_sho(spec, params=params, seed=seed)
    msho = run_msho(spec, params=params, seed=seed)
    for t in (1, 5, 10, 25, 50, 100, 200, params.max_iter):
        print(f"{t:>9}  {sho.best_history[t - 1]:>14.6g}  "
              f"{msho.best_history[t - 1]:>14.6g}")

    print(f"\nsho  spent {sho.evaluations} evaluations; "
          f"msho spent {msho.evaluations} (its movement phase may re-try "
          f"each member once)")
    best = msho.best
    rounded = [round(float(v), 6) for v in best.position]
    print(f"msho best position: {rounded}")
    print(f"objective {best.evaluation.objective:.8g}, "
          f"feasible={best.evaluation.feasible}")


if __name__ == "__main__":
    main()
