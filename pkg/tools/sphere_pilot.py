"""One-time oracle: distribution of SHO final costs on the 10-D sphere.

Thirty seeded runs at the default budget (pop 30, 1000 iterations).
The spread calibrates the frozen regression threshold used by the test
suite to catch gross convergence regressions without flaking on seed
luck: the frozen bound is the worst pilot cost with two orders of
magnitude of headroom.

Run from the repository root:  python3 tools/sphere_pilot.py
"""

import numpy as np

from seahorse_opt import run_sho
from seahorse_opt.problems import get_problem_spec


def main() -> None:
    spec = get_problem_spec("sphere", 10)
    costs = []
    for seed in range(30):
        trace = run_sho(spec, seed=seed)
        costs.append(trace.final_fitness)
        print(f"seed {seed:2d}: {costs[-1]:.3e}")
    costs = np.array(costs)
    print(f"\nmin    {costs.min():.3e}")
    print(f"median {np.median(costs):.3e}")
    print(f"95th   {np.percentile(costs, 95):.3e}")
    print(f"max    {costs.max():.3e}")
    print(f"suggested frozen threshold (100x max): {100 * costs.max():.3e}")


if __name__ == "__main__":
    main()
