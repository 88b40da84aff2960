"""One-time oracle: reachable pressure-vessel optimum under the
implemented formulation.

Draws 10^6 uniform samples over the variable box, keeps the best
feasible ones, and refines the leaders with SLSQP under the same bounds
and constraints. The resulting cost is frozen into the acceptance tests
as the reference best; the search target is "within 0.5% of this value".

Run from the repository root:  python3 tools/pv_oracle.py
"""

import numpy as np
from scipy.optimize import minimize

from seahorse_opt.problems import get_problem_spec


def main() -> None:
    spec = get_problem_spec("pressure-vessel")
    lo, hi = np.asarray(spec.bounds.lower), np.asarray(spec.bounds.upper)
    rng = np.random.default_rng(20240501)

    samples = rng.random((1_000_000, spec.dim)) * (hi - lo) + lo
    evals = [spec.evaluate(x) for x in samples]
    feasible = [(e.objective, i) for i, e in enumerate(evals) if e.feasible]
    feasible.sort()
    print(f"feasible samples: {len(feasible)} / {len(samples)}")
    print(f"best sampled cost: {feasible[0][0]:.6f}")

    constraints = [
        {"type": "ineq", "fun": lambda x, j=j: -spec.constraints(x)[j]}
        for j in range(4)
    ]
    best_cost, best_x = np.inf, None
    for _, idx in feasible[:50]:
        res = minimize(
            spec.objective,
            samples[idx],
            method="SLSQP",
            bounds=list(zip(lo, hi)),
            constraints=constraints,
            options={"maxiter": 500, "ftol": 1e-12},
        )
        if not res.success:
            continue
        ev = spec.evaluate(res.x)
        if ev.feasible and ev.objective < best_cost:
            best_cost, best_x = ev.objective, res.x

    print(f"refined best cost: {best_cost:.6f}")
    print(f"refined best x:    {np.array2string(best_x, precision=8)}")
    print(f"0.5% acceptance threshold: {best_cost * 1.005:.6f}")


if __name__ == "__main__":
    main()
