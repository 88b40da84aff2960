"""One-time oracle: reachable speed-reducer optimum under the
implemented formulation and variable box.

Multistart SLSQP from random interior points plus the box midpoint.
The published best row sits a rounding hair outside the feasible set
(and below the printed x5 lower bound), so the reachable feasible
optimum is strictly above the published cost; this script pins that
floor for the acceptance-test analysis.

Run from the repository root:  python3 tools/reducer_oracle.py
"""

import numpy as np
from scipy.optimize import minimize

from seahorse_opt.problems import get_problem_spec


def main() -> None:
    spec = get_problem_spec("speed-reducer")
    lo, hi = np.asarray(spec.bounds.lower), np.asarray(spec.bounds.upper)
    rng = np.random.default_rng(20240502)

    n_constraints = len(spec.constraints(lo))
    constraints = [
        {"type": "ineq", "fun": lambda x, j=j: -spec.constraints(x)[j]}
        for j in range(n_constraints)
    ]
    starts = [0.5 * (lo + hi)]
    starts += list(rng.random((200, spec.dim)) * (hi - lo) + lo)

    best_cost, best_x = np.inf, None
    for x0 in starts:
        res = minimize(
            spec.objective,
            x0,
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

    ev = spec.evaluate(best_x)
    print(f"reachable optimum: {best_cost:.6f}")
    print(f"at x:              {np.array2string(best_x, precision=8)}")
    print(f"max violation:     {max(ev.g):.3g}")
    active = [j for j, g in enumerate(ev.g) if g > -1e-6]
    print(f"active constraints (0-based): {active}")


if __name__ == "__main__":
    main()
