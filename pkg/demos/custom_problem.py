"""Plug a user-defined constrained problem into the registry and solve it.

The toy design: pick box dimensions (l, w, h) minimizing surface area
subject to a minimum volume. Registration makes the problem visible to
everything else — the optimizers, the harness, and the CLI config format.
"""

import numpy as np

from seahorse_opt import AlgoParams, run_msho
from seahorse_opt.engine import Bounds, ProblemSpec
from seahorse_opt.problems import get_problem_spec, register


def surface_area(x: np.ndarray) -> float:
    l, w, h = x.tolist()
    return 2.0 * (l * w + l * h + w * h)


def volume_floor(x: np.ndarray) -> tuple[float, ...]:
    l, w, h = x.tolist()
    return (1.0 - l * w * h,)  # volume >= 1


def make_box_spec(dim: int | None = None) -> ProblemSpec:
    # the factory receives the requested dimension; this design is fixed 3-D
    if dim not in (None, 3):
        raise ValueError("box-design is three-dimensional")
    return ProblemSpec(
        name="box-design",
        bounds=Bounds(np.full(3, 0.1), np.full(3, 5.0)),
        objective=surface_area,
        constraints=volume_floor,
    )


def main() -> None:
    register("box-design", make_box_spec)
    spec = get_problem_spec("box-design")

    trace = run_msho(spec, params=AlgoParams(pop=20, max_iter=200), seed=3)
    best = trace.best
    print(f"best design: {[round(float(v), 5) for v in best.position]}")
    print(f"surface area {best.evaluation.objective:.6f} "
          f"(cube of volume 1 gives 6.0)")
    print(f"volume slack g = {best.evaluation.g[0]:.2e}, "
          f"feasible={best.evaluation.feasible}")


if __name__ == "__main__":
    main()
