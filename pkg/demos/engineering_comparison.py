"""Compare both algorithms on two engineering designs, paired seeds.

Runs a small grid (10 runs, reduced budget so the demo finishes in a few
seconds), then prints the per-problem summary the full harness would put
in its report: min / median / std, rank by mean, and the rank-sum verdict
of each algorithm against the msho reference.
"""

import statistics

from seahorse_opt.engine import AlgoParams
from seahorse_opt.harness import (
    AlgorithmSpec,
    ExperimentConfig,
    ProblemRef,
    run_experiment,
)


def main() -> None:
    params = AlgoParams(pop=20, max_iter=150)
    config = ExperimentConfig(
        algorithms=(
            AlgorithmSpec(name="sho", label="sho", params=params),
            AlgorithmSpec(name="msho", label="msho", params=params),
        ),
        problems=(ProblemRef("welded-beam"), ProblemRef("three-bar-truss")),
        runs=10,
        base_seed=42,
        emit_convergence=False,
        emit_report=False,
        emit_discrepancy_ledger=False,
    )
    result = run_experiment(config)

    for problem in result.report.problems:
        print(f"\n{problem}")
        costs = {
            label: [
                rec.cost
                for rec in result.records
                if rec.algorithm == label and rec.problem == problem
            ]
            for label in result.report.algorithms
        }
        for label, sample in costs.items():
            print(f"  {label:5s} min {min(sample):12.6g}  "
                  f"median {statistics.median(sample):12.6g}  "
                  f"std {statistics.stdev(sample):10.4g}")
        for label, cell in result.report.pairwise[problem].items():
            print(f"  {label} vs msho: p={cell['p_value']:.4g} "
                  f"-> {cell['verdict']} for msho")

    best = result.report.best["welded-beam"]["msho"]
    print(f"\nbest welded-beam design found by msho (seed {best['seed']}):")
    print(f"  x = {[round(v, 6) for v in best['position']]}")
    print(f"  cost {best['cost']:.6f}, feasible={best['feasible']}")


if __name__ == "__main__":
    main()
