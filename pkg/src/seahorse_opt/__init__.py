"""Sea horse optimization toolkit: SHO, mSHO, benchmark problems, statistics."""

from .engine import (
    AlgoParams,
    Bounds,
    Candidate,
    ConfigurationError,
    Evaluation,
    Population,
    ProblemSpec,
    RunTrace,
    compare_candidates,
    init_population,
    make_rng,
    ordering_key,
    repair_clamp,
    repair_random_reinit,
    scalar_fitness,
    select_elite,
)
from .sho import (
    breeding_phase,
    brownian_move,
    levy_sigma,
    levy_step,
    movement_phase,
    predation_alpha,
    predation_phase,
    run_phased_optimizer,
    run_sho,
    spiral_move,
)
from .msho import (
    NeighborSelection,
    flight_length_at,
    msho_movement_phase,
    pick_conscious_neighbors,
    run_msho,
)
from .stats import (
    DescriptiveStats,
    FriedmanResult,
    SampleSet,
    descriptive_stats,
    friedman_mean_rank,
    friedman_test,
    rank_by_mean,
    wilcoxon_rank_sum,
    wilcoxon_rank_sum_exact,
    wilcoxon_signed_rank,
    win_tie_loss,
)
from .harness import (
    ALGORITHMS,
    AlgorithmSpec,
    CellFailure,
    ComparisonReport,
    ExperimentConfig,
    ExperimentResult,
    ProblemRef,
    RunRecord,
    build_report,
    emit_outputs,
    export_convergence,
    export_discrepancy_ledger,
    export_report,
    load_config,
    parse_config,
    render_report_text,
    run_experiment,
    serialize_config,
)
from . import problems

__version__ = "0.1.0"
