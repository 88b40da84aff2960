"""Configuration-driven experiment orchestration.

Parses a JSON experiment config, runs every (algorithm, problem, run)
cell with per-run seeds derived as base_seed + run_index, aggregates the
final costs through the statistics suite, and emits a convergence CSV, a
machine-readable report with a plain-text companion table, and the
fixture discrepancy ledger. Execution is deterministic for a given
config: independent cells may run in worker processes, but results are
joined in (algorithm, problem, run) order and are identical to a serial
run. Wall-clock timings are recorded per run but kept out of the report
files so repeated runs of one config produce byte-identical outputs.
"""

from __future__ import annotations

import difflib
import json
import math
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, fields, replace
from pathlib import Path
from statistics import median
from typing import Callable

from .engine import AlgoParams, ConfigurationError, RunTrace, scalar_fitness
from .msho import run_msho
from .problems import discrepancy_ledger, get_problem_spec
from .sho import run_sho
from .stats import (
    DescriptiveStats,
    FriedmanResult,
    descriptive_stats,
    friedman_test,
    rank_by_mean,
    wilcoxon_rank_sum,
    win_tie_loss,
)

__all__ = [
    "ALGORITHMS",
    "AlgorithmSpec",
    "ProblemRef",
    "ExperimentConfig",
    "RunRecord",
    "CellFailure",
    "ComparisonReport",
    "ExperimentResult",
    "parse_config",
    "load_config",
    "serialize_config",
    "run_experiment",
    "build_report",
    "render_report_text",
    "export_convergence",
    "export_report",
    "export_discrepancy_ledger",
    "emit_outputs",
]

ALGORITHMS: dict[str, Callable] = {"sho": run_sho, "msho": run_msho}

_CONVERGENCE_HEADER = "algorithm,problem,run,iteration,best_fitness"
_CONVERGENCE_FORMAT = "%.10e"


@dataclass(frozen=True)
class AlgorithmSpec:
    """One algorithm entry: registry name, report label, resolved parameters."""

    name: str
    label: str
    params: AlgoParams


@dataclass(frozen=True)
class ProblemRef:
    name: str
    dim: int | None = None

    @property
    def display(self) -> str:
        return self.name if self.dim is None else f"{self.name}:{self.dim}"


@dataclass(frozen=True)
class ExperimentConfig:
    algorithms: tuple[AlgorithmSpec, ...]
    problems: tuple[ProblemRef, ...]
    runs: int = 30
    base_seed: int = 0
    output_dir: str = "results"
    emit_convergence: bool = True
    emit_report: bool = True
    emit_discrepancy_ledger: bool = True
    convergence_stride: int = 1
    reference: str = "msho"

    def __post_init__(self) -> None:
        # Re-validated here so replace()-style overrides stay in range.
        if not self.algorithms:
            raise ConfigurationError("config.algorithms: must be non-empty")
        if not self.problems:
            raise ConfigurationError("config.problems: must be non-empty")
        if self.runs < 1:
            raise ConfigurationError("config.runs: must be >= 1")
        if self.base_seed < 0:
            raise ConfigurationError("config.base_seed: must be >= 0")
        if self.convergence_stride < 1:
            raise ConfigurationError("config.convergence_stride: must be >= 1")
        labels = [a.label for a in self.algorithms]
        if self.reference not in labels:
            raise ConfigurationError(
                f"config.reference: '{self.reference}' is not an algorithm label"
            )


@dataclass(frozen=True)
class RunRecord:
    """Outcome of one (algorithm, problem, run) cell."""

    algorithm: str
    problem: str
    run_index: int
    seed: int
    position: tuple[float, ...]
    cost: float
    objective: float
    feasible: bool
    violation_sum: float
    evaluations: int
    wall_time: float
    logged_iterations: tuple[int, ...]
    convergence: tuple[float, ...]


@dataclass(frozen=True)
class CellFailure:
    algorithm: str
    problem: str
    run_index: int
    seed: int
    message: str


@dataclass(frozen=True)
class ComparisonReport:
    """Per-problem descriptive stats and ranks, Friedman mean ranks, and
    pairwise rank-sum p-values against the reference algorithm."""

    algorithms: tuple[str, ...]
    problems: tuple[str, ...]
    reference: str
    stats: dict
    ranks: dict
    best: dict
    friedman: FriedmanResult | None
    pairwise: dict


@dataclass(frozen=True)
class ExperimentResult:
    config: ExperimentConfig
    records: tuple[RunRecord, ...]
    failures: tuple[CellFailure, ...]
    report: ComparisonReport


def _nearest_note(name: str, options) -> str:
    close = difflib.get_close_matches(str(name), sorted(options), n=1)
    return f" (did you mean '{close[0]}'?)" if close else ""


def _require_int(value, path: str, minimum: int | None = None) -> int:
    if not isinstance(value, int) or isinstance(value, bool):
        raise ConfigurationError(f"{path}: expected an integer, got {value!r}")
    if minimum is not None and value < minimum:
        raise ConfigurationError(f"{path}: must be >= {minimum}, got {value}")
    return value


def _require_str(value, path: str) -> str:
    if not isinstance(value, str) or not value:
        raise ConfigurationError(f"{path}: expected a non-empty string, got {value!r}")
    if "," in value:
        raise ConfigurationError(f"{path}: must not contain ',' (used in CSV output)")
    return value


def _check_keys(entry: dict, allowed: set[str], path: str) -> None:
    for key in entry:
        if key not in allowed:
            raise ConfigurationError(
                f"{path}.{key}: unknown field{_nearest_note(key, allowed)}"
            )


def _parse_algorithm(entry, path: str) -> AlgorithmSpec:
    if isinstance(entry, str):
        entry = {"name": entry}
    if not isinstance(entry, dict):
        raise ConfigurationError(f"{path}: expected a name or an object, got {entry!r}")
    _check_keys(entry, {"name", "label", "params"}, path)
    if "name" not in entry:
        raise ConfigurationError(f"{path}.name: required")
    name = _require_str(entry["name"], f"{path}.name")
    if name not in ALGORITHMS:
        raise ConfigurationError(
            f"{path}.name: unknown algorithm '{name}'"
            f"{_nearest_note(name, ALGORITHMS)}"
        )
    overrides = entry.get("params", {})
    if not isinstance(overrides, dict):
        raise ConfigurationError(f"{path}.params: expected an object")
    param_names = {f.name for f in fields(AlgoParams)}
    for key in overrides:
        if key not in param_names:
            raise ConfigurationError(
                f"{path}.params.{key}: unknown parameter"
                f"{_nearest_note(key, param_names)}"
            )
    try:
        params = replace(AlgoParams(), **overrides)
    except (ConfigurationError, TypeError, ValueError) as exc:
        raise ConfigurationError(f"{path}.params: {exc}") from exc
    label = entry.get("label", name)
    return AlgorithmSpec(name=name, label=_require_str(label, f"{path}.label"), params=params)


def _parse_problem(entry, path: str) -> ProblemRef:
    if isinstance(entry, str):
        entry = {"name": entry}
    if not isinstance(entry, dict):
        raise ConfigurationError(f"{path}: expected a name or an object, got {entry!r}")
    _check_keys(entry, {"name", "dim"}, path)
    if "name" not in entry:
        raise ConfigurationError(f"{path}.name: required")
    name = _require_str(entry["name"], f"{path}.name")
    dim = entry.get("dim")
    if dim is not None:
        dim = _require_int(dim, f"{path}.dim", minimum=1)
    try:
        get_problem_spec(name, dim)
    except ConfigurationError as exc:
        raise ConfigurationError(f"{path}: {exc}") from exc
    return ProblemRef(name=name, dim=dim)


def parse_config(text: str) -> ExperimentConfig:
    """Parse and validate a JSON experiment config, applying defaults.

    Errors name the offending field path and suggest the nearest
    registered name for unknown algorithms, problems, and keys. The
    result round-trips losslessly through serialize_config.
    """
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ConfigurationError(f"not valid JSON: {exc}") from exc
    if not isinstance(raw, dict):
        raise ConfigurationError("config root must be a JSON object")
    top = {
        "algorithms", "problems", "runs", "base_seed", "output_dir",
        "emit", "convergence_stride", "reference",
    }
    _check_keys(raw, top, "config")

    entries = raw.get("algorithms")
    if not isinstance(entries, list) or not entries:
        raise ConfigurationError("config.algorithms: must be a non-empty list")
    algorithms = tuple(
        _parse_algorithm(entry, f"config.algorithms[{i}]")
        for i, entry in enumerate(entries)
    )
    labels = [a.label for a in algorithms]
    if len(set(labels)) != len(labels):
        raise ConfigurationError(
            "config.algorithms: labels must be unique; "
            "set an explicit 'label' on repeated entries"
        )

    entries = raw.get("problems")
    if not isinstance(entries, list) or not entries:
        raise ConfigurationError("config.problems: must be a non-empty list")
    problems = tuple(
        _parse_problem(entry, f"config.problems[{i}]")
        for i, entry in enumerate(entries)
    )
    displays = [p.display for p in problems]
    if len(set(displays)) != len(displays):
        raise ConfigurationError("config.problems: entries must be unique")

    runs = _require_int(raw.get("runs", 30), "config.runs", minimum=1)
    base_seed = _require_int(raw.get("base_seed", 0), "config.base_seed", minimum=0)
    output_dir = raw.get("output_dir", "results")
    if not isinstance(output_dir, str) or not output_dir:
        raise ConfigurationError("config.output_dir: expected a non-empty string")
    stride = _require_int(
        raw.get("convergence_stride", 1), "config.convergence_stride", minimum=1
    )

    emit = raw.get("emit", {})
    if not isinstance(emit, dict):
        raise ConfigurationError("config.emit: expected an object of boolean flags")
    _check_keys(emit, {"convergence", "report", "discrepancy_ledger"}, "config.emit")
    flags = {}
    for key in ("convergence", "report", "discrepancy_ledger"):
        value = emit.get(key, True)
        if not isinstance(value, bool):
            raise ConfigurationError(f"config.emit.{key}: expected true or false")
        flags[key] = value

    reference = raw.get("reference")
    if reference is None:
        reference = "msho" if "msho" in labels else labels[0]
    elif reference not in labels:
        raise ConfigurationError(
            f"config.reference: '{reference}' is not an algorithm label"
            f"{_nearest_note(reference, labels)}"
        )

    return ExperimentConfig(
        algorithms=algorithms,
        problems=problems,
        runs=runs,
        base_seed=base_seed,
        output_dir=output_dir,
        emit_convergence=flags["convergence"],
        emit_report=flags["report"],
        emit_discrepancy_ledger=flags["discrepancy_ledger"],
        convergence_stride=stride,
        reference=reference,
    )


def load_config(path) -> ExperimentConfig:
    return parse_config(Path(path).read_text())


def serialize_config(config: ExperimentConfig) -> str:
    """Canonical JSON for a config; parse(serialize(c)) == c."""
    payload = {
        "algorithms": [
            {"name": a.name, "label": a.label, "params": asdict(a.params)}
            for a in config.algorithms
        ],
        "problems": [
            {"name": p.name} if p.dim is None else {"name": p.name, "dim": p.dim}
            for p in config.problems
        ],
        "runs": config.runs,
        "base_seed": config.base_seed,
        "output_dir": config.output_dir,
        "emit": {
            "convergence": config.emit_convergence,
            "report": config.emit_report,
            "discrepancy_ledger": config.emit_discrepancy_ledger,
        },
        "convergence_stride": config.convergence_stride,
        "reference": config.reference,
    }
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"


def _logged_iterations(total: int, stride: int) -> list[int]:
    logged = list(range(stride, total + 1, stride))
    if not logged or logged[-1] != total:
        logged.append(total)
    return logged


def _run_cell(args) -> RunRecord:
    algo_name, params, label, problem_name, dim, display, run_index, seed, stride = args
    spec = get_problem_spec(problem_name, dim)
    start = time.perf_counter()
    trace: RunTrace = ALGORITHMS[algo_name](spec, params=params, seed=seed)
    elapsed = time.perf_counter() - start
    logged = _logged_iterations(len(trace.best_history), stride)
    best = trace.best
    return RunRecord(
        algorithm=label,
        problem=display,
        run_index=run_index,
        seed=seed,
        position=tuple(float(v) for v in best.position),
        cost=float(scalar_fitness(best.evaluation, params)),
        objective=float(best.evaluation.objective),
        feasible=bool(best.evaluation.feasible),
        violation_sum=float(best.evaluation.violation_sum),
        evaluations=int(trace.evaluations),
        wall_time=elapsed,
        logged_iterations=tuple(logged),
        convergence=tuple(float(trace.best_history[i - 1]) for i in logged),
    )


def _run_cell_safe(args) -> RunRecord | CellFailure:
    try:
        return _run_cell(args)
    except Exception as exc:
        # One bad cell must not sink the grid; the failure is reported.
        _, _, label, _, _, display, run_index, seed, _ = args
        return CellFailure(
            algorithm=label,
            problem=display,
            run_index=run_index,
            seed=seed,
            message=f"{type(exc).__name__}: {exc}",
        )


def run_experiment(config: ExperimentConfig, threads: int = 1) -> ExperimentResult:
    """Run the full (algorithm x problem x run) grid and build the report.

    Per-run seed = base_seed + run_index, so paired runs of different
    algorithms share seeds. With threads > 1 cells execute in worker
    processes; the join order is fixed, so results match a serial run.
    """
    cells = [
        (
            algo.name, algo.params, algo.label,
            prob.name, prob.dim, prob.display,
            run, config.base_seed + run, config.convergence_stride,
        )
        for algo in config.algorithms
        for prob in config.problems
        for run in range(config.runs)
    ]
    if threads > 1:
        with ProcessPoolExecutor(max_workers=threads) as pool:
            outcomes = list(pool.map(_run_cell_safe, cells))
    else:
        outcomes = [_run_cell_safe(cell) for cell in cells]
    records = tuple(o for o in outcomes if isinstance(o, RunRecord))
    failures = tuple(o for o in outcomes if isinstance(o, CellFailure))
    report = build_report(records, config)
    return ExperimentResult(
        config=config, records=records, failures=failures, report=report
    )


def _cell_stats(costs: list[float]) -> DescriptiveStats:
    # A single-run cell still has min/max/mean; std needs two runs.
    if len(costs) >= 2:
        return descriptive_stats(costs)
    value = float(costs[0])
    return DescriptiveStats(min=value, max=value, mean=value, std=math.nan)


def build_report(records, config: ExperimentConfig) -> ComparisonReport:
    """Aggregate run records into the comparison report."""
    labels = [a.label for a in config.algorithms]
    displays = [p.display for p in config.problems]
    by_cell: dict[tuple[str, str], list[RunRecord]] = {}
    for rec in records:
        by_cell.setdefault((rec.problem, rec.algorithm), []).append(rec)

    stats: dict = {}
    ranks: dict = {}
    best: dict = {}
    for problem in displays:
        per_stats: dict = {}
        per_best: dict = {}
        for label in labels:
            cell = by_cell.get((problem, label))
            if not cell:
                continue
            costs = [r.cost for r in cell]
            per_stats[label] = _cell_stats(costs)
            champion = min(cell, key=lambda r: r.cost)
            per_best[label] = {
                "cost": champion.cost,
                "objective": champion.objective,
                "feasible": champion.feasible,
                "violation_sum": champion.violation_sum,
                "position": list(champion.position),
                "run_index": champion.run_index,
                "seed": champion.seed,
            }
        stats[problem] = per_stats
        best[problem] = per_best
        present = [label for label in labels if label in per_stats]
        if present:
            rank_vector = rank_by_mean([per_stats[label].mean for label in present])
            ranks[problem] = {
                label: float(rank) for label, rank in zip(present, rank_vector)
            }
        else:
            ranks[problem] = {}

    complete_rows = [
        [ranks[problem][label] for label in labels]
        for problem in displays
        if all(label in ranks[problem] for label in labels)
    ]
    friedman = None
    if complete_rows and len(labels) >= 2:
        friedman = friedman_test(complete_rows)

    pairwise: dict = {}
    reference = config.reference
    for problem in displays:
        row: dict = {}
        ref_cell = by_cell.get((problem, reference))
        if ref_cell:
            ref_costs = [r.cost for r in ref_cell]
            for label in labels:
                if label == reference:
                    continue
                other_cell = by_cell.get((problem, label))
                if not other_cell:
                    continue
                other_costs = [r.cost for r in other_cell]
                p = wilcoxon_rank_sum(ref_costs, other_costs)
                # Minimization: reference wins when the other median is larger.
                direction = median(other_costs) - median(ref_costs)
                row[label] = {"p_value": p, "verdict": win_tie_loss(p, direction)}
        pairwise[problem] = row

    return ComparisonReport(
        algorithms=tuple(labels),
        problems=tuple(displays),
        reference=reference,
        stats=stats,
        ranks=ranks,
        best=best,
        friedman=friedman,
        pairwise=pairwise,
    )


def _json_float(value: float):
    return None if math.isnan(value) else float(value)


def _report_payload(result: ExperimentResult) -> dict:
    report = result.report
    stats = {
        problem: {
            label: {
                "min": s.min, "max": s.max, "mean": s.mean,
                "std": _json_float(s.std),
            }
            for label, s in per.items()
        }
        for problem, per in report.stats.items()
    }
    friedman = None
    if report.friedman is not None:
        friedman = {
            "mean_ranks": dict(zip(report.algorithms, report.friedman.mean_ranks)),
            "statistic": report.friedman.statistic,
            "p_value": report.friedman.p_value,
            "n_problems": report.friedman.n_blocks,
        }
    return {
        "config": json.loads(serialize_config(result.config)),
        "algorithms": list(report.algorithms),
        "problems": list(report.problems),
        "reference": report.reference,
        "stats": stats,
        "ranks": report.ranks,
        "best": report.best,
        "friedman": friedman,
        "pairwise": report.pairwise,
        "failures": [asdict(f) for f in result.failures],
        "discrepancy_ledger": discrepancy_ledger(),
    }


def render_report_text(result: ExperimentResult) -> str:
    """Plain-text table: per-problem Min/Max/Mean/Std/Rank per algorithm,
    Friedman mean ranks, and rank-sum p-values against the reference."""
    report = result.report
    labels = list(report.algorithms)
    width = max(14, max((len(l) for l in labels), default=0) + 2)
    lines: list[str] = []

    def row(metric: str, values: list[str]) -> str:
        return f"  {metric:<6}" + "".join(f"{v:>{width}}" for v in values)

    for problem in report.problems:
        lines.append(f"Problem: {problem}")
        lines.append(row("", labels))
        per = report.stats[problem]
        for metric in ("min", "max", "mean", "std"):
            values = []
            for label in labels:
                s = per.get(label)
                if s is None:
                    values.append("-")
                    continue
                value = getattr(s, metric)
                values.append("-" if value != value else f"{value:.6g}")
            lines.append(row(metric.capitalize(), values))
        rank_row = report.ranks.get(problem, {})
        lines.append(row("Rank", [
            f"{rank_row[l]:.6g}" if l in rank_row else "-" for l in labels
        ]))
        lines.append("")

    if report.friedman is not None:
        values = [f"{r:.6g}" for r in report.friedman.mean_ranks]
        lines.append("Friedman mean rank")
        lines.append(row("", labels))
        lines.append(row("", values))
        lines.append(
            f"  chi-square {report.friedman.statistic:.6g}, "
            f"p {report.friedman.p_value:.6g} "
            f"({report.friedman.n_blocks} problems, "
            f"{report.friedman.k_treatments} algorithms)"
        )
        lines.append("")

    others = [l for l in labels if l != report.reference]
    if others:
        lines.append(f"Wilcoxon rank-sum p-values vs {report.reference}")
        lines.append(row("", others))
        for problem in report.problems:
            cells = []
            for label in others:
                entry = report.pairwise.get(problem, {}).get(label)
                if entry is None:
                    cells.append("-")
                else:
                    cells.append(f"{entry['p_value']:.3g} ({entry['verdict']})")
            lines.append(f"  {problem:<24}" + "".join(f"{c:>{width + 6}}" for c in cells))
        lines.append("")

    ledger = discrepancy_ledger()
    if ledger:
        lines.append("Discrepancy ledger (published rows the audit cannot confirm)")
        for entry in ledger:
            lines.append(
                f"  {entry['problem']}: published {entry['published_cost']:.6g}, "
                f"recomputed {entry['recomputed_cost']:.6g}; {entry['note']}"
            )
        lines.append("")

    if result.failures:
        lines.append("Cell failures")
        for failure in result.failures:
            lines.append(
                f"  {failure.algorithm} x {failure.problem} run {failure.run_index}"
                f" (seed {failure.seed}): {failure.message}"
            )
        lines.append("")

    return "\n".join(lines)


def export_convergence(records, path) -> Path:
    """Write the per-iteration best-so-far series of every record as CSV."""
    path = Path(path)
    lines = [
        f"# best_fitness formatted as {_CONVERGENCE_FORMAT}; "
        "one row per logged iteration",
        _CONVERGENCE_HEADER,
    ]
    for rec in records:
        prefix = f"{rec.algorithm},{rec.problem},{rec.run_index},"
        for iteration, value in zip(rec.logged_iterations, rec.convergence):
            lines.append(prefix + f"{iteration},{_CONVERGENCE_FORMAT % value}")
    path.write_text("\n".join(lines) + "\n")
    return path


def export_report(result: ExperimentResult, json_path, text_path) -> tuple[Path, Path]:
    """Write the structured report (JSON) and its plain-text table."""
    json_path, text_path = Path(json_path), Path(text_path)
    json_path.write_text(
        json.dumps(_report_payload(result), indent=2, sort_keys=True) + "\n"
    )
    text_path.write_text(render_report_text(result))
    return json_path, text_path


def export_discrepancy_ledger(path) -> Path:
    path = Path(path)
    path.write_text(json.dumps(discrepancy_ledger(), indent=2, sort_keys=True) + "\n")
    return path


def emit_outputs(result: ExperimentResult, out_dir=None) -> dict[str, Path]:
    """Write the configured output files; returns {kind: path}."""
    config = result.config
    directory = Path(out_dir if out_dir is not None else config.output_dir)
    directory.mkdir(parents=True, exist_ok=True)
    written: dict[str, Path] = {}
    if config.emit_convergence:
        written["convergence"] = export_convergence(
            result.records, directory / "convergence.csv"
        )
    if config.emit_report:
        json_path, text_path = export_report(
            result, directory / "report.json", directory / "report.txt"
        )
        written["report_json"] = json_path
        written["report_text"] = text_path
    if config.emit_discrepancy_ledger:
        written["discrepancy_ledger"] = export_discrepancy_ledger(
            directory / "discrepancy_ledger.json"
        )
    return written
