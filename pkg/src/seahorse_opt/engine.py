"""Shared machinery for the population optimizers.

Holds the pieces both optimizers are built from: bounds and repairs,
candidate evaluation, constraint handling, elite bookkeeping, and the
seeded RNG contract. One `numpy.random.Generator` per run drives every
stochastic draw; phases visit members in index order, dimensions in
index order, so a run is a pure function of (problem, params, seed).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Sequence

import numpy as np

# Scalar fitness assigned to infeasible candidates for reporting/sorting.
# Ordering decisions use key tuples, never this constant alone.
INFEASIBLE_OFFSET = 1e100

FEASIBILITY_TOL = 1e-6


class ConfigurationError(ValueError):
    """Invalid problem or parameter configuration."""


@dataclass(frozen=True)
class Bounds:
    """Per-dimension box bounds, lower[j] <= upper[j]."""

    lower: np.ndarray
    upper: np.ndarray

    def __post_init__(self):
        lower = np.asarray(self.lower, dtype=float)
        upper = np.asarray(self.upper, dtype=float)
        object.__setattr__(self, "lower", lower)
        object.__setattr__(self, "upper", upper)
        if lower.ndim != 1 or lower.shape != upper.shape or lower.size < 1:
            raise ConfigurationError("bounds must be 1-D vectors of equal length >= 1")
        if np.any(lower > upper):
            raise ConfigurationError("bounds must satisfy lower <= upper")

    @property
    def dim(self) -> int:
        return self.lower.size

    def contains(self, x: np.ndarray, atol: float = 0.0) -> bool:
        return bool(np.all(x >= self.lower - atol) and np.all(x <= self.upper + atol))


@dataclass(frozen=True)
class Evaluation:
    """Result of one objective call: raw cost plus the constraint report."""

    objective: float
    g: tuple[float, ...]
    feasible: bool
    violation_sum: float


@dataclass(frozen=True)
class ProblemSpec:
    """A minimization problem: objective, optional g_i(x) <= 0 constraints, box bounds.

    `constraints` returns one real per g_i (empty tuple when unconstrained).
    `fixture` is an optional (position, cost, source) triple used for audits.
    """

    name: str
    bounds: Bounds
    objective: Callable[[np.ndarray], float]
    constraints: Callable[[np.ndarray], Sequence[float]] | None = None
    fixture: tuple[np.ndarray, float, str] | None = None
    feasibility_tol: float = FEASIBILITY_TOL

    @property
    def dim(self) -> int:
        return self.bounds.dim

    def evaluate(self, x: np.ndarray) -> Evaluation:
        x = np.asarray(x, dtype=float)
        if x.shape != (self.dim,):
            raise ConfigurationError(
                f"{self.name}: expected {self.dim} variables, got shape {x.shape}"
            )
        obj = float(self.objective(x))
        if self.constraints is None:
            return Evaluation(obj, (), True, 0.0)
        g = tuple(self.constraints(x))
        viol = 0.0
        for gi in g:
            if gi > 0.0:
                viol += gi
        return Evaluation(obj, g, viol <= self.feasibility_tol, viol)


@dataclass(frozen=True)
class AlgoParams:
    """Algorithm constants shared by SHO and mSHO.

    levy_lambda=None draws a fresh lambda uniformly in (0, 2] per Levy step;
    a float fixes it. fl_decay="constant" keeps flight_length as-is,
    "linear" decays it from its value to half of it over the run.
    compat_printed_equations switches predation/spiral to the equation
    forms exactly as printed (for sensitivity studies only).
    """

    pop: int = 30
    max_iter: int = 1000
    u: float = 0.05
    v: float = 0.05
    s: float = 0.01
    l: float = 0.05
    levy_lambda: float | None = None
    predation_threshold: float = 0.1
    flight_length: float = 2.0
    fl_decay: str = "constant"
    neighborhood_k: int | None = None
    constraint_mode: str = "feasibility-rules"
    penalty_coefficient: float = 1e6
    compat_printed_equations: bool = False
    msho_global_with_base: bool = False

    def __post_init__(self):
        if self.pop < 4 or self.pop % 2 != 0:
            raise ConfigurationError("pop must be even and >= 4")
        if self.max_iter < 1:
            raise ConfigurationError("max_iter must be >= 1")
        if not 0.0 <= self.predation_threshold <= 1.0:
            raise ConfigurationError("predation_threshold must be in [0, 1]")
        if self.levy_lambda is not None and not 0.0 < self.levy_lambda <= 2.0:
            raise ConfigurationError("levy_lambda must be in (0, 2]")
        if self.fl_decay not in ("constant", "linear"):
            raise ConfigurationError("fl_decay must be 'constant' or 'linear'")
        if self.constraint_mode not in ("feasibility-rules", "static-penalty"):
            raise ConfigurationError(
                "constraint_mode must be 'feasibility-rules' or 'static-penalty'"
            )

    def resolved_k(self) -> int:
        if self.neighborhood_k is not None:
            return self.neighborhood_k
        return max(2, self.pop // 5)


def make_rng(seed: int) -> np.random.Generator:
    """The one RNG stream a run draws from."""
    return np.random.default_rng(seed)


def ordering_key(ev: Evaluation, params: AlgoParams) -> tuple[float, float]:
    """Sort key implementing the candidate ordering; lower is better.

    Feasibility rules: feasible (0, objective) beats infeasible
    (1, violation_sum). Static penalty: single penalized scalar.
    """
    if params.constraint_mode == "static-penalty":
        return (0.0, ev.objective + params.penalty_coefficient * ev.violation_sum)
    if ev.feasible:
        return (0.0, ev.objective)
    return (1.0, ev.violation_sum)


def scalar_fitness(ev: Evaluation, params: AlgoParams) -> float:
    """Single-number fitness for traces and reports (ordering uses keys)."""
    if params.constraint_mode == "static-penalty":
        return ev.objective + params.penalty_coefficient * ev.violation_sum
    if ev.feasible:
        return ev.objective
    return INFEASIBLE_OFFSET + ev.violation_sum


@dataclass
class Candidate:
    """One sea horse: current position plus its personal-best memory."""

    position: np.ndarray
    evaluation: Evaluation
    key: tuple[float, float]
    memory: np.ndarray
    memory_key: tuple[float, float]

    @classmethod
    def fresh(cls, x: np.ndarray, spec: ProblemSpec, params: AlgoParams) -> "Candidate":
        ev = spec.evaluate(x)
        key = ordering_key(ev, params)
        return cls(x, ev, key, x.copy(), key)

    def move_to(self, x: np.ndarray, ev: Evaluation, params: AlgoParams) -> None:
        """Adopt a new evaluated position; memory updates greedily."""
        self.position = x
        self.evaluation = ev
        self.key = ordering_key(ev, params)
        if self.key < self.memory_key:
            self.memory = x.copy()
            self.memory_key = self.key

    def observe(self, x: np.ndarray, ev: Evaluation, params: AlgoParams) -> tuple[float, float]:
        """Record an evaluation the candidate made without adopting it."""
        key = ordering_key(ev, params)
        if key < self.memory_key:
            self.memory = x.copy()
            self.memory_key = key
        return key

    def snapshot(self) -> "Candidate":
        return Candidate(
            self.position.copy(),
            self.evaluation,
            self.key,
            self.position.copy(),
            self.key,
        )


def compare_candidates(a: Candidate, b: Candidate,
                       params: AlgoParams | None = None) -> int:
    """Three-way ordering: -1 if a is better, 1 if b is better, 0 on a tie."""
    p = params if params is not None else AlgoParams()
    ka = ordering_key(a.evaluation, p)
    kb = ordering_key(b.evaluation, p)
    if ka < kb:
        return -1
    if ka > kb:
        return 1
    return 0


@dataclass
class Population:
    """Members plus the best-so-far elite snapshot and best memory ever seen."""

    members: list[Candidate]
    elite: Candidate
    gbest_memory: np.ndarray
    gbest_key: tuple[float, float]
    evaluations: int = 0

    def record_evaluation(self, cand_position: np.ndarray, ev: Evaluation,
                          params: AlgoParams) -> None:
        """Track best-so-far against every objective call."""
        self.evaluations += 1
        key = ordering_key(ev, params)
        if key < self.elite.key:
            self.elite = Candidate(cand_position.copy(), ev, key,
                                   cand_position.copy(), key)
        if key < self.gbest_key:
            self.gbest_memory = cand_position.copy()
            self.gbest_key = key


def select_elite(members: Sequence[Candidate]) -> Candidate:
    """Member minimizing the ordering; ties broken by lowest index."""
    if not members:
        raise ConfigurationError("cannot select an elite from an empty population")
    best = members[0]
    for cand in members[1:]:
        if cand.key < best.key:
            best = cand
    return best


def init_population(spec: ProblemSpec, params: AlgoParams,
                    rng: np.random.Generator) -> Population:
    """Uniform initialization x = rand*(UB-LB) + LB, everyone evaluated."""
    lo, hi = spec.bounds.lower, spec.bounds.upper
    positions = rng.random((params.pop, spec.dim)) * (hi - lo) + lo
    members = [Candidate.fresh(positions[i], spec, params) for i in range(params.pop)]
    elite = select_elite(members).snapshot()
    pop = Population(members, elite, elite.position.copy(), elite.key,
                     evaluations=params.pop)
    return pop


def repair_clamp(x: np.ndarray, bounds: Bounds) -> np.ndarray:
    """Project each component into [lower, upper]."""
    return np.clip(x, bounds.lower, bounds.upper)


def repair_random_reinit(x: np.ndarray, bounds: Bounds,
                         rng: np.random.Generator) -> np.ndarray:
    """Redraw only the out-of-range components uniformly in their bounds.

    Draws are consumed in dimension order, one per offending component.
    """
    out = x.copy()
    lo, hi = bounds.lower, bounds.upper
    for j in range(bounds.dim):
        if out[j] < lo[j] or out[j] > hi[j]:
            out[j] = rng.random() * (hi[j] - lo[j]) + lo[j]
    return out


@dataclass
class RunTrace:
    """Everything one optimizer run produces."""

    algorithm: str
    problem: str
    seed: int
    best_history: np.ndarray          # best-so-far scalar fitness, one per iteration
    best: Candidate                   # final elite snapshot
    evaluations: int
    init_evaluations: int
    phase_evaluations: dict[str, list[int]] = field(default_factory=dict)

    @property
    def final_fitness(self) -> float:
        return float(self.best_history[-1])
