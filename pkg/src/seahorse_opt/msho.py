"""Conscious-neighborhood variant: a three-strategy movement phase.

The movement phase of the baseline is replaced wholesale; predation and
breeding are reused unchanged. Each member, visited in index order,
chooses between two attraction strategies by comparing a random
neighbor (c_local, drawn from its k nearest members by Euclidean
distance) against the best member outside that neighborhood (c_global):

1. local step    - when c_local is strictly fitter: move toward
   c_local's memory, out-of-range dimensions randomly reinitialized.
2. global step   - otherwise: jump proportional to the gap to
   c_global's memory (no additive base position), same repair.

The strategy-1/2 trial is evaluated and kept only on strict
improvement; otherwise a third, unconditional step is taken:

3. wander step   - from the best memory ever seen, offset by the gap to
   a random other member's position, clamped to bounds.

So every member costs one or two evaluations per phase. Members see the
phase updates of earlier-visited members (positions, memories, and the
best-memory pointer refresh as the phase progresses).

Per-member draw order: c_local index; r for the strategy step; one
uniform per out-of-range dimension during repair; then, only when the
wander step fires, the partner index and its r.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass

import numpy as np

from .engine import (
    AlgoParams,
    ConfigurationError,
    Population,
    ProblemSpec,
    RunTrace,
    ordering_key,
    repair_clamp,
    repair_random_reinit,
)
from .sho import run_phased_optimizer

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class NeighborSelection:
    """Outcome of one member's neighborhood scan."""

    local_index: int
    global_index: int
    local_set: tuple[int, ...]


def _select_neighbors(
    positions: np.ndarray,
    members,
    i: int,
    k: int,
    rng: np.random.Generator,
) -> NeighborSelection:
    n = len(members)
    if n < 3:
        raise ConfigurationError("neighbor selection needs at least 3 members")
    if n <= k + 1:
        log.debug(
            "neighborhood size %d leaves no outsiders in a population of %d; "
            "shrinking to %d", k, n, n - 2,
        )
        k = n - 2
    diff = positions - positions[i]
    dist2 = np.einsum("ij,ij->i", diff, diff)
    order = np.argsort(dist2, kind="stable").tolist()
    local: list[int] = []
    for idx in order:
        if idx != i:
            local.append(idx)
            if len(local) == k:
                break
    local_index = local[int(rng.integers(k))]
    excluded = set(local)
    excluded.add(i)
    global_index = -1
    for idx in range(n):
        if idx in excluded:
            continue
        if global_index < 0 or members[idx].key < members[global_index].key:
            global_index = idx
    return NeighborSelection(local_index, global_index, tuple(local))


def pick_conscious_neighbors(
    population: Population, i: int, k: int, rng: np.random.Generator
) -> NeighborSelection:
    """Pick c_local and c_global for member i.

    The k members nearest to i (Euclidean distance on current positions,
    distance ties broken by lowest index) form the local set; c_local is
    drawn uniformly from it, and c_global is the fittest member outside
    the local set and i (fitness ties broken by lowest index). When the
    population is too small to leave outsiders, k shrinks to n - 2.
    """
    positions = np.array([m.position for m in population.members])
    return _select_neighbors(positions, population.members, i, k, rng)


def local_step(x: np.ndarray, m_local: np.ndarray, r: float, fl: float) -> np.ndarray:
    """Attraction toward a neighbor's memory: x + r*fl*(m_local - x)."""
    return x + r * fl * (m_local - x)


def global_step(
    x: np.ndarray, m_global: np.ndarray, r: float, fl: float, with_base: bool = False
) -> np.ndarray:
    """Jump sized by the gap to a non-neighbor's memory: r*fl*(m_global - x).

    The step intentionally has no additive base position; the caller's
    random-reinit repair absorbs the resulting out-of-range components.
    `with_base` switches to the anchored form x + r*fl*(m_global - x).
    """
    if with_base:
        return x + r * fl * (m_global - x)
    return r * fl * (m_global - x)


def wander_step(
    gbest: np.ndarray, x_r: np.ndarray, x: np.ndarray, r: float, fl: float
) -> np.ndarray:
    """Offset from the best memory: gbest + r*fl*(x_r - x)."""
    return gbest + r * fl * (x_r - x)


def neighborhood_local_move(
    x: np.ndarray,
    m_local: np.ndarray,
    fl: float,
    spec: ProblemSpec,
    rng: np.random.Generator,
) -> np.ndarray:
    """Draw r and take the local step; repair by random reinitialization."""
    r = rng.random()
    return repair_random_reinit(local_step(x, m_local, float(r), fl), spec.bounds, rng)


def nonneighbor_global_move(
    x: np.ndarray,
    m_global: np.ndarray,
    fl: float,
    spec: ProblemSpec,
    rng: np.random.Generator,
    with_base: bool = False,
) -> np.ndarray:
    """Draw r and take the global step; repair by random reinitialization."""
    r = rng.random()
    return repair_random_reinit(
        global_step(x, m_global, float(r), fl, with_base), spec.bounds, rng
    )


def wander_move(
    gbest: np.ndarray,
    x_r: np.ndarray,
    x: np.ndarray,
    fl: float,
    spec: ProblemSpec,
    rng: np.random.Generator,
) -> np.ndarray:
    """Draw r and take the wander step; repair by clamping."""
    r = rng.random()
    return repair_clamp(wander_step(gbest, x_r, x, float(r), fl), spec.bounds)


def flight_length_at(params: AlgoParams, t: int) -> float:
    """Flight length for iteration t: constant, or linear decay to half."""
    if params.fl_decay == "constant" or params.max_iter <= 1:
        return params.flight_length
    return params.flight_length * (1.0 - 0.5 * (t - 1) / (params.max_iter - 1))


def msho_movement_phase(
    population: Population,
    spec: ProblemSpec,
    params: AlgoParams,
    rng: np.random.Generator,
    t: int,
) -> None:
    """Three-strategy movement; one or two evaluations per member.

    A strategy-1/2 trial replaces the member only on strict fitness
    improvement; ties and regressions fall through to the wander step,
    whose result is adopted unconditionally. Memories update greedily on
    every evaluation the member makes.
    """
    members = population.members
    n = len(members)
    fl = flight_length_at(params, t)
    k = params.resolved_k()
    positions = np.array([m.position for m in members])
    for i, member in enumerate(members):
        sel = _select_neighbors(positions, members, i, k, rng)
        c_local = members[sel.local_index]
        c_global = members[sel.global_index]
        x = member.position
        r = float(rng.random())
        if c_local.key < c_global.key:
            trial = local_step(x, c_local.memory, r, fl)
        else:
            trial = global_step(
                x, c_global.memory, r, fl, with_base=params.msho_global_with_base
            )
        trial = repair_random_reinit(trial, spec.bounds, rng)
        ev = spec.evaluate(trial)
        population.record_evaluation(trial, ev, params)
        if ordering_key(ev, params) < member.key:
            member.move_to(trial, ev, params)
        else:
            member.observe(trial, ev, params)
            j = int(rng.integers(n - 1))
            if j >= i:
                j += 1
            r2 = float(rng.random())
            trial2 = wander_step(population.gbest_memory, members[j].position, x, r2, fl)
            trial2 = repair_clamp(trial2, spec.bounds)
            ev2 = spec.evaluate(trial2)
            population.record_evaluation(trial2, ev2, params)
            member.move_to(trial2, ev2, params)
        positions[i] = member.position


def run_msho(spec: ProblemSpec, params: AlgoParams | None = None, seed: int = 0) -> RunTrace:
    """Run the variant optimizer; a pure function of (spec, params, seed)."""
    return run_phased_optimizer(
        spec, params or AlgoParams(), seed, "msho", msho_movement_phase
    )
