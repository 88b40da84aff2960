"""Sea Horse Optimizer: spiral/Brownian movement, predation, breeding.

Each iteration runs three phases over the member list in index order:

1. movement  - every member gets a new position (spiral drift toward the
   elite under a Levy-flight step when r1 > 0, Brownian motion otherwise).
   Positions are replaced without evaluation; the predation phase is the
   next point where fitness is read.
2. predation - every member blends its moved position with the elite
   (success branch, probability 1 - predation_threshold) or drifts away
   from it (failure branch), then is clamped and evaluated.
3. breeding  - members are sorted, the better half fathers offspring with
   randomly paired mothers from the worse half, offspring are evaluated,
   and the best `pop` of parents plus offspring survive.

Per-member draw order is fixed so runs are reproducible: movement draws
r1, then (theta, lambda, w, k) on the spiral branch or (rand, beta) on
the Brownian branch; predation draws (r2, rand); breeding draws the
pairing permutation, then one r3 per offspring.
"""

from __future__ import annotations

import math
from typing import Callable

import numpy as np

from .engine import (
    AlgoParams,
    Candidate,
    ConfigurationError,
    Population,
    ProblemSpec,
    RunTrace,
    init_population,
    make_rng,
    ordering_key,
    repair_clamp,
    scalar_fitness,
)


def levy_sigma(lam: float) -> float:
    """Scale factor of the Levy step generator.

    sigma(lam) = Gamma(1+lam) * sin(pi*lam/2) / (Gamma((1+lam)/2) * lam * 2^((lam-1)/2))
    """
    if not 0.0 < lam <= 2.0:
        raise ConfigurationError(f"levy lambda must be in (0, 2], got {lam}")
    num = math.gamma(1.0 + lam) * math.sin(math.pi * lam / 2.0)
    den = math.gamma((1.0 + lam) / 2.0) * lam * 2.0 ** ((lam - 1.0) / 2.0)
    return num / den


def levy_value(lam: float, s: float, w: float, k: float) -> float:
    """Levy step from explicit normal draws: s * w * sigma / |k|^lam."""
    return s * w * levy_sigma(lam) / abs(k) ** lam


def draw_levy_lambda(params: AlgoParams, rng: np.random.Generator) -> float:
    """Per-use lambda: the configured constant, or a fresh draw in (0, 2]."""
    if params.levy_lambda is not None:
        return params.levy_lambda
    return 2.0 - 2.0 * rng.random()


def levy_step(lam: float, s: float, rng: np.random.Generator) -> float:
    """Heavy-tailed step: w, k standard normal; k redrawn if exactly zero."""
    w = rng.standard_normal()
    k = rng.standard_normal()
    while k == 0.0:
        k = rng.standard_normal()
    return levy_value(lam, s, float(w), float(k))


def spiral_value(
    x: np.ndarray,
    elite: np.ndarray,
    theta: float,
    levy: float,
    u: float,
    v: float,
    printed: bool = False,
) -> np.ndarray:
    """Spiral update from explicit draws.

    rho = u * e^(theta*v); the helix coordinates are x = rho*cos(theta),
    y = rho*sin(theta), z = rho*theta. Default reading applies the Levy
    step to the whole attraction bracket; `printed` reproduces the
    divergent textbook typesetting (unconditional +elite term).
    """
    rho = u * math.exp(theta * v)
    xyz = (rho * math.cos(theta)) * (rho * math.sin(theta)) * (rho * theta)
    if printed:
        return x + levy * (elite - x) * xyz + elite
    return x + levy * ((elite - x) * xyz + elite)


def brownian_value(
    x: np.ndarray, elite: np.ndarray, rand: float, beta: float, l: float
) -> np.ndarray:
    """Brownian update from explicit draws: x + rand*l*beta*(x - beta*elite)."""
    return x + rand * l * beta * (x - beta * elite)


def spiral_move(
    x: np.ndarray,
    elite: np.ndarray,
    spec: ProblemSpec,
    params: AlgoParams,
    rng: np.random.Generator,
) -> np.ndarray:
    """Levy-flight spiral toward the elite, clamped to bounds.

    Draws, in order: theta in [0, 2pi], lambda (per-use policy), w, k.
    """
    theta = 2.0 * math.pi * rng.random()
    lam = draw_levy_lambda(params, rng)
    levy = levy_step(lam, params.s, rng)
    new = spiral_value(
        x, elite, theta, levy, params.u, params.v,
        printed=params.compat_printed_equations,
    )
    return repair_clamp(new, spec.bounds)


def brownian_move(
    x: np.ndarray,
    elite: np.ndarray,
    spec: ProblemSpec,
    params: AlgoParams,
    rng: np.random.Generator,
) -> np.ndarray:
    """Brownian drift scaled by step length l, clamped to bounds.

    Draws, in order: rand in [0,1), beta standard normal.
    """
    rand = rng.random()
    beta = rng.standard_normal()
    new = brownian_value(x, elite, float(rand), float(beta), params.l)
    return repair_clamp(new, spec.bounds)


def movement_phase(
    population: Population,
    spec: ProblemSpec,
    params: AlgoParams,
    rng: np.random.Generator,
) -> None:
    """Replace every member's position; no evaluations happen here.

    Per member: r1 standard normal; r1 > 0 takes the spiral branch,
    otherwise the Brownian branch. Members keep their previous
    evaluations until predation re-evaluates them.
    """
    elite_pos = population.elite.position
    for member in population.members:
        r1 = rng.standard_normal()
        if r1 > 0:
            member.position = spiral_move(member.position, elite_pos, spec, params, rng)
        else:
            member.position = brownian_move(member.position, elite_pos, spec, params, rng)


def predation_alpha(t: int, max_iter: int, printed: bool = False) -> float:
    """Exploitation weight: (1 - t/T)^(2t/T), decaying 1 -> 0 over the run."""
    frac = t / max_iter
    if printed:
        return (1.0 - frac) ** max_iter
    return (1.0 - frac) ** (2.0 * frac)


def predation_phase(
    population: Population,
    spec: ProblemSpec,
    t: int,
    params: AlgoParams,
    rng: np.random.Generator,
) -> None:
    """Blend every member with the elite and evaluate the result.

    Per member, draws (r2, rand): r2 > predation_threshold takes the
    success branch alpha*(elite - rand*x) + (1-alpha)*elite, otherwise
    the failure branch (1-alpha)*(x - rand*elite) + alpha*x. The elite
    attractor is the best-so-far snapshot captured at phase start.
    """
    if t > params.max_iter:
        raise ConfigurationError(f"iteration {t} exceeds max_iter {params.max_iter}")
    alpha = predation_alpha(t, params.max_iter, params.compat_printed_equations)
    elite_pos = population.elite.position
    lo, hi = spec.bounds.lower, spec.bounds.upper
    for member in population.members:
        r2 = rng.random()
        rand = rng.random()
        x = member.position
        if r2 > params.predation_threshold:
            if params.compat_printed_equations:
                new = elite_pos - rand * x + (1.0 - alpha) * elite_pos
            else:
                new = alpha * (elite_pos - rand * x) + (1.0 - alpha) * elite_pos
        else:
            new = (1.0 - alpha) * (x - rand * elite_pos) + alpha * x
        new = np.clip(new, lo, hi)
        ev = spec.evaluate(new)
        population.record_evaluation(new, ev, params)
        member.move_to(new, ev, params)


def breeding_phase(
    population: Population,
    spec: ProblemSpec,
    params: AlgoParams,
    rng: np.random.Generator,
) -> None:
    """Mate the better half with the worse half, keep the best pop.

    Members are stable-sorted by fitness; fathers (best half) are paired
    with mothers (worst half) under a fresh random permutation, and each
    offspring is the convex blend r3*father + (1-r3)*mother with one r3
    per offspring. Survivors are the best pop of parents plus offspring
    (stable sort keeps parents ahead of offspring on exact ties). If the
    truncation would remove the last holder of the best memory ever seen,
    the worst survivor slot is given to the elite snapshot instead so the
    population never loses its all-time best.
    """
    members = population.members
    if len(members) % 2 != 0:
        raise ConfigurationError("breeding requires an even population")
    ranked = sorted(members, key=lambda c: c.key)
    half = len(members) // 2
    fathers = ranked[:half]
    mothers = ranked[half:]
    pairing = rng.permutation(half)
    offspring = []
    for q in range(half):
        r3 = rng.random()
        child_x = r3 * fathers[q].position + (1.0 - r3) * mothers[pairing[q]].position
        # the blend is inside the parents' box in exact arithmetic, but
        # rounding can land one ulp outside a bound both parents sit on
        child_x = repair_clamp(child_x, spec.bounds)
        ev = spec.evaluate(child_x)
        population.record_evaluation(child_x, ev, params)
        key = ordering_key(ev, params)
        offspring.append(Candidate(child_x, ev, key, child_x.copy(), key))
    pool = ranked + offspring
    pool.sort(key=lambda c: c.key)
    survivors = pool[: len(members)]
    if all(m.memory_key != population.gbest_key for m in survivors):
        survivors[-1] = population.elite.snapshot()
    population.members = survivors


MovementFn = Callable[
    [Population, ProblemSpec, AlgoParams, np.random.Generator, int], None
]


def run_phased_optimizer(
    spec: ProblemSpec,
    params: AlgoParams,
    seed: int,
    algorithm: str,
    movement: MovementFn,
) -> RunTrace:
    """Shared run loop: init, then T iterations of movement/predation/breeding.

    `movement` is called as movement(population, spec, params, rng, t) so
    variants can swap in their own movement phase while predation and
    breeding stay identical.
    """
    if params is None:
        params = AlgoParams()
    rng = make_rng(seed)
    population = init_population(spec, params, rng)
    T = params.max_iter
    history = np.empty(T, dtype=float)
    phase_evals: dict[str, list[int]] = {
        "movement": [],
        "predation": [],
        "breeding": [],
    }
    for t in range(1, T + 1):
        mark = population.evaluations
        movement(population, spec, params, rng, t)
        phase_evals["movement"].append(population.evaluations - mark)
        mark = population.evaluations
        predation_phase(population, spec, t, params, rng)
        phase_evals["predation"].append(population.evaluations - mark)
        mark = population.evaluations
        breeding_phase(population, spec, params, rng)
        phase_evals["breeding"].append(population.evaluations - mark)
        history[t - 1] = scalar_fitness(population.elite.evaluation, params)
    return RunTrace(
        algorithm=algorithm,
        problem=spec.name,
        seed=seed,
        best_history=history,
        best=population.elite.snapshot(),
        evaluations=population.evaluations,
        init_evaluations=params.pop,
        phase_evaluations=phase_evals,
    )


def _sho_movement(
    population: Population,
    spec: ProblemSpec,
    params: AlgoParams,
    rng: np.random.Generator,
    t: int,
) -> None:
    movement_phase(population, spec, params, rng)


def run_sho(spec: ProblemSpec, params: AlgoParams | None = None, seed: int = 0) -> RunTrace:
    """Run the baseline optimizer; a pure function of (spec, params, seed)."""
    return run_phased_optimizer(spec, params or AlgoParams(), seed, "sho", _sho_movement)
