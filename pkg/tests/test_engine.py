"""Core engine: bounds, evaluation, candidate ordering, population state,
initialization, and repair operators."""

import math

import numpy as np
import pytest

from seahorse_opt import (
    AlgoParams,
    Bounds,
    Candidate,
    ConfigurationError,
    Evaluation,
    ProblemSpec,
    compare_candidates,
    init_population,
    make_rng,
    ordering_key,
    repair_clamp,
    repair_random_reinit,
    scalar_fitness,
    select_elite,
)


def make_spec(lower, upper, constraints=None):
    return ProblemSpec(
        name="test",
        bounds=Bounds(np.asarray(lower, float), np.asarray(upper, float)),
        objective=lambda x: float(np.sum(np.square(x))),
        constraints=constraints,
    )


def make_candidate(objective, feasible=True, violation=0.0, position=(0.0,)):
    ev = Evaluation(
        objective=objective,
        g=() if feasible else (violation,),
        feasible=feasible,
        violation_sum=0.0 if feasible else violation,
    )
    params = AlgoParams()
    key = ordering_key(ev, params)
    x = np.asarray(position, float)
    return Candidate(x, ev, key, x.copy(), key)


class TestBounds:
    def test_dim_and_containment(self):
        b = Bounds(np.array([0.0, 0.0]), np.array([1.0, 2.0]))
        assert b.dim == 2
        assert b.contains(np.array([0.5, 1.5]))
        assert b.contains(np.array([0.0, 2.0]))
        assert not b.contains(np.array([1.1, 1.0]))

    def test_lower_above_upper_rejected(self):
        with pytest.raises(ConfigurationError):
            Bounds(np.array([1.0]), np.array([0.0]))

    def test_mismatched_lengths_rejected(self):
        with pytest.raises(ConfigurationError):
            Bounds(np.array([0.0, 0.0]), np.array([1.0]))

    def test_degenerate_interval_allowed(self):
        b = Bounds(np.array([5.0]), np.array([5.0]))
        assert b.contains(np.array([5.0]))


class TestAlgoParams:
    def test_defaults_match_protocol(self):
        p = AlgoParams()
        assert p.pop == 30 and p.max_iter == 1000
        assert p.u == 0.05 and p.v == 0.05 and p.s == 0.01

    def test_odd_pop_rejected(self):
        with pytest.raises(ConfigurationError):
            AlgoParams(pop=31)

    def test_tiny_pop_rejected(self):
        with pytest.raises(ConfigurationError):
            AlgoParams(pop=2)

    def test_bad_threshold_rejected(self):
        with pytest.raises(ConfigurationError):
            AlgoParams(predation_threshold=1.5)

    def test_bad_levy_lambda_rejected(self):
        with pytest.raises(ConfigurationError):
            AlgoParams(levy_lambda=2.5)
        with pytest.raises(ConfigurationError):
            AlgoParams(levy_lambda=0.0)

    def test_bad_constraint_mode_rejected(self):
        with pytest.raises(ConfigurationError):
            AlgoParams(constraint_mode="magic")

    def test_default_neighborhood_k(self):
        assert AlgoParams().resolved_k() == 6
        assert AlgoParams(pop=10).resolved_k() == 2
        assert AlgoParams(neighborhood_k=4).resolved_k() == 4


class TestEvaluationAndOrdering:
    def test_unconstrained_is_feasible(self):
        spec = make_spec([-1.0], [1.0])
        ev = spec.evaluate(np.array([0.5]))
        assert ev.feasible and ev.violation_sum == 0.0 and ev.g == ()
        assert ev.objective == 0.25

    def test_constraint_violation_sum(self):
        spec = make_spec(
            [-1.0], [1.0], constraints=lambda x: (x[0] - 0.1, -1.0, 2.0 * x[0])
        )
        ev = spec.evaluate(np.array([0.5]))
        assert ev.g == pytest.approx((0.4, -1.0, 1.0))
        assert ev.violation_sum == pytest.approx(1.4)
        assert not ev.feasible

    def test_feasibility_tolerance(self):
        spec = make_spec([-1.0], [1.0], constraints=lambda x: (x[0],))
        assert spec.evaluate(np.array([1e-7])).feasible
        assert not spec.evaluate(np.array([1e-5])).feasible

    def test_feasible_key_is_raw_objective(self):
        params = AlgoParams()
        ev = Evaluation(3.25, (), True, 0.0)
        assert ordering_key(ev, params) == (0.0, 3.25)
        assert scalar_fitness(ev, params) == 3.25

    def test_infeasible_key_uses_violation(self):
        params = AlgoParams()
        ev = Evaluation(1.0, (0.5,), False, 0.5)
        assert ordering_key(ev, params) == (1.0, 0.5)
        assert scalar_fitness(ev, params) > 1e99

    def test_static_penalty_mode(self):
        params = AlgoParams(constraint_mode="static-penalty", penalty_coefficient=10.0)
        ev = Evaluation(1.0, (0.5,), False, 0.5)
        assert scalar_fitness(ev, params) == pytest.approx(1.0 + 10.0 * 0.5)
        key = ordering_key(ev, params)
        assert key[-1] == pytest.approx(6.0)


class TestCompareCandidates:
    def test_feasible_beats_infeasible(self):
        better = make_candidate(10.0, feasible=True)
        worse = make_candidate(1.0, feasible=False, violation=0.1)
        assert compare_candidates(better, worse) == -1
        assert compare_candidates(worse, better) == 1

    def test_two_feasible_by_objective(self):
        a = make_candidate(1.0)
        b = make_candidate(2.0)
        assert compare_candidates(a, b) == -1

    def test_two_infeasible_by_violation(self):
        a = make_candidate(5.0, feasible=False, violation=0.5)
        b = make_candidate(1.0, feasible=False, violation=0.2)
        assert compare_candidates(a, b) == 1

    def test_equal_candidates_tie(self):
        a = make_candidate(1.0)
        b = make_candidate(1.0)
        assert compare_candidates(a, b) == 0

    def test_total_order_on_random_triples(self):
        # Antisymmetry and transitivity over 10^4 random triples.
        rng = make_rng(42)
        pool = []
        for _ in range(300):
            feasible = bool(rng.random() < 0.5)
            pool.append(
                make_candidate(
                    float(rng.normal()),
                    feasible=feasible,
                    violation=float(rng.random()) if not feasible else 0.0,
                )
            )
        n = len(pool)
        for _ in range(10_000):
            i, j, k = rng.integers(0, n, size=3)
            a, b, c = pool[i], pool[j], pool[k]
            ab = compare_candidates(a, b)
            assert ab == -compare_candidates(b, a)
            if ab <= 0 and compare_candidates(b, c) <= 0:
                assert compare_candidates(a, c) <= 0


class TestSelectElite:
    def test_argmin(self):
        members = [make_candidate(f) for f in (3.0, 1.0, 2.0)]
        assert select_elite(members) is members[1]

    def test_tie_breaks_to_lowest_index(self):
        members = [make_candidate(1.0), make_candidate(1.0)]
        assert select_elite(members) is members[0]

    def test_single_member(self):
        members = [make_candidate(7.0)]
        assert select_elite(members) is members[0]

    def test_empty_rejected(self):
        with pytest.raises(ConfigurationError):
            select_elite([])


class TestInitPopulation:
    def test_all_components_within_bounds(self):
        spec = make_spec([0.0, 0.0], [1.0, 1.0])
        pop = init_population(spec, AlgoParams(pop=4), make_rng(1))
        for m in pop.members:
            assert spec.bounds.contains(m.position)

    def test_degenerate_bounds_pin_position(self):
        spec = make_spec([5.0], [5.0])
        pop = init_population(spec, AlgoParams(pop=4), make_rng(0))
        for m in pop.members:
            assert m.position[0] == 5.0

    def test_same_seed_bitwise_identical(self):
        spec = make_spec([-3.0, -3.0], [3.0, 3.0])
        p1 = init_population(spec, AlgoParams(pop=6), make_rng(9))
        p2 = init_population(spec, AlgoParams(pop=6), make_rng(9))
        for a, b in zip(p1.members, p2.members):
            assert np.array_equal(a.position, b.position)
            assert a.evaluation == b.evaluation

    def test_elite_is_population_min(self):
        spec = make_spec([-3.0, -3.0], [3.0, 3.0])
        pop = init_population(spec, AlgoParams(pop=8), make_rng(2))
        best_key = min(m.key for m in pop.members)
        assert pop.elite.key == best_key
        assert pop.gbest_key == best_key
        assert pop.evaluations == 8

    def test_memory_initialized_to_own_position(self):
        spec = make_spec([-3.0], [3.0])
        pop = init_population(spec, AlgoParams(pop=4), make_rng(3))
        for m in pop.members:
            assert np.array_equal(m.memory, m.position)
            assert m.memory_key == m.key


class TestRepairs:
    def test_clamp_projects(self):
        b = Bounds(np.array([0.0, 0.0, 0.0]), np.array([1.0, 1.0, 1.0]))
        out = repair_clamp(np.array([-1.0, 0.5, 2.0]), b)
        assert np.array_equal(out, np.array([0.0, 0.5, 1.0]))

    def test_clamp_identity_in_bounds(self):
        b = Bounds(np.array([0.0]), np.array([1.0]))
        x = np.array([0.5])
        assert np.array_equal(repair_clamp(x, b), x)
        assert np.array_equal(repair_clamp(np.array([1.0]), b), np.array([1.0]))

    def test_reinit_only_touches_out_of_range(self):
        b = Bounds(np.array([0.0, 0.0]), np.array([1.0, 1.0]))
        out = repair_random_reinit(np.array([2.0, 0.5]), b, make_rng(0))
        assert 0.0 <= out[0] <= 1.0
        assert out[1] == 0.5

    def test_reinit_identity_in_bounds(self):
        b = Bounds(np.array([0.0, 0.0]), np.array([1.0, 1.0]))
        x = np.array([0.25, 0.75])
        out = repair_random_reinit(x, b, make_rng(0))
        assert np.array_equal(out, x)

    def test_reinit_full_redraw(self):
        b = Bounds(np.array([0.0, 0.0]), np.array([1.0, 1.0]))
        out = repair_random_reinit(np.array([-5.0, 7.0]), b, make_rng(1))
        assert b.contains(out)

    def test_repairs_contain_on_random_inputs(self):
        rng = make_rng(7)
        b = Bounds(np.array([-2.0, 0.0, 1.0]), np.array([2.0, 0.5, 4.0]))
        for _ in range(500):
            x = rng.normal(scale=10.0, size=3)
            assert b.contains(repair_clamp(x, b))
            assert b.contains(repair_random_reinit(x.copy(), b, rng))


class TestCandidateMemory:
    def test_move_to_updates_memory_greedily(self):
        params = AlgoParams()
        spec = make_spec([-10.0], [10.0])
        c = Candidate.fresh(np.array([2.0]), spec, params)
        worse = np.array([3.0])
        c.move_to(worse, spec.evaluate(worse), params)
        assert c.position[0] == 3.0
        assert c.memory[0] == 2.0, "memory keeps the better old position"
        better = np.array([1.0])
        c.move_to(better, spec.evaluate(better), params)
        assert c.memory[0] == 1.0

    def test_snapshot_is_detached(self):
        params = AlgoParams()
        spec = make_spec([-10.0], [10.0])
        c = Candidate.fresh(np.array([2.0]), spec, params)
        snap = c.snapshot()
        c.position[0] = 9.0
        assert snap.position[0] == 2.0

    def test_memory_dominates_position(self):
        params = AlgoParams()
        spec = make_spec([-10.0], [10.0])
        rng = make_rng(5)
        c = Candidate.fresh(np.array([2.0]), spec, params)
        for _ in range(50):
            x = rng.uniform(-10.0, 10.0, size=1)
            c.move_to(x, spec.evaluate(x), params)
            assert c.memory_key <= c.key
