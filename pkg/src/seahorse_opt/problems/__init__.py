"""Problem registry: engineering designs, surrogate functions, plug-ins.

Problems are looked up by name. Engineering problems have fixed
dimensions and constraints; surrogates accept any dimension >= 1; custom
problems can be registered at runtime without code changes (for example
externally supplied shifted/rotated functions).
"""

from __future__ import annotations

import difflib
from typing import Callable

import numpy as np

from ..engine import ConfigurationError, Evaluation, ProblemSpec
from .engineering import ENGINEERING_SPECS
from .surrogates import (
    DEFAULT_DIM,
    SURROGATE_NAMES,
    make_surrogate_spec,
    surrogate_optimum,
)

__all__ = [
    "ENGINEERING_SPECS",
    "SURROGATE_NAMES",
    "DEFAULT_DIM",
    "audit_fixtures",
    "describe_problem",
    "discrepancy_ledger",
    "evaluate_engineering",
    "evaluate_unconstrained",
    "get_problem_spec",
    "list_problems",
    "register",
    "surrogate_optimum",
]

_custom: dict[str, Callable[[int | None], ProblemSpec]] = {}


def register(name: str, factory: Callable[[int | None], ProblemSpec],
             overwrite: bool = False) -> None:
    """Add a problem factory under `name`; factory(dim) -> ProblemSpec."""
    if not overwrite and name in _all_names():
        raise ConfigurationError(f"problem {name!r} is already registered")
    _custom[name] = factory


def _all_names() -> list[str]:
    return list(ENGINEERING_SPECS) + list(SURROGATE_NAMES) + list(_custom)


def _unknown(name: str) -> ConfigurationError:
    hint = difflib.get_close_matches(name, _all_names(), n=1)
    extra = f"; closest registered name is {hint[0]!r}" if hint else ""
    return ConfigurationError(f"unknown problem {name!r}{extra}")


def get_problem_spec(name: str, dim: int | None = None) -> ProblemSpec:
    """Look up a problem by name; `dim` sizes surrogates (default 10)."""
    if name in ENGINEERING_SPECS:
        spec = ENGINEERING_SPECS[name]
        if dim is not None and dim != spec.dim:
            raise ConfigurationError(
                f"{name} has fixed dimension {spec.dim}, got dim={dim}"
            )
        return spec
    if name in SURROGATE_NAMES:
        return make_surrogate_spec(name, DEFAULT_DIM if dim is None else dim)
    if name in _custom:
        return _custom[name](dim)
    raise _unknown(name)


def list_problems() -> dict[str, list[str]]:
    return {
        "engineering": list(ENGINEERING_SPECS),
        "surrogate": list(SURROGATE_NAMES),
        "custom": list(_custom),
    }


def evaluate_engineering(name: str, x) -> Evaluation:
    """Objective, constraint values, and feasibility at x; pure."""
    if name not in ENGINEERING_SPECS:
        raise _unknown(name)
    return ENGINEERING_SPECS[name].evaluate(np.asarray(x, dtype=float))


def evaluate_unconstrained(name: str, x) -> float:
    """Value of the named surrogate at x (any length >= 1); pure."""
    if name not in SURROGATE_NAMES:
        raise _unknown(name)
    x = np.asarray(x, dtype=float)
    return make_surrogate_spec(name, x.size).evaluate(x).objective


def describe_problem(name: str, dim: int | None = None) -> str:
    """Structured text block for documentation and cross-implementation diffs."""
    spec = get_problem_spec(name, dim)
    lines = [f"name: {spec.name}", f"dimension: {spec.dim}"]
    bounds = ", ".join(
        f"[{lo:g}, {hi:g}]" for lo, hi in zip(spec.bounds.lower, spec.bounds.upper)
    )
    lines.append(f"bounds: {bounds}")
    if spec.constraints is None:
        lines.append("constraints: 0")
    else:
        lines.append(f"constraints: {len(spec.constraints(spec.bounds.lower + 0.5 * (spec.bounds.upper - spec.bounds.lower)))}")
    if spec.fixture is not None:
        pos, cost, source = spec.fixture
        coords = ", ".join(f"{v:g}" for v in pos)
        lines.append(f"fixture: cost {cost:g} at ({coords}) [{source}]")
    return "\n".join(lines)


def audit_fixtures(rel_tol: float = 0.002,
                   violation_tol: float = 1e-3) -> list[dict]:
    """Re-evaluate every fixture and compare against its published cost.

    An entry passes when the recomputed objective is within `rel_tol`
    relative error of the published cost and no single constraint is
    violated by more than `violation_tol` (per-constraint, because a
    published row rounded to six digits picks up ~1e-4 of noise on every
    active constraint, and rows with several active constraints would
    fail a summed check on rounding noise alone). Bounds containment is
    reported as an informational flag (a published row can sit outside
    its own declared variable ranges without invalidating the cost
    audit).
    """
    entries = []
    for name, spec in ENGINEERING_SPECS.items():
        pos, published, _source = spec.fixture
        ev = spec.evaluate(pos)
        rel = abs(ev.objective - published) / abs(published)
        cost_ok = rel <= rel_tol
        worst = max(ev.g) if ev.g else 0.0
        feasible_ok = worst <= violation_tol
        in_bounds = spec.bounds.contains(pos)
        notes = []
        if not cost_ok:
            notes.append(f"recomputed cost off by {rel:.4%}")
        if not feasible_ok:
            notes.append(f"worst constraint violation {worst:.6g}")
        if not in_bounds:
            notes.append("position outside declared variable bounds")
        entries.append({
            "problem": name,
            "position": [float(v) for v in pos],
            "published_cost": float(published),
            "recomputed_cost": float(ev.objective),
            "relative_error": float(rel),
            "violation_sum": float(ev.violation_sum),
            "max_violation": float(worst),
            "within_bounds": bool(in_bounds),
            "passes": bool(cost_ok and feasible_ok),
            "note": "; ".join(notes),
        })
    return entries


def discrepancy_ledger() -> list[dict]:
    """Audit entries that fail: published rows the implementation cannot confirm."""
    return [entry for entry in audit_fixtures() if not entry["passes"]]
