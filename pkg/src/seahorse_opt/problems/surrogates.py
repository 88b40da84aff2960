"""Unconstrained test functions in plain closed form.

Classical unimodal, multimodal, and expanded-hybrid landscapes covering
the same difficulty families as shifted/rotated benchmark suites, without
external shift or rotation data. Every function returns exactly 0.0 at
its known optimum (the schwefel constant is computed self-consistently
so the floating-point sum cancels), and any dimension >= 1 is accepted.
"""

from __future__ import annotations

import math

import numpy as np

from ..engine import Bounds, ProblemSpec

_SCHWEFEL_X = 420.9687462275036
_SCHWEFEL_C = _SCHWEFEL_X * math.sin(math.sqrt(_SCHWEFEL_X))


def sphere(x: np.ndarray) -> float:
    return float(np.dot(x, x))


def bent_cigar(x: np.ndarray) -> float:
    return float(x[0] * x[0] + 1e6 * np.dot(x[1:], x[1:]))


def rastrigin(x: np.ndarray) -> float:
    return float(10.0 * x.size + np.sum(x * x - 10.0 * np.cos(2.0 * math.pi * x)))


def schwefel(x: np.ndarray) -> float:
    return float(np.sum(_SCHWEFEL_C - x * np.sin(np.sqrt(np.abs(x)))))


def rosenbrock(x: np.ndarray) -> float:
    if x.size < 2:
        return 0.0
    a = x[:-1]
    b = x[1:]
    return float(np.sum(100.0 * (b - a * a) ** 2 + (1.0 - a) ** 2))


def griewank(x: np.ndarray) -> float:
    idx = np.arange(1.0, x.size + 1.0)
    return float(1.0 + np.sum(x * x) / 4000.0 - np.prod(np.cos(x / np.sqrt(idx))))


def ackley(x: np.ndarray) -> float:
    # Terms are paired with their additive constants (and e spelled
    # exp(1.0)) so the optimum cancels bitwise instead of leaving a
    # one-ulp residue to intermediate rounding.
    n = x.size
    return float(
        20.0 * (1.0 - math.exp(-0.2 * math.sqrt(np.dot(x, x) / n)))
        + (math.exp(1.0) - math.exp(np.sum(np.cos(2.0 * math.pi * x)) / n))
    )


def zakharov(x: np.ndarray) -> float:
    idx = np.arange(1.0, x.size + 1.0)
    s = float(np.sum(0.5 * idx * x))
    return float(np.dot(x, x)) + s * s + s ** 4


def _griewank_1d(y: float) -> float:
    return y * y / 4000.0 - math.cos(y) + 1.0


def rosenbrock_griewank_expanded(x: np.ndarray) -> float:
    """Cyclic composition: griewank of rosenbrock on consecutive pairs."""
    vals = x.tolist()
    n = len(vals)
    total = 0.0
    for i in range(n):
        a = vals[i]
        b = vals[(i + 1) % n]
        total += _griewank_1d(100.0 * (b - a * a) ** 2 + (1.0 - a) ** 2)
    return total


# name -> (function, symmetric bound magnitude or (low, high), optimum position)
_SURROGATES: dict[str, tuple] = {
    "sphere": (sphere, 100.0, 0.0),
    "bent-cigar": (bent_cigar, 100.0, 0.0),
    "rastrigin": (rastrigin, 5.12, 0.0),
    "schwefel": (schwefel, 500.0, _SCHWEFEL_X),
    "rosenbrock": (rosenbrock, 30.0, 1.0),
    "griewank": (griewank, 600.0, 0.0),
    "ackley": (ackley, 32.0, 0.0),
    "zakharov": ((zakharov), (-5.0, 10.0), 0.0),
    "rosenbrock-griewank-expanded": (rosenbrock_griewank_expanded, 100.0, 1.0),
}

SURROGATE_NAMES = tuple(_SURROGATES)

DEFAULT_DIM = 10


def surrogate_optimum(name: str, dim: int) -> np.ndarray:
    """Position where the named surrogate returns exactly 0."""
    _, _, opt = _SURROGATES[name]
    return np.full(dim, opt, dtype=float)


def make_surrogate_spec(name: str, dim: int = DEFAULT_DIM) -> ProblemSpec:
    fn, span, _ = _SURROGATES[name]
    if dim < 1:
        raise ValueError(f"dimension must be >= 1, got {dim}")
    lo, hi = span if isinstance(span, tuple) else (-span, span)
    bounds = Bounds(np.full(dim, lo), np.full(dim, hi))
    return ProblemSpec(name=name, bounds=bounds, objective=fn)
