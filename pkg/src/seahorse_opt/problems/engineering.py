"""Nine constrained engineering design problems.

Each problem is a minimization over a box with inequality constraints in
the g(x) <= 0 convention, using the classical formulation of the
benchmark. Every problem carries a fixture: the published best position
and cost, used by `audit_fixtures` in the package registry to verify the
implemented objective reproduces the published figure. Two fixtures
(pressure vessel, clutch brake) are internally inconsistent in their
published form; the audit reports them rather than papering over them.

All evaluators are pure scalar math so a single evaluation costs
microseconds; optimizer hot loops call them tens of millions of times.
"""

from __future__ import annotations

import math

import numpy as np

from ..engine import Bounds, ProblemSpec

SQRT2 = math.sqrt(2.0)


# --- pressure vessel: shell thickness, head thickness, radius, length ---

def pressure_vessel_objective(x: np.ndarray) -> float:
    x1, x2, x3, x4 = x.tolist()
    return (
        0.6224 * x1 * x3 * x4
        + 1.7781 * x2 * x3 * x3
        + 3.1661 * x1 * x1 * x4
        + 19.84 * x1 * x1 * x3
    )


def pressure_vessel_constraints(x: np.ndarray) -> tuple[float, ...]:
    x1, x2, x3, x4 = x.tolist()
    return (
        -x1 + 0.0193 * x3,
        -x2 + 0.00954 * x3,
        -math.pi * x3 * x3 * x4 - (4.0 / 3.0) * math.pi * x3 ** 3 + 1296000.0,
        x4 - 240.0,
    )


# --- speed reducer: gear/shaft sizing, 7 variables, 11 constraints ---

def speed_reducer_objective(x: np.ndarray) -> float:
    x1, x2, x3, x4, x5, x6, x7 = x.tolist()
    return (
        0.7854 * x1 * x2 * x2 * (3.3333 * x3 * x3 + 14.9334 * x3 - 43.0934)
        - 1.508 * x1 * (x6 * x6 + x7 * x7)
        + 7.4777 * (x6 ** 3 + x7 ** 3)
        + 0.7854 * (x4 * x6 * x6 + x5 * x7 * x7)
    )


def speed_reducer_constraints(x: np.ndarray) -> tuple[float, ...]:
    x1, x2, x3, x4, x5, x6, x7 = x.tolist()
    return (
        27.0 / (x1 * x2 * x2 * x3) - 1.0,
        397.5 / (x1 * x2 * x2 * x3 * x3) - 1.0,
        1.93 * x4 ** 3 / (x2 * x3 * x6 ** 4) - 1.0,
        1.93 * x5 ** 3 / (x2 * x3 * x7 ** 4) - 1.0,
        math.sqrt((745.0 * x4 / (x2 * x3)) ** 2 + 16.9e6) / (110.0 * x6 ** 3) - 1.0,
        math.sqrt((745.0 * x5 / (x2 * x3)) ** 2 + 157.5e6) / (85.0 * x7 ** 3) - 1.0,
        x2 * x3 / 40.0 - 1.0,
        5.0 * x2 / x1 - 1.0,
        x1 / (12.0 * x2) - 1.0,
        (1.5 * x6 + 1.9) / x4 - 1.0,
        (1.1 * x7 + 1.9) / x5 - 1.0,
    )


# --- tension/compression spring: wire diameter, coil diameter, coils ---

def spring_objective(x: np.ndarray) -> float:
    x1, x2, x3 = x.tolist()
    return (x3 + 2.0) * x2 * x1 * x1


def spring_constraints(x: np.ndarray) -> tuple[float, ...]:
    x1, x2, x3 = x.tolist()
    return (
        1.0 - x2 ** 3 * x3 / (71785.0 * x1 ** 4),
        (4.0 * x2 * x2 - x1 * x2) / (12566.0 * (x2 * x1 ** 3 - x1 ** 4))
        + 1.0 / (5108.0 * x1 * x1) - 1.0,
        1.0 - 140.45 * x1 / (x2 * x2 * x3),
        (x1 + x2) / 1.5 - 1.0,
    )


# --- welded beam: weld thickness/length, bar height/width ---

_WB_P = 6000.0
_WB_L = 14.0
_WB_E = 30.0e6
_WB_G = 12.0e6
_WB_TAU_MAX = 13600.0
_WB_SIGMA_MAX = 30000.0
_WB_DELTA_MAX = 0.25


def welded_beam_objective(x: np.ndarray) -> float:
    x1, x2, x3, x4 = x.tolist()
    return 1.10471 * x1 * x1 * x2 + 0.04811 * x3 * x4 * (14.0 + x2)


def welded_beam_constraints(x: np.ndarray) -> tuple[float, ...]:
    x1, x2, x3, x4 = x.tolist()
    tau1 = _WB_P / (SQRT2 * x1 * x2)
    moment = _WB_P * (_WB_L + x2 / 2.0)
    half = (x1 + x3) / 2.0
    r = math.sqrt(x2 * x2 / 4.0 + half * half)
    j = 2.0 * (SQRT2 * x1 * x2 * (x2 * x2 / 12.0 + half * half))
    tau2 = moment * r / j
    tau = math.sqrt(tau1 * tau1 + 2.0 * tau1 * tau2 * x2 / (2.0 * r) + tau2 * tau2)
    sigma = 6.0 * _WB_P * _WB_L / (x4 * x3 * x3)
    delta = 4.0 * _WB_P * _WB_L ** 3 / (_WB_E * x3 ** 3 * x4)
    pc = (
        4.013 * _WB_E * math.sqrt(x3 * x3 * x4 ** 6 / 36.0) / (_WB_L * _WB_L)
        * (1.0 - x3 / (2.0 * _WB_L) * math.sqrt(_WB_E / (4.0 * _WB_G)))
    )
    return (
        (tau - _WB_TAU_MAX) / _WB_TAU_MAX,
        (sigma - _WB_SIGMA_MAX) / _WB_SIGMA_MAX,
        (delta - _WB_DELTA_MAX) / _WB_DELTA_MAX,
        x1 - x4,
        (_WB_P - pc) / _WB_P,
        0.125 - x1,
        (0.10471 * x1 * x1 + 0.04811 * x3 * x4 * (14.0 + x2) - 5.0) / 5.0,
    )


# --- three-bar truss: two cross-section areas ---

_TRUSS_L = 100.0
_TRUSS_P = 2.0
_TRUSS_SIGMA = 2.0


def three_bar_truss_objective(x: np.ndarray) -> float:
    x1, x2 = x.tolist()
    return (2.0 * SQRT2 * x1 + x2) * _TRUSS_L


def three_bar_truss_constraints(x: np.ndarray) -> tuple[float, ...]:
    x1, x2 = x.tolist()
    den = SQRT2 * x1 * x1 + 2.0 * x1 * x2
    rim = SQRT2 * x2 + x1
    if den == 0.0 or rim == 0.0:
        return (math.inf, math.inf, math.inf)
    return (
        (SQRT2 * x1 + x2) / den * _TRUSS_P - _TRUSS_SIGMA,
        x2 / den * _TRUSS_P - _TRUSS_SIGMA,
        1.0 / rim * _TRUSS_P - _TRUSS_SIGMA,
    )


# --- industrial refrigeration system: 14 variables, 15 constraints ---

def refrigeration_objective(x: np.ndarray) -> float:
    x1, x2, x3, x4, x5, x6, x7, x8, x9, x10, x11, x12, x13, _x14 = x.tolist()
    return (
        63098.88 * x2 * x4 * x12
        + 5441.5 * x2 * x2 * x12
        + 115055.5 * x2 ** 1.664 * x6
        + 6172.27 * x2 * x2 * x6
        + 63098.88 * x1 * x3 * x11
        + 5441.5 * x1 * x1 * x11
        + 115055.5 * x1 ** 1.664 * x5
        + 6172.27 * x1 * x1 * x5
        + 140.53 * x1 * x11
        + 281.29 * x3 * x11
        + 70.26 * x1 * x1
        + 281.29 * x1 * x3
        + 281.29 * x3 * x3
        + 14437.0 * x8 ** 1.8812 * x12 ** 0.3424 * x10
        * (0.0833 / x13) * x1 * x1 * x7 / x9
        + 20470.2 * x7 ** 2.893 * x11 ** 0.316 * x1 * x1
    )


def refrigeration_constraints(x: np.ndarray) -> tuple[float, ...]:
    x1, x2, x3, x4, x5, x6, x7, x8, x9, x10, x11, x12, x13, x14 = x.tolist()
    return (
        1.524 / x7 - 1.0,
        1.524 / x8 - 1.0,
        0.07789 * x1 * x1 * x10 / (x9 * x8 * x2 * x14) - 1.0,
        7.05305 * x1 * x1 * x10 / (x9 * x8 * x2 * x14) - 1.0,
        0.0833 * x14 / x13 - 1.0,
        47.136 * x2 ** 0.333 * x12 / x10
        - 1.333 * x8 * x13 ** 2.1195
        + 62.08 * x13 ** 2.1195 * x8 ** 0.2 / (x12 * x10) - 1.0,
        0.04771 * x10 * x8 ** 1.8812 * x12 ** 0.3424 - 1.0,
        0.0488 * x9 * x7 ** 1.893 * x11 ** 0.316 - 1.0,
        0.0099 * x1 / x3 - 1.0,
        0.0193 * x2 / x4 - 1.0,
        0.0298 * x1 / x5 - 1.0,
        0.056 * x2 / x6 - 1.0,
        2.0 / x9 - 1.0,
        2.0 / x10 - 1.0,
        x12 / x11 - 1.0,
    )


# --- multi-product batch plant: stage counts, volumes, cycle times, batches ---

_BATCH_S = ((2.0, 3.0, 4.0), (4.0, 6.0, 3.0))
_BATCH_T = ((8.0, 20.0, 8.0), (16.0, 4.0, 4.0))
_BATCH_H = 6000.0
_BATCH_Q = (40000.0, 20000.0)


def _stage_count(n: float) -> float:
    # round half up: the published optima sit on integer stage counts
    return math.floor(n + 0.5)


def batch_plant_objective(x: np.ndarray) -> float:
    n1, n2, n3, v1, v2, v3 = x.tolist()[:6]
    return 250.0 * (
        _stage_count(n1) * v1 ** 0.6
        + _stage_count(n2) * v2 ** 0.6
        + _stage_count(n3) * v3 ** 0.6
    )


def batch_plant_constraints(x: np.ndarray) -> tuple[float, ...]:
    vals = x.tolist()
    n = [_stage_count(v) for v in vals[:3]]
    vol = vals[3:6]
    tl = vals[6:8]
    b = vals[8:10]
    g = []
    for i in range(2):
        for j in range(3):
            g.append(_BATCH_S[i][j] * b[i] / vol[j] - 1.0)
    for i in range(2):
        for j in range(3):
            g.append(_BATCH_T[i][j] / (n[j] * tl[i]) - 1.0)
    g.append((_BATCH_Q[0] * tl[0] / b[0] + _BATCH_Q[1] * tl[1] / b[1]) / _BATCH_H - 1.0)
    return tuple(g)


# --- cantilever beam: five hollow-square section heights ---

def cantilever_objective(x: np.ndarray) -> float:
    x1, x2, x3, x4, x5 = x.tolist()
    return 0.0624 * (x1 + x2 + x3 + x4 + x5)


def cantilever_constraints(x: np.ndarray) -> tuple[float, ...]:
    x1, x2, x3, x4, x5 = x.tolist()
    return (
        61.0 / x1 ** 3 + 37.0 / x2 ** 3 + 19.0 / x3 ** 3
        + 7.0 / x4 ** 3 + 1.0 / x5 ** 3 - 1.0,
    )


# --- multiple-disc clutch brake: radii, thickness, force, disc count ---

_CB_RHO = 7.8e-6        # kg/mm^3
_CB_PMAX = 1.0          # MPa
_CB_VSR_MAX = 10.0      # m/s
_CB_T_MAX = 15.0        # s
_CB_L_MAX = 30.0        # mm
_CB_MU = 0.6
_CB_S = 1.5
_CB_MS = 40.0           # N m
_CB_MF = 3.0            # N m
_CB_N_RPM = 250.0
_CB_IZ = 55.0           # kg m^2
_CB_DELTA_R = 20.0      # mm
_CB_GAP = 0.5           # mm


def clutch_brake_objective(x: np.ndarray) -> float:
    ri, ro, t, _f, z = x.tolist()
    return math.pi * (ro * ro - ri * ri) * t * (z + 1.0) * _CB_RHO


def clutch_brake_constraints(x: np.ndarray) -> tuple[float, ...]:
    ri, ro, t, f, z = x.tolist()
    area = ro * ro - ri * ri
    cubic = ro ** 3 - ri ** 3
    mh = (2.0 / 3.0) * _CB_MU * f * z * cubic / area * 1e-3
    prz = f / (math.pi * area)
    omega = math.pi * _CB_N_RPM / 30.0
    rsr = (2.0 / 3.0) * cubic / area
    vsr = omega * rsr / 1000.0
    stop_time = _CB_IZ * omega / (mh + _CB_MF)
    return (
        _CB_DELTA_R - (ro - ri),
        (z + 1.0) * (t + _CB_GAP) - _CB_L_MAX,
        prz - _CB_PMAX,
        prz * vsr - _CB_PMAX * _CB_VSR_MAX,
        vsr - _CB_VSR_MAX,
        stop_time - _CB_T_MAX,
        _CB_S * _CB_MS - mh,
        -stop_time,
    )


def _spec(name, lower, upper, objective, constraints, fixture_x, fixture_cost):
    return ProblemSpec(
        name=name,
        bounds=Bounds(np.array(lower, dtype=float), np.array(upper, dtype=float)),
        objective=objective,
        constraints=constraints,
        fixture=(np.array(fixture_x, dtype=float), fixture_cost, "published best"),
    )


ENGINEERING_SPECS: dict[str, ProblemSpec] = {
    spec.name: spec
    for spec in (
        _spec(
            "pressure-vessel",
            [0.0, 0.0, 10.0, 10.0],
            [99.0, 99.0, 200.0, 200.0],
            pressure_vessel_objective,
            pressure_vessel_constraints,
            [0.774555, 0.383203, 40.31962, 200.0],
            5870.12409,
        ),
        _spec(
            "speed-reducer",
            [2.6, 0.7, 17.0, 7.3, 7.8, 2.9, 5.0],
            [3.6, 0.8, 28.0, 8.3, 8.3, 3.9, 5.5],
            speed_reducer_objective,
            speed_reducer_constraints,
            [3.497599, 0.7, 17.0, 7.3, 7.713535, 3.350056, 5.285631],
            2993.634,
        ),
        _spec(
            "spring",
            [0.05, 0.25, 2.0],
            [2.0, 1.3, 15.0],
            spring_objective,
            spring_constraints,
            [0.051687, 0.356672, 11.29167],
            0.012665,
        ),
        _spec(
            "welded-beam",
            [0.1, 0.1, 0.1, 0.1],
            [2.0, 10.0, 10.0, 2.0],
            welded_beam_objective,
            welded_beam_constraints,
            [0.20573, 3.470471, 9.036627, 0.20573],
            1.724852,
        ),
        _spec(
            "three-bar-truss",
            [0.0, 0.0],
            [1.0, 1.0],
            three_bar_truss_objective,
            three_bar_truss_constraints,
            [0.788649, 0.408235],
            263.8915,
        ),
        _spec(
            "refrigeration",
            [0.001] * 14,
            [5.0] * 14,
            refrigeration_objective,
            refrigeration_constraints,
            [0.001, 0.001, 0.001, 0.001, 0.001, 0.001, 1.524, 1.524,
             4.99999, 2.0, 0.001, 0.001, 0.007279, 0.007279],
            0.032255,
        ),
        _spec(
            "batch-plant",
            [0.51, 0.51, 0.51, 250.0, 250.0, 250.0,
             20.0 / 3.0, 16.0 / 3.0, 40000.0 * 20.0 / (3.0 * 6000.0),
             20000.0 * 16.0 / (3.0 * 6000.0)],
            [3.49, 3.49, 3.49, 2500.0, 2500.0, 2500.0,
             20.0, 16.0, 2500.0 / 4.0, 2500.0 / 6.0],
            batch_plant_objective,
            batch_plant_constraints,
            [1.525762, 1.508902, 0.674961, 479.9229, 719.8071, 660.2033,
             9.999419, 7.999732, 120.1043, 59.92858],
            58507.14,
        ),
        _spec(
            "cantilever",
            [0.01] * 5,
            [100.0] * 5,
            cantilever_objective,
            cantilever_constraints,
            [6.015906, 5.308734, 4.495939, 3.500899, 2.152182],
            1.339956,
        ),
        _spec(
            "clutch-brake",
            [60.0, 90.0, 1.0, 600.0, 2.0],
            [80.0, 110.0, 3.0, 1000.0, 9.0],
            clutch_brake_objective,
            clutch_brake_constraints,
            [70.0, 90.0, 1.0, 213.5391, 2.0],
            0.235242,
        ),
    )
}
