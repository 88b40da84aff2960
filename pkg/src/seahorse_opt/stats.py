"""Nonparametric statistics for comparing optimizer run sets.

Descriptive summaries, mean-based ranking with shared tie ranks, Friedman
mean ranks (with the chi-square test statistic), and two-sided Wilcoxon
rank-sum p-values. The rank-sum test ships two independent routes: a
normal approximation with mid-ranks, tie-corrected variance, and
continuity correction (the workhorse for 30-run samples), and an exact
enumeration over all index splits (tractable for small samples, used to
cross-check the approximation). A paired signed-rank variant is provided
but is not the default comparison.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations
from typing import Sequence

import numpy as np
from scipy.stats import chi2, rankdata

from .engine import ConfigurationError

__all__ = [
    "SampleSet",
    "DescriptiveStats",
    "FriedmanResult",
    "descriptive_stats",
    "rank_by_mean",
    "friedman_mean_rank",
    "friedman_test",
    "wilcoxon_rank_sum",
    "wilcoxon_rank_sum_exact",
    "wilcoxon_signed_rank",
    "win_tie_loss",
]


@dataclass(frozen=True)
class SampleSet:
    """One algorithm's final best fitness per run, with an identifying label."""

    values: tuple[float, ...]
    label: str = ""

    def __post_init__(self) -> None:
        vals = tuple(float(v) for v in self.values)
        if not vals:
            raise ConfigurationError("sample set must be non-empty")
        if not all(math.isfinite(v) for v in vals):
            raise ConfigurationError("sample set values must all be finite")
        object.__setattr__(self, "values", vals)

    def __len__(self) -> int:
        return len(self.values)


@dataclass(frozen=True)
class DescriptiveStats:
    min: float
    max: float
    mean: float
    std: float


@dataclass(frozen=True)
class FriedmanResult:
    """Friedman mean ranks plus the chi-square statistic over them."""

    mean_ranks: tuple[float, ...]
    statistic: float
    p_value: float
    n_blocks: int
    k_treatments: int


def _as_values(sample: SampleSet | Sequence[float] | np.ndarray) -> np.ndarray:
    if isinstance(sample, SampleSet):
        return np.asarray(sample.values, dtype=float)
    arr = np.atleast_1d(np.asarray(sample, dtype=float))
    if arr.ndim != 1 or arr.size == 0:
        raise ConfigurationError("sample must be a non-empty 1-D sequence")
    if not np.isfinite(arr).all():
        raise ConfigurationError("sample values must all be finite")
    return arr


def descriptive_stats(sample: SampleSet | Sequence[float]) -> DescriptiveStats:
    """Min, max, mean, and sample standard deviation (n-1 denominator).

    Raises ConfigurationError for samples of fewer than two values, where
    the sample standard deviation is undefined.
    """
    vals = _as_values(sample)
    if vals.size < 2:
        raise ConfigurationError(
            "sample standard deviation needs at least two values"
        )
    return DescriptiveStats(
        min=float(vals.min()),
        max=float(vals.max()),
        mean=float(vals.mean()),
        std=float(vals.std(ddof=1)),
    )


def rank_by_mean(means: Sequence[float] | np.ndarray) -> np.ndarray:
    """Rank algorithms by mean value: rank 1 is the lowest mean.

    Ties share the average of the ranks they occupy, so the output always
    sums to k(k+1)/2.
    """
    vals = _as_values(means)
    return rankdata(vals, method="average")


def friedman_mean_rank(rank_matrix) -> np.ndarray:
    """Column means of a (problems x algorithms) rank matrix.

    Rows are per-problem rank vectors (or a column slice of them when
    summarizing a single algorithm). Ragged input is rejected.
    """
    try:
        matrix = np.asarray(rank_matrix, dtype=float)
    except ValueError as exc:
        raise ConfigurationError(f"rank matrix must be rectangular: {exc}") from exc
    if matrix.ndim != 2 or matrix.size == 0:
        raise ConfigurationError(
            "rank matrix must be a non-empty 2-D array of per-problem ranks"
        )
    if not np.isfinite(matrix).all():
        raise ConfigurationError("rank matrix entries must all be finite")
    return matrix.mean(axis=0)


def friedman_test(rank_matrix) -> FriedmanResult:
    """Friedman chi-square test over a (problems x algorithms) rank matrix.

    Returns the mean ranks together with the classical (uncorrected)
    chi-square statistic 12N/(k(k+1)) * sum_j (Rbar_j - (k+1)/2)^2 and its
    upper-tail p-value on k-1 degrees of freedom.
    """
    mean_ranks = friedman_mean_rank(rank_matrix)
    k = mean_ranks.size
    if k < 2:
        raise ConfigurationError("Friedman test needs at least two algorithms")
    n = int(np.asarray(rank_matrix, dtype=float).shape[0])
    center = (k + 1) / 2.0
    statistic = 12.0 * n / (k * (k + 1)) * float(((mean_ranks - center) ** 2).sum())
    p_value = float(chi2.sf(statistic, k - 1))
    return FriedmanResult(
        mean_ranks=tuple(float(r) for r in mean_ranks),
        statistic=statistic,
        p_value=p_value,
        n_blocks=n,
        k_treatments=int(k),
    )


def wilcoxon_rank_sum(
    a: SampleSet | Sequence[float], b: SampleSet | Sequence[float]
) -> float:
    """Two-sided Mann-Whitney/rank-sum p-value via normal approximation.

    Mid-ranks for ties, tie-corrected variance, and a 0.5 continuity
    correction on the larger U statistic (clamped so identical samples
    give z = 0 and p = 1). When the tie correction removes all variance
    (every value equal) the samples are indistinguishable and p = 1.
    """
    xs = _as_values(a)
    ys = _as_values(b)
    n, m = xs.size, ys.size
    combined = np.concatenate([xs, ys])
    ranks = rankdata(combined, method="average")
    u1 = float(ranks[:n].sum()) - n * (n + 1) / 2.0
    big_u = max(u1, n * m - u1)
    total = n + m
    _, counts = np.unique(combined, return_counts=True)
    tie_term = float((counts.astype(float) ** 3 - counts).sum()) / (
        total * (total - 1.0)
    )
    var_u = n * m / 12.0 * ((total + 1.0) - tie_term)
    if var_u <= 0.0:
        return 1.0
    z = max(0.0, big_u - n * m / 2.0 - 0.5) / math.sqrt(var_u)
    return min(1.0, math.erfc(z / math.sqrt(2.0)))


def _midranks(values: Sequence[float]) -> list[float]:
    # Standalone mid-rank assignment so the exact route shares no code
    # with the approximation path it is checking.
    order = sorted(range(len(values)), key=lambda i: values[i])
    ranks = [0.0] * len(values)
    i = 0
    while i < len(order):
        j = i
        while j + 1 < len(order) and values[order[j + 1]] == values[order[i]]:
            j += 1
        shared = (i + j + 2) / 2.0
        for idx in order[i : j + 1]:
            ranks[idx] = shared
        i = j + 1
    return ranks


def wilcoxon_rank_sum_exact(
    a: SampleSet | Sequence[float], b: SampleSet | Sequence[float]
) -> float:
    """Exact two-sided rank-sum p-value by enumerating all index splits.

    Counts the fraction of the C(n+m, n) assignments of the combined
    ranks whose U statistic deviates from nm/2 at least as far as the
    observed one. Cost grows combinatorially; intended for small samples.
    """
    xs = [float(v) for v in _as_values(a)]
    ys = [float(v) for v in _as_values(b)]
    n, m = len(xs), len(ys)
    ranks = _midranks(xs + ys)
    offset = n * (n + 1) / 2.0
    center = n * m / 2.0
    # Mid-ranks are multiples of 1/2, so sums and comparisons are exact.
    observed = abs(sum(ranks[:n]) - offset - center)
    hits = 0
    total = 0
    for subset in combinations(range(n + m), n):
        u = sum(ranks[i] for i in subset) - offset
        total += 1
        if abs(u - center) >= observed:
            hits += 1
    return hits / total


def wilcoxon_signed_rank(
    a: SampleSet | Sequence[float], b: SampleSet | Sequence[float]
) -> float:
    """Two-sided paired signed-rank p-value (normal approximation).

    Zero differences are dropped; mid-ranks on |d| with tie-corrected
    variance and continuity correction. Provided as a paired alternative;
    the unpaired rank-sum test is the default comparison.
    """
    xs = _as_values(a)
    ys = _as_values(b)
    if xs.size != ys.size:
        raise ConfigurationError("signed-rank test needs paired samples of equal length")
    d = xs - ys
    d = d[d != 0.0]
    n = d.size
    if n == 0:
        return 1.0
    ranks = rankdata(np.abs(d), method="average")
    w_plus = float(ranks[d > 0.0].sum())
    mean_w = n * (n + 1) / 4.0
    _, counts = np.unique(np.abs(d), return_counts=True)
    var_w = n * (n + 1) * (2.0 * n + 1.0) / 24.0 - float(
        (counts.astype(float) ** 3 - counts).sum()
    ) / 48.0
    if var_w <= 0.0:
        return 1.0
    z = max(0.0, abs(w_plus - mean_w) - 0.5) / math.sqrt(var_w)
    return min(1.0, math.erfc(z / math.sqrt(2.0)))


def win_tie_loss(p: float, direction: float, alpha: float = 0.05) -> str:
    """Verdict for the reference algorithm at significance level alpha.

    `direction` is the signed margin in the reference's favor (for
    minimization: other median minus reference median). Significant p
    with a positive margin is a "win", with a negative margin a "loss",
    anything else a "tie".
    """
    if p < alpha and direction > 0.0:
        return "win"
    if p < alpha and direction < 0.0:
        return "loss"
    return "tie"
