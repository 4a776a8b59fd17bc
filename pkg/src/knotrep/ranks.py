"""Numeric rank decisions with relative thresholds and gap reporting.

A rank is the number of singular values above ``rel * sigma_max``.  A
decision is *clear* when the smallest retained singular value exceeds
ten times the threshold; otherwise the computation is flagged
inconclusive rather than guessed.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True)
class RankResult:
    rank: int
    sigma_max: float
    threshold: float
    sigma_kept: float | None
    sigma_dropped: float | None

    @property
    def gap_ratio(self) -> float:
        if self.sigma_kept is None:
            return float("inf")
        if self.sigma_dropped is None or self.sigma_dropped == 0.0:
            return float("inf")
        return self.sigma_kept / self.sigma_dropped

    @property
    def clear(self) -> bool:
        if self.sigma_kept is None:
            return True
        return self.sigma_kept >= 10.0 * self.threshold

    def to_dict(self) -> dict:
        return {
            "rank": self.rank,
            "sigma_max": self.sigma_max,
            "threshold": self.threshold,
            "sigma_kept": self.sigma_kept,
            "sigma_dropped": self.sigma_dropped,
            "gap_ratio": self.gap_ratio,
            "clear": self.clear,
        }


def rank_from_singular_values(svals: np.ndarray, rel_threshold: float) -> RankResult:
    svals = np.sort(np.asarray(svals, dtype=float))[::-1]
    if svals.size == 0 or svals[0] == 0.0:
        return RankResult(0, 0.0, 0.0, None, None)
    sigma_max = float(svals[0])
    threshold = rel_threshold * sigma_max
    rank = int(np.sum(svals > threshold))
    kept = float(svals[rank - 1]) if rank > 0 else None
    dropped = float(svals[rank]) if rank < svals.size else None
    return RankResult(rank, sigma_max, threshold, kept, dropped)


def matrix_rank(M: np.ndarray, rel_threshold: float) -> RankResult:
    if M.size == 0:
        return RankResult(0, 0.0, 0.0, None, None)
    svals = np.linalg.svd(M, compute_uv=False)
    return rank_from_singular_values(svals, rel_threshold)
