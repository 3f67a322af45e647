"""Pareto dominance, fast non-dominated sorting, and crowding distance.

Everything here minimizes. The sort uses the O(n_objectives * n^2)
domination-count scheme; fronts preserve the original index order, so the
partition is deterministic for a given input order.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import InvalidInputError, InvalidStateError
from .problems import Solution


def dominates(a, b) -> bool:
    """True iff objective vector ``a`` Pareto-dominates ``b``: no worse in
    every objective and strictly better in at least one."""
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    if a.shape != b.shape:
        raise InvalidInputError(f"objective vectors differ in length: {a.shape} vs {b.shape}")
    return bool(np.all(a <= b) and np.any(a < b))


def domination_matrix(points: np.ndarray) -> np.ndarray:
    """Boolean matrix D with D[i, j] true iff point i dominates point j."""
    F = np.asarray(points, dtype=float)
    le = np.all(F[:, None, :] <= F[None, :, :], axis=2)
    lt = np.any(F[:, None, :] < F[None, :, :], axis=2)
    return le & lt


@dataclass(frozen=True)
class FrontPartition:
    """Ordered fronts of input indices; front 0 is the non-dominated set."""

    fronts: tuple[tuple[int, ...], ...]

    def rank_of(self) -> np.ndarray:
        n = sum(len(f) for f in self.fronts)
        ranks = np.empty(n, dtype=int)
        for r, front in enumerate(self.fronts):
            ranks[list(front)] = r
        return ranks


def non_dominated_sort(points) -> FrontPartition:
    """Partition objective vectors into ranked non-dominated fronts."""
    F = np.asarray(points, dtype=float)
    if F.ndim != 2 or F.shape[0] == 0:
        raise InvalidInputError("non_dominated_sort needs a non-empty list of objective vectors")
    D = domination_matrix(F)
    counts = D.sum(axis=0).astype(int)
    fronts: list[tuple[int, ...]] = []
    current = np.flatnonzero(counts == 0)
    while current.size:
        fronts.append(tuple(int(i) for i in current))
        counts = counts - D[current].sum(axis=0)
        counts[current] = -1
        current = np.flatnonzero(counts == 0)
    return FrontPartition(fronts=tuple(fronts))


def crowding_distance(front) -> np.ndarray:
    """NSGA-II crowding distance over one front of objective vectors.

    Boundary solutions per objective get +inf; interior solutions sum the
    normalized gap between their neighbours per objective. Zero-range
    objectives contribute 0, and fronts of size <= 2 are all +inf.
    """
    F = np.asarray(front, dtype=float)
    if F.ndim != 2 or F.shape[0] == 0:
        raise InvalidInputError("crowding_distance needs a non-empty front")
    n, m = F.shape
    if n <= 2:
        return np.full(n, np.inf)
    dist = np.zeros(n)
    for k in range(m):
        order = np.argsort(F[:, k], kind="stable")
        col = F[order, k]
        span = col[-1] - col[0]
        dist[order[0]] = np.inf
        dist[order[-1]] = np.inf
        if span > 0:
            dist[order[1:-1]] += (col[2:] - col[:-2]) / span
    return dist


def crowded_compare(a: Solution, b: Solution, index_a: int = 0, index_b: int = 1) -> int:
    """Crowded-comparison: negative if ``a`` precedes ``b``.

    Lower rank wins; equal ranks prefer the larger crowding distance; exact
    ties fall back to the original index so orderings stay deterministic.
    """
    for sol in (a, b):
        if sol.rank is None or sol.crowding is None:
            raise InvalidStateError("crowded_compare needs rank and crowding to be set")
    if a.rank != b.rank:
        return -1 if a.rank < b.rank else 1
    if a.crowding != b.crowding:
        return -1 if a.crowding > b.crowding else 1
    return -1 if index_a < index_b else 1


def rank_and_crowd(solutions: Sequence[Solution]) -> FrontPartition:
    """Assign rank and (per-front) crowding distance to every solution."""
    F = np.array([s.f for s in solutions], dtype=float)
    partition = non_dominated_sort(F)
    for r, front in enumerate(partition.fronts):
        idx = list(front)
        crowd = crowding_distance(F[idx])
        for pos, i in enumerate(idx):
            solutions[i].rank = r
            solutions[i].crowding = float(crowd[pos])
    return partition


def crowded_order(solutions: Sequence[Solution]) -> list[int]:
    """Indices sorted by the crowded comparison (rank, then crowding, then
    original index). Requires rank/crowding to be set."""
    for s in solutions:
        if s.rank is None or s.crowding is None:
            raise InvalidStateError("crowded_order needs rank and crowding to be set")
    return sorted(range(len(solutions)), key=lambda i: (solutions[i].rank, -solutions[i].crowding, i))


def environmental_selection(
    solutions: Sequence[Solution], partition: FrontPartition, k: int
) -> list[Solution]:
    """Keep the best ``k`` solutions: whole fronts while they fit, then the
    overflowing front by descending crowding distance."""
    chosen: list[int] = []
    for front in partition.fronts:
        if len(chosen) + len(front) <= k:
            chosen.extend(front)
            continue
        crowd = np.array([solutions[i].crowding for i in front])
        order = np.argsort(-crowd, kind="stable")
        need = k - len(chosen)
        chosen.extend(front[j] for j in order[:need])
        break
    return [solutions[i] for i in chosen]
