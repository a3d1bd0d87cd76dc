"""Convex-hull membership by phase-I simplex.

Decides whether a target vector is a convex combination of finitely many
points and returns the weights.  Constraints are sum_j t_j v_j = target
and sum_j t_j = 1 with t >= 0; artificial variables are driven to zero by
a phase-I simplex with Bland's rule for anti-cycling.  Problem sizes here
are tiny, so plain dense tableau arithmetic with row scaling suffices.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DimensionMismatch

DEFAULT_TOL = 1e-9


@dataclass(frozen=True)
class HullProblem:
    points: tuple  # m real vectors of dimension k
    target: tuple  # real vector of dimension k
    tolerance: float = DEFAULT_TOL

    def __post_init__(self):
        pts = np.atleast_2d(np.asarray(self.points, dtype=float))
        tgt = np.asarray(self.target, dtype=float).reshape(-1)
        if pts.shape[0] < 1:
            raise DimensionMismatch("need at least one point")
        if pts.shape[1] != tgt.shape[0]:
            raise DimensionMismatch("points and target dimensions differ")
        if not (self.tolerance > 0):
            raise ValueError("tolerance must be positive")
        object.__setattr__(self, "points", pts)
        object.__setattr__(self, "target", tgt)


@dataclass(frozen=True)
class HullResult:
    feasible: bool
    weights: np.ndarray | None


def hull_membership(prob: HullProblem) -> HullResult:
    pts = prob.points
    tgt = prob.target
    m, k = pts.shape

    # rows: k equality constraints plus the convexity row
    A = np.vstack([pts.T, np.ones((1, m))])
    b = np.concatenate([tgt, [1.0]])

    # partial scaling: divide each constraint row by its max-abs entry
    for i in range(k + 1):
        scale = max(np.max(np.abs(A[i])), abs(b[i]))
        if scale > 0:
            A[i] /= scale
            b[i] /= scale
    # make the right-hand side nonnegative so artificials start feasible
    neg = b < 0
    A[neg] *= -1.0
    b[neg] *= -1.0

    rows = k + 1
    # tableau over variables [t_1..t_m, a_1..a_rows]
    tab = np.hstack([A, np.eye(rows)])
    basis = list(range(m, m + rows))
    rhs = b.copy()

    # phase-I objective: minimize the sum of artificials
    cost = np.concatenate([np.zeros(m), np.ones(rows)])

    pivot_tol = 1e-11
    max_pivots = 50 * (m + rows)
    for _ in range(max_pivots):
        # reduced costs under the current basis
        cb = cost[basis]
        reduced = cost - cb @ tab
        # Bland's rule: entering = smallest index with negative reduced cost
        entering = -1
        for j in range(m + rows):
            if reduced[j] < -pivot_tol:
                entering = j
                break
        if entering < 0:
            break
        col = tab[:, entering]
        # ratio test, ties broken by smallest basis index (Bland)
        leaving = -1
        best = np.inf
        for i in range(rows):
            if col[i] > pivot_tol:
                ratio = rhs[i] / col[i]
                if ratio < best - 1e-15 or (
                    abs(ratio - best) <= 1e-15 and (leaving < 0 or basis[i] < basis[leaving])
                ):
                    best = ratio
                    leaving = i
        if leaving < 0:
            # unbounded phase-I cannot happen with artificials; bail out
            break
        piv = tab[leaving, entering]
        tab[leaving] /= piv
        rhs[leaving] /= piv
        for i in range(rows):
            if i != leaving and abs(tab[i, entering]) > 0:
                factor = tab[i, entering]
                tab[i] -= factor * tab[leaving]
                rhs[i] -= factor * rhs[leaving]
        basis[leaving] = entering

    objective = float(sum(rhs[i] for i in range(rows) if basis[i] >= m))
    if objective > prob.tolerance:
        return HullResult(feasible=False, weights=None)

    weights = np.zeros(m)
    for i in range(rows):
        if basis[i] < m:
            weights[basis[i]] = rhs[i]
    weights = np.clip(weights, 0.0, None)
    total = weights.sum()
    if total <= 0:
        return HullResult(feasible=False, weights=None)
    weights /= total
    # re-substitution check against the original, unscaled data
    if np.max(np.abs(pts.T @ weights - tgt)) > prob.tolerance * max(1.0, float(np.max(np.abs(pts)))):
        return HullResult(feasible=False, weights=None)
    return HullResult(feasible=True, weights=weights)
