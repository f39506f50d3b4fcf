"""Covering LP relaxation solved by row generation.

The full LP has one constraint per interesting path (sum of x over the
path's non-final vertices >= 1, x in [0,1], minimize sum x) and there can be
exponentially many paths, so constraints are generated lazily: solve a
restricted master over the rows found so far, run the level-length table as
a separation oracle, and add one most-violated row per Red final vertex that
still has lengths[L+1] < 1 - tol.  Termination: the master satisfies every
added row, a violated row is never already present, and there are finitely
many rows.  The final weights certify feasibility of the relaxation because
the same table that would expose a violation comes back clean.

The master is solved by a dense bounded-variable primal simplex with Bland's
anti-cycling rule.  Explicit [0,1] bounds on the structural variables avoid
big-M rows, and starting every structural variable at its upper bound makes
the all-surplus basis feasible, so no phase-1 is needed.  Variables outside
every row are never entered into the master; they are 0 at any optimum.
"""

from __future__ import annotations

import math
from collections.abc import Sequence, Set
from dataclasses import dataclass
from typing import TextIO

import numpy as np

from .circuit import Circuit, require_level
from .errors import IterationLimitExceeded, NumericalFailure
from .paths import VIOLATION_TOL, backtrack_interesting_path, level_lengths

PIVOT_TOL = 1e-12
_REDCOST_TOL = 1e-9

_AT_LOWER = 0
_AT_UPPER = 1
_BASIC = 2


@dataclass(frozen=True)
class LpResult:
    weights: list[float]
    objective: float
    constraints_generated: int
    iterations: int
    rows: tuple[frozenset[int], ...]


def _solve_covering_lp(a: np.ndarray) -> tuple[np.ndarray, float]:
    """min 1'y  s.t.  A y >= 1,  0 <= y <= 1, for a dense 0/1 matrix A.

    Bounded-variable primal simplex on the tableau [A | -I] y,s = 1.  The
    initial basis is the surplus block with every structural variable at its
    upper bound, which is feasible because every row is nonempty.
    """
    m, k = a.shape
    ncols = k + m
    tableau = np.hstack([-a, np.eye(m)])
    upper = np.concatenate([np.ones(k), np.full(m, np.inf)])
    cost = np.concatenate([np.ones(k), np.zeros(m)])
    status = np.concatenate(
        [np.full(k, _AT_UPPER, dtype=np.int8), np.full(m, _BASIC, dtype=np.int8)]
    )
    basis = np.arange(k, k + m)
    xb = a.sum(axis=1) - 1.0
    if (xb < -PIVOT_TOL).any():
        raise NumericalFailure("initial covering basis infeasible (empty row?)")

    # The reduced-cost row starts at `cost` (surplus basis prices to zero)
    # and is updated in place by every pivot, like one more tableau row.
    reduced = cost.copy()
    limit = 200 * (m + ncols) + 1000
    for _ in range(limit):
        eligible = ((status == _AT_LOWER) & (reduced < -_REDCOST_TOL)) | (
            (status == _AT_UPPER) & (reduced > _REDCOST_TOL)
        )
        candidates = np.flatnonzero(eligible)
        if candidates.size == 0:
            break
        j = int(candidates[0])  # Bland: smallest index enters
        direction = 1.0 if status[j] == _AT_LOWER else -1.0
        step_col = direction * tableau[:, j]

        with np.errstate(divide="ignore", invalid="ignore"):
            ratios = np.full(m, np.inf)
            dec = step_col > PIVOT_TOL
            ratios[dec] = xb[dec] / step_col[dec]
            inc = step_col < -PIVOT_TOL
            room = upper[basis[inc]] - xb[inc]
            ratios[inc] = room / -step_col[inc]
        row_limit = ratios.min() if m else math.inf
        bound_limit = upper[j]

        if bound_limit <= row_limit:
            if not math.isfinite(bound_limit):
                raise NumericalFailure("unbounded direction in covering LP")
            # Bound flip: variable crosses to its other bound, basis unchanged.
            xb = xb - bound_limit * step_col
            status[j] = _AT_LOWER if status[j] == _AT_UPPER else _AT_UPPER
            continue

        tie_rows = np.flatnonzero(ratios <= row_limit)
        r = int(tie_rows[np.argmin(basis[tie_rows])])  # Bland: smallest leaving index
        pivot = tableau[r, j]
        if abs(pivot) < PIVOT_TOL:
            raise NumericalFailure(f"pivot magnitude {abs(pivot):.3e} below tolerance")

        entering_value = (0.0 + row_limit) if direction > 0 else (upper[j] - row_limit)
        leaving = int(basis[r])
        xb = xb - row_limit * step_col
        status[leaving] = _AT_LOWER if step_col[r] > 0 else _AT_UPPER
        pivot_row = tableau[r] / pivot
        col = tableau[:, j].copy()
        tableau -= np.outer(col, pivot_row)
        tableau[r] = pivot_row
        reduced -= reduced[j] * pivot_row
        basis[r] = j
        status[j] = _BASIC
        xb[r] = entering_value
    else:
        raise NumericalFailure("simplex iteration limit hit")

    z = np.zeros(ncols)
    at_upper = status == _AT_UPPER
    z[at_upper] = upper[at_upper]
    z[basis] = xb
    x = np.clip(z[:k], 0.0, 1.0)
    return x, float(x.sum())


def solve_restricted_master(n: int, rows: Sequence[Set[int]]) -> tuple[list[float], float]:
    """Optimal fractional weights for the current row set.

    Returns a full-length weight vector (vertices outside every row get 0)
    and the objective, which equals the weight sum.
    """
    if not rows:
        return [0.0] * n, 0.0
    row_sets = [frozenset(r) for r in rows]
    for r in row_sets:
        if not r:
            raise ValueError("covering rows must be nonempty")
        for v in r:
            if not 0 <= v < n:
                raise ValueError(f"row references vertex {v} outside 0..{n - 1}")
    active = sorted(set().union(*row_sets))
    col = {v: i for i, v in enumerate(active)}
    a = np.zeros((len(row_sets), len(active)))
    for i, r in enumerate(row_sets):
        for v in r:
            a[i, col[v]] = 1.0
    y, objective = _solve_covering_lp(a)
    weights = [0.0] * n
    for v, i in col.items():
        weights[v] = float(y[i])
    return weights, objective


def solve_relaxation(
    circuit: Circuit,
    level: int,
    *,
    tol: float = VIOLATION_TOL,
    max_iterations: int | None = None,
    trace: TextIO | None = None,
) -> LpResult:
    """Row generation until no interesting-path constraint is violated.

    Each iteration solves the master, recomputes the length table at the new
    weights, and adds the most-violated row for every Red final below
    1 - tol (deduplicated).  `trace`, when given, receives one tab-separated
    line per iteration: index, objective, rows added.
    """
    require_level(level)
    n = circuit.n
    if max_iterations is None:
        max_iterations = max(1, 10 * n * level)
    rows: list[frozenset[int]] = []
    seen: set[frozenset[int]] = set()
    for iteration in range(1, max_iterations + 1):
        weights, objective = solve_restricted_master(n, rows)
        tables = level_lengths(circuit, level, weights)
        final_row = tables.lengths[level + 1]
        added = 0
        for v in circuit.red_vertices:
            if final_row[v] < 1.0 - tol:
                row = frozenset(backtrack_interesting_path(tables, v)[:-1])
                if row not in seen:
                    seen.add(row)
                    rows.append(row)
                    added += 1
        if trace is not None:
            trace.write(f"{iteration}\t{objective:.9f}\t{added}\n")
        if added == 0:
            if any(final_row[v] < 1.0 - tol for v in circuit.red_vertices):
                raise NumericalFailure(
                    "separation found a violated row already present in the master"
                )
            return LpResult(
                weights=weights,
                objective=objective,
                constraints_generated=len(rows),
                iterations=iteration,
                rows=tuple(rows),
            )
    raise IterationLimitExceeded(
        f"row generation exceeded {max_iterations} iterations"
    )
