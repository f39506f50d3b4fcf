"""Interesting paths, blue-interior distances, and the per-level length table.

An *interesting path* for budget L starts at a Red vertex, ends at a Red
vertex, and passes through exactly L+1 Red vertices (endpoints included).
A mark set is feasible for L exactly when every interesting path has at
least one marked vertex among its non-final vertices; this is the covering
view of feasibility that the LP relaxation optimizes over.

Given fractional vertex weights x, the *length* of a path is the sum of
x over its non-final vertices.  lengths[i][v] is the least length of a path
that starts Red, ends at v, and visits exactly i Red vertices (counting Red
endpoints); +inf when no such path exists.  The table is filled level by
level: Red entries extend a level-(i-1) entry across one edge, Blue entries
chain from a level-i Red entry through Blue interior vertices, which is the
same minimum as composing with the blue-interior distance table because that
distance already collapses Blue chains.  Within one level Blue vertices are
resolved in topological order so chained Blue values are final before use.
"""

from __future__ import annotations

import math
from collections.abc import Sequence, Set
from functools import cached_property

import numpy as np

from .circuit import Circuit, Color, require_level
from .errors import CapExceeded

DEFAULT_PATH_CAP = 1_000_000
VIOLATION_TOL = 1e-7


def _iter_interesting_paths(circuit: Circuit, level: int, cap: int):
    """Yield interesting paths as vertex-id tuples, lexicographically.

    Parallel edges do not duplicate paths: a path is its vertex sequence.
    Raises CapExceeded once more than `cap` paths have been produced.
    """
    require_level(level)
    target = level + 1
    colors = circuit.colors
    succs = circuit.succs
    produced = 0
    # Iterative DFS; successors ascend, so emission order is lexicographic.
    for start in circuit.red_vertices:
        path = [start]
        reds = [1]
        iters = [iter(succs[start])]
        while iters:
            try:
                w = next(iters[-1])
            except StopIteration:
                iters.pop()
                path.pop()
                reds.pop()
                continue
            count = reds[-1] + (1 if colors[w] is Color.RED else 0)
            if colors[w] is Color.RED and count == target:
                produced += 1
                if produced > cap:
                    raise CapExceeded(f"more than {cap} interesting paths")
                yield tuple(path) + (w,)
                continue
            if count <= level:
                path.append(w)
                reds.append(count)
                iters.append(iter(succs[w]))


def enumerate_interesting_paths(
    circuit: Circuit, level: int, cap: int = DEFAULT_PATH_CAP
) -> list[tuple[int, ...]]:
    return list(_iter_interesting_paths(circuit, level, cap))


def is_interesting_path(circuit: Circuit, path: Sequence[int], level: int) -> bool:
    """Predicate form of the definition; used by tests and assertions."""
    require_level(level)
    if not path:
        return False
    if circuit.colors[path[0]] is not Color.RED or circuit.colors[path[-1]] is not Color.RED:
        return False
    for u, w in zip(path, path[1:]):
        if w not in circuit.succs[u]:
            return False
    reds = sum(1 for v in path if circuit.colors[v] is Color.RED)
    return reds == level + 1


def is_feasible_by_paths(
    circuit: Circuit, marks: Set[int], level: int, cap: int = DEFAULT_PATH_CAP
) -> bool:
    """Covering view of feasibility: every interesting path must carry a
    marked non-final vertex.  Equivalent to the level recursion check."""
    s = frozenset(marks)
    for path in _iter_interesting_paths(circuit, level, cap):
        if not any(v in s for v in path[:-1]):
            return False
    return True


def blue_distances(circuit: Circuit, weights: Sequence[float]) -> dict[int, dict[int, float]]:
    """Least weight of a Red-to-Blue path whose interior is all Blue.

    Returned as {red u: {blue v: distance}}; the distance counts x over every
    vertex of the path except the final one (so a direct edge costs x_u).
    Pairs with no such path are absent (conceptually +inf).
    """
    colors = circuit.colors
    succs = circuit.succs
    out: dict[int, dict[int, float]] = {}
    for u in circuit.red_vertices:
        dist: dict[int, float] = {}
        xu = float(weights[u])
        for w in succs[u]:
            if colors[w] is Color.BLUE:
                dist[w] = xu
        if dist:
            for v in circuit.topo:
                dv = dist.get(v)
                if dv is None:
                    continue
                step = dv + float(weights[v])
                for w in succs[v]:
                    if colors[w] is Color.BLUE and step < dist.get(w, math.inf):
                        dist[w] = step
        out[u] = dist
    return out


class LevelTables:
    """Per-level minimum path lengths plus backtracking parents.

    lengths[i][v] for i in 1..budget+1 (index 0 unused); parents[i][v] is the
    chosen predecessor vertex, -1 at a path start or where no path exists.
    weights is the x vector the table was computed against.
    """

    def __init__(
        self,
        circuit: Circuit,
        budget: int,
        weights: list[float],
        lengths: list[list[float]],
        parents: list[list[int]],
    ):
        self.circuit = circuit
        self.budget = budget
        self.weights = weights
        self.lengths = lengths
        self.parents = parents

    @cached_property
    def blue_distances(self) -> dict[int, dict[int, float]]:
        # Lazy: only small-instance consistency checks ever need the full table.
        return blue_distances(self.circuit, self.weights)

    @cached_property
    def length_matrix(self) -> np.ndarray:
        return np.asarray(self.lengths, dtype=float)

    @cached_property
    def weight_row(self) -> np.ndarray:
        return np.asarray(self.weights, dtype=float)


def level_lengths(circuit: Circuit, level: int, weights: Sequence[float]) -> LevelTables:
    """Fill the length table for levels 1..level+1 under the given weights.

    Ties between predecessor choices break toward the lowest vertex id, which
    keeps extracted paths deterministic.
    """
    require_level(level)
    n = circuit.n
    if len(weights) != n:
        raise ValueError("weights must assign a value to every vertex")
    x = [float(w) for w in weights]
    colors = circuit.colors
    preds = circuit.preds
    topo = circuit.topo
    inf = math.inf

    lengths = [[inf] * n for _ in range(level + 2)]
    parents = [[-1] * n for _ in range(level + 2)]

    for i in range(1, level + 2):
        row = lengths[i]
        par = parents[i]
        if i == 1:
            for v in circuit.red_vertices:
                row[v] = 0.0
        else:
            prev = lengths[i - 1]
            for v in circuit.red_vertices:
                best = inf
                best_u = -1
                for u in preds[v]:
                    cand = prev[u] + x[u]
                    if cand < best:
                        best = cand
                        best_u = u
                row[v] = best
                par[v] = best_u
        # Blue entries chain off this level's Red entries; topological order
        # makes Blue-to-Blue propagation exact in one sweep.
        for v in topo:
            if colors[v] is not Color.BLUE:
                continue
            best = inf
            best_u = -1
            for u in preds[v]:
                if colors[u] is Color.WHITE:
                    continue
                cand = row[u] + x[u]
                if cand < best:
                    best = cand
                    best_u = u
            row[v] = best
            par[v] = best_u

    return LevelTables(circuit, level, x, lengths, parents)


def backtrack_interesting_path(tables: LevelTables, final: int) -> tuple[int, ...]:
    """Reconstruct the minimum-length interesting path ending at a Red final.

    Requires lengths[budget+1][final] to be finite.
    """
    circuit = tables.circuit
    i = tables.budget + 1
    if not math.isfinite(tables.lengths[i][final]):
        raise ValueError(f"no interesting path ends at vertex {final}")
    v = final
    rev = [v]
    while not (i == 1 and circuit.colors[v] is Color.RED):
        u = tables.parents[i][v]
        if u < 0:
            raise AssertionError("broken parent chain in level table")
        if circuit.colors[v] is Color.RED:
            i -= 1
        v = u
        rev.append(v)
    rev.reverse()
    return tuple(rev)


def extract_violated_path(
    tables: LevelTables, circuit: Circuit, level: int, tol: float = VIOLATION_TOL
) -> tuple[int, ...] | None:
    """Most-violated interesting path at the table's weights, if any.

    A Red final v with lengths[level+1][v] < 1 - tol witnesses a violated
    covering constraint; ties break toward the lowest final id.
    """
    require_level(level)
    if level != tables.budget:
        raise ValueError("tables were computed for a different budget")
    row = tables.lengths[level + 1]
    best_v = -1
    best = 1.0 - tol
    for v in circuit.red_vertices:
        if row[v] < best:
            best = row[v]
            best_v = v
    if best_v < 0:
        return None
    return backtrack_interesting_path(tables, best_v)
