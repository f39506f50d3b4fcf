"""Gate-circuit model and the noise-level recursion.

A circuit is a DAG with parallel edges allowed.  Colors encode gate kinds:
White vertices are inputs (indegree 0), Blue and Red vertices are gates with
indegree exactly 2 counting multiplicity.  Red gates are the noise-expensive
ones.  Given a set of marked (bootstrapped) vertices S, noise levels follow

    level(v) = 0                                        v White
    level(v) = max over in-edges (u,v) of masked(u)     v Blue
    level(v) = that max + 1                             v Red

where masked(u) = 0 if u is in S else level(u).  Marking a vertex resets its
contribution to successors only; its own level is unchanged.  A mark set is
feasible for budget L when every level stays <= L.

Vertex ids are dense integers 0..n-1.  Circuits are immutable after
construction and safe to share between threads.
"""

from __future__ import annotations

import heapq
from collections.abc import Iterable, Set
from dataclasses import dataclass
from enum import Enum
from functools import cached_property

from .errors import CycleDetected, IndegreeViolation, UnknownVertex

MarkSet = frozenset[int]


class Color(Enum):
    WHITE = "white"
    BLUE = "blue"
    RED = "red"


@dataclass(frozen=True)
class Circuit:
    """Validated circuit.  Build instances through :func:`validate`.

    colors[v] is the color of vertex v; edges holds (src, dst, multiplicity)
    sorted by endpoint; topo is a topological order of all ids; preds/succs
    list unique neighbor ids in ascending order (multiplicity collapsed).
    """

    colors: tuple[Color, ...]
    edges: tuple[tuple[int, int, int], ...]
    topo: tuple[int, ...]
    preds: tuple[tuple[int, ...], ...]
    succs: tuple[tuple[int, ...], ...]
    names: tuple[str, ...] | None = None

    @property
    def n(self) -> int:
        return len(self.colors)

    @cached_property
    def edge_count(self) -> int:
        """Number of edges counted with multiplicity."""
        return sum(m for _, _, m in self.edges)

    @cached_property
    def red_vertices(self) -> tuple[int, ...]:
        return tuple(v for v in range(self.n) if self.colors[v] is Color.RED)

    @cached_property
    def blue_vertices(self) -> tuple[int, ...]:
        return tuple(v for v in range(self.n) if self.colors[v] is Color.BLUE)

    @cached_property
    def white_vertices(self) -> tuple[int, ...]:
        return tuple(v for v in range(self.n) if self.colors[v] is Color.WHITE)

    def name_of(self, v: int) -> str:
        if self.names is not None:
            return self.names[v]
        return f"v{v}"


def require_level(level: int) -> None:
    """Noise budgets are integers >= 1; L = 0 is rejected at the boundary."""
    if not isinstance(level, int) or isinstance(level, bool) or level < 1:
        raise ValueError(f"noise budget must be an integer >= 1, got {level!r}")


def validate(
    raw_vertices: Iterable[tuple[int, Color]],
    raw_edges: Iterable[tuple[int, ...]],
    names: Iterable[str] | None = None,
) -> Circuit:
    """Check structure and build an immutable Circuit.

    raw_vertices yields (id, color) pairs whose ids must form 0..n-1; raw_edges
    yields (src, dst) or (src, dst, multiplicity) with multiplicity >= 1 and
    parallel occurrences aggregated.  Raises UnknownVertex for dangling edge
    endpoints, IndegreeViolation when a color's indegree rule fails (White: 0,
    Blue/Red: exactly 2 counting multiplicity), and CycleDetected when the
    graph is not acyclic.  The returned topological order is recomputed, so
    input order does not matter.
    """
    pairs = list(raw_vertices)
    n = len(pairs)
    colors: list[Color | None] = [None] * n
    for vid, color in pairs:
        if not isinstance(vid, int) or vid < 0 or vid >= n:
            raise ValueError(f"vertex ids must be dense integers 0..{n - 1}, got {vid!r}")
        if colors[vid] is not None:
            raise ValueError(f"duplicate vertex id {vid}")
        if not isinstance(color, Color):
            raise ValueError(f"bad color for vertex {vid}: {color!r}")
        colors[vid] = color

    name_tuple: tuple[str, ...] | None = None
    if names is not None:
        name_tuple = tuple(names)
        if len(name_tuple) != n:
            raise ValueError("names must cover every vertex")

    mult: dict[tuple[int, int], int] = {}
    for e in raw_edges:
        if len(e) == 2:
            src, dst = e
            m = 1
        elif len(e) == 3:
            src, dst, m = e
        else:
            raise ValueError(f"edges are (src, dst) or (src, dst, multiplicity), got {e!r}")
        for endpoint in (src, dst):
            if not isinstance(endpoint, int) or endpoint < 0 or endpoint >= n:
                raise UnknownVertex(endpoint)
        if not isinstance(m, int) or m < 1:
            raise ValueError(f"edge multiplicity must be an integer >= 1, got {m!r}")
        mult[(src, dst)] = mult.get((src, dst), 0) + m

    indeg = [0] * n
    for (_, dst), m in mult.items():
        indeg[dst] += m
    for v in range(n):
        expected = 0 if colors[v] is Color.WHITE else 2
        if indeg[v] != expected:
            raise IndegreeViolation(
                v, expected, indeg[v], name_tuple[v] if name_tuple else None
            )

    pred_sets: list[set[int]] = [set() for _ in range(n)]
    succ_sets: list[set[int]] = [set() for _ in range(n)]
    for src, dst in mult:
        pred_sets[dst].add(src)
        succ_sets[src].add(dst)

    # Kahn's algorithm, smallest id first, so the order is deterministic.
    remaining = [len(pred_sets[v]) for v in range(n)]
    ready = [v for v in range(n) if remaining[v] == 0]
    heapq.heapify(ready)
    topo: list[int] = []
    while ready:
        v = heapq.heappop(ready)
        topo.append(v)
        for w in succ_sets[v]:
            remaining[w] -= 1
            if remaining[w] == 0:
                heapq.heappush(ready, w)
    if len(topo) != n:
        raise CycleDetected("circuit graph contains a cycle")

    return Circuit(
        colors=tuple(colors),  # type: ignore[arg-type]
        edges=tuple(sorted((s, d, m) for (s, d), m in mult.items())),
        topo=tuple(topo),
        preds=tuple(tuple(sorted(s)) for s in pred_sets),
        succs=tuple(tuple(sorted(s)) for s in succ_sets),
        names=name_tuple,
    )


def _check_marks(circuit: Circuit, marks: Set[int]) -> frozenset[int]:
    s = frozenset(marks)
    for v in s:
        if not isinstance(v, int) or v < 0 or v >= circuit.n:
            raise UnknownVertex(v)
    return s


def eval_levels(circuit: Circuit, marks: Set[int]) -> list[int]:
    """Noise level of every vertex under the given mark set.

    Marking a White vertex is a no-op and marking any vertex never raises a
    level, so levels are antitone in the mark set.
    """
    s = _check_marks(circuit, marks)
    colors = circuit.colors
    preds = circuit.preds
    levels = [0] * circuit.n
    for v in circuit.topo:
        color = colors[v]
        if color is Color.WHITE:
            continue
        m = 0
        for u in preds[v]:
            if u not in s and levels[u] > m:
                m = levels[u]
        levels[v] = m + 1 if color is Color.RED else m
    return levels


def max_level(circuit: Circuit, marks: Set[int]) -> int:
    levels = eval_levels(circuit, marks)
    return max(levels, default=0)


def is_feasible_by_levels(circuit: Circuit, marks: Set[int], level: int) -> bool:
    """True when no vertex exceeds the noise budget under the marks."""
    require_level(level)
    return max_level(circuit, marks) <= level
