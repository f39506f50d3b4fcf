"""DAG vertex deletion (DVD) instances and the reduction to bootstrapping.

DVD asks for a minimum set of vertices whose removal leaves no directed path
with L vertices (L >= 2).  The reduction maps an instance H to a circuit G
whose minimum bootstrap sets have the same size:

  * every original vertex becomes Red and keeps its id;
  * a White source s0 pads originals with fewer than two in-edges up to
    indegree exactly 2;
  * an original with indegree d >= 3 has its in-edges replaced by a Blue
    chain w_1..w_d (predecessors taken in ascending id order): a double edge
    from the first predecessor into w_1, single edges (w_{i-1}, w_i) and
    (v_i, w_i) for i >= 2, and a double edge (w_d, v);
  * every original v gains a Red clone v' fed by a double edge (v, v').

Clones force one extra Red step after each original, so a path of L
originals extends to an interesting path for budget L, and Blue gadget
vertices never help a mark set more than their owning original does, which
is what pull_back exploits.
"""

from __future__ import annotations

import heapq
from collections.abc import Iterable, Mapping, Set
from dataclasses import dataclass
from functools import cached_property

from .circuit import Circuit, Color, is_feasible_by_levels, validate
from .errors import CycleDetected, InfeasibleInput, UnknownVertex


@dataclass(frozen=True)
class DvdInstance:
    """Validated DVD instance; build through :func:`validate_dvd`."""

    edges: tuple[tuple[int, int], ...]
    level: int
    topo: tuple[int, ...]
    preds: tuple[tuple[int, ...], ...]
    succs: tuple[tuple[int, ...], ...]
    names: tuple[str, ...] | None = None

    @property
    def n(self) -> int:
        return len(self.topo)

    def name_of(self, v: int) -> str:
        if self.names is not None:
            return self.names[v]
        return f"v{v}"


def validate_dvd(
    n: int,
    raw_edges: Iterable[tuple[int, int]],
    level: int,
    names: Iterable[str] | None = None,
) -> DvdInstance:
    """Simple-graph DAG over ids 0..n-1; duplicate edges collapse."""
    if not isinstance(level, int) or isinstance(level, bool) or level < 2:
        raise ValueError(f"DVD level must be an integer >= 2, got {level!r}")
    edge_set: set[tuple[int, int]] = set()
    for src, dst in raw_edges:
        for endpoint in (src, dst):
            if not isinstance(endpoint, int) or endpoint < 0 or endpoint >= n:
                raise UnknownVertex(endpoint)
        edge_set.add((src, dst))

    name_tuple = None
    if names is not None:
        name_tuple = tuple(names)
        if len(name_tuple) != n:
            raise ValueError("names must cover every vertex")

    pred_sets: list[set[int]] = [set() for _ in range(n)]
    succ_sets: list[set[int]] = [set() for _ in range(n)]
    for src, dst in edge_set:
        pred_sets[dst].add(src)
        succ_sets[src].add(dst)
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
        raise CycleDetected("deletion instance contains a cycle")

    return DvdInstance(
        edges=tuple(sorted(edge_set)),
        level=level,
        topo=tuple(topo),
        preds=tuple(tuple(sorted(s)) for s in pred_sets),
        succs=tuple(tuple(sorted(s)) for s in succ_sets),
        names=name_tuple,
    )


@dataclass(frozen=True, eq=False)
class ReductionMap:
    """Reduced circuit plus the provenance of every auxiliary vertex.

    clone_of[v] is the clone id of original v; gadget_of maps an original
    with gadget to its Blue chain ids in order; source is the White s0 id.
    Original vertices keep their ids, so mark sets over H embed directly.
    """

    circuit: Circuit
    dvd: DvdInstance
    source: int
    clone_of: tuple[int, ...]
    gadget_of: Mapping[int, tuple[int, ...]]

    @cached_property
    def gadget_owner(self) -> dict[int, int]:
        return {w: v for v, chain in self.gadget_of.items() for w in chain}


def _fresh_name(base: str, used: set[str]) -> str:
    name = base
    while name in used:
        name += "_"
    used.add(name)
    return name


def reduce_to_circuit(instance: DvdInstance) -> ReductionMap:
    """Build the bootstrap circuit whose optimum equals the DVD optimum."""
    m = instance.n
    used = {instance.name_of(v) for v in range(m)}
    names = [instance.name_of(v) for v in range(m)]
    colors: list[Color] = [Color.RED] * m

    def new_vertex(color: Color, base: str) -> int:
        vid = len(colors)
        colors.append(color)
        names.append(_fresh_name(base, used))
        return vid

    source = new_vertex(Color.WHITE, "s0")
    clone_of = tuple(new_vertex(Color.RED, f"clone({names[v]})") for v in range(m))

    edges: list[tuple[int, int, int]] = []
    gadget_of: dict[int, tuple[int, ...]] = {}
    for v in range(m):
        incoming = instance.preds[v]
        d = len(incoming)
        if d <= 2:
            for u in incoming:
                edges.append((u, v, 1))
            if d < 2:
                edges.append((source, v, 2 - d))
        else:
            chain = []
            for i, u in enumerate(incoming):
                w = new_vertex(Color.BLUE, f"w{i + 1}({names[v]})")
                if i == 0:
                    edges.append((u, w, 2))
                else:
                    edges.append((chain[-1], w, 1))
                    edges.append((u, w, 1))
                chain.append(w)
            edges.append((chain[-1], v, 2))
            gadget_of[v] = tuple(chain)
        edges.append((v, clone_of[v], 2))

    circuit = validate(list(enumerate(colors)), edges, names=names)
    return ReductionMap(
        circuit=circuit,
        dvd=instance,
        source=source,
        clone_of=clone_of,
        gadget_of=gadget_of,
    )


def pull_back(rmap: ReductionMap, marks: Set[int]) -> frozenset[int]:
    """Deletion set from a feasible mark set, never larger.

    Marked Blue gadget vertices are relocated onto their owning original one
    at a time (each single relocation preserves feasibility); everything
    outside the original vertex set is then dropped.
    """
    if not is_feasible_by_levels(rmap.circuit, marks, rmap.dvd.level):
        raise InfeasibleInput("mark set is not feasible for the reduced circuit")
    owner = rmap.gadget_owner
    current = set(marks)
    while True:
        gadget_marks = sorted(w for w in current if w in owner)
        if not gadget_marks:
            break
        w = gadget_marks[0]
        current.discard(w)
        current.add(owner[w])
    return frozenset(v for v in current if v < rmap.dvd.n)


def push_forward(rmap: ReductionMap, deleted: Set[int]) -> frozenset[int]:
    """Mark set from a feasible deletion set; ids coincide on originals."""
    from .exact import dvd_is_feasible

    if not dvd_is_feasible(rmap.dvd, deleted):
        raise InfeasibleInput("deletion set is not feasible for the DVD instance")
    return frozenset(deleted)
