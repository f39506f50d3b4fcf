"""Deterministic instance generators.

Every generator takes a seed (or a random.Random) and produces the same
instance for the same arguments, so generated files are byte-identical
across runs.  Indegree rules are enforced by construction: non-source
vertices draw exactly two predecessors (possibly the same one twice, which
becomes a parallel edge) or have their single in-edge doubled.
"""

from __future__ import annotations

import random

from .circuit import Circuit, Color, validate
from .dvd import DvdInstance, validate_dvd


def _rng(seed: int | random.Random) -> random.Random:
    if isinstance(seed, random.Random):
        return seed
    return random.Random(seed)


def red_chain(length: int) -> Circuit:
    """One White source feeding a chain of `length` Red vertices."""
    if length < 1:
        raise ValueError("chain length must be >= 1")
    vertices = [(0, Color.WHITE)] + [(i, Color.RED) for i in range(1, length + 1)]
    edges = [(i, i + 1, 2) for i in range(length)]
    names = ["w0"] + [f"r{i}" for i in range(1, length + 1)]
    return validate(vertices, edges, names=names)


def layered(
    layers: int,
    width: int,
    red_fraction: float,
    seed: int | random.Random,
) -> Circuit:
    """`layers` rows of `width` vertices; row 0 is White input, every later
    vertex draws its two predecessors uniformly from the previous row."""
    if layers < 1 or width < 1:
        raise ValueError("layers and width must be >= 1")
    rng = _rng(seed)
    vertices: list[tuple[int, Color]] = []
    edges: list[tuple[int, int, int]] = []
    names: list[str] = []
    for layer in range(layers):
        for slot in range(width):
            vid = layer * width + slot
            if layer == 0:
                vertices.append((vid, Color.WHITE))
            else:
                color = Color.RED if rng.random() < red_fraction else Color.BLUE
                vertices.append((vid, color))
                base = (layer - 1) * width
                a = base + rng.randrange(width)
                b = base + rng.randrange(width)
                if a == b:
                    edges.append((a, vid, 2))
                else:
                    edges.append((a, vid, 1))
                    edges.append((b, vid, 1))
            names.append(f"n{layer}_{slot}")
    return validate(vertices, edges, names=names)


def series_parallel(size: int, red_fraction: float, seed: int | random.Random) -> Circuit:
    """Random two-terminal series/parallel compositions, indegrees fixed up
    by doubling single in-edges; source vertices are White."""
    if size < 2:
        raise ValueError("size must be >= 2")
    rng = _rng(seed)
    edges: list[list[int]] = []  # [src, dst], multiplicity fixed later
    node_count = 0

    def new_node() -> int:
        nonlocal node_count
        node_count += 1
        return node_count - 1

    def block(depth: int) -> tuple[int, int]:
        if node_count >= size or depth <= 0 or rng.random() < 0.25:
            u, v = new_node(), new_node()
            edges.append([u, v])
            return u, v
        if rng.random() < 0.5:
            a, b = block(depth - 1)
            c, d = block(depth - 1)
            edges.append([b, c])
            return a, d
        s, t = new_node(), new_node()
        a1, b1 = block(depth - 1)
        a2, b2 = block(depth - 1)
        edges.append([s, a1])
        edges.append([s, a2])
        edges.append([b1, t])
        edges.append([b2, t])
        return s, t

    block(12)
    indeg = [0] * node_count
    for src, dst in edges:
        indeg[dst] += 1
    final_edges: list[tuple[int, int, int]] = []
    for src, dst in edges:
        final_edges.append((src, dst, 2 if indeg[dst] == 1 else 1))
    vertices = []
    names = []
    for v in range(node_count):
        if indeg[v] == 0:
            vertices.append((v, Color.WHITE))
        else:
            vertices.append((v, Color.RED if rng.random() < red_fraction else Color.BLUE))
        names.append(f"n{v}")
    return validate(vertices, final_edges, names=names)


def random_circuit(
    n: int,
    seed: int | random.Random,
    white_fraction: float = 0.3,
    red_fraction: float = 0.5,
) -> Circuit:
    """Small random circuit: each vertex is White with probability
    `white_fraction` (vertex 0 always is), otherwise draws two predecessors
    among earlier vertices and is Red with probability `red_fraction`."""
    if n < 1:
        raise ValueError("n must be >= 1")
    rng = _rng(seed)
    vertices: list[tuple[int, Color]] = []
    edges: list[tuple[int, int, int]] = []
    for v in range(n):
        if v == 0 or rng.random() < white_fraction:
            vertices.append((v, Color.WHITE))
            continue
        color = Color.RED if rng.random() < red_fraction else Color.BLUE
        vertices.append((v, color))
        a = rng.randrange(v)
        b = rng.randrange(v)
        if a == b:
            edges.append((a, v, 2))
        else:
            edges.append((a, v, 1))
            edges.append((b, v, 1))
    return validate(vertices, edges)


def random_dvd(
    n: int,
    level: int,
    seed: int | random.Random,
    edge_probability: float = 0.3,
) -> DvdInstance:
    """Random DAG on 0..n-1 with forward edges drawn independently."""
    rng = _rng(seed)
    edges = [
        (u, v)
        for u in range(n)
        for v in range(u + 1, n)
        if rng.random() < edge_probability
    ]
    return validate_dvd(n, edges, level)
