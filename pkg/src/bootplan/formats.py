"""Line-oriented text formats for circuits, DVD instances, and mark sets.

Circuit files:
    node <name> <white|blue|red>
    edge <src> <dst> [multiplicity]
DVD files use the same layout without colors or multiplicities:
    node <name>
    edge <src> <dst>
Mark files are whitespace-separated vertex names.  '#' starts a comment in
all three formats; the noise budget L never appears in a file, it always
arrives out of band.  Vertex ids are assigned in declaration order, so
formatting then parsing reproduces the same object.
"""

from __future__ import annotations

from collections.abc import Set

from .circuit import Circuit, Color, validate
from .dvd import DvdInstance, validate_dvd
from .errors import ParseError

_COLORS = {c.value: c for c in Color}


def _lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield lineno, line.split()


def parse_circuit(text: str, source: str = "<circuit>") -> Circuit:
    names: list[str] = []
    ids: dict[str, int] = {}
    colors: list[Color] = []
    edge_lines: list[tuple[int, list[str]]] = []
    for lineno, tokens in _lines(text):
        if tokens[0] == "node":
            if len(tokens) != 3:
                raise ParseError("expected: node <name> <white|blue|red>", source, lineno)
            _, name, colorword = tokens
            if name in ids:
                raise ParseError(f"duplicate node name {name!r}", source, lineno)
            if colorword not in _COLORS:
                raise ParseError(f"unknown color {colorword!r}", source, lineno)
            ids[name] = len(names)
            names.append(name)
            colors.append(_COLORS[colorword])
        elif tokens[0] == "edge":
            edge_lines.append((lineno, tokens))
        else:
            raise ParseError(f"unknown directive {tokens[0]!r}", source, lineno)

    edges: list[tuple[int, int, int]] = []
    for lineno, tokens in edge_lines:
        if len(tokens) not in (3, 4):
            raise ParseError("expected: edge <src> <dst> [multiplicity]", source, lineno)
        for name in tokens[1:3]:
            if name not in ids:
                raise ParseError(f"edge references undeclared node {name!r}", source, lineno)
        mult = 1
        if len(tokens) == 4:
            try:
                mult = int(tokens[3])
            except ValueError:
                mult = 0
            if mult < 1:
                raise ParseError(f"bad multiplicity {tokens[3]!r}", source, lineno)
        edges.append((ids[tokens[1]], ids[tokens[2]], mult))

    return validate(list(enumerate(colors)), edges, names=names)


def format_circuit(circuit: Circuit) -> str:
    out = []
    for v in range(circuit.n):
        out.append(f"node {circuit.name_of(v)} {circuit.colors[v].value}")
    for src, dst, mult in circuit.edges:
        line = f"edge {circuit.name_of(src)} {circuit.name_of(dst)}"
        if mult != 1:
            line += f" {mult}"
        out.append(line)
    return "\n".join(out) + "\n" if out else ""


def parse_dvd(text: str, level: int, source: str = "<dvd>") -> DvdInstance:
    names: list[str] = []
    ids: dict[str, int] = {}
    edge_lines: list[tuple[int, list[str]]] = []
    for lineno, tokens in _lines(text):
        if tokens[0] == "node":
            if len(tokens) != 2:
                raise ParseError("expected: node <name>", source, lineno)
            name = tokens[1]
            if name in ids:
                raise ParseError(f"duplicate node name {name!r}", source, lineno)
            ids[name] = len(names)
            names.append(name)
        elif tokens[0] == "edge":
            edge_lines.append((lineno, tokens))
        else:
            raise ParseError(f"unknown directive {tokens[0]!r}", source, lineno)
    edges: list[tuple[int, int]] = []
    for lineno, tokens in edge_lines:
        if len(tokens) != 3:
            raise ParseError("expected: edge <src> <dst>", source, lineno)
        for name in tokens[1:3]:
            if name not in ids:
                raise ParseError(f"edge references undeclared node {name!r}", source, lineno)
        edges.append((ids[tokens[1]], ids[tokens[2]]))
    return validate_dvd(len(names), edges, level, names=names)


def format_dvd(instance: DvdInstance) -> str:
    out = [f"node {instance.name_of(v)}" for v in range(instance.n)]
    out.extend(
        f"edge {instance.name_of(src)} {instance.name_of(dst)}" for src, dst in instance.edges
    )
    return "\n".join(out) + "\n" if out else ""


def parse_marks(text: str, circuit: Circuit, source: str = "<marks>") -> frozenset[int]:
    ids = {circuit.name_of(v): v for v in range(circuit.n)}
    marks: set[int] = set()
    for lineno, tokens in _lines(text):
        for name in tokens:
            if name not in ids:
                raise ParseError(f"unknown vertex name {name!r}", source, lineno)
            marks.add(ids[name])
    return frozenset(marks)


def format_marks(circuit: Circuit, marks: Set[int]) -> str:
    names = sorted(circuit.name_of(v) for v in marks)
    return "\n".join(names) + "\n" if names else ""
