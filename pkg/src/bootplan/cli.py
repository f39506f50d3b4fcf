"""Command-line front end.

Exit codes: 0 success (and feasible verdicts), 1 infeasible verdict,
2 usage or input errors, 3 resource caps.
"""

from __future__ import annotations

import argparse
import sys
import time
from collections import Counter
from dataclasses import dataclass, field
from pathlib import Path

from . import baselines, exact, formats, generate
from .circuit import Circuit, eval_levels, is_feasible_by_levels
from .dvd import reduce_to_circuit
from .errors import (
    BootplanError,
    CapExceeded,
    IterationLimitExceeded,
    TooLarge,
)
from .lp import solve_relaxation
from .paths import level_lengths
from .rounding import derandomized_round, randomized_round

EXIT_OK = 0
EXIT_INFEASIBLE = 1
EXIT_USAGE = 2
EXIT_RESOURCE = 3

METHODS = ("lp-round", "exact", "after-red", "greedy")


@dataclass
class RunReport:
    """Everything cmd_solve learned about one run, in printable form."""

    instance: str
    vertices: int
    edges: int
    level: int
    method: str
    cardinality: int
    seconds: float
    verified: bool
    marks: list[str]
    lp_objective: float | None = None
    exact_optimum: int | None = None
    extra: dict[str, str] = field(default_factory=dict)

    def to_text(self) -> str:
        lines = [
            f"instance: {self.instance}",
            f"vertices: {self.vertices}  edges: {self.edges}  level: {self.level}",
            f"method: {self.method}",
            f"cardinality: {self.cardinality}",
            f"time_s: {self.seconds:.3f}",
            f"verified_feasible: {'yes' if self.verified else 'no'}",
        ]
        if self.lp_objective is not None:
            lines.append(f"lp_objective: {self.lp_objective:.9f}")
        if self.exact_optimum is not None:
            lines.append(f"exact_optimum: {self.exact_optimum}")
        for key, value in self.extra.items():
            lines.append(f"{key}: {value}")
        lines.append("marks: " + " ".join(self.marks))
        return "\n".join(lines)

    def to_kv(self) -> str:
        pairs: list[tuple[str, str]] = [
            ("instance", self.instance),
            ("vertices", str(self.vertices)),
            ("edges", str(self.edges)),
            ("level", str(self.level)),
            ("method", self.method),
            ("cardinality", str(self.cardinality)),
            ("time_s", f"{self.seconds:.6f}"),
            ("verified_feasible", "yes" if self.verified else "no"),
        ]
        if self.lp_objective is not None:
            pairs.append(("lp_objective", f"{self.lp_objective:.9f}"))
        if self.exact_optimum is not None:
            pairs.append(("exact_optimum", str(self.exact_optimum)))
        pairs.extend(self.extra.items())
        pairs.append(("marks", " ".join(self.marks)))
        return "\n".join(f"{k}\t{v}" for k, v in pairs) + "\n"


def _read(path: str) -> str:
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise BootplanError(f"cannot read {path}: {exc.strerror}") from exc


def _load_circuit(path: str) -> Circuit:
    return formats.parse_circuit(_read(path), source=path)


def cmd_check(args: argparse.Namespace) -> int:
    circuit = _load_circuit(args.circuit)
    marks = formats.parse_marks(_read(args.marks), circuit, source=args.marks)
    levels = eval_levels(circuit, marks)
    histogram = Counter(levels)
    for lvl in sorted(histogram):
        print(f"level {lvl}: {histogram[lvl]} vertices")
    worst = max(levels, default=0)
    if worst <= args.level:
        print(f"feasible: max level {worst} <= {args.level}")
        return EXIT_OK
    violator = min(v for v in range(circuit.n) if levels[v] == worst)
    print(
        f"infeasible: vertex {circuit.name_of(violator)} reaches level {worst} > {args.level}"
    )
    return EXIT_INFEASIBLE


def cmd_solve(args: argparse.Namespace) -> int:
    circuit = _load_circuit(args.circuit)
    level = args.level
    report = RunReport(
        instance=Path(args.circuit).name,
        vertices=circuit.n,
        edges=circuit.edge_count,
        level=level,
        method=args.method,
        cardinality=0,
        seconds=0.0,
        verified=False,
        marks=[],
    )
    start = time.perf_counter()
    if args.method == "lp-round":
        trace_file = open(args.trace, "w") if args.trace else None
        try:
            lp = solve_relaxation(circuit, level, trace=trace_file)
        finally:
            if trace_file:
                trace_file.close()
        tables = level_lengths(circuit, level, lp.weights)
        if args.randomized:
            outcome = randomized_round(circuit, level, tables, args.seed)
            report.extra["t_used"] = f"{outcome.t_used:.9f}"
            report.extra["seed"] = str(args.seed)
        else:
            outcome = derandomized_round(circuit, level, tables)
            report.extra["t_used"] = f"{outcome.t_used:.9f}"
        marks = outcome.marks
        report.lp_objective = lp.objective
        report.extra["lp_constraints"] = str(lp.constraints_generated)
        report.extra["lp_iterations"] = str(lp.iterations)
    elif args.method == "exact":
        result = exact.exact_bootstrap(circuit, level, max_subsets=args.max_exact_subsets)
        assert result is not None  # no budget passed, search is complete
        marks = result.witness
        report.exact_optimum = result.optimum
        report.extra["subsets_explored"] = str(result.explored)
    elif args.method == "after-red":
        marks = baselines.after_every_red(circuit)
    else:
        marks = baselines.greedy_topological(circuit, level)
    report.seconds = time.perf_counter() - start
    report.cardinality = len(marks)
    report.marks = sorted(circuit.name_of(v) for v in marks)
    report.verified = is_feasible_by_levels(circuit, marks, level)

    print(report.to_text())
    if args.out:
        Path(args.out).write_text(report.to_kv())
    return EXIT_OK if report.verified else EXIT_INFEASIBLE


def cmd_reduce_dvd(args: argparse.Namespace) -> int:
    instance = formats.parse_dvd(_read(args.dvd), args.level, source=args.dvd)
    rmap = reduce_to_circuit(instance)
    circuit_text = formats.format_circuit(rmap.circuit)
    map_lines = [f"source\t{rmap.circuit.name_of(rmap.source)}"]
    for v in range(instance.n):
        map_lines.append(
            f"clone\t{instance.name_of(v)}\t{rmap.circuit.name_of(rmap.clone_of[v])}"
        )
    for v, chain in sorted(rmap.gadget_of.items()):
        joined = " ".join(rmap.circuit.name_of(w) for w in chain)
        map_lines.append(f"gadget\t{instance.name_of(v)}\t{joined}")
    map_text = "\n".join(map_lines) + "\n"
    if args.out:
        Path(args.out).write_text(circuit_text)
        map_path = args.map_out or args.out + ".map"
        Path(map_path).write_text(map_text)
    else:
        sys.stdout.write(circuit_text)
        sys.stdout.write(map_text)
    return EXIT_OK


def cmd_gen(args: argparse.Namespace) -> int:
    if args.kind == "red-chain":
        circuit = generate.red_chain(args.length)
    elif args.kind == "layered":
        circuit = generate.layered(args.layers, args.width, args.red_fraction, args.seed)
    else:
        circuit = generate.series_parallel(args.size, args.red_fraction, args.seed)
    text = formats.format_circuit(circuit)
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bootplan",
        description="Place near-minimum bootstrapping operations in gate circuits.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    check = sub.add_parser("check", help="verify a mark set against a noise budget")
    check.add_argument("circuit")
    check.add_argument("marks")
    check.add_argument("--level", type=int, required=True)

    solve = sub.add_parser("solve", help="compute a mark set")
    solve.add_argument("circuit")
    solve.add_argument("--level", type=int, required=True)
    solve.add_argument("--method", choices=METHODS, default="lp-round")
    solve.add_argument("--seed", type=int, default=0)
    solve.add_argument("--randomized", action="store_true")
    solve.add_argument("--out")
    solve.add_argument("--trace")
    solve.add_argument("--max-exact-subsets", type=int, default=exact.DEFAULT_SUBSET_CAP)

    reduce_p = sub.add_parser("reduce-dvd", help="reduce a deletion instance to a circuit")
    reduce_p.add_argument("dvd")
    reduce_p.add_argument("--level", type=int, required=True)
    reduce_p.add_argument("--out")
    reduce_p.add_argument("--map-out")

    gen = sub.add_parser("gen", help="generate a circuit file")
    gen.add_argument("--kind", choices=("layered", "series-parallel", "red-chain"), required=True)
    gen.add_argument("--seed", type=int, default=0)
    gen.add_argument("--out")
    gen.add_argument("--length", type=int, default=8, help="red-chain length")
    gen.add_argument("--layers", type=int, default=10)
    gen.add_argument("--width", type=int, default=10)
    gen.add_argument("--size", type=int, default=40, help="series-parallel target size")
    gen.add_argument("--red-fraction", type=float, default=0.5)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    handlers = {
        "check": cmd_check,
        "solve": cmd_solve,
        "reduce-dvd": cmd_reduce_dvd,
        "gen": cmd_gen,
    }
    try:
        code = handlers[args.command](args)
    except (TooLarge, CapExceeded, IterationLimitExceeded) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except (BootplanError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    return code


if __name__ == "__main__":
    sys.exit(main())
