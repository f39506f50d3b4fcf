"""Near-minimum bootstrapping placement for FHE-style gate circuits.

Given a circuit DAG (White inputs, Blue gates, Red noise-expensive gates)
and a noise budget L, pick a small set of vertices to bootstrap so that no
noise level ever exceeds L.  The main pipeline is an LP relaxation over
interesting-path covering constraints, solved by row generation, followed
by level-indexed threshold rounding whose derandomized form is an
L-approximation (optimal for L = 1).  Exhaustive oracles and simple
baselines are included, as is the approximation-preserving reduction from
DAG vertex deletion.
"""

from .baselines import after_every_red, greedy_topological
from .circuit import (
    Circuit,
    Color,
    MarkSet,
    eval_levels,
    is_feasible_by_levels,
    max_level,
    validate,
)
from .dvd import DvdInstance, ReductionMap, pull_back, push_forward, reduce_to_circuit, validate_dvd
from .exact import ExactResult, dvd_is_feasible, exact_bootstrap, exact_dvd, longest_path_vertices
from .generate import layered, random_circuit, random_dvd, red_chain, series_parallel
from .lp import LpResult, solve_relaxation, solve_restricted_master
from .paths import (
    LevelTables,
    backtrack_interesting_path,
    blue_distances,
    enumerate_interesting_paths,
    extract_violated_path,
    is_feasible_by_paths,
    is_interesting_path,
    level_lengths,
)
from .rounding import (
    RoundingOutcome,
    breakpoints,
    derandomized_round,
    randomized_round,
    round_at,
)

__all__ = [
    "Circuit",
    "Color",
    "DvdInstance",
    "ExactResult",
    "LevelTables",
    "LpResult",
    "MarkSet",
    "ReductionMap",
    "RoundingOutcome",
    "after_every_red",
    "backtrack_interesting_path",
    "blue_distances",
    "breakpoints",
    "derandomized_round",
    "dvd_is_feasible",
    "enumerate_interesting_paths",
    "eval_levels",
    "exact_bootstrap",
    "exact_dvd",
    "extract_violated_path",
    "greedy_topological",
    "is_feasible_by_levels",
    "is_feasible_by_paths",
    "is_interesting_path",
    "layered",
    "level_lengths",
    "longest_path_vertices",
    "max_level",
    "pull_back",
    "push_forward",
    "random_circuit",
    "random_dvd",
    "randomized_round",
    "red_chain",
    "reduce_to_circuit",
    "round_at",
    "series_parallel",
    "solve_relaxation",
    "solve_restricted_master",
    "validate",
    "validate_dvd",
]

__version__ = "0.1.0"
