"""Reference strategies: always feasible, never clever."""

from __future__ import annotations

import pytest
from hypothesis import given, settings

from bootplan.baselines import after_every_red, greedy_topological
from bootplan.circuit import is_feasible_by_levels
from bootplan.exact import exact_bootstrap
from strategies import build, circuits, levels_st

PROPERTY = settings(max_examples=150, deadline=None)


def test_after_every_red_is_all_reds():
    c = build("wbrrb", (0, 1, 2), (1, 2, 2), (2, 3, 2), (3, 4, 2))
    assert after_every_red(c) == frozenset({2, 3})


def test_greedy_on_chain_marks_one_per_budget_window():
    c = build("wrrrr", *[(i, i + 1, 2) for i in range(4)])
    assert greedy_topological(c, 3) == frozenset({3})
    assert greedy_topological(c, 2) == frozenset({2, 4})
    assert greedy_topological(c, 1) == frozenset({1, 2, 3, 4})


def test_greedy_skips_circuits_below_budget():
    c = build("wrr", (0, 1, 2), (0, 2, 1), (1, 2, 1))
    assert greedy_topological(c, 3) == frozenset()
    # At budget 2 the sink itself reaches level 2 and the sweep marks it,
    # even though nothing comes after; the baseline does not look ahead.
    assert greedy_topological(c, 2) == frozenset({2})


def test_greedy_rejects_bad_level():
    c = build("wr", (0, 1, 2))
    with pytest.raises(ValueError):
        greedy_topological(c, 0)


@PROPERTY
@given(circuits(), levels_st)
def test_baselines_are_feasible(circuit, level):
    assert is_feasible_by_levels(circuit, after_every_red(circuit), level)
    assert is_feasible_by_levels(circuit, greedy_topological(circuit, level), level)


@PROPERTY
@given(circuits(), levels_st)
def test_greedy_marks_only_reds(circuit, level):
    assert greedy_topological(circuit, level) <= after_every_red(circuit)


@PROPERTY
@given(circuits(max_vertices=7), levels_st)
def test_greedy_never_beats_the_optimum(circuit, level):
    greedy = greedy_topological(circuit, level)
    assert exact_bootstrap(circuit, level).optimum <= len(greedy)
