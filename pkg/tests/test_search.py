"""Exhaustive coloring search: verdicts, budgets, checkpoints, parallelism,
counterexample minimization, and the lower-bound hunt."""

from __future__ import annotations

import itertools

import pytest

from cycle_ramsey import (
    CycleTooShort,
    EdgeColoring,
    FormatError,
    InvalidParams,
    LowerBoundResult,
    NotACounterexample,
    ParamOutOfRange,
    SearchVerdict,
    TargetTooLarge,
    WitnessMode,
    bondy_erdos_coloring,
    build_graph,
    color_class,
    complete_graph,
    constant_coloring,
    counterexample_minimize,
    edge_order,
    lower_bound_witness_search,
    make_coloring,
    ramsey_check,
    read_checkpoint,
    resume_search,
    verify_mono_cycle_free,
    write_checkpoint,
)

from strategies import brute_cycle_lengths


def naive_all_contain(k: int, n: int, N: int) -> bool:
    """Total enumeration of every k-coloring of K_N, no pruning at all."""
    base = complete_graph(N)
    for combo in itertools.product(range(1, k + 1), repeat=base.edge_count):
        col = EdgeColoring(base, k, combo)
        if all(
            n not in brute_cycle_lengths(color_class(col, i))
            for i in range(1, k + 1)
        ):
            return False
    return True


# --------------------------------------------------------------------------
# edge orders and validation


def test_edge_orders():
    assert edge_order(4, "lex") == (
        (0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3),
    )
    assert edge_order(4, "colex") == (
        (0, 1), (0, 2), (1, 2), (0, 3), (1, 3), (2, 3),
    )
    with pytest.raises(InvalidParams):
        edge_order(4, "random")


def test_instance_validation():
    with pytest.raises(ParamOutOfRange):
        ramsey_check(0, 3, 5)
    with pytest.raises(CycleTooShort):
        ramsey_check(2, 2, 5)
    with pytest.raises(ParamOutOfRange):
        ramsey_check(2, 3, 0)
    with pytest.raises(TargetTooLarge):
        ramsey_check(2, 3, 19)


# --------------------------------------------------------------------------
# verdicts


def test_two_color_triangle_threshold():
    below = ramsey_check(2, 3, 5)
    assert below.verdict is SearchVerdict.COUNTEREXAMPLE
    assert verify_mono_cycle_free(below.counterexample, 3) is True
    at = ramsey_check(2, 3, 6)
    assert at.verdict is SearchVerdict.ALL_CONTAIN
    assert at.counterexample is None


def test_two_color_c4_threshold():
    assert ramsey_check(2, 4, 5).verdict is SearchVerdict.COUNTEREXAMPLE
    assert ramsey_check(2, 4, 6).verdict is SearchVerdict.ALL_CONTAIN


def test_host_smaller_than_cycle_is_trivially_free():
    res = ramsey_check(1, 3, 2)
    assert res.verdict is SearchVerdict.COUNTEREXAMPLE
    assert res.counterexample.base.vertex_count == 2


def test_single_color_forces_cycle():
    assert ramsey_check(1, 3, 3).verdict is SearchVerdict.ALL_CONTAIN


def test_monotone_in_host_order():
    # once every coloring contains the cycle, larger hosts stay that way
    assert ramsey_check(2, 3, 6).verdict is SearchVerdict.ALL_CONTAIN
    assert ramsey_check(2, 3, 7).verdict is SearchVerdict.ALL_CONTAIN


@pytest.mark.parametrize(
    "k,n,N",
    [
        (2, 3, 4),
        (2, 3, 5),
        (2, 4, 4),
        (2, 4, 5),
        (2, 5, 5),
        (3, 3, 4),
        (3, 4, 4),
        (1, 4, 4),
    ],
)
def test_agrees_with_total_enumeration(k, n, N):
    expect = naive_all_contain(k, n, N)
    res = ramsey_check(k, n, N)
    assert (res.verdict is SearchVerdict.ALL_CONTAIN) == expect
    if not expect:
        assert verify_mono_cycle_free(res.counterexample, n) is True


def test_determinism_and_stats():
    a = ramsey_check(2, 5, 8)
    b = ramsey_check(2, 5, 8)
    assert a.verdict is SearchVerdict.COUNTEREXAMPLE
    assert a.counterexample == b.counterexample
    assert a.stats.nodes == b.stats.nodes == 23001
    assert a.stats.cycle_prunes > 0 and a.stats.symmetry_prunes > 0


def test_colex_order_agrees_on_verdicts():
    assert ramsey_check(2, 3, 6, order="colex").verdict is SearchVerdict.ALL_CONTAIN
    res = ramsey_check(2, 5, 8, order="colex")
    assert res.verdict is SearchVerdict.COUNTEREXAMPLE
    assert verify_mono_cycle_free(res.counterexample, 5) is True


# --------------------------------------------------------------------------
# budgets, checkpoints, resume


def test_budget_produces_resumable_frontier(tmp_path):
    first = ramsey_check(2, 5, 8, budget=50)
    assert first.verdict is SearchVerdict.INDETERMINATE
    assert first.counterexample is None
    assert first.open_prefixes
    # every open prefix is a valid canonical color sequence
    for p in first.open_prefixes:
        assert all(c >= 1 for c in p)

    path = tmp_path / "search.ckpt"
    write_checkpoint(str(path), first)
    prefixes = read_checkpoint(str(path))
    assert prefixes == first.open_prefixes

    done = resume_search(2, 5, 8, prefixes)
    assert done.verdict is SearchVerdict.COUNTEREXAMPLE
    assert verify_mono_cycle_free(done.counterexample, 5) is True


def test_budget_cutoff_is_deterministic():
    a = ramsey_check(2, 5, 8, budget=120)
    b = ramsey_check(2, 5, 8, budget=120)
    assert a.open_prefixes == b.open_prefixes
    assert a.stats.nodes == b.stats.nodes


def test_resume_on_closed_frontier_confirms_all_contain():
    # the canonical rule forces color 1 on the first edge, so the single
    # prefix (1,) covers the whole tree
    res = resume_search(2, 3, 6, [(1,)])
    assert res.verdict is SearchVerdict.ALL_CONTAIN


def test_checkpoint_format_round_trip(tmp_path):
    path = tmp_path / "ck.txt"
    path.write_text("prefix 3 1 2 1\n\nprefix 1 1\n")
    assert read_checkpoint(str(path)) == ((1, 2, 1), (1,))


@pytest.mark.parametrize(
    "text",
    [
        "prefix 2 1\n",          # count mismatch
        "subtree 1 1\n",          # wrong keyword
        "prefix x 1\n",           # non-integer index
        "prefix 1 0\n",           # colors must be >= 1
        "prefix\n",               # missing index
    ],
)
def test_checkpoint_rejects_malformed_lines(tmp_path, text):
    path = tmp_path / "bad.txt"
    path.write_text(text)
    with pytest.raises(FormatError):
        read_checkpoint(str(path))


def test_resume_rejects_non_canonical_prefix():
    # color 2 cannot appear before color 1 has
    with pytest.raises(FormatError):
        resume_search(2, 3, 6, [(2,)])


# --------------------------------------------------------------------------
# parallel workers


def test_parallel_matches_sequential_counterexample():
    seq = ramsey_check(2, 5, 8)
    par = ramsey_check(2, 5, 8, threads=2)
    assert par.verdict is SearchVerdict.COUNTEREXAMPLE
    assert par.counterexample == seq.counterexample


def test_parallel_all_contain():
    assert ramsey_check(2, 3, 6, threads=2).verdict is SearchVerdict.ALL_CONTAIN


# --------------------------------------------------------------------------
# counterexample minimization


def test_minimize_rejects_non_counterexample():
    with pytest.raises(NotACounterexample):
        counterexample_minimize(constant_coloring(complete_graph(5)), 3)


def test_minimize_drops_unused_colors():
    be = bondy_erdos_coloring(2, 5)
    padded = EdgeColoring(be.base, 3, be.colors)  # color 3 never used
    out = counterexample_minimize(padded, 5)
    assert out.color_count == 2
    assert out == be  # the extremal coloring itself cannot shrink


def test_minimize_leaves_extremal_coloring_alone():
    be = bondy_erdos_coloring(2, 5)
    assert counterexample_minimize(be, 5) == be


def test_minimize_merges_colors_when_possible():
    # a rainbow path has no cycles at all: everything merges into color 1
    G = build_graph(4, [(0, 1), (1, 2), (2, 3)])
    col = make_coloring(G, 3, {(0, 1): 1, (1, 2): 2, (2, 3): 3})
    out = counterexample_minimize(col, 3)
    assert out.color_count == 1
    assert verify_mono_cycle_free(out, 3) is True


def test_minimize_removes_isolated_vertices_only():
    G = build_graph(5, [(0, 1), (1, 2)])
    out = counterexample_minimize(constant_coloring(G), 3)
    assert out.base.vertex_count == 3  # 3 and 4 were isolated
    assert out.base.edge_count == 2


# --------------------------------------------------------------------------
# lower-bound hunt


def test_exhaustive_hunt_finds_witness_below_threshold():
    res = lower_bound_witness_search(2, 5, 8)
    assert isinstance(res, LowerBoundResult)
    assert res.mode is WitnessMode.EXHAUSTIVE
    assert res.coloring is not None and not res.exhausted
    assert verify_mono_cycle_free(res.coloring, 5) is True


def test_exhaustive_hunt_proves_absence_at_threshold():
    res = lower_bound_witness_search(2, 3, 6)
    assert res.coloring is None and res.exhausted


def test_exhausted_flag_requires_a_complete_sweep():
    res = lower_bound_witness_search(2, 5, 8, budget=10)
    assert res.coloring is None and not res.exhausted


def test_randomized_hunt_converges_and_is_seeded():
    a = lower_bound_witness_search(2, 5, 8, mode=WitnessMode.RANDOMIZED, seed=0)
    assert a.coloring is not None
    assert verify_mono_cycle_free(a.coloring, 5) is True
    assert not a.exhausted  # randomized search never proves absence
    b = lower_bound_witness_search(2, 5, 8, mode=WitnessMode.RANDOMIZED, seed=0)
    assert (a.coloring, a.steps) == (b.coloring, b.steps)


def test_randomized_hunt_with_one_color_gives_up():
    res = lower_bound_witness_search(
        1, 3, 4, mode=WitnessMode.RANDOMIZED, seed=1, budget=50
    )
    assert res.coloring is None and not res.exhausted
