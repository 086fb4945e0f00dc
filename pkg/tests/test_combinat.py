"""Partitions, branching graphs, and path enumeration."""

from math import factorial

from hypothesis import given
from hypothesis import strategies as st

from celltower.combinat import (
    SkewShape,
    brauer_graph,
    conjugate,
    dominance_cmp,
    dominates,
    enumerate_paths,
    hook_length_count,
    maximal_path,
    partition_graph,
    partitions_of,
    size,
    standard_paths,
    young_graph,
    young_graph_max_columns,
)

PARTITION_COUNTS = {0: 1, 1: 1, 2: 2, 3: 3, 4: 5, 5: 7, 6: 11, 7: 15, 8: 22}


def test_partition_counts():
    for n, count in PARTITION_COUNTS.items():
        ps = partitions_of(n)
        assert len(ps) == count
        assert len(set(ps)) == count
        assert all(size(p) == n for p in ps)


@given(st.integers(min_value=0, max_value=8))
def test_conjugate_is_an_involution(n):
    for p in partitions_of(n):
        assert conjugate(conjugate(p)) == p
        assert size(conjugate(p)) == n


@given(st.integers(min_value=0, max_value=7))
def test_dominance_is_a_partial_order(n):
    ps = partitions_of(n)
    for a in ps:
        assert dominates(a, a)
        for b in ps:
            if dominates(a, b) and dominates(b, a):
                assert a == b
            # Dominance reverses under conjugation.
            assert dominates(a, b) == dominates(conjugate(b), conjugate(a))


def test_hook_length_formula_counts_young_paths():
    g = young_graph(6)
    for n in range(7):
        for lam in partitions_of(n):
            assert len(standard_paths(g, lam, n)) == hook_length_count(lam)


def test_young_path_counts_sum_to_factorial():
    g = young_graph(6)
    for n in range(7):
        total = sum(len(standard_paths(g, lam, n)) ** 2 for lam in partitions_of(n))
        assert total == factorial(n)


def test_brauer_path_counts_sum_to_double_factorial():
    g = brauer_graph(4)
    for r, want in ((2, 3), (3, 15), (4, 105)):
        total = sum(len(standard_paths(g, lam, r)) ** 2 for lam in g.levels[r])
        assert total == want


def test_partition_graph_counts_sum_to_bell_numbers():
    g = partition_graph(6)
    bell = {2: 2, 4: 15, 6: 203}
    for level, want in bell.items():
        total = sum(
            len(standard_paths(g, lam, level)) ** 2 for lam in g.levels[level]
        )
        assert total == want


def test_temperley_lieb_counts_are_catalan():
    g = young_graph_max_columns(6, 2)
    catalan = {0: 1, 1: 1, 2: 2, 3: 5, 4: 14, 5: 42, 6: 132}
    for r, want in catalan.items():
        total = sum(len(standard_paths(g, lam, r)) ** 2 for lam in g.levels[r])
        assert total == want


def test_skew_path_count_matches_whole_minus_truncation():
    g = young_graph(5)
    shape = SkewShape((1,), (3, 2), 1, 5)
    paths = enumerate_paths(g, shape)
    direct = [
        t for t in standard_paths(g, (3, 2), 5) if t.truncate(1).shape == (1,)
    ]
    assert len(paths) == len(direct)
    assert len(set(paths)) == len(paths)


def test_maximal_path_dominates_every_standard_path():
    g = young_graph(5)
    for n in range(1, 6):
        for lam in partitions_of(n):
            top = maximal_path(g, lam, n)
            for t in standard_paths(g, lam, n):
                assert dominance_cmp(g, top, t) in (">", "=")


def test_enumeration_is_deterministic():
    g = young_graph(5)
    a = [str(t) for t in standard_paths(g, (3, 2), 5)]
    b = [str(t) for t in standard_paths(g, (3, 2), 5)]
    assert a == b
