"""The fused [1,2] solver: values, witnesses, counting, and full enumeration."""

import itertools

from hypothesis import given, settings
from hypothesis import strategies as st

from treedom import (
    CostValue,
    Mode,
    count_sets,
    enumerate_sets,
    extract_set,
    free_trees,
    gamma12,
    oracle_solve,
    path_tree,
    random_tree,
    solve12,
    spider,
    star_tree,
    validate_set,
)

M12 = Mode.interval(1, 2)


def test_p3():
    t = path_tree(3)
    table = solve12(t)
    assert gamma12(table) == CostValue(1)
    assert count_sets(t, table) == 1
    assert extract_set(t, table).black == frozenset({2})
    assert [b.black for b in enumerate_sets(t, table)] == [frozenset({2})]


def test_p3_subtree_states():
    # rooted at one end: the leaf can stand black (1) but never white alone;
    # the middle vertex covers itself (plus) or leans on its child (minus)
    t = path_tree(3).rerooted(3)
    table = solve12(t)
    assert table.m_plus[1:] == [1, 1, 2]
    assert table.m_minus[1:] == [None, 1, 1]
    assert table.c3[1:] == [0, None, 1]
    assert table.c4[1:] == [0, 1, 1]


def test_single_vertex():
    t = path_tree(1)
    table = solve12(t)
    assert gamma12(table) == CostValue(1)
    assert extract_set(t, table).black == frozenset({1})
    assert count_sets(t, table) == 1


def test_p2():
    t = path_tree(2)
    table = solve12(t)
    assert gamma12(table) == CostValue(1)
    assert count_sets(t, table) == 2


def test_star_center_dominates():
    t = star_tree(5)
    table = solve12(t)
    assert gamma12(table) == CostValue(1)
    assert extract_set(t, table).black == frozenset({1})


def test_p4_family():
    t = path_tree(4)
    table = solve12(t)
    assert gamma12(table) == CostValue(2)
    assert count_sets(t, table) == 4
    fam = {b.black for b in enumerate_sets(t, table)}
    assert fam == {
        frozenset({1, 3}),
        frozenset({1, 4}),
        frozenset({2, 3}),
        frozenset({2, 4}),
    }


def test_two_leg_spider():
    # center plus two length-3 legs: 7 vertices, minimum 3, eight ways
    sp = spider([3, 3])
    table = solve12(sp)
    assert gamma12(table) == CostValue(3)
    assert count_sets(sp, table) == 8


def test_enumeration_order_starts_with_the_witness():
    sp = spider([3, 3])
    table = solve12(sp)
    first = next(iter(enumerate_sets(sp, table)))
    assert first.black == extract_set(sp, table).black


@given(st.integers(2, 10), st.integers(0, 10**6))
@settings(max_examples=60, deadline=None)
def test_matches_oracle_on_random_trees(n, seed):
    t = random_tree(n, seed)
    table = solve12(t)
    res = oracle_solve(t, M12)
    assert gamma12(table) == res.min_size
    assert count_sets(t, table) == res.count
    assert {b.black for b in enumerate_sets(t, table)} == set(res.sets)


def test_matches_oracle_on_all_small_free_trees():
    for n in range(2, 8):
        for t in free_trees(n):
            table = solve12(t)
            res = oracle_solve(t, M12)
            assert gamma12(table) == res.min_size
            assert count_sets(t, table) == res.count
            assert {b.black for b in enumerate_sets(t, table)} == set(res.sets)


@given(st.integers(2, 60), st.integers(0, 10**6), st.integers(0, 10**6))
@settings(max_examples=60, deadline=None)
def test_root_choice_is_irrelevant(n, seed, rootseed):
    t = random_tree(n, seed)
    root = rootseed % n + 1
    t2 = t.rerooted(root)
    ta, tb = solve12(t), solve12(t2)
    assert gamma12(ta) == gamma12(tb)
    assert count_sets(t, ta) == count_sets(t2, tb)


@given(st.integers(2, 80), st.integers(0, 10**6))
@settings(max_examples=60, deadline=None)
def test_witness_validates_and_has_minimum_size(n, seed):
    t = random_tree(n, seed)
    table = solve12(t)
    w = extract_set(t, table).black
    assert validate_set(t, w, M12)
    assert CostValue(len(w)) == gamma12(table)


@given(st.integers(2, 14), st.integers(0, 10**6))
@settings(max_examples=40, deadline=None)
def test_count_agrees_with_enumeration_length(n, seed):
    t = random_tree(n, seed)
    table = solve12(t)
    emitted = [b.black for b in enumerate_sets(t, table)]
    assert len(emitted) == len(set(emitted)) == count_sets(t, table)
    for s in emitted:
        assert validate_set(t, s, M12)
        assert CostValue(len(s)) == gamma12(table)


def test_enumeration_is_lazy():
    # only a prefix is forced even when the family is large
    sp = spider([3] * 6)
    table = solve12(sp)
    gen = enumerate_sets(sp, table)
    first = next(gen)
    assert validate_set(sp, first.black, M12)


def test_deep_path_enumeration_does_not_recurse_out():
    t = path_tree(3000)
    table = solve12(t)
    first = next(iter(enumerate_sets(t, table)))
    assert validate_set(t, first.black, M12)


@given(st.integers(4, 40), st.integers(0, 10**6))
@settings(max_examples=60, deadline=None)
def test_single_black_child_shortcut_identity(n, seed):
    # on every vertex whose children all allow both colors, the recorded
    # "cheapest single black child" equals the subtractive delta form
    t = random_tree(n, seed)
    table = solve12(t)
    for v in range(1, n + 1):
        cs = t.children[v]
        if not cs or any(table.m_minus[u] is None for u in cs):
            continue
        direct = min(
            table.c3[v] - table.m_minus[u] + table.m_plus[u] for u in cs
        )
        assert table.c1min[v] == direct
        u = table.best1[v]
        assert table.c1min[v] == table.c3[v] + table.m_plus[u] - table.m_minus[u]


def test_bicoloring_carries_its_mode():
    t = path_tree(3)
    b = extract_set(t, solve12(t))
    assert b.mode == M12
