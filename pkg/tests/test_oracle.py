"""The exhaustive reference solver: literal rule application on small trees."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from treedom import (
    INFINITY,
    CostValue,
    Mode,
    all_valid_sets,
    oracle_solve,
    path_tree,
    random_tree,
    spider,
    star_tree,
    validate_set,
)

M12 = Mode.interval(1, 2)
T12 = Mode.total(1, 2)


def test_mode_validation():
    with pytest.raises(ValueError):
        Mode("weird", 1, 2)
    with pytest.raises(ValueError):
        Mode.interval(2, 1)
    with pytest.raises(ValueError):
        Mode.interval(-1, 1)
    assert "total" in Mode.total(1, 2).describe()


def test_validate_set_literal_examples():
    p3 = path_tree(3)
    assert validate_set(p3, {2}, M12)
    assert not validate_set(p3, {1}, M12)  # vertex 3 sees no member
    assert validate_set(p3, {1, 3}, M12)
    assert validate_set(p3, {1, 2, 3}, M12)  # no outside vertices to violate
    # total mode judges members too
    assert not validate_set(p3, {2}, T12)  # 2 itself sees no member
    assert validate_set(p3, {1, 2}, T12)
    assert not validate_set(p3, {1, 3}, T12)


def test_validate_set_rejects_out_of_range_members():
    with pytest.raises(ValueError):
        validate_set(path_tree(3), {4}, M12)


def test_oracle_p3():
    res = oracle_solve(path_tree(3), M12)
    assert res.min_size == CostValue(1)
    assert res.count == 1
    assert res.sets == (frozenset({2}),)
    assert not res.truncated


def test_oracle_p4_families():
    res = oracle_solve(path_tree(4), M12)
    assert res.min_size == CostValue(2)
    assert res.count == 4
    assert set(res.sets) == {
        frozenset({1, 3}),
        frozenset({1, 4}),
        frozenset({2, 3}),
        frozenset({2, 4}),
    }


def test_oracle_star():
    res = oracle_solve(star_tree(5), M12)
    assert res.min_size == CostValue(1)
    assert res.sets == (frozenset({1}),)


def test_oracle_infinite_when_nothing_valid():
    # a single vertex has no neighbors, so no total set can cover it
    res = oracle_solve(path_tree(1), T12)
    assert res.min_size == INFINITY
    assert res.count == 0
    assert res.sets == ()


def test_oracle_spider_has_no_total_set():
    res = oracle_solve(spider([2, 2, 2]), T12, want_sets=False)
    assert res.min_size == INFINITY
    assert res.count == 0


def test_oracle_empty_set_when_lower_bound_is_zero():
    res = oracle_solve(path_tree(5), Mode.interval(0, 2))
    assert res.min_size == CostValue(0)
    assert res.sets == (frozenset(),)


def test_oracle_cap():
    with pytest.raises(ValueError):
        oracle_solve(random_tree(25, seed=0), M12)
    with pytest.raises(ValueError):
        list(all_valid_sets(random_tree(25, seed=0), M12))


def test_want_sets_false_skips_materialization():
    res = oracle_solve(path_tree(4), M12, want_sets=False)
    assert res.sets is None
    assert res.count == 4


def test_set_cap_truncates_but_counts_exactly():
    res = oracle_solve(path_tree(4), M12, set_cap=2)
    assert res.sets is None
    assert res.truncated
    assert res.count == 4


def test_all_valid_sets_ascending_and_consistent():
    p4 = path_tree(4)
    sizes = [len(s) for s in all_valid_sets(p4, M12)]
    assert sizes == sorted(sizes)
    res = oracle_solve(p4, M12)
    first_size = sizes[0]
    assert CostValue(first_size) == res.min_size
    assert sizes.count(first_size) == res.count


@given(st.integers(2, 9), st.integers(0, 10**6))
@settings(max_examples=40, deadline=None)
def test_oracle_minimum_actually_validates(n, seed):
    t = random_tree(n, seed)
    res = oracle_solve(t, M12)
    for s in res.sets:
        assert validate_set(t, s, M12)
        assert CostValue(len(s)) == res.min_size
    # nothing smaller validates
    smaller = [s for s in all_valid_sets(t, M12) if len(s) < res.min_size.value]
    assert smaller == []


@given(st.integers(2, 8), st.integers(0, 10**6))
@settings(max_examples=30, deadline=None)
def test_oracle_is_deterministic(n, seed):
    t = random_tree(n, seed)
    assert oracle_solve(t, T12) == oracle_solve(t, T12)
