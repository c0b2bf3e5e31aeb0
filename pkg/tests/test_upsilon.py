"""The recursive generator of trees carrying total [1,2]-sets."""

import pytest

from treedom import (
    Mode,
    all_valid_sets,
    canonical_code,
    colored_code,
    free_trees,
    is_total_tree,
    spider,
    validate_set,
)
from treedom.upsilon import ColoredTree, expansions, generate, seed

T12 = Mode.total(1, 2)


def test_seed_is_the_all_black_edge():
    s = seed()
    assert s.n == 2
    assert s.edges == ((1, 2),)
    assert s.black == frozenset({1, 2})
    assert s.provenance == ("seed",)
    assert validate_set(s.rooted(), s.black, T12)


def test_seed_expansions():
    succ = expansions(seed())
    # each endpoint offers a white leaf and (having one black neighbor) a
    # black leaf: four successors, two isomorphism classes
    assert len(succ) == 4
    assert {s.n for s in succ} == {3}
    assert len({s.code() for s in succ}) == 2
    for s in succ:
        assert validate_set(s.rooted(), s.black, T12)


def test_expansion_sites_are_color_guarded():
    # a white vertex with one black neighbor accepts the pair and tail rules
    base = ColoredTree(3, ((1, 2), (2, 3)), frozenset({1, 2}))
    tags = [ct.provenance[-1] for ct in expansions(base)]
    assert "pair@3" in tags and "tail@3" in tags
    assert not any(t.startswith("tail2@") for t in tags)


def test_generate_base_case():
    pairs = generate(2)
    assert len(pairs) == 1
    assert pairs[0].black == frozenset({1, 2})


def test_generate_rejects_trivial_bound():
    assert generate(1) == []


def test_generated_class_counts_are_stable():
    pairs = generate(7)
    by_n = {}
    for p in pairs:
        by_n[p.n] = by_n.get(p.n, 0) + 1
    assert by_n == {2: 1, 3: 2, 4: 5, 5: 10, 6: 24, 7: 59}


def test_generation_is_deterministic():
    a = [(p.n, p.edges, p.black) for p in generate(6)]
    b = [(p.n, p.edges, p.black) for p in generate(6)]
    assert a == b


def test_every_pair_is_sound():
    for p in generate(7):
        assert validate_set(p.rooted(), p.black, T12)


def test_pairs_are_pairwise_non_isomorphic():
    codes = [p.code() for p in generate(7)]
    assert len(codes) == len(set(codes))


def test_completeness_against_the_oracle():
    pairs = generate(7)
    for n in range(2, 8):
        got = {p.code() for p in pairs if p.n == n}
        want = set()
        for t in free_trees(n):
            for s in all_valid_sets(t, T12):
                want.add(colored_code(t, s))
        assert got == want


def test_tree_level_completeness():
    pairs = generate(7)
    for n in range(2, 8):
        got = {canonical_code(p.rooted()) for p in pairs if p.n == n}
        want = {canonical_code(t) for t in free_trees(n) if is_total_tree(t)}
        assert got == want


def test_short_legged_spider_is_never_generated():
    sp_code = canonical_code(spider([2, 2, 2]))
    assert all(canonical_code(p.rooted()) != sp_code for p in generate(7) if p.n == 7)


def test_no_vertex_ever_collects_three_covers():
    for p in generate(7):
        counts = {v: 0 for v in range(1, p.n + 1)}
        for u, v in p.edges:
            if v in p.black:
                counts[u] += 1
            if u in p.black:
                counts[v] += 1
        assert all(1 <= c <= 2 for c in counts.values())


def test_broken_rule_application_raises():
    # manually mis-colored base: vertex 3 is white with two black neighbors
    # already, so attaching a bare black pair there must be refused by the
    # revalidation guard
    base = ColoredTree(3, ((1, 3), (2, 3)), frozenset({1, 2}))
    from treedom.upsilon import _grown

    with pytest.raises(RuntimeError):
        _grown(base, (True, True), 3, "pair")
