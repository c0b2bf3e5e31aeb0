"""Minimum [1,2]-sets of a rooted tree: size, witness, exact count, and
a stream of all minimum sets, from one linear post-order pass.

State per vertex v, always about the subtree T_v in isolation:

  m_plus[v]   smallest set containing v ("v black").
  m_minus[v]  smallest set with v white; inside T_v only v's children can
              cover v, so v needs one or two black children.  Infinite when
              no such set exists (every leaf).
  c3[v]       v white with zero black children: every child stands alone
              white.  Legal only below a black parent, which then covers v.
  c1min[v]    v white with exactly one black child, at its cheapest.
  c4[v]       cheapest way to hang T_v below a black parent: v black, or
              v white with zero or one black children (the parent already
              contributes one cover, so two black children would overshoot).

A white vertex with a white parent may have one or two black children, so
m_minus[v] minimizes over those two cases.  With delta(w) = m_plus[w] -
m_minus[w], the one-child case costs c3[v] plus the smallest delta and the
two-child case adds the second smallest, so one pass over the children
suffices.  Children whose m_minus is infinite are forced black; they are
kept out of the delta arithmetic and folded in additively instead.

The count of minimum sets (nu_plus/nu_minus) and the enumeration stream
replay the same minimizations, summing or chaining over every tied choice;
both are computed on demand, never during solve12 itself, because counts
grow exponentially (a k-branch spider already has 2**k minimum sets) and
would wreck the linear-time pass.
"""

from __future__ import annotations

import sys
from dataclasses import dataclass
from typing import Iterator, Optional

from .cost import CostValue, from_optional
from .oracle import Mode
from .selection import best_selection, count_selections, optimal_selections
from .tree import RootedTree

# Branches of the c4 minimum, recorded per vertex as a bitmask.
BRANCH_PLUS = 1
BRANCH_C3 = 2
BRANCH_C1 = 4


@dataclass(frozen=True)
class Bicoloring:
    """A vertex set together with the rule it is meant to satisfy."""

    black: frozenset
    mode: Mode


class DpTable12:
    """Per-vertex results of solve12; arrays are indexed by vertex id.

    Costs are ints with None for infinity.  best1[v] is the child realizing
    the cheapest single-black-child case at v (0 when none exists), best2[v]
    the lexicographically smallest optimal pair for the two-child case.
    c4_choice[v] is a bitmask of BRANCH_* flags marking every branch that
    attains c4[v].  nu_plus/nu_minus hold exact minimum-set counts for the
    black/white side per vertex; they start as None and are filled by the
    first call to count_sets.
    """

    __slots__ = (
        "tree",
        "m_plus",
        "m_minus",
        "c3",
        "c4",
        "c1min",
        "best1",
        "best2",
        "c4_choice",
        "nu_plus",
        "nu_minus",
    )

    def __init__(self, tree: RootedTree):
        n1 = tree.n + 1
        self.tree = tree
        self.m_plus = [0] * n1
        self.m_minus: list[Optional[int]] = [None] * n1
        self.c3: list[Optional[int]] = [None] * n1
        self.c4 = [0] * n1
        self.c1min: list[Optional[int]] = [None] * n1
        self.best1 = [0] * n1
        self.best2: list[Optional[tuple[int, int]]] = [None] * n1
        self.c4_choice = [0] * n1
        self.nu_plus: Optional[list[int]] = None
        self.nu_minus: Optional[list[int]] = None


def solve12(tree: RootedTree) -> DpTable12:
    """One post-order pass filling every cost field in O(n)."""
    table = DpTable12(tree)
    m_plus = table.m_plus
    m_minus = table.m_minus
    c3 = table.c3
    c4 = table.c4
    c1min = table.c1min
    best1 = table.best1
    best2 = table.best2
    c4_choice = table.c4_choice
    children = tree.children

    for v in tree.post_order:
        cs = children[v]
        if not cs:
            m_plus[v] = 1
            c4_choice[v] = BRANCH_C3
            # m_minus/c3/c4 keep their leaf defaults: None/None(c1)/0.
            # A lone white leaf under a black parent costs nothing (c3 = 0).
            c3[v] = 0
            continue
        sum_c4 = 0
        sum_minus = 0
        inf_count = 0
        f1 = f2 = 0
        d1: Optional[int] = None
        d2: Optional[int] = None
        b1 = b2 = 0
        for w in cs:
            sum_c4 += c4[w]
            mm = m_minus[w]
            if mm is None:
                inf_count += 1
                if f1 == 0:
                    f1 = w
                elif f2 == 0:
                    f2 = w
            else:
                sum_minus += mm
                d = m_plus[w] - mm
                if d1 is None or d < d1:
                    d2 = d1
                    b2 = b1
                    d1 = d
                    b1 = w
                elif d2 is None or d < d2:
                    d2 = d
                    b2 = w

        mp = 1 + sum_c4
        m_plus[v] = mp
        if inf_count == 0:
            c3v: Optional[int] = sum_minus
            cc1 = sum_minus + d1 if d1 is not None else None
            cc2 = sum_minus + d1 + d2 if d2 is not None else None
            bb1 = b1 if d1 is not None else 0
            bb2 = (b1, b2) if b1 < b2 else (b2, b1)
            if d2 is None:
                bb2 = None
        elif inf_count == 1:
            c3v = None
            cc1 = m_plus[f1] + sum_minus
            cc2 = cc1 + d1 if d1 is not None else None
            bb1 = f1
            if d1 is not None:
                bb2 = (f1, b1) if f1 < b1 else (b1, f1)
            else:
                bb2 = None
        elif inf_count == 2:
            c3v = None
            cc1 = None
            cc2 = m_plus[f1] + m_plus[f2] + sum_minus
            bb1 = 0
            bb2 = (f1, f2)
        else:
            c3v = None
            cc1 = None
            cc2 = None
            bb1 = 0
            bb2 = None

        c3[v] = c3v
        c1min[v] = cc1
        best1[v] = bb1
        best2[v] = bb2
        if cc1 is None:
            mv = cc2
        elif cc2 is None or cc1 <= cc2:
            mv = cc1
        else:
            mv = cc2
        m_minus[v] = mv

        cv = mp
        if c3v is not None and c3v < cv:
            cv = c3v
        if cc1 is not None and cc1 < cv:
            cv = cc1
        c4[v] = cv
        c4_choice[v] = (
            (BRANCH_PLUS if mp == cv else 0)
            | (BRANCH_C3 if c3v == cv else 0)
            | (BRANCH_C1 if cc1 == cv else 0)
        )
    return table


def gamma12(table: DpTable12) -> CostValue:
    """Smallest [1,2]-set size of the whole tree; always finite."""
    root = table.tree.root
    mm = table.m_minus[root]
    mp = table.m_plus[root]
    return from_optional(mp if mm is None or mp <= mm else mm)


MODE_12 = Mode.interval(1, 2)


def extract_set(tree: RootedTree, table: DpTable12) -> Bicoloring:
    """One minimum [1,2]-set by replaying the recorded decisions, O(n).

    Tie order: at the root the black side wins; a c4 tie prefers black,
    then zero black children, then the single-child case at its smallest
    child; a white vertex prefers the single-child case over the pair.
    """
    black = []
    root = tree.root
    mm = table.m_minus[root]
    stack: list[tuple[int, str]] = [
        (root, "P" if mm is None or table.m_plus[root] <= mm else "M")
    ]
    m_minus = table.m_minus
    c1min = table.c1min
    best1 = table.best1
    best2 = table.best2
    c4_choice = table.c4_choice
    children = tree.children
    while stack:
        v, state = stack.pop()
        if state == "P":
            black.append(v)
            for w in children[v]:
                stack.append((w, "C"))
        elif state == "C":
            mask = c4_choice[v]
            if mask & BRANCH_PLUS:
                stack.append((v, "P"))
            elif mask & BRANCH_C3:
                for w in children[v]:
                    stack.append((w, "M"))
            else:
                u = best1[v]
                for w in children[v]:
                    stack.append((w, "P" if w == u else "M"))
        else:
            if c1min[v] == m_minus[v]:
                u = best1[v]
                for w in children[v]:
                    stack.append((w, "P" if w == u else "M"))
            else:
                pair = best2[v]
                for w in children[v]:
                    stack.append((w, "P" if w in pair else "M"))
    return Bicoloring(frozenset(black), MODE_12)


def _fill_counts(tree: RootedTree, table: DpTable12) -> None:
    """Populate nu_plus/nu_minus bottom-up with exact big-integer counts."""
    if table.nu_plus is not None:
        return
    n1 = tree.n + 1
    nu_plus = [0] * n1
    nu_minus = [0] * n1
    nu_c4 = [0] * n1
    m_plus = table.m_plus
    m_minus = table.m_minus
    c4 = table.c4
    for v in tree.post_order:
        cs = tree.children[v]
        entries = [(m_plus[w], nu_plus[w], m_minus[w], nu_minus[w]) for w in cs]
        prod = 1
        for w in cs:
            prod *= nu_c4[w]
        nu_plus[v] = prod
        val_m, ways_m = count_selections(entries, 1, 2)
        assert val_m == m_minus[v], f"white-side count disagrees at {v}"
        nu_minus[v] = ways_m
        val4, ways4 = count_selections(entries, 0, 1)
        ways = ways4 if val4 == c4[v] else 0
        if m_plus[v] == c4[v]:
            ways += nu_plus[v]
        nu_c4[v] = ways
    table.nu_plus = nu_plus
    table.nu_minus = nu_minus


def count_sets(tree: RootedTree, table: DpTable12) -> int:
    """Exact number of distinct minimum [1,2]-sets.

    The black-side and white-side families at the root are disjoint, so
    their counts add when the two sides tie.
    """
    _fill_counts(tree, table)
    root = tree.root
    mp = table.m_plus[root]
    mm = table.m_minus[root]
    if mm is None or mp < mm:
        return table.nu_plus[root]
    if mp == mm:
        return table.nu_plus[root] + table.nu_minus[root]
    return table.nu_minus[root]


def _tree_height(tree: RootedTree) -> int:
    depth = [0] * (tree.n + 1)
    height = 0
    for v in reversed(tree.post_order):
        d = depth[v]
        if d > height:
            height = d
        for w in tree.children[v]:
            depth[w] = d + 1
    return height


def _lazy_product(factories, base: frozenset) -> Iterator[frozenset]:
    """Cartesian product of restartable set streams, unioned with base.

    Iterative odometer: no recursion in the product itself, so only the
    nesting of per-vertex generators contributes stack depth.
    """
    k = len(factories)
    if k == 0:
        yield base
        return
    gens = [factories[0]()]
    parts: list[frozenset] = [frozenset()] * k
    while gens:
        i = len(gens) - 1
        try:
            parts[i] = next(gens[-1])
        except StopIteration:
            gens.pop()
            continue
        if i == k - 1:
            yield base.union(*parts)
        else:
            gens.append(factories[i + 1]())


def enumerate_sets(tree: RootedTree, table: DpTable12) -> Iterator[Bicoloring]:
    """All minimum [1,2]-sets, each exactly once, deterministically ordered.

    The first element equals extract_set's witness.  Each answer costs time
    proportional to the tree (times the surviving tie structure), and the
    stream is single-consumer.  Generator nesting grows with tree height,
    so the recursion limit is raised for unusually deep trees.
    """
    needed = 4 * _tree_height(tree) + 200
    if needed > sys.getrecursionlimit():
        sys.setrecursionlimit(needed)

    m_plus = table.m_plus
    m_minus = table.m_minus
    c4 = table.c4
    children = tree.children

    def entries(v: int):
        return [(m_plus[w], m_minus[w], w) for w in children[v]]

    def gen_plus(v: int) -> Iterator[frozenset]:
        factories = tuple(
            (lambda w=w: gen_c4(w)) for w in children[v]
        )
        yield from _lazy_product(factories, frozenset((v,)))

    def gen_selected(v: int, lo: int, hi: int) -> Iterator[frozenset]:
        for chosen in optimal_selections(entries(v), lo, hi):
            inside = frozenset(chosen)
            factories = tuple(
                (lambda w=w: gen_plus(w)) if w in inside else (lambda w=w: gen_minus(w))
                for w in children[v]
            )
            yield from _lazy_product(factories, frozenset())

    def gen_c4(v: int) -> Iterator[frozenset]:
        if m_plus[v] == c4[v]:
            yield from gen_plus(v)
        val, _ = best_selection(entries(v), 0, 1)
        if val == c4[v]:
            yield from gen_selected(v, 0, 1)

    def gen_minus(v: int) -> Iterator[frozenset]:
        yield from gen_selected(v, 1, 2)

    def gen_root() -> Iterator[frozenset]:
        root = tree.root
        mp = table.m_plus[root]
        mm = table.m_minus[root]
        if mm is None or mp <= mm:
            yield from gen_plus(root)
        if mm is not None and mm <= mp:
            yield from gen_minus(root)

    return (Bicoloring(s, MODE_12) for s in gen_root())
