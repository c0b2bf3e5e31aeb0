"""Minimum total [a,b]-sets: every vertex, member or not, needs between a
and b neighbors inside the set.  Such a set may not exist; all-infinite
results signal that.

Because members need covering too, a vertex's feasible choices depend on
its own color, its parent's color, and how many of its children go black.
The table is therefore indexed by (color, window): m_plus[r][v] is the
cheapest total coloring of T_v with v black and its black-children count
inside the window r, m_minus[r][v] the same with v white.  Only two windows
feed the recursion:

  parent white (or absent): the parent covers nothing, so v's black
      children must number in [a, b].
  parent black: one cover arrives from above, leaving [max(a-1,0), b-1].

The table also carries the two neighboring windows [a, b-1] and
[max(a-1,0), b], so all four combinations of tight/relaxed bounds are
observable; the recursion itself never reads them.  Children of a black
vertex are evaluated in the parent-black window, children of a white vertex
in the parent-white window, and every per-vertex minimization is one
bounded selection over (in = child black, out = child white) costs shared
across all four windows.

A lone vertex has no neighbors at all, so every leaf is infinite in the
parent-white windows; with a == 1 a leaf under a black parent costs 1 black
or 0 white.  The mode requires a >= 1: with a == 0 the empty set would
satisfy the rule on any tree and nothing remains to compute.
"""

from __future__ import annotations

from typing import Optional

from .cost import CostValue, NoSetError, from_optional
from .oracle import Mode
from .onetwo import Bicoloring
from .selection import best_selection, count_selections, evaluate_ranges
from .tree import RootedTree

Window = tuple[int, int]


class DpTableTotal:
    """Range-indexed totals per vertex; None encodes infinity.

    m_plus / m_minus map each window r to a per-vertex array.  rho_white
    and rho_black are the two windows the recursion consumes; d1/d2 name
    the parent-black columns (white and black child under a black parent).
    nu_plus/nu_minus hold exact counts per window once count_total_sets
    has run.
    """

    __slots__ = (
        "tree",
        "a",
        "b",
        "windows",
        "rho_white",
        "rho_black",
        "m_plus",
        "m_minus",
        "nu_plus",
        "nu_minus",
    )

    def __init__(self, tree: RootedTree, a: int, b: int):
        self.tree = tree
        self.a = a
        self.b = b
        self.rho_white: Window = (a, b)
        self.rho_black: Window = (max(a - 1, 0), b - 1)
        lo0 = max(a - 1, 0)
        seen = []
        for w in ((a, b), (a, b - 1), (lo0, b), (lo0, b - 1)):
            if w not in seen:
                seen.append(w)
        self.windows: tuple[Window, ...] = tuple(seen)
        n1 = tree.n + 1
        self.m_plus: dict[Window, list[Optional[int]]] = {
            w: [None] * n1 for w in self.windows
        }
        self.m_minus: dict[Window, list[Optional[int]]] = {
            w: [None] * n1 for w in self.windows
        }
        self.nu_plus: Optional[dict[Window, list[int]]] = None
        self.nu_minus: Optional[dict[Window, list[int]]] = None

    @property
    def d1(self) -> list[Optional[int]]:
        """Cost of a white vertex hanging below a black parent."""
        return self.m_minus[self.rho_black]

    @property
    def d2(self) -> list[Optional[int]]:
        """Cost of a black vertex hanging below a black parent."""
        return self.m_plus[self.rho_black]


def solve_total(tree: RootedTree, a: int, b: int) -> DpTableTotal:
    """Post-order fill of all windows; O(n log b) like the interval solver."""
    if a < 1:
        raise ValueError("total mode requires a >= 1; a == 0 is satisfied by the empty set")
    if a > b:
        raise ValueError(f"lower bound {a} exceeds upper bound {b}")
    table = DpTableTotal(tree, a, b)
    windows = table.windows
    rho_w = table.rho_white
    rho_b = table.rho_black
    plus_w = table.m_plus[rho_w]
    minus_w = table.m_minus[rho_w]
    plus_b = table.m_plus[rho_b]
    minus_b = table.m_minus[rho_b]
    children = tree.children

    for v in tree.post_order:
        cs = children[v]
        entries_black_parent = [(plus_b[w], minus_b[w]) for w in cs]
        entries_white_parent = [(plus_w[w], minus_w[w]) for w in cs]
        vals_black = evaluate_ranges(entries_black_parent, windows)
        vals_white = evaluate_ranges(entries_white_parent, windows)
        for r, val in zip(windows, vals_black):
            table.m_plus[r][v] = None if val is None else 1 + val
        for r, val in zip(windows, vals_white):
            table.m_minus[r][v] = val
    return table


def gamma_total(table: DpTableTotal) -> CostValue:
    """Smallest total [a,b]-set size; infinite when none exists."""
    root = table.tree.root
    r = table.rho_white
    mp = table.m_plus[r][root]
    mm = table.m_minus[r][root]
    if mp is None:
        return from_optional(mm)
    if mm is None or mp <= mm:
        return from_optional(mp)
    return from_optional(mm)


def is_total_tree(tree: RootedTree) -> bool:
    """Whether the tree admits any total [1,2]-set."""
    return gamma_total(solve_total(tree, 1, 2)).is_finite


def extract_total_set(tree: RootedTree, table: DpTableTotal) -> Bicoloring:
    """One minimum total [a,b]-set; selections recomputed along the path.

    Ties prefer the black side, then the smallest selection, then
    lexicographic ids.
    """
    a, b = table.a, table.b
    if not gamma_total(table).is_finite:
        raise NoSetError(f"no total [{a},{b}]-set exists for this tree")
    root = tree.root
    r = table.rho_white
    mp = table.m_plus[r][root]
    mm = table.m_minus[r][root]
    root_black = mm is None or (mp is not None and mp <= mm)
    black = []
    stack = [(root, root_black, r)]
    children = tree.children
    while stack:
        v, is_black, window = stack.pop()
        ctx = table.rho_black if is_black else table.rho_white
        plus_ctx = table.m_plus[ctx]
        minus_ctx = table.m_minus[ctx]
        if is_black:
            black.append(v)
        entries = [(plus_ctx[w], minus_ctx[w], w) for w in children[v]]
        _, chosen = best_selection(entries, window[0], window[1])
        inside = frozenset(chosen)
        for w in children[v]:
            stack.append((w, w in inside, ctx))
    return Bicoloring(frozenset(black), Mode.total(a, b))


def count_total_sets(tree: RootedTree, table: DpTableTotal) -> int:
    """Exact number of minimum total [a,b]-sets; 0 when none exist."""
    if table.nu_plus is None:
        windows = table.windows
        rho_w = table.rho_white
        rho_b = table.rho_black
        n1 = tree.n + 1
        nu_plus = {r: [0] * n1 for r in windows}
        nu_minus = {r: [0] * n1 for r in windows}
        for v in tree.post_order:
            cs = tree.children[v]
            entries_black_parent = [
                (
                    table.m_plus[rho_b][w],
                    nu_plus[rho_b][w],
                    table.m_minus[rho_b][w],
                    nu_minus[rho_b][w],
                )
                for w in cs
            ]
            entries_white_parent = [
                (
                    table.m_plus[rho_w][w],
                    nu_plus[rho_w][w],
                    table.m_minus[rho_w][w],
                    nu_minus[rho_w][w],
                )
                for w in cs
            ]
            for r in windows:
                val, ways = count_selections(entries_black_parent, r[0], r[1])
                stored = table.m_plus[r][v]
                assert (val is None) == (stored is None) and (
                    val is None or val + 1 == stored
                ), f"black-side count disagrees at {v} window {r}"
                nu_plus[r][v] = ways
                val, ways = count_selections(entries_white_parent, r[0], r[1])
                assert val == table.m_minus[r][v], (
                    f"white-side count disagrees at {v} window {r}"
                )
                nu_minus[r][v] = ways
        table.nu_plus = nu_plus
        table.nu_minus = nu_minus
    root = tree.root
    r = table.rho_white
    mp = table.m_plus[r][root]
    mm = table.m_minus[r][root]
    count = 0
    g = None
    for side_val, side_ways in (
        (mp, table.nu_plus[r][root]),
        (mm, table.nu_minus[r][root]),
    ):
        if side_val is None:
            continue
        if g is None or side_val < g:
            g = side_val
            count = side_ways
        elif side_val == g:
            count += side_ways
    return count
