"""Minimum [a,b]-sets of a rooted tree for arbitrary bounds 0 <= a <= b.

Generalizes the [1,2] solver.  Cost structure per vertex, for T_v alone:

  m_minus[v]    v white with a white (or no) parent: between a and b of
                v's children must be black.  Infinite when unreachable.
  m_plus[v]     v black.  Always finite: the all-black set satisfies any
                interval rule, whose condition only constrains non-members.
  cov_white[v]  v white below a black parent.  The parent contributes one
                cover, so v's black children must number between
                max(a-1, 0) and b-1.

Both white windows minimize the same quantity over selections of black
children (in_cost m_plus, out_cost m_minus), so one bounded-heap pass per
vertex feeds the two windows; the heap keeps the cost at O(n log b) overall.
A black vertex takes each child at min(m_plus, cov_white), preferring black
on ties.  Children with infinite m_minus are forced black.

Witness extraction re-derives each selection along the chosen branch only,
so it stays O(n log b) without per-vertex choice records; exact counts are
filled lazily by count_sets_ab, mirroring the [1,2] counting scheme.
"""

from __future__ import annotations

from typing import Optional

from .cost import CostValue, NoSetError, from_optional
from .oracle import Mode
from .onetwo import Bicoloring
from .selection import best_selection, count_selections, k_smallest
from .tree import RootedTree


class DpTableAB:
    """Per-vertex results of solve_ab; None encodes infinity.

    nu_plus/nu_minus/nu_cov hold exact minimum-set counts per vertex for
    the black / white-under-white / white-under-black cases; they are None
    until the first count_sets_ab call fills them.
    """

    __slots__ = (
        "tree",
        "a",
        "b",
        "m_plus",
        "m_minus",
        "cov_white",
        "nu_plus",
        "nu_minus",
        "nu_cov",
    )

    def __init__(self, tree: RootedTree, a: int, b: int):
        n1 = tree.n + 1
        self.tree = tree
        self.a = a
        self.b = b
        self.m_plus = [0] * n1
        self.m_minus: list[Optional[int]] = [None] * n1
        self.cov_white: list[Optional[int]] = [None] * n1
        self.nu_plus: Optional[list[int]] = None
        self.nu_minus: Optional[list[int]] = None
        self.nu_cov: Optional[list[int]] = None


def _check_bounds(a: int, b: int) -> None:
    if a < 0 or b < 0:
        raise ValueError("bounds must be nonnegative")
    if a > b:
        raise ValueError(f"lower bound {a} exceeds upper bound {b}")


def solve_ab(tree: RootedTree, a: int, b: int) -> DpTableAB:
    """Post-order pass filling m_plus, m_minus, and cov_white."""
    _check_bounds(a, b)
    table = DpTableAB(tree, a, b)
    m_plus = table.m_plus
    m_minus = table.m_minus
    cov_white = table.cov_white
    children = tree.children
    lo_cov = max(a - 1, 0)

    for v in tree.post_order:
        cs = children[v]
        base = 0
        forced = 0
        forced_sum = 0
        sum_hang = 0
        flex: list[int] = []
        for w in cs:
            mp = m_plus[w]
            cw = cov_white[w]
            sum_hang += mp if cw is None or mp <= cw else cw
            mm = m_minus[w]
            if mm is None:
                forced += 1
                forced_sum += mp
            else:
                base += mm
                flex.append(mp - mm)
        m_plus[v] = 1 + sum_hang

        cap = min(b - forced, len(flex))
        smallest = k_smallest(flex, cap) if cap > 0 else []
        prefix = [0]
        for d in smallest:
            prefix.append(prefix[-1] + d)
        total = base + forced_sum
        m_minus[v] = _window_value(total, forced, prefix, len(flex), a, b)
        cov_white[v] = _window_value(total, forced, prefix, len(flex), lo_cov, b - 1)
    return table


def _window_value(total, forced, prefix, nflex, lo, hi):
    if hi - forced < 0:
        return None
    klo = max(lo - forced, 0)
    khi = min(hi - forced, nflex)
    if klo > khi:
        return None
    return total + min(prefix[klo : khi + 1])


def gamma_ab(table: DpTableAB) -> CostValue:
    """Root minimum; infinite means no [a,b]-set exists (possible once a >= 2)."""
    root = table.tree.root
    mm = table.m_minus[root]
    mp = table.m_plus[root]
    return from_optional(mp if mm is None or mp <= mm else mm)


def extract_set_ab(tree: RootedTree, table: DpTableAB) -> Bicoloring:
    """One minimum [a,b]-set.

    Selections are recomputed along the winning branch only.  Ties prefer
    the black side, then the smallest selection, then lexicographic ids.
    """
    a, b = table.a, table.b
    if not gamma_ab(table).is_finite:
        raise NoSetError(f"no [{a},{b}]-set exists for this tree")
    m_plus = table.m_plus
    m_minus = table.m_minus
    cov_white = table.cov_white
    children = tree.children
    lo_cov = max(a - 1, 0)
    black = []
    root = tree.root
    mm = table.m_minus[root]
    if mm is None or m_plus[root] <= mm:
        stack: list[tuple] = [(root, -1, -1)]
    else:
        stack = [(root, a, b)]
    while stack:
        v, lo, hi = stack.pop()
        if lo < 0:
            black.append(v)
            for w in children[v]:
                cw = cov_white[w]
                if cw is None or m_plus[w] <= cw:
                    stack.append((w, -1, -1))
                else:
                    stack.append((w, lo_cov, b - 1))
        else:
            entries = [(m_plus[w], m_minus[w], w) for w in children[v]]
            _, chosen = best_selection(entries, lo, hi)
            inside = frozenset(chosen)
            for w in children[v]:
                if w in inside:
                    stack.append((w, -1, -1))
                else:
                    stack.append((w, a, b))
    return Bicoloring(frozenset(black), Mode.interval(a, b))


def count_sets_ab(tree: RootedTree, table: DpTableAB) -> int:
    """Exact number of distinct minimum [a,b]-sets (0 when none exist)."""
    if table.nu_plus is None:
        a, b = table.a, table.b
        lo_cov = max(a - 1, 0)
        n1 = tree.n + 1
        nu_plus = [0] * n1
        nu_minus = [0] * n1
        nu_cov = [0] * n1
        nu_hang = [0] * n1
        m_plus = table.m_plus
        m_minus = table.m_minus
        cov_white = table.cov_white
        for v in tree.post_order:
            cs = tree.children[v]
            prod = 1
            for w in cs:
                prod *= nu_hang[w]
            nu_plus[v] = prod
            entries = [(m_plus[w], nu_plus[w], m_minus[w], nu_minus[w]) for w in cs]
            val, ways = count_selections(entries, a, b)
            assert val == m_minus[v], f"white-side count disagrees at {v}"
            nu_minus[v] = ways
            val, ways = count_selections(entries, lo_cov, b - 1)
            assert val == cov_white[v], f"covered-white count disagrees at {v}"
            nu_cov[v] = ways
            hang = m_plus[v]
            cw = cov_white[v]
            if cw is not None and cw < hang:
                hang = cw
            h = nu_plus[v] if m_plus[v] == hang else 0
            if cw == hang:
                h += nu_cov[v]
            nu_hang[v] = h
        table.nu_plus = nu_plus
        table.nu_minus = nu_minus
        table.nu_cov = nu_cov
    root = tree.root
    mp = table.m_plus[root]
    mm = table.m_minus[root]
    if mm is None or mp < mm:
        return table.nu_plus[root]
    if mp == mm:
        return table.nu_plus[root] + table.nu_minus[root]
    return table.nu_minus[root]
