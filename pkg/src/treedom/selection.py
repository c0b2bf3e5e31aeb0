"""Bounded child-selection: the kernel shared by every solver in the package.

Each DP step below reduces to the same question.  A vertex has children;
making child i "black" costs in_cost(i), leaving it "white" costs
out_cost(i), and the number of black children must land in [lo, hi].
Writing delta(i) = in_cost(i) - out_cost(i), the total is

    sum(out_cost) + sum of the chosen deltas,

so the optimum takes the k smallest deltas for the best feasible k.  The k
smallest are maintained in a bounded max-heap of capacity hi whose running
sum is tracked separately, which keeps a vertex with many children at
O(degree * log hi) instead of a full sort.

Infinite costs never enter the delta arithmetic.  A child with infinite
out_cost is forced black, one with infinite in_cost is forbidden, and a
child infinite on both sides makes every selection infinite.  Costs are
plain ints with None standing for infinity.
"""

from __future__ import annotations

import heapq
import itertools
from typing import Iterable, Iterator, Optional, Sequence


class BoundedMaxHeap:
    """Keeps the ``capacity`` smallest integers offered, with a running sum.

    Eviction needs fast access to the largest kept value, hence a max-heap,
    realized as a min-heap of negated values.  ``total`` always equals the
    sum of the kept values, updated incrementally on insert and evict.
    """

    __slots__ = ("capacity", "total", "_neg")

    def __init__(self, capacity: int):
        self.capacity = capacity
        self.total = 0
        self._neg: list[int] = []

    def __len__(self) -> int:
        return len(self._neg)

    def offer(self, value: int) -> None:
        if self.capacity <= 0:
            return
        if len(self._neg) < self.capacity:
            heapq.heappush(self._neg, -value)
            self.total += value
        elif value < -self._neg[0]:
            evicted = -heapq.heapreplace(self._neg, -value)
            self.total += value - evicted

    def sorted_values(self) -> list[int]:
        return sorted(-x for x in self._neg)


def k_smallest(values: Iterable[int], k: int) -> list[int]:
    """The k smallest values, ascending, via the bounded heap."""
    if k <= 0:
        return []
    vals = values if isinstance(values, list) else list(values)
    if len(vals) <= k:
        return sorted(vals)
    heap = BoundedMaxHeap(k)
    for v in vals:
        heap.offer(v)
    return heap.sorted_values()


def best_delta_sum(deltas: Iterable[int], lo: int, hi: int) -> Optional[int]:
    """Minimum sum of k deltas over lo <= k <= hi; None when no k is feasible.

    Production route: bounded max-heap, then a prefix scan of its contents.
    """
    if hi < 0 or lo > hi:
        return None
    smallest = k_smallest(deltas, hi)
    klo = max(lo, 0)
    if klo > len(smallest):
        return None
    best = None
    acc = 0
    if klo == 0:
        best = 0
    for k, d in enumerate(smallest, start=1):
        acc += d
        if k >= klo and (best is None or acc < best):
            best = acc
    return best


def best_delta_sum_by_sort(deltas: Iterable[int], lo: int, hi: int) -> Optional[int]:
    """Reference route for the same quantity: full sort and direct scan.

    Kept deliberately independent of the heap path so the two can be checked
    against each other.
    """
    if hi < 0 or lo > hi:
        return None
    ordered = sorted(deltas)
    klo = max(lo, 0)
    khi = min(hi, len(ordered))
    if klo > khi:
        return None
    candidates = []
    for k in range(klo, khi + 1):
        candidates.append(sum(ordered[:k]))
    return min(candidates)


def evaluate_ranges(
    entries: Iterable[tuple[Optional[int], Optional[int]]],
    ranges: Sequence[tuple[int, int]],
) -> list[Optional[int]]:
    """Optimal selection totals for several [lo, hi] ranges at once.

    entries yields (in_cost, out_cost) per child; the result holds, per
    range, min over selections A with |A| in [lo, hi] of
    sum(in_cost over A) + sum(out_cost over the rest), or None.
    The forced/forbidden split and the heap pass are shared by all ranges.
    """
    base = 0
    forced = 0
    forced_sum = 0
    flex: list[int] = []
    for ic, oc in entries:
        if oc is None:
            if ic is None:
                return [None] * len(ranges)
            forced += 1
            forced_sum += ic
        elif ic is None:
            base += oc
        else:
            base += oc
            flex.append(ic - oc)

    cap = 0
    for lo, hi in ranges:
        cap = max(cap, min(hi - forced, len(flex)))
    smallest = k_smallest(flex, cap)
    prefix = [0]
    for d in smallest:
        prefix.append(prefix[-1] + d)

    out: list[Optional[int]] = []
    for lo, hi in ranges:
        klo = max(lo - forced, 0)
        khi = min(hi - forced, len(flex))
        if hi - forced < 0 or klo > khi:
            out.append(None)
        else:
            out.append(base + forced_sum + min(prefix[klo : khi + 1]))
    return out


def selection_value(
    entries: Iterable[tuple[Optional[int], Optional[int]]], lo: int, hi: int
) -> Optional[int]:
    return evaluate_ranges(entries, [(lo, hi)])[0]


def _split_detailed(entries):
    """Split (in_cost, out_cost, id) triples; None signals a dead child."""
    base = 0
    forced_ids: list[int] = []
    forced_sum = 0
    flex: list[tuple[int, int]] = []
    for ic, oc, cid in entries:
        if oc is None:
            if ic is None:
                return None
            forced_ids.append(cid)
            forced_sum += ic
        elif ic is None:
            base += oc
        else:
            base += oc
            flex.append((ic - oc, cid))
    flex.sort()
    return base, forced_ids, forced_sum, flex


def best_selection(
    entries: Iterable[tuple[Optional[int], Optional[int], int]], lo: int, hi: int
) -> tuple[Optional[int], Optional[tuple[int, ...]]]:
    """Optimal value plus one deterministic witness selection.

    Ties resolve to the smallest feasible cardinality, then to the
    lexicographically smallest id set (the (delta, id) sort gives both).
    """
    split = _split_detailed(entries)
    if split is None or hi < 0 or lo > hi:
        return None, None
    base, forced_ids, forced_sum, flex = split
    f = len(forced_ids)
    klo = max(lo - f, 0)
    khi = min(hi - f, len(flex))
    if hi - f < 0 or klo > khi:
        return None, None
    prefix = [0]
    for d, _ in flex:
        prefix.append(prefix[-1] + d)
    best_k = klo
    for k in range(klo, khi + 1):
        if prefix[k] < prefix[best_k]:
            best_k = k
    chosen = forced_ids + [cid for _, cid in flex[:best_k]]
    return base + forced_sum + prefix[best_k], tuple(sorted(chosen))


def optimal_selections(
    entries: Iterable[tuple[Optional[int], Optional[int], int]], lo: int, hi: int
) -> Iterator[tuple[int, ...]]:
    """Every optimal selection exactly once, deterministically ordered.

    Order: ascending cardinality, then lexicographic within the tied delta
    group.  The first item equals best_selection's witness.
    """
    split = _split_detailed(entries)
    if split is None or hi < 0 or lo > hi:
        return
    base, forced_ids, forced_sum, flex = split
    f = len(forced_ids)
    klo = max(lo - f, 0)
    khi = min(hi - f, len(flex))
    if hi - f < 0 or klo > khi:
        return
    prefix = [0]
    for d, _ in flex:
        prefix.append(prefix[-1] + d)
    best = min(prefix[klo : khi + 1])
    for k in range(klo, khi + 1):
        if prefix[k] != best:
            continue
        if k == 0:
            yield tuple(sorted(forced_ids))
            continue
        threshold = flex[k - 1][0]
        lt_ids = [cid for d, cid in flex if d < threshold]
        group_ids = [cid for d, cid in flex if d == threshold]
        r = k - len(lt_ids)
        for combo in itertools.combinations(group_ids, r):
            yield tuple(sorted(forced_ids + lt_ids + list(combo)))


def _tie_group_coefficient(group: Sequence[tuple[int, int]], r: int) -> int:
    """Coefficient of x**r in the product of (out_ways + in_ways * x)."""
    co = [0] * (r + 1)
    co[0] = 1
    for in_ways, out_ways in group:
        nxt = [0] * (r + 1)
        for j, c in enumerate(co):
            if not c:
                continue
            nxt[j] += c * out_ways
            if j + 1 <= r:
                nxt[j + 1] += c * in_ways
        co = nxt
    return co[r]


def count_selections(
    entries: Iterable[tuple[Optional[int], int, Optional[int], int]], lo: int, hi: int
) -> tuple[Optional[int], int]:
    """Optimal value and the exact number of ways to realize it.

    entries yields (in_cost, in_ways, out_cost, out_ways) per child, the
    ways being how many distinct optimal configurations the child's subtree
    admits on that side.  Distinct selections are disjoint families, so
    their way-products add; within a tied delta group the count is a
    coefficient of the group's generating polynomial.  Counts are exact
    arbitrary-precision integers.
    """
    if hi < 0 or lo > hi:
        return None, 0
    base = 0
    ways_base = 1
    forced = 0
    forced_sum = 0
    flex: list[tuple[int, int, int]] = []
    for ic, iw, oc, ow in entries:
        if oc is None:
            if ic is None:
                return None, 0
            forced += 1
            forced_sum += ic
            ways_base *= iw
        elif ic is None:
            base += oc
            ways_base *= ow
        else:
            base += oc
            flex.append((ic - oc, iw, ow))
    klo = max(lo - forced, 0)
    khi = min(hi - forced, len(flex))
    if hi - forced < 0 or klo > khi:
        return None, 0
    flex.sort(key=lambda t: t[0])
    prefix = [0]
    for d, _, _ in flex:
        prefix.append(prefix[-1] + d)
    best = min(prefix[klo : khi + 1])
    total_ways = 0
    for k in range(klo, khi + 1):
        if prefix[k] != best:
            continue
        if k == 0:
            w = 1
            for _, _, ow in flex:
                w *= ow
            total_ways += w
            continue
        threshold = flex[k - 1][0]
        w = 1
        lt = 0
        group: list[tuple[int, int]] = []
        for d, iw, ow in flex:
            if d < threshold:
                w *= iw
                lt += 1
            elif d > threshold:
                w *= ow
            else:
                group.append((iw, ow))
        w *= _tie_group_coefficient(group, k - lt)
        total_ways += w
    return base + forced_sum + best, ways_base * total_ways
