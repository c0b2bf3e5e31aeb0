"""Exhaustive ground truth by subset enumeration on small trees.

This module's value is its obviousness: it applies the set definitions
literally to all 2**n candidate subsets, so every solver in the package can
be checked against it.  Candidate sets are bitmasks and neighbourhood
intersections are popcounts, which keeps full scans of 10-vertex trees
effectively free.  Subsets are visited in increasing cardinality, so the
scan stops at the first feasible size unless a full count is needed.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, Optional

from .cost import INFINITY, CostValue
from .tree import RootedTree, adjacency

MAX_ORACLE_N = 24
DEFAULT_SET_CAP = 10**6

KIND_INTERVAL = "interval"
KIND_TOTAL = "total"


@dataclass(frozen=True)
class Mode:
    """Which membership rule a candidate set is judged by.

    interval: every vertex OUTSIDE the set needs between a and b neighbors
    inside it.  total: EVERY vertex does, members included.
    """

    kind: str
    a: int
    b: int

    def __post_init__(self):
        if self.kind not in (KIND_INTERVAL, KIND_TOTAL):
            raise ValueError(f"unknown mode kind {self.kind!r}")
        if self.a < 0 or self.b < 0:
            raise ValueError("bounds must be nonnegative")
        if self.a > self.b:
            raise ValueError(f"lower bound {self.a} exceeds upper bound {self.b}")

    @classmethod
    def interval(cls, a: int, b: int) -> "Mode":
        return cls(KIND_INTERVAL, a, b)

    @classmethod
    def total(cls, a: int, b: int) -> "Mode":
        return cls(KIND_TOTAL, a, b)

    def describe(self) -> str:
        shape = "total [{a},{b}]-set" if self.kind == KIND_TOTAL else "[{a},{b}]-set"
        return shape.format(a=self.a, b=self.b)


@dataclass(frozen=True)
class OracleResult:
    """Outcome of one exhaustive scan.

    sets holds every minimum set when their number stays within the cap,
    otherwise it is None and truncated is set.  count is always exact.
    """

    min_size: CostValue
    count: int
    sets: Optional[tuple[frozenset, ...]]
    truncated: bool = False


def _neighbor_masks(tree: RootedTree) -> list[int]:
    masks = [0] * (tree.n + 1)
    for u, v in tree.edges:
        masks[u] |= 1 << (v - 1)
        masks[v] |= 1 << (u - 1)
    return masks


def validate_set(tree: RootedTree, s, mode: Mode) -> bool:
    """Apply the mode's membership rule literally to one candidate set."""
    black = set(s)
    for v in black:
        if not (1 <= v <= tree.n):
            raise ValueError(f"vertex {v} outside 1..{tree.n}")
    adj = adjacency(tree)
    total = mode.kind == KIND_TOTAL
    for v in range(1, tree.n + 1):
        if not total and v in black:
            continue
        cnt = 0
        for w in adj[v]:
            if w in black:
                cnt += 1
        if not (mode.a <= cnt <= mode.b):
            return False
    return True


def _valid_masks_of_size(tree: RootedTree, mode: Mode, size: int) -> Iterator[int]:
    n = tree.n
    masks = _neighbor_masks(tree)
    a, b = mode.a, mode.b
    total = mode.kind == KIND_TOTAL
    vertices = range(1, n + 1)
    for combo in itertools.combinations(range(n), size):
        smask = 0
        for pos in combo:
            smask |= 1 << pos
        ok = True
        for v in vertices:
            if not total and smask >> (v - 1) & 1:
                continue
            cnt = (masks[v] & smask).bit_count()
            if cnt < a or cnt > b:
                ok = False
                break
        if ok:
            yield smask



def _mask_to_set(mask: int) -> frozenset:
    out = []
    v = 1
    while mask:
        if mask & 1:
            out.append(v)
        mask >>= 1
        v += 1
    return frozenset(out)


def oracle_solve(
    tree: RootedTree,
    mode: Mode,
    *,
    max_n: int = MAX_ORACLE_N,
    set_cap: int = DEFAULT_SET_CAP,
    want_sets: bool = True,
) -> OracleResult:
    """Minimum size, exact count, and (optionally) all minimum sets.

    Scans subset sizes upward and stops at the first size with a match;
    only that size is enumerated fully, never all 2**n subsets, unless no
    set exists at all.
    """
    if tree.n > max_n:
        raise ValueError(f"n={tree.n} exceeds the oracle cap of {max_n}")
    for size in range(0, tree.n + 1):
        found = list(_valid_masks_of_size(tree, mode, size))
        if found:
            count = len(found)
            if want_sets and count <= set_cap:
                sets = tuple(_mask_to_set(m) for m in found)
                return OracleResult(CostValue(size), count, sets, False)
            return OracleResult(CostValue(size), count, None, want_sets)
    return OracleResult(INFINITY, 0, () if want_sets else None, False)


def all_valid_sets(tree: RootedTree, mode: Mode) -> Iterator[frozenset]:
    """Every valid set of any size, in increasing cardinality."""
    if tree.n > MAX_ORACLE_N:
        raise ValueError(f"n={tree.n} exceeds the oracle cap of {MAX_ORACLE_N}")
    for size in range(0, tree.n + 1):
        for mask in _valid_masks_of_size(tree, mode, size):
            yield _mask_to_set(mask)
