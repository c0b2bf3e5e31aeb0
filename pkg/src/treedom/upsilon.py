"""Recursive generation of every tree that admits a total [1,2]-set,
paired with every such set it admits.

A colored tree couples a tree with one candidate set, drawn as black
vertices.  Starting from the two-vertex path colored all black, five local
expansions preserve the total [1,2] property:

  white_leaf  attach a white leaf to any black vertex
  black_leaf  attach a black leaf to a black vertex with exactly one
              black neighbor
  pair        attach a black-black path to a white vertex with exactly
              one black neighbor
  tail        attach a white-black-black path to a white vertex with
              exactly one black neighbor
  tail2       attach a white-black-black path to a white vertex with
              exactly two black neighbors

Walking the rules breadth-first by vertex count and deduplicating on
colored canonical codes yields, for each n, one representative per
isomorphism class of (tree, set) pairs whose set is total [1,2]; the
exhaustive oracle confirms completeness at small n.  Every emitted pair is
revalidated on construction, so an encoding slip in a rule raises instead
of silently producing junk.
"""

from __future__ import annotations

from dataclasses import dataclass

from .oracle import Mode, validate_set
from .tree import RootedTree, colored_code

TOTAL_12 = Mode.total(1, 2)

WHITE = False
BLACK = True


@dataclass(frozen=True)
class ColoredTree:
    """A tree on vertices 1..n with a distinguished black set.

    provenance records the expansion chain that produced this instance;
    an isomorphic pair reachable several ways keeps whichever chain
    arrived first.
    """

    n: int
    edges: tuple[tuple[int, int], ...]
    black: frozenset
    provenance: tuple[str, ...] = ()

    def rooted(self, root: int = 1) -> RootedTree:
        return RootedTree.from_edges(self.n, self.edges, root)

    def code(self) -> bytes:
        """Canonical bytes identifying the (tree, set) pair up to isomorphism."""
        return colored_code(self.rooted(), self.black)


def seed() -> ColoredTree:
    """The two-vertex path, both endpoints black: the smallest total pair."""
    return ColoredTree(2, ((1, 2),), frozenset((1, 2)), ("seed",))


def _grown(ct: ColoredTree, chain, site: int, tag: str) -> ColoredTree:
    """Attach a path of fresh vertices at site, colored per chain."""
    edges = list(ct.edges)
    black = set(ct.black)
    prev = site
    for i, is_black in enumerate(chain):
        w = ct.n + 1 + i
        edges.append((prev, w) if prev < w else (w, prev))
        if is_black:
            black.add(w)
        prev = w
    grown = ColoredTree(
        ct.n + len(chain),
        tuple(sorted(edges)),
        frozenset(black),
        ct.provenance + (f"{tag}@{site}",),
    )
    if not validate_set(grown.rooted(), grown.black, TOTAL_12):
        raise RuntimeError(f"expansion {tag} at vertex {site} broke the total [1,2] property")
    return grown


def expansions(ct: ColoredTree) -> list[ColoredTree]:
    """All single-rule successors, sites visited in ascending vertex order."""
    black_neighbors = [0] * (ct.n + 1)
    for u, v in ct.edges:
        if v in ct.black:
            black_neighbors[u] += 1
        if u in ct.black:
            black_neighbors[v] += 1
    out = []
    for v in range(1, ct.n + 1):
        if v in ct.black:
            out.append(_grown(ct, (WHITE,), v, "white_leaf"))
            if black_neighbors[v] == 1:
                out.append(_grown(ct, (BLACK,), v, "black_leaf"))
        elif black_neighbors[v] == 1:
            out.append(_grown(ct, (BLACK, BLACK), v, "pair"))
            out.append(_grown(ct, (WHITE, BLACK, BLACK), v, "tail"))
        elif black_neighbors[v] == 2:
            out.append(_grown(ct, (WHITE, BLACK, BLACK), v, "tail2"))
    return out


def generate(max_n: int) -> list[ColoredTree]:
    """Every (tree, total [1,2]-set) pair with 2 <= n <= max_n, one
    representative per colored isomorphism class, ordered by n then code.
    """
    if max_n < 2:
        return []
    pending: dict[int, list[ColoredTree]] = {2: [seed()]}
    result = []
    for n in range(2, max_n + 1):
        bucket: dict[bytes, ColoredTree] = {}
        for ct in pending.pop(n, ()):
            code = ct.code()
            if code not in bucket:
                bucket[code] = ct
        level = [bucket[c] for c in sorted(bucket)]
        result.extend(level)
        for ct in level:
            for nxt in expansions(ct):
                if nxt.n <= max_n:
                    pending.setdefault(nxt.n, []).append(nxt)
    return result
