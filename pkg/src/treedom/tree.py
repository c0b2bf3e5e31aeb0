"""Rooted trees: parsing, traversal order, canonical forms, random generation.

Trees are stored with vertices labeled 1..n.  Children are kept in ascending
vertex-id order and the post-order sequence is fixed by that ordering, so
every downstream computation (witness sets, enumeration order) is
deterministic for a given labeled input.

The edge-list text format: the first significant line holds n, each further
line holds one undirected edge "u v".  Lines starting with '#' and blank
lines are ignored.  A document must contain exactly n-1 edges describing a
connected graph; each way an input can violate that contract raises its own
exception type so callers can report precisely what went wrong.
"""

from __future__ import annotations

import random
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence


class TreeInputError(ValueError):
    """Base for every rejection of an input document or edge set."""


class MalformedLineError(TreeInputError):
    """A line is not a valid header or "u v" edge line, or an edge is degenerate."""


class VertexRangeError(TreeInputError):
    """An edge endpoint lies outside 1..n."""


class DuplicateEdgeError(TreeInputError):
    """The same undirected edge appears twice."""


class EdgeCountError(TreeInputError):
    """The number of edges differs from n-1."""


class DisconnectedError(TreeInputError):
    """The edges do not connect all n vertices."""


class RootRangeError(TreeInputError):
    """The requested root lies outside 1..n."""


class RootedTree:
    """An immutable rooted tree on vertices 1..n.

    Fields:
      n: vertex count.
      root: the designated root.
      edges: sorted tuple of (min, max) endpoint pairs.
      parent: list indexed by vertex; parent[root] == 0.
      children: list indexed by vertex; each entry is an ascending tuple.
      post_order: tuple listing every vertex after all of its descendants.
    """

    __slots__ = ("n", "root", "edges", "parent", "children", "post_order")

    def __init__(self, n: int, edges, root: int, parent, children, post_order):
        self.n = n
        self.root = root
        self.edges = edges
        self.parent = parent
        self.children = children
        self.post_order = post_order

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]], root: int = 1) -> "RootedTree":
        if n < 1:
            raise MalformedLineError("vertex count must be at least 1")
        norm = []
        seen = set()
        for u, v in edges:
            if not (1 <= u <= n):
                raise VertexRangeError(f"vertex {u} outside 1..{n}")
            if not (1 <= v <= n):
                raise VertexRangeError(f"vertex {v} outside 1..{n}")
            if u == v:
                raise MalformedLineError(f"edge {u} {v} joins a vertex to itself")
            key = (u, v) if u < v else (v, u)
            if key in seen:
                raise DuplicateEdgeError(f"edge {key[0]} {key[1]} appears twice")
            seen.add(key)
            norm.append(key)
        if len(norm) != n - 1:
            raise EdgeCountError(f"expected {n - 1} edges for n={n}, got {len(norm)}")
        if not (1 <= root <= n):
            raise RootRangeError(f"root {root} outside 1..{n}")
        norm.sort()

        adj = [[] for _ in range(n + 1)]
        for u, v in norm:
            adj[u].append(v)
            adj[v].append(u)
        for lst in adj:
            lst.sort()

        parent = [0] * (n + 1)
        children = [()] * (n + 1)
        visited = [False] * (n + 1)
        visited[root] = True
        queue = deque([root])
        reached = 0
        while queue:
            v = queue.popleft()
            reached += 1
            kids = []
            for w in adj[v]:
                if not visited[w]:
                    visited[w] = True
                    parent[w] = v
                    kids.append(w)
                    queue.append(w)
            children[v] = tuple(kids)
        if reached != n:
            raise DisconnectedError(f"only {reached} of {n} vertices reachable")

        # Reversed right-to-left preorder gives a post-order without recursion.
        pre = []
        stack = [root]
        while stack:
            v = stack.pop()
            pre.append(v)
            stack.extend(children[v])
        pre.reverse()
        return cls(n, tuple(norm), root, parent, children, tuple(pre))

    def rerooted(self, root: int) -> "RootedTree":
        return RootedTree.from_edges(self.n, self.edges, root)

    def __repr__(self) -> str:
        return f"RootedTree(n={self.n}, root={self.root})"


@dataclass(frozen=True)
class CanonicalCode:
    """Byte string identifying a free tree up to isomorphism."""

    code: bytes


def parse_tree(text: str, root: int = 1) -> RootedTree:
    """Parse an edge-list document and root the tree at ``root``."""
    n: Optional[int] = None
    edges: list[tuple[int, int]] = []
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        if n is None:
            if len(tokens) != 1:
                raise MalformedLineError(f"expected a lone vertex count, got {line!r}")
            try:
                n = int(tokens[0])
            except ValueError:
                raise MalformedLineError(f"vertex count is not an integer: {line!r}") from None
            if n < 1:
                raise MalformedLineError("vertex count must be at least 1")
            continue
        if len(tokens) != 2:
            raise MalformedLineError(f"expected 'u v', got {line!r}")
        try:
            u, v = int(tokens[0]), int(tokens[1])
        except ValueError:
            raise MalformedLineError(f"edge endpoints must be integers: {line!r}") from None
        edges.append((u, v))
    if n is None:
        raise MalformedLineError("empty document: missing vertex count")
    return RootedTree.from_edges(n, edges, root)


def format_tree(tree: RootedTree) -> str:
    """Render a tree back into the edge-list document format."""
    lines = [str(tree.n)]
    lines.extend(f"{u} {v}" for u, v in tree.edges)
    return "\n".join(lines) + "\n"


def post_order(tree: RootedTree) -> tuple[int, ...]:
    """Children-before-parent vertex sequence; the root comes last."""
    return tree.post_order


def adjacency(tree: RootedTree) -> list[list[int]]:
    """Neighbor lists (ascending), indexed by vertex; index 0 unused."""
    adj = [[] for _ in range(tree.n + 1)]
    for u, v in tree.edges:
        adj[u].append(v)
        adj[v].append(u)
    for lst in adj:
        lst.sort()
    return adj


def _subtree_sizes(adj: Sequence[Sequence[int]], n: int, root: int) -> tuple[list[int], list[int], list[int]]:
    """Iterative DFS from root: returns (order, parent, size) arrays."""
    parent = [0] * (n + 1)
    order = []
    stack = [root]
    seen = [False] * (n + 1)
    seen[root] = True
    while stack:
        v = stack.pop()
        order.append(v)
        for w in adj[v]:
            if not seen[w]:
                seen[w] = True
                parent[w] = v
                stack.append(w)
    size = [1] * (n + 1)
    for v in reversed(order):
        if parent[v]:
            size[parent[v]] += size[v]
    return order, parent, size


def _centroids(tree: RootedTree) -> list[int]:
    n = tree.n
    if n == 1:
        return [1]
    adj = adjacency(tree)
    order, parent, size = _subtree_sizes(adj, n, 1)
    best = n + 1
    cents: list[int] = []
    for v in range(1, n + 1):
        heaviest = n - size[v]
        for w in adj[v]:
            if w != parent[v]:
                heaviest = max(heaviest, size[w])
        if heaviest < best:
            best = heaviest
            cents = [v]
        elif heaviest == best:
            cents.append(v)
    return cents


def _rooted_code(tree: RootedTree, root: int, black: Optional[frozenset] = None) -> bytes:
    """Bottom-up sorted-children encoding of the tree rooted at ``root``.

    With ``black`` given, each vertex contributes its color, so equal codes
    mean color-preserving isomorphism of (tree, set) pairs.
    """
    adj = adjacency(tree)
    order, parent, _ = _subtree_sizes(adj, tree.n, root)
    code: dict[int, bytes] = {}
    for v in reversed(order):
        parts = sorted(code[w] for w in adj[v] if parent[w] == v)
        if black is None:
            head = b"("
        else:
            head = b"(B" if v in black else b"(W"
        code[v] = head + b"".join(parts) + b")"
    return code[root]


def canonical_code(tree: RootedTree) -> CanonicalCode:
    """Free-tree canonical form: root at the centroid(s), take the smaller code."""
    cents = _centroids(tree)
    return CanonicalCode(min(_rooted_code(tree, c) for c in cents))


def colored_code(tree: RootedTree, black: frozenset) -> bytes:
    """Canonical form of a (tree, vertex set) pair up to isomorphism."""
    cents = _centroids(tree)
    return min(_rooted_code(tree, c, black) for c in cents)


def random_tree(n: int, seed: int) -> RootedTree:
    """Uniform random labeled tree from a seeded Pruefer sequence; root 1."""
    if n < 1:
        raise ValueError("n must be at least 1")
    if n == 1:
        return RootedTree.from_edges(1, [], 1)
    if n == 2:
        return RootedTree.from_edges(2, [(1, 2)], 1)
    rng = random.Random(seed)
    seq = [rng.randint(1, n) for _ in range(n - 2)]
    degree = [1] * (n + 1)
    for x in seq:
        degree[x] += 1
    import heapq

    leaves = [v for v in range(1, n + 1) if degree[v] == 1]
    heapq.heapify(leaves)
    edges = []
    for x in seq:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, x))
        degree[x] -= 1
        if degree[x] == 1:
            heapq.heappush(leaves, x)
    u = heapq.heappop(leaves)
    v = heapq.heappop(leaves)
    edges.append((u, v))
    return RootedTree.from_edges(n, edges, 1)


def path_tree(n: int, root: int = 1) -> RootedTree:
    return RootedTree.from_edges(n, [(i, i + 1) for i in range(1, n)], root)


def star_tree(n: int, root: int = 1) -> RootedTree:
    """Star with center 1 and n-1 leaves."""
    return RootedTree.from_edges(n, [(1, i) for i in range(2, n + 1)], root)


def spider(leg_lengths: Sequence[int], root: int = 1) -> RootedTree:
    """Center vertex 1 with one pendant path of the given length per leg.

    ``spider([3] * k)`` is the family whose minimum [1,2]-sets number at
    least 2**k; ``spider([2, 2, 2])`` is the 7-vertex tree with no total
    [1,2]-set.
    """
    if not leg_lengths or any(l < 1 for l in leg_lengths):
        raise ValueError("legs must be nonempty paths")
    edges = []
    nxt = 2
    for length in leg_lengths:
        prev = 1
        for _ in range(length):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
    return RootedTree.from_edges(nxt - 1, edges, root)


_FREE_TREES: dict[int, tuple[RootedTree, ...]] = {}


def free_trees(n: int) -> tuple[RootedTree, ...]:
    """All non-isomorphic free trees on n vertices, one representative each.

    Built by extending every (n-1)-vertex tree with one new leaf at every
    vertex and deduplicating on the canonical code.  Representatives are
    rooted at vertex 1; results are cached per n.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    if n in _FREE_TREES:
        return _FREE_TREES[n]
    if n == 1:
        reps = (RootedTree.from_edges(1, [], 1),)
    else:
        seen: dict[bytes, RootedTree] = {}
        for smaller in free_trees(n - 1):
            for attach in range(1, n):
                t = RootedTree.from_edges(n, list(smaller.edges) + [(attach, n)], 1)
                key = canonical_code(t).code
                if key not in seen:
                    seen[key] = t
        reps = tuple(seen.values())
    _FREE_TREES[n] = reps
    return reps
