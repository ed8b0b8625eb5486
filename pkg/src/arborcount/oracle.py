"""Brute-force tree enumeration by canonical forms.

Independent of the generating-function engine: builds every rooted tree up
to a size cap as an explicit canonical structure, derives free trees by
re-rooting at the center, and counts each family by direct inspection.
Used as ground truth in tests and by the verify command.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, Iterator, List, Sequence, Set, Tuple, Union

from .trees import TreeFamily

DEFAULT_CAP = 16

Adjacency = Dict[int, List[int]]
Center = Union[int, Tuple[int, int]]


class CapExceeded(ValueError):
    """Requested size is above the combinatorial-explosion guard."""

    def __init__(self, n: int, cap: int):
        self.n = n
        self.cap = cap
        super().__init__(
            "n=%d exceeds the enumeration cap %d (raise it with --cap)" % (n, cap)
        )


class NotATree(ValueError):
    """The input graph is not connected and acyclic."""


class CanonicalTree:
    """An unlabeled rooted tree in canonical form.

    Children are stored sorted descending by a structural key (size first,
    then the recursive child keys), so two rooted trees are isomorphic iff
    their CanonicalTree values compare equal.
    """

    __slots__ = ("children", "size", "key")

    def __init__(self, children: Sequence["CanonicalTree"] = ()):
        kids = tuple(sorted(children, key=lambda t: t.key, reverse=True))
        self.children = kids
        self.size = 1 + sum(c.size for c in kids)
        self.key = (self.size, tuple(c.key for c in kids))

    def __eq__(self, other) -> bool:
        return isinstance(other, CanonicalTree) and self.key == other.key

    def __hash__(self) -> int:
        return hash(self.key)

    def __lt__(self, other: "CanonicalTree") -> bool:
        return self.key < other.key

    def __repr__(self) -> str:
        return "CanonicalTree<%s>" % self.encode()

    def encode(self) -> str:
        """Nested-parenthesis encoding; equal iff trees are isomorphic."""
        return "(" + "".join(c.encode() for c in self.children) + ")"

    def to_adjacency(self) -> Adjacency:
        """Label vertices 0..size-1 in preorder; the root is 0."""
        adj: Adjacency = {0: []}
        counter = [0]

        def build(node: "CanonicalTree", label: int) -> None:
            for child in node.children:
                counter[0] += 1
                cl = counter[0]
                adj[cl] = [label]
                adj[label].append(cl)
                build(child, cl)

        build(self, 0)
        return adj


LEAF = CanonicalTree()


@dataclass(frozen=True)
class FreeTreeForm:
    """Canonical form of an unlabeled free tree, anchored at its center.

    kind 'vertex': parts is a single tree rooted at the center vertex.
    kind 'edge': parts is the pair of halves obtained by cutting the center
    edge, each rooted at an endpoint, stored sorted descending.  The halves
    always have equal height (that is what makes the edge central); their
    sizes may differ.
    """

    kind: str
    parts: Tuple[CanonicalTree, ...]

    def size(self) -> int:
        return sum(p.size for p in self.parts)

    def encode(self) -> str:
        if self.kind == "vertex":
            return self.parts[0].encode()
        return self.parts[0].encode() + "-" + self.parts[1].encode()

    def to_adjacency(self) -> Adjacency:
        if self.kind == "vertex":
            return self.parts[0].to_adjacency()
        left, right = self.parts
        adj = left.to_adjacency()
        offset = left.size
        for v, nbrs in right.to_adjacency().items():
            adj[v + offset] = [u + offset for u in nbrs]
        adj[0].append(offset)
        adj[offset].append(0)
        return adj

    def degrees(self) -> List[int]:
        return [len(nbrs) for nbrs in self.to_adjacency().values()]


_rooted_cache: Dict[int, Tuple[CanonicalTree, ...]] = {1: (LEAF,)}


def _rooted(n: int) -> Tuple[CanonicalTree, ...]:
    """All rooted trees with n vertices, sorted descending by key."""
    cached = _rooted_cache.get(n)
    if cached is not None:
        return cached

    # Pool of all strictly smaller trees, descending (size-major) order.
    pool: List[CanonicalTree] = []
    for m in range(n - 1, 0, -1):
        pool.extend(_rooted(m))
    # first_fit[s] = first pool index whose tree has size <= s
    first_fit = [len(pool)] * n
    for idx in range(len(pool) - 1, -1, -1):
        for s in range(pool[idx].size, n):
            first_fit[s] = idx

    def forests(remaining: int, start: int) -> Iterator[Tuple[CanonicalTree, ...]]:
        if remaining == 0:
            yield ()
            return
        for i in range(max(start, first_fit[remaining]), len(pool)):
            t = pool[i]
            for rest in forests(remaining - t.size, i):
                yield (t,) + rest

    # Picking pool entries in non-decreasing index order yields each
    # multiset of subtrees exactly once, already canonically sorted.
    trees = tuple(CanonicalTree(f) for f in forests(n - 1, 0))
    result = tuple(sorted(trees, key=lambda t: t.key, reverse=True))
    _rooted_cache[n] = result
    return result


def gen_rooted(n: int, cap: int = DEFAULT_CAP) -> List[CanonicalTree]:
    """One CanonicalTree per isomorphism class of n-vertex rooted trees."""
    if n < 1:
        raise ValueError("n must be at least 1")
    if n > cap:
        raise CapExceeded(n, cap)
    return list(_rooted(n))


def _validate_tree(adj: Adjacency) -> None:
    n = len(adj)
    if n == 0:
        raise NotATree("empty graph")
    edges = sum(len(nbrs) for nbrs in adj.values())
    if edges != 2 * (n - 1):
        raise NotATree("a tree on %d vertices needs exactly %d edges" % (n, n - 1))
    seen = set()
    stack = [next(iter(adj))]
    while stack:
        v = stack.pop()
        if v in seen:
            continue
        seen.add(v)
        stack.extend(u for u in adj[v] if u not in seen)
    if len(seen) != n:
        raise NotATree("graph is disconnected")


def center_of(adj: Adjacency) -> Center:
    """Center of a tree by simultaneous leaf stripping.

    Returns the center vertex, or a sorted (u, v) tuple for the center edge.
    Raises NotATree for cyclic or disconnected input.
    """
    _validate_tree(adj)
    if len(adj) == 1:
        return next(iter(adj))
    degree = {v: len(nbrs) for v, nbrs in adj.items()}
    remaining: Set[int] = set(adj)
    while len(remaining) > 2:
        leaves = [v for v in remaining if degree[v] == 1]
        for v in leaves:
            remaining.remove(v)
            for u in adj[v]:
                if u in remaining:
                    degree[u] -= 1
    if len(remaining) == 1:
        return remaining.pop()
    u, v = sorted(remaining)
    return (u, v)


def canonical_rooted(adj: Adjacency, root: int) -> CanonicalTree:
    """Canonicalize a labeled tree rooted at the given vertex."""

    def build(v: int, parent: int) -> CanonicalTree:
        return CanonicalTree([build(u, v) for u in adj[v] if u != parent])

    return build(root, -1)


def free_form(adj: Adjacency) -> FreeTreeForm:
    """Canonical form of a labeled free tree via its center."""
    center = center_of(adj)
    if isinstance(center, int):
        return FreeTreeForm("vertex", (canonical_rooted(adj, center),))
    u, v = center
    half_u = _rooted_across(adj, u, v)
    half_v = _rooted_across(adj, v, u)
    parts = tuple(sorted((half_u, half_v), key=lambda t: t.key, reverse=True))
    return FreeTreeForm("edge", parts)


def _rooted_across(adj: Adjacency, root: int, blocked: int) -> CanonicalTree:
    def build(v: int, parent: int) -> CanonicalTree:
        return CanonicalTree(
            [build(u, v) for u in adj[v] if u != parent and (v, u) != (root, blocked)]
        )

    return build(root, -1)


_free_cache: Dict[int, Tuple[FreeTreeForm, ...]] = {}


def gen_free(n: int, cap: int = DEFAULT_CAP) -> List[FreeTreeForm]:
    """One FreeTreeForm per isomorphism class of n-vertex free trees.

    Every free tree occurs among the rooted trees of the same size, so
    re-rooting each rooted tree at its center and deduplicating covers all
    classes exactly once.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    if n > cap:
        raise CapExceeded(n, cap)
    cached = _free_cache.get(n)
    if cached is None:
        forms = {free_form(t.to_adjacency()) for t in _rooted(n)}
        cached = tuple(sorted(forms, key=lambda f: f.encode()))
        _free_cache[n] = cached
    return list(cached)


def filter_hit(forms: Sequence[FreeTreeForm]) -> List[FreeTreeForm]:
    """Keep free trees with no vertex of degree 2."""
    return [f for f in forms if all(d != 2 for d in f.degrees())]


def _no_vertex_with_one_child(t: CanonicalTree) -> bool:
    return len(t.children) != 1 and all(
        _no_vertex_with_one_child(c) for c in t.children
    )


def _is_stree(t: CanonicalTree) -> bool:
    return _no_vertex_with_one_child(t)


def _is_hit_rooted(t: CanonicalTree) -> bool:
    # Root may have any child count except 2; below the root, child count 1
    # would be a degree-2 vertex of the underlying free tree.
    return len(t.children) != 2 and all(
        _no_vertex_with_one_child(c) for c in t.children
    )


def _strees_by_size(max_size: int, cap: int) -> Dict[int, List[CanonicalTree]]:
    return {
        m: [t for t in gen_rooted(m, cap) if _is_stree(t)]
        for m in range(1, max_size + 1)
    }


def count_family(family: TreeFamily, n: int, cap: int = DEFAULT_CAP) -> int:
    """Brute-force count of n-vertex trees in the given family."""
    if family is TreeFamily.ROOTED:
        return len(gen_rooted(n, cap))
    if family is TreeFamily.UNROOTED:
        return len(gen_free(n, cap))
    if family is TreeFamily.HIT:
        return len(filter_hit(gen_free(n, cap)))
    if family is TreeFamily.STREE:
        return sum(1 for t in gen_rooted(n, cap) if _is_stree(t))
    if family is TreeFamily.HIT_VERTEX_ROOTED:
        return sum(1 for t in gen_rooted(n, cap) if _is_hit_rooted(t))
    if family is TreeFamily.HIT_EDGE_ROOTED:
        if n < 2:
            return 0
        strees = _strees_by_size(n - 1, cap)
        seen = set()
        for i in range(1, n):
            for a in strees[i]:
                for b in strees[n - i]:
                    seen.add(tuple(sorted((a.key, b.key))))
        return len(seen)
    if family is TreeFamily.HIT_VERTEX_EDGE_ROOTED:
        if n < 2:
            return 0
        strees = _strees_by_size(n - 1, cap)
        return sum(
            len(strees[i]) * len(strees[n - i]) for i in range(1, n)
        )
    raise ValueError("unknown family: %r" % (family,))
