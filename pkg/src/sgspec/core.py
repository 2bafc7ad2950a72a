"""Signed graphs: validation, switching, balance, girth and structure recognition.

Everything here is combinatorial; no linear algebra is involved.  Vertices are
0-based integers.  A :class:`SignedGraph` is immutable once built.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from enum import Enum
from functools import cached_property
from typing import Iterable, Optional, Sequence


class GraphError(ValueError):
    """Base class for invalid-input errors raised by this package."""


class ValidationError(GraphError):
    pass


class DisconnectedGraph(GraphError):
    pass


class AcyclicGraph(GraphError):
    """Raised when an operation needs a cycle but the graph is a forest."""


Edge = tuple[int, int, int]


@dataclass(frozen=True)
class SignedGraph:
    n: int
    edges: tuple[Edge, ...]

    @cached_property
    def signs(self) -> dict[tuple[int, int], int]:
        return {(u, v): s for u, v, s in self.edges}

    @cached_property
    def neighbors(self) -> tuple[tuple[int, ...], ...]:
        nbrs: list[list[int]] = [[] for _ in range(self.n)]
        for u, v, _ in self.edges:
            nbrs[u].append(v)
            nbrs[v].append(u)
        return tuple(tuple(sorted(a)) for a in nbrs)

    @property
    def m(self) -> int:
        return len(self.edges)

    def sign(self, u: int, v: int) -> int:
        """Sign of edge uv, or 0 if u and v are not adjacent."""
        if u > v:
            u, v = v, u
        return self.signs.get((u, v), 0)

    def degree(self, v: int) -> int:
        return len(self.neighbors[v])

    def max_degree(self) -> int:
        return max((len(a) for a in self.neighbors), default=0)

    def underlying(self) -> frozenset[tuple[int, int]]:
        return frozenset((u, v) for u, v, _ in self.edges)

    def negated(self) -> SignedGraph:
        return SignedGraph(self.n, tuple((u, v, -s) for u, v, s in self.edges))

    def is_connected(self) -> bool:
        return len(_reach(self, 0)) == self.n

    def is_cycle(self) -> bool:
        """True when the underlying graph is a single cycle through all vertices."""
        return (
            self.n >= 3
            and self.m == self.n
            and all(len(a) == 2 for a in self.neighbors)
            and self.is_connected()
        )


def validate(raw_edges: Iterable[Sequence[int]], n: int) -> SignedGraph:
    """Build a normalized :class:`SignedGraph` from ``(u, v, s)`` triples."""
    if n < 1:
        raise ValidationError(f"vertex count must be positive, got {n}")
    seen: dict[tuple[int, int], int] = {}
    for item in raw_edges:
        u, v, s = (int(x) for x in item)
        if not (0 <= u < n and 0 <= v < n):
            raise ValidationError(f"edge ({u}, {v}) has an endpoint outside [0, {n})")
        if u == v:
            raise ValidationError(f"loop at vertex {u}")
        if s not in (1, -1):
            raise ValidationError(f"edge ({u}, {v}) has sign {s}, expected +1 or -1")
        key = (min(u, v), max(u, v))
        if key in seen:
            raise ValidationError(f"duplicate edge between {key[0]} and {key[1]}")
        seen[key] = s
    return SignedGraph(n, tuple((u, v, s) for (u, v), s in sorted(seen.items())))


def _reach(g: SignedGraph, root: int) -> set[int]:
    seen = {root}
    stack = [root]
    while stack:
        u = stack.pop()
        for w in g.neighbors[u]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return seen


def require_connected(g: SignedGraph) -> None:
    if not g.is_connected():
        raise DisconnectedGraph(f"graph on {g.n} vertices is not connected")


# -- switching ---------------------------------------------------------------


@dataclass(frozen=True)
class SwitchingFunction:
    """A +1/-1 label for every vertex."""

    values: tuple[int, ...]

    def __post_init__(self):
        if any(x not in (1, -1) for x in self.values):
            raise ValidationError("switching values must be +1 or -1")

    @classmethod
    def identity(cls, n: int) -> SwitchingFunction:
        return cls((1,) * n)

    @classmethod
    def from_subset(cls, n: int, flipped: Iterable[int]) -> SwitchingFunction:
        vals = [1] * n
        for v in flipped:
            if not 0 <= v < n:
                raise ValidationError(f"vertex {v} outside [0, {n})")
            vals[v] = -1
        return cls(tuple(vals))

    def __len__(self):
        return len(self.values)

    def __getitem__(self, v: int) -> int:
        return self.values[v]

    def normalized(self) -> SwitchingFunction:
        """The same switching with vertex 0 labelled +1."""
        if self.values and self.values[0] == -1:
            return SwitchingFunction(tuple(-x for x in self.values))
        return self

    def flipped(self) -> tuple[int, ...]:
        return tuple(v for v, x in enumerate(self.values) if x == -1)


def switch(g: SignedGraph, z: SwitchingFunction) -> SignedGraph:
    if len(z) != g.n:
        raise ValidationError(f"switching function has {len(z)} values for {g.n} vertices")
    return SignedGraph(g.n, tuple((u, v, z[u] * s * z[v]) for u, v, s in g.edges))


# -- cycles ------------------------------------------------------------------


@dataclass(frozen=True)
class CycleWitness:
    vertices: tuple[int, ...]
    sign: int

    @property
    def length(self) -> int:
        return len(self.vertices)


def cycle_sign(g: SignedGraph, cycle: Sequence[int]) -> int:
    """Product of the edge signs along a closed walk through ``cycle``."""
    if len(set(cycle)) < 3:
        raise ValidationError("a cycle needs at least 3 distinct vertices")
    prod = 1
    for i, u in enumerate(cycle):
        v = cycle[(i + 1) % len(cycle)]
        s = g.sign(u, v)
        if s == 0:
            raise ValidationError(f"{u} and {v} are not adjacent")
        prod *= s
    return prod


def _canonical_rotation(cyc: Sequence[int]) -> tuple[int, ...]:
    k = cyc.index(min(cyc))
    rot = list(cyc[k:]) + list(cyc[:k])
    if len(rot) > 2 and rot[-1] < rot[1]:
        rot = [rot[0]] + rot[:0:-1]
    return tuple(rot)


def _girth_length(g: SignedGraph) -> Optional[int]:
    best = None
    for root in range(g.n):
        dist = {root: 0}
        parent = {root: -1}
        queue = deque([root])
        while queue:
            u = queue.popleft()
            if best is not None and 2 * dist[u] + 1 >= best:
                break
            for w in g.neighbors[u]:
                if w not in dist:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    queue.append(w)
                elif parent[u] != w:
                    length = dist[u] + dist[w] + 1
                    if best is None or length < best:
                        best = length
    return best


def _smallest_cycle_of_length(g: SignedGraph, length: int) -> tuple[int, ...]:
    # The lexicographically smallest canonical cycle starts at its minimum
    # vertex s and only visits vertices > s; try s in increasing order.
    nb = g.neighbors
    for s in range(g.n):
        allowed = [v >= s for v in range(g.n)]
        dist = {s: 0}
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in nb[u]:
                if allowed[w] and w not in dist:
                    dist[w] = dist[u] + 1
                    queue.append(w)

        path = [s]
        on_path = {s}

        def extend() -> bool:
            u = path[-1]
            depth = len(path)
            for w in nb[u]:
                if depth == length and w == s:
                    if path[1] < path[-1]:
                        return True
                    continue
                if w in on_path or not allowed[w] or w not in dist:
                    continue
                # remaining steps back to s must cover dist[w]
                if depth >= length or dist[w] > length - depth:
                    continue
                path.append(w)
                on_path.add(w)
                if extend():
                    return True
                path.pop()
                on_path.discard(w)
            return False

        if extend():
            return tuple(path)
    raise AssertionError(f"no cycle of length {length} found")


def girth(g: SignedGraph) -> CycleWitness:
    """A shortest cycle of the underlying graph.

    Ties are broken by the lexicographically smallest vertex sequence, where
    each cycle is written starting at its smallest vertex and continuing
    towards its smaller neighbour.
    """
    require_connected(g)
    length = _girth_length(g)
    if length is None:
        raise AcyclicGraph(f"graph on {g.n} vertices with {g.m} edges has no cycle")
    verts = _smallest_cycle_of_length(g, length)
    return CycleWitness(_canonical_rotation(verts), cycle_sign(g, verts))


# -- balance -----------------------------------------------------------------


class BalanceKind(str, Enum):
    BALANCED = "Balanced"
    ANTIBALANCED = "Antibalanced"
    BOTH = "Both"
    NEITHER = "Neither"


@dataclass(frozen=True)
class BalanceClass:
    """Balance classification with witnesses.

    ``switching`` takes the graph to the all-positive signing when it is
    balanced, otherwise to the all-negative one when it is antibalanced.
    ``negative_cycle`` proves the graph unbalanced; ``parity_cycle`` is a cycle
    whose sign differs from ``(-1)**length`` and so proves it not antibalanced.
    """

    kind: BalanceKind
    switching: Optional[SwitchingFunction] = None
    negative_cycle: Optional[CycleWitness] = None
    parity_cycle: Optional[CycleWitness] = None

    @property
    def balanced(self) -> bool:
        return self.kind in (BalanceKind.BALANCED, BalanceKind.BOTH)

    @property
    def antibalanced(self) -> bool:
        return self.kind in (BalanceKind.ANTIBALANCED, BalanceKind.BOTH)


def _bfs_tree(g: SignedGraph, root: int = 0):
    parent = [-1] * g.n
    order = [root]
    seen = [False] * g.n
    seen[root] = True
    i = 0
    while i < len(order):
        u = order[i]
        i += 1
        for w in g.neighbors[u]:
            if not seen[w]:
                seen[w] = True
                parent[w] = u
                order.append(w)
    return order, parent


def spanning_tree_edges(g: SignedGraph) -> set[tuple[int, int]]:
    """Edges of the breadth-first spanning tree rooted at vertex 0."""
    require_connected(g)
    _, parent = _bfs_tree(g)
    return {(min(v, p), max(v, p)) for v, p in enumerate(parent) if p >= 0}


def _tree_cycle(parent: list[int], depth: list[int], u: int, v: int) -> list[int]:
    left, right = [u], [v]
    a, b = u, v
    while depth[a] > depth[b]:
        a = parent[a]
        left.append(a)
    while depth[b] > depth[a]:
        b = parent[b]
        right.append(b)
    while a != b:
        a, b = parent[a], parent[b]
        left.append(a)
        right.append(b)
    right.pop()
    return left + right[::-1]


def _potential(g: SignedGraph):
    """Propagate a switching over a BFS tree; return it and a frustrated cycle."""
    order, parent = _bfs_tree(g)
    depth = [0] * g.n
    zeta = [1] * g.n
    for v in order[1:]:
        p = parent[v]
        depth[v] = depth[p] + 1
        zeta[v] = g.sign(p, v) * zeta[p]
    for u, v, s in g.edges:
        if zeta[u] * s * zeta[v] == -1:
            return None, _tree_cycle(parent, depth, u, v)
    return SwitchingFunction(tuple(zeta)), None


def balance_class(g: SignedGraph) -> BalanceClass:
    require_connected(g)
    z_pos, bad_pos = _potential(g)
    z_neg, bad_neg = _potential(g.negated())

    neg_cycle = parity_cycle = None
    if bad_pos is not None:
        neg_cycle = CycleWitness(_canonical_rotation(bad_pos), cycle_sign(g, bad_pos))
    if bad_neg is not None:
        parity_cycle = CycleWitness(_canonical_rotation(bad_neg), cycle_sign(g, bad_neg))

    if z_pos is not None and z_neg is not None:
        return BalanceClass(BalanceKind.BOTH, switching=z_pos)
    if z_pos is not None:
        return BalanceClass(BalanceKind.BALANCED, switching=z_pos, parity_cycle=parity_cycle)
    if z_neg is not None:
        return BalanceClass(BalanceKind.ANTIBALANCED, switching=z_neg, negative_cycle=neg_cycle)
    return BalanceClass(BalanceKind.NEITHER, negative_cycle=neg_cycle, parity_cycle=parity_cycle)


def switching_equivalent(g1: SignedGraph, g2: SignedGraph) -> Optional[SwitchingFunction]:
    """A switching taking ``g1`` to ``g2``, or None when they are not equivalent."""
    if g1.n != g2.n or g1.underlying() != g2.underlying():
        raise ValidationError("switching equivalence needs identical underlying graphs")
    require_connected(g1)
    order, parent = _bfs_tree(g1)
    zeta = [1] * g1.n
    for v in order[1:]:
        p = parent[v]
        zeta[v] = zeta[p] * g1.sign(p, v) * g2.sign(p, v)
    for u, v, s in g1.edges:
        if zeta[u] * s * zeta[v] != g2.sign(u, v):
            return None
    return SwitchingFunction(tuple(zeta))


# -- structure ---------------------------------------------------------------


def is_complete(g: SignedGraph) -> bool:
    return g.m == g.n * (g.n - 1) // 2


def is_complete_bipartite(g: SignedGraph) -> Optional[tuple[tuple[int, ...], tuple[int, ...]]]:
    """The two parts when the underlying graph is some K_{a,b}, else None."""
    if g.n < 2 or not g.is_connected():
        return None
    side = [-1] * g.n
    side[0] = 0
    order, parent = _bfs_tree(g)
    for v in order[1:]:
        side[v] = 1 - side[parent[v]]
    part0 = tuple(v for v in range(g.n) if side[v] == 0)
    part1 = tuple(v for v in range(g.n) if side[v] == 1)
    if g.m != len(part0) * len(part1):
        return None
    if any(side[u] == side[v] for u, v, _ in g.edges):
        return None
    return part0, part1


def induced_subgraph(g: SignedGraph, vertices: Iterable[int]) -> SignedGraph:
    keep = sorted(set(vertices))
    if not keep:
        raise ValidationError("induced subgraph needs at least one vertex")
    if keep[0] < 0 or keep[-1] >= g.n:
        raise ValidationError(f"vertex subset leaves [0, {g.n})")
    index = {v: i for i, v in enumerate(keep)}
    edges = tuple(
        (index[u], index[v], s) for u, v, s in g.edges if u in index and v in index
    )
    return SignedGraph(len(keep), edges)


# -- standard families -------------------------------------------------------


def complete_graph(n: int, sign: int = 1) -> SignedGraph:
    return validate([(u, v, sign) for u in range(n) for v in range(u + 1, n)], n)


def complete_bipartite(n1: int, n2: int, sign: int = 1) -> SignedGraph:
    return validate([(u, n1 + v, sign) for u in range(n1) for v in range(n2)], n1 + n2)


def cycle_graph(n: int, balanced: bool = True) -> SignedGraph:
    """C_n with all edges positive, or with only the closing edge negative."""
    edges = [(i, i + 1, 1) for i in range(n - 1)]
    edges.append((0, n - 1, 1 if balanced else -1))
    return validate(edges, n)


def path_graph(n: int, signs: Optional[Sequence[int]] = None) -> SignedGraph:
    signs = signs if signs is not None else [1] * (n - 1)
    return validate([(i, i + 1, signs[i]) for i in range(n - 1)], n)
