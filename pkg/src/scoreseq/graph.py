"""Simple undirected graphs on vertices 1..n.

Vertices are 1-based at every public interface. Edges are stored as
``(i, j)`` with ``i < j`` in lexicographic order, so an edge index is a
stable handle used by tournaments, realizations and the CLI.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable, Optional

DEFAULT_FOREST_LIMIT = 20


class GraphError(ValueError):
    """Malformed graph input (bad vertex, self-loop, duplicate edge)."""


class InvalidSubsetError(ValueError):
    pass


class EnumerationTooLargeError(ValueError):
    pass


@dataclass(frozen=True)
class Graph:
    n: int
    edges: tuple[tuple[int, int], ...]
    _adjacency: tuple[tuple[tuple[int, int], ...], ...] = field(
        init=False, repr=False, compare=False
    )
    _masks: tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        if not isinstance(self.n, int) or isinstance(self.n, bool) or self.n < 1:
            raise GraphError(f"vertex count must be a positive integer, got {self.n!r}")
        seen = set()
        canonical = []
        for edge in self.edges:
            try:
                a, b = edge
            except (TypeError, ValueError):
                raise GraphError(f"edge must be a pair of vertices, got {edge!r}") from None
            for v in (a, b):
                if not isinstance(v, int) or isinstance(v, bool):
                    raise GraphError(f"vertex must be an integer, got {v!r}")
                if not 1 <= v <= self.n:
                    raise GraphError(f"vertex {v} out of range 1..{self.n}")
            if a == b:
                raise GraphError(f"self-loop at vertex {a}")
            e = (min(a, b), max(a, b))
            if e in seen:
                raise GraphError(f"duplicate edge {list(e)}")
            seen.add(e)
            canonical.append(e)
        canonical.sort()
        object.__setattr__(self, "edges", tuple(canonical))

        adjacency: list[list[tuple[int, int]]] = [[] for _ in range(self.n + 1)]
        masks = [0] * self.n
        for k, (i, j) in enumerate(canonical):
            adjacency[i].append((j, k))
            adjacency[j].append((i, k))
            masks[i - 1] |= 1 << (j - 1)
            masks[j - 1] |= 1 << (i - 1)
        object.__setattr__(
            self, "_adjacency", tuple(tuple(sorted(nbrs)) for nbrs in adjacency)
        )
        object.__setattr__(self, "_masks", tuple(masks))

    @property
    def m(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self._adjacency[v])

    def degrees(self) -> list[int]:
        return [len(self._adjacency[v]) for v in range(1, self.n + 1)]

    def neighbors(self, v: int) -> tuple[tuple[int, int], ...]:
        """``(neighbor, edge_index)`` pairs in ascending neighbor order."""
        return self._adjacency[v]

    def is_complete(self) -> bool:
        return self.m == self.n * (self.n - 1) // 2

    def edge_index(self, i: int, j: int) -> int:
        return self.edges.index((min(i, j), max(i, j)))

    def to_json(self) -> dict:
        return {"n": self.n, "edges": [list(e) for e in self.edges]}

    @classmethod
    def from_json(cls, data: dict) -> "Graph":
        if not isinstance(data, dict) or "n" not in data or "edges" not in data:
            raise GraphError('graph JSON must be an object with "n" and "edges"')
        edges = data["edges"]
        if not isinstance(edges, list):
            raise GraphError('"edges" must be a list of [i, j] pairs')
        return cls(data["n"], tuple(tuple(e) if isinstance(e, list) else e for e in edges))


def complete_graph(n: int) -> Graph:
    return Graph(n, tuple(itertools.combinations(range(1, n + 1), 2)))


def path_graph(n: int) -> Graph:
    return Graph(n, tuple((i, i + 1) for i in range(1, n)))


def star_graph(leaves: int) -> Graph:
    """Star K_{1,leaves} centred at vertex 1."""
    return Graph(leaves + 1, tuple((1, j) for j in range(2, leaves + 2)))


def _subset_mask(g: Graph, a: Iterable[int]) -> int:
    mask = 0
    for v in a:
        if not isinstance(v, int) or not 1 <= v <= g.n:
            raise InvalidSubsetError(f"vertex {v!r} not in 1..{g.n}")
        mask |= 1 << (v - 1)
    return mask


def induced_edge_count(g: Graph, a: Iterable[int]) -> int:
    """phi(A): the number of edges with both endpoints in ``a``."""
    mask = _subset_mask(g, a)
    total = 0
    rest = mask
    while rest:
        low = rest & -rest
        v = low.bit_length() - 1
        total += bin(g._masks[v] & mask).count("1")
        rest ^= low
    return total // 2


def phi_table(g: Graph) -> list[int]:
    """phi for every vertex bitmask (bit v-1 set means vertex v in A)."""
    size = 1 << g.n
    table = [0] * size
    for mask in range(1, size):
        low = mask & -mask
        v = low.bit_length() - 1
        rest = mask ^ low
        table[mask] = table[rest] + bin(g._masks[v] & rest).count("1")
    return table


def find_cycle_in_edge_subset(
    g: Graph, subset: Iterable[int]
) -> Optional[list[tuple[int, bool]]]:
    """Return a cycle inside the edge subset, or None if it is a forest.

    The cycle is a list of ``(edge_index, forward)`` in traversal order,
    where ``forward`` means the edge is walked from its lower endpoint to
    its upper one. Search is DFS from the lowest vertex, neighbors in
    ascending order, so the result is reproducible.
    """
    chosen = set()
    for k in subset:
        if not isinstance(k, int) or not 0 <= k < g.m:
            raise IndexError(f"edge index {k!r} out of range 0..{g.m - 1}")
        chosen.add(k)
    if len(chosen) < 3:
        return None

    parent_edge: dict[int, int] = {}
    parent: dict[int, int] = {}
    depth: dict[int, int] = {}
    for root in range(1, g.n + 1):
        if root in depth:
            continue
        depth[root] = 0
        parent_edge[root] = -1
        stack = [(root, iter(g.neighbors(root)))]
        while stack:
            u, it = stack[-1]
            for w, k in it:
                if k not in chosen or k == parent_edge[u]:
                    continue
                if w not in depth:
                    depth[w] = depth[u] + 1
                    parent[w] = u
                    parent_edge[w] = k
                    stack.append((w, iter(g.neighbors(w))))
                    break
                # back edge to an ancestor closes a cycle
                walk = [u]
                while walk[-1] != w:
                    walk.append(parent[walk[-1]])
                walk.reverse()  # w ... u
                cycle = []
                for a, b in zip(walk, walk[1:]):
                    cycle.append((parent_edge[b], a < b))
                cycle.append((k, u < w))
                return cycle
            else:
                stack.pop()
    return None


def enumerate_forests(g: Graph, limit: int = DEFAULT_FOREST_LIMIT) -> list[frozenset[int]]:
    """All acyclic edge subsets, including the empty one.

    Backtracks over edges in index order with a union-find, so no
    cycle search is involved. Output is sorted by size, then by the
    sorted edge indices.
    """
    if g.m > limit:
        raise EnumerationTooLargeError(
            f"graph has {g.m} edges, forest enumeration limit is {limit}"
        )
    found: list[tuple[int, ...]] = []
    parent = list(range(g.n + 1))

    def find(v: int) -> int:
        while parent[v] != v:
            v = parent[v]
        return v

    def extend(k: int, chosen: list[int]) -> None:
        if k == g.m:
            found.append(tuple(chosen))
            return
        extend(k + 1, chosen)
        i, j = g.edges[k]
        ri, rj = find(i), find(j)
        if ri != rj:
            parent[ri] = rj
            chosen.append(k)
            extend(k + 1, chosen)
            chosen.pop()
            parent[ri] = ri

    extend(0, [])
    found.sort(key=lambda f: (len(f), f))
    return [frozenset(f) for f in found]
