"""Finite simple graphs with a fixed, total vertex order.

Vertices are opaque strings ordered by declaration order.  That order is
used everywhere a canonical ordering is needed (normal forms, reported
vertex sets, tie-breaking), which keeps all downstream output
byte-deterministic.

Connectivity comes in two flavours: ordinary adjacency, and adjacency
augmented by a family of vertex sets, where two vertices also count as
neighbours when some member of the family contains both.  The augmented
version is what drives most of the combinatorics in this package.
"""

from __future__ import annotations

from itertools import combinations
from typing import Iterable, Sequence

import networkx as nx

__all__ = ["Graph", "GraphError"]


class GraphError(ValueError):
    """Malformed graph data or reference to an unknown vertex."""


class Graph:
    """An immutable finite simple graph.

    >>> g = Graph("abc", [("a", "b"), ("b", "c")])
    >>> sorted(g.link("b"))
    ['a', 'c']
    >>> g.max_clique_size(frozenset("abc"))
    2
    """

    __slots__ = ("vertices", "edges", "_index", "_adj")

    def __init__(self, vertices: Iterable[str], edges: Iterable[Sequence[str]] = ()):
        vs = tuple(vertices)
        index: dict[str, int] = {}
        for v in vs:
            if v in index:
                raise GraphError(f"duplicate vertex {v!r}")
            index[v] = len(index)
        adj: dict[str, set[str]] = {v: set() for v in vs}
        for edge in edges:
            u, w = edge
            if u not in index or w not in index:
                raise GraphError(f"edge ({u!r}, {w!r}) uses an undeclared vertex")
            if u == w:
                raise GraphError(f"self-loop at {u!r}")
            adj[u].add(w)
            adj[w].add(u)
        self.vertices = vs
        self._index = index
        self._adj = {v: frozenset(nbrs) for v, nbrs in adj.items()}
        self.edges = frozenset(frozenset((u, w)) for u, ns in adj.items() for w in ns)

    # -- basic structure ---------------------------------------------------

    def __contains__(self, v: str) -> bool:
        return v in self._index

    def __len__(self) -> int:
        return len(self.vertices)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.vertices == other.vertices and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((self.vertices, self.edges))

    def __repr__(self) -> str:
        return f"Graph({list(self.vertices)!r}, {sorted(map(sorted, self.edges))!r})"

    def index(self, v: str) -> int:
        try:
            return self._index[v]
        except KeyError:
            raise GraphError(f"unknown vertex {v!r}") from None

    def sort(self, s: Iterable[str]) -> tuple[str, ...]:
        """Vertices of ``s`` in declaration order."""
        return tuple(sorted(s, key=self.index))

    def set_key(self, s: Iterable[str]) -> tuple[int, ...]:
        """Canonical sort key for a vertex set."""
        return tuple(sorted(self.index(v) for v in s))

    def vertex_set(self) -> frozenset[str]:
        return frozenset(self.vertices)

    def adjacent(self, u: str, v: str) -> bool:
        self.index(u)
        self.index(v)
        return v in self._adj[u]

    def link(self, v: str) -> frozenset[str]:
        """All neighbours of ``v``."""
        self.index(v)
        return self._adj[v]

    def star(self, v: str) -> frozenset[str]:
        """``v`` together with its neighbours."""
        return self.link(v) | {v}

    def edge_pairs(self) -> tuple[tuple[str, str], ...]:
        pairs = {tuple(self.sort(e)) for e in self.edges}
        return tuple(sorted(pairs, key=lambda e: (self.index(e[0]), self.index(e[1]))))

    def induced(self, s: Iterable[str]) -> "Graph":
        """The induced subgraph on ``s``, inheriting the vertex order."""
        keep = self.check_subset(s)
        verts = [v for v in self.vertices if v in keep]
        edges = [e for e in self.edge_pairs() if e[0] in keep and e[1] in keep]
        return Graph(verts, edges)

    def check_subset(self, s: Iterable[str]) -> frozenset[str]:
        """Freeze ``s`` into a vertex set, rejecting unknown vertices."""
        sub = frozenset(s)
        for v in sub:
            self.index(v)
        return sub

    # -- connectivity ------------------------------------------------------

    def _nx_induced(self, s: frozenset[str]) -> nx.Graph:
        h = nx.Graph()
        h.add_nodes_from(v for v in self.vertices if v in s)
        h.add_edges_from(
            (u, w) for u, w in self.edge_pairs() if u in s and w in s
        )
        return h

    def _canonical_partition(self, parts: Iterable[set[str]]) -> tuple[frozenset[str], ...]:
        return tuple(
            sorted((frozenset(p) for p in parts), key=lambda p: min(map(self.index, p)))
        )

    def components(self, s: Iterable[str]) -> tuple[frozenset[str], ...]:
        """Connected components of the induced subgraph on ``s``."""
        sub = self.check_subset(s)
        if not sub:
            return ()
        return self._canonical_partition(nx.connected_components(self._nx_induced(sub)))

    def collection_components(
        self,
        s: Iterable[str],
        collections: Iterable[Iterable[str]],
    ) -> tuple[frozenset[str], ...]:
        """Components of ``s`` when co-membership in a collection counts as adjacency.

        Two vertices of the induced subgraph are merged when they span an
        edge or lie in a common member of ``collections``; connecting paths
        stay inside ``s``.
        """
        sub = self.check_subset(s)
        if not sub:
            return ()
        h = self._nx_induced(sub)
        for member in collections:
            inside = [v for v in self.sort(member) if v in sub]
            for u, w in zip(inside, inside[1:]):
                h.add_edge(u, w)
        return self._canonical_partition(nx.connected_components(h))

    # -- cliques and centers -------------------------------------------------

    def max_clique_size(self, s: Iterable[str]) -> int:
        """Size of a maximum clique in the induced subgraph; 0 for the empty set.

        Computed exactly by pivoting enumeration of maximal cliques; inputs
        are desk-scale, so the exponential worst case is acceptable.
        """
        sub = self.check_subset(s)
        if not sub:
            return 0
        return max(len(c) for c in nx.find_cliques(self._nx_induced(sub)))

    def maximum_cliques(self, s: Iterable[str]) -> tuple[tuple[str, ...], ...]:
        """All maximum cliques of the induced subgraph, canonically ordered."""
        sub = self.check_subset(s)
        if not sub:
            return ()
        found = [self.sort(c) for c in nx.find_cliques(self._nx_induced(sub))]
        best = max(len(c) for c in found)
        return tuple(sorted((c for c in found if len(c) == best), key=self.set_key))

    def center_vertices(self, s: Iterable[str]) -> frozenset[str]:
        """Vertices of ``s`` adjacent, within ``s``, to every other vertex of ``s``."""
        sub = self.check_subset(s)
        return frozenset(v for v in sub if sub - {v} <= self._adj[v])

    def is_clique(self, s: Iterable[str]) -> bool:
        sub = self.check_subset(s)
        return all(w in self._adj[u] for u, w in combinations(sub, 2))
