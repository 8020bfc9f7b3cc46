"""Leaf groups of a decomposition tree.

Every leaf is one of: a finitely generated free abelian group, an integer
general linear group, a Fouxe-Rabinovitch group attached to a free factor
decomposition (factor subgraphs plus a free part), or the trivial group.
:class:`FrLeafData` packages the decomposition data a Fouxe-Rabinovitch
leaf needs: the ambient graph, the factor vertex sets, and the free-part
vertices.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence, Union

from .graphs import Graph, GraphError

__all__ = [
    "FreeAbelianLeaf",
    "GeneralLinearLeaf",
    "TrivialLeaf",
    "FouxeRabinovitchLeaf",
    "FrLeafData",
    "LeafKind",
    "leaf_label",
]


@dataclass(frozen=True)
class FrLeafData:
    """A free factor decomposition of a graph group.

    ``factors`` are disjoint vertex sets, each a union of connected
    components of ``graph``; ``free_vertices`` are isolated vertices not
    lying in any factor.  The group is the free product of the factor
    subgroups and a free group on the free vertices.
    """

    graph: Graph
    factors: tuple[frozenset[str], ...]
    free_vertices: frozenset[str] = field(default_factory=frozenset)

    def __post_init__(self):
        object.__setattr__(
            self, "factors", tuple(frozenset(f) for f in self.factors)
        )
        object.__setattr__(self, "free_vertices", frozenset(self.free_vertices))
        ambient_comps = self.graph.components(self.graph.vertex_set())
        seen: set[str] = set()
        for f in self.factors:
            if not f:
                raise GraphError("empty factor in free factor decomposition")
            if f & seen:
                raise GraphError("factors must be pairwise disjoint")
            seen |= f
            if any(c & f and not c <= f for c in ambient_comps):
                raise GraphError("each factor must be a union of graph components")
        if self.free_vertices & seen:
            raise GraphError("free vertices cannot lie in a factor")
        for x in self.free_vertices:
            if self.graph.link(x):
                raise GraphError(f"free vertex {x!r} is not isolated")

    @property
    def k(self) -> int:
        return len(self.factors)

    @property
    def m(self) -> int:
        return len(self.free_vertices)

    @property
    def clique_sizes(self) -> tuple[int, ...]:
        """Largest clique size of each factor subgraph."""
        return tuple(self.graph.max_clique_size(f) for f in self.factors)

    @property
    def center_ranks(self) -> tuple[int, ...]:
        """Number of universal vertices of each factor subgraph."""
        return tuple(len(self.graph.center_vertices(f)) for f in self.factors)

    @classmethod
    def from_factor_graphs(
        cls, factor_graphs: Sequence[Graph], m: int, free_prefix: str = "x"
    ) -> "FrLeafData":
        """Assemble a decomposition from standalone factor graphs plus a free rank.

        Builds the disjoint-union ambient graph, inventing names for the
        free vertices.
        """
        vertices: list[str] = []
        edges: list[tuple[str, str]] = []
        factors: list[frozenset[str]] = []
        for g in factor_graphs:
            if set(g.vertices) & set(vertices):
                raise GraphError("factor graphs must have disjoint vertex names")
            vertices.extend(g.vertices)
            edges.extend(g.edge_pairs())
            factors.append(g.vertex_set())
        prefix = free_prefix
        while any(v.startswith(prefix) for v in vertices):
            prefix = "_" + prefix
        free = [f"{prefix}{i + 1}" for i in range(m)]
        vertices.extend(free)
        ambient = Graph(vertices, edges)
        return cls(ambient, tuple(factors), frozenset(free))


@dataclass(frozen=True)
class FreeAbelianLeaf:
    rank: int


@dataclass(frozen=True)
class GeneralLinearLeaf:
    n: int


@dataclass(frozen=True)
class TrivialLeaf:
    pass


@dataclass(frozen=True)
class FouxeRabinovitchLeaf:
    data: FrLeafData


LeafKind = Union[FreeAbelianLeaf, GeneralLinearLeaf, TrivialLeaf, FouxeRabinovitchLeaf]


def leaf_label(kind: LeafKind) -> str:
    """A short human-readable tag, also used in reports and diagnostics."""
    if isinstance(kind, FreeAbelianLeaf):
        return f"FreeAbelian({kind.rank})"
    if isinstance(kind, GeneralLinearLeaf):
        return f"GL({kind.n})"
    if isinstance(kind, TrivialLeaf):
        return "Trivial"
    if isinstance(kind, FouxeRabinovitchLeaf):
        return f"FouxeRabinovitch(k={kind.data.k}, m={kind.data.m})"
    raise TypeError(f"unknown leaf kind {kind!r}")
