"""Closed-form dimensions of the leaf groups and tree aggregation.

* A free abelian group of rank ``r`` has dimension ``r``.
* A torsion-free finite-index subgroup of the integer general linear group
  of degree ``n`` has dimension ``n(n-1)/2``.
* A Fouxe-Rabinovitch group for a decomposition with factors of clique
  sizes ``d_i`` and center ranks ``z_i`` plus a free group of rank ``m``
  has dimension ``(k + 2m - 2) * max(d_i) + sum(d_i - z_i)`` when there is
  at least one factor; with no factors it is the outer automorphism group
  of a free group, of dimension ``max(2m - 3, 0)``.

The dimension of a whole decomposition tree is the sum over its leaves,
and the absolute automorphism group exceeds the outer one by the clique
number minus the number of universal vertices of the defining graph.
"""

from __future__ import annotations

from .decompose import Tree, build_tree, iter_leaves
from .graphs import Graph
from .leaves import (
    FouxeRabinovitchLeaf,
    FrLeafData,
    FreeAbelianLeaf,
    GeneralLinearLeaf,
    LeafKind,
    TrivialLeaf,
)
from .rorg import Rorg, RorgError

__all__ = ["fr_vcd", "gl_vcd", "leaf_vcd", "tree_vcd", "aut_vcd", "rorg_vcd"]


def fr_vcd(data: FrLeafData) -> int:
    """Dimension of the Fouxe-Rabinovitch group of a free factor decomposition."""
    k, m = data.k, data.m
    if k == 0:
        return max(2 * m - 3, 0)
    if k + m < 2:
        return 0
    ds = data.clique_sizes
    zs = data.center_ranks
    return (k + 2 * m - 2) * max(ds) + sum(d - z for d, z in zip(ds, zs))


def gl_vcd(n: int) -> int:
    """Dimension of a torsion-free finite-index subgroup of GL(n, Z)."""
    if n < 1:
        raise ValueError("general linear degree must be at least 1")
    return n * (n - 1) // 2


def leaf_vcd(kind: LeafKind) -> int:
    if isinstance(kind, FreeAbelianLeaf):
        return kind.rank
    if isinstance(kind, GeneralLinearLeaf):
        return gl_vcd(kind.n)
    if isinstance(kind, FouxeRabinovitchLeaf):
        return fr_vcd(kind.data)
    if isinstance(kind, TrivialLeaf):
        return 0
    raise TypeError(f"unknown leaf kind {kind!r}")


def tree_vcd(tree: Tree) -> int:
    """Sum of the leaf dimensions: the dimension of the root group."""
    return sum(leaf_vcd(leaf.kind) for leaf in iter_leaves(tree))


def rorg_vcd(rorg: "Rorg | Graph", **build_kwargs) -> int:
    """Dimension of a relative outer automorphism group."""
    return tree_vcd(build_tree(rorg, **build_kwargs))


def aut_vcd(graph: "Graph | Rorg", **build_kwargs) -> int:
    """Dimension of the absolute automorphism group of a graph group.

    Only meaningful in the absolute case: the outer dimension plus the
    dimension of the group modulo its center, which is the clique number
    minus the number of universal vertices.
    """
    if isinstance(graph, Rorg):
        if graph.preserved or graph.fixed:
            raise RorgError("absolute automorphism dimension needs empty collections")
        graph = graph.graph
    everything = graph.vertex_set()
    correction = graph.max_clique_size(everything) - len(graph.center_vertices(everything))
    return rorg_vcd(Rorg(graph), **build_kwargs) + correction
