"""Decomposition trees for relative outer automorphism groups.

Every node holds a saturated :class:`~raagvcd.rorg.Rorg`.  A node either
splits along a proper invariant vertex set whose restriction map has
nontrivial image (kernel and image children), or it is terminal and falls
into one of five mutually exclusive shapes:

* ``free_product``       - graph and collections both disconnected: the
                           whole group is a Fouxe-Rabinovitch leaf;
* ``separating_clique``  - graph disconnected but collections connect it:
                           free abelian on the star-separating vertices;
* ``commuting_conjugations`` - connected graph, no universal vertex: free
                           abelian on the independent partial conjugations;
* ``center_split``       - connected graph with a proper set of universal
                           vertices: a free abelian kernel of transvections
                           with a universal acting letter, plus the
                           quotient group on the non-universal part;
* ``matrix_split``       - complete graph: a free abelian kernel plus an
                           integer general linear group.

Nodes with at most one vertex are terminal (``trivial``).  A complexity
measure (vertex count, then admissible-move count) strictly decreases
along every edge to a recursive child; this is asserted at run time, so a
violation aborts the build instead of looping.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Iterator, Optional, Union

from .graphs import Graph
from .leaves import (
    FouxeRabinovitchLeaf,
    FrLeafData,
    FreeAbelianLeaf,
    GeneralLinearLeaf,
    LeafKind,
    TrivialLeaf,
    leaf_label,
)
from .rorg import DEFAULT_VERTEX_CAP, Rorg, RorgError, saturate

__all__ = [
    "CASE_TRIVIAL",
    "CASE_RESTRICTION",
    "CASE_FREE_PRODUCT",
    "CASE_SEPARATING_CLIQUE",
    "CASE_COMMUTING_CONJUGATIONS",
    "CASE_CENTER_SPLIT",
    "CASE_MATRIX_SPLIT",
    "Case",
    "NodeGroup",
    "Leaf",
    "Split",
    "Tree",
    "InternalInvariantError",
    "classify",
    "decompose_step",
    "build_tree",
    "complexity",
    "iter_leaves",
    "iter_splits",
]

CASE_TRIVIAL = "trivial"
CASE_RESTRICTION = "restriction"
CASE_FREE_PRODUCT = "free_product"
CASE_SEPARATING_CLIQUE = "separating_clique"
CASE_COMMUTING_CONJUGATIONS = "commuting_conjugations"
CASE_CENTER_SPLIT = "center_split"
CASE_MATRIX_SPLIT = "matrix_split"


class InternalInvariantError(RuntimeError):
    """A run-time consistency assertion failed while building a tree."""


@dataclass(frozen=True)
class Case:
    kind: str
    delta: Optional[frozenset[str]] = None  # chosen set, restriction case only


@dataclass(frozen=True)
class NodeGroup:
    """A saturated group node, remembering how it was reached from the root."""

    rorg: Rorg
    path: tuple[str, ...] = ()

    def __post_init__(self):
        if not self.rorg.saturated:
            raise RorgError("decomposition nodes must be saturated")

    @property
    def path_label(self) -> str:
        return "/".join(self.path) or "root"


@dataclass(frozen=True)
class Leaf:
    node: NodeGroup
    kind: LeafKind


@dataclass(frozen=True)
class Split:
    node: NodeGroup
    case: Case
    children: tuple["Tree", ...]
    roles: tuple[str, ...] = field(default_factory=tuple)


Tree = Union[Leaf, Split]


def iter_leaves(tree: Tree) -> Iterator[Leaf]:
    """Leaves in left-to-right order (kernel side before image side)."""
    if isinstance(tree, Leaf):
        yield tree
    else:
        for child in tree.children:
            yield from iter_leaves(child)


def iter_splits(tree: Tree) -> Iterator[Split]:
    if isinstance(tree, Split):
        yield tree
        for child in tree.children:
            yield from iter_splits(child)


def complexity(r: Rorg) -> tuple[int, int]:
    """Termination measure: vertex count, then admissible-move count."""
    return (len(r.graph), r.admissible_generator_count())


def _choose_restriction(
    r: Rorg, rng: Optional[random.Random] = None
) -> Optional[frozenset[str]]:
    """First proper preserved member whose restriction is nontrivial.

    After saturation every proper nonempty invariant set is a preserved
    member, so scanning the collection is exhaustive.  Candidates are
    ordered smallest first with ties broken by vertex order; ``rng``
    permutes them instead, making the choice uniform over the eligible
    sets.
    """
    full = r.graph.vertex_set()
    candidates = [d for d in r.preserved if d != full]
    candidates.sort(key=lambda d: (len(d), r.graph.set_key(d)))
    if rng is not None:
        rng.shuffle(candidates)
    for d in candidates:
        if r._nontrivial_restriction_unchecked(d):
            return d
    return None


def classify(node: NodeGroup, *, rng: Optional[random.Random] = None) -> Case:
    """Decide how a node decomposes; ``rng`` permutes the restriction choice."""
    r = node.rorg
    g = r.graph
    if len(g) <= 1:
        return Case(CASE_TRIVIAL)
    chosen = _choose_restriction(r, rng)
    if chosen is not None:
        return Case(CASE_RESTRICTION, delta=chosen)
    everything = g.vertex_set()
    if len(g.components(everything)) > 1:
        merged = g.collection_components(everything, r.effective_members())
        if len(merged) > 1:
            return Case(CASE_FREE_PRODUCT)
        return Case(CASE_SEPARATING_CLIQUE)
    center = g.center_vertices(everything)
    if not center:
        return Case(CASE_COMMUTING_CONJUGATIONS)
    if len(center) < len(g):
        return Case(CASE_CENTER_SPLIT)
    return Case(CASE_MATRIX_SPLIT)


def _child(node: NodeGroup, role: str, rorg: Rorg, cap: int) -> NodeGroup:
    child = NodeGroup(saturate(rorg, cap), node.path + (role,))
    if complexity(child.rorg) >= complexity(node.rorg):
        raise InternalInvariantError(
            f"complexity did not decrease from {node.path_label} to {child.path_label}:"
            f" {complexity(node.rorg)} -> {complexity(child.rorg)}"
        )
    return child


def _reassert_terminal(node: NodeGroup) -> None:
    # A terminal node must have only trivial restrictions; recheck before
    # emitting any leaf so classification bugs abort loudly.
    if _eligible_restrictions(node.rorg):
        raise InternalInvariantError(
            f"node {node.path_label} was leafed with a nontrivial restriction available"
        )


def _trivial_step(node: NodeGroup) -> Leaf:
    g = node.rorg.graph
    if len(g) == 1 and not node.rorg.covered_by_fixed(g.vertices[0]):
        # Outer automorphisms of the infinite cyclic group: sign matrices.
        return Leaf(node, GeneralLinearLeaf(1))
    return Leaf(node, TrivialLeaf())


def _free_product_step(node: NodeGroup) -> Leaf:
    _reassert_terminal(node)
    r = node.rorg
    g = r.graph
    members = r.effective_members()
    comps = g.collection_components(g.vertex_set(), members)
    covered = frozenset().union(*members) if members else frozenset()
    free: set[str] = set()
    factors = []
    for comp in comps:
        if len(comp) == 1 and not comp & covered:
            free |= comp
        else:
            factors.append(comp)
    data = FrLeafData(g, tuple(factors), frozenset(free))
    if data.k + data.m < 2:
        raise InternalInvariantError(
            f"disconnected node {node.path_label} produced a trivial decomposition"
        )
    return Leaf(node, FouxeRabinovitchLeaf(data))


def _separating_clique_step(node: NodeGroup) -> Leaf:
    _reassert_terminal(node)
    r = node.rorg
    g = r.graph
    everything = g.vertex_set()
    theta = frozenset(v for v in g.vertices if r.star_separates(v, everything))
    if not g.is_clique(theta):
        raise InternalInvariantError(
            f"star-separating vertices of {node.path_label} do not form a clique"
        )
    return Leaf(node, FreeAbelianLeaf(len(theta)))


def _commuting_conjugations_step(node: NodeGroup) -> Leaf:
    _reassert_terminal(node)
    r = node.rorg
    rank = sum(
        max(len(r.admissible_partial_conjugations(v)), 1) - 1 for v in r.graph.vertices
    )
    return Leaf(node, FreeAbelianLeaf(rank))


def _center_split_step(node: NodeGroup, cap: int) -> tuple[list[Tree], list[str], list[NodeGroup]]:
    _reassert_terminal(node)
    r = node.rorg
    g = r.graph
    center = g.center_vertices(g.vertex_set())
    rest = g.vertex_set() - center
    # Kernel of the projection that kills the universal vertices: moves
    # multiplying a non-universal letter by a universal one.  The link
    # condition is automatic, so only collection coverage matters.
    rank = 0
    for w in center:
        avoiding = r.preserved_avoiding(w)
        for u in rest:
            if r.covered_by_fixed(u):
                continue
            if any(u in m for m in avoiding):
                continue
            rank += 1
    gg, hh = r.restrict_collections(rest)
    image = Rorg(g.induced(rest), (), gg + hh)
    child = _child(node, "image", image, cap)
    children: list[Tree] = []
    roles: list[str] = []
    if rank > 0:
        children.append(Leaf(node, FreeAbelianLeaf(rank)))
        roles.append("kernel")
    return children, roles, [child]


def _matrix_split_step(node: NodeGroup) -> tuple[list[Tree], list[str]]:
    _reassert_terminal(node)
    r = node.rorg
    g = r.graph
    free_rank = [v for v in g.vertices if not r.covered_by_fixed(v)]
    fset = frozenset(free_rank)
    for acting, moved in r.admissible_transvections:
        if moved not in fset:
            raise InternalInvariantError(
                f"complete node {node.path_label}: admissible move touches a fixed letter"
            )
    for v in fset:
        for w in fset:
            if v != w and (v, w) not in r.admissible_transvections:
                raise InternalInvariantError(
                    f"complete node {node.path_label}: matrix block is not full"
                )
    kernel_rank = 0
    for v in g.vertices:
        if v in fset:
            continue
        avoiding = r.preserved_avoiding(v)
        for w in free_rank:
            if not any(w in m for m in avoiding):
                kernel_rank += 1
    children: list[Tree] = []
    roles: list[str] = []
    if kernel_rank > 0:
        children.append(Leaf(node, FreeAbelianLeaf(kernel_rank)))
        roles.append("kernel")
    if fset:
        children.append(Leaf(node, GeneralLinearLeaf(len(fset))))
        roles.append("image")
    return children, roles


def decompose_step(
    node: NodeGroup, case: Case, cap: int = DEFAULT_VERTEX_CAP
) -> Tree | tuple[list[Tree], list[str], list[NodeGroup]]:
    """Apply one decomposition step.

    Returns either a finished :class:`Leaf`/:class:`Split` or a triple of
    already-built children, their role labels, and the node children still
    to be recursed into (appended after the built ones, kernel side first).
    """
    kind = case.kind
    if kind == CASE_TRIVIAL:
        return _trivial_step(node)
    if kind == CASE_RESTRICTION:
        delta = case.delta
        r = node.rorg
        kernel = Rorg(r.graph, r.preserved, r.fixed + (delta,))
        gg, hh = r.restrict_collections(delta)
        image = Rorg(r.graph.induced(delta), gg, hh)
        kids = [_child(node, "kernel", kernel, cap), _child(node, "image", image, cap)]
        return [], [], kids
    if kind == CASE_FREE_PRODUCT:
        return _free_product_step(node)
    if kind == CASE_SEPARATING_CLIQUE:
        return _separating_clique_step(node)
    if kind == CASE_COMMUTING_CONJUGATIONS:
        return _commuting_conjugations_step(node)
    if kind == CASE_CENTER_SPLIT:
        return _center_split_step(node, cap)
    if kind == CASE_MATRIX_SPLIT:
        built, roles = _matrix_split_step(node)
        if not built:
            return Leaf(node, TrivialLeaf())
        if len(built) == 1:
            # Trivial kernel: the node is its own matrix quotient.
            return built[0]
        return built, roles, []
    raise InternalInvariantError(f"unknown case {kind!r}")


def build_tree(
    root: "Rorg | Graph",
    *,
    choice_seed: Optional[int] = None,
    vertex_cap: int = DEFAULT_VERTEX_CAP,
) -> Tree:
    """Build the full decomposition tree for a group (or a plain graph).

    With ``choice_seed`` unset the restriction choice is the canonical
    smallest eligible set; a seed permutes the eligible order at every
    choice point, which changes only the tree shape, never the total
    dimension.
    """
    if isinstance(root, Graph):
        root = Rorg(root)
    rng = random.Random(choice_seed) if choice_seed is not None else None
    start = NodeGroup(saturate(root, vertex_cap))

    def rec(node: NodeGroup) -> Tree:
        case = classify(node, rng=rng)
        step = decompose_step(node, case, vertex_cap)
        if isinstance(step, (Leaf, Split)):
            return step
        built, roles, pending = step
        children = list(built)
        role_list = list(roles)
        for child in pending:
            children.append(rec(child))
            role_list.append(child.path[-1])
        return Split(node, case, tuple(children), tuple(role_list))

    return rec(start)


def leaf_multiset(tree: Tree) -> tuple[str, ...]:
    """Sorted leaf labels; a diagnostic for comparing choice orders."""
    return tuple(sorted(leaf_label(leaf.kind) for leaf in iter_leaves(tree)))
