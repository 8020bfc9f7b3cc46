"""Relative outer automorphism data for a graph group.

A :class:`Rorg` is a graph together with two collections of vertex sets:
``preserved`` (each generating a subgroup that every automorphism in the
group must carry to itself) and ``fixed`` (subgroups the group must act
trivially on, up to conjugacy).  The module knows which elementary moves
are admissible for such a group, the induced preorder on vertices, the
star-separation test, the invariance and trivial-action criteria for
vertex sets, saturation (closing ``preserved`` under all invariant sets),
and the restriction data used when splitting along an invariant set.

Admissibility of the moves:

* an inversion of ``v`` is admissible iff ``v`` lies in no fixed member;
* a transvection with acting letter ``v`` and moved letter ``w`` is
  admissible iff ``link(w) <= star(v)`` and ``w`` lies in no fixed member
  and in no preserved member missing ``v``;
* a partial conjugation by ``v`` is admissible iff its conjugated set is a
  union of the collection-aware components of the complement of
  ``star(v)``, computed with respect to the fixed members plus the
  preserved members missing ``v``.

Vertex ``w`` is below ``v`` in the preorder exactly when the transvection
moving ``w`` by ``v`` is admissible.
"""

from __future__ import annotations

from functools import cached_property
from typing import Iterable

from .autos import GeneratorSymbol, Inversion, PartialConjugation, Transvection
from .graphs import Graph

__all__ = ["Rorg", "RorgError", "VertexCapExceeded", "saturate", "DEFAULT_VERTEX_CAP"]

DEFAULT_VERTEX_CAP = 20


class RorgError(ValueError):
    """Malformed relative-group data or violated precondition."""


class VertexCapExceeded(RorgError):
    """The exhaustive subset scan was asked to run past the vertex cap."""


def _canonical_members(graph: Graph, members: Iterable[Iterable[str]]) -> tuple[frozenset[str], ...]:
    seen = set()
    for member in members:
        m = frozenset(member)
        for v in m:
            graph.index(v)
        if m:
            seen.add(m)
    return tuple(sorted(seen, key=graph.set_key))


class Rorg:
    """A graph with a preserved collection and a fixed collection.

    Instances are immutable value objects; all derived data is cached on
    first use, so they are safe to share.
    """

    def __init__(
        self,
        graph: Graph,
        preserved: Iterable[Iterable[str]] = (),
        fixed: Iterable[Iterable[str]] = (),
        *,
        saturated: bool = False,
        saturation_rounds: int = 0,
    ):
        self.graph = graph
        self.preserved = _canonical_members(graph, preserved)
        self.fixed = _canonical_members(graph, fixed)
        self.saturated = saturated
        self.saturation_rounds = saturation_rounds

    def __eq__(self, other) -> bool:
        if not isinstance(other, Rorg):
            return NotImplemented
        return (
            self.graph == other.graph
            and self.preserved == other.preserved
            and self.fixed == other.fixed
            and self.saturated == other.saturated
        )

    def __hash__(self) -> int:
        return hash((self.graph, self.preserved, self.fixed, self.saturated))

    def __repr__(self) -> str:
        fmt = lambda coll: [sorted(m) for m in coll]
        return (
            f"Rorg({list(self.graph.vertices)!r}, preserved={fmt(self.preserved)!r},"
            f" fixed={fmt(self.fixed)!r}, saturated={self.saturated})"
        )

    # -- collection helpers ------------------------------------------------

    def preserved_avoiding(self, v: str) -> tuple[frozenset[str], ...]:
        """Preserved members not containing ``v``."""
        self.graph.index(v)
        return tuple(m for m in self.preserved if v not in m)

    def proper_preserved(self) -> tuple[frozenset[str], ...]:
        """Preserved members other than the full vertex set.

        The full vertex set is always carried to itself, so as a preserved
        member it imposes no constraint; tests that ask whether a vertex is
        covered by the preserved collection, or merge components through
        its members, must ignore it.
        """
        full = self.graph.vertex_set()
        return tuple(m for m in self.preserved if m != full)

    def covered_by_fixed(self, v: str) -> bool:
        return any(v in m for m in self.fixed)

    def effective_members(self) -> tuple[frozenset[str], ...]:
        """Proper preserved members plus all fixed members."""
        return self.proper_preserved() + self.fixed

    # -- admissible moves ----------------------------------------------------

    @cached_property
    def admissible_inversions(self) -> frozenset[str]:
        """Vertices lying in no fixed member."""
        return frozenset(v for v in self.graph.vertices if not self.covered_by_fixed(v))

    @cached_property
    def admissible_transvections(self) -> frozenset[tuple[str, str]]:
        """Admissible ``(acting, moved)`` pairs.

        Left and right transvections share the same admissible pair set;
        sidedness only matters once a pair is turned into an automorphism.
        """
        g = self.graph
        pairs = set()
        for moved in g.vertices:
            if self.covered_by_fixed(moved):
                continue
            lk = g.link(moved)
            for acting in g.vertices:
                if acting == moved or not lk <= g.star(acting):
                    continue
                if any(moved in m for m in self.preserved_avoiding(acting)):
                    continue
                pairs.add((acting, moved))
        return frozenset(pairs)

    @cached_property
    def _admissible_moved(self) -> frozenset[str]:
        """Vertices moved by some admissible transvection."""
        return frozenset(moved for _, moved in self.admissible_transvections)

    @cached_property
    def _conjugation_components(self) -> dict[str, tuple[frozenset[str], ...]]:
        g = self.graph
        out = {}
        for v in g.vertices:
            rest = g.vertex_set() - g.star(v)
            members = self.preserved_avoiding(v) + self.fixed
            out[v] = g.collection_components(rest, members)
        return out

    def admissible_partial_conjugations(self, v: str) -> tuple[frozenset[str], ...]:
        """The single admissible conjugation components for acting vertex ``v``.

        Admissible conjugated sets are exactly the unions of these; the
        union of all of them is conjugation by ``v`` itself, hence trivial
        as an outer automorphism.
        """
        self.graph.index(v)
        return self._conjugation_components[v]

    def admissible_generator_count(self) -> int:
        """Inversions plus transvection pairs plus independent conjugations."""
        conj = sum(
            max(len(self._conjugation_components[v]), 1) - 1 for v in self.graph.vertices
        )
        return len(self.admissible_inversions) + len(self.admissible_transvections) + conj

    # -- preorder and separation ----------------------------------------------

    def leq(self, w: str, v: str) -> bool:
        """Whether ``w`` is dominated by ``v`` (the move sending ``w`` to
        ``w*v`` is admissible), with ``leq(v, v)`` true by convention."""
        self.graph.index(w)
        self.graph.index(v)
        return w == v or (v, w) in self.admissible_transvections

    def leq_table(self) -> dict[str, dict[str, bool]]:
        vs = self.graph.vertices
        return {w: {v: self.leq(w, v) for v in vs} for w in vs}

    def star_separates(self, v: str, delta: Iterable[str]) -> bool:
        """Whether ``delta`` meets at least two conjugation components of ``v``."""
        dset = frozenset(delta)
        hit = 0
        for comp in self.admissible_partial_conjugations(v):
            if comp & dset:
                hit += 1
                if hit == 2:
                    return True
        return False

    # -- invariance --------------------------------------------------------

    def is_invariant(self, delta: Iterable[str]) -> bool:
        """Whether the subgroup on ``delta`` is carried to itself by the group.

        Requires upward closure under the preorder and the absence of an
        outside vertex whose star separates ``delta``.
        """
        dset = self.graph.check_subset(delta)
        for w in dset:
            for acting, moved in self.admissible_transvections:
                if moved == w and acting not in dset:
                    return False
        for v in self.graph.vertices:
            if v not in dset and self.star_separates(v, dset):
                return False
        return True

    def acts_trivially(self, delta: Iterable[str]) -> bool:
        """Whether the group acts trivially (up to conjugacy) on ``delta``:
        every vertex covered by a fixed member and no vertex at all
        star-separating ``delta``."""
        dset = self.graph.check_subset(delta)
        if not all(self.covered_by_fixed(v) for v in dset):
            return False
        return not any(self.star_separates(v, dset) for v in self.graph.vertices)

    # -- restriction data -------------------------------------------------------

    def restrict_collections(
        self, delta: Iterable[str]
    ) -> tuple[tuple[frozenset[str], ...], tuple[frozenset[str], ...]]:
        """Both collections intersected into ``delta``.

        Intersections that are empty or all of ``delta`` are dropped, and
        duplicates removed.
        """
        dset = self.graph.check_subset(delta)

        def restrict(coll):
            cut = {m & dset for m in coll}
            cut.discard(frozenset())
            cut.discard(dset)
            return tuple(sorted(cut, key=self.graph.set_key))

        return restrict(self.preserved), restrict(self.fixed)

    def restriction_is_nontrivial(self, delta: Iterable[str]) -> bool:
        """Whether some admissible move acts nontrivially on ``delta``.

        ``delta`` must be a proper nonempty invariant set of a saturated
        instance.  An inversion acts nontrivially when its vertex lies in
        ``delta``; a transvection when its moved letter does; a partial
        conjugation when its acting vertex star-separates ``delta``.
        """
        if not self.saturated:
            raise RorgError("restriction test requires a saturated instance")
        dset = self.graph.check_subset(delta)
        if not dset or dset == self.graph.vertex_set():
            raise RorgError("restriction test needs a proper nonempty vertex set")
        if not self.is_invariant(dset):
            raise RorgError("restriction test needs an invariant vertex set")
        return self._nontrivial_restriction_unchecked(dset)

    def _nontrivial_restriction_unchecked(self, dset: frozenset[str]) -> bool:
        # Trusted path for saturated collections (members are invariant).
        if self.admissible_inversions & dset:
            return True
        if self._admissible_moved & dset:
            return True
        return any(self.star_separates(v, dset) for v in self.graph.vertices)

    def generator_preserves(self, symbol: GeneratorSymbol, delta: Iterable[str]) -> bool:
        """Whether an admissible move has a representative carrying the
        subgroup on ``delta`` to itself."""
        dset = self.graph.check_subset(delta)
        if isinstance(symbol, Inversion):
            return True
        if isinstance(symbol, Transvection):
            return symbol.moved not in dset or symbol.acting in dset
        if isinstance(symbol, PartialConjugation):
            if symbol.acting in dset or not (dset & symbol.conjugated):
                return True
            return dset <= symbol.conjugated | self.graph.star(symbol.acting)
        raise RorgError(f"unknown generator symbol {symbol!r}")


def _invariant_proper_masks(r: Rorg) -> list[int]:
    """Bitmask scan over all proper nonempty vertex sets for invariance."""
    g = r.graph
    n = len(g)
    idx = g.index
    # up[i]: mask of vertices dominating vertex i (including i itself).
    up = [1 << i for i in range(n)]
    for acting, moved in r.admissible_transvections:
        up[idx(moved)] |= 1 << idx(acting)
    comp_masks: list[list[int]] = []
    for v in g.vertices:
        masks = []
        for comp in r.admissible_partial_conjugations(v):
            m = 0
            for u in comp:
                m |= 1 << idx(u)
            masks.append(m)
        comp_masks.append(masks)
    full = (1 << n) - 1
    found = []
    for mask in range(1, full):
        closure = 0
        rest = mask
        while rest:
            low = rest & -rest
            closure |= up[low.bit_length() - 1]
            rest ^= low
        if closure & ~mask:
            continue
        outside = full & ~mask
        separated = False
        while outside and not separated:
            low = outside & -outside
            hits = 0
            for cm in comp_masks[low.bit_length() - 1]:
                if cm & mask:
                    hits += 1
                    if hits == 2:
                        separated = True
                        break
            outside ^= low
        if not separated:
            found.append(mask)
    return found


def _mask_to_set(g: Graph, mask: int) -> frozenset[str]:
    return frozenset(v for i, v in enumerate(g.vertices) if mask >> i & 1)


def saturate(r: Rorg, cap: int = DEFAULT_VERTEX_CAP) -> Rorg:
    """Close the preserved collection under all invariant vertex sets.

    Scans every proper nonempty vertex set (hence the hard vertex cap) and
    adds the invariant ones, plus the full vertex set, to ``preserved``.
    One pass is expected to suffice, but the scan is iterated to a
    fixpoint and the number of passes recorded, as a safety net against
    interactions with the enlarged collection.
    """
    n = len(r.graph)
    if n > cap:
        raise VertexCapExceeded(f"{n} vertices exceeds the saturation cap {cap}")
    current = r
    rounds = 0
    while True:
        rounds += 1
        invariant = {_mask_to_set(current.graph, m) for m in _invariant_proper_masks(current)}
        if n:
            invariant.add(current.graph.vertex_set())
        target = set(current.preserved) | invariant
        if target == set(current.preserved):
            return Rorg(
                current.graph,
                current.preserved,
                current.fixed,
                saturated=True,
                saturation_rounds=rounds,
            )
        current = Rorg(current.graph, tuple(target), current.fixed)
