"""Generator moves and automorphisms of a graph group.

The three kinds of elementary moves are inversions (a generator goes to
its inverse), one-sided transvections (a moved generator is multiplied by
an acting generator, on the left or on the right), and partial
conjugations (every generator in a chosen set is conjugated by the acting
generator).  An :class:`Automorphism` stores the image of each positive
generator as a normalized word; composition, identity testing, and the
defining-relation check all reduce to normal-form computations.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Mapping, Union

from .graphs import Graph
from .words import Word, normalize

__all__ = [
    "Inversion",
    "Transvection",
    "PartialConjugation",
    "GeneratorSymbol",
    "Automorphism",
    "AutomorphismError",
    "pairwise_commuting",
]


class AutomorphismError(ValueError):
    """Malformed generator symbol or ill-defined automorphism data."""


@dataclass(frozen=True)
class Inversion:
    vertex: str

    def describe(self) -> str:
        return f"invert {self.vertex}"


@dataclass(frozen=True)
class Transvection:
    side: str  # "left" or "right"
    acting: str
    moved: str

    def __post_init__(self):
        if self.side not in ("left", "right"):
            raise AutomorphismError(f"transvection side must be left/right, got {self.side!r}")
        if self.acting == self.moved:
            raise AutomorphismError("transvection needs distinct acting and moved vertices")

    def describe(self) -> str:
        if self.side == "right":
            return f"{self.moved} -> {self.moved} {self.acting}"
        return f"{self.moved} -> {self.acting} {self.moved}"


@dataclass(frozen=True)
class PartialConjugation:
    acting: str
    conjugated: frozenset[str] = field(default_factory=frozenset)

    def __post_init__(self):
        object.__setattr__(self, "conjugated", frozenset(self.conjugated))

    def describe(self) -> str:
        return f"conjugate {{{ ' '.join(sorted(self.conjugated)) }}} by {self.acting}"


GeneratorSymbol = Union[Inversion, Transvection, PartialConjugation]


def _validate_symbol(graph: Graph, symbol: GeneratorSymbol) -> None:
    if isinstance(symbol, Inversion):
        graph.index(symbol.vertex)
        return
    if isinstance(symbol, Transvection):
        graph.index(symbol.acting)
        graph.index(symbol.moved)
        # Well-definedness: everything commuting with the moved letter must
        # commute with (or equal) the acting letter.
        if not graph.link(symbol.moved) <= graph.star(symbol.acting):
            raise AutomorphismError(
                f"transvection {symbol.describe()!r} is not an automorphism here"
            )
        return
    if isinstance(symbol, PartialConjugation):
        graph.index(symbol.acting)
        star = graph.star(symbol.acting)
        if symbol.conjugated & star:
            raise AutomorphismError("conjugated set must avoid the acting vertex's star")
        rest = graph.vertex_set() - star
        comps = graph.components(rest)
        covered = frozenset()
        for comp in comps:
            if comp & symbol.conjugated:
                if not comp <= symbol.conjugated:
                    raise AutomorphismError(
                        "conjugated set must be a union of components away from the star"
                    )
                covered |= comp
        if covered != symbol.conjugated:
            raise AutomorphismError("conjugated set contains unknown vertices")
        return
    raise AutomorphismError(f"unknown generator symbol {symbol!r}")


class Automorphism:
    """A graph-group automorphism given by the images of positive generators.

    Instances built from generator symbols (or by composing such) are
    invertible by construction.  Instances built from raw images are
    checked against the defining relations but flagged as unverified for
    invertibility.
    """

    __slots__ = ("graph", "images", "invertibility_verified")

    def __init__(self, graph: Graph, images: Mapping[str, Word], *, _verified: bool = True):
        self.graph = graph
        self.images = {v: normalize(images[v]) for v in graph.vertices}
        self.invertibility_verified = _verified

    # -- constructors --------------------------------------------------------

    @classmethod
    def identity(cls, graph: Graph) -> "Automorphism":
        return cls(graph, {v: Word(graph, [(v, 1)]) for v in graph.vertices})

    @classmethod
    def from_generator(cls, graph: Graph, symbol: GeneratorSymbol) -> "Automorphism":
        _validate_symbol(graph, symbol)
        images = {v: Word(graph, [(v, 1)]) for v in graph.vertices}
        if isinstance(symbol, Inversion):
            images[symbol.vertex] = Word(graph, [(symbol.vertex, -1)])
        elif isinstance(symbol, Transvection):
            m, a = symbol.moved, symbol.acting
            if symbol.side == "right":
                images[m] = Word(graph, [(m, 1), (a, 1)])
            else:
                images[m] = Word(graph, [(a, 1), (m, 1)])
        else:
            a = symbol.acting
            for u in symbol.conjugated:
                images[u] = Word(graph, [(a, 1), (u, 1), (a, -1)])
        return cls(graph, images)

    @classmethod
    def from_images(cls, graph: Graph, images: Mapping[str, Word]) -> "Automorphism":
        """Build directly from images; must respect the defining relations."""
        missing = [v for v in graph.vertices if v not in images]
        if missing:
            raise AutomorphismError(f"missing images for {missing}")
        f = cls(graph, images, _verified=False)
        if not f.respects_relations():
            raise AutomorphismError("images do not respect the defining relations")
        return f

    # -- the group structure ---------------------------------------------------

    def apply(self, w: Word) -> Word:
        """Normalized image of a word; inverse letters use the inverted image."""
        if w.graph != self.graph:
            raise AutomorphismError("word and automorphism live over different graphs")
        letters: list = []
        for v, e in w.letters:
            image = self.images[v]
            letters.extend(image.letters if e == 1 else image.inverse().letters)
        return normalize(Word(self.graph, letters))

    def compose(self, other: "Automorphism") -> "Automorphism":
        """``self`` after ``other``."""
        if self.graph != other.graph:
            raise AutomorphismError("cannot compose automorphisms over different graphs")
        images = {v: self.apply(other.images[v]) for v in self.graph.vertices}
        verified = self.invertibility_verified and other.invertibility_verified
        return Automorphism(self.graph, images, _verified=verified)

    def is_identity(self) -> bool:
        return all(self.images[v].letters == ((v, 1),) for v in self.graph.vertices)

    def same_action(self, other: "Automorphism") -> bool:
        return self.graph == other.graph and self.images == other.images

    def commutes_with(self, other: "Automorphism") -> bool:
        return self.compose(other).same_action(other.compose(self))

    def respects_relations(self) -> bool:
        """Check that images of adjacent generators commute."""
        for u, w in self.graph.edge_pairs():
            fu, fw = self.images[u], self.images[w]
            commutator = fu * fw * fu.inverse() * fw.inverse()
            if not normalize(commutator).is_empty():
                return False
        return True

    def __repr__(self) -> str:
        parts = ", ".join(
            f"{v}->{' '.join(x if e == 1 else x + '^-1' for x, e in self.images[v].letters)}"
            for v in self.graph.vertices
            if self.images[v].letters != ((v, 1),)
        )
        return f"Automorphism({parts or 'identity'})"


def pairwise_commuting(autos: Iterable[Automorphism]) -> bool:
    """Whether every pair in a family commutes (normal-form check)."""
    autos = list(autos)
    return all(f.commutes_with(g) for f, g in combinations(autos, 2))
