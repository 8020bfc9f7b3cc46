"""Words and canonical normal forms in a partially commutative group.

Group elements are words in the vertex generators and their inverses,
where two generators commute exactly when their vertices span an edge.
The canonical form is computed by the classical piling construction: each
letter is pushed onto a per-generator stack, recording an opaque marker on
the stacks of all non-commuting generators; a letter cancels when the
previous occurrence of its generator is still on top of its own stack
(i.e. only commuting letters arrived since).  Reading the piles back
greedily, always emitting the least available generator in the fixed
vertex order, yields the unique shortlex-minimal reduced word.  Two words
are equal in the group iff their normal forms coincide.
"""

from __future__ import annotations

from collections import deque
from functools import lru_cache
from typing import Iterable

from .graphs import Graph, GraphError

__all__ = ["Word", "WordLengthError", "word", "normalize", "equal_elements", "MAX_WORD_LETTERS"]

# Guard against accidental exponential blowup in long composition chains.
MAX_WORD_LETTERS = 10_000

Letter = tuple[str, int]


class WordLengthError(RuntimeError):
    """A word exceeded the hard letter-count cap."""


class Word:
    """A word over the vertex generators of a graph group."""

    __slots__ = ("graph", "letters")

    def __init__(self, graph: Graph, letters: Iterable[Letter] = ()):
        lets = tuple((v, int(e)) for v, e in letters)
        if len(lets) > MAX_WORD_LETTERS:
            raise WordLengthError(f"word has {len(lets)} letters (cap {MAX_WORD_LETTERS})")
        for v, e in lets:
            graph.index(v)
            if e not in (1, -1):
                raise GraphError(f"letter exponent must be +1 or -1, got {e}")
        self.graph = graph
        self.letters = lets

    def __len__(self) -> int:
        return len(self.letters)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Word):
            return NotImplemented
        return self.graph == other.graph and self.letters == other.letters

    def __hash__(self) -> int:
        return hash((self.graph, self.letters))

    def __mul__(self, other: "Word") -> "Word":
        if self.graph != other.graph:
            raise GraphError("cannot multiply words over different graphs")
        return Word(self.graph, self.letters + other.letters)

    def inverse(self) -> "Word":
        return Word(self.graph, tuple((v, -e) for v, e in reversed(self.letters)))

    def is_empty(self) -> bool:
        return not self.letters

    def __repr__(self) -> str:
        return f"word({display(self)!r})"


def word(graph: Graph, source: "str | Iterable[Letter]") -> Word:
    """Build a word from ``"a b^-1 c"`` style text or an iterable of letters."""
    if isinstance(source, str):
        letters = []
        for token in source.split():
            if token.endswith("^-1"):
                letters.append((token[:-3], -1))
            else:
                letters.append((token, 1))
        return Word(graph, letters)
    return Word(graph, source)


def display(w: Word) -> str:
    return " ".join(v if e == 1 else f"{v}^-1" for v, e in w.letters)


@lru_cache(maxsize=None)
def _blockers(graph: Graph) -> dict[str, tuple[str, ...]]:
    """For each vertex, the other vertices whose letters do not commute with it."""
    return {
        v: tuple(u for u in graph.vertices if u != v and u not in graph.link(v))
        for v in graph.vertices
    }


def normalize(w: Word) -> Word:
    """The canonical (shortlex-minimal reduced) form of ``w``."""
    graph = w.graph
    blockers = _blockers(graph)
    piles: dict[str, deque] = {v: deque() for v in graph.vertices}
    count = 0
    for v, e in w.letters:
        pile = piles[v]
        if pile and pile[-1] == -e:
            pile.pop()
            for u in blockers[v]:
                piles[u].pop()
            count -= 1
        else:
            pile.append(e)
            for u in blockers[v]:
                piles[u].append(0)
            count += 1
    out: list[Letter] = []
    while count:
        for v in graph.vertices:
            pile = piles[v]
            if pile and pile[0] != 0:
                out.append((v, pile.popleft()))
                for u in blockers[v]:
                    piles[u].popleft()
                count -= 1
                break
        else:  # pragma: no cover - the piling invariants make this unreachable
            raise AssertionError("depiling stalled")
    return Word(graph, out)


def equal_elements(u: Word, v: Word) -> bool:
    """Whether two words represent the same group element."""
    return normalize(u).letters == normalize(v).letters
