"""Independent brute-force oracles used by the verification suite.

Each oracle recomputes a result of the main code path by a different
method: word normal forms by exhaustive closure under elementary moves,
invariance by direct inspection of every admissible move, and clique
numbers by subset enumeration.  They are deliberately slow and simple.
"""

from __future__ import annotations

from itertools import combinations
from typing import Iterable

from .autos import GeneratorSymbol, Inversion, PartialConjugation, Transvection
from .graphs import Graph
from .rorg import Rorg
from .words import Word

__all__ = [
    "naive_normal_form",
    "brute_force_max_clique",
    "admissible_generators",
    "invariant_by_generators",
]


def naive_normal_form(w: Word) -> Word:
    """Shortlex-least word in the closure under swaps and cancellations.

    Explores every word reachable by swapping adjacent letters on adjacent
    vertices (in both directions) or cancelling an adjacent inverse pair,
    then takes the smallest.  Exponential; meant for short words only.
    """
    g = w.graph

    def key(letters):
        return (len(letters), tuple((g.index(v), e != 1) for v, e in letters))

    seen = {w.letters}
    frontier = [w.letters]
    while frontier:
        nxt = []
        for letters in frontier:
            for i in range(len(letters) - 1):
                (u, e), (v, f) = letters[i], letters[i + 1]
                if u == v and e == -f:
                    cand = letters[:i] + letters[i + 2 :]
                    if cand not in seen:
                        seen.add(cand)
                        nxt.append(cand)
                elif v in g.link(u):
                    cand = letters[:i] + (letters[i + 1], letters[i]) + letters[i + 2 :]
                    if cand not in seen:
                        seen.add(cand)
                        nxt.append(cand)
        frontier = nxt
    return Word(g, min(seen, key=key))


def brute_force_max_clique(g: Graph, s: Iterable[str]) -> int:
    """Largest clique size by enumerating all subsets of ``s``."""
    verts = g.sort(s)
    best = 0
    for size in range(len(verts), 0, -1):
        if size <= best:
            break
        for cand in combinations(verts, size):
            if g.is_clique(cand):
                best = size
                break
    return best


def admissible_generators(r: Rorg) -> list[GeneratorSymbol]:
    """Every admissible move of a group, one symbol per outer generator.

    Transvections are listed one-sided (right); partial conjugations by
    single components, skipping the union of everything, which is inner.
    """
    out: list[GeneratorSymbol] = []
    for v in r.graph.sort(r.admissible_inversions):
        out.append(Inversion(v))
    for acting, moved in sorted(r.admissible_transvections, key=lambda p: r.graph.set_key(p)):
        out.append(Transvection("right", acting, moved))
    for v in r.graph.vertices:
        comps = r.admissible_partial_conjugations(v)
        if len(comps) >= 2:
            for comp in comps:
                out.append(PartialConjugation(v, comp))
    return out


def invariant_by_generators(r: Rorg, delta: Iterable[str]) -> bool:
    """Invariance decided by checking every admissible move directly.

    Independent route for the invariance criterion: a set is invariant
    exactly when every admissible move has a representative preserving it.
    Here single-component conjugations are enumerated even when a vertex
    has just one (the full union aside, those are inner), which is safe:
    inner moves always preserve.
    """
    dset = frozenset(delta)
    for symbol in admissible_generators(r):
        if not r.generator_preserves(symbol, dset):
            return False
    # Single-component vertices were skipped above (inner only); nothing to add.
    return True
