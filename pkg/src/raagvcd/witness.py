"""Explicit free abelian witness subgroups for Fouxe-Rabinovitch leaves.

The recipe realizing the full dimension: reorder the factors so the first
has the largest clique; fix a maximum clique A1 of that factor and let X
be the free-part vertices.  Take every left and right transvection moving
an ``x`` in X by an ``a`` in A1, the conjugation of every other factor by
every ``a`` in A1, and for each factor the conjugation of the factor by
each non-universal vertex of its own chosen maximum clique.  These moves
pairwise commute in the automorphism group; the only inner automorphisms
among their products are conjugations by clique elements of the first
factor, so the outer rank is the automorphism-level rank minus the size
of A1, which equals the leaf dimension.

With no factors at all the group is the outer automorphism group of a
free group; the same shape works with the first free vertex playing the
role of the clique (rank ``2m - 3``).

Verification is done at the automorphism level only: all generator pairs
are checked to commute via normal forms.  The inner correction is applied
numerically; outer-level equality testing would need a conjugacy solver,
which is out of scope.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations


from .autos import Automorphism, GeneratorSymbol, PartialConjugation, Transvection
from .leaves import FrLeafData
from .vcd import fr_vcd

__all__ = ["WitnessSet", "WitnessReport", "witness_fr", "witness_automorphisms", "verify_witness"]


@dataclass(frozen=True)
class WitnessSet:
    data: FrLeafData
    generators: tuple[GeneratorSymbol, ...]
    aut_rank: int
    out_rank: int
    base_clique: tuple[str, ...]


@dataclass(frozen=True)
class WitnessReport:
    commuting: bool
    pairs_checked: int
    failing_pairs: tuple[tuple[int, int], ...]
    rank_matches: bool
    expected_rank: int


def _least_max_clique(data: FrLeafData, factor: frozenset[str]) -> tuple[str, ...]:
    """The shortlex-least maximum clique of a factor subgraph."""
    return data.graph.maximum_cliques(factor)[0]


def witness_fr(data: FrLeafData) -> WitnessSet:
    """The explicit commuting family realizing the leaf dimension."""
    k, m = data.k, data.m
    if k + m < 2:
        raise ValueError("decomposition is degenerate: needs k + m >= 2")
    g = data.graph
    free = g.sort(data.free_vertices)
    gens: list[GeneratorSymbol] = []

    if k == 0:
        base = free[0]
        for x in free[1:]:
            gens.append(Transvection("right", base, x))
            gens.append(Transvection("left", base, x))
        aut_rank = 2 * (m - 1)
        out_rank = aut_rank - 1
        return WitnessSet(data, tuple(gens), aut_rank, out_rank, (base,))

    ds = data.clique_sizes
    order = sorted(range(k), key=lambda i: (-ds[i], g.set_key(data.factors[i])))
    factors = [data.factors[i] for i in order]
    cliques = [_least_max_clique(data, f) for f in factors]
    d1 = len(cliques[0])

    for a in cliques[0]:
        for x in free:
            gens.append(Transvection("right", a, x))
            gens.append(Transvection("left", a, x))
    for a in cliques[0]:
        for f in factors[1:]:
            gens.append(PartialConjugation(a, f))
    for f, clique in zip(factors, cliques):
        center = g.center_vertices(f)
        for v in clique:
            if v not in center:
                gens.append(PartialConjugation(v, f - g.star(v)))

    aut_rank = (2 * m + k - 1) * d1 + sum(
        d - z for d, z in zip(data.clique_sizes, data.center_ranks)
    )
    out_rank = aut_rank - d1
    if len(gens) != aut_rank:
        raise AssertionError(
            f"witness recipe produced {len(gens)} moves, expected {aut_rank}"
        )
    return WitnessSet(data, tuple(gens), aut_rank, out_rank, cliques[0])


def witness_automorphisms(witness: WitnessSet) -> tuple[Automorphism, ...]:
    g = witness.data.graph
    return tuple(Automorphism.from_generator(g, s) for s in witness.generators)


def verify_witness(witness: WitnessSet) -> WitnessReport:
    """Check pairwise commutation and the rank bookkeeping of a witness."""
    autos = witness_automorphisms(witness)
    failing = tuple(
        (i, j)
        for (i, f), (j, h) in combinations(enumerate(autos), 2)
        if not f.commutes_with(h)
    )
    expected = fr_vcd(witness.data)
    return WitnessReport(
        commuting=not failing,
        pairs_checked=len(autos) * (len(autos) - 1) // 2,
        failing_pairs=failing,
        rank_matches=witness.out_rank == expected,
        expected_rank=expected,
    )
