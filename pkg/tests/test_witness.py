import pytest

from raagvcd import (
    FouxeRabinovitchLeaf,
    FrLeafData,
    Graph,
    PartialConjugation,
    Transvection,
    build_tree,
    fr_vcd,
    iter_leaves,
    verify_witness,
    witness_automorphisms,
    witness_fr,
)
from raagvcd.selftest import discrete, edge_plus_point, mccool


def fr(factor_graphs, m):
    return FrLeafData.from_factor_graphs(factor_graphs, m)


def test_edge_factor_witness():
    data = fr([Graph("ab", [("a", "b")])], 1)
    witness = witness_fr(data)
    moved = {(s.acting, s.moved, s.side) for s in witness.generators}
    x = next(iter(data.free_vertices))
    assert moved == {
        ("a", x, "right"),
        ("a", x, "left"),
        ("b", x, "right"),
        ("b", x, "left"),
    }
    assert witness.aut_rank == 4
    assert witness.out_rank == 2 == fr_vcd(data)


def test_singleton_factors_witness():
    data = fr([Graph("a"), Graph("b"), Graph("c")], 0)
    witness = witness_fr(data)
    assert set(witness.generators) == {
        PartialConjugation("a", frozenset("b")),
        PartialConjugation("a", frozenset("c")),
    }
    assert witness.aut_rank == 2
    assert witness.out_rank == 1 == fr_vcd(data)


def test_degenerate_decomposition_rejected():
    with pytest.raises(ValueError):
        witness_fr(fr([Graph("a")], 0))


def test_free_group_witness():
    data = fr([], 3)
    witness = witness_fr(data)
    assert witness.aut_rank == 4
    assert witness.out_rank == 3 == fr_vcd(data)
    report = verify_witness(witness)
    assert report.commuting and report.rank_matches


def test_witness_with_noncentral_clique_vertices():
    # a path factor: its clique has a non-universal vertex, so the factor
    # is conjugated by it
    path = Graph("abc", [("a", "b"), ("b", "c")])
    data = fr([path], 1)
    witness = witness_fr(data)
    assert witness.aut_rank == (2 * 1 + 1 - 1) * 2 + (2 - 1)
    conjugations = [s for s in witness.generators if isinstance(s, PartialConjugation)]
    assert len(conjugations) == 1
    report = verify_witness(witness)
    assert report.commuting and report.rank_matches


def test_witness_automorphisms_commute_on_headline_leaves():
    for tree in (build_tree(discrete(4)), build_tree(mccool(4)), build_tree(edge_plus_point())):
        for leaf in iter_leaves(tree):
            if isinstance(leaf.kind, FouxeRabinovitchLeaf):
                witness = witness_fr(leaf.kind.data)
                report = verify_witness(witness)
                assert report.commuting, report.failing_pairs
                assert report.rank_matches
                assert len(witness_automorphisms(witness)) == witness.aut_rank
