from itertools import combinations

import pytest
from hypothesis import given, settings

from raagvcd import Graph, Rorg, RorgError, VertexCapExceeded, saturate
from raagvcd.oracles import invariant_by_generators
from raagvcd import Inversion, PartialConjugation, Transvection

from conftest import rorgs

P3 = Graph("abc", [("a", "b"), ("b", "c")])
P5 = Graph("abcde", [("a", "b"), ("b", "c"), ("c", "d"), ("d", "e")])
K3 = Graph("abc", list(combinations("abc", 2)))
DISCRETE2 = Graph("ab")
DISCRETE3 = Graph("abc")

P5_SINGLETONS = Rorg(P5, fixed=[[v] for v in "abcde"])
THREE_CHAIN = Rorg(DISCRETE3, [["a", "b"], ["b", "c"]], [["a", "b"], ["b", "c"]])


def fs(chars):
    return frozenset(chars)


def test_preserved_avoiding():
    r = Rorg(DISCRETE3, [["a", "b"], ["b", "c"]])
    assert r.preserved_avoiding("a") == (fs("bc"),)
    assert Rorg(DISCRETE3).preserved_avoiding("a") == ()
    assert Rorg(DISCRETE3, [["a", "b"]]).preserved_avoiding("b") == ()


def test_admissible_inversions():
    assert Rorg(P3).admissible_inversions == fs("abc")
    assert Rorg(DISCRETE3, fixed=[["a"], ["b"], ["c"]]).admissible_inversions == fs("")
    assert Rorg(P3, fixed=[["b"]]).admissible_inversions == fs("ac")


def test_admissible_transvections():
    assert Rorg(P3).admissible_transvections == {
        ("b", "a"),
        ("b", "c"),
        ("c", "a"),
        ("a", "c"),
    }
    assert Rorg(DISCRETE2).admissible_transvections == {("a", "b"), ("b", "a")}
    assert Rorg(DISCRETE2, fixed=[["b"]]).admissible_transvections == {("b", "a")}


def test_admissible_partial_conjugations():
    assert P5_SINGLETONS.admissible_partial_conjugations("c") == (fs("a"), fs("e"))
    assert THREE_CHAIN.admissible_partial_conjugations("b") == (fs("a"), fs("c"))
    r = Rorg(K3)
    assert all(r.admissible_partial_conjugations(v) == () for v in "abc")


def test_leq():
    r = Rorg(P3)
    assert r.leq("a", "b")
    assert not r.leq("b", "a")
    assert all(r.leq(v, v) for v in "abc")


def test_leq_table_reflexive_transitive():
    for r in (Rorg(P3), P5_SINGLETONS, THREE_CHAIN, Rorg(K3)):
        table = r.leq_table()
        vs = r.graph.vertices
        assert all(table[v][v] for v in vs)
        for w in vs:
            for v in vs:
                for u in vs:
                    if table[w][v] and table[v][u]:
                        assert table[w][u]


def test_star_separates():
    assert P5_SINGLETONS.star_separates("c", fs("ae"))
    assert not P5_SINGLETONS.star_separates("c", fs("ab"))
    assert not P5_SINGLETONS.star_separates("c", fs(""))


def test_is_invariant():
    r = Rorg(P3)
    assert r.is_invariant(fs("b"))
    assert not r.is_invariant(fs("ab"))
    assert r.is_invariant(fs("abc"))


def test_acts_trivially():
    assert Rorg(P3, fixed=[["b"]]).acts_trivially(fs("b"))
    assert not Rorg(P3).acts_trivially(fs("b"))
    assert Rorg(P3).acts_trivially(fs(""))


def test_saturate_path():
    r = saturate(Rorg(P3))
    assert set(r.preserved) == {fs("b"), fs("abc")}
    assert r.saturated


def test_saturate_complete():
    r = saturate(Rorg(K3))
    assert set(r.preserved) == {fs("abc")}


def test_saturate_idempotent_and_monotone():
    r = saturate(THREE_CHAIN)
    again = saturate(r)
    assert again == r
    assert set(THREE_CHAIN.preserved) <= set(r.preserved)


def test_saturate_vertex_cap():
    big = Graph([f"v{i}" for i in range(25)])
    with pytest.raises(VertexCapExceeded):
        saturate(Rorg(big))


def test_restrict_collections():
    r = Rorg(DISCRETE3, [["a", "b"], ["b", "c"]])
    gg, hh = r.restrict_collections(fs("ab"))
    assert gg == (fs("b"),)
    assert hh == ()
    gg, _ = Rorg(DISCRETE3, [["c"]]).restrict_collections(fs("ab"))
    assert gg == ()
    gg, _ = Rorg(DISCRETE3, [["b"]]).restrict_collections(fs("b"))
    assert gg == ()


def test_restriction_nontrivial_inversion():
    r = saturate(Rorg(P3))
    assert r.restriction_is_nontrivial(fs("b"))


def test_restriction_trivial_cases():
    r = saturate(THREE_CHAIN)
    assert not r.restriction_is_nontrivial(fs("ab"))
    assert not r.restriction_is_nontrivial(fs("b"))


def test_restriction_preconditions():
    r = Rorg(P3)
    with pytest.raises(RorgError):
        r.restriction_is_nontrivial(fs("b"))  # not saturated
    sat = saturate(r)
    with pytest.raises(RorgError):
        sat.restriction_is_nontrivial(fs("abc"))  # not proper
    with pytest.raises(RorgError):
        sat.restriction_is_nontrivial(fs("ab"))  # not invariant


def test_generator_preserves():
    r = Rorg(P3)
    assert not r.generator_preserves(Transvection("right", "c", "a"), fs("ab"))
    assert r.generator_preserves(Inversion("a"), fs("ab"))
    assert r.generator_preserves(PartialConjugation("c", fs("a")), fs("abc"))


@settings(max_examples=60, deadline=None)
@given(rorgs(max_vertices=5))
def test_invariance_matches_generator_oracle(r):
    sat = saturate(r)
    names = sat.graph.vertices
    for size in range(1, len(names)):
        for subset in combinations(names, size):
            delta = frozenset(subset)
            assert sat.is_invariant(delta) == invariant_by_generators(sat, delta)


@settings(max_examples=60, deadline=None)
@given(rorgs(max_vertices=5))
def test_star_separation_monotone(r):
    names = r.graph.vertices
    for size in range(1, len(names)):
        for subset in combinations(names, size):
            delta = frozenset(subset)
            for v in names:
                if r.star_separates(v, delta):
                    for u in names:
                        assert r.star_separates(v, delta | {u})


@settings(max_examples=40, deadline=None)
@given(rorgs(max_vertices=5))
def test_saturate_fixpoint(r):
    sat = saturate(r)
    assert set(r.preserved) <= set(sat.preserved)
    assert saturate(sat) == sat


@settings(max_examples=40, deadline=None)
@given(rorgs(max_vertices=5))
def test_trivial_restriction_has_no_conjugation_witness(r):
    """When no move restricts nontrivially, no conjugation witness exists."""
    sat = saturate(r)
    full = sat.graph.vertex_set()
    for delta in sat.preserved:
        if delta == full or sat.restriction_is_nontrivial(delta):
            continue
        for v in sat.graph.vertices:
            for comp in sat.admissible_partial_conjugations(v):
                assert not (
                    delta & comp and not delta <= comp | sat.graph.star(v)
                )
