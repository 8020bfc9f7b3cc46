import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from raagvcd import (
    FouxeRabinovitchLeaf,
    FrLeafData,
    FreeAbelianLeaf,
    GeneralLinearLeaf,
    Graph,
    Rorg,
    RorgError,
    TrivialLeaf,
    aut_vcd,
    build_tree,
    fr_vcd,
    gl_vcd,
    iter_leaves,
    leaf_vcd,
    tree_vcd,
)
from raagvcd.selftest import complete, discrete, star

EDGE = Graph("ab", [("a", "b")])
POINT = Graph("a")


def fr(factor_graphs, m):
    return FrLeafData.from_factor_graphs(factor_graphs, m)


def test_fr_vcd_edge_factor_with_free_part():
    data = fr([EDGE], 1)
    assert data.clique_sizes == (2,) and data.center_ranks == (2,)
    assert fr_vcd(data) == 2


def test_fr_vcd_singleton_factors():
    for n in range(2, 7):
        data = fr([Graph([f"v{i}"]) for i in range(n)], 0)
        assert fr_vcd(data) == n - 2


def test_fr_vcd_free_only():
    assert fr_vcd(fr([], 5)) == 7
    assert fr_vcd(fr([], 1)) == 0
    assert fr_vcd(fr([], 0)) == 0


def test_fr_vcd_degenerate():
    assert fr_vcd(fr([POINT], 0)) == 0


def test_gl_vcd():
    assert gl_vcd(1) == 0
    assert gl_vcd(2) == 1
    assert gl_vcd(5) == 10
    with pytest.raises(ValueError):
        gl_vcd(0)


def test_leaf_vcd():
    assert leaf_vcd(FreeAbelianLeaf(3)) == 3
    assert leaf_vcd(GeneralLinearLeaf(3)) == 3
    assert leaf_vcd(TrivialLeaf()) == 0
    assert leaf_vcd(FouxeRabinovitchLeaf(fr([], 4))) == 5


def test_tree_vcd_examples():
    assert tree_vcd(build_tree(complete(4))) == 6
    assert tree_vcd(build_tree(discrete(5))) == 7
    assert tree_vcd(build_tree(star(2))) == 3


def test_tree_vcd_is_leaf_sum():
    tree = build_tree(star(3))
    assert tree_vcd(tree) == sum(leaf_vcd(leaf.kind) for leaf in iter_leaves(tree))
    reversed_sum = sum(leaf_vcd(leaf.kind) for leaf in reversed(list(iter_leaves(tree))))
    assert tree_vcd(tree) == reversed_sum


def test_aut_vcd():
    for n in range(1, 6):
        assert aut_vcd(complete(n)) == n * (n - 1) // 2
    assert aut_vcd(discrete(2)) == 2
    assert aut_vcd(star(2)) == 4


def test_aut_vcd_rejects_collections():
    with pytest.raises(RorgError):
        aut_vcd(Rorg(discrete(2), [["a"]]))


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 2), st.integers(0, 4))
def test_fr_vcd_monotone_in_free_rank(extra, m):
    factor_graphs = [EDGE, Graph("p"), Graph("cd", [("c", "d")])][: extra + 1]
    lower = fr_vcd(fr(factor_graphs, m))
    upper = fr_vcd(fr(factor_graphs, m + 1))
    assert lower <= upper
