import string
from itertools import combinations

from hypothesis import strategies as st

from raagvcd import Graph, Rorg, Word

NAMES = string.ascii_lowercase


@st.composite
def graphs(draw, min_vertices=1, max_vertices=6):
    n = draw(st.integers(min_vertices, max_vertices))
    names = list(NAMES[:n])
    pairs = list(combinations(names, 2))
    keep = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    edges = [p for p, k in zip(pairs, keep) if k]
    return Graph(names, edges)


@st.composite
def graph_and_subset(draw, max_vertices=6):
    g = draw(graphs(max_vertices=max_vertices))
    sub = draw(st.frozensets(st.sampled_from(g.vertices)))
    return g, sub


@st.composite
def collections_for(draw, g, max_members=3):
    members = st.frozensets(st.sampled_from(g.vertices), min_size=1)
    return draw(st.lists(members, max_size=max_members))


@st.composite
def rorgs(draw, max_vertices=6):
    g = draw(graphs(max_vertices=max_vertices))
    preserved = draw(collections_for(g))
    fixed = draw(collections_for(g))
    return Rorg(g, preserved, fixed)


def _letters(g, max_length):
    return st.lists(
        st.tuples(st.sampled_from(g.vertices), st.sampled_from((1, -1))),
        max_size=max_length,
    )


@st.composite
def words(draw, max_vertices=5, max_length=8):
    g = draw(graphs(max_vertices=max_vertices))
    return Word(g, draw(_letters(g, max_length)))


@st.composite
def word_pairs(draw, max_vertices=5, max_length=8):
    g = draw(graphs(max_vertices=max_vertices))
    return Word(g, draw(_letters(g, max_length))), Word(g, draw(_letters(g, max_length)))
