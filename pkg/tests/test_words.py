import pytest
from hypothesis import given, settings

from raagvcd import Graph, Word, WordLengthError, equal_elements, normalize, word
from raagvcd.oracles import naive_normal_form

from conftest import word_pairs, words

EDGE = Graph("ab", [("a", "b")])
P3 = Graph("abc", [("a", "b"), ("b", "c")])


def test_commuting_letters_sort():
    assert normalize(word(EDGE, "b a")).letters == (("a", 1), ("b", 1))


def test_inverse_pair_cancels():
    assert normalize(word(EDGE, "a a^-1")).letters == ()


def test_non_commuting_letters_stay_put():
    assert normalize(word(P3, "c a")).letters == (("c", 1), ("a", 1))


def test_cancellation_through_commuting_separator():
    # the separator commutes with the cancelling pair
    assert normalize(word(P3, "a b a^-1")).letters == (("b", 1),)
    # here it does not
    assert normalize(word(P3, "a c a^-1")).letters == (("a", 1), ("c", 1), ("a", -1))


def test_word_parser_and_inverse():
    w = word(P3, "a b^-1")
    assert w.letters == (("a", 1), ("b", -1))
    assert w.inverse().letters == (("b", 1), ("a", -1))


def test_length_cap():
    g = Graph("a")
    with pytest.raises(WordLengthError):
        Word(g, [("a", 1)] * 10_001)


@settings(max_examples=150)
@given(words())
def test_normalize_idempotent(w):
    once = normalize(w)
    assert normalize(once) == once


@settings(max_examples=150)
@given(words())
def test_inverse_law(w):
    assert normalize(w * w.inverse()).is_empty()
    assert normalize(w.inverse() * w).is_empty()


@settings(max_examples=100)
@given(word_pairs(max_length=8))
def test_concatenation_compatible(pair):
    u, v = pair
    assert normalize(u * v) == normalize(normalize(u) * normalize(v))


@settings(max_examples=150)
@given(words(max_length=6))
def test_agrees_with_exhaustive_oracle(w):
    assert normalize(w).letters == naive_normal_form(w).letters


def test_equal_elements():
    assert equal_elements(word(EDGE, "a b"), word(EDGE, "b a"))
    assert not equal_elements(word(P3, "a c"), word(P3, "c a"))
