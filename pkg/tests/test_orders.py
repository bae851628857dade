from itertools import product

import pytest
from hypothesis import given
from hypothesis import strategies as st

from relsplit.orders import COMPARATORS, less, lex_less, radix_less

words = st.lists(st.integers(min_value=0, max_value=3), max_size=6).map(tuple)


def all_words(alphabet, max_len):
    for n in range(max_len + 1):
        yield from product(range(alphabet), repeat=n)


def test_radix_orders_by_length_first():
    assert radix_less((3,), (1, 2))
    assert radix_less((1, 2), (1, 1, 2))
    assert not radix_less((1, 1, 2), (3,))


def test_lex_is_dictionary_order():
    assert lex_less((1, 1, 2), (1, 2))
    assert lex_less((1, 2), (3,))
    assert not lex_less((3,), (1, 2))


def test_empty_word_is_least_in_both():
    for name in ("radix", "lex"):
        cmp = less(name)
        assert not cmp((), ())
        for w in all_words(2, 3):
            if w:
                assert cmp((), w)
                assert not cmp(w, ())


def test_equal_length_words_agree():
    for u in all_words(2, 4):
        for v in all_words(2, 4):
            if len(u) == len(v):
                assert radix_less(u, v) == lex_less(u, v)


def test_prefix_is_lex_smaller():
    assert lex_less((0, 1), (0, 1, 0))
    assert lex_less((), (0,))


def test_unknown_comparator_rejected():
    with pytest.raises(ValueError):
        less("shortlex")
    assert set(COMPARATORS) == {"radix", "lex"}


@given(words, words)
def test_trichotomy(u, v):
    for cmp in (radix_less, lex_less):
        assert (cmp(u, v), cmp(v, u), u == v).count(True) == 1


@given(words, words, words)
def test_transitivity(u, v, w):
    for cmp in (radix_less, lex_less):
        if cmp(u, v) and cmp(v, w):
            assert cmp(u, w)


@given(words)
def test_irreflexive(u):
    assert not radix_less(u, u)
    assert not lex_less(u, u)
