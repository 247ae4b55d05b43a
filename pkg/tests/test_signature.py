import pytest
from hypothesis import given
from hypothesis import strategies as st

from noisyins import Word, compute_signature, count_irr, enumerate_irr, is_irreducible
from noisyins.signature import signature_tuple

from . import oracles
from .conftest import W


def test_example_signatures():
    sig = compute_signature(W("0312130"))
    assert sig.word == W("013")
    assert sig.block_lengths == (2, 3, 2)
    assert compute_signature(W("1320102")).word == W("1320102")
    sig = compute_signature(W("0000"))
    assert (sig.word, sig.block_lengths) == (W("0"), (4,))


def test_empty_signature():
    sig = compute_signature(W(""))
    assert sig.word == W("") and sig.block_lengths == ()


def test_irreducibility_examples():
    assert is_irreducible(W("1320102"))
    assert not is_irreducible(W("0312130"))
    assert not is_irreducible(W("00"))


@pytest.mark.parametrize("q,n", [(4, 1), (4, 2), (4, 3), (4, 5), (6, 3), (6, 4), (8, 3)])
def test_signature_matches_literal_definition(q, n):
    for t in oracles.words(q, n):
        x = Word.of(t, q)
        assert compute_signature(x).word.symbols == oracles.literal_signature(t, q)
        assert signature_tuple(t, q) == oracles.literal_signature(t, q)
        assert is_irreducible(x) == oracles.literal_irreducible(t, q)


@pytest.mark.parametrize("n,expected", [(1, 4), (2, 8), (3, 16)])
def test_enumerate_irr_small(n, expected):
    # expected counts from filtering all 4^n words
    brute = [t for t in oracles.words(4, n) if oracles.literal_irreducible(t, 4)]
    assert len(brute) == expected
    assert [x.symbols for x in enumerate_irr(4, n)] == brute


def test_enumerate_irr_zero_length_is_empty():
    assert list(enumerate_irr(4, 0)) == []


def test_count_irr_examples():
    assert count_irr(4, 6) == 128 == len(list(enumerate_irr(4, 6)))
    assert count_irr(4, 1) == 4
    assert count_irr(6, 3) == 96 == sum(oracles.literal_irreducible(t, 6) for t in oracles.words(6, 3))


def test_count_irr_is_exact_for_huge_n():
    assert count_irr(4, 2001) == 4 * 2**2000


@pytest.mark.parametrize("q", [4, 6])
@pytest.mark.parametrize("n", range(1, 9))
def test_enumeration_count_agrees(q, n):
    assert sum(1 for _ in enumerate_irr(q, n)) == count_irr(q, n)


word_strategy = st.sampled_from([4, 6, 10]).flatmap(
    lambda q: st.lists(st.integers(0, q - 1), max_size=40).map(lambda s: Word.of(s, q)))


@given(word_strategy)
def test_signature_properties(x):
    sig = compute_signature(x)
    assert is_irreducible(sig.word)
    assert sum(sig.block_lengths) == len(x)
    assert len(sig.block_lengths) == len(sig.word)
    again = compute_signature(sig.word)
    assert again.word == sig.word
    assert set(again.block_lengths) <= {1}


@given(word_strategy, st.randoms(use_true_random=False))
def test_block_reexpansion_keeps_signature(x, rnd):
    sig = compute_signature(x)
    q = x.q
    out = []
    for head, length in zip(sig.word, sig.block_lengths):
        out.append(head)
        out.extend(rnd.choice((head, q - 1 - head)) for _ in range(length - 1))
    assert compute_signature(Word.of(out, q)).word == sig.word
