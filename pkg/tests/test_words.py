import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from artin_bn.words import (
    A,
    B,
    Word,
    WordError,
    affine,
    concat,
    conjugate,
    empty,
    invert,
    letter_exponent_sums,
    parse_word,
    power,
)

B5 = B(5)


def w(text, alpha=B5):
    return parse_word(text, alpha)


def test_concat_cancels():
    assert concat(w("r1"), w("r1^-1")) == empty(B5)
    assert concat(w("r1 r2"), w("r2^-1 r3")) == w("r1 r3")
    assert concat(w("r1 r2"), w("r3")) == w("r1 r2 r3")


def test_concat_alphabet_mismatch():
    with pytest.raises(WordError):
        concat(w("r1"), parse_word("r1", B(6)))


def test_invert():
    assert invert(w("r1 r2^-1")) == w("r2 r1^-1")
    assert invert(empty(B5)) == empty(B5)
    assert invert(w("r3^2")) == w("r3^-1 r3^-1")


def test_conjugate():
    assert conjugate(w("r1"), w("r1")) == w("r1")
    assert conjugate(empty(B5), w("r2 r4")) == w("r2 r4")
    assert str(conjugate(w("r1"), w("r2"))) == "r1 r2 r1^-1"


def test_power():
    assert power(w("r1"), 3) == w("r1 r1 r1")
    assert power(w("r1 r2"), -1) == w("r2^-1 r1^-1")
    assert power(w("r1 r2"), 0) == empty(B5)
    # a conjugate collapses when raised to a power
    assert power(w("r1 r2 r1^-1"), 3) == w("r1 r2^3 r1^-1")


def test_exponent_sums():
    assert letter_exponent_sums(w("r1 r2 r1^-1")) == {1: 0, 2: 1, 3: 0, 4: 0, 5: 0}
    assert set(letter_exponent_sums(empty(B5)).values()) == {0}
    assert letter_exponent_sums(w("r5^2"))[5] == 2


def test_parse_grammar():
    assert w("R4") == w("r4^-1")
    assert w("rho") == w("r1 r2 r3 r4 r5")
    assert w("rho^-2") == invert(power(w("rho"), 2))
    assert parse_word("t0^3 T2", affine(5)) == Word.make(affine(5), [(0, 1)] * 3 + [(2, -1)])
    assert parse_word("", A(3)) == empty(A(3))


@pytest.mark.parametrize(
    "text, alpha",
    [("r6", B5), ("r0", B5), ("s1", B5), ("t5", affine(5)), ("rho", A(5)), ("r1^x", B5), ("@DeltaB", B5), ("q1", B5)],
)
def test_parse_rejects(text, alpha):
    with pytest.raises(WordError):
        parse_word(text, alpha)


def test_alphabet_minimum_rank():
    with pytest.raises(WordError):
        affine(2)
    with pytest.raises(WordError):
        A(1)


def test_str_and_compact_roundtrip():
    u = w("r1 r1 r2^-1 r3^-1 r3^-1 r5")
    assert u.compact() == "r1^2 r2^-1 r3^-2 r5"
    assert w(u.compact()) == u
    assert w(str(u).replace("1^-1", "1^-1")) == u
    assert str(empty(B5)) == "1"


signed_letters = st.lists(st.tuples(st.integers(1, 5), st.sampled_from((1, -1))), max_size=30)


@given(signed_letters, signed_letters, signed_letters)
def test_free_group_laws(a, b, c):
    u, v, x = (Word.make(B5, t) for t in (a, b, c))
    assert concat(u, invert(u)) == empty(B5)
    assert concat(concat(u, v), x) == concat(u, concat(v, x))
    su, sv, suv = letter_exponent_sums(u), letter_exponent_sums(v), letter_exponent_sums(concat(u, v))
    assert all(suv[i] == su[i] + sv[i] for i in suv)


@settings(max_examples=50)
@given(signed_letters, st.randoms(use_true_random=False))
def test_free_reduction_is_confluent(letters, rnd):
    # cancel adjacent inverse pairs in a random order until none are left
    seq = list(letters)
    while True:
        spots = [i for i in range(len(seq) - 1) if seq[i][0] == seq[i + 1][0] and seq[i][1] == -seq[i + 1][1]]
        if not spots:
            break
        i = rnd.choice(spots)
        del seq[i : i + 2]
    assert Word.make(B5, letters).letters == tuple(seq)
