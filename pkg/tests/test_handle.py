import pytest

from artin_bn.bn import parse
from artin_bn.garside import normal_form
from artin_bn.handle import HandleBudgetExceeded, handle_trivial, reduce_signed
from artin_bn.words import A, B, Word, WordError

from conftest import random_word


def test_examples():
    assert handle_trivial(parse("s1 s2 s1 s2^-1 s1^-1 s2^-1", A(3)))
    assert not handle_trivial(parse("s1", A(3)))
    assert handle_trivial(parse("", A(3)))


def test_reduced_words_are_handle_free():
    out = reduce_signed([1, 2, -1, 3, 1, -2], 3)
    for i, x in enumerate(out):
        for j in range(i + 1, len(out)):
            y = out[j]
            if abs(y) < abs(x):
                break
            if abs(y) == abs(x):
                assert (x > 0) == (y > 0)
                break


def test_budget():
    u = parse("@Delta^2 s1 @Delta^-2 s1^-1", A(6))
    with pytest.raises(HandleBudgetExceeded) as exc:
        handle_trivial(u, budget=2)
    assert exc.value.budget == 2
    assert handle_trivial(u)


def test_type_check():
    with pytest.raises(WordError):
        handle_trivial(parse("r1", B(3)))


def test_interleavings_agree_with_normal_form(rng):
    for _ in range(100):
        m = rng.randint(2, 6)
        u = random_word(rng, A(m), rng.randint(1, 20))
        v = random_word(rng, A(m), rng.randint(0, 6))
        cut = rng.randint(0, len(u))
        head, tail = Word.make(A(m), u.letters[:cut]), Word.make(A(m), u.letters[cut:])
        i = rng.randint(1, m - 1)
        relator = Word.from_signed(A(m), [i, i + 1, i, -(i + 1), -i, -(i + 1)])
        # u with a conjugated relator spliced in, times u^-1: trivial, but not freely
        spliced = head * v * relator * v.inverse() * tail * u.inverse()
        assert spliced
        assert handle_trivial(spliced)
        w = u * random_word(rng, A(m), 3)
        assert handle_trivial(w * u.inverse()) == (normal_form(w) == normal_form(u))
