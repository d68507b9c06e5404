"""
Free words over the generators of the Artin groups of type A_n, B_n and affine A_{n-1}.

Nothing here knows about relations: a Word is a freely reduced sequence of signed
generators, and the operations are those of the free group. Equality in the Artin
groups themselves lives in `garside` and `bn`.

Indexing follows the Coxeter graphs: s_1..s_n for type A, r_1..r_n for type B (r_n is
the end of the edge labelled 4), and t_0..t_{n-1} for affine type A.
"""

from __future__ import annotations

import enum
import re
from collections import Counter
from dataclasses import dataclass
from typing import Callable, Iterable, NamedTuple


class WordError(ValueError):
    """Raised for malformed words, bad indices and alphabet mismatches."""


class Family(enum.Enum):
    TypeA = "A"
    TypeB = "B"
    TypeAffineA = "affineA"


_PREFIX = {Family.TypeA: "s", Family.TypeB: "r", Family.TypeAffineA: "t"}
_MIN_RANK = {Family.TypeA: 2, Family.TypeB: 2, Family.TypeAffineA: 3}


@dataclass(frozen=True)
class Alphabet:
    family: Family
    rank: int

    def __post_init__(self):
        if self.rank < _MIN_RANK[self.family]:
            raise WordError(f"{self.family.name} needs rank >= {_MIN_RANK[self.family]}, got {self.rank}")

    @property
    def prefix(self) -> str:
        return _PREFIX[self.family]

    @property
    def indices(self) -> range:
        if self.family is Family.TypeAffineA:
            return range(0, self.rank)
        return range(1, self.rank + 1)

    def __contains__(self, index: int) -> bool:
        return index in self.indices

    def __str__(self):
        return f"{self.family.name}({self.rank})"


def A(n: int) -> Alphabet:
    return Alphabet(Family.TypeA, n)


def B(n: int) -> Alphabet:
    return Alphabet(Family.TypeB, n)


def affine(n: int) -> Alphabet:
    return Alphabet(Family.TypeAffineA, n)


class Letter(NamedTuple):
    index: int
    sign: int  # +1 or -1

    def inverse(self) -> Letter:
        return Letter(self.index, -self.sign)


def _free_reduce(letters: Iterable[Letter]) -> tuple[Letter, ...]:
    stack: list[Letter] = []
    for x in letters:
        if stack and stack[-1].index == x.index and stack[-1].sign == -x.sign:
            stack.pop()
        else:
            stack.append(x)
    return tuple(stack)


@dataclass(frozen=True)
class Word:
    """An immutable, freely reduced word. Build with `Word.make` unless already reduced."""

    alphabet: Alphabet
    letters: tuple[Letter, ...] = ()

    @classmethod
    def make(cls, alphabet: Alphabet, letters: Iterable[Letter | tuple[int, int]] = ()) -> Word:
        checked = []
        for index, sign in letters:
            if index not in alphabet:
                raise WordError(f"generator index {index} is not in {alphabet}")
            if sign not in (1, -1):
                raise WordError(f"letter sign must be +1 or -1, got {sign}")
            checked.append(Letter(index, sign))
        return cls(alphabet, _free_reduce(checked))

    @classmethod
    def gen(cls, alphabet: Alphabet, index: int, exponent: int = 1) -> Word:
        sign = 1 if exponent >= 0 else -1
        return cls.make(alphabet, [(index, sign)] * abs(exponent))

    @classmethod
    def from_signed(cls, alphabet: Alphabet, ints: Iterable[int]) -> Word:
        """Signed-integer shorthand: 3 is the third generator, -3 its inverse (not for affine words)."""
        return cls.make(alphabet, [(abs(x), 1 if x > 0 else -1) for x in ints])

    def __len__(self):
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __bool__(self):
        return bool(self.letters)

    def _check(self, other: Word):
        if self.alphabet != other.alphabet:
            raise WordError(f"alphabet mismatch: {self.alphabet} vs {other.alphabet}")

    def __mul__(self, other: Word) -> Word:
        return concat(self, other)

    def __pow__(self, k: int) -> Word:
        return power(self, k)

    def inverse(self) -> Word:
        return invert(self)

    def signed(self) -> tuple[int, ...]:
        return tuple(x.index * x.sign for x in self.letters)

    def __str__(self):
        if not self.letters:
            return "1"
        p = self.alphabet.prefix
        return " ".join(f"{p}{x.index}" if x.sign > 0 else f"{p}{x.index}^-1" for x in self.letters)

    def compact(self) -> str:
        """Grammar-compatible rendering with runs collapsed into powers, e.g. `r1^3 r2^-1`."""
        if not self.letters:
            return ""
        out = []
        p = self.alphabet.prefix
        i = 0
        while i < len(self.letters):
            j = i
            while j < len(self.letters) and self.letters[j] == self.letters[i]:
                j += 1
            e = (j - i) * self.letters[i].sign
            out.append(f"{p}{self.letters[i].index}" + ("" if e == 1 else f"^{e}"))
            i = j
        return " ".join(out)


def empty(alphabet: Alphabet) -> Word:
    return Word(alphabet, ())


def concat(u: Word, v: Word) -> Word:
    u._check(v)
    a, b = u.letters, v.letters
    i = 0
    while i < min(len(a), len(b)) and a[-1 - i].index == b[i].index and a[-1 - i].sign == -b[i].sign:
        i += 1
    return Word(u.alphabet, a[: len(a) - i] + b[i:])


def concat_all(alphabet: Alphabet, words: Iterable[Word]) -> Word:
    letters: list[Letter] = []
    for w in words:
        if w.alphabet != alphabet:
            raise WordError(f"alphabet mismatch: {alphabet} vs {w.alphabet}")
        letters.extend(w.letters)
    return Word(alphabet, _free_reduce(letters))


def invert(u: Word) -> Word:
    return Word(u.alphabet, tuple(x.inverse() for x in reversed(u.letters)))


def conjugate(x: Word, u: Word) -> Word:
    """x u x^-1, freely reduced."""
    return concat(concat(x, u), invert(x))


def power(u: Word, k: int) -> Word:
    if k < 0:
        return power(invert(u), -k)
    # a freely reduced u can still cancel between copies (u = a v a^-1); reduce the whole thing once
    return Word(u.alphabet, _free_reduce(u.letters * k))


def letter_exponent_sums(u: Word) -> dict[int, int]:
    sums = dict.fromkeys(u.alphabet.indices, 0)
    for x in u.letters:
        sums[x.index] += x.sign
    return sums


def exponent_counter(u: Word) -> Counter:
    return Counter({k: v for k, v in letter_exponent_sums(u).items() if v})


# --- parsing ---------------------------------------------------------------------------

_TOKEN = re.compile(r"^(?P<gen>[rstRST])(?P<idx>\d+)|^(?P<rho>rho)|^@(?P<named>[A-Za-z0-9_]+)")
_EXP = re.compile(r"^\^(?P<exp>[+-]?\d+)$")

NamedResolver = Callable[[str, Alphabet], Word]


def parse_word(text: str, alphabet: Alphabet, named: NamedResolver | None = None) -> Word:
    """
    Parse the whitespace-separated grammar `r1 r2^-1 t0^3 rho^-2 @DeltaB R4`.

    Uppercase letters invert (`R4` is `r4^-1`). `rho` (type B only) expands to r_1 ... r_n.
    `@name` tokens are looked up through `named`; without a resolver they are rejected.
    """
    pieces: list[Word] = []
    for token in text.split():
        m = _TOKEN.match(token)
        if m is None:
            raise WordError(f"cannot parse token {token!r}")
        rest = token[m.end():]
        exp = 1
        if rest:
            e = _EXP.match(rest)
            if e is None:
                raise WordError(f"bad exponent in token {token!r}")
            exp = int(e.group("exp"))

        if m.group("gen"):
            g = m.group("gen")
            if g.lower() != alphabet.prefix:
                raise WordError(f"generator {g}{m.group('idx')} does not belong to {alphabet}")
            index = int(m.group("idx"))
            if index not in alphabet:
                raise WordError(f"index {index} out of range for {alphabet}")
            if g.isupper():
                exp = -exp
            piece = Word.gen(alphabet, index)
        elif m.group("rho"):
            if alphabet.family is not Family.TypeB:
                raise WordError("`rho` is only available in type B words")
            piece = Word.make(alphabet, [(i, 1) for i in alphabet.indices])
        else:
            if named is None:
                raise WordError(f"named element {token!r} needs a resolver")
            piece = named(m.group("named"), alphabet)
        pieces.append(power(piece, exp))
    return concat_all(alphabet, pieces)
