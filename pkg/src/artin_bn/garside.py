"""
Left-weighted (Garside) normal form for the braid group A[A_m] on m+1 strands.

A braid is stored as Δ^inf · x_1 ⋯ x_k where every x_i is a proper simple element
(a permutation braid other than 1 and Δ) and each pair (x_i, x_{i+1}) is left-weighted:
the finishing set of x_i contains the starting set of x_{i+1}.

Simple elements are permutations of {0, ..., m}, stored as tuples of images. The braid
s_i (1-based, as in the Coxeter graph) maps to the transposition of positions i-1 and i,
and a product of braids maps to the composition (x·y)[k] = x[y[k]]. Under this convention
the finishing (right descent) set of x is {i : x[i] > x[i+1]} and the starting set is the
right descent set of the inverse.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from .words import Alphabet, Family, Word, WordError, concat_all, power

Perm = tuple[int, ...]


# --- permutation kernels ---------------------------------------------------------------

@functools.cache
def identity_perm(size: int) -> Perm:
    return tuple(range(size))


@functools.cache
def longest_perm(size: int) -> Perm:
    return tuple(range(size - 1, -1, -1))


def compose(x: Perm, y: Perm) -> Perm:
    return tuple(x[k] for k in y)


def perm_inverse(x: Perm) -> Perm:
    inv = [0] * len(x)
    for k, v in enumerate(x):
        inv[v] = k
    return tuple(inv)


def right_descents(x: Perm) -> int:
    """Finishing set of a simple braid, as a bitmask over 0-based generator positions."""
    mask = 0
    for i in range(len(x) - 1):
        if x[i] > x[i + 1]:
            mask |= 1 << i
    return mask


def left_descents(x: Perm) -> int:
    """Starting set of a simple braid, as a bitmask."""
    return right_descents(perm_inverse(x))


def tau(x: Perm) -> Perm:
    """Conjugation by Δ: w0 x w0."""
    top = len(x) - 1
    return tuple(top - x[top - k] for k in range(len(x)))


def _swap_positions(x: Perm, i: int) -> Perm:
    lst = list(x)
    lst[i], lst[i + 1] = lst[i + 1], lst[i]
    return tuple(lst)


def _swap_values(x: Perm, i: int) -> Perm:
    return tuple(i + 1 if v == i else i if v == i + 1 else v for v in x)


def reduced_word(x: Perm) -> list[int]:
    """A positive word (1-based generator indices) for the simple element x."""
    letters = []
    cur = list(x)
    while True:
        for i in range(len(cur) - 1):
            if cur[i] > cur[i + 1]:
                cur[i], cur[i + 1] = cur[i + 1], cur[i]
                letters.append(i + 1)
                break
        else:
            break
    letters.reverse()
    return letters


_LW_CACHE: dict[tuple[Perm, Perm], tuple[Perm, Perm]] = {}
_LW_CACHE_LIMIT = 1 << 21


def left_weight(x: Perm, y: Perm) -> tuple[Perm, Perm]:
    """
    Left-weighted form (x', y') of the product of two simples: move generators from the
    front of y onto the end of x for as long as x stays simple.
    """
    key = (x, y)
    hit = _LW_CACHE.get(key)
    if hit is not None:
        return hit
    # s_i moves across iff i starts y but does not finish x. Both x·s_i and the inverse of
    # s_i·y are position swaps, so work on x and y^-1 directly.
    xs, yi = list(x), list(perm_inverse(y))
    moved = True
    while moved:
        moved = False
        for i in range(len(xs) - 1):
            if yi[i] > yi[i + 1] and xs[i] < xs[i + 1]:
                xs[i], xs[i + 1] = xs[i + 1], xs[i]
                yi[i], yi[i + 1] = yi[i + 1], yi[i]
                moved = True
    x, y = tuple(xs), perm_inverse(yi)
    if len(_LW_CACHE) > _LW_CACHE_LIMIT:
        _LW_CACHE.clear()
    _LW_CACHE[key] = (x, y)
    return x, y


def _push(factors: list[Perm], a: Perm, delta: Perm, ident: Perm) -> int:
    """
    Right-multiply a left-weighted factor list by the simple `a` in place.
    Returns the number of Δ factors split off the front.
    """
    if a == ident:
        return 0
    factors.append(a)
    j = len(factors) - 1
    while j > 0:
        x, y = factors[j - 1], factors[j]
        x2, y2 = left_weight(x, y)
        if x2 == x:
            break
        factors[j - 1], factors[j] = x2, y2
        j -= 1
    while factors and factors[-1] == ident:
        factors.pop()
    d = 0
    while d < len(factors) and factors[d] == delta:
        d += 1
    if d:
        del factors[:d]
    return d


# --- normal forms ----------------------------------------------------------------------

@dataclass(frozen=True)
class BraidNF:
    """Δ^inf · factors, in left normal form. `rank` is m, so factors permute m+1 points."""

    rank: int
    inf: int = 0
    factors: tuple[Perm, ...] = ()

    @property
    def size(self) -> int:
        return self.rank + 1

    @property
    def canonical_length(self) -> int:
        return len(self.factors)

    @property
    def sup(self) -> int:
        return self.inf + len(self.factors)

    @classmethod
    def identity(cls, rank: int) -> BraidNF:
        return cls(rank, 0, ())

    @classmethod
    def delta(cls, rank: int, k: int = 1) -> BraidNF:
        return cls(rank, k, ())

    @classmethod
    def from_simples(cls, rank: int, inf: int, simples: Iterable[Perm]) -> BraidNF:
        """Normalise Δ^inf · a_1 ⋯ a_j for arbitrary simples a_i."""
        size = rank + 1
        delta, ident = longest_perm(size), identity_perm(size)
        factors: list[Perm] = []
        for a in simples:
            inf += _push(factors, a, delta, ident)
        return cls(rank, inf, tuple(factors))

    def __mul__(self, other: BraidNF) -> BraidNF:
        if self.rank != other.rank:
            raise WordError(f"rank mismatch: {self.rank} vs {other.rank}")
        if not other.factors:
            if other.inf % 2 == 0:
                return BraidNF(self.rank, self.inf + other.inf, self.factors)
            return BraidNF(self.rank, self.inf + other.inf, tuple(tau(x) for x in self.factors))
        if not self.factors:
            return BraidNF(self.rank, self.inf + other.inf, other.factors)
        left = [tau(x) for x in self.factors] if other.inf % 2 else list(self.factors)
        inf = self.inf + other.inf
        delta, ident = longest_perm(self.size), identity_perm(self.size)
        for a in other.factors:
            inf += _push(left, a, delta, ident)
        return BraidNF(self.rank, inf, tuple(left))

    def inverse(self) -> BraidNF:
        # (Δ^a x_1 ⋯ x_l)^-1 = Δ^{-l-a} · τ^{l-1+a}(∂x_l) ⋯ τ^{a}(∂x_1), with ∂x = w0 x^-1
        w0 = longest_perm(self.size)
        l = len(self.factors)
        simples = []
        for pos, x in enumerate(reversed(self.factors)):
            c = compose(w0, perm_inverse(x))
            if (l - 1 - pos + self.inf) % 2:
                c = tau(c)
            simples.append(c)
        return BraidNF.from_simples(self.rank, -l - self.inf, simples)

    def __pow__(self, k: int) -> BraidNF:
        if not self.factors:
            return BraidNF(self.rank, self.inf * k, ())
        base = self if k >= 0 else self.inverse()
        result = BraidNF.identity(self.rank)
        k = abs(k)
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def delta_exponent(self) -> Optional[int]:
        return None if self.factors else self.inf

    def is_left_weighted(self) -> bool:
        w0, e = longest_perm(self.size), identity_perm(self.size)
        if any(x in (w0, e) for x in self.factors):
            return False
        return all(
            left_descents(y) & ~right_descents(x) == 0
            for x, y in zip(self.factors, self.factors[1:])
        )

    def to_json(self) -> dict:
        return {
            "rank": self.rank,
            "inf": self.inf,
            "factors": [[v + 1 for v in x] for x in self.factors],
        }

    @classmethod
    def from_json(cls, data: dict) -> BraidNF:
        rank = int(data["rank"])
        factors = tuple(tuple(v - 1 for v in x) for x in data["factors"])
        for x in factors:
            if sorted(x) != list(range(rank + 1)):
                raise ValueError(f"not a permutation of 1..{rank + 1}: {[v + 1 for v in x]}")
        nf = cls.from_simples(rank, int(data["inf"]), factors)
        if nf.factors != factors or nf.inf != int(data["inf"]):
            raise ValueError("factor list is not in left normal form")
        return nf


def _require_type_a(u: Word) -> int:
    if u.alphabet.family is not Family.TypeA:
        raise WordError(f"expected a type A word, got {u.alphabet}")
    return u.alphabet.rank


def _simple_chunks(rank: int, signed: Sequence[int]) -> tuple[int, list[Perm]]:
    """
    Rewrite a signed word as Δ^{-d} · a_1 ⋯ a_j with positive simples a_i.

    Maximal runs of one sign are cut into simple pieces; a negative piece y^-1 becomes
    Δ^-1 · (Δ y^-1), and every Δ^-1 is then moved to the far left, which applies τ to the
    simples it passes.
    """
    size = rank + 1
    ident, w0 = identity_perm(size), longest_perm(size)
    pieces: list[Perm | None] = []  # None marks a Δ^-1
    cur, cur_sign = ident, 0

    def close():
        if cur_sign > 0:
            pieces.append(cur)
        elif cur_sign < 0:
            pieces.append(None)
            pieces.append(compose(w0, perm_inverse(cur)))

    for x in signed:
        i = abs(x) - 1
        sign = 1 if x > 0 else -1
        if sign != cur_sign:
            close()
            cur, cur_sign = ident, sign
        if sign > 0:
            # cur · s_i stays simple iff i is not a right descent of cur
            if cur[i] > cur[i + 1]:
                close()
                cur = ident
            cur = _swap_positions(cur, i)
        else:
            # a negative run s_a^-1 s_b^-1 ⋯ is y^-1 with y = ⋯ s_b s_a built by left multiplication
            if left_descents(cur) >> i & 1:
                close()
                cur = ident
            cur = _swap_values(cur, i)
    close()

    total = pieces.count(None)
    seen = 0
    simples = []
    for piece in pieces:
        if piece is None:
            seen += 1
        elif (total - seen) % 2:
            simples.append(tau(piece))
        else:
            simples.append(piece)
    return total, simples


def normal_form(u: Word) -> BraidNF:
    rank = _require_type_a(u)
    d, simples = _simple_chunks(rank, u.signed())
    return BraidNF.from_simples(rank, -d, simples)


def nf_of_signed(rank: int, signed: Sequence[int]) -> BraidNF:
    d, simples = _simple_chunks(rank, signed)
    return BraidNF.from_simples(rank, -d, simples)


@functools.cache
def delta_word(rank: int) -> Word:
    """Δ = (s_1 s_2 ⋯ s_m)(s_1 ⋯ s_{m-1}) ⋯ (s_1 s_2) s_1."""
    return garside_word(Alphabet(Family.TypeA, rank), range(1, rank + 1))


def garside_word(alphabet: Alphabet, indices: Sequence[int]) -> Word:
    """Garside word of the parabolic subgroup on a consecutive run of generator indices."""
    idx = list(indices)
    letters = []
    for top in range(len(idx), 0, -1):
        letters.extend((i, 1) for i in idx[:top])
    return Word.make(alphabet, letters)


def nf_to_word(nf: BraidNF) -> Word:
    alphabet = Alphabet(Family.TypeA, nf.rank)
    parts = [power(delta_word(nf.rank), nf.inf)]
    parts.extend(Word.make(alphabet, [(i, 1) for i in reduced_word(x)]) for x in nf.factors)
    return concat_all(alphabet, parts)


def braid_equal(u: Word, v: Word) -> bool:
    if u.alphabet != v.alphabet:
        raise WordError(f"alphabet mismatch: {u.alphabet} vs {v.alphabet}")
    return normal_form(u) == normal_form(v)


def underlying_permutation(u: Word) -> Perm:
    """Image in Sym(m+1), 0-based: s_i acts as the transposition of points i-1 and i."""
    rank = _require_type_a(u)
    perm = list(range(rank + 1))
    for x in u.letters:
        i = x.index - 1
        perm[i], perm[i + 1] = perm[i + 1], perm[i]
    return tuple(perm)


def delta_power(u: Word) -> Optional[int]:
    return normal_form(u).delta_exponent()


def perm_one_line(x: Perm) -> list[int]:
    return [v + 1 for v in x]


def perm_cycles(x: Perm) -> list[tuple[int, ...]]:
    """Non-trivial cycles of x, 1-based."""
    seen, out = set(), []
    for start in range(len(x)):
        if start in seen or x[start] == start:
            continue
        cyc, k = [], start
        while k not in seen:
            seen.add(k)
            cyc.append(k + 1)
            k = x[k]
        out.append(tuple(cyc))
    return out
