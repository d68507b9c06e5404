"""
The chain A[Ã_{n-1}] ↪ A[B_n] ↪ A[A_n] and the named elements that live on it.

Equality in A[B_n] and A[Ã_{n-1}] is decided by pushing words into the braid group
A[A_n] (r_i ↦ s_i for i < n, r_n ↦ s_n², and t_i ↦ r_i, t_0 ↦ ρ_B r_{n-1} ρ_B^-1) and
comparing Garside normal forms there. Both maps are embeddings, so this is exact.
"""

from __future__ import annotations

import enum
import functools
from dataclasses import dataclass
from typing import Optional

from .garside import BraidNF, delta_word, garside_word, nf_of_signed, underlying_permutation
from .words import (
    Alphabet,
    Family,
    Letter,
    Word,
    WordError,
    concat_all,
    conjugate,
    empty,
    invert,
    parse_word,
    power,
)


class Named(enum.Enum):
    RhoB = "rhoB"
    Delta = "Delta"
    DeltaB = "DeltaB"
    DeltaY = "DeltaY"
    Rho0 = "rho0"
    Rho1 = "rho1"
    V0 = "v0"
    V1 = "v1"
    U0 = "u0"
    U1 = "u1"
    SmallDelta = "delta"
    SmallDeltaPrime = "deltaPrime"
    T0 = "t0"


_HOME = {
    Named.RhoB: Family.TypeB,
    Named.DeltaB: Family.TypeB,
    Named.SmallDelta: Family.TypeB,
    Named.SmallDeltaPrime: Family.TypeB,
    Named.T0: Family.TypeB,
    Named.Delta: Family.TypeA,
    Named.DeltaY: Family.TypeAffineA,
    Named.Rho0: Family.TypeAffineA,
    Named.Rho1: Family.TypeAffineA,
    Named.V0: Family.TypeAffineA,
    Named.V1: Family.TypeAffineA,
    Named.U0: Family.TypeAffineA,
    Named.U1: Family.TypeAffineA,
}


def home_family(tag: Named) -> Family:
    return _HOME[tag]


@functools.cache
def expand(tag: Named, n: int) -> Word:
    """The defining word of a named element, in its home alphabet at rank n."""
    small_ok = (Named.RhoB, Named.Delta, Named.DeltaB)
    if n < (2 if tag in small_ok else 3):
        raise WordError(f"rank {n} is too small for {tag.value}")
    fam = _HOME[tag]
    alpha = Alphabet(fam, n)

    def gens(pairs):
        return Word.make(alpha, pairs)

    if tag is Named.RhoB:
        return gens([(i, 1) for i in range(1, n + 1)])
    if tag is Named.Delta:
        return delta_word(n)
    if tag is Named.DeltaB:
        return power(expand(Named.RhoB, n), n)
    if tag is Named.SmallDelta:
        down = [(i, 1) for i in range(n - 1, 1, -1)]
        return gens(down + [(1, 1), (1, 1)] + down[::-1])
    if tag is Named.SmallDeltaPrime:
        down = [(i, 1) for i in range(n - 2, 1, -1)]
        return gens(down + [(1, 1), (1, 1)] + down[::-1])
    if tag is Named.T0:
        rho = expand(Named.RhoB, n)
        return conjugate(rho, Word.gen(alpha, n - 1))
    if tag is Named.DeltaY:
        return garside_word(alpha, range(1, n))
    if tag is Named.Rho0:
        return gens([(i, 1) for i in range(1, n)])
    if tag is Named.Rho1:
        return gens([(i, -1) for i in range(1, n)])
    if tag is Named.V0:
        return conjugate(expand(Named.Rho0, n), Word.gen(alpha, n - 1))
    if tag is Named.V1:
        return conjugate(expand(Named.Rho1, n), Word.gen(alpha, n - 1))
    if tag is Named.U0:
        return Word.gen(alpha, 0)
    if tag is Named.U1:
        dy = expand(Named.DeltaY, n)
        return conjugate(invert(dy), Word.gen(alpha, 0))
    raise AssertionError(tag)


def iota_B(u: Word) -> Word:
    """A[B_n] → A[A_n]: r_i ↦ s_i (i < n), r_n ↦ s_n²."""
    if u.alphabet.family is not Family.TypeB:
        raise WordError(f"iota_B expects a type B word, got {u.alphabet}")
    n = u.alphabet.rank
    letters = []
    for x in u.letters:
        letters.append(x)
        if x.index == n:
            letters.append(x)
    return Word.make(Alphabet(Family.TypeA, n), letters)


def iota_tilde_A(u: Word) -> Word:
    """A[Ã_{n-1}] → A[B_n]: t_i ↦ r_i (1 ≤ i ≤ n-1), t_0 ↦ ρ_B r_{n-1} ρ_B^-1."""
    if u.alphabet.family is not Family.TypeAffineA:
        raise WordError(f"iota_tilde_A expects an affine type A word, got {u.alphabet}")
    n = u.alphabet.rank
    beta = Alphabet(Family.TypeB, n)
    t0 = expand(Named.T0, n)
    pieces = []
    for x in u.letters:
        if x.index == 0:
            pieces.append(t0 if x.sign > 0 else invert(t0))
        else:
            pieces.append(Word(beta, (Letter(x.index, x.sign),)))
    return concat_all(beta, pieces)


def to_type_b(u: Word) -> Word:
    if u.alphabet.family is Family.TypeB:
        return u
    if u.alphabet.family is Family.TypeAffineA:
        return iota_tilde_A(u)
    raise WordError(f"{u.alphabet} does not embed in A[B_n]")


def named_element(name: str, alphabet: Alphabet) -> Word:
    """Resolve `@name` in a word of the given alphabet, pushing along the inclusion chain."""
    try:
        tag = Named(name)
    except ValueError:
        raise WordError(f"unknown named element @{name}") from None
    n = alphabet.rank
    w = expand(tag, n)
    home = _HOME[tag]
    target = alphabet.family
    if home is target:
        return w
    if home is Family.TypeAffineA and target is Family.TypeB:
        return iota_tilde_A(w)
    if home is Family.TypeAffineA and target is Family.TypeA:
        return iota_B(iota_tilde_A(w))
    if home is Family.TypeB and target is Family.TypeA:
        return iota_B(w)
    raise WordError(f"@{name} is not an element of {alphabet}")


def parse(text: str, alphabet: Alphabet) -> Word:
    """Word grammar including `@named` elements."""
    return parse_word(text, alphabet, named_element)


# --- equality --------------------------------------------------------------------------

def _b_signed(u: Word) -> list[int]:
    n = u.alphabet.rank
    out = []
    for x in u.letters:
        s = x.index * x.sign
        out.append(s)
        if x.index == n:
            out.append(s)
    return out


@functools.lru_cache(maxsize=1 << 16)
def bn_nf(u: Word) -> BraidNF:
    """Garside normal form of ι_B(u) for a type B word (or ι_B ∘ ι_Ã for an affine word)."""
    u = to_type_b(u)
    return nf_of_signed(u.alphabet.rank, _b_signed(u))


def _same_rank(u: Word, v: Word):
    if u.alphabet != v.alphabet:
        raise WordError(f"alphabet mismatch: {u.alphabet} vs {v.alphabet}")


def bn_equal(u: Word, v: Word) -> bool:
    _same_rank(u, v)
    if u.alphabet.family is not Family.TypeB:
        raise WordError(f"bn_equal expects type B words, got {u.alphabet}")
    return bn_nf(u) == bn_nf(v)


def affine_equal(u: Word, v: Word) -> bool:
    _same_rank(u, v)
    if u.alphabet.family is not Family.TypeAffineA:
        raise WordError(f"affine_equal expects affine type A words, got {u.alphabet}")
    return bn_nf(u) == bn_nf(v)


def in_Bn(u: Word) -> bool:
    """A braid on n+1 strands lies in A[B_n] iff its permutation fixes the last point."""
    perm = underlying_permutation(u)
    return perm[-1] == len(perm) - 1


def central_power_of_nf(nf: BraidNF) -> Optional[int]:
    """k with nf = Δ_B^k = Δ^{2k}, or None."""
    if nf.factors or nf.inf % 2:
        return None
    return nf.inf // 2


def bn_central_power(u: Word) -> Optional[int]:
    if u.alphabet.family is not Family.TypeB:
        raise WordError(f"expected a type B word, got {u.alphabet}")
    return central_power_of_nf(bn_nf(u))


# --- semidirect decomposition ----------------------------------------------------------

@dataclass(frozen=True)
class SemidirectForm:
    """affine_part · ρ_B^shift."""

    affine_part: Word
    shift: int

    def reassemble(self) -> Word:
        n = self.affine_part.alphabet.rank
        return iota_tilde_A(self.affine_part) * power(expand(Named.RhoB, n), self.shift)


def semidirect_decompose(u: Word) -> SemidirectForm:
    """
    Write u = ι_Ã(w) · ρ_B^k. Each r_n is replaced by t_{n-1}^-1 ⋯ t_1^-1 ρ_B, and ρ_B is
    pushed to the right with ρ_B t_i ρ_B^-1 = t_{i+1} (indices mod n).
    """
    if u.alphabet.family is not Family.TypeB:
        raise WordError(f"expected a type B word, got {u.alphabet}")
    n = u.alphabet.rank
    aff = Alphabet(Family.TypeAffineA, n)
    out: list[tuple[int, int]] = []
    k = 0
    for x in u.letters:
        if x.index < n:
            out.append(((x.index + k) % n, x.sign))
        elif x.sign > 0:
            out.extend(((i + k) % n, -1) for i in range(n - 1, 0, -1))
            k += 1
        else:
            k -= 1
            out.extend(((i + k) % n, 1) for i in range(1, n))
    return SemidirectForm(Word.make(aff, out), k)


def rho_power(n: int, k: int) -> Word:
    return power(expand(Named.RhoB, n), k)


def b_gen(n: int, i: int, e: int = 1) -> Word:
    return Word.gen(Alphabet(Family.TypeB, n), i, e)


def b_empty(n: int) -> Word:
    return empty(Alphabet(Family.TypeB, n))
