"""
Abelian invariants of A[B_n], the central quotient Ā[B_n] = A[B_n]/⟨Δ_B⟩, and
recovery of the type and parameters of an endomorphism from its generator images.

The classifier works at the level of invariants: it never produces the conjugating
element, it only reads off which family (and which parameters) the images belong to.
Parameters of a conjugacy class are unique, so this is enough to name the class.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Optional

from .bn import Named, b_gen, bn_nf, expand, iota_tilde_A
from .endo import (
    MIN_CLASSIFIED_RANK,
    BarEndoSpec,
    EndoSpec,
    bar_verify_homomorphism,
    verify_homomorphism,
)
from .garside import BraidNF
from .words import Alphabet, Family, Word, WordError, concat_all, letter_exponent_sums


def _type_b(u: Word) -> Word:
    if u.alphabet.family is Family.TypeAffineA:
        return iota_tilde_A(u)
    if u.alphabet.family is not Family.TypeB:
        raise WordError(f"expected a type B word, got {u.alphabet}")
    return u


# --- abelian invariants ----------------------------------------------------------------

def eta(u: Word) -> tuple[int, int]:
    """η: r_i ↦ (1, 0) for i < n, r_n ↦ (-(n-1), 1); so t_i ↦ (1, 0), ρ_B ↦ (0, 1)."""
    u = _type_b(u)
    n = u.alphabet.rank
    sums = letter_exponent_sums(u)
    last = sums[n]
    return sum(sums[i] for i in range(1, n)) - (n - 1) * last, last


def xi(u: Word) -> int:
    """ξ: t_i ↦ 1, ρ_B ↦ 1, i.e. r_i ↦ 1 for i < n and r_n ↦ 2 - n."""
    u = _type_b(u)
    n = u.alphabet.rank
    sums = letter_exponent_sums(u)
    return sum(sums[i] for i in range(1, n)) + (2 - n) * sums[n]


def z_hom(u: Word) -> int:
    """z: every r_i ↦ 1."""
    return sum(x.sign for x in _type_b(u).letters)


def eta_bar(u: Word) -> tuple[int, int]:
    a, b = eta(u)
    return a, b % _type_b(u).alphabet.rank


# --- the central quotient --------------------------------------------------------------

def bar_key(nf: BraidNF) -> tuple:
    """Class of a B_n element modulo ⟨Δ_B⟩ = ⟨Δ²⟩: only the parity of inf survives."""
    return nf.inf % 2, nf.factors


@dataclass(frozen=True, eq=False)
class BarWord:
    """An element of Ā[B_n]; == is equality in the quotient."""

    rep: Word

    def __post_init__(self):
        object.__setattr__(self, "rep", _type_b(self.rep))

    @property
    def n(self) -> int:
        return self.rep.alphabet.rank

    def key(self) -> tuple:
        return bar_key(bn_nf(self.rep))

    def __eq__(self, other):
        if not isinstance(other, BarWord):
            return NotImplemented
        return bar_equal(self, other)

    def __hash__(self):
        return hash((self.n, self.key()))

    def __mul__(self, other: BarWord) -> BarWord:
        return BarWord(self.rep * other.rep)

    def inverse(self) -> BarWord:
        return BarWord(self.rep.inverse())

    def __pow__(self, k: int) -> BarWord:
        return BarWord(self.rep ** k)

    def __str__(self):
        return str(self.rep)


def bar_equal(u: BarWord | Word, v: BarWord | Word) -> bool:
    u = u.rep if isinstance(u, BarWord) else _type_b(u)
    v = v.rep if isinstance(v, BarWord) else _type_b(v)
    if u.alphabet != v.alphabet:
        raise WordError(f"alphabet mismatch: {u.alphabet} vs {v.alphabet}")
    return bar_key(bn_nf(u)) == bar_key(bn_nf(v))


def rho_bar(n: int) -> BarWord:
    return BarWord(expand(Named.RhoB, n))


def t_bar(n: int, i: int) -> BarWord:
    i %= n
    return BarWord(expand(Named.T0, n) if i == 0 else b_gen(n, i))


def centralizer_generators(n: int, kappa: int) -> list[BarWord]:
    """Generators of the centraliser of ρ̄_B^κ in Ā[B_n]: ρ̄_B, plus t̄_d t̄_2d ⋯ t̄_0 when d = gcd(n, κ) > 1."""
    if n < 3:
        raise ValueError("need n >= 3")
    if not 0 <= kappa < n:
        raise ValueError(f"kappa must lie in 0..{n - 1}")
    d = math.gcd(n, kappa)
    gens = [rho_bar(n)]
    if d != 1:
        alpha = Alphabet(Family.TypeB, n)
        gens.append(BarWord(concat_all(alpha, (t_bar(n, j * d).rep for j in range(1, n // d + 1)))))
    return gens


# --- classification --------------------------------------------------------------------

@dataclass(frozen=True)
class ClassificationResult:
    verdict: str
    params: dict = field(default_factory=dict)
    note: Optional[str] = None

    def to_json(self) -> dict:
        out = {"verdict": self.verdict, **self.params}
        if self.note:
            out["note"] = self.note
        return out

    def __str__(self):
        if not self.params:
            return self.verdict
        return self.verdict + "{" + ", ".join(f"{k}={v}" for k, v in self.params.items()) + "}"


@dataclass(frozen=True)
class InvariantProfile:
    eta_t: Optional[tuple[int, int]]  # None when the t_i disagree
    eta_rho: tuple[int, int]
    abelian_image: bool


_INCONSISTENT_NOTE = (
    "verified homomorphism matched no family; this contradicts the classification and "
    "should be reported"
)


def _pairwise_commute(nfs, equal) -> bool:
    return all(equal(a * b, b * a) for i, a in enumerate(nfs) for b in nfs[i + 1:])


def invariant_profile(spec: EndoSpec) -> InvariantProfile:
    images = [e.word() for e in spec.r_images()]
    n = spec.n
    ts = {eta(w) for w in images[: n - 1]}
    rho = [sum(c) for c in zip(*(eta(w) for w in images))]
    return InvariantProfile(
        ts.pop() if len(ts) == 1 else None,
        (rho[0], rho[1]),
        _pairwise_commute(spec.image_nfs(), lambda a, b: a == b),
    )


def _solve(n: int, eta_t: tuple[int, int], eta_rho: tuple[int, int]) -> Optional[ClassificationResult]:
    a, b = eta_t
    c, d = eta_rho
    # (2a)/(2b): t ↦ (ε, pn), ρ ↦ (0, qn ± 1)
    if a in (1, -1) and c == 0 and b % n == 0:
        for sign, name in ((1, "Type2a"), (-1, "Type2b")):
            if (d - sign) % n == 0:
                return ClassificationResult(name, {"eps": a, "p": b // n, "q": (d - sign) // n})
    # (3): t ↦ (ε + pn(n-1), qn), ρ ↦ (±(n-1) + rn(n-1), sn)
    m = n * (n - 1)
    if b % n == 0 and d % n == 0:
        for eps in (1, -1):
            if (a - eps) % m:
                continue
            for k, base in ((0, n - 1), (1, -(n - 1))):
                if (c - base) % m == 0:
                    return ClassificationResult(
                        "Type3",
                        {"eps": eps, "k": k, "p": (a - eps) // m, "q": b // n, "r": (c - base) // m, "s": d // n},
                    )
    return None


def classify_raw(spec: EndoSpec) -> ClassificationResult:
    """
    Type and parameters of an endomorphism given by its images, up to conjugation.
    Accepts any EndoSpec; only the generator images are used.
    """
    n = spec.n
    if n < MIN_CLASSIFIED_RANK:
        raise ValueError(f"classification needs n >= {MIN_CLASSIFIED_RANK}, got {n}")
    if not verify_homomorphism(spec):
        return ClassificationResult("NotAHomomorphism")
    prof = invariant_profile(spec)
    if prof.abelian_image:
        return ClassificationResult("Type1-compatible")
    if prof.eta_t is None:
        return ClassificationResult("Inconclusive", note=_INCONSISTENT_NOTE)
    found = _solve(n, prof.eta_t, prof.eta_rho)
    return found or ClassificationResult("Inconclusive", note=_INCONSISTENT_NOTE)


def _bar_eq_nf(a: BraidNF, b: BraidNF) -> bool:
    return bar_key(a) == bar_key(b)


def classify_bar(bar: BarEndoSpec) -> ClassificationResult:
    """Case (1) with κ, or case (2a)/(2b) with ε, for an endomorphism of Ā[B_n]."""
    n = bar.n
    if n < MIN_CLASSIFIED_RANK:
        raise ValueError(f"classification needs n >= {MIN_CLASSIFIED_RANK}, got {n}")
    if not bar_verify_homomorphism(bar):
        return ClassificationResult("NotAHomomorphism")
    images = [e.word() for e in bar.r_images()]
    rho = [sum(c) for c in zip(*(eta(w) for w in images))]
    rho_bar_val = (rho[0], rho[1] % n)
    if _pairwise_commute(bar.image_nfs(), _bar_eq_nf):
        return ClassificationResult("BarType1", {"kappa": rho_bar_val[1]})
    ts = {eta_bar(w) for w in images[: n - 1]}
    if len(ts) == 1:
        (a, b), = ts
        if a in (1, -1) and b == 0 and rho_bar_val[0] == 0:
            if rho_bar_val[1] == 1:
                return ClassificationResult("BarType2a", {"eps": a})
            if rho_bar_val[1] == n - 1:
                return ClassificationResult("BarType2b", {"eps": a})
    return ClassificationResult("Inconclusive", note=_INCONSISTENT_NOTE)


def expected_verdict(spec: EndoSpec) -> ClassificationResult:
    """What classify_raw should return for a t-form classified spec (used for round-trips)."""
    from .endo import Type1, Type2a, Type2b, Type3

    if isinstance(spec, Type1):
        return ClassificationResult("Type1-compatible")
    if isinstance(spec, (Type2a, Type2b)):
        return ClassificationResult(type(spec).__name__, {"eps": spec.eps, "p": spec.p, "q": spec.q})
    if isinstance(spec, Type3):
        return ClassificationResult(
            "Type3", {"eps": spec.eps, "k": spec.k, "p": spec.p, "q": spec.q, "r": spec.r, "s": spec.s}
        )
    raise ValueError(f"no canonical verdict for {type(spec).__name__}")
