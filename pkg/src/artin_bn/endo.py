"""
Endomorphisms of A[B_n]: the classified families, the named automorphisms T, τ, μ,
inner automorphisms, composites, and raw generator images.

Classified specs keep their integer parameters and build images lazily as products of
powers of short words (t_i, Δ_Y, Δ_B, δ, ...). Normal forms are computed from those
pieces, so a factor like Δ_B^q costs nothing extra.
"""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence

from . import bn
from .bn import Named, b_empty, b_gen, bn_nf, central_power_of_nf, expand, iota_tilde_A
from .garside import BraidNF
from .words import Alphabet, Family, Word, WordError, concat_all, power

MIN_CLASSIFIED_RANK = 5


class Unsupported(Exception):
    """The question is not decidable by this library for the given spec (e.g. Raw images)."""


class LiftError(ValueError):
    """A Δ_B-discrepancy was not central: the input was not an endomorphism of the quotient."""


# --- products of word powers -----------------------------------------------------------

@dataclass(frozen=True)
class Elem:
    """An element of A[B_n] written as w_1^{e_1} ⋯ w_k^{e_k}."""

    n: int
    parts: tuple[tuple[Word, int], ...] = ()

    @classmethod
    def of(cls, n: int, *parts: tuple[Word, int]) -> Elem:
        return cls(n, tuple((w, e) for w, e in parts if e and w))

    def __mul__(self, other: Elem) -> Elem:
        return Elem(self.n, self.parts + other.parts)

    def inverse(self) -> Elem:
        return Elem(self.n, tuple((w, -e) for w, e in reversed(self.parts)))

    def word(self) -> Word:
        return concat_all(Alphabet(Family.TypeB, self.n), (power(w, e) for w, e in self.parts))

    def nf(self) -> BraidNF:
        out = BraidNF.identity(self.n)
        for w, e in self.parts:
            out = out * bn_nf(w) ** e
        return out


def _prod(n: int, elems: Iterable[Elem]) -> Elem:
    out = Elem(n)
    for e in elems:
        out = out * e
    return out


@functools.cache
def _t(n: int, i: int) -> Word:
    """t_i as a type B word (t_0 = ρ_B r_{n-1} ρ_B^-1)."""
    i %= n
    return expand(Named.T0, n) if i == 0 else b_gen(n, i)


@functools.cache
def _b(tag: Named, n: int) -> Word:
    w = expand(tag, n)
    return iota_tilde_A(w) if w.alphabet.family is Family.TypeAffineA else w


def _DB(n):
    return _b(Named.DeltaB, n)


def _DY(n):
    return _b(Named.DeltaY, n)


def _rho(n):
    return _b(Named.RhoB, n)


def _delta(n):
    return _b(Named.SmallDelta, n)


# --- specs -----------------------------------------------------------------------------

def _check_sign(eps: int):
    if eps not in (1, -1):
        raise ValueError(f"eps must be +1 or -1, got {eps}")


class EndoSpec:
    """Base class. Subclasses are frozen dataclasses with a rank field `n`."""

    n: int
    classified = True

    def _check_rank(self):
        if self.classified and self.n < MIN_CLASSIFIED_RANK:
            raise ValueError(f"classified endomorphisms need n >= {MIN_CLASSIFIED_RANK}, got {self.n}")

    # images in the standard generators r_1..r_n
    def r_image(self, i: int) -> Elem:
        raise NotImplementedError

    # images in t_0..t_{n-1}, ρ_B; by default obtained by substitution
    def t_image(self, i: int) -> Elem:
        i %= self.n
        if i:
            return self.r_image(i)
        rho = self.rho_image()
        return rho * self.r_image(self.n - 1) * rho.inverse()

    def rho_image(self) -> Elem:
        return _prod(self.n, (self.r_image(i) for i in range(1, self.n + 1)))

    def r_images(self) -> tuple[Elem, ...]:
        return tuple(self.r_image(i) for i in range(1, self.n + 1))

    def image_nfs(self) -> tuple[BraidNF, ...]:
        return _image_nfs(self)


@functools.lru_cache(maxsize=4096)
def _image_nfs(spec: EndoSpec) -> tuple[BraidNF, ...]:
    if isinstance(spec, Compose):
        return tuple(_apply_elem_nf(spec.outer, e) for e in spec.inner.r_images())
    return tuple(e.nf() for e in spec.r_images())


class _TForm(EndoSpec):
    """Specs given on t_0..t_{n-1}, ρ_B; r_n = r_{n-1}^-1 ⋯ r_1^-1 ρ_B."""

    def r_image(self, i: int) -> Elem:
        if i < self.n:
            return self.t_image(i)
        inv = (self.t_image(j).inverse() for j in range(self.n - 1, 0, -1))
        return _prod(self.n, inv) * self.rho_image()


@dataclass(frozen=True)
class Type1(_TForm):
    n: int
    g: Word
    h: Word

    def __post_init__(self):
        self._check_rank()
        if not bn.bn_equal(self.g * self.h, self.h * self.g):
            raise ValueError("Type1 needs commuting g and h")

    def t_image(self, i):
        return Elem.of(self.n, (self.g, 1))

    def rho_image(self):
        return Elem.of(self.n, (self.h, 1))


@dataclass(frozen=True)
class Type2a(_TForm):
    n: int
    eps: int = 1
    p: int = 0
    q: int = 0

    def __post_init__(self):
        self._check_rank()
        _check_sign(self.eps)

    def t_image(self, i):
        return Elem.of(self.n, (_t(self.n, i), self.eps), (_DB(self.n), self.p))

    def rho_image(self):
        return Elem.of(self.n, (_rho(self.n), 1), (_DB(self.n), self.q))


@dataclass(frozen=True)
class Type2b(_TForm):
    n: int
    eps: int = 1
    p: int = 0
    q: int = 0

    def __post_init__(self):
        self._check_rank()
        _check_sign(self.eps)

    def t_image(self, i):
        return Elem.of(self.n, (_t(self.n, self.n - i), self.eps), (_DB(self.n), self.p))

    def rho_image(self):
        return Elem.of(self.n, (_rho(self.n), -1), (_DB(self.n), self.q))


@dataclass(frozen=True)
class Type3(_TForm):
    n: int
    eps: int = 1
    k: int = 0
    p: int = 0
    q: int = 0
    r: int = 0
    s: int = 0

    def __post_init__(self):
        self._check_rank()
        _check_sign(self.eps)
        if self.k not in (0, 1):
            raise ValueError(f"k must be 0 or 1, got {self.k}")

    def t_image(self, i):
        n = self.n
        i %= n
        head = _b(Named.V0 if self.k == 0 else Named.V1, n) if i == 0 else _t(n, i)
        return Elem.of(n, (head, self.eps), (_DY(n), 2 * self.p), (_DB(n), self.q))

    def rho_image(self):
        n = self.n
        rho_k = _b(Named.Rho0 if self.k == 0 else Named.Rho1, n)
        return Elem.of(n, (rho_k, 1), (_DY(n), 2 * self.r), (_DB(n), self.s))


@dataclass(frozen=True)
class StdI(EndoSpec):
    n: int
    g: Word
    h: Word

    def __post_init__(self):
        self._check_rank()
        if not bn.bn_equal(self.g * self.h, self.h * self.g):
            raise ValueError("StdI needs commuting g and h")

    def r_image(self, i):
        return Elem.of(self.n, (self.g if i < self.n else self.h, 1))


@dataclass(frozen=True)
class StdIIa(EndoSpec):
    n: int
    eps: int = 1
    p: int = 0
    q: int = 0

    def __post_init__(self):
        self._check_rank()
        _check_sign(self.eps)

    def r_image(self, i):
        n = self.n
        if i < n:
            return Elem.of(n, (b_gen(n, i), self.eps), (_DB(n), self.p))
        return Elem.of(n, (b_gen(n, n), self.eps), (_DB(n), self.q))


@dataclass(frozen=True)
class StdIIb(EndoSpec):
    n: int
    eps: int = 1
    p: int = 0
    q: int = 0

    def __post_init__(self):
        self._check_rank()
        _check_sign(self.eps)

    def r_image(self, i):
        n = self.n
        if i < n:
            return Elem.of(n, (b_gen(n, i), self.eps), (_DB(n), self.p))
        return Elem.of(n, (_delta(n), -self.eps), (b_gen(n, n), -self.eps), (_DB(n), self.q))


@dataclass(frozen=True)
class StdIIIa(EndoSpec):
    n: int
    eps: int = 1
    p: int = 0
    q: int = 0
    r: int = 0
    s: int = 0

    def __post_init__(self):
        self._check_rank()
        _check_sign(self.eps)

    def r_image(self, i):
        n = self.n
        if i < n:
            return Elem.of(n, (b_gen(n, i), self.eps), (_DY(n), 2 * self.p), (_DB(n), self.q))
        return Elem.of(n, (_DY(n), 2 * self.r), (_DB(n), self.s))


@dataclass(frozen=True)
class StdIIIb(EndoSpec):
    n: int
    eps: int = 1
    p: int = 0
    q: int = 0
    r: int = 0
    s: int = 0

    def __post_init__(self):
        self._check_rank()
        _check_sign(self.eps)

    def r_image(self, i):
        n = self.n
        if i < n:
            return Elem.of(n, (b_gen(n, i), self.eps), (_DY(n), 2 * self.p), (_DB(n), self.q))
        return Elem.of(n, (_delta(n), -self.eps), (_DY(n), 2 * self.r), (_DB(n), self.s))


@dataclass(frozen=True)
class NamedAut(EndoSpec):
    """T^power, τ or μ. r-images follow the standard-generator formulas, t-images the (t, ρ_B) ones."""

    n: int
    which: str = "T"
    power: int = 1

    def __post_init__(self):
        self._check_rank()
        if self.which not in ("T", "Tau", "Mu"):
            raise ValueError(f"unknown named automorphism {self.which!r}")

    def r_image(self, i):
        n, DB = self.n, _DB(self.n)
        if self.which == "T":
            if i < n:
                return Elem.of(n, (b_gen(n, i), 1), (DB, self.power))
            return Elem.of(n, (b_gen(n, n), 1), (DB, -self.power * (n - 1)))
        if self.which == "Tau":
            if i < n:
                return Elem.of(n, (b_gen(n, n - i), -1))
            head = Word.make(Alphabet(Family.TypeB, n), [(j, 1) for j in range(1, n)])
            return Elem.of(n, (head, 1), (b_gen(n, n), -1), (head, -1))
        if i < n:
            return Elem.of(n, (b_gen(n, i), -1))
        return Elem.of(n, (_delta(n), 1), (b_gen(n, n), 1))

    def t_image(self, i):
        n = self.n
        if self.which == "T":
            return Elem.of(n, (_t(n, i), 1), (_DB(n), self.power))
        if self.which == "Tau":
            return Elem.of(n, (_t(n, n - i), -1))
        return Elem.of(n, (_t(n, i), -1))

    def rho_image(self):
        return Elem.of(self.n, (_rho(self.n), -1 if self.which == "Tau" else 1))


def T(n: int, m: int = 1) -> NamedAut:
    return NamedAut(n, "T", m)


def Tau(n: int) -> NamedAut:
    return NamedAut(n, "Tau")


def Mu(n: int) -> NamedAut:
    return NamedAut(n, "Mu")


@dataclass(frozen=True)
class Inner(EndoSpec):
    n: int
    x: Word

    def __post_init__(self):
        self._check_rank()

    def r_image(self, i):
        return Elem.of(self.n, (self.x, 1), (b_gen(self.n, i), 1), (self.x, -1))


@dataclass(frozen=True)
class Compose(EndoSpec):
    """outer ∘ inner."""

    outer: EndoSpec
    inner: EndoSpec
    n: int = field(init=False)

    def __post_init__(self):
        if self.outer.n != self.inner.n:
            raise ValueError("rank mismatch in composition")
        object.__setattr__(self, "n", self.inner.n)

    @property
    def classified(self):
        return self.outer.classified and self.inner.classified

    def r_image(self, i):
        e = self.inner.r_image(i)
        return Elem(self.n, tuple((apply(self.outer, w), k) for w, k in e.parts))


@dataclass(frozen=True)
class Raw(EndoSpec):
    """Explicit images of r_1..r_n; no guarantee until verify_homomorphism passes."""

    n: int
    images: tuple[Word, ...]
    classified = False

    def __post_init__(self):
        if len(self.images) != self.n:
            raise ValueError(f"Raw spec needs {self.n} images, got {len(self.images)}")
        for w in self.images:
            if w.alphabet != Alphabet(Family.TypeB, self.n):
                raise WordError(f"image {w} is not a B_{self.n} word")

    def r_image(self, i):
        return Elem.of(self.n, (self.images[i - 1], 1))


def identity(n: int) -> Type2a:
    return Type2a(n, 1, 0, 0)


def to_raw(spec: EndoSpec) -> Raw:
    return Raw(spec.n, tuple(e.word() for e in spec.r_images()))


def conjugated(spec: EndoSpec, x: Word) -> Raw:
    """Raw images of conj_x ∘ spec."""
    return Raw(spec.n, tuple(bn.conjugate(x, e.word()) for e in spec.r_images()))


# --- application -----------------------------------------------------------------------

_GEN_NAMES = ("t", "r")


def generator_image(spec: EndoSpec, gen: str) -> Word:
    """Image of `t<i>`, `r<i>` or `rhoB` as a type B word."""
    n = spec.n
    if spec.classified and n < MIN_CLASSIFIED_RANK:
        raise ValueError(f"rank {n} too small")
    if gen in ("rhoB", "rho"):
        return spec.rho_image().word()
    if len(gen) >= 2 and gen[0] in _GEN_NAMES and gen[1:].isdigit():
        i = int(gen[1:])
        if gen[0] == "t" and 0 <= i < n:
            return spec.t_image(i).word()
        if gen[0] == "r" and 1 <= i <= n:
            return spec.r_image(i).word()
    raise ValueError(f"invalid generator {gen!r} for rank {n}")


def _check_word(spec: EndoSpec, u: Word):
    if u.alphabet != Alphabet(Family.TypeB, spec.n):
        raise WordError(f"expected a B_{spec.n} word, got {u.alphabet}")


def apply(spec: EndoSpec, u: Word) -> Word:
    _check_word(spec, u)
    images = [e.word() for e in spec.r_images()]
    inverses = [bn.invert(w) for w in images]
    return concat_all(u.alphabet, (images[x.index - 1] if x.sign > 0 else inverses[x.index - 1] for x in u.letters))


def apply_nf(spec: EndoSpec, u: Word) -> BraidNF:
    """Normal form (in A[A_n]) of spec(u), computed from cached image normal forms."""
    _check_word(spec, u)
    return _apply_signed_nf(spec, u.signed())


def _apply_signed_nf(spec: EndoSpec, signed: Sequence[int]) -> BraidNF:
    nfs = spec.image_nfs()
    invs: dict[int, BraidNF] = {}
    out = BraidNF.identity(spec.n)
    for x in signed:
        if x > 0:
            out = out * nfs[x - 1]
        else:
            inv = invs.get(-x)
            if inv is None:
                inv = invs[-x] = nfs[-x - 1].inverse()
            out = out * inv
    return out


def _apply_elem_nf(spec: EndoSpec, e: Elem) -> BraidNF:
    out = BraidNF.identity(spec.n)
    for w, k in e.parts:
        out = out * _apply_signed_nf(spec, w.signed()) ** k
    return out


# --- relations -------------------------------------------------------------------------

def coxeter_m(n: int, i: int, j: int) -> int:
    """Coxeter matrix entry of B_n for generators r_i, r_j (i != j)."""
    i, j = min(i, j), max(i, j)
    if (i, j) == (n - 1, n):
        return 4
    return 3 if j == i + 1 else 2


def alternating(a, b, m: int):
    """Π(a, b, m) for normal forms."""
    out = a
    for k in range(1, m):
        out = out * (b if k % 2 else a)
    return out


def relations_hold(nfs: Sequence[BraidNF], equal=None) -> bool:
    """All Artin relations of B_n among the given images (r_1..r_n order)."""
    n = len(nfs)
    equal = equal or (lambda u, v: u == v)
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            m = coxeter_m(n, i, j)
            a, b = nfs[i - 1], nfs[j - 1]
            if not equal(alternating(a, b, m), alternating(b, a, m)):
                return False
    return True


def verify_homomorphism(spec: EndoSpec) -> bool:
    if isinstance(spec, (Type1, StdI)):
        g, h = bn_nf(spec.g), bn_nf(spec.h)
        if g * h != h * g:
            return False
    return relations_hold(spec.image_nfs())


# --- standard forms and predicates -----------------------------------------------------

def to_standard_form(spec: EndoSpec) -> EndoSpec:
    """
    Rewrite a (t, ρ_B)-form spec in the standard generators. Type (2b) specs come out
    conjugated by Δ_Y^-1; see `standard_form_conjugator`.
    """
    n = spec.n
    if isinstance(spec, Type1):
        g_inv = power(spec.g, -(n - 1))
        return StdI(n, spec.g, g_inv * spec.h)
    if isinstance(spec, Type2a):
        q = spec.q - spec.p * (n - 1)
        cls = StdIIa if spec.eps == 1 else StdIIb
        return cls(n, spec.eps, spec.p, q)
    if isinstance(spec, Type2b):
        q = spec.q - spec.p * (n - 1)
        cls = StdIIb if spec.eps == 1 else StdIIa
        return cls(n, spec.eps, spec.p, q)
    if isinstance(spec, Type3):
        cls = StdIIIa if spec.eps * (1 - 2 * spec.k) == 1 else StdIIIb
        return cls(n, spec.eps, spec.p, spec.q, spec.r - spec.p * (n - 1), spec.s - spec.q * (n - 1))
    if isinstance(spec, (StdI, StdIIa, StdIIb, StdIIIa, StdIIIb)):
        return spec
    raise ValueError(f"{type(spec).__name__} has no standard form")


def standard_form_conjugator(spec: EndoSpec) -> Word:
    """x with to_standard_form(spec) = conj_x ∘ spec."""
    if isinstance(spec, Type2b):
        return bn.invert(_DY(spec.n))
    return b_empty(spec.n)


_INJECTIVE = (Type2a, Type2b, StdIIa, StdIIb, NamedAut, Inner)
_NOT_INJECTIVE = (Type1, StdI, Type3, StdIIIa, StdIIIb)


def is_injective(spec: EndoSpec) -> bool:
    if isinstance(spec, Raw):
        raise Unsupported("injectivity of raw images is not decided here; classify first")
    if isinstance(spec, Compose):
        return is_injective(spec.outer) and is_injective(spec.inner)
    if isinstance(spec, _INJECTIVE):
        return True
    if isinstance(spec, _NOT_INJECTIVE):
        return False
    raise Unsupported(type(spec).__name__)


def is_surjective(spec: EndoSpec) -> bool:
    if isinstance(spec, Raw):
        raise Unsupported("surjectivity of raw images is not decided here; classify first")
    if isinstance(spec, Compose):
        return is_surjective(spec.outer) and is_surjective(spec.inner)
    if isinstance(spec, (Type2a, Type2b)):
        return spec.q == 0
    if isinstance(spec, (StdIIa, StdIIb)):
        # r_n carries Δ_B^{q - p(n-1)} in terms of the (t, ρ_B) parameter q
        return spec.q + spec.p * (spec.n - 1) == 0
    if isinstance(spec, (NamedAut, Inner)):
        return True
    if isinstance(spec, _NOT_INJECTIVE):
        return False
    raise Unsupported(type(spec).__name__)


def non_injectivity_witness(spec: Type3) -> tuple[Word, Word]:
    """
    Two distinct elements with the same image under a type (3) spec: t_0 and v_0 when
    eps·(1-2k) = 1, else t_0 and v_1.
    """
    n = spec.n
    v = Named.V0 if spec.eps * (1 - 2 * spec.k) == 1 else Named.V1
    return _t(n, 0), _b(v, n)


# --- the central quotient --------------------------------------------------------------

def bar_equal_nf(a: BraidNF, b: BraidNF) -> bool:
    return central_power_of_nf(a * b.inverse()) is not None


class BarEndoSpec:
    """Endomorphism of A[B_n]/Z, represented by preimages of the images of r̄_1..r̄_n."""

    n: int

    def r_image(self, i: int) -> Elem:
        raise NotImplementedError

    def r_images(self) -> tuple[Elem, ...]:
        return tuple(self.r_image(i) for i in range(1, self.n + 1))

    def image_nfs(self) -> tuple[BraidNF, ...]:
        return tuple(e.nf() for e in self.r_images())


@dataclass(frozen=True)
class BarType1(BarEndoSpec):
    """t̄_i ↦ ḡ, ρ̄_B ↦ ρ̄_B^κ with ḡ commuting with ρ̄_B^κ."""

    n: int
    kappa: int
    gbar: Word

    def __post_init__(self):
        if self.n < MIN_CLASSIFIED_RANK:
            raise ValueError(f"need n >= {MIN_CLASSIFIED_RANK}")
        if not 0 <= self.kappa < self.n:
            raise ValueError(f"kappa must lie in 0..{self.n - 1}")
        rk = bn_nf(_rho(self.n)) ** self.kappa
        g = bn_nf(self.gbar)
        if not bar_equal_nf(g * rk, rk * g):
            raise ValueError("gbar does not commute with rho_B^kappa modulo the center")

    def r_image(self, i):
        n = self.n
        if i < n:
            return Elem.of(n, (self.gbar, 1))
        return Elem.of(n, (self.gbar, -(n - 1)), (_rho(n), self.kappa))


@dataclass(frozen=True)
class BarType2a(BarEndoSpec):
    n: int
    eps: int = 1

    def __post_init__(self):
        _check_sign(self.eps)

    def r_image(self, i):
        return Type2a(self.n, self.eps).r_image(i)


@dataclass(frozen=True)
class BarType2b(BarEndoSpec):
    n: int
    eps: int = 1

    def __post_init__(self):
        _check_sign(self.eps)

    def r_image(self, i):
        return Type2b(self.n, self.eps).r_image(i)


@dataclass(frozen=True)
class BarRaw(BarEndoSpec):
    n: int
    images: tuple[Word, ...]

    def __post_init__(self):
        if len(self.images) != self.n:
            raise ValueError(f"BarRaw needs {self.n} images, got {len(self.images)}")

    def r_image(self, i):
        return Elem.of(self.n, (self.images[i - 1], 1))


def project(spec: EndoSpec) -> BarRaw:
    """The induced map on the quotient, by representatives (caller ensures Z is preserved)."""
    return BarRaw(spec.n, tuple(e.word() for e in spec.r_images()))


def bar_verify_homomorphism(bar: BarEndoSpec) -> bool:
    return relations_hold(bar.image_nfs(), bar_equal_nf)


@dataclass(frozen=True)
class LiftResult:
    spec: Raw
    discrepancies: tuple[int, ...]  # k_2..k_{n-1}


def lift_with_discrepancies(bar: BarEndoSpec) -> LiftResult:
    """
    Lift a quotient endomorphism: keep the first preimage, then for i = 2..n-1 correct
    u_i' by the central discrepancy Δ_B^{k_i} of the braid relation with u_{i-1}. The
    commutation relations and the length-4 relation then hold without correction.
    """
    n = bar.n
    if n < MIN_CLASSIFIED_RANK:
        raise ValueError(f"need n >= {MIN_CLASSIFIED_RANK}")
    reps = [e.word() for e in bar.r_images()]
    DB = _DB(n)
    lifted = [reps[0]]
    ks = []
    for i in range(2, n):
        prev, cur = bn_nf(lifted[-1]), bn_nf(reps[i - 1])
        disc = (prev * cur * prev) * (cur * prev * cur).inverse()
        k = central_power_of_nf(disc)
        if k is None:
            raise LiftError(f"braid relation between images {i - 1} and {i} fails modulo the center")
        ks.append(k)
        lifted.append(reps[i - 1] * power(DB, k))
    lifted.append(reps[n - 1])
    return LiftResult(Raw(n, tuple(lifted)), tuple(ks))


def lift(bar: BarEndoSpec) -> Raw:
    return lift_with_discrepancies(bar).spec


def gcd_class(n: int, kappa: int) -> int:
    return math.gcd(n, kappa)


# --- JSON ------------------------------------------------------------------------------

_PARAMS = {
    "Type2a": (Type2a, ("eps", "p", "q")),
    "Type2b": (Type2b, ("eps", "p", "q")),
    "Type3": (Type3, ("eps", "k", "p", "q", "r", "s")),
    "StdIIa": (StdIIa, ("eps", "p", "q")),
    "StdIIb": (StdIIb, ("eps", "p", "q")),
    "StdIIIa": (StdIIIa, ("eps", "p", "q", "r", "s")),
    "StdIIIb": (StdIIIb, ("eps", "p", "q", "r", "s")),
}
_BAR_PARAMS = {"BarType2a": BarType2a, "BarType2b": BarType2b}


def _word_in(text: str, n: int) -> Word:
    return bn.parse(text, Alphabet(Family.TypeB, n))


def _images_from_json(obj, n: int) -> tuple[Word, ...]:
    if isinstance(obj, list):
        texts = obj
    else:
        missing = [f"r{i}" for i in range(1, n + 1) if f"r{i}" not in obj]
        if missing:
            raise ValueError(f"images missing for {', '.join(missing)}")
        texts = [obj[f"r{i}"] for i in range(1, n + 1)]
    return tuple(_word_in(t, n) for t in texts)


def spec_from_json(obj, n: Optional[int] = None) -> EndoSpec:
    """
    Build an EndoSpec from parsed JSON. A list [f, g, h] means f ∘ g ∘ h. The rank comes
    from "n" if present, else from the argument.
    """
    if isinstance(obj, list):
        if not obj:
            raise ValueError("empty composition")
        specs = [spec_from_json(x, n) for x in obj]
        out = specs[-1]
        for s in reversed(specs[:-1]):
            out = Compose(s, out)
        return out
    if isinstance(obj, str):
        obj = {"variant": obj}
    if not isinstance(obj, dict) or "variant" not in obj:
        raise ValueError("spec must be an object with a 'variant' field")
    n = obj.get("n", n)
    if n is None:
        raise ValueError("rank not given")
    v = obj["variant"]
    if v in _PARAMS:
        cls, names = _PARAMS[v]
        return cls(n, **{k: int(obj.get(k, 1 if k == "eps" else 0)) for k in names})
    if v in ("Type1", "StdI"):
        cls = Type1 if v == "Type1" else StdI
        return cls(n, _word_in(obj["g"], n), _word_in(obj["h"], n))
    if v == "T":
        return T(n, int(obj.get("power", 1)))
    if v in ("Tau", "Mu"):
        return NamedAut(n, v)
    if v == "Inner":
        return Inner(n, _word_in(obj["x"], n))
    if v == "Compose":
        return Compose(spec_from_json(obj["outer"], n), spec_from_json(obj["inner"], n))
    if v == "Raw":
        return Raw(n, _images_from_json(obj["images"], n))
    raise ValueError(f"unknown variant {v!r}")


def spec_to_json(spec: EndoSpec) -> dict | list:
    name = type(spec).__name__
    if name in _PARAMS:
        _, names = _PARAMS[name]
        return {"n": spec.n, "variant": name, **{k: getattr(spec, k) for k in names}}
    if isinstance(spec, (Type1, StdI)):
        return {"n": spec.n, "variant": name, "g": spec.g.compact(), "h": spec.h.compact()}
    if isinstance(spec, NamedAut):
        if spec.which == "T":
            return {"n": spec.n, "variant": "T", "power": spec.power}
        return {"n": spec.n, "variant": spec.which}
    if isinstance(spec, Inner):
        return {"n": spec.n, "variant": "Inner", "x": spec.x.compact()}
    if isinstance(spec, Compose):
        parts = []
        for s in (spec.outer, spec.inner):
            j = spec_to_json(s)
            parts.extend(j if isinstance(s, Compose) else [j])
        return parts
    if isinstance(spec, Raw):
        return {"n": spec.n, "variant": "Raw", "images": {f"r{i + 1}": w.compact() for i, w in enumerate(spec.images)}}
    raise ValueError(f"cannot serialise {name}")


def bar_spec_from_json(obj, n: Optional[int] = None) -> BarEndoSpec:
    if not isinstance(obj, dict) or "variant" not in obj:
        raise ValueError("bar spec must be an object with a 'variant' field")
    n = obj.get("n", n)
    if n is None:
        raise ValueError("rank not given")
    v = obj["variant"]
    if v in _BAR_PARAMS:
        return _BAR_PARAMS[v](n, int(obj.get("eps", 1)))
    if v == "BarType1":
        return BarType1(n, int(obj["kappa"]), _word_in(obj.get("g", ""), n))
    if v == "BarRaw":
        return BarRaw(n, _images_from_json(obj["images"], n))
    raise ValueError(f"unknown bar variant {v!r}")


def bar_spec_to_json(bar: BarEndoSpec) -> dict:
    if isinstance(bar, (BarType2a, BarType2b)):
        return {"n": bar.n, "variant": type(bar).__name__, "eps": bar.eps}
    if isinstance(bar, BarType1):
        return {"n": bar.n, "variant": "BarType1", "kappa": bar.kappa, "g": bar.gbar.compact()}
    images = [e.word() for e in bar.r_images()]
    return {"n": bar.n, "variant": "BarRaw", "images": {f"r{i + 1}": w.compact() for i, w in enumerate(images)}}


def is_bar_variant(obj) -> bool:
    return isinstance(obj, dict) and str(obj.get("variant", "")).startswith("Bar")
