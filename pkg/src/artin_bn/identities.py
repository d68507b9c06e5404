"""
Machine checks of the explicit identities behind the theory: the embeddings, the cyclic
shift by ρ_B, the Δ_Y-conjugation lemma, the δ relations, the automorphism relations and
the centraliser generators. Every check is an exact normal-form comparison.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Callable

from . import endo
from .bn import (
    Named,
    affine_equal,
    b_gen,
    bn_central_power,
    bn_equal,
    expand,
    iota_B,
    iota_tilde_A,
    parse,
    semidirect_decompose,
)
from .classify import bar_equal, centralizer_generators, rho_bar
from .endo import Compose, Inner, Mu, StdIIa, T, Tau, apply, coxeter_m, identity
from .garside import delta_word, garside_word, normal_form
from .words import Alphabet, Family, Word, affine, conjugate, invert

# suite names are part of the command line interface
SUITES = ("embedding", "semidirect", "lemma42", "section6", "autrel", "centralizer")


@dataclass(frozen=True)
class Check:
    suite: str
    name: str
    ok: bool

    def line(self) -> str:
        return f"{'PASS' if self.ok else 'FAIL'}  {self.suite}: {self.name}"


def _alt(a: Word, b: Word, m: int) -> Word:
    out = a
    for k in range(1, m):
        out = out * (b if k % 2 else a)
    return out


def embedding(n: int, rng: random.Random) -> list[tuple[str, bool]]:
    out = []
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            m = coxeter_m(n, i, j)
            a, b = b_gen(n, i), b_gen(n, j)
            out.append((f"B relation r{i},r{j} (m={m})", bn_equal(_alt(a, b, m), _alt(b, a, m))))
    aff = affine(n)
    for i in range(n):
        for j in range(i + 1, n):
            m = 3 if (j - i) % n in (1, n - 1) else 2
            a, b = Word.gen(aff, i), Word.gen(aff, j)
            out.append((f"affine relation t{i},t{j} (m={m})", affine_equal(_alt(a, b, m), _alt(b, a, m))))
    return out


def semidirect(n: int, rng: random.Random) -> list[tuple[str, bool]]:
    alpha = Alphabet(Family.TypeB, n)
    rho = expand(Named.RhoB, n)
    DB = expand(Named.DeltaB, n)
    out = []
    for i in range(1, n - 1):
        out.append((f"rho r{i} rho^-1 = r{i + 1}", bn_equal(conjugate(rho, b_gen(n, i)), b_gen(n, i + 1))))
    ts = [iota_tilde_A(Word.gen(affine(n), i)) for i in range(n)]
    for i in range(n):
        out.append((f"rho t{i} rho^-1 = t{(i + 1) % n}", bn_equal(conjugate(rho, ts[i]), ts[(i + 1) % n])))
    out.append(("rho^n = DeltaB", bn_equal(rho ** n, DB)))
    out.append(("iota_B(DeltaB) = Delta^2", normal_form(iota_B(DB)) == normal_form(delta_word(n) ** 2)))
    out.append(("DeltaB central", all(bn_equal(conjugate(DB, b_gen(n, i)), b_gen(n, i)) for i in range(1, n + 1))))
    out.append(("t0 != r_n", not bn_equal(expand(Named.T0, n), b_gen(n, n))))
    good = 0
    trials = 20
    for _ in range(trials):
        w = Word.make(alpha, [(rng.randint(1, n), rng.choice((1, -1))) for _ in range(rng.randint(0, 24))])
        good += bn_equal(semidirect_decompose(w).reassemble(), w)
    out.append((f"decomposition round-trip ({trials} random words)", good == trials))
    return out


def delta_y_conjugation(n: int, rng: random.Random) -> list[tuple[str, bool]]:
    alpha = Alphabet(Family.TypeB, n)
    DY = parse("@DeltaY", alpha)
    rho = expand(Named.RhoB, n)
    rev = Word.make(alpha, [(i, 1) for i in range(n, 0, -1)])
    return [
        ("DeltaY^-1 rho DeltaY = r_n ... r_1", bn_equal(conjugate(invert(DY), rho), rev)),
        ("DeltaY r_i DeltaY^-1 = r_{n-i}",
         all(bn_equal(conjugate(DY, b_gen(n, i)), b_gen(n, n - i)) for i in range(1, n))),
    ]


def delta_relations(n: int, rng: random.Random) -> list[tuple[str, bool]]:
    alpha = Alphabet(Family.TypeB, n)
    d = expand(Named.SmallDelta, n)
    dp = expand(Named.SmallDeltaPrime, n)
    r = b_gen(n, n - 1)
    ri = invert(r)
    dr = d * b_gen(n, n)
    X1 = garside_word(alpha, range(1, n))
    X2 = garside_word(alpha, range(1, n - 1))
    return [
        ("delta delta' = delta' delta", bn_equal(d * dp, dp * d)),
        ("delta' = r_{n-1}^-1 delta r_{n-1}^-1", bn_equal(dp, ri * d * ri)),
        ("length-4 relation for delta, r_{n-1}^-1", bn_equal(d * ri * d * ri, ri * d * ri * d)),
        ("length-4 relation for delta r_n, r_{n-1}^-1", bn_equal(dr * ri * dr * ri, ri * dr * ri * dr)),
        ("length-4 relation for delta', r_{n-1}", bn_equal(dp * r * dp * r, r * dp * r * dp)),
        ("delta = Delta_X1^2 Delta_X2^-2", bn_equal(d, X1 ** 2 * X2 ** -2)),
    ]


def _same_map(f, g, n: int) -> bool:
    return all(bn_equal(apply(f, b_gen(n, i)), apply(g, b_gen(n, i))) for i in range(1, n + 1))


def autrel(n: int, rng: random.Random) -> list[tuple[str, bool]]:
    mu, tau, t, t_inv, ident = Mu(n), Tau(n), T(n), T(n, -1), identity(n)
    DY = iota_tilde_A(expand(Named.DeltaY, n))
    DB = expand(Named.DeltaB, n)
    return [
        ("mu^2 = id", _same_map(Compose(mu, mu), ident, n)),
        ("tau^2 = id", _same_map(Compose(tau, tau), ident, n)),
        ("mu tau = tau mu", _same_map(Compose(mu, tau), Compose(tau, mu), n)),
        ("mu T mu = T^-1", _same_map(Compose(mu, Compose(t, mu)), t_inv, n)),
        ("tau T = T tau", _same_map(Compose(tau, t), Compose(t, tau), n)),
        ("tau = conj_DeltaY o tau'", _same_map(tau, Compose(Inner(n, DY), StdIIa(n, -1, 0, 0)), n)),
        ("mu(DeltaB), tau(DeltaB) are DeltaB^(+-1)",
         bn_central_power(apply(mu, DB)) in (1, -1) and bn_central_power(apply(tau, DB)) in (1, -1)),
    ]


def centralizer(n: int, rng: random.Random) -> list[tuple[str, bool]]:
    out = []
    for kappa in range(n):
        rk = rho_bar(n) ** kappa
        gens = centralizer_generators(n, kappa)
        out.append((f"kappa={kappa}: {len(gens)} generator(s) commute with rho^kappa",
                    all(bar_equal(g * rk, rk * g) for g in gens)))
    return out


_SUITES: dict[str, Callable[[int, random.Random], list[tuple[str, bool]]]] = {
    "embedding": embedding,
    "semidirect": semidirect,
    "lemma42": delta_y_conjugation,
    "section6": delta_relations,
    "autrel": autrel,
    "centralizer": centralizer,
}


def run_suite(name: str, n: int, seed: int = 0) -> list[Check]:
    names = SUITES if name == "all" else (name,)
    unknown = [s for s in names if s not in _SUITES]
    if unknown:
        raise ValueError(f"unknown suite {unknown[0]!r}; choose from {', '.join(SUITES + ('all',))}")
    if n < 5 and any(s == "autrel" for s in names):
        raise ValueError("the automorphism relations need n >= 5")
    if n < 3:
        raise ValueError("identity suites need n >= 3")
    out = []
    for s in names:
        rng = random.Random(f"{seed}:{s}:{n}")
        out.extend(Check(s, label, bool(ok)) for label, ok in _SUITES[s](n, rng))
    return out
