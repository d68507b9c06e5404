import itertools
import json

import pytest

from artin_bn import bn
from artin_bn.bn import Named, b_gen, bn_central_power, bn_equal, expand, iota_tilde_A, parse
from artin_bn.endo import (
    BarRaw,
    BarType1,
    BarType2b,
    Compose,
    Inner,
    LiftError,
    Mu,
    Raw,
    StdI,
    StdIIa,
    StdIIb,
    StdIIIa,
    StdIIIb,
    T,
    Tau,
    Type1,
    Type2a,
    Type2b,
    Type3,
    Unsupported,
    apply,
    apply_nf,
    conjugated,
    generator_image,
    identity,
    is_injective,
    is_surjective,
    lift,
    lift_with_discrepancies,
    non_injectivity_witness,
    spec_from_json,
    spec_to_json,
    standard_form_conjugator,
    to_raw,
    to_standard_form,
    verify_homomorphism,
)
from artin_bn.words import B, power

from conftest import random_word

N = 5
DB = expand(Named.DeltaB, N)
RHO = expand(Named.RhoB, N)


def same_images(f, g, n=N):
    return all(bn_equal(apply(f, b_gen(n, i)), apply(g, b_gen(n, i))) for i in range(1, n + 1))


def test_generator_image_examples():
    t2 = b_gen(N, 2)
    assert bn_equal(generator_image(Type2a(N, 1, 1, 0), "t2"), t2 * DB)
    assert bn_equal(generator_image(Mu(N), "r5"), expand(Named.SmallDelta, N) * b_gen(N, 5))
    assert bn_equal(generator_image(Tau(N), "rhoB"), RHO.inverse())

    # (2b) sends t_1 to t_{n-1} and t_0 to t_0
    assert bn_equal(generator_image(Type2b(N, 1, 0, 0), "t1"), b_gen(N, 4))
    assert bn_equal(generator_image(Type2b(N, 1, 0, 0), "t0"), expand(Named.T0, N))
    for bad in ("t5", "r0", "r6", "x1", "rho2"):
        with pytest.raises(ValueError):
            generator_image(identity(N), bad)


def test_rank_guard():
    with pytest.raises(ValueError):
        Type2a(4)
    with pytest.raises(ValueError):
        Mu(3)
    with pytest.raises(ValueError):
        Type2a(5, eps=2)
    with pytest.raises(ValueError):
        Type3(5, k=2)
    # raw images are fine at small rank
    Raw(3, tuple(b_gen(3, i) for i in (1, 2, 3)))


def test_type1_requires_commuting():
    with pytest.raises(ValueError):
        Type1(N, b_gen(N, 1), b_gen(N, 2))
    with pytest.raises(ValueError):
        StdI(N, b_gen(N, 1), b_gen(N, 2))
    assert verify_homomorphism(Type1(N, b_gen(N, 1), DB))


def test_apply_examples(rng):
    u = random_word(rng, B(N), 20)
    assert bn_equal(apply(identity(N), u), u)
    for i in range(1, N + 1):
        assert bn_equal(apply(Tau(N), apply(Tau(N), b_gen(N, i))), b_gen(N, i))
    for eps, p, q in itertools.product((1, -1), (-1, 0, 2), (-2, 0, 1)):
        assert bn_central_power(apply(Type2a(N, eps, p, q), power(RHO, N))) == q * N + 1
        assert bn_central_power(apply(Type2b(N, eps, p, q), power(RHO, N))) == q * N - 1


def test_apply_is_homomorphic(rng):
    for spec in (Type3(N, -1, 1, 1, 0, -1, 2), Tau(N), Type2b(N, -1, 1, 1)):
        for _ in range(5):
            u, v = random_word(rng, B(N), 8), random_word(rng, B(N), 8)
            assert bn_equal(apply(spec, u * v), apply(spec, u) * apply(spec, v))
            assert apply_nf(spec, u * v) == bn.bn_nf(apply(spec, u * v))


def test_verify_examples():
    images = tuple(b_gen(N, i) for i in (1, 2, 3, 4, 1))
    assert not verify_homomorphism(Raw(N, images))
    assert verify_homomorphism(Raw(N, tuple(b_gen(N, i) for i in range(1, N + 1))))


def test_verify_grid_small():
    for n in (5, 6):
        for eps, p, q in itertools.product((1, -1), (-1, 1), (0, 2)):
            for spec in (Type2a(n, eps, p, q), Type2b(n, eps, p, q), StdIIa(n, eps, p, q), StdIIb(n, eps, p, q)):
                assert verify_homomorphism(spec), spec
        for eps, k in itertools.product((1, -1), (0, 1)):
            assert verify_homomorphism(Type3(n, eps, k, 1, -2, 2, -1))
            assert verify_homomorphism(StdIIIa(n, eps, 1, -2, 2, -1))
            assert verify_homomorphism(StdIIIb(n, eps, -1, 0, 1, 2))


def test_standard_form_examples():
    n, p, q = N, 2, 1
    assert to_standard_form(Type2a(n, 1, p, q)) == StdIIa(n, 1, p, q - p * (n - 1))
    assert to_standard_form(Type2a(n, -1, p, q)) == StdIIb(n, -1, p, q - p * (n - 1))
    g, h = b_gen(n, 1), DB * b_gen(n, 1)
    std = to_standard_form(Type1(n, g, h))
    assert isinstance(std, StdI) and bn_equal(std.h, power(g, -(n - 1)) * h)


@pytest.mark.parametrize(
    "spec",
    [
        Type2a(5, 1, 2, -1), Type2a(5, -1, -1, 2), Type2b(5, 1, 1, 1), Type2b(6, -1, 2, 0),
        Type3(5, 1, 0, 1, 2, -1, 0), Type3(5, -1, 0, 0, 1, 1, -2), Type3(6, 1, 1, -1, 0, 2, 1),
        Type3(6, -1, 1, 2, -2, 0, 1), Type1(5, b_gen(5, 2), DB),
    ],
)
def test_standard_form_preserves_map(spec):
    std = to_standard_form(spec)
    x = standard_form_conjugator(spec)
    assert same_images(conjugated(spec, x), std, spec.n)


def test_injective_surjective():
    assert is_injective(Type2b(N, -1, 3, 7))
    assert not is_injective(Type3(N, 1, 0, 0, 0, 0, 0))
    assert not is_injective(Type1(N, b_gen(N, 1), DB))
    assert is_surjective(Type2a(N, 1, 2, 0))
    assert not is_surjective(Type2a(N, 1, 0, 1))
    assert is_surjective(T(N, 3)) and is_injective(T(N, -2))
    assert is_surjective(Compose(Tau(N), Inner(N, b_gen(N, 2))))
    assert not is_surjective(Compose(Tau(N), Type2a(N, 1, 0, 1)))
    for f in (is_injective, is_surjective):
        with pytest.raises(Unsupported):
            f(to_raw(Mu(N)))


@pytest.mark.parametrize("spec", [Type2a(5, 1, 1, 0), StdIIa(5, -1, 2, -8), StdIIb(6, 1, -1, 5), Type2b(6, -1, 1, 2)])
def test_surjectivity_matches_image_of_center(spec):
    # surjective exactly when Δ_B goes to Δ_B^{±1}
    c = bn_central_power(apply(spec, expand(Named.DeltaB, spec.n)))
    assert is_surjective(spec) == (c in (1, -1))


def test_type3_witness():
    for n, eps, k in itertools.product((5, 6), (1, -1), (0, 1)):
        spec = Type3(n, eps, k, 1, 0, -1, 2)
        a, b = non_injectivity_witness(spec)
        assert bn_equal(apply(spec, a), apply(spec, b))
        assert not bn_equal(a, b)


def test_named_forms_agree():
    # the t/ρ_B formulas and the standard-generator formulas describe the same maps
    from artin_bn.endo import EndoSpec

    for spec in (T(5, 2), Tau(5), Mu(6)):
        for i in range(spec.n):
            assert bn_equal(EndoSpec.t_image(spec, i).word(), spec.t_image(i).word())
        assert bn_equal(EndoSpec.rho_image(spec).word(), spec.rho_image().word())


def test_tau_decomposition():
    DY = iota_tilde_A(expand(Named.DeltaY, N))
    assert same_images(Tau(N), Compose(Inner(N, DY), StdIIa(N, -1, 0, 0)))


def test_lift_examples():
    ident = lift(BarRaw(N, tuple(b_gen(N, i) for i in range(1, N + 1))))
    assert same_images(ident, identity(N))
    L = lift(BarType2b(N, -1))
    assert verify_homomorphism(L)
    assert all(bn.central_power_of_nf(bn.bn_nf(a * e.word().inverse())) is not None
               for a, e in zip(L.images, Tau(N).r_images()))
    shifted = list(b_gen(N, i) for i in range(1, N + 1))
    shifted[1] = shifted[1] * DB
    res = lift_with_discrepancies(BarRaw(N, tuple(shifted)))
    assert res.discrepancies == (-1, 0, 0)
    assert same_images(res.spec, identity(N))


def test_lift_rejects_non_endomorphism():
    images = tuple(b_gen(N, i) for i in (1, 3, 3, 4, 5))
    with pytest.raises(LiftError):
        lift(BarRaw(N, images))


def test_bar_type1_guard():
    BarType1(N, 3, expand(Named.RhoB, N))
    with pytest.raises(ValueError):
        BarType1(N, 2, b_gen(N, 1))


@pytest.mark.parametrize(
    "obj",
    [
        {"n": 5, "variant": "Type2a", "eps": -1, "p": 2, "q": 0},
        {"n": 6, "variant": "Type3", "eps": 1, "k": 1, "p": 0, "q": 1, "r": -1, "s": 2},
        {"n": 5, "variant": "StdIIIb", "eps": -1, "p": 0, "q": 1, "r": -1, "s": 2},
        {"n": 5, "variant": "T", "power": -3},
        {"n": 5, "variant": "Tau"},
        {"n": 5, "variant": "Inner", "x": "r1 r2^-1"},
        {"n": 5, "variant": "Raw", "images": {f"r{i}": f"r{i}^-1" for i in range(1, 6)}},
        {"n": 5, "variant": "Type1", "g": "r2", "h": "r1 r2 r3 r4 r5"},
    ],
)
def test_json_roundtrip(obj):
    if obj["variant"] == "Type1":
        obj = dict(obj, h=expand(Named.DeltaB, 5).compact())
    spec = spec_from_json(obj)
    again = spec_to_json(spec)
    assert spec_from_json(json.loads(json.dumps(again))) == spec


def test_json_composition_and_errors():
    spec = spec_from_json([{"variant": "T"}, "Mu", {"variant": "Tau"}], n=5)
    assert spec == Compose(T(5), Compose(Mu(5), Tau(5)))
    assert spec_from_json(spec_to_json(spec)) == spec
    with pytest.raises(ValueError):
        spec_from_json({"variant": "Nope"}, n=5)
    with pytest.raises(ValueError):
        spec_from_json({"variant": "Raw", "images": {"r1": "r1"}}, n=5)
    with pytest.raises(ValueError):
        spec_from_json({"variant": "Tau"})
