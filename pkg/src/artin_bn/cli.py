"""Command line front end: `artin-bn <subcommand> -n <rank> ...`."""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Optional, Sequence

from . import bn, classify, endo, garside, identities
from .handle import DEFAULT_BUDGET, HandleBudgetExceeded, handle_trivial
from .words import Alphabet, Family, Word, WordError

SCHEMA = "artin-bn/1"

EXIT_OK, EXIT_FALSE, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3

_FAMILIES = {"A": Family.TypeA, "B": Family.TypeB, "affine": Family.TypeAffineA}


class UsageError(Exception):
    pass


def _emit(args, payload: dict, text: str):
    if args.json:
        print(json.dumps({"schema": SCHEMA, **payload}, sort_keys=True))
    else:
        print(text)


def _word(text: str, family: Family, n: int) -> Word:
    return bn.parse(text, Alphabet(family, n))


def _load_json(arg: str):
    """Inline JSON, a bare variant name like `Tau`, or a path to a JSON file."""
    s = arg.strip()
    if s.startswith(("{", "[", '"')):
        return json.loads(s)
    if os.path.exists(s):
        with open(s) as fh:
            return json.load(fh)
    if s.isidentifier():
        return {"variant": s}
    raise UsageError(f"cannot read spec {arg!r}: not JSON and no such file")


def _need_classified_rank(n: int):
    if n < endo.MIN_CLASSIFIED_RANK:
        raise UsageError(f"this subcommand needs -n >= {endo.MIN_CLASSIFIED_RANK}")


# --- subcommands -----------------------------------------------------------------------

def cmd_nf(args) -> int:
    nf = garside.normal_form(_word(args.word, Family.TypeA, args.n))
    lines = [f"inf={nf.inf}", f"factors={len(nf.factors)}"]
    lines += ["  " + " ".join(map(str, garside.perm_one_line(x))) for x in nf.factors]
    _emit(args, {"nf": nf.to_json()}, "\n".join(lines))
    return EXIT_OK


def cmd_eq(args) -> int:
    fam = _FAMILIES[args.type]
    u, v = _word(args.word1, fam, args.n), _word(args.word2, fam, args.n)
    if args.mod_center:
        if fam is Family.TypeA:
            raise UsageError("--mod-center applies to --type B or affine")
        result = classify.bar_equal(u, v)
    elif args.oracle == "handle":
        if fam is Family.TypeB:
            u, v = bn.iota_B(u), bn.iota_B(v)
        elif fam is Family.TypeAffineA:
            u, v = bn.iota_B(bn.iota_tilde_A(u)), bn.iota_B(bn.iota_tilde_A(v))
        result = handle_trivial(u * v.inverse(), args.budget)
    elif fam is Family.TypeA:
        result = garside.braid_equal(u, v)
    elif fam is Family.TypeB:
        result = bn.bn_equal(u, v)
    else:
        result = bn.affine_equal(u, v)
    _emit(args, {"equal": result}, "true" if result else "false")
    return EXIT_OK if result else EXIT_FALSE


def cmd_perm(args) -> int:
    p = garside.underlying_permutation(_word(args.word, Family.TypeA, args.n))
    cycles = garside.perm_cycles(p)
    text = " ".join(map(str, garside.perm_one_line(p)))
    if cycles:
        text += "   " + "".join("(" + " ".join(map(str, c)) + ")" for c in cycles)
    _emit(args, {"perm": garside.perm_one_line(p), "cycles": [list(c) for c in cycles]}, text)
    return EXIT_OK


def cmd_delta_power(args) -> int:
    k = garside.delta_power(_word(args.word, Family.TypeA, args.n))
    _emit(args, {"delta_power": k}, "none" if k is None else str(k))
    return EXIT_OK if k is not None else EXIT_FALSE


def _spec(args) -> endo.EndoSpec:
    # classified variants reject n < 5 themselves
    return endo.spec_from_json(_load_json(args.spec), args.n)


def cmd_apply(args) -> int:
    spec = _spec(args)
    u = _word(args.word, Family.TypeB, args.n)
    image = endo.apply(spec, u)
    _emit(args, {"image": image.compact(), "length": len(image)}, image.compact() or "1")
    return EXIT_OK


def cmd_verify(args) -> int:
    spec = _spec(args)
    ok = endo.verify_homomorphism(spec)
    _emit(args, {"homomorphism": ok}, "ok" if ok else "FAIL")
    return EXIT_OK if ok else EXIT_FALSE


def cmd_classify(args) -> int:
    _need_classified_rank(args.n)
    obj = _load_json(args.spec)
    if endo.is_bar_variant(obj):
        result = classify.classify_bar(endo.bar_spec_from_json(obj, args.n))
    else:
        result = classify.classify_raw(endo.spec_from_json(obj, args.n))
    if result.note:
        print(f"warning: {result.note}", file=sys.stderr)
    _emit(args, {"result": result.to_json()}, str(result))
    ok = result.verdict not in ("NotAHomomorphism", "Inconclusive")
    return EXIT_OK if ok else EXIT_FALSE


def cmd_identities(args) -> int:
    try:
        checks = identities.run_suite(args.suite, args.n, args.seed)
    except ValueError as e:
        raise UsageError(str(e)) from None
    ok = all(c.ok for c in checks)
    if args.json:
        payload = {
            "suite": args.suite,
            "n": args.n,
            "seed": args.seed,
            "ok": ok,
            "checks": [{"suite": c.suite, "name": c.name, "ok": c.ok} for c in checks],
        }
        _emit(args, payload, "")
    else:
        for c in checks:
            print(c.line())
        print(f"{sum(c.ok for c in checks)}/{len(checks)} passed")
    return EXIT_OK if ok else EXIT_FALSE


# --- parser ----------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("-n", type=int, required=True, help="rank")
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--seed", type=int, default=0, help="seed for randomised checks")
    common.add_argument("--budget", type=int, default=DEFAULT_BUDGET, help="handle reduction step cap")

    p = argparse.ArgumentParser(
        prog="artin-bn",
        description="Braid normal forms, type B Artin group endomorphisms and their classification.",
    )
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("nf", parents=[common], help="left normal form of a braid word (s1 s2^-1 ...)")
    s.add_argument("word")
    s.set_defaults(func=cmd_nf)

    s = sub.add_parser("eq", parents=[common], help="decide equality of two words")
    s.add_argument("word1")
    s.add_argument("word2")
    s.add_argument("--type", choices=sorted(_FAMILIES), default="A")
    s.add_argument("--mod-center", action="store_true", help="compare in A[B_n] modulo its center")
    s.add_argument("--oracle", choices=("garside", "handle"), default="garside")
    s.set_defaults(func=cmd_eq)

    s = sub.add_parser("perm", parents=[common], help="underlying permutation of a braid word")
    s.add_argument("word")
    s.set_defaults(func=cmd_perm)

    s = sub.add_parser("delta-power", parents=[common], help="k if the braid equals Delta^k")
    s.add_argument("word")
    s.set_defaults(func=cmd_delta_power)

    for name, func, extra in (
        ("apply", cmd_apply, True),
        ("verify", cmd_verify, False),
        ("classify", cmd_classify, False),
    ):
        s = sub.add_parser(name, parents=[common], help=f"{name} an endomorphism spec (JSON, file or name)")
        s.add_argument("spec")
        if extra:
            s.add_argument("word")
        s.set_defaults(func=func)

    s = sub.add_parser("identities", parents=[common], help="run the identity checks")
    s.add_argument("--suite", default="all", choices=identities.SUITES + ("all",))
    s.set_defaults(func=cmd_identities)
    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code else EXIT_OK
    try:
        if args.n < 2:
            raise UsageError("rank must be at least 2")
        return args.func(args)
    except HandleBudgetExceeded as e:
        print(f"inconclusive: {e}", file=sys.stderr)
        return EXIT_BUDGET
    except (UsageError, WordError, ValueError, KeyError, endo.Unsupported) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
