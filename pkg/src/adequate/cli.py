"""Command-line front end.

Exit codes: 0 success (equal / identity holds / morphism exists), 1 negative
answer, 2 error.  Data goes to stdout, diagnostics to stderr.  Formula and
tree arguments may be given inline or as ``@path`` file references; an
argument starting with ``{`` is read as tree JSON, anything else as formula
text.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
import time
from random import Random

from .canonical import canonical_word
from .errors import Error
from .formula import Alphabet, RESERVED, parse, render
from .generate import enumerate_trees, random_tree
from .homomorphism import (
    exists_morphism,
    exists_morphism_bruteforce,
    extract_morphism,
)
from .pruning import minimal_retract_bruteforce, prune
from .solver import (
    KNOWN_IDENTITIES,
    KNOWN_NON_IDENTITIES,
    Mode,
    Sidedness,
    check_identity,
    equal,
    normal_form,
)
from .tree import SigmaTree, evaluate, from_json, to_dot, to_json

_SIDEDNESS = {
    "adequate": Sidedness.TWO_SIDED,
    "left": Sidedness.LEFT,
    "right": Sidedness.RIGHT,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="adequate",
        description="Word problem, normal forms and identity checking in free "
        "adequate semigroups and monoids, via birooted labelled trees.",
    )
    parser.add_argument("--alphabet", default="ab", help="generator symbols (default: ab)")
    parser.add_argument(
        "--mode",
        choices=sorted(_SIDEDNESS),
        default="adequate",
        help="variety: two-sided (adequate), left or right (default: adequate)",
    )
    parser.add_argument(
        "--semigroup",
        action="store_true",
        help="semigroup rather than monoid: reject the empty formula",
    )
    parser.add_argument(
        "--swap-sided-ops",
        action="store_true",
        help="invert which unary operation the one-sided modes admit",
    )
    parser.add_argument("--seed", type=int, default=0, help="64-bit seed for generation")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", help="evaluate a formula to its unpruned tree (JSON)")
    p.add_argument("formula")
    p.add_argument("--dot", metavar="PATH", help="also write a DOT rendering")

    p = sub.add_parser("prune", help="prune a tree (JSON or formula) to its minimal retract")
    p.add_argument("input")
    p.add_argument("--dot", metavar="PATH")

    p = sub.add_parser("nf", help="print the normal form of a formula")
    p.add_argument("formula")

    p = sub.add_parser("eq", help="decide whether two formulas are equal (exit 0/1)")
    p.add_argument("left")
    p.add_argument("right")

    p = sub.add_parser("morph", help="test for a morphism between two trees/formulas")
    p.add_argument("source")
    p.add_argument("target")

    p = sub.add_parser("check-identity", help="does the identity hold in the whole variety?")
    p.add_argument("lhs")
    p.add_argument("rhs")

    p = sub.add_parser("gen", help="generate a random tree (JSON), deterministic in --seed")
    p.add_argument("--edges", type=int, required=True)
    p.add_argument("--dot", metavar="PATH")

    p = sub.add_parser("bench", help="time eq and prune over a size ladder, print CSV")
    p.add_argument("--sizes", default="100,200,400,800", help="comma-separated edge counts")
    p.add_argument("--reps", type=int, default=3)

    sub.add_parser("selftest", help="run the oracle-equivalence and identity suites")
    return parser


def _mode_from_args(args) -> Mode:
    return Mode(_SIDEDNESS[args.mode], args.semigroup, args.swap_sided_ops)


def _read_source(arg: str) -> str:
    if arg.startswith("@"):
        with open(arg[1:], encoding="utf-8") as fh:
            return fh.read()
    return arg


def _tree_or_formula(arg: str, alphabet: Alphabet, mode: Mode) -> SigmaTree:
    text = _read_source(arg).strip()
    if text.startswith("{"):
        return from_json(text)
    return evaluate(parse(text, alphabet, mode))


def _emit_tree(tree: SigmaTree, dot_path: str | None) -> None:
    print(to_json(tree))
    if dot_path:
        with open(dot_path, "w", encoding="utf-8") as fh:
            fh.write(to_dot(tree))


def _cmd_eval(args) -> int:
    alphabet = Alphabet.from_string(args.alphabet)
    tree = evaluate(parse(_read_source(args.formula), alphabet, _mode_from_args(args)))
    _emit_tree(tree, args.dot)
    return 0


def _cmd_prune(args) -> int:
    alphabet = Alphabet.from_string(args.alphabet)
    tree = _tree_or_formula(args.input, alphabet, _mode_from_args(args))
    _emit_tree(prune(tree).tree, args.dot)
    return 0


def _cmd_nf(args) -> int:
    alphabet = Alphabet.from_string(args.alphabet)
    mode = _mode_from_args(args)
    print(render(normal_form(parse(_read_source(args.formula), alphabet, mode), mode)))
    return 0


def _cmd_eq(args) -> int:
    alphabet = Alphabet.from_string(args.alphabet)
    mode = _mode_from_args(args)
    f1 = parse(_read_source(args.left), alphabet, mode)
    f2 = parse(_read_source(args.right), alphabet, mode)
    same = equal(f1, f2, mode)
    print("equal" if same else "not-equal")
    return 0 if same else 1


def _cmd_morph(args) -> int:
    alphabet = Alphabet.from_string(args.alphabet)
    mode = _mode_from_args(args)
    source = _tree_or_formula(args.source, alphabet, mode)
    target = _tree_or_formula(args.target, alphabet, mode)
    witness = extract_morphism(source, target)
    if witness is None:
        print(json.dumps({"exists": False, "map": None}, separators=(",", ":")))
        return 1
    print(json.dumps({"exists": True, "map": list(witness.mapping)}, separators=(",", ":")))
    return 0


def _identity_alphabet(*texts: str) -> Alphabet:
    letters: list[str] = []
    seen: set[str] = set()
    for text in texts:
        for ch in text:
            if ch.isspace() or ch in RESERVED:
                continue
            if ch not in seen:
                seen.add(ch)
                letters.append(ch)
    return Alphabet(tuple(letters) if letters else ("x",))


def _cmd_check_identity(args) -> int:
    mode = _mode_from_args(args)
    lhs_text = _read_source(args.lhs)
    rhs_text = _read_source(args.rhs)
    alphabet = _identity_alphabet(lhs_text, rhs_text)
    holds = check_identity(
        parse(lhs_text, alphabet, mode), parse(rhs_text, alphabet, mode), mode
    )
    print("holds" if holds else "fails")
    return 0 if holds else 1


def _cmd_gen(args) -> int:
    alphabet = Alphabet.from_string(args.alphabet)
    if args.edges < 0:
        raise ValueError("--edges must be non-negative")
    tree = random_tree(Random(args.seed), args.edges, alphabet)
    _emit_tree(tree, args.dot)
    return 0


def run_bench(
    sizes: list[int], reps: int, alphabet: Alphabet, seed: int = 0
) -> tuple[list[tuple[int, float, float]], float, float]:
    """Mean eq and prune times per size, plus fitted log-log slopes."""
    rng = Random(seed)
    mode = Mode()
    rows = []
    for size in sizes:
        eq_times = []
        prune_times = []
        for _ in range(reps):
            s1 = canonical_word(random_tree(rng, size, alphabet))
            s2 = canonical_word(random_tree(rng, size, alphabet))
            started = time.perf_counter()
            equal(parse(s1, alphabet, mode), parse(s2, alphabet, mode), mode)
            eq_times.append(time.perf_counter() - started)
            target = random_tree(rng, size, alphabet)
            started = time.perf_counter()
            prune(target)
            prune_times.append(time.perf_counter() - started)
        rows.append((size, sum(eq_times) / reps, sum(prune_times) / reps))
    slope_eq = _loglog_slope([(s, t) for s, t, _ in rows])
    slope_prune = _loglog_slope([(s, t) for s, _, t in rows])
    return rows, slope_eq, slope_prune


def _loglog_slope(points: list[tuple[int, float]]) -> float:
    xs = [math.log(s) for s, _ in points]
    ys = [math.log(max(t, 1e-9)) for _, t in points]
    mean_x = sum(xs) / len(xs)
    mean_y = sum(ys) / len(ys)
    var = sum((x - mean_x) ** 2 for x in xs)
    if var == 0:
        return 0.0
    cov = sum((x - mean_x) * (y - mean_y) for x, y in zip(xs, ys))
    return cov / var


def _cmd_bench(args) -> int:
    if args.reps <= 0:
        raise ValueError("--reps must be positive")
    sizes = [int(part) for part in args.sizes.split(",") if part.strip()]
    if not sizes or any(s <= 0 for s in sizes):
        raise ValueError("--sizes must be positive integers")
    alphabet = Alphabet.from_string(args.alphabet)
    rows, slope_eq, slope_prune = run_bench(sizes, args.reps, alphabet, args.seed)
    print("size,eq_mean_s,prune_mean_s")
    for size, eq_mean, prune_mean in rows:
        print(f"{size},{eq_mean:.6f},{prune_mean:.6f}")
    print(f"slope,{slope_eq:.3f},{slope_prune:.3f}")
    return 0


def run_selftest(alphabet: Alphabet, seed: int = 0, out=print) -> bool:
    """Small oracle-equivalence and identity suites; True when all pass."""
    from .canonical import canonical_formula  # local: avoids import on other commands

    rng = Random(seed)
    ok = True

    trees = enumerate_trees(2, alphabet)
    bad = sum(
        1
        for t1 in trees
        for t2 in trees
        if exists_morphism(t1, t2) != exists_morphism_bruteforce(t1, t2)
    )
    pairs = len(trees) ** 2
    for _ in range(300):
        t1 = random_tree(rng, rng.randrange(8), alphabet)
        t2 = random_tree(rng, rng.randrange(8), alphabet)
        pairs += 1
        if exists_morphism(t1, t2) != exists_morphism_bruteforce(t1, t2):
            bad += 1
    ok &= bad == 0
    out(f"morphism-oracle: {pairs} pairs, {bad} disagreements")

    bad = 0
    cases = 0
    for tree in trees:
        cases += 1
        if canonical_formula(prune(tree).tree) != canonical_formula(
            minimal_retract_bruteforce(tree)
        ):
            bad += 1
    for _ in range(200):
        tree = random_tree(rng, rng.randrange(7), alphabet)
        cases += 1
        if canonical_formula(prune(tree).tree) != canonical_formula(
            minimal_retract_bruteforce(tree)
        ):
            bad += 1
    ok &= bad == 0
    out(f"pruning-oracle: {cases} trees, {bad} disagreements")

    mode = Mode()
    failures = 0
    for lhs, rhs in KNOWN_IDENTITIES:
        letters = _identity_alphabet(lhs, rhs)
        if not check_identity(parse(lhs, letters, mode), parse(rhs, letters, mode), mode):
            failures += 1
    for lhs, rhs in KNOWN_NON_IDENTITIES:
        letters = _identity_alphabet(lhs, rhs)
        if check_identity(parse(lhs, letters, mode), parse(rhs, letters, mode), mode):
            failures += 1
    ok &= failures == 0
    out(
        f"identity-suite: {len(KNOWN_IDENTITIES) + len(KNOWN_NON_IDENTITIES)} entries, "
        f"{failures} failures"
    )
    return ok


def _cmd_selftest(args) -> int:
    alphabet = Alphabet.from_string(args.alphabet)
    return 0 if run_selftest(alphabet, args.seed) else 1


_DISPATCH = {
    "eval": _cmd_eval,
    "prune": _cmd_prune,
    "nf": _cmd_nf,
    "eq": _cmd_eq,
    "morph": _cmd_morph,
    "check-identity": _cmd_check_identity,
    "gen": _cmd_gen,
    "bench": _cmd_bench,
    "selftest": _cmd_selftest,
}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if not 0 <= args.seed < 2**64:
        print("--seed must fit in 64 unsigned bits", file=sys.stderr)
        return 2
    try:
        return _DISPATCH[args.command](args)
    except Error as exc:
        print(exc, file=sys.stderr)
        return 2
    except (ValueError, OSError) as exc:
        print(exc, file=sys.stderr)
        return 2


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
