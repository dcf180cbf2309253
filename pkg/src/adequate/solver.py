"""Top-level decision procedures for the free adequate varieties.

Two formulas denote the same element exactly when their evaluated trees map
into each other; equivalently, when their normal forms coincide.  Identity
checking over a variety reduces to the word problem in the free object on
the occurring variables, so the same machinery answers both questions.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .canonical import canonical_formula
from .errors import AlphabetMismatch, EmptyNotAllowed, OpNotInSignature
from .formula import (
    Alphabet,
    Formula,
    Unary,
    UnaryOp,
    occurring_letters,
    parse,
    render,
)
from .homomorphism import exists_morphism
from .pruning import prune
from .tree import evaluate


class Sidedness(Enum):
    LEFT = "left"
    RIGHT = "right"
    TWO_SIDED = "two-sided"


@dataclass(frozen=True)
class Mode:
    """Variety selector: sidedness and semigroup-versus-monoid.

    The one-sided varieties admit a single unary operation: star on the left
    side and plus on the right.  ``swap_sided_ops`` inverts that pairing in
    case the opposite convention is wanted.  Semigroup modes forbid the
    empty formula, whose value would be the identity element.
    """

    sidedness: Sidedness = Sidedness.TWO_SIDED
    semigroup: bool = False
    swap_sided_ops: bool = False

    def allowed_ops(self) -> frozenset[UnaryOp]:
        if self.sidedness is Sidedness.TWO_SIDED:
            return frozenset((UnaryOp.PLUS, UnaryOp.STAR))
        star_side = Sidedness.RIGHT if self.swap_sided_ops else Sidedness.LEFT
        return frozenset((UnaryOp.STAR if self.sidedness is star_side else UnaryOp.PLUS,))


DEFAULT_MODE = Mode()


def ensure_admissible(formula: Formula, mode: Mode) -> None:
    """Raise unless the formula fits the mode's signature and emptiness rules."""
    allowed = mode.allowed_ops()
    if mode.semigroup and not formula.factors:
        raise EmptyNotAllowed(detail="empty formula in semigroup mode")
    stack = list(formula.factors)
    while stack:
        item = stack.pop()
        if type(item) is Unary:
            if item.op not in allowed:
                raise OpNotInSignature(
                    detail=f"{item.op.value!r} is not in the signature of this mode"
                )
            if mode.semigroup and not item.body.factors:
                raise EmptyNotAllowed(detail="empty group in semigroup mode")
            stack.extend(item.body.factors)


def equal(f1: Formula, f2: Formula, mode: Mode = DEFAULT_MODE) -> bool:
    """Decide the word problem: do the formulas denote the same element?"""
    ensure_admissible(f1, mode)
    ensure_admissible(f2, mode)
    if f1.alphabet != f2.alphabet:
        raise AlphabetMismatch("formulas are over different alphabets")
    x = evaluate(f1)
    y = evaluate(f2)
    # A non-empty formula always evaluates with at least one edge, so
    # semigroup modes never see the identity element here.
    assert not mode.semigroup or (x.edges and y.edges)
    return exists_morphism(x, y) and exists_morphism(y, x)


def normal_form(formula: Formula, mode: Mode = DEFAULT_MODE) -> Formula:
    """The canonical formula of the pruned evaluation; a complete invariant.

    Two admissible formulas are equal exactly when their normal forms render
    to the same text.
    """
    ensure_admissible(formula, mode)
    return canonical_formula(prune(evaluate(formula)).tree)


def check_identity(lhs: Formula, rhs: Formula, mode: Mode = DEFAULT_MODE) -> bool:
    """Does lhs = rhs hold in every algebra of the mode's variety?

    Letters are read as identity variables; the check is the word problem in
    the free object over the variables that actually occur.
    """
    letters = list(occurring_letters(lhs))
    seen = set(letters)
    for ch in occurring_letters(rhs):
        if ch not in seen:
            seen.add(ch)
            letters.append(ch)
    if not letters:
        letters = ["x"]  # both sides are idempotent-only words on no variables
    alphabet = Alphabet(tuple(letters))
    grounded_lhs = parse(render(lhs), alphabet, mode)
    grounded_rhs = parse(render(rhs), alphabet, mode)
    return equal(grounded_lhs, grounded_rhs, mode)


def is_idempotent(formula: Formula, mode: Mode = DEFAULT_MODE) -> bool:
    """True iff the formula squares to itself; basepoints coincide after pruning."""
    ensure_admissible(formula, mode)
    pruned = prune(evaluate(formula)).tree
    return pruned.start == pruned.end


# Identities that hold in every two-sided adequate semigroup, and words that
# are not identities, both as rendered formula pairs over variables x, y.
# Test suites re-confirm each entry against the brute-force oracles before
# trusting it.
KNOWN_IDENTITIES: tuple[tuple[str, str], ...] = (
    ("(x)+x", "x"),
    ("x(x)*", "x"),
    ("((x)+)+", "(x)+"),
    ("((x)*)*", "(x)*"),
    ("(x)+(y)+", "(y)+(x)+"),
    ("(x)*(y)*", "(y)*(x)*"),
    ("((x)+)*", "(x)+"),
    ("((x)*)+", "(x)*"),
    ("(xy)+", "(x(y)+)+"),
    ("(xy)*", "((x)*y)*"),
    ("((x)+y)+", "(x)+(y)+"),
    ("(x(y)*)*", "(x)*(y)*"),
)

KNOWN_NON_IDENTITIES: tuple[tuple[str, str], ...] = (
    ("x", "(x)+(x)+"),
    ("(x)+", "(x)*"),
    ("xy", "yx"),
    ("(xy)+", "(x)+(y)+"),
    ("(x(y)*)*", "(x)*"),
)
