"""The formula language over a generator alphabet.

A formula is a word over the generators plus the four symbols ``( ) + *``:
a (possibly empty) sequence of factors, each factor either a bare generator
or a parenthesised group followed by a postfix ``+`` or ``*``.  Bare groups
without a trailing operator are rejected so that every abstract formula has
exactly one rendering.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import cached_property
from typing import TYPE_CHECKING, Union

from .errors import (
    AlphabetMismatch,
    BareGroup,
    DanglingUnary,
    EmptyNotAllowed,
    OpNotInSignature,
    UnbalancedParenthesis,
    UnknownSymbol,
)

if TYPE_CHECKING:
    from .solver import Mode

RESERVED = "()+*"


class UnaryOp(Enum):
    PLUS = "+"
    STAR = "*"


@dataclass(frozen=True)
class Alphabet:
    """Ordered generator symbols; the order fixes the canonical word order."""

    letters: tuple[str, ...]

    def __post_init__(self):
        object.__setattr__(self, "letters", tuple(self.letters))
        if not self.letters:
            raise ValueError("alphabet must not be empty")
        seen = set()
        for ch in self.letters:
            if len(ch) != 1 or ch in RESERVED or ch.isspace() or not ch.isprintable():
                raise ValueError(f"invalid generator {ch!r}")
            if ch in seen:
                raise ValueError(f"duplicate generator {ch!r}")
            seen.add(ch)

    @classmethod
    def from_string(cls, text: str) -> "Alphabet":
        return cls(tuple(text))

    @cached_property
    def _index(self) -> dict[str, int]:
        return {ch: i for i, ch in enumerate(self.letters)}

    def __contains__(self, ch: str) -> bool:
        return ch in self._index

    def __len__(self) -> int:
        return len(self.letters)

    def __str__(self) -> str:
        return "".join(self.letters)

    def index(self, ch: str) -> int:
        try:
            return self._index[ch]
        except KeyError:
            raise UnknownSymbol(detail=f"{ch!r} is not a generator") from None

    @cached_property
    def _omega_table(self) -> dict[int, str]:
        # Word order: generators in alphabet order, then ( ) + *.
        ranks = {ch: i for i, ch in enumerate(self.letters)}
        for j, ch in enumerate(RESERVED):
            ranks[ch] = len(self.letters) + j
        return str.maketrans({ch: chr(r) for ch, r in ranks.items()})

    def omega_key(self, word: str) -> str:
        """Map a formula word to a string whose natural order is the word order."""
        return word.translate(self._omega_table)


@dataclass(frozen=True)
class Letter:
    letter: str


@dataclass(frozen=True)
class Unary:
    op: UnaryOp
    body: "Formula"


Factor = Union[Letter, Unary]


@dataclass(frozen=True)
class Formula:
    factors: tuple[Factor, ...]
    alphabet: Alphabet


def _allowed_ops(mode: "Mode | None") -> frozenset[UnaryOp]:
    if mode is None:
        return frozenset(UnaryOp)
    return mode.allowed_ops()


def parse(text: str, alphabet: Alphabet, mode: "Mode | None" = None) -> Formula:
    """Parse formula text; ``mode`` restricts the signature and emptiness.

    Grammar: ``Expr := Factor*``, ``Factor := letter | '(' Expr ')' ('+'|'*')``.
    Whitespace between tokens is ignored.  With no mode, both unary symbols
    are admitted and empty (sub)formulas are legal.
    """
    allowed = _allowed_ops(mode)
    allow_empty = mode is None or not mode.semigroup
    known = alphabet._index
    stack: list[list[Factor]] = [[]]
    opens: list[int] = []
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch in known:
            stack[-1].append(Letter(ch))
            i += 1
            continue
        if ch == "(":
            stack.append([])
            opens.append(i)
            i += 1
            continue
        if ch == ")":
            if len(stack) == 1:
                raise UnbalancedParenthesis(i)
            body = stack.pop()
            open_at = opens.pop()
            i += 1
            while i < n and text[i].isspace():
                i += 1
            if i >= n or text[i] not in "+*":
                raise BareGroup(i if i < n else n)
            op = UnaryOp(text[i])
            if op not in allowed:
                raise OpNotInSignature(i, f"{op.value!r} is not in the signature of this mode")
            if not body and not allow_empty:
                raise EmptyNotAllowed(open_at, "empty group in semigroup mode")
            stack[-1].append(Unary(op, Formula(tuple(body), alphabet)))
            i += 1
            continue
        if ch in "+*":
            raise DanglingUnary(i, f"{ch!r} must follow a closing parenthesis")
        raise UnknownSymbol(i, f"{ch!r}")
    if len(stack) > 1:
        raise UnbalancedParenthesis(n)
    if not stack[0] and not allow_empty:
        raise EmptyNotAllowed(0, "empty formula in semigroup mode")
    return Formula(tuple(stack[0]), alphabet)


def render(formula: Formula) -> str:
    """Emit the unique whitespace-free text of a formula; inverse of parse."""
    out: list[str] = []
    stack: list[Factor | str] = list(reversed(formula.factors))
    while stack:
        item = stack.pop()
        if type(item) is str:
            out.append(item)
        elif type(item) is Letter:
            out.append(item.letter)
        else:
            out.append("(")
            stack.append(")" + item.op.value)
            stack.extend(reversed(item.body.factors))
    return "".join(out)


def occurrence_count(formula: Formula) -> int:
    """Number of generator occurrences in the formula."""
    count = 0
    stack: list[Factor] = list(formula.factors)
    while stack:
        item = stack.pop()
        if type(item) is Letter:
            count += 1
        else:
            stack.extend(item.body.factors)
    return count


def occurring_letters(formula: Formula) -> tuple[str, ...]:
    """Distinct generators of the formula, in first-occurrence order."""
    seen: set[str] = set()
    out: list[str] = []
    stack: list[Factor] = list(reversed(formula.factors))
    while stack:
        item = stack.pop()
        if type(item) is Letter:
            if item.letter not in seen:
                seen.add(item.letter)
                out.append(item.letter)
        else:
            stack.extend(reversed(item.body.factors))
    return tuple(out)


def concat(left: Formula, right: Formula) -> Formula:
    if left.alphabet != right.alphabet:
        raise AlphabetMismatch("formulas are over different alphabets")
    return Formula(left.factors + right.factors, left.alphabet)
