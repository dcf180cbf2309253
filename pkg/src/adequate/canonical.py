"""Canonical formulas: a representation-independent word for every tree.

Each vertex contributes a word built from its branches hanging away from the
trunk: a branch reached along an outgoing edge labelled ``a`` with hanging
word w becomes ``(aw)+``, an incoming one becomes ``(wa)*``.  Branch words
at a vertex are sorted (generators first, then ``( ) + *``) before
concatenation, which erases the vertex numbering; the trunk labels are then
interleaved with the trunk vertices' words.  Applied to a pruned tree this
word is a normal form.
"""

from __future__ import annotations

from collections import deque

from .formula import Formula, parse
from .homomorphism import exists_morphism
from .tree import SigmaTree, evaluate, trunk


def canonical_word(tree: SigmaTree) -> str:
    """The canonical formula text; identical for isomorphic trees.

    At most four characters per edge; computed in quadratic time.
    """
    alphabet = tree.alphabet
    letters = alphabet.letters
    omega_key = alphabet.omega_key
    n = tree.vertex_count
    adjacency = tree._adjacency
    trunk_info = trunk(tree)

    visited = bytearray(n)
    for v in trunk_info.vertices:
        visited[v] = 1
    # Breadth-first away from the trunk; children recorded per vertex.
    children: list[list[tuple[int, int, int]]] = [[] for _ in range(n)]
    queue = deque(trunk_info.vertices)
    offtrunk_order: list[int] = []
    while queue:
        v = queue.popleft()
        for letter_index, rev, w in adjacency[v]:
            if not visited[w]:
                visited[w] = 1
                children[v].append((letter_index, rev, w))
                offtrunk_order.append(w)
                queue.append(w)

    hanging = [""] * n

    def assemble(v: int) -> str:
        taus = []
        for letter_index, rev, w in children[v]:
            if rev:
                taus.append("(" + hanging[w] + letters[letter_index] + ")*")
            else:
                taus.append("(" + letters[letter_index] + hanging[w] + ")+")
        if len(taus) > 1:
            taus.sort(key=omega_key)
        return "".join(taus)

    for v in reversed(offtrunk_order):
        hanging[v] = assemble(v)

    parts = [assemble(trunk_info.vertices[0])]
    for label, v in zip(trunk_info.labels, trunk_info.vertices[1:]):
        parts.append(label)
        parts.append(assemble(v))
    return "".join(parts)


def canonical_formula(tree: SigmaTree) -> Formula:
    """The canonical word as a parsed formula."""
    return parse(canonical_word(tree), tree.alphabet)


def evaluate_roundtrip_check(tree: SigmaTree) -> bool:
    """True iff the canonical formula evaluates back to the same tree.

    Sameness is established without invoking the canonical word again: equal
    vertex counts plus morphisms both ways.
    """
    again = evaluate(canonical_formula(tree))
    return (
        again.vertex_count == tree.vertex_count
        and exists_morphism(again, tree)
        and exists_morphism(tree, again)
    )
