"""Birooted edge-labelled trees and the unpruned operations on them.

A tree here is a finite directed graph whose underlying undirected graph is
a tree, with edges labelled by generators and two distinguished vertices
(start and end) joined by a directed path, the trunk.  Vertex numbering is a
representation artifact: two trees differing only by renumbering describe
the same abstract value.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, NamedTuple, Optional

from .errors import AlphabetMismatch, BadVertexId, NoTrunk, NotATree
from .formula import Alphabet, Formula, Letter, UnaryOp


class Edge(NamedTuple):
    label: str
    source: int
    target: int


class SignedLabel(NamedTuple):
    """A label read with a direction: ``reverse`` means against the arrow.

    An edge "from u to v labelled (a, reverse)" is an actual a-labelled edge
    from v to u.  Bundling label and direction lets both algorithms match
    edges with a single key.
    """

    letter: str
    reverse: bool


class Trunk(NamedTuple):
    vertices: tuple[int, ...]
    labels: tuple[str, ...]


@dataclass(frozen=True)
class TraversalOrder:
    """Deterministic depth-first numbering of a tree, rooted at the start vertex.

    ``order[p]`` is the vertex at position ``p`` (``order[0]`` is the start),
    ``position`` is its inverse.  ``parent`` maps each non-root vertex to its
    DFS parent and the signed label read from the parent towards the child.
    ``children`` lists, per position, the child positions with those labels.
    ``span`` gives per vertex the half-open position range of its subtree,
    i.e. its descendants.
    """

    order: tuple[int, ...]
    position: tuple[int, ...]
    parent: tuple[Optional[tuple[int, SignedLabel]], ...]
    children: tuple[tuple[tuple[int, SignedLabel], ...], ...]
    span: tuple[tuple[int, int], ...]


@dataclass(frozen=True)
class SigmaTree:
    """A birooted labelled tree over a fixed alphabet.

    Invariants (enforced by :func:`validate`, preserved by all operations):
    exactly ``vertex_count - 1`` edges forming a connected undirected tree on
    vertices ``0..vertex_count-1``, and a directed path from start to end.
    Instances are immutable; derived structures are cached on first use.
    """

    alphabet: Alphabet
    vertex_count: int
    start: int
    end: int
    edges: tuple[Edge, ...]

    def __post_init__(self):
        object.__setattr__(self, "edges", tuple(Edge(*e) for e in self.edges))

    @cached_property
    def _adjacency(self) -> tuple[tuple[tuple[int, int, int], ...], ...]:
        # Per vertex: (letter index, 0 out / 1 in, neighbour), sorted --
        # this fixes the traversal tie-break and groups equal signed labels.
        index = self.alphabet.index
        adj: list[list[tuple[int, int, int]]] = [[] for _ in range(self.vertex_count)]
        for label, s, t in self.edges:
            li = index(label)
            adj[s].append((li, 0, t))
            adj[t].append((li, 1, s))
        return tuple(tuple(sorted(entries)) for entries in adj)

    @cached_property
    def _edge_groups(self) -> dict[SignedLabel, tuple[tuple[int, int], ...]]:
        # Signed label -> pairs (x, y) such that there is an edge so labelled
        # from x to y (reverse labels list actual edges backwards).
        groups: dict[SignedLabel, list[tuple[int, int]]] = {}
        for label, s, t in self.edges:
            groups.setdefault(SignedLabel(label, False), []).append((s, t))
            groups.setdefault(SignedLabel(label, True), []).append((t, s))
        return {k: tuple(v) for k, v in groups.items()}

    @cached_property
    def _edge_set(self) -> frozenset[Edge]:
        return frozenset(self.edges)

    @cached_property
    def _traversal(self) -> TraversalOrder:
        return _compute_traversal(self)


def validate(
    vertex_count: int,
    start: int,
    end: int,
    edges: Iterable[tuple[str, int, int]],
    alphabet: Alphabet,
) -> SigmaTree:
    """Check all tree invariants and return the tree, or raise."""
    if vertex_count < 1:
        raise BadVertexId(f"vertex_count must be positive, got {vertex_count}")
    for v, role in ((start, "start"), (end, "end")):
        if not 0 <= v < vertex_count:
            raise BadVertexId(f"{role} vertex {v} out of range 0..{vertex_count - 1}")
    edge_tuple = tuple(Edge(label, s, t) for label, s, t in edges)
    for label, s, t in edge_tuple:
        if not (0 <= s < vertex_count and 0 <= t < vertex_count):
            raise BadVertexId(f"edge ({label!r},{s},{t}) references a vertex out of range")
        alphabet.index(label)
    if len(edge_tuple) != vertex_count - 1:
        raise NotATree(f"{len(edge_tuple)} edges on {vertex_count} vertices")
    tree = SigmaTree(alphabet, vertex_count, start, end, edge_tuple)
    traversal_order = tree._traversal
    if len(traversal_order.order) != vertex_count:
        raise NotATree("underlying graph is not connected")
    v = end
    while v != start:
        parent_vertex, slab = traversal_order.parent[v]
        if slab.reverse:
            raise NoTrunk(f"edge between {parent_vertex} and {v} points against the trunk")
        v = parent_vertex
    return tree


def trivial_tree(alphabet: Alphabet) -> SigmaTree:
    """The single-vertex tree; the identity element in monoid modes."""
    return SigmaTree(alphabet, 1, 0, 0, ())


def base_tree(letter: str, alphabet: Alphabet) -> SigmaTree:
    """Two vertices joined by one ``letter``-labelled edge, start to end."""
    alphabet.index(letter)
    return SigmaTree(alphabet, 2, 0, 1, (Edge(letter, 0, 1),))


def unpruned_product(x: SigmaTree, y: SigmaTree) -> SigmaTree:
    """Glue ``y`` onto ``x``, identifying y's start with x's end.

    Renumbering convention: x keeps its vertex ids; y's non-start vertices
    follow in their original relative order.  This makes results
    bit-reproducible (the abstract operation is only defined up to
    isomorphism).
    """
    if x.alphabet != y.alphabet:
        raise AlphabetMismatch("operands are over different alphabets")
    nx = x.vertex_count
    y_start = y.start
    x_end = x.end

    def renumber(v: int) -> int:
        if v == y_start:
            return x_end
        return nx + (v if v < y_start else v - 1)

    edges = x.edges + tuple(Edge(l, renumber(s), renumber(t)) for l, s, t in y.edges)
    return SigmaTree(x.alphabet, nx + y.vertex_count - 1, x.start, renumber(y.end), edges)


def unpruned_plus(x: SigmaTree) -> SigmaTree:
    """Same labelled graph and start; the end moves onto the start."""
    return SigmaTree(x.alphabet, x.vertex_count, x.start, x.start, x.edges)


def unpruned_star(x: SigmaTree) -> SigmaTree:
    """Same labelled graph and end; the start moves onto the end."""
    return SigmaTree(x.alphabet, x.vertex_count, x.end, x.end, x.edges)


def evaluate(formula: Formula) -> SigmaTree:
    """Evaluate a formula to its unpruned tree.

    Depth-first over the syntax tree, combining base and trivial trees with
    the unpruned operations; the result has exactly one edge per generator
    occurrence.  Runs in quadratic time in the formula length.
    """
    alphabet = formula.alphabet
    acc: list[SigmaTree] = [trivial_tree(alphabet)]
    ops: list[UnaryOp | None] = [None]
    streams = [iter(formula.factors)]
    while True:
        descended = False
        for item in streams[-1]:
            if type(item) is Letter:
                acc[-1] = unpruned_product(acc[-1], base_tree(item.letter, alphabet))
            else:
                acc.append(trivial_tree(alphabet))
                ops.append(item.op)
                streams.append(iter(item.body.factors))
                descended = True
                break
        if descended:
            continue
        streams.pop()
        tree = acc.pop()
        op = ops.pop()
        if op is None:
            return tree
        tree = unpruned_plus(tree) if op is UnaryOp.PLUS else unpruned_star(tree)
        acc[-1] = unpruned_product(acc[-1], tree)


def _compute_traversal(tree: SigmaTree) -> TraversalOrder:
    n = tree.vertex_count
    letters = tree.alphabet.letters
    adj = tree._adjacency
    position = [-1] * n
    order = [tree.start]
    position[tree.start] = 0
    parent: list[Optional[tuple[int, SignedLabel]]] = [None] * n
    span = [(0, 0)] * n
    children: list[list[tuple[int, SignedLabel]]] = [[] for _ in range(n)]
    stack = [(tree.start, iter(adj[tree.start]))]
    while stack:
        v, neighbours = stack[-1]
        descended = False
        for li, rev, w in neighbours:
            if position[w] < 0:
                slab = SignedLabel(letters[li], bool(rev))
                position[w] = len(order)
                children[position[v]].append((position[w], slab))
                parent[w] = (v, slab)
                order.append(w)
                stack.append((w, iter(adj[w])))
                descended = True
                break
        if not descended:
            stack.pop()
            span[v] = (position[v], len(order))
    return TraversalOrder(
        tuple(order),
        tuple(position),
        tuple(parent),
        tuple(tuple(c) for c in children),
        tuple(span),
    )


def traversal(tree: SigmaTree) -> TraversalOrder:
    """The deterministic depth-first numbering used by all algorithms.

    Neighbours are visited by ascending (letter rank, direction with forward
    first, original neighbour id), so every run over the same representation
    produces the same numbering.
    """
    return tree._traversal


def trunk(tree: SigmaTree) -> Trunk:
    """Vertices t0..tq and labels b1..bq of the directed start-to-end path."""
    tr = tree._traversal
    vertices = [tree.end]
    labels = []
    v = tree.end
    while v != tree.start:
        parent_vertex, slab = tr.parent[v]
        if slab.reverse:
            raise NoTrunk(f"edge between {parent_vertex} and {v} points against the trunk")
        labels.append(slab.letter)
        vertices.append(parent_vertex)
        v = parent_vertex
    vertices.reverse()
    labels.reverse()
    return Trunk(tuple(vertices), tuple(labels))


def descendants(tree: SigmaTree, u: int) -> frozenset[int]:
    """All vertices whose path to the start vertex passes through ``u``."""
    if not 0 <= u < tree.vertex_count:
        raise BadVertexId(f"vertex {u} out of range")
    tr = tree._traversal
    lo, hi = tr.span[u]
    return frozenset(tr.order[lo:hi])


def to_json(tree: SigmaTree) -> str:
    """Canonical JSON form; field order and edge order are fixed."""
    obj = {
        "alphabet": str(tree.alphabet),
        "n": tree.vertex_count,
        "start": tree.start,
        "end": tree.end,
        "edges": [{"l": l, "s": s, "t": t} for l, s, t in tree.edges],
    }
    return json.dumps(obj, separators=(",", ":"))


def from_json(text: str) -> SigmaTree:
    """Parse and validate the canonical JSON form."""
    obj = json.loads(text)
    try:
        alphabet = Alphabet.from_string(obj["alphabet"])
        edges = [(e["l"], e["s"], e["t"]) for e in obj["edges"]]
        return validate(obj["n"], obj["start"], obj["end"], edges, alphabet)
    except (KeyError, TypeError) as exc:
        raise ValueError(f"malformed tree JSON: {exc!r}") from exc


def to_dot(tree: SigmaTree, name: str = "sigma_tree") -> str:
    """DOT export: start drawn as a diamond, end as a double circle."""
    lines = [f"digraph {name} {{"]
    for v in range(tree.vertex_count):
        if v == tree.start == tree.end:
            lines.append(f"  {v} [shape=diamond, peripheries=3];")
        elif v == tree.start:
            lines.append(f"  {v} [shape=diamond];")
        elif v == tree.end:
            lines.append(f"  {v} [shape=doublecircle];")
        else:
            lines.append(f"  {v};")
    for l, s, t in tree.edges:
        lines.append(f'  {s} -> {t} [label="{l}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
