"""Deciding whether one tree maps into another.

The decision procedure is constraint propagation: every vertex of the source
tree keeps a set of candidate images in the target, the sets are filtered
once along each source edge in reverse depth-first order, and a morphism
exists exactly when the start vertex keeps a candidate.  Candidate sets are
bitmasks, giving O(nm) time overall for trees on n and m vertices.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Optional

from .errors import AlphabetMismatch
from .tree import SigmaTree


@dataclass(frozen=True)
class VertexMorphism:
    """A morphism given by its vertex map; the edge map is induced.

    Between two fixed vertices of a tree there is at most one edge, so a
    vertex map that preserves labelled edges determines the edge map.
    """

    mapping: tuple[int, ...]

    def __call__(self, v: int) -> int:
        return self.mapping[v]


@dataclass
class CandidateSets:
    """Candidate images per source vertex, in traversal position order.

    ``masks[p]`` has bit ``v`` set when target vertex ``v`` is still a
    possible image of the source vertex at position ``p``.  Masks only ever
    shrink as the propagation runs.
    """

    masks: list[int]
    target_count: int

    def contains(self, pos: int, v: int) -> bool:
        return (self.masks[pos] >> v) & 1 == 1

    def members(self, pos: int) -> list[int]:
        mask = self.masks[pos]
        return [v for v in range(self.target_count) if (mask >> v) & 1]


def _check_alphabets(t1: SigmaTree, t2: SigmaTree) -> None:
    if t1.alphabet is not t2.alphabet and t1.alphabet != t2.alphabet:
        raise AlphabetMismatch("trees are over different alphabets")


def _propagate(t1: SigmaTree, t2: SigmaTree) -> list[int]:
    """Run the filtering pass; returns final masks by traversal position."""
    tr = t1._traversal
    masks = [(1 << t2.vertex_count) - 1] * t1.vertex_count
    masks[0] &= 1 << t2.start
    masks[tr.position[t1.end]] &= 1 << t2.end
    children = tr.children
    groups = t2._edge_groups
    if t2.vertex_count <= 64:
        # Small targets: direct bit tests on machine-size ints.
        for p in range(t1.vertex_count - 1, -1, -1):
            bp = masks[p]
            for cp, slab in children[p]:
                bc = masks[cp]
                bstar = 0
                for x, y in groups.get(slab, ()):
                    if (bc >> y) & 1:
                        bstar |= 1 << x
                bp &= bstar
            masks[p] = bp
        return masks
    nbytes = (t2.vertex_count + 7) // 8
    for p in range(t1.vertex_count - 1, -1, -1):
        bp = masks[p]
        for cp, slab in children[p]:
            # Wide masks: byte views keep each bit test O(1).
            member = masks[cp].to_bytes(nbytes, "little")
            buf = bytearray(nbytes)
            for x, y in groups.get(slab, ()):
                if (member[y >> 3] >> (y & 7)) & 1:
                    buf[x >> 3] |= 1 << (x & 7)
            bp &= int.from_bytes(buf, "little")
        masks[p] = bp
    return masks


def candidate_sets(t1: SigmaTree, t2: SigmaTree) -> CandidateSets:
    """The fully filtered candidate sets for maps from ``t1`` into ``t2``."""
    _check_alphabets(t1, t2)
    return CandidateSets(_propagate(t1, t2), t2.vertex_count)


def exists_morphism(t1: SigmaTree, t2: SigmaTree) -> bool:
    """True iff there is a morphism from ``t1`` to ``t2``.

    Runs the full propagation pass and answers from the start vertex's
    candidate set.
    """
    _check_alphabets(t1, t2)
    return _propagate(t1, t2)[0] != 0


def extract_morphism(t1: SigmaTree, t2: SigmaTree) -> Optional[VertexMorphism]:
    """A concrete witness morphism, or None if none exists.

    Images are assigned in traversal order, always choosing the least
    admissible target vertex, so the witness is deterministic.
    """
    _check_alphabets(t1, t2)
    masks = _propagate(t1, t2)
    if masks[0] == 0:
        return None
    tr = t1._traversal
    groups = t2._edge_groups
    mapping = [-1] * t1.vertex_count
    first = masks[0]
    mapping[t1.start] = (first & -first).bit_length() - 1
    for p in range(1, t1.vertex_count):
        v = tr.order[p]
        parent_vertex, slab = tr.parent[v]
        src = mapping[parent_vertex]
        mask = masks[p]
        best = -1
        for x, y in groups.get(slab, ()):
            if x == src and (mask >> y) & 1 and (best < 0 or y < best):
                best = y
        # The propagation pass guarantees a supported candidate here.
        assert best >= 0
        mapping[v] = best
    return VertexMorphism(tuple(mapping))


def is_morphism(t1: SigmaTree, t2: SigmaTree, mapping: tuple[int, ...]) -> bool:
    """Check the morphism conditions for an explicit vertex map."""
    m = t2.vertex_count
    if len(mapping) != t1.vertex_count:
        return False
    if any(not 0 <= v < m for v in mapping):
        return False
    if mapping[t1.start] != t2.start or mapping[t1.end] != t2.end:
        return False
    edge_set = t2._edge_set
    return all((l, mapping[s], mapping[t]) in edge_set for l, s, t in t1.edges)


def exists_morphism_bruteforce(t1: SigmaTree, t2: SigmaTree) -> bool:
    """Oracle: plain backtracking over start/end-respecting edge-compatible maps.

    Intended for small inputs (say a dozen vertices); exponential in the
    worst case.
    """
    _check_alphabets(t1, t2)
    tr = t1._traversal
    n = t1.vertex_count
    order, parent = tr.order, tr.parent
    groups = t2._edge_groups
    end1, end2 = t1.end, t2.end
    mapping = [-1] * n

    def place(k: int) -> bool:
        if k == n:
            return True
        v = order[k]
        parent_vertex, slab = parent[v]
        src = mapping[parent_vertex]
        for x, y in groups.get(slab, ()):
            if x != src:
                continue
            if v == end1 and y != end2:
                continue
            mapping[v] = y
            if place(k + 1):
                return True
        return False

    if t1.start == t1.end and t2.start != t2.end:
        return False
    mapping[t1.start] = t2.start
    return place(1)


def _all_morphisms(t1: SigmaTree, t2: SigmaTree) -> Iterator[tuple[int, ...]]:
    """Yield the vertex map of every morphism from t1 to t2 (small inputs)."""
    _check_alphabets(t1, t2)
    tr = t1._traversal
    n = t1.vertex_count
    order, parent = tr.order, tr.parent
    groups = t2._edge_groups
    end1, end2 = t1.end, t2.end
    mapping = [-1] * n

    def place(k: int) -> Iterator[tuple[int, ...]]:
        if k == n:
            yield tuple(mapping)
            return
        v = order[k]
        parent_vertex, slab = parent[v]
        src = mapping[parent_vertex]
        for x, y in groups.get(slab, ()):
            if x != src:
                continue
            if v == end1 and y != end2:
                continue
            mapping[v] = y
            yield from place(k + 1)

    if t1.start == t1.end and t2.start != t2.end:
        return
    mapping[t1.start] = t2.start
    yield from place(1)
