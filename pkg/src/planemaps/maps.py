"""Rooted plane maps with labelled faces and one marked corner per face.

A map on 2E darts is stored as a pair of permutations: ``twin`` swaps
the two darts of every edge, ``next`` walks the contour of the face
lying to the left of a dart.  Faces carry labels 1..r and each face i
distinguishes one corner through ``marked[i-1]``, the dart whose
origin corner is the marked one.  The clockwise rotation around the
origin vertex of a dart is the composition sigma = next o twin.

Corners are identified with the dart they precede in the face contour:
the corner before dart d is the sector swept from sigma^(-1)(d) to d
around the origin of d.  Slots number the insertion positions of a
face relative to the marked corner; slot 0 and slot deg both sit in
the marked corner, on the side preceding respectively following the
mark.
"""

from __future__ import annotations

import json
from collections import deque
from typing import Iterable, NamedTuple

from .errors import (
    BadMark,
    Disconnected,
    FaceMismatch,
    NotInvolution,
    NotPermutation,
    ParseError,
    WrongGenus,
)


class CornerSlot(NamedTuple):
    """Insertion slot of a face: ``face`` is 1-based, ``slot`` in 0..deg."""

    face: int
    slot: int


def _as_perm(data: Iterable[int], name: str) -> tuple[int, ...]:
    try:
        seq = tuple(int(x) for x in data)
    except (TypeError, ValueError):
        raise NotPermutation(f"{name} is not a sequence of integers")
    n = len(seq)
    if sorted(seq) != list(range(n)):
        raise NotPermutation(f"{name} is not a permutation of 0..{n - 1}")
    return seq


class PlaneMap:
    """Immutable rooted plane map of genus zero."""

    __slots__ = (
        "twin",
        "next",
        "face",
        "marked",
        "_prev",
        "_contours",
        "_vertices",
        "_vertex_of",
    )

    def __init__(
        self,
        twin: Iterable[int],
        next_: Iterable[int],
        face: Iterable[int],
        marked: Iterable[int],
    ) -> None:
        twin_t = _as_perm(twin, "twin")
        next_t = _as_perm(next_, "next")
        n = len(twin_t)
        if len(next_t) != n:
            raise NotPermutation("twin and next act on different dart sets")
        if n == 0 or n % 2:
            raise NotInvolution("twin must pair an even, positive number of darts")
        for d in range(n):
            if twin_t[twin_t[d]] != d or twin_t[d] == d:
                raise NotInvolution("twin is not a fixed-point-free involution")

        try:
            face_t = tuple(int(x) for x in face)
        except (TypeError, ValueError):
            raise FaceMismatch("face labels are not integers")
        if len(face_t) != n:
            raise FaceMismatch("face labelling does not cover the dart set")

        # walk next-orbits; each orbit is one face and must carry one label
        contours: dict[int, tuple[int, ...]] = {}
        seen = [False] * n
        for d in range(n):
            if seen[d]:
                continue
            orbit = []
            e = d
            while not seen[e]:
                seen[e] = True
                orbit.append(e)
                e = next_t[e]
            if e != d:
                raise NotPermutation("next is not a permutation")
            label = face_t[d]
            if any(face_t[x] != label for x in orbit):
                raise FaceMismatch("face label changes along a contour")
            if label in contours:
                raise FaceMismatch(f"two contours share the label {label}")
            contours[label] = tuple(orbit)
        r = len(contours)
        if sorted(contours) != list(range(1, r + 1)):
            raise FaceMismatch("face labels are not exactly 1..r")

        try:
            marked_t = tuple(int(x) for x in marked)
        except (TypeError, ValueError):
            raise BadMark("marked darts are not integers")
        if len(marked_t) != r:
            raise BadMark("need exactly one marked dart per face")
        for i, d in enumerate(marked_t, start=1):
            if not 0 <= d < n or face_t[d] != i:
                raise BadMark(f"marked dart of face {i} does not lie on it")

        # connectivity under the group generated by next and twin
        reach = [False] * n
        reach[0] = True
        stack = [0]
        while stack:
            d = stack.pop()
            for e in (next_t[d], twin_t[d]):
                if not reach[e]:
                    reach[e] = True
                    stack.append(e)
        if not all(reach):
            raise Disconnected("darts do not form a single connected map")

        # rotate contours so each starts at its marked dart
        normed = []
        for i in range(1, r + 1):
            orbit = contours[i]
            k = orbit.index(marked_t[i - 1])
            normed.append(orbit[k:] + orbit[:k])

        prev_t = [0] * n
        for d in range(n):
            prev_t[next_t[d]] = d

        # vertices are the orbits of sigma = next o twin, clockwise
        vertex_of = [-1] * n
        vertices = []
        for d in range(n):
            if vertex_of[d] >= 0:
                continue
            orbit = []
            e = d
            while vertex_of[e] < 0:
                vertex_of[e] = len(vertices)
                orbit.append(e)
                e = next_t[twin_t[e]]
            vertices.append(tuple(orbit))

        if len(vertices) - n // 2 + r != 2:
            raise WrongGenus("Euler characteristic is not 2")

        object.__setattr__(self, "twin", twin_t)
        object.__setattr__(self, "next", next_t)
        object.__setattr__(self, "face", face_t)
        object.__setattr__(self, "marked", marked_t)
        object.__setattr__(self, "_prev", tuple(prev_t))
        object.__setattr__(self, "_contours", tuple(normed))
        object.__setattr__(self, "_vertices", tuple(vertices))
        object.__setattr__(self, "_vertex_of", tuple(vertex_of))

    def __setattr__(self, name, value):
        raise AttributeError("PlaneMap is immutable")

    # basic counts

    @property
    def n_darts(self) -> int:
        return len(self.twin)

    @property
    def n_edges(self) -> int:
        return len(self.twin) // 2

    @property
    def n_faces(self) -> int:
        return len(self.marked)

    @property
    def n_vertices(self) -> int:
        return len(self._vertices)

    @property
    def degrees(self) -> tuple[int, ...]:
        return tuple(len(c) for c in self._contours)

    def degree(self, i: int) -> int:
        return len(self._contours[i - 1])

    # incidence

    def contour(self, i: int) -> tuple[int, ...]:
        """Face contour of face i, starting at its marked dart."""
        return self._contours[i - 1]

    def face_of(self, d: int) -> int:
        return self.face[d]

    def prev(self, d: int) -> int:
        return self._prev[d]

    def sigma(self, d: int) -> int:
        """Clockwise neighbour of d around its origin vertex."""
        return self.next[self.twin[d]]

    def sigma_inv(self, d: int) -> int:
        return self.twin[self._prev[d]]

    def vertex_of(self, d: int) -> int:
        """Index of the origin vertex of d."""
        return self._vertex_of[d]

    def head_of(self, d: int) -> int:
        """Index of the vertex the dart points to."""
        return self._vertex_of[self.twin[d]]

    def vertices(self) -> tuple[tuple[int, ...], ...]:
        """All vertices as clockwise dart cycles."""
        return self._vertices

    def vertex_darts(self, v: int) -> tuple[int, ...]:
        return self._vertices[v]

    def edges(self) -> tuple[tuple[int, int], ...]:
        """Edges as (d, twin(d)) with d < twin(d), sorted by d."""
        return tuple(
            (d, self.twin[d]) for d in range(self.n_darts) if d < self.twin[d]
        )

    # corners and slots

    def corner_slot(self, d: int) -> CornerSlot:
        """Slot of the corner before d; the marked corner reports slot 0."""
        i = self.face[d]
        return CornerSlot(i, self._contours[i - 1].index(d))

    def slot_anchor(self, i: int, slot: int) -> int:
        """Dart whose preceding corner realises the given slot of face i."""
        a = self.degree(i)
        if not 0 <= slot <= a:
            raise ValueError(f"slot {slot} out of range for degree {a}")
        return self._contours[i - 1][slot % a]

    def corner_after(self, d: int) -> int:
        """After-dart of the corner following d in its contour."""
        return self.next[d]

    # rebuilding helpers

    def with_marked(self, i: int, d: int) -> "PlaneMap":
        """Copy of the map with face i marked at the corner before d."""
        marked = list(self.marked)
        marked[i - 1] = d
        return PlaneMap(self.twin, self.next, self.face, marked)

    def relabel(self, perm: Iterable[int]) -> "PlaneMap":
        """Rename darts by d -> perm[d]; the map stays the same."""
        p = _as_perm(perm, "perm")
        n = self.n_darts
        if len(p) != n:
            raise NotPermutation("perm acts on the wrong dart set")
        twin = [0] * n
        next_ = [0] * n
        face = [0] * n
        for d in range(n):
            twin[p[d]] = p[self.twin[d]]
            next_[p[d]] = p[self.next[d]]
            face[p[d]] = self.face[d]
        marked = [p[d] for d in self.marked]
        return PlaneMap(twin, next_, face, marked)

    # canonical form and serialization

    def canonical_relabeling(self) -> dict[int, int]:
        """Dart rename old -> new used by canonical_code.

        Breadth-first search from the marked dart of face 1, exploring
        next before twin.  Two isomorphic maps assign matching new ids
        to corresponding darts, so decorations can be compared across
        dart renames by passing them through this dict.
        """
        order: dict[int, int] = {}
        root = self.marked[0]
        order[root] = 0
        queue = deque([root])
        while queue:
            d = queue.popleft()
            for e in (self.next[d], self.twin[d]):
                if e not in order:
                    order[e] = len(order)
                    queue.append(e)
        return order

    def canonical_code(self) -> str:
        """Hex code invariant under dart renaming.

        Darts are renumbered by canonical_relabeling and the renumbered
        data is packed as big-endian 16-bit words.
        """
        order = self.canonical_relabeling()
        n = self.n_darts
        next_ = [0] * n
        twin = [0] * n
        face = [0] * n
        for d in range(n):
            next_[order[d]] = order[self.next[d]]
            twin[order[d]] = order[self.twin[d]]
            face[order[d]] = self.face[d]
        marked = [order[d] for d in self.marked]
        words = [self.n_faces, self.n_edges]
        words += next_ + twin + face + marked
        return b"".join(w.to_bytes(2, "big") for w in words).hex()

    def to_json(self) -> str:
        obj = {
            "type": list(self.degrees),
            "twin": list(self.twin),
            "next": list(self.next),
            "face": list(self.face),
            "marked": list(self.marked),
        }
        return json.dumps(obj)

    @classmethod
    def from_json(cls, text: str) -> "PlaneMap":
        try:
            obj = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ParseError(f"invalid JSON: {exc}") from None
        if not isinstance(obj, dict):
            raise ParseError("expected a JSON object")
        for key in ("type", "twin", "next", "face", "marked"):
            if key not in obj:
                raise ParseError(f"missing key {key!r}")
            val = obj[key]
            if not isinstance(val, list) or not all(
                isinstance(x, int) and not isinstance(x, bool) for x in val
            ):
                raise ParseError(f"key {key!r} must be a list of integers")
        if len(obj["twin"]) % 2:
            raise ParseError("odd number of darts")
        m = cls(obj["twin"], obj["next"], obj["face"], obj["marked"])
        if list(m.degrees) != obj["type"]:
            raise FaceMismatch(
                f"declared type {obj['type']} but contours have degrees "
                f"{list(m.degrees)}"
            )
        return m

    # comparison

    def _key(self):
        return (self.twin, self.next, self.face, self.marked)

    def __eq__(self, other) -> bool:
        if not isinstance(other, PlaneMap):
            return NotImplemented
        return self._key() == other._key()

    def __hash__(self) -> int:
        return hash(self._key())

    def __repr__(self) -> str:
        return f"PlaneMap(type={self.degrees}, E={self.n_edges})"


def build(
    map_type: Iterable[int],
    twin: Iterable[int],
    next_: Iterable[int],
    face: Iterable[int],
    marked: Iterable[int],
) -> PlaneMap:
    """Construct a map and check it against a prescribed degree tuple."""
    m = PlaneMap(twin, next_, face, marked)
    want = tuple(int(x) for x in map_type)
    if m.degrees != want:
        raise FaceMismatch(f"contours have degrees {m.degrees}, wanted {want}")
    return m
