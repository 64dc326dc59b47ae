"""Finite quivers: mutation, framing, restriction, green/red status,
and triangular-extension recognition/construction.

A quiver is stored as a skew-symmetric signed weight matrix over a
canonically ordered vertex list (mutables first, then frozens, each
sorted by token).  weight(v, w) > 0 means that many parallel arrows
v -> w; the signed encoding makes "no loops / no 2-cycles" structural.
"""

import re
from dataclasses import dataclass
from enum import Enum

import numpy as np

from ._kernels import INT64_MAX, mutate_matrix
from .errors import (
    AlreadyFramed,
    ArithmeticOverflow,
    EmptyPart,
    FrozenVertexMutation,
    FrozenVertexQuery,
    InconsistentCrossDirection,
    UnknownVertex,
    VertexCollision,
)

PRIME = "'"

_CHUNK = re.compile(r"-?\d+|\D+")


def token_key(token):
    """Sort key: numeric runs by value, other runs lexicographic.

    Puts "-2" before "0", "2a" before "10a", and "3" before "3'".
    """
    parts = []
    for chunk in _CHUNK.findall(token):
        try:
            parts.append((0, int(chunk), ""))
        except ValueError:
            parts.append((1, 0, chunk))
    return tuple(parts)


def frozen_companion(token):
    """The reserved decorated form of a mutable token (paper-style prime)."""
    return token + PRIME


class Direction(str, Enum):
    OUT = "out"
    IN = "in"
    DISJOINT = "disjoint"
    NOT_TRIANGULAR = "not_triangular"


@dataclass(frozen=True)
class VertexStatus:
    """Green/red flags of a mutable vertex, from frozen-incident arrows only.

    Both flags are true when the vertex touches no frozen vertex at all;
    sign coherence prevents is_green == is_red == False along mutation
    orbits of framed quivers, but the flags stay total on arbitrary input.
    """

    is_green: bool
    is_red: bool

    @property
    def is_mixed(self):
        return not self.is_green and not self.is_red

    @property
    def label(self):
        if self.is_green and self.is_red:
            return "isolated"
        if self.is_green:
            return "green"
        if self.is_red:
            return "red"
        return "mixed"


class Quiver:
    """Immutable finite quiver with a mutable/frozen vertex partition."""

    __slots__ = ("mutable", "frozen", "matrix", "_index")

    def __init__(self, mutable, frozen, weights):
        """Build from vertex iterables and {(v, w): weight} with weight > 0
        meaning arrows v -> w.  Pairs may appear in either orientation but
        not both; loops and frozen-frozen arrows are rejected.
        """
        mutable = tuple(sorted(dict.fromkeys(mutable), key=token_key))
        frozen = tuple(sorted(dict.fromkeys(frozen), key=token_key))
        collisions = set(mutable) & set(frozen)
        if collisions:
            raise VertexCollision(collisions)
        if len(mutable) + len(frozen) != len(set(mutable) | set(frozen)):
            raise VertexCollision(set(mutable) | set(frozen))
        object.__setattr__(self, "mutable", mutable)
        object.__setattr__(self, "frozen", frozen)
        index = {t: i for i, t in enumerate(mutable + frozen)}
        object.__setattr__(self, "_index", index)
        n = len(index)
        m = np.zeros((n, n), dtype=np.int64)
        for (v, w), wt in weights.items():
            if v not in index:
                raise UnknownVertex(v)
            if w not in index:
                raise UnknownVertex(w)
            if v == w and wt != 0:
                raise ValueError(f"loop at {v!r} not allowed")
            if not (-INT64_MAX <= int(wt) <= INT64_MAX):
                raise ArithmeticOverflow(f"weight {wt} out of checked range")
            i, j = index[v], index[w]
            if wt != 0 and m[j, i] != 0:
                raise ValueError(f"pair ({v!r}, {w!r}) given in both orientations")
            m[i, j] += wt
            m[j, i] -= wt
        nm = len(mutable)
        if np.any(m[nm:, nm:]):
            raise ValueError("arrows between frozen vertices are not allowed")
        m.setflags(write=False)
        object.__setattr__(self, "matrix", m)

    @classmethod
    def _from_matrix(cls, mutable, frozen, matrix):
        """Internal: adopt a canonical-order int64 matrix without rechecking."""
        q = cls.__new__(cls)
        object.__setattr__(q, "mutable", tuple(mutable))
        object.__setattr__(q, "frozen", tuple(frozen))
        object.__setattr__(q, "_index", {t: i for i, t in enumerate(q.mutable + q.frozen)})
        matrix = np.ascontiguousarray(matrix, dtype=np.int64)
        matrix.setflags(write=False)
        object.__setattr__(q, "matrix", matrix)
        return q

    def __setattr__(self, name, value):
        raise AttributeError("Quiver is immutable")

    @property
    def vertices(self):
        return self.mutable + self.frozen

    def is_mutable(self, token):
        if token not in self._index:
            raise UnknownVertex(token)
        return self._index[token] < len(self.mutable)

    def weight(self, v, w):
        for t in (v, w):
            if t not in self._index:
                raise UnknownVertex(t)
        return int(self.matrix[self._index[v], self._index[w]])

    def arrows(self):
        """Positive-weight arrows as (from, to, weight), canonical order."""
        out = []
        n = len(self.vertices)
        verts = self.vertices
        for i in range(n):
            for j in range(n):
                w = int(self.matrix[i, j])
                if w > 0:
                    out.append((verts[i], verts[j], w))
        return out

    def state_key(self):
        """Exact-state deduplication key under the canonical vertex order."""
        return self.matrix.tobytes()

    def __repr__(self):
        arrows = ", ".join(
            f"{a}->{b}" + (f" x{w}" if w > 1 else "") for a, b, w in self.arrows()
        )
        return f"Quiver(mutable={list(self.mutable)}, frozen={list(self.frozen)}, [{arrows}])"


@dataclass(frozen=True)
class FramedQuiver:
    """A quiver together with the mutable -> frozen companion bijection."""

    quiver: Quiver
    frame_map: dict

    def status(self, token):
        return vertex_status(self, token)

    def all_red(self):
        return all(self.status(v).is_red for v in self.quiver.mutable)


def quivers_equal(q1, q2):
    """Labelled equality: same vertex sets and tags, identical weights."""
    return (
        q1.mutable == q2.mutable
        and q1.frozen == q2.frozen
        and np.array_equal(q1.matrix, q2.matrix)
    )


def mutate(q, k):
    """Mutation at mutable vertex k; the input is unmodified."""
    if k not in q._index:
        raise UnknownVertex(k)
    if not q.is_mutable(k):
        raise FrozenVertexMutation(k)
    new = mutate_matrix(q.matrix, q._index[k], len(q.mutable))
    return Quiver._from_matrix(q.mutable, q.frozen, new)


def _frame_with(q, frame_arrow_sign):
    if q.frozen:
        raise AlreadyFramed("quiver already contains frozen vertices")
    frame_map = {v: frozen_companion(v) for v in q.mutable}
    collisions = set(frame_map.values()) & set(q.mutable)
    if collisions:
        raise VertexCollision(collisions)
    weights = {}
    for v, w, wt in q.arrows():
        weights[(v, w)] = wt
    for v, f in frame_map.items():
        weights[(v, f) if frame_arrow_sign > 0 else (f, v)] = 1
    quiver = Quiver(q.mutable, frame_map.values(), weights)
    return FramedQuiver(quiver=quiver, frame_map=frame_map)


def frame(q):
    """Framed quiver: one frozen companion i' per mutable i, arrow i -> i'."""
    return _frame_with(q, +1)


def coframe(q):
    """Coframed quiver: companion arrows reversed, i' -> i."""
    return _frame_with(q, -1)


def vertex_status(fq, v):
    # accepts a FramedQuiver or a bare Quiver with frozen vertices
    q = getattr(fq, "quiver", fq)
    if v not in q._index:
        raise UnknownVertex(v)
    if not q.is_mutable(v):
        raise FrozenVertexQuery(v)
    i = q._index[v]
    nm = len(q.mutable)
    frozen_row = q.matrix[nm:, i]
    is_green = not np.any(frozen_row > 0)  # no arrows frozen -> v
    is_red = not np.any(frozen_row < 0)  # no arrows v -> frozen
    return VertexStatus(is_green=is_green, is_red=is_red)


def restrict(q, s):
    """Induced subquiver on vertex set s, tags and weights inherited."""
    s = set(s)
    for t in s:
        if t not in q._index:
            raise UnknownVertex(t)
    mutable = [v for v in q.mutable if v in s]
    frozen = [v for v in q.frozen if v in s]
    idx = [q._index[v] for v in mutable + frozen]
    sub = q.matrix[np.ix_(idx, idx)]
    return Quiver._from_matrix(mutable, frozen, sub)


def classify_triangular(q, part):
    """Direction of the cut (part, complement): Out if every cross arrow
    leaves part, In if every cross arrow enters it, Disjoint if none."""
    part = set(part)
    for t in part:
        if t not in q._index:
            raise UnknownVertex(t)
    if not part or part >= set(q.vertices):
        raise EmptyPart("both sides of the cut must be nonempty")
    a = [q._index[v] for v in q.vertices if v in part]
    b = [q._index[v] for v in q.vertices if v not in part]
    cross = q.matrix[np.ix_(a, b)]
    has_out = bool(np.any(cross > 0))
    has_in = bool(np.any(cross < 0))
    if has_out and has_in:
        return Direction.NOT_TRIANGULAR
    if has_out:
        return Direction.OUT
    if has_in:
        return Direction.IN
    return Direction.DISJOINT


def triangular_extend(q1, q2, cross, direction):
    """Disjoint union of q1 and q2 plus cross arrows, all oriented q1 -> q2
    (Out) or q2 -> q1 (In).  cross is an iterable of (from, to, weight)."""
    direction = Direction(direction)
    if direction not in (Direction.OUT, Direction.IN):
        raise InconsistentCrossDirection(f"direction must be Out or In, got {direction}")
    v1, v2 = set(q1.vertices), set(q2.vertices)
    if v1 & v2:
        raise VertexCollision(v1 & v2)
    weights = {}
    for src in (q1, q2):
        for v, w, wt in src.arrows():
            weights[(v, w)] = weights.get((v, w), 0) + wt
    for v, w, wt in cross:
        if v not in v1 | v2:
            raise UnknownVertex(v)
        if w not in v1 | v2:
            raise UnknownVertex(w)
        if wt <= 0:
            raise ValueError("cross arrow weights must be positive")
        if direction is Direction.OUT:
            ok = v in v1 and w in v2
        else:
            ok = v in v2 and w in v1
        if not ok:
            raise InconsistentCrossDirection(
                f"cross arrow {v!r} -> {w!r} contradicts direction {direction.value}"
            )
        weights[(v, w)] = weights.get((v, w), 0) + wt
    return Quiver(
        tuple(q1.mutable) + tuple(q2.mutable),
        tuple(q1.frozen) + tuple(q2.frozen),
        weights,
    )
