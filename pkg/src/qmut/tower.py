"""Towers of embedded finite quivers, tower mutation, reddening schemes,
and the triangular-decomposition scheme builder.

Embeddings are canonicalized as inclusions: levels share a global vertex
namespace, so level i is literally the induced subquiver of level i+1 on
its own vertex set.  Every verdict about a tower is "ok up to depth N",
never unconditional.
"""

import math
import threading
from dataclasses import dataclass, field

from .core import (
    Direction,
    classify_triangular,
    mutate,
    quivers_equal,
    restrict,
    token_key,
)
from .errors import (
    DepthExceeded,
    NotTriangularAt,
    NoSeedFoundUpTo,
    SeedNotReddeningAt,
    VertexNotFound,
)
from .sequences import REDDENING, check_sequence, compose_triangular, find_reddening

UNBOUNDED = math.inf


class Tower:
    """Level provider i -> quiver for i >= 1, with nested vertex sets and
    the induced-subquiver chain property.

    Levels are computed lazily and memoized; the cache is write-once per
    key and guarded by a lock, so towers are safe to share across threads.
    """

    def __init__(self, provider, declared_depth=UNBOUNDED):
        self._provider = provider
        self.declared_depth = declared_depth
        self._cache = {}
        self._lock = threading.Lock()

    @classmethod
    def from_levels(cls, levels):
        levels = list(levels)
        return cls(lambda i: levels[i - 1], declared_depth=len(levels))

    def check_depth(self, depth):
        if depth > self.declared_depth:
            raise DepthExceeded(depth, self.declared_depth)

    def level(self, i):
        if i < 1:
            raise DepthExceeded(i, self.declared_depth)
        self.check_depth(i)
        with self._lock:
            if i not in self._cache:
                self._cache[i] = self._provider(i)
            return self._cache[i]

    def first_level_of(self, token, max_depth=None):
        """Minimal j with token in V(Q_j), scanning levels upward."""
        depth = self.declared_depth if max_depth is None else max_depth
        if depth is UNBOUNDED:
            raise DepthExceeded(depth, "a finite scan bound is required")
        i = 1
        while i <= depth:
            if token in self.level(i).vertices:
                return i
            i += 1
        raise VertexNotFound(token, depth)


@dataclass
class TowerReport:
    ok: bool
    depth: int
    failed_level: int = None
    reason: str = None

    def to_json(self):
        doc = {"ok": self.ok, "depth": self.depth}
        if not self.ok:
            doc["failed_level"] = self.failed_level
            doc["reason"] = self.reason
        return doc


def verify_tower(t, depth):
    """Check the vertex-chain and induced-chain invariants for levels
    1..depth; reports the first violating level."""
    t.check_depth(depth)
    for i in range(1, depth):
        lo, hi = t.level(i), t.level(i + 1)
        if not set(lo.vertices) <= set(hi.vertices):
            missing = sorted(set(lo.vertices) - set(hi.vertices), key=token_key)
            return TowerReport(
                ok=False,
                depth=depth,
                failed_level=i,
                reason=f"vertices {missing} of level {i} missing from level {i + 1}",
            )
        if lo.frozen or hi.frozen:
            return TowerReport(
                ok=False, depth=depth, failed_level=i, reason="tower levels must be unframed"
            )
        induced = restrict(hi, lo.vertices)
        if not quivers_equal(induced, lo):
            return TowerReport(
                ok=False,
                depth=depth,
                failed_level=i,
                reason=f"level {i} is not the induced subquiver of level {i + 1}",
            )
    return TowerReport(ok=True, depth=depth)


class MutatedTower(Tower):
    """Tower obtained by applying pending mutations (k, minimal level j)
    to a base tower.  Level i is computed at level max(i, all j) and
    restricted down, which agrees with the level-wise definition because
    mutation respects induced subquivers."""

    def __init__(self, base, pending):
        self.base = base
        self.pending = list(pending)

        def provider(i):
            m = max([i] + [j for _, j in self.pending])
            q = base.level(m)
            for k, _ in self.pending:
                q = mutate(q, k)
            return restrict(q, base.level(i).vertices)

        super().__init__(provider, declared_depth=base.declared_depth)


def mutate_tower(t, k, scan_depth=None):
    """Tower mutation at vertex k; lazily evaluated, satisfies the tower
    invariants at every depth (mutation respects induced subquivers)."""
    if scan_depth is None and t.declared_depth is UNBOUNDED:
        scan_depth = 64  # generators without a hint accept a bounded scan
    j = t.first_level_of(k, max_depth=scan_depth)
    pending = (t.pending if isinstance(t, MutatedTower) else []) + [(k, j)]
    base = t.base if isinstance(t, MutatedTower) else t
    return MutatedTower(base, pending)


class ReddeningScheme:
    """Per-level finite mutation sequences S_i over V(Q_i), compatible
    under order-preserving restriction; the computable representation of
    an infinite (or bi-infinite) reddening sequence."""

    def __init__(self, provider, declared_depth=UNBOUNDED):
        self._provider = provider
        self.declared_depth = declared_depth
        self._cache = {}
        self._lock = threading.Lock()

    @classmethod
    def from_levels(cls, levels):
        levels = [list(s) for s in levels]
        return cls(lambda i: levels[i - 1], declared_depth=len(levels))

    def check_depth(self, depth):
        if depth > self.declared_depth:
            raise DepthExceeded(depth, self.declared_depth)

    def level(self, i):
        if i < 1:
            raise DepthExceeded(i, self.declared_depth)
        self.check_depth(i)
        with self._lock:
            if i not in self._cache:
                self._cache[i] = list(self._provider(i))
            return self._cache[i]


def restrict_sequence(steps, vertex_set):
    """Delete steps outside vertex_set, order preserved."""
    vs = set(vertex_set)
    return [k for k in steps if k in vs]


@dataclass
class SchemeReport:
    ok: bool
    depth: int
    failed_level: int = None
    kind: str = None  # "compatibility" | "not_reddening"
    reason: str = None

    def to_json(self):
        doc = {"ok": self.ok, "depth": self.depth}
        if not self.ok:
            doc.update(
                failed_level=self.failed_level, kind=self.kind, reason=self.reason
            )
        return doc


def verify_scheme(t, scheme, depth):
    """Check, for i = 1..depth, that S_{i+1} restricts to S_i and that
    S_i is a reddening sequence for level i; reports the first failure."""
    t.check_depth(depth)
    scheme.check_depth(depth)
    for i in range(1, depth + 1):
        seq = scheme.level(i)
        if i < depth:
            above = scheme.level(i + 1)
            restricted = restrict_sequence(above, t.level(i).vertices)
            if restricted != list(seq):
                return SchemeReport(
                    ok=False,
                    depth=depth,
                    failed_level=i,
                    kind="compatibility",
                    reason=f"S_{i + 1} restricts to {restricted}, expected {list(seq)}",
                )
        verdict = check_sequence(t.level(i), seq)
        if not verdict.is_reddening:
            return SchemeReport(
                ok=False,
                depth=depth,
                failed_level=i,
                kind="not_reddening",
                reason=verdict.failure_reason,
            )
    return SchemeReport(ok=True, depth=depth)


@dataclass
class TriangularDecomposition:
    """How each level extends the previous one: the new layer W_i, the cut
    direction, and reddening seeds for Q_1 and every W_i."""

    sigma1: list
    taus: dict = field(default_factory=dict)  # level i >= 2 -> sequence over W_i
    directions: dict = field(default_factory=dict)  # level i >= 2 -> Direction

    def depth(self):
        return 1 + len(self.taus)

    def to_json(self):
        return {
            "sigma1": list(self.sigma1),
            "layers": [
                {
                    "level": i,
                    "direction": Direction(self.directions[i]).value,
                    "tau": list(self.taus[i]),
                }
                for i in sorted(self.taus)
            ],
        }

    @classmethod
    def from_json(cls, doc):
        taus = {}
        directions = {}
        for layer in doc.get("layers", []):
            i = int(layer["level"])
            taus[i] = [str(s) for s in layer["tau"]]
            directions[i] = Direction(layer["direction"])
        return cls(sigma1=[str(s) for s in doc["sigma1"]], taus=taus, directions=directions)


def _validate_decomposition_level(t, d, i):
    """Check the triangular-extension criteria of level i against t."""
    qi = t.level(i)
    prev_vs = set(t.level(i - 1).vertices)
    direction = Direction(d.directions[i])
    actual = classify_triangular(qi, prev_vs)
    if actual is Direction.NOT_TRIANGULAR:
        raise NotTriangularAt(i)
    if actual is not direction and not (
        actual is Direction.DISJOINT and direction in (Direction.OUT, Direction.IN)
    ):
        raise NotTriangularAt(i)
    wi = [v for v in qi.vertices if v not in prev_vs]
    verdict = check_sequence(restrict(qi, wi), d.taus[i])
    if not verdict.is_reddening:
        raise SeedNotReddeningAt(i, verdict.failure_reason or "layer seed fails")


def build_scheme(t, d, depth):
    """Theorem-style construction: S_1 = sigma1 and S_i composes S_{i-1}
    with the layer seed tau_i across the level-i cut (Disjoint composes as
    Out).  Validates the decomposition against t before composing."""
    t.check_depth(depth)
    if depth > d.depth():
        raise DepthExceeded(depth, d.depth())
    verdict = check_sequence(t.level(1), d.sigma1)
    if not verdict.is_reddening:
        raise SeedNotReddeningAt(1, verdict.failure_reason or "sigma1 fails")
    levels = [list(d.sigma1)]
    for i in range(2, depth + 1):
        _validate_decomposition_level(t, d, i)
        direction = Direction(d.directions[i])
        if direction is Direction.DISJOINT:
            direction = Direction.OUT
        levels.append(compose_triangular(levels[-1], d.taus[i], direction))
    return ReddeningScheme.from_levels(levels)


def decompose_triangular(t, depth, seed_search_len):
    """Recover a TriangularDecomposition from the tower itself: classify
    each level cut and brute-force the seeds (bounded by seed_search_len).

    Raises NotTriangularAt / NoSeedFoundUpTo at the first failing level;
    the latter is a bounded-search outcome, not a refutation."""
    t.check_depth(depth)
    q1 = t.level(1)
    found = find_reddening(q1, seed_search_len)
    if not found.found:
        raise NoSeedFoundUpTo(1, seed_search_len)
    d = TriangularDecomposition(sigma1=found.sequence)
    for i in range(2, depth + 1):
        qi = t.level(i)
        prev_vs = set(t.level(i - 1).vertices)
        direction = classify_triangular(qi, prev_vs)
        if direction is Direction.NOT_TRIANGULAR:
            raise NotTriangularAt(i)
        wi = [v for v in qi.vertices if v not in prev_vs]
        layer = restrict(qi, wi)
        found = find_reddening(layer, seed_search_len)
        if not found.found:
            raise NoSeedFoundUpTo(i, seed_search_len)
        d.directions[i] = direction
        d.taus[i] = found.sequence
    return d
