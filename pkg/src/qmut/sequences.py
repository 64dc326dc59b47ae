"""Mutation sequences on framed quivers: application, reddening /
maximal-green verification, brute-force search, and the Cao-Li style
triangular composition."""

from collections import deque
from dataclasses import dataclass, field

from .core import (
    Direction,
    FramedQuiver,
    frame,
    mutate,
    token_key,
    vertex_status,
)
from .errors import (
    ArithmeticOverflow,
    QuiverError,
    SequenceApplicationError,
    SignCoherenceViolation,
    VertexCollision,
)

REDDENING = "reddening"
MAXIMAL_GREEN = "maximal_green"
NOT_REDDENING = "not_reddening"


def parse_sequence(text):
    """Comma-separated vertex tokens, e.g. "0,-1,1,-2,2"."""
    text = text.strip()
    if not text:
        return []
    return [t.strip() for t in text.split(",")]


def format_sequence(steps):
    return ",".join(steps)


@dataclass
class SequenceVerdict:
    kind: str
    length: int
    trace: list = None
    failure_reason: str = None

    @property
    def is_reddening(self):
        return self.kind in (REDDENING, MAXIMAL_GREEN)

    @property
    def is_maximal_green(self):
        return self.kind == MAXIMAL_GREEN

    def matches(self, mode):
        if mode == MAXIMAL_GREEN:
            return self.is_maximal_green
        return self.is_reddening

    def to_json(self):
        doc = {"kind": self.kind, "length": self.length}
        if self.trace is not None:
            doc["trace"] = self.trace
        if self.failure_reason is not None:
            doc["failure_reason"] = self.failure_reason
        return doc


def _statuses(fq):
    return {v: vertex_status(fq, v) for v in fq.quiver.mutable}


def apply_sequence(fq, steps, check_sign_coherence=False):
    """Left-to-right fold of mutation over the framed quiver.

    With check_sign_coherence (valid when starting from a fresh framing),
    a Mixed vertex after any step raises SignCoherenceViolation.
    """
    q = fq.quiver
    for i, k in enumerate(steps):
        try:
            q = mutate(q, k)
        except QuiverError as e:
            if isinstance(e, SignCoherenceViolation):
                raise
            raise SequenceApplicationError(i, e) from e
        if check_sign_coherence:
            inner = FramedQuiver(quiver=q, frame_map=fq.frame_map)
            for v in q.mutable:
                if vertex_status(inner, v).is_mixed:
                    raise SignCoherenceViolation(v, i)
    return FramedQuiver(quiver=q, frame_map=fq.frame_map)


def check_sequence(q, steps, want_trace=False):
    """Frame q and classify the sequence: maximal green, reddening, or not.

    Maximal green additionally requires every step to hit a then-green
    vertex; the final test in both modes is all mutable vertices red.
    """
    fq = frame(q)
    trace = [] if want_trace else None
    all_green_steps = True
    current = fq
    for i, k in enumerate(steps):
        try:
            status_before = vertex_status(current, k)
        except QuiverError as e:
            return SequenceVerdict(
                kind=NOT_REDDENING,
                length=len(steps),
                trace=trace,
                failure_reason=f"step {i}: {e}",
            )
        if not status_before.is_green:
            all_green_steps = False
        try:
            current = apply_sequence(current, [k], check_sign_coherence=True)
        except SignCoherenceViolation:
            raise
        except QuiverError as e:
            return SequenceVerdict(
                kind=NOT_REDDENING,
                length=len(steps),
                trace=trace,
                failure_reason=f"step {i}: {e}",
            )
        if want_trace:
            trace.append({v: s.label for v, s in _statuses(current).items()})
    if current.all_red():
        kind = MAXIMAL_GREEN if all_green_steps else REDDENING
        return SequenceVerdict(kind=kind, length=len(steps), trace=trace)
    greens = [v for v in current.quiver.mutable if not current.status(v).is_red]
    return SequenceVerdict(
        kind=NOT_REDDENING,
        length=len(steps),
        trace=trace,
        failure_reason=f"vertices not red after sequence: {greens}",
    )


@dataclass
class SearchResult:
    """Outcome of the bounded brute-force search.

    sequence is None for the NoneUpTo(max_len) outcome, which is a
    bounded-depth certificate, never a nonexistence claim.
    """

    sequence: list = None
    max_len: int = 0
    overflow_pruned: int = 0

    @property
    def found(self):
        return self.sequence is not None

    def to_json(self):
        if self.found:
            return {"sequence": self.sequence, "length": len(self.sequence)}
        return {"none_up_to": self.max_len}


def find_reddening(q, max_len, mode=REDDENING):
    """Breadth-first search for the shortest (lexicographically least)
    sequence of the requested kind on frame(q).

    States are deduplicated by the full weight matrix under the canonical
    vertex order; MAXIMAL_GREEN mode branches only on then-green vertices.
    Overflowing branches are pruned and counted.
    """
    fq = frame(q)
    order = sorted(q.mutable, key=token_key)
    overflow_pruned = 0

    def verdict_matches(framed, green_only_path):
        if not framed.all_red():
            return False
        return green_only_path if mode == MAXIMAL_GREEN else True

    start = fq.quiver
    if verdict_matches(fq, True):
        return SearchResult(sequence=[], max_len=max_len)
    seen = {start.state_key()}
    frontier = deque([(start, [])])
    for _ in range(max_len):
        next_frontier = deque()
        while frontier:
            cur, steps = frontier.popleft()
            cur_fq = FramedQuiver(quiver=cur, frame_map=fq.frame_map)
            for k in order:
                if mode == MAXIMAL_GREEN and not vertex_status(cur_fq, k).is_green:
                    continue
                try:
                    nxt = mutate(cur, k)
                except ArithmeticOverflow:
                    overflow_pruned += 1
                    continue
                key = nxt.state_key()
                if key in seen:
                    continue
                seen.add(key)
                nfq = FramedQuiver(quiver=nxt, frame_map=fq.frame_map)
                nsteps = steps + [k]
                if verdict_matches(nfq, True):
                    return SearchResult(
                        sequence=nsteps, max_len=max_len, overflow_pruned=overflow_pruned
                    )
                next_frontier.append((nxt, nsteps))
        frontier = next_frontier
    return SearchResult(sequence=None, max_len=max_len, overflow_pruned=overflow_pruned)


def compose_triangular(s1, s2, direction):
    """Sequence for a triangular extension from sequences of its parts:
    Out concatenates (s1, s2), In concatenates (s2, s1)."""
    overlap = set(s1) & set(s2)
    if overlap:
        raise VertexCollision(overlap)
    direction = Direction(direction)
    if direction in (Direction.OUT, Direction.DISJOINT):
        return list(s1) + list(s2)
    if direction is Direction.IN:
        return list(s2) + list(s1)
    raise ValueError(f"cannot compose across a {direction.value} cut")
