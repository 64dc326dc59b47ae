"""Exception hierarchy shared across the package."""


class QuiverError(Exception):
    """Base class for all qmut errors."""


class UnknownVertex(QuiverError):
    def __init__(self, token):
        super().__init__(f"unknown vertex {token!r}")
        self.token = token


class FrozenVertexMutation(QuiverError):
    def __init__(self, token):
        super().__init__(f"cannot mutate at frozen vertex {token!r}")
        self.token = token


class FrozenVertexQuery(QuiverError):
    def __init__(self, token):
        super().__init__(f"green/red status is defined for mutable vertices only, got {token!r}")
        self.token = token


class ArithmeticOverflow(QuiverError):
    def __init__(self, msg="mutation weight overflows checked 64-bit arithmetic"):
        super().__init__(msg)


class AlreadyFramed(QuiverError):
    pass


class EmptyPart(QuiverError):
    pass


class VertexCollision(QuiverError):
    def __init__(self, tokens):
        super().__init__(f"vertex tokens collide: {sorted(tokens)}")
        self.tokens = tokens


class InconsistentCrossDirection(QuiverError):
    pass


class InvalidQuiverDocument(QuiverError):
    pass


class SequenceApplicationError(QuiverError):
    """Wraps an error raised while applying step `index` of a sequence."""

    def __init__(self, index, cause):
        super().__init__(f"step {index} failed: {cause}")
        self.index = index
        self.cause = cause


class SignCoherenceViolation(QuiverError):
    """A mutable vertex turned mixed along a mutation path from a fresh framing.

    Sign coherence guarantees this never happens; seeing it means the
    implementation is broken, so it is raised loudly rather than recorded.
    """

    def __init__(self, token, step_index):
        super().__init__(
            f"vertex {token!r} became mixed after step {step_index}; "
            "sign coherence violated"
        )
        self.token = token
        self.step_index = step_index


class DepthExceeded(QuiverError):
    def __init__(self, requested, declared):
        super().__init__(f"depth {requested} exceeds declared depth {declared}")
        self.requested = requested
        self.declared = declared


class VertexNotFound(QuiverError):
    def __init__(self, token, depth):
        super().__init__(f"vertex {token!r} not found in levels 1..{depth}")
        self.token = token
        self.depth = depth


class NotTriangularAt(QuiverError):
    def __init__(self, level):
        super().__init__(f"level {level} is not a triangular extension of the previous level")
        self.level = level


class SeedNotReddeningAt(QuiverError):
    def __init__(self, level, reason):
        super().__init__(f"seed sequence at level {level} is not reddening: {reason}")
        self.level = level
        self.reason = reason


class NoSeedFoundUpTo(QuiverError):
    """Bounded-search outcome, not a refutation."""

    def __init__(self, level, max_len):
        super().__init__(
            f"no reddening seed found for level {level} within length {max_len}"
        )
        self.level = level
        self.max_len = max_len


class UnknownFamily(QuiverError):
    def __init__(self, name):
        super().__init__(f"unknown family {name!r}")
        self.name = name


class BadParams(QuiverError):
    pass
