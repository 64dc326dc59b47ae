"""Quiver mutation, framed quivers, reddening sequences, and towers of
embedded finite quivers."""

from .core import (
    Direction,
    FramedQuiver,
    Quiver,
    VertexStatus,
    classify_triangular,
    coframe,
    frame,
    mutate,
    quivers_equal,
    restrict,
    triangular_extend,
    vertex_status,
)
from .families import FAMILY_NAMES, known_scheme, make_family
from .sequences import (
    MAXIMAL_GREEN,
    NOT_REDDENING,
    REDDENING,
    SearchResult,
    SequenceVerdict,
    apply_sequence,
    check_sequence,
    compose_triangular,
    find_reddening,
    format_sequence,
    parse_sequence,
)
from .tower import (
    MutatedTower,
    ReddeningScheme,
    Tower,
    TriangularDecomposition,
    build_scheme,
    decompose_triangular,
    mutate_tower,
    verify_scheme,
    verify_tower,
)

__version__ = "0.1.0"
