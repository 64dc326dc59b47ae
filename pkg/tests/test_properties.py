"""Property tests for the algebraic invariants of mutation."""

import numpy as np
from hypothesis import given, settings, strategies as st

from qmut import Quiver, frame, mutate, quivers_equal, restrict
from conftest import oracle_mutate


@st.composite
def quivers(draw, n_max=8, weight_max=3, with_frozen=False):
    n = draw(st.integers(1, n_max))
    mutable = [str(v) for v in range(1, n + 1)]
    frozen = []
    if with_frozen:
        nf = draw(st.integers(0, 2))
        frozen = [f"f{v}" for v in range(1, nf + 1)]
    verts = mutable + frozen
    weights = {}
    for i, v in enumerate(verts):
        for w in verts[i + 1 :]:
            if v in frozen and w in frozen:
                continue
            wt = draw(st.integers(-weight_max, weight_max))
            if wt > 0:
                weights[(v, w)] = wt
            elif wt < 0:
                weights[(w, v)] = -wt
    return Quiver(mutable, frozen, weights)


@st.composite
def quiver_and_vertex(draw, **kwargs):
    q = draw(quivers(**kwargs))
    k = draw(st.sampled_from(q.mutable))
    return q, k


@settings(max_examples=300, deadline=None)
@given(quiver_and_vertex(with_frozen=True))
def test_mutation_is_involution(qk):
    q, k = qk
    assert quivers_equal(mutate(mutate(q, k), k), q)


@settings(max_examples=300, deadline=None)
@given(quiver_and_vertex(with_frozen=True))
def test_mutation_preserves_structural_invariants(qk):
    q, k = qk
    m = mutate(q, k).matrix
    nm = len(q.mutable)
    assert np.array_equal(m, -m.T)
    assert not np.any(np.diag(m))
    assert not np.any(m[nm:, nm:])


@settings(max_examples=300, deadline=None)
@given(quiver_and_vertex(with_frozen=True))
def test_mutation_matches_multiset_oracle(qk):
    q, k = qk
    assert quivers_equal(mutate(q, k), oracle_mutate(q, k))


@settings(max_examples=300, deadline=None)
@given(quiver_and_vertex(with_frozen=True), st.data())
def test_mutation_commutes_with_restriction(qk, data):
    # "mutation respects induced subquivers": restrict-then-mutate equals
    # mutate-then-restrict whenever the mutated vertex survives
    q, k = qk
    others = [v for v in q.vertices if v != k]
    subset = data.draw(st.sets(st.sampled_from(others)) if others else st.just(set()))
    s = set(subset) | {k}
    assert quivers_equal(mutate(restrict(q, s), k), restrict(mutate(q, k), s))


@settings(max_examples=100, deadline=None)
@given(quivers())
def test_fresh_frame_is_all_green(q):
    fq = frame(q)
    assert all(fq.status(v).is_green for v in q.mutable)
