import random

import pytest

from qmut import Quiver


def random_quiver(rng, n_max=8, weight_max=3, frozen_prob=0.0):
    """Random quiver on tokens "1".."n"; optional frozen vertices "f1".."""
    n = rng.randint(1, n_max)
    mutable = [str(v) for v in range(1, n + 1)]
    frozen = []
    if frozen_prob and rng.random() < frozen_prob:
        frozen = [f"f{v}" for v in range(1, rng.randint(1, 3) + 1)]
    verts = mutable + frozen
    weights = {}
    for i, v in enumerate(verts):
        for w in verts[i + 1 :]:
            if v in frozen and w in frozen:
                continue
            wt = rng.randint(-weight_max, weight_max)
            if wt > 0:
                weights[(v, w)] = wt
            elif wt < 0:
                weights[(w, v)] = -wt
    return Quiver(mutable, frozen, weights)


def oracle_mutate(q, k):
    """Independent mutation oracle on explicit arrow multisets, applying
    the three local steps literally: add an arrow i -> j per 2-path
    i -> k -> j, reverse all arrows at k, then cancel 2-cycles maximally
    and drop frozen-frozen arrows.  Returns a Quiver for comparison."""
    arrows = []
    for src, dst, w in q.arrows():
        arrows.extend([(src, dst)] * w)
    into_k = [src for src, dst in arrows if dst == k]
    out_of_k = [dst for src, dst in arrows if src == k]
    added = [(i, j) for i in into_k for j in out_of_k]
    step1 = arrows + added
    step2 = [
        (dst, src) if k in (src, dst) else (src, dst) for src, dst in step1
    ]
    counts = {}
    for src, dst in step2:
        counts[(src, dst)] = counts.get((src, dst), 0) + 1
    weights = {}
    frozen = set(q.frozen)
    for (src, dst), c in list(counts.items()):
        if (dst, src) in counts and src > dst:
            continue  # handled from the other orientation
        net = c - counts.get((dst, src), 0)
        if net == 0:
            continue
        pair = (src, dst) if net > 0 else (dst, src)
        if pair[0] in frozen and pair[1] in frozen:
            continue
        weights[pair] = abs(net)
    return Quiver(q.mutable, q.frozen, weights)


@pytest.fixture
def rng():
    return random.Random(20240817)
