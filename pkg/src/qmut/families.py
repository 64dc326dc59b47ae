"""Built-in quiver families used as golden fixtures and demo content.

Each family is a tower generator over a global vertex namespace:

* path_one_sided:     1 -> 2 -> 3 -> ...           (levels 1..i)
* path_bi_source:     ... -> -1 -> 0 -> 1 -> ...   (arrows left to right)
* path_bi_center_out: same vertices, arrows pointing away from 0
* star:               center 0, p rays 0 -> 1a -> 2a -> ...
* nested_triangles:   3-cycle rings {ia, ib, ic} with inter-ring arrows
                      1x -> 2x, 3x -> 2x, 3x -> 4x, alternating with
                      period 2 (odd rings point into both neighbours)
"""

import string

from .core import Quiver
from .errors import BadParams, UnknownFamily
from .tower import ReddeningScheme, Tower

FAMILY_NAMES = (
    "path_one_sided",
    "path_bi_source",
    "path_bi_center_out",
    "star",
    "nested_triangles",
)

_RAY_LABELS = string.ascii_lowercase


def _path_one_sided_level(i):
    verts = [str(v) for v in range(1, i + 1)]
    weights = {(str(v), str(v + 1)): 1 for v in range(1, i)}
    return Quiver(verts, [], weights)


def _bi_vertices(i):
    return [str(v) for v in range(-(i - 1), i)]


def _path_bi_source_level(i):
    weights = {(str(v), str(v + 1)): 1 for v in range(-(i - 1), i - 1)}
    return Quiver(_bi_vertices(i), [], weights)


def _path_bi_center_out_level(i):
    weights = {}
    for v in range(0, i - 1):
        weights[(str(v), str(v + 1))] = 1
    for v in range(0, -(i - 1), -1):
        weights[(str(v), str(v - 1))] = 1
    return Quiver(_bi_vertices(i), [], weights)


def _ray_labels(p):
    if not (1 <= p <= len(_RAY_LABELS)):
        raise BadParams(f"star rays must be between 1 and {len(_RAY_LABELS)}, got {p}")
    return _RAY_LABELS[:p]


def _star_level(i, p):
    labels = _ray_labels(p)
    verts = ["0"] + [f"{j}{x}" for j in range(1, i) for x in labels]
    weights = {}
    for x in labels:
        if i >= 2:
            weights[("0", f"1{x}")] = 1
        for j in range(1, i - 1):
            weights[(f"{j}{x}", f"{j + 1}{x}")] = 1
    return Quiver(verts, [], weights)


def _nested_triangles_level(i):
    verts = [f"{r}{x}" for r in range(1, i + 1) for x in "abc"]
    weights = {}
    for r in range(1, i + 1):
        weights[(f"{r}a", f"{r}b")] = 1
        weights[(f"{r}b", f"{r}c")] = 1
        weights[(f"{r}c", f"{r}a")] = 1
    # odd ring o points into rings o-1 and o+1, per letter
    for r in range(1, i):
        src, dst = (r, r + 1) if r % 2 == 1 else (r + 1, r)
        for x in "abc":
            weights[(f"{src}{x}", f"{dst}{x}")] = 1
    return Quiver(verts, [], weights)


def make_family(name, params=None):
    """Tower for a named family; params: {"rays": p} for star."""
    params = dict(params or {})
    if name == "path_one_sided":
        return Tower(_path_one_sided_level)
    if name == "path_bi_source":
        return Tower(_path_bi_source_level)
    if name == "path_bi_center_out":
        return Tower(_path_bi_center_out_level)
    if name == "star":
        try:
            p = int(params.get("rays", 2))
        except (TypeError, ValueError):
            raise BadParams(f"star rays must be an integer, got {params.get('rays')!r}")
        _ray_labels(p)
        return Tower(lambda i: _star_level(i, p))
    if name == "nested_triangles":
        return Tower(_nested_triangles_level)
    raise UnknownFamily(name)


def known_scheme(name, params=None):
    """The figure-given (or constructor-derived) reddening scheme of a
    family; passes verify_scheme against make_family at any depth."""
    params = dict(params or {})
    if name == "path_one_sided":
        return ReddeningScheme(lambda i: [str(v) for v in range(1, i + 1)])
    if name == "path_bi_source":
        return ReddeningScheme(lambda i: [str(v) for v in range(-(i - 1), i)])
    if name == "path_bi_center_out":

        def center_out(i):
            steps = ["0"]
            for v in range(1, i):
                steps += [str(-v), str(v)]
            return steps

        return ReddeningScheme(center_out)
    if name == "star":
        p = int(params.get("rays", 2))
        labels = _ray_labels(p)

        def star_seq(i):
            steps = ["0"]
            for j in range(1, i):
                steps += [f"{j}{x}" for x in labels]
            return steps

        return ReddeningScheme(star_seq)
    if name == "nested_triangles":
        # no closed form in the source figures; derived from the
        # triangular decomposition with a brute-forced 3-cycle ring seed
        def rings(i):
            steps = _ring_seed(1)
            for r in range(2, i + 1):
                tau = _ring_seed(r)
                steps = tau + steps if r % 2 == 1 else steps + tau
            return steps

        return ReddeningScheme(rings)
    raise UnknownFamily(name)


def _ring_seed(r):
    """Shortest reddening sequence for the oriented 3-cycle ring r."""
    return [f"{r}a", f"{r}b", f"{r}c", f"{r}a"]
