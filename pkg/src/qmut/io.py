"""JSON documents and DOT export.

Quiver document:
  {"mutable": ["1","2"], "frozen": [], "arrows": [{"from":"1","to":"2","weight":1}]}
Tower document, explicit:   {"levels": [quiver-doc, ...]}
Tower document, family:     {"family": "star", "params": {"rays": 3}}
Scheme document:            {"levels": [["0"], ["0","-1","1"], ...]}
"""

import json

from .core import Quiver, vertex_status
from .errors import InvalidQuiverDocument
from .families import make_family
from .tower import ReddeningScheme, Tower, verify_tower

DOT_GREEN = "#2ecc71"
DOT_RED = "#e74c3c"
DOT_MIXED = "#f39c12"
DOT_ISOLATED = DOT_GREEN


def quiver_from_doc(doc):
    """Parse and validate a quiver JSON document.

    Duplicate (from, to) pairs are summed; a pair listed in both
    directions, loops, non-positive weights, and frozen-frozen arrows are
    rejected."""
    if not isinstance(doc, dict):
        raise InvalidQuiverDocument("quiver document must be an object")
    try:
        mutable = [str(v) for v in doc.get("mutable", [])]
        frozen = [str(v) for v in doc.get("frozen", [])]
        arrows = doc.get("arrows", [])
    except (TypeError, AttributeError) as e:
        raise InvalidQuiverDocument(str(e)) from e
    weights = {}
    if not isinstance(arrows, list):
        raise InvalidQuiverDocument("'arrows' must be a list")
    for a in arrows:
        try:
            src, dst = str(a["from"]), str(a["to"])
            w = int(a.get("weight", 1))
        except (TypeError, KeyError, ValueError) as e:
            raise InvalidQuiverDocument(f"bad arrow entry {a!r}") from e
        if w < 1:
            raise InvalidQuiverDocument(f"arrow weight must be >= 1, got {w}")
        weights[(src, dst)] = weights.get((src, dst), 0) + w
    try:
        return Quiver(mutable, frozen, weights)
    except Exception as e:
        raise InvalidQuiverDocument(str(e)) from e


def quiver_to_doc(q):
    return {
        "mutable": list(q.mutable),
        "frozen": list(q.frozen),
        "arrows": [
            {"from": src, "to": dst, "weight": w} for src, dst, w in q.arrows()
        ],
    }


def tower_from_doc(doc, validate_depth=None):
    if not isinstance(doc, dict):
        raise InvalidQuiverDocument("tower document must be an object")
    if "family" in doc:
        return make_family(str(doc["family"]), doc.get("params"))
    if "levels" not in doc:
        raise InvalidQuiverDocument("tower document needs 'levels' or 'family'")
    levels = [quiver_from_doc(d) for d in doc["levels"]]
    t = Tower.from_levels(levels)
    depth = len(levels) if validate_depth is None else validate_depth
    report = verify_tower(t, depth)
    if not report.ok:
        raise InvalidQuiverDocument(f"tower chain invariant fails: {report.reason}")
    return t


def tower_to_doc(t, depth):
    return {"levels": [quiver_to_doc(t.level(i)) for i in range(1, depth + 1)]}


def scheme_from_doc(doc):
    if not isinstance(doc, dict) or "levels" not in doc:
        raise InvalidQuiverDocument("scheme document needs 'levels'")
    return ReddeningScheme.from_levels(
        [[str(s) for s in lvl] for lvl in doc["levels"]]
    )


def scheme_to_doc(scheme, depth):
    return {"levels": [list(scheme.level(i)) for i in range(1, depth + 1)]}


def load_json(path):
    with open(path) as f:
        return json.load(f)


def _dot_quote(token):
    return '"' + token.replace("\\", "\\\\").replace('"', '\\"') + '"'


def quiver_to_dot(q, framed=None):
    """Stable DOT rendering; frozen vertices boxed, mutable vertices filled
    with their green/red color when a framing is supplied."""
    lines = ["digraph quiver {"]
    for v in q.mutable:
        attrs = []
        if framed is not None:
            label = vertex_status(framed, v).label
            color = {
                "green": DOT_GREEN,
                "red": DOT_RED,
                "mixed": DOT_MIXED,
                "isolated": DOT_ISOLATED,
            }[label]
            attrs.append(f'style=filled, fillcolor="{color}"')
        lines.append(f"  {_dot_quote(v)} [{', '.join(attrs)}];" if attrs else f"  {_dot_quote(v)};")
    for v in q.frozen:
        lines.append(f"  {_dot_quote(v)} [shape=box];")
    for src, dst, w in q.arrows():
        attr = f' [label="{w}"]' if w > 1 else ""
        lines.append(f"  {_dot_quote(src)} -> {_dot_quote(dst)}{attr};")
    lines.append("}")
    return "\n".join(lines) + "\n"
