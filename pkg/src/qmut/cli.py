"""Command-line interface.

Exit codes: 0 success (and verdict matches in `check`), 1 verdict
mismatch or bounded search exhausted, 2 input/validation errors with a
machine-readable {"error": ...} line on stderr.
"""

import argparse
import json
import os
import sys

from .core import mutate
from .errors import QuiverError
from .families import FAMILY_NAMES, make_family
from .io import (
    load_json,
    quiver_from_doc,
    quiver_to_doc,
    quiver_to_dot,
    scheme_from_doc,
    scheme_to_doc,
    tower_from_doc,
    tower_to_doc,
)
from .sequences import (
    MAXIMAL_GREEN,
    REDDENING,
    check_sequence,
    find_reddening,
    parse_sequence,
)
from .tower import (
    TriangularDecomposition,
    build_scheme,
    decompose_triangular,
    mutate_tower,
    verify_scheme,
    verify_tower,
)

MODES = {"reddening": REDDENING, "mgs": MAXIMAL_GREEN}


class CliError(Exception):
    pass


def _load_quiver(path):
    return quiver_from_doc(load_json(path))


def _emit(doc):
    print(json.dumps(doc, indent=2))


def cmd_mutate(args):
    q = _load_quiver(args.quiver)
    for k in parse_sequence(args.sequence):
        q = mutate(q, k)
    _emit(quiver_to_doc(q))
    return 0


def cmd_check(args):
    q = _load_quiver(args.quiver)
    steps = parse_sequence(args.sequence)
    verdict = check_sequence(q, steps, want_trace=args.trace)
    _emit(verdict.to_json())
    return 0 if verdict.matches(MODES[args.mode]) else 1


def cmd_search(args):
    q = _load_quiver(args.quiver)
    result = find_reddening(q, args.max_len, mode=MODES[args.mode])
    _emit(result.to_json())
    return 0 if result.found else 1


def cmd_tower(args):
    t = tower_from_doc(load_json(args.tower))
    if args.tower_cmd == "verify":
        report = verify_tower(t, args.depth)
        _emit(report.to_json())
        return 0 if report.ok else 1
    if args.vertex is None:
        raise CliError("tower mutate requires -k <vertex>")
    mt = mutate_tower(t, args.vertex, scan_depth=args.depth)
    _emit(tower_to_doc(mt, args.depth))
    return 0


def cmd_scheme(args):
    t = tower_from_doc(load_json(args.tower))
    if args.scheme_cmd == "verify":
        if args.scheme is None:
            raise CliError("scheme verify requires -r <scheme-file>")
        scheme = scheme_from_doc(load_json(args.scheme))
        report = verify_scheme(t, scheme, args.depth)
        _emit(report.to_json())
        return 0 if report.ok else 1
    if args.decomposition is not None:
        d = TriangularDecomposition.from_json(load_json(args.decomposition))
    else:
        d = decompose_triangular(t, args.depth, args.seed_search_len)
    scheme = build_scheme(t, d, args.depth)
    _emit(scheme_to_doc(scheme, args.depth))
    return 0


def cmd_family(args):
    params = {}
    for kv in args.param or []:
        if "=" not in kv:
            raise CliError(f"--param expects k=v, got {kv!r}")
        k, v = kv.split("=", 1)
        params[k] = v
    t = make_family(args.name, params)
    _emit(quiver_to_doc(t.level(args.level)))
    return 0


def cmd_export(args):
    q = _load_quiver(args.quiver)
    framed = q if q.frozen else None
    sys.stdout.write(quiver_to_dot(q, framed=framed))
    return 0


def cmd_serve(args):
    from .server import serve

    port = int(os.environ.get("QMUT_PORT", args.port))
    addr = os.environ.get("QMUT_ADDR", args.addr)
    serve(port=port, addr=addr, static_dir=args.static)
    return 0


def build_parser():
    p = argparse.ArgumentParser(prog="qmut", description=__doc__)
    sub = p.add_subparsers(dest="cmd", required=True)

    sp = sub.add_parser("mutate", help="apply a mutation sequence to a quiver")
    sp.add_argument("-q", "--quiver", required=True)
    sp.add_argument("-s", "--sequence", required=True)
    sp.set_defaults(func=cmd_mutate)

    sp = sub.add_parser("check", help="classify a sequence on the framed quiver")
    sp.add_argument("-q", "--quiver", required=True)
    sp.add_argument("-s", "--sequence", required=True)
    sp.add_argument("--mode", choices=sorted(MODES), default="reddening")
    sp.add_argument("--trace", action="store_true")
    sp.set_defaults(func=cmd_check)

    sp = sub.add_parser("search", help="brute-force a reddening / MGS sequence")
    sp.add_argument("-q", "--quiver", required=True)
    sp.add_argument("--max-len", type=int, required=True)
    sp.add_argument("--mode", choices=sorted(MODES), default="reddening")
    sp.set_defaults(func=cmd_search)

    sp = sub.add_parser("tower", help="verify or mutate a tower")
    sp.add_argument("tower_cmd", choices=["verify", "mutate"])
    sp.add_argument("-t", "--tower", required=True)
    sp.add_argument("-k", "--vertex")
    sp.add_argument("-N", "--depth", type=int, required=True)
    sp.set_defaults(func=cmd_tower)

    sp = sub.add_parser("scheme", help="verify or build a reddening scheme")
    sp.add_argument("scheme_cmd", choices=["verify", "build"])
    sp.add_argument("-t", "--tower", required=True)
    sp.add_argument("-r", "--scheme")
    sp.add_argument("-d", "--decomposition")
    sp.add_argument("-N", "--depth", type=int, required=True)
    sp.add_argument("--seed-search-len", type=int, default=8)
    sp.set_defaults(func=cmd_scheme)

    sp = sub.add_parser("family", help="print level i of a built-in family")
    sp.add_argument("name", choices=FAMILY_NAMES)
    sp.add_argument("--param", action="append")
    sp.add_argument("--level", type=int, required=True)
    sp.set_defaults(func=cmd_family)

    sp = sub.add_parser("export", help="export a quiver")
    sp.add_argument("format", choices=["dot"])
    sp.add_argument("-q", "--quiver", required=True)
    sp.set_defaults(func=cmd_export)

    sp = sub.add_parser("serve", help="run the HTTP explorer service")
    sp.add_argument("--port", type=int, default=8787)
    sp.add_argument("--addr", default="127.0.0.1")
    sp.add_argument("--static", default=None)
    sp.set_defaults(func=cmd_serve)

    return p


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (QuiverError, CliError, OSError, json.JSONDecodeError) as e:
        print(json.dumps({"error": str(e)}), file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
