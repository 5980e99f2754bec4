"""Command-line interface: check / build / search / iso / zoo / maps.

Exit codes: 0 success, 2 parse or input error, 3 precondition or domain
error.  Output files are written atomically (temp file + rename), so a
nonzero exit never leaves a partial file behind.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import tempfile
import time

from . import errors
from .constructions import (
    CyclicActionSpec,
    ZOO_NAMES,
    chein_double,
    gagola_extension,
    semidirect_product,
    zoo_loop,
)
from .isomorphism import are_isomorphic
from .loops import MAX_ORDER, check_identity_property, parse_table, serialize_table
from .loops import inn_generators, mlt_generators
from .morphisms import (
    automorphism_group,
    find_star_automorphisms,
    property_report,
    semiautomorphism_group,
)
from .perms import group_closure, parse_cycles


def _load(path, args):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise errors.ParseError(f"cannot read {path}: {exc}") from None
    return parse_table(text, relabel=args.relabel, max_order=args.max_order)


def _write_atomic(path, text):
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=directory, suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def _witness_json(w):
    if w is None:
        return None
    return [_witness_json(v) if isinstance(v, tuple) else int(v) for v in w]


def _verdict_json(v):
    if v is None:
        return None
    return {"ok": v.ok, "witness": _witness_json(v.witness), "reason": v.reason}


def _verdict_text(v):
    if v.ok:
        return "true"
    parts = [f"false"]
    if v.witness is not None:
        parts.append(f"witness {v.witness}")
    if v.reason:
        parts.append(v.reason)
    return " -- ".join(parts) if len(parts) > 1 else "false"


def cmd_check(args):
    loop = _load(args.file, args)
    start = time.perf_counter()
    report = property_report(loop)
    elapsed = time.perf_counter() - start
    name = loop.name or args.file
    if args.json:
        payload = {
            "subject": name,
            "order": loop.n,
            "properties": {k: _verdict_json(v) for k, v in report.items()},
            "elapsed_s": elapsed,
        }
        print(json.dumps(payload, indent=2))
    else:
        print(f"subject: {name} (order {loop.n})")
        for key, verdict in report.items():
            print(f"  {key}: {_verdict_text(verdict)}")
        print(f"  elapsed: {elapsed:.3f}s")
    return 0


def cmd_build(args):
    base = _load(args.base, args)
    if args.kind == "chein":
        f = parse_cycles(args.f, base.n) if args.f else None
        built = chein_double(base, f)
    else:
        if args.k is None:
            raise errors.SpecInvalid(f"build {args.kind} requires -k")
        f = parse_cycles(args.f or "()", base.n)
        spec = CyclicActionSpec(args.k, f)
        if args.kind == "semidirect":
            built = semidirect_product(base, spec)
        else:
            built = gagola_extension(base, spec)
    moufang = check_identity_property(built, "moufang")
    ip = check_identity_property(built, "inverse_property")
    if args.out:
        _write_atomic(args.out, serialize_table(built))
    else:
        sys.stdout.write(serialize_table(built))
    if args.json:
        print(json.dumps({
            "name": built.name,
            "order": built.n,
            "moufang": _verdict_json(moufang),
            "inverse_property": _verdict_json(ip),
            "out": args.out,
        }, indent=2))
    else:
        print(f"built {built.name}: order {built.n}, "
              f"moufang={str(moufang.ok).lower()}, ip={str(ip.ok).lower()}")
    return 0


def cmd_search(args):
    loop = _load(args.file, args)
    if args.kind == "star-auts":
        found = find_star_automorphisms(loop, max_order=args.max_enum)
        moufang = check_identity_property(loop, "moufang").ok
        if args.json:
            print(json.dumps({
                "kind": args.kind,
                "results": [f.cycle_string() for f in found],
                "moufang": moufang,
            }, indent=2))
        else:
            for f in found:
                print(f.cycle_string())
            note = "moufang" if moufang else "not Moufang"
            print(f"# {len(found)} automorphisms satisfy the star identity; the loop is {note}")
    else:
        group = semiautomorphism_group(loop, max_order=args.max_enum)
        found = group.sorted_elements()
        if args.json:
            print(json.dumps({
                "kind": args.kind,
                "results": [f.cycle_string() for f in found],
                "order": group.order,
            }, indent=2))
        else:
            for f in found:
                print(f.cycle_string())
            print(f"# semiautomorphism group order {group.order}")
    return 0


def cmd_iso(args):
    a = _load(args.file_a, args)
    b = _load(args.file_b, args)
    sigma = are_isomorphic(a, b)
    if args.json:
        print(json.dumps({
            "isomorphic": sigma is not None,
            "map": sigma.cycle_string() if sigma else None,
        }, indent=2))
    else:
        print(sigma.cycle_string() if sigma else "not isomorphic")
    return 0


def cmd_zoo(args):
    loop = zoo_loop(args.name)
    text = serialize_table(loop)
    if args.out:
        _write_atomic(args.out, text)
        print(f"wrote {args.name} (order {loop.n}) to {args.out}")
    else:
        sys.stdout.write(text)
    return 0


def cmd_maps(args):
    loop = _load(args.file, args)
    if args.kind in ("aut", "semi"):
        enum = automorphism_group if args.kind == "aut" else semiautomorphism_group
        group = enum(loop, max_order=args.max_enum)
        found = group.sorted_elements()
        if args.json:
            print(json.dumps({
                "kind": args.kind,
                "order": group.order,
                "elements": [f.cycle_string() for f in found],
            }, indent=2))
        else:
            print(f"order {group.order}")
            for f in found:
                print(f.cycle_string())
    elif args.kind == "mlt":
        gens = mlt_generators(loop)
        group = group_closure(gens, degree=loop.n)
        if args.json:
            print(json.dumps({"kind": "mlt", "order": group.order,
                              "generators": len(gens)}, indent=2))
        else:
            print(f"order {group.order}")
            print(f"generators {len(gens)}")
    else:
        gens = inn_generators(loop)
        group = group_closure(gens, degree=loop.n)
        mlt = group_closure(mlt_generators(loop), degree=loop.n)
        stabilizer = {p for p in mlt.elements() if p(1) == 1}
        agrees = stabilizer == set(group.elements())
        if args.json:
            print(json.dumps({"kind": "inn", "order": group.order,
                              "stabilizer_cross_check": agrees}, indent=2))
        else:
            print(f"order {group.order}")
            print(f"stabilizer cross-check: {str(agrees).lower()}")
    return 0


def build_parser():
    parser = argparse.ArgumentParser(
        prog="loopkit",
        description="Finite loops from Cayley tables: property checks, "
                    "mapping groups, extensions.",
    )
    parser.add_argument("--seed", type=int, default=None,
                        help="reserved; all current algorithms are deterministic")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--relabel", action="store_true",
                       help="renumber so the identity element becomes 1")
        p.add_argument("--max-order", type=int, default=MAX_ORDER,
                       help="maximum accepted table order")
        p.add_argument("--json", action="store_true", help="machine-readable output")

    p = sub.add_parser("check", help="full property report for a table file")
    p.add_argument("file")
    common(p)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("build", help="construct an extension and write its table")
    p.add_argument("kind", choices=("semidirect", "gagola", "chein"))
    p.add_argument("--base", required=True, help="base loop table file")
    p.add_argument("-k", type=int, default=None, help="order of the cyclic group")
    p.add_argument("-f", default=None, help="action in cycle notation, e.g. '(2,3)'")
    p.add_argument("-o", "--out", default=None, help="output table file")
    common(p)
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("search", help="enumerate star automorphisms or semiautomorphisms")
    p.add_argument("kind", choices=("star-auts", "semiauts"))
    p.add_argument("file")
    p.add_argument("--max-enum", type=int, default=16,
                   help="enumeration bound on the loop order")
    common(p)
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("iso", help="decide isomorphism of two table files")
    p.add_argument("file_a")
    p.add_argument("file_b")
    common(p)
    p.set_defaults(func=cmd_iso)

    p = sub.add_parser("zoo", help="emit a named fixture loop")
    p.add_argument("name", choices=ZOO_NAMES, metavar="name")
    p.add_argument("-o", "--out", default=None, help="output table file")
    p.set_defaults(func=cmd_zoo)

    p = sub.add_parser("maps", help="mapping groups of a loop")
    p.add_argument("kind", choices=("aut", "semi", "inn", "mlt"))
    p.add_argument("file")
    p.add_argument("--max-enum", type=int, default=16,
                   help="enumeration bound on the loop order")
    common(p)
    p.set_defaults(func=cmd_maps)

    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except errors.ParseError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2
    except errors.DomainError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
