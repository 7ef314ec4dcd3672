"""Command-line front end: ``partita <command> ...``."""

from __future__ import annotations

import argparse
import json
import sys

from .constructions import example_group_108, frattini_es_partition, nilpotent_es_partition
from .corpus import CorpusManifest, ManifestError, load_manifest
from .group import (
    GroupError,
    center_and_centralizers,
    hypercenter,
    is_nilpotent,
    is_solvable,
    order_statistics,
)
from .lattice import frattini, lattice
from .partition import strict_partitions
from .theorems import THEOREMS, run_suite


def _manifest(args) -> CorpusManifest:
    return load_manifest(getattr(args, "corpus", None))


def _group(args):
    try:
        return _manifest(args).get(args.group)
    except KeyError:
        raise GroupError(f"unknown group {args.group!r} (see 'partita catalog list')") from None


def _emit(obj):
    print(json.dumps(obj, indent=2, sort_keys=True))


def cmd_catalog(args):
    m = _manifest(args)
    if args.json:
        _emit(m.to_json())
    else:
        for e in m:
            print(f"{e.name:<14} order {e.group.order:<4} {' '.join(e.tags)}")
    return 0


def cmd_group_show(args):
    g = _group(args).group
    center, _ = center_and_centralizers(g)
    info = {
        "name": g.name,
        "order": g.order,
        "abelian": g.is_abelian,
        "cyclic": g.is_cyclic,
        "nilpotent": is_nilpotent(g),
        "solvable": is_solvable(g),
        "center_order": center.order,
        "hypercenter_order": hypercenter(g).order,
        "exponent": g.exponent,
        "order_statistics": {str(k): v for k, v in order_statistics(g).items()},
        "subgroups": len(lattice(g)),
    }
    if args.json:
        _emit(info)
    else:
        for k, v in info.items():
            print(f"{k}: {v}")
    return 0


def cmd_subgroups(args):
    g = _group(args).group
    rows = lattice(g).to_json()
    if args.json:
        _emit(rows)
    else:
        for r in rows:
            flags = ("normal " if r["normal"] else "") + ("cyclic" if r["cyclic"] else "")
            print(f"{r['id']:>4}  order {r['order']:<4} {flags}")
    return 0


def _kernels(g, spec: str):
    lat = lattice(g)
    if spec == "all":
        return [s for s in lat if not s.is_whole]
    if spec == "center":
        return [center_and_centralizers(g)[0]]
    if spec == "frattini":
        return [frattini(g)]
    if spec.startswith("order:"):
        k = int(spec[len("order:"):])
        found = lat.of_order(k)
        if not found:
            raise GroupError(f"no subgroup of order {k}")
        return found[:1]
    return [lat[int(spec)]]


def cmd_partition_search(args):
    g = _group(args).group
    out = []
    for s in _kernels(g, args.kernel):
        if s.is_whole:
            raise GroupError("kernel must be a proper subgroup")
        out.extend(strict_partitions(g, s, equal_only=args.equal, limit=args.limit))
        if args.limit is not None and len(out) >= args.limit:
            out = out[:args.limit]
            break
    if args.json:
        _emit([c.to_json() for c in out])
    else:
        if not out:
            print("no partition found")
        for c in out:
            kind = "ES" if c.equal_orders else "strict"
            print(f"{kind} kernel order {c.kernel.order}: components {c.component_orders}")
    return 0


def cmd_construct(args):
    if args.what == "example108":
        cert = example_group_108()[1]
    else:
        if not args.group:
            raise GroupError("'construct es' needs a group name")
        g = _group(args).group
        cert = frattini_es_partition(g) if g.is_p_group else nilpotent_es_partition(g)
    _emit(cert.to_json())
    return 0


def cmd_verify(args):
    m = _manifest(args)
    sel = list(THEOREMS) if args.which == "all" else [args.which]
    reports = run_suite(m, sel)
    failed = [r for r in reports if r.failed]
    if args.json:
        doc = json.dumps([r.to_json() for r in reports], indent=2)
        if args.json == "-":
            print(doc)
        else:
            with open(args.json, "w") as fh:
                fh.write(doc + "\n")
    if args.json != "-":
        for r in reports:
            status = "FAIL" if r.failed else ("PASS" if "pass" in r.statuses else "----")
            print(f"[{status}] {r.theorem:<6} {r.group:<14} {len(r.clauses):>5} clauses {r.ms:9.1f} ms")
            for c in r.clauses:
                if c.status == "fail" or (args.verbose and c.status != "pass"):
                    print(f"         {c.status}: {c.description}")
        print(f"{len(reports)} reports, {len(failed)} with failing clauses")
    return 1 if failed else 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="partita", description="Strict and ES-partitions of finite groups.")
    p.add_argument("--corpus", help="manifest path or 'builtin' (default: $PARTITA_CORPUS or builtin)")
    sub = p.add_subparsers(dest="command", required=True)
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--corpus", default=argparse.SUPPRESS, help=argparse.SUPPRESS)

    cat = sub.add_parser("catalog", help="corpus listing")
    cat_sub = cat.add_subparsers(dest="action", required=True)
    cl = cat_sub.add_parser("list", parents=[common])
    cl.add_argument("--json", action="store_true")
    cl.set_defaults(func=cmd_catalog)

    grp = sub.add_parser("group", help="group information")
    grp_sub = grp.add_subparsers(dest="action", required=True)
    gs = grp_sub.add_parser("show", parents=[common])
    gs.add_argument("group")
    gs.add_argument("--json", action="store_true")
    gs.set_defaults(func=cmd_group_show)

    sg = sub.add_parser("subgroups", help="subgroup lattice dump", parents=[common])
    sg.add_argument("group")
    sg.add_argument("--json", action="store_true")
    sg.set_defaults(func=cmd_subgroups)

    part = sub.add_parser("partition", help="partition search")
    part_sub = part.add_subparsers(dest="action", required=True)
    ps = part_sub.add_parser("search", parents=[common])
    ps.add_argument("group")
    ps.add_argument("--kernel", default="0",
                    help="lattice id, order:k, center, frattini or all (default: 0, the trivial subgroup)")
    ps.add_argument("--equal", action="store_true", help="ES-partitions only")
    ps.add_argument("--limit", type=int, default=None)
    ps.add_argument("--json", action="store_true")
    ps.set_defaults(func=cmd_partition_search)

    con = sub.add_parser("construct", help="explicit constructions (certificate JSON)", parents=[common])
    con.add_argument("what", choices=["es", "example108"])
    con.add_argument("group", nargs="?")
    con.set_defaults(func=cmd_construct)

    ver = sub.add_parser("verify", help="run theorem checks over the corpus", parents=[common])
    ver.add_argument("which", choices=["all", *THEOREMS])
    ver.add_argument("--json", metavar="OUT", help="write report JSON to OUT ('-' for stdout)")
    ver.add_argument("-v", "--verbose", action="store_true")
    ver.set_defaults(func=cmd_verify)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (GroupError, ManifestError, IndexError, ValueError) as exc:
        print(f"partita: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
