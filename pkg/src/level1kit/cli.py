"""Command-line interface.

Exit codes: 0 for success or a true verdict, 1 for a false verdict,
2 for usage or input errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .defining import check_defines, defining_clusters_simple, defining_triplets_simple
from .enewick import parse_enewick, write_enewick
from .enumeration import FILTERS, EnumSpec, enumerate_level1
from .errors import Level1Error
from .formats import format_clusters, format_triplets, parse_clusters, parse_triplets
from .network import classify, equivalent
from .snops import collapse, cut_partition, maximal_sn_sets, restrict
from .systems import hardwired_clusters, softwired_clusters, triplets
from .verify import SUITE_IDS, run_suites


def _load_network(path: str):
    return parse_enewick(Path(path).read_text())


def _print_blocks(blocks) -> None:
    for b in sorted(blocks, key=lambda s: sorted(s)):
        print(",".join(sorted(b)))


def _cmd_validate(args) -> int:
    try:
        net = _load_network(args.file)
    except Level1Error as exc:
        print(f"invalid: {type(exc).__name__}: {exc}")
        return 1
    print(f"valid network on {net.n} taxa")
    return 0


def _cmd_stats(args) -> int:
    cls = classify(_load_network(args.file))
    print(json.dumps({
        "n": cls.n,
        "V": cls.num_vertices,
        "A": cls.num_arcs,
        "g": cls.g,
        "c": cls.c,
        "is_tree": cls.is_tree,
        "is_proper": cls.is_proper,
        "is_simple": cls.is_simple,
        "is_saturated": cls.is_saturated,
        "is_four_outwards": cls.is_four_outwards,
    }))
    return 0


def _cmd_triplets(args) -> int:
    sys.stdout.write(format_triplets(triplets(_load_network(args.file))))
    return 0


def _cmd_clusters(args) -> int:
    net = _load_network(args.file)
    system = hardwired_clusters(net) if args.hardwired else softwired_clusters(net)
    sys.stdout.write(format_clusters(system))
    return 0


def _cmd_snsets(args) -> int:
    net = _load_network(args.file)
    _print_blocks(maximal_sn_sets(triplets(net)).blocks)
    return 0


def _cmd_cut(args) -> int:
    _print_blocks(cut_partition(_load_network(args.file)).blocks)
    return 0


def _cmd_collapse(args) -> int:
    result = collapse(_load_network(args.file))
    print(write_enewick(result.collapsed))
    for block, rep in sorted(result.representative_of.items(), key=lambda kv: kv[1]):
        print(f"{rep} <- {','.join(sorted(block))}")
    return 0


def _cmd_restrict(args) -> int:
    keep = [t.strip() for t in args.keep.split(",") if t.strip()]
    print(write_enewick(restrict(_load_network(args.file), keep)))
    return 0


def _cmd_equiv(args) -> int:
    same = equivalent(_load_network(args.file1), _load_network(args.file2))
    print("equivalent" if same else "not equivalent")
    return 0 if same else 1


def _cmd_enumerate(args) -> int:
    taxa = tuple(f"x{i}" for i in range(1, args.n + 1))
    spec = EnumSpec(taxa, frozenset(args.filter or ()), args.max_count)
    for net in enumerate_level1(spec):
        print(write_enewick(net))
    return 0


def _cmd_define(args) -> int:
    net = _load_network(args.file)
    if args.kind == "triplets":
        sys.stdout.write(format_triplets(defining_triplets_simple(net)))
    else:
        sys.stdout.write(format_clusters(defining_clusters_simple(net)))
    return 0


def _cmd_check_defines(args) -> int:
    net = _load_network(args.file)
    text = Path(args.system).read_text()
    system = parse_triplets(text) if args.kind == "triplets" else parse_clusters(text)
    if args.kind == "triplets":
        system = type(system)(system.triplets, net.taxa)
    else:
        system = type(system)(system.clusters, net.taxa)
    report = check_defines(system, args.kind, net, collect_survivors=False)
    print(f"defines={report.defines} survivors={report.survivor_count}")
    return 0 if report.defines else 1


def _cmd_verify(args) -> int:
    suites = args.suite or None
    report = run_suites(suites, max_n=args.max_n, random_count=args.random_count)
    if args.json:
        print(report.to_json())
    else:
        for r in report.results:
            mark = "PASS" if r.passed else "FAIL"
            print(f"{mark} {r.suite} [{r.check}] instances={r.instances} "
                  f"elapsed={r.elapsed_ms:.0f}ms")
            for note in r.notes:
                print(f"     note: {note}")
            for failure in r.failures[:10]:
                print(f"     counterexample: {failure}")
        print(f"overall: {'PASS' if report.overall_pass else 'FAIL'}")
    return 0 if report.overall_pass else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="level1kit",
        description="Rooted binary level-1 network toolkit")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="validate an eNewick file")
    p.add_argument("file")
    p.set_defaults(fn=_cmd_validate)

    p = sub.add_parser("stats", help="structural counts and flags as JSON")
    p.add_argument("file")
    p.set_defaults(fn=_cmd_stats)

    p = sub.add_parser("triplets", help="induced triplet system")
    p.add_argument("file")
    p.set_defaults(fn=_cmd_triplets)

    p = sub.add_parser("clusters", help="induced cluster system")
    p.add_argument("file")
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--hardwired", action="store_true")
    mode.add_argument("--softwired", action="store_true", default=True)
    p.set_defaults(fn=_cmd_clusters)

    p = sub.add_parser("snsets", help="maximal SN-sets of the induced triplets")
    p.add_argument("file")
    p.set_defaults(fn=_cmd_snsets)

    p = sub.add_parser("cut", help="partition below the highest cut arcs")
    p.add_argument("file")
    p.set_defaults(fn=_cmd_cut)

    p = sub.add_parser("collapse", help="collapse pendant subnetworks to representatives")
    p.add_argument("file")
    p.set_defaults(fn=_cmd_collapse)

    p = sub.add_parser("restrict", help="restrict to a taxon subset")
    p.add_argument("file")
    p.add_argument("--keep", required=True, help="comma-separated taxa")
    p.set_defaults(fn=_cmd_restrict)

    p = sub.add_parser("equiv", help="test two files for equivalence")
    p.add_argument("file1")
    p.add_argument("file2")
    p.set_defaults(fn=_cmd_equiv)

    p = sub.add_parser("enumerate", help="stream all networks on x1..xN")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--filter", action="append", choices=FILTERS)
    p.add_argument("--max-count", type=int)
    p.set_defaults(fn=_cmd_enumerate)

    p = sub.add_parser("define", help="defining system for a simple network")
    p.add_argument("file")
    p.add_argument("--kind", choices=("triplets", "clusters"), required=True)
    p.set_defaults(fn=_cmd_define)

    p = sub.add_parser("check-defines", help="does a system pin the network down?")
    p.add_argument("file")
    p.add_argument("--system", required=True)
    p.add_argument("--kind", choices=("triplets", "clusters"), required=True)
    p.set_defaults(fn=_cmd_check_defines)

    p = sub.add_parser("verify", help="run verification suites")
    p.add_argument("--suite", action="append", choices=SUITE_IDS)
    p.add_argument("--max-n", type=int, default=5)
    p.add_argument("--random-count", type=int, default=100)
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=_cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        return args.fn(args)
    except Level1Error as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
