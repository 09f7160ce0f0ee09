"""Command-line entry point: ``sylowscope``.

Exit codes: 0 everything requested passed, 1 some check failed, 2 nothing
failed but something was skipped, 3 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import catalog
from .config import load_config, set_config

EXIT_OK, EXIT_FAIL, EXIT_SKIPPED, EXIT_USAGE = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _emit(payload, path: str | None) -> None:
    if path is None:
        return
    text = json.dumps(payload, indent=2, sort_keys=False) + "\n"
    if path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def cmd_catalog(args) -> int:
    rows = catalog.list_entries()
    if args.json:
        _emit(rows, args.json)
    else:
        for r in rows:
            print(f"{r['id']:<32} {r['name']:<20} order {r['order']:<12} degree {r['degree']}")
    return EXIT_OK


def cmd_classify(args) -> int:
    from .equivalence import classify_pair

    try:
        entry = catalog.get_entry(args.group)
    except KeyError as exc:
        raise UsageError(str(exc.args[0])) from None
    for key in (args.u, args.v):
        if key not in entry.subgroups:
            raise UsageError(f"{args.group} has no subgroup {key!r}; "
                             f"known: {sorted(entry.subgroups)}")
    rep = classify_pair(entry.group, entry.subgroups[args.u], entry.subgroups[args.v], entry.id)
    data = rep.to_json()
    print(f"{entry.name}: {args.u} (order {rep.u['order']}) vs {args.v} (order {rep.v['order']})")
    for flag in ("conjugate", "sylow_conjugate", "gassmann", "same_core", "same_index"):
        print(f"  {flag:<16} {data[flag]}")
    if rep.sylow_failing_prime is not None:
        print(f"  failing prime    {rep.sylow_failing_prime}")
    if rep.gassmann_distinguishing_class:
        print(f"  distinguishing   {rep.gassmann_distinguishing_class}")
    _emit(data, args.json)
    return EXIT_OK


def cmd_search(args) -> int:
    from .equivalence import search_degree

    if not 1 <= args.degree <= 6:
        raise UsageError("--degree must be between 1 and 6")
    res = search_degree(args.degree)
    print(f"degree {res.degree}: {res.subgroup_count} subgroups of Sym({res.degree}) in "
          f"{res.class_count} classes, {len(res.transitive_groups)} transitive groups")
    for g in res.transitive_groups:
        print(f"  order {g['order']:<5} faithful index-{res.degree} classes "
              f"{g['faithful_index_classes']:<3} pairs {g['pairs']}")
    print(f"Sylow-conjugate nonconjugate faithful pairs: {len(res.pairs)}")
    _emit(res.to_json(), args.json)
    return EXIT_OK if not res.pairs else EXIT_FAIL


def cmd_census(args) -> int:
    from .census import census
    from .polys import get_polynomial

    try:
        f = get_polynomial(args.poly)
    except (OSError, ValueError, KeyError) as exc:
        raise UsageError(f"cannot load polynomial {args.poly!r}: {exc}") from None
    rep = census(f, args.pmax)
    data = rep.to_json(per_prime=args.per_prime)
    print(f"{f.name}: degree {f.degree}, {rep.total} unramified primes up to {rep.pmax}, "
          f"{len(rep.skipped)} skipped")
    for pat, fr in data["frequencies"].items():
        print(f"  {pat:<28} {fr:.6f}")
    _emit(data, args.json)
    return EXIT_OK


def cmd_verify(args) -> int:
    from .claims import PASS, FAIL, REGISTRY, list_claims, run_all

    if args.list:
        for cid, anchor in list_claims():
            print(f"{cid:<20} {anchor}")
        return EXIT_OK
    if not args.claim:
        raise UsageError("verify needs --claim <id|all> or --list")
    ids = list(REGISTRY) if args.claim == "all" else args.claim.split(",")
    unknown = [i for i in ids if i not in REGISTRY]
    if unknown:
        raise UsageError(f"unknown claim(s): {', '.join(unknown)}")
    results = run_all(ids, parallel=args.parallel)
    for r in results:
        line = f"{r.status:<8} {r.id:<20} {r.duration:7.2f}s"
        if r.reason:
            line += f"  ({r.reason})"
        print(line)
    _emit([r.to_json() for r in results] if len(results) > 1 else results[0].to_json(),
          args.json)
    statuses = {r.status for r in results}
    if FAIL in statuses:
        return EXIT_FAIL
    if statuses != {PASS}:
        return EXIT_SKIPPED
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="sylowscope", description="Sylow-conjugacy and Gassmann checks")
    p.add_argument("--config", help="JSON file overriding caps, pmax, tolerance, seed")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    c = sub.add_parser("catalog", help="list catalog entries")
    c.add_argument("action", choices=["list"])
    c.add_argument("--json", metavar="OUT", help="write JSON to OUT ('-' for stdout)")
    c.set_defaults(func=cmd_catalog)

    c = sub.add_parser("classify", help="classify a subgroup pair of a catalog group")
    c.add_argument("--group", required=True)
    c.add_argument("--u", required=True)
    c.add_argument("--v", required=True)
    c.add_argument("--json", metavar="OUT")
    c.set_defaults(func=cmd_classify)

    c = sub.add_parser("search", help="exhaustive pair search in degree d <= 6")
    c.add_argument("--degree", type=int, required=True)
    c.add_argument("--json", metavar="OUT")
    c.set_defaults(func=cmd_search)

    c = sub.add_parser("census", help="mod-p splitting patterns of a polynomial")
    c.add_argument("--poly", required=True, help="bundled name (p7, q7, ...) or JSON file")
    c.add_argument("--pmax", type=int, default=None)
    c.add_argument("--per-prime", action="store_true", help="include every prime's pattern")
    c.add_argument("--json", metavar="OUT")
    c.set_defaults(func=cmd_census)

    c = sub.add_parser("verify", help="run registered claims")
    c.add_argument("--claim", help="claim id, comma-separated ids, or 'all'")
    c.add_argument("--list", action="store_true")
    c.add_argument("--json", metavar="OUT")
    c.add_argument("--parallel", action="store_true")
    c.add_argument("--config", dest="verify_config", help=argparse.SUPPRESS)
    c.set_defaults(func=cmd_verify)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    cfg_path = args.config or getattr(args, "verify_config", None)
    if cfg_path:
        try:
            set_config(load_config(cfg_path))
        except (OSError, ValueError, TypeError) as exc:
            print(f"sylowscope: error: bad config {cfg_path}: {exc}", file=sys.stderr)
            return EXIT_USAGE
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"sylowscope: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
