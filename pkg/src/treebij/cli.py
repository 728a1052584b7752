"""Command line interface.

Exit codes: 0 on success, 1 when a verification fails or an input lies
outside a map's domain, 2 for usage and format errors.
"""
from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor

from . import bijection, identity, series
from .enumerate import CONSTRAINTS, FAMILIES, check_ceiling, count, gen_colored, gen_labeled, normalize_family, shape_ranges
from .errors import DomainError, TreeError
from .report import Check
from .serialize import dumps, loads

CHECKS = ("postnikov", "expanded", "ode", "functional", "bijection", "special")

FAMILY_CHOICES = sorted(set(FAMILIES) | {"forest", "plane_forest", "rooted_tree", "rooted_trees", "plane_tree",
                                         "tree", "binary_trees"})


class UsageError(Exception):
    pass


def _nonneg(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError("must be non-negative")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="treebij", description="Exact labeled-tree enumeration and bijections.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("count", help="closed-form number of labeled structures")
    p.add_argument("--family", required=True, choices=FAMILY_CHOICES)
    p.add_argument("--n", type=_nonneg, required=True)
    p.add_argument("--k", type=int)

    p = sub.add_parser("poly", help="proper-vertex polynomial as JSON")
    p.add_argument("--family", required=True, choices=FAMILY_CHOICES)
    p.add_argument("--n", type=_nonneg, required=True)
    p.add_argument("--k", type=int)
    p.add_argument("--method", choices=("closed", "brute", "recurrence"), default="closed")
    p.add_argument("--ceiling", type=int)

    p = sub.add_parser("verify", help="run an identity or bijection check")
    p.add_argument("--check", required=True, choices=CHECKS)
    p.add_argument("--n", type=_nonneg)
    p.add_argument("--k", type=int)
    p.add_argument("--family", choices=FAMILY_CHOICES)
    p.add_argument("--order", type=int, help="truncation order for series checks")
    p.add_argument("--t0", type=int, help="integer specialization for the functional check")
    p.add_argument("--json", action="store_true", help="machine-readable summary")
    p.add_argument("--parallel", type=int, nargs="?", const=4, default=1, metavar="WORKERS")

    p = sub.add_parser("enum", help="list structures as JSON lines")
    p.add_argument("--family", choices=FAMILY_CHOICES)
    p.add_argument("--n", type=_nonneg, required=True)
    p.add_argument("--k", type=int)
    p.add_argument("--constraint", choices=CONSTRAINTS)
    p.add_argument("--include-empty", action="store_true")
    p.add_argument("--ceiling", type=int)
    p.add_argument("--parallel", type=int, nargs="?", const=4, default=1, metavar="WORKERS")

    p = sub.add_parser("map", help="apply a map to a JSON record read from stdin")
    p.add_argument("--name", required=True, choices=bijection.MAP_NAMES)
    p.add_argument("--direction", choices=("forward", "inverse"), default="forward")
    p.add_argument("--vertex", type=int, help="vertex for flip_at")
    return parser


def cmd_count(args) -> int:
    print(count(args.family, args.n, args.k))
    return 0


def cmd_poly(args) -> int:
    family = normalize_family(args.family)
    k = 2 if family == "binary" else args.k
    if args.method == "closed":
        poly = identity.poly_closed(family, args.n, k)
    elif args.method == "brute":
        poly = identity.poly_brute(family, args.n, k, ceiling=args.ceiling)
    else:
        if family not in ("kary", "binary"):
            raise UsageError("the recurrence method applies to k-ary trees only")
        if k is None:
            raise UsageError("--k is required for k-ary trees")
        poly = identity.poly_recurrence(args.n, k)
    record = {"family": family, "n": args.n, "method": args.method, "coeffs": [str(c) for c in poly.coeffs]}
    if k is not None:
        record["k"] = k
    print(json.dumps(record, sort_keys=True, separators=(",", ":")))
    return 0


def _need(value, flag: str):
    if value is None:
        raise UsageError(f"{flag} is required for this check")
    return value


def _run_check(args) -> list:
    check = args.check
    if check == "postnikov":
        n = _need(args.n, "--n")
        got = identity.rhs_postnikov(n, workers=args.parallel)
        return [Check(f"hook sum n={n}", got, (n + 1) ** (n - 1))]
    if check == "expanded":
        n = _need(args.n, "--n")
        target = 2 ** n * (n + 1) ** (n - 1)
        return [Check(f"expanded n={n} (product form)", identity.rhs_expanded(n, workers=args.parallel), target),
                Check(f"expanded n={n} (subset sums)", identity.rhs_expanded_subsets(n), target)]
    if check == "special":
        return identity.special_values(_need(args.n, "--n"), args.k or 2)
    if check == "bijection":
        return bijection.verify_bijection(_need(args.n, "--n"))
    family = args.family or "kary"
    k = args.k if args.k is not None else (2 if normalize_family(family) in ("kary", "binary") else None)
    if check == "ode":
        return [series.check_ode(family, args.order or 10, k)]
    order = args.order or 8
    if args.t0 is not None:
        return [series.check_functional(family, order, args.t0, k)]
    return [series.check_functional(family, order, t0, k) for t0 in range(-3, 6)
            if series.degenerate_exponent(family, t0, k) != 0]


def cmd_verify(args) -> int:
    results = _run_check(args)
    ok = all(r.passed for r in results)
    if args.json:
        print(json.dumps({"check": args.check, "passed": ok, "results": [r.as_dict() for r in results]},
                         sort_keys=True))
    else:
        for r in results:
            print(r.line())
    return 0 if ok else 1


def _slotted_chunk(family: str, n: int, k, lo: int, hi: int, include_empty: bool) -> list:
    return [dumps(s) for s in gen_labeled(family, n, k, shape_range=(lo, hi)) if include_empty or len(s)]


def cmd_enum(args) -> int:
    constraint = args.constraint or "all"
    if constraint == "all" and args.family is None:
        raise UsageError("--family is required unless a constraint is given")
    family = normalize_family(args.family) if args.family else None
    k = args.k
    if family == "kary" and k is None:
        raise UsageError("--k is required for k-ary trees")
    out = sys.stdout
    if constraint == "all" and family in ("binary", "kary") and args.parallel > 1:
        check_ceiling(count(family, args.n, k), args.ceiling)
        ranges = shape_ranges(args.n, args.parallel, 2 if family == "binary" else k)
        with ProcessPoolExecutor(max_workers=args.parallel) as pool:
            futures = [pool.submit(_slotted_chunk, family, args.n, k, lo, hi, args.include_empty)
                       for lo, hi in ranges]
            for fut in futures:
                for line in fut.result():
                    out.write(line + "\n")
        return 0
    if constraint == "all":
        stream = gen_labeled(family, args.n, k, ceiling=args.ceiling)
    else:
        stream = gen_colored(family, args.n, constraint, k, ceiling=args.ceiling)
    for s in stream:
        if len(s) or args.include_empty:
            out.write(dumps(s) + "\n")
    return 0


def cmd_map(args) -> int:
    if args.name == "flip_at" and args.vertex is None:
        raise UsageError("--vertex is required for flip_at")
    structure = loads(sys.stdin.read())
    image = bijection.apply_map(args.name, structure, inverse=args.direction == "inverse", vertex=args.vertex)
    print(dumps(image))
    return 0


COMMANDS = {"count": cmd_count, "poly": cmd_poly, "verify": cmd_verify, "enum": cmd_enum, "map": cmd_map}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except DomainError as exc:
        # only a map input can lie outside a domain; elsewhere it is a bad parameter
        print(f"error: {exc}", file=sys.stderr)
        return 1 if args.command == "map" else 2
    except (UsageError, TreeError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
