"""Batch command-line front end.

Subcommands: decide/search/count/enum/verify for extension instances,
group utilities over generator lists, an explicit subset-sum solver, and a
report path that renders benchmark figures next to delimited output.

Exit codes: 0 = ran to completion (including "not extendable"),
2 = input error, 3 = resource bound exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from concurrent.futures import ThreadPoolExecutor

from .counters import Counters
from .errors import BoundExceededError, HomextError, PartialMapError
from .extension import (
    count_extensions,
    extension_restricts_to_gamma,
    homext_threshold,
    solve,
)
from .formats import (
    extension_from_dict,
    extension_to_dict,
    load_instance,
    load_multissr,
    solution_to_jsonable,
)
from .groupalg import (
    centralizer_in_sym,
    conjugacy_test,
    double_coset_reps,
    enumerate_coset_reps,
    normalizer,
)
from .groups import (
    PermGroup,
    parse_permutation,
    parse_permutation_list,
    point_stabilizer,
    subgroup_index,
)
from .multissr import OracleBundle, brute_subsum, threshold_enumerate, tri_solve


def _emit(report: dict, fmt: str):
    if fmt == "json":
        print(json.dumps(report, indent=2, sort_keys=True))
    else:
        for key, value in sorted(report.items()):
            print(f"{key}: {value}")


def _instance_kwargs(args) -> dict:
    return {
        "mode_override": args.mode,
        "index_bound_r": args.index_bound_r,
        "brute_cap": args.brute_cap,
        "check_bounds": not args.no_bound_check,
    }


def _run_homext_file(sub: str, path: str, args) -> dict:
    counters = Counters()
    t0 = time.perf_counter()
    instance = load_instance(path, **_instance_kwargs(args))
    report: dict = {"command": f"homext {sub}", "instance": path}
    if sub == "decide":
        val, _ = homext_threshold(instance, 0, counters)
        report["extendable"] = val == "more"
    elif sub == "search":
        val, out = homext_threshold(instance, 1, counters)
        if out:
            report["extension"] = extension_to_dict(instance, out[0])
            report["extendable"] = True
        else:
            report["extendable"] = False
            report["extension"] = None
    elif sub == "count":
        report["count"] = count_extensions(instance, counters)
    elif sub == "enum":
        val, out = homext_threshold(instance, args.k, counters)
        report["val"] = val
        report["extensions"] = [extension_to_dict(instance, e) for e in out]
    elif sub == "solutions":
        sols = solve(instance, counters)
        report["solutions"] = [solution_to_jsonable(s) for s in sols]
    else:
        raise ValueError(sub)
    report["counters"] = counters.as_dict()
    report["timing_ms"] = round((time.perf_counter() - t0) * 1000, 3)
    return report


def cmd_homext(sub: str, args) -> int:
    paths = args.files
    try:
        if len(paths) > 1 and args.jobs > 1:
            with ThreadPoolExecutor(max_workers=args.jobs) as pool:
                reports = list(pool.map(
                    lambda p: _run_homext_file(sub, p, args), paths))
        else:
            reports = [_run_homext_file(sub, p, args) for p in paths]
    except BoundExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (HomextError, ValueError, OSError, json.JSONDecodeError) as exc:
        if isinstance(exc, PartialMapError) and exc.relator_index is not None:
            print(f"error: {exc} (failing relator index "
                  f"{exc.relator_index})", file=sys.stderr)
        else:
            print(f"error: {exc}", file=sys.stderr)
        return 2
    for report in reports:
        _emit(report, args.format)
    return 0


def cmd_verify(args) -> int:
    try:
        instance = load_instance(args.instance, **_instance_kwargs(args))
        with open(args.extension) as fh:
            ext = extension_from_dict(instance, json.load(fh))
        valid = extension_restricts_to_gamma(instance, ext)
    except (HomextError, ValueError, OSError, json.JSONDecodeError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    _emit({"command": "homext verify", "instance": args.instance,
           "extension": args.extension, "valid": valid}, args.format)
    return 0


def _parse_group(text: str, degree: int | None) -> PermGroup:
    gens = parse_permutation_list(text, degree)
    if not gens:
        if degree is None:
            raise ValueError("empty generator list requires --degree")
        return PermGroup([], degree=degree)
    if degree is None:
        degree = max(g.degree for g in gens)
    return PermGroup(gens, degree)


def cmd_group(args) -> int:
    counters = Counters()
    t0 = time.perf_counter()
    needs_sub = {"index", "normalizer", "conjugate", "double-cosets", "coset-reps"}
    needs_other = {"conjugate", "double-cosets"}
    try:
        if args.group_cmd == "stabilizer" and args.point is None:
            raise ValueError("--point is required")
        if args.group_cmd in needs_sub and args.sub is None:
            raise ValueError("--sub is required")
        if args.group_cmd in needs_other and args.other is None:
            raise ValueError("--other is required")
        group = _parse_group(args.gens, args.degree)
        report: dict = {"command": f"group {args.group_cmd}"}
        if args.group_cmd == "order":
            report["order"] = group.order()
        elif args.group_cmd == "orbits":
            report["orbits"] = group.orbits()
        elif args.group_cmd == "stabilizer":
            stab = point_stabilizer(group, args.point)
            report["generators"] = [str(g) for g in stab.generators]
            report["order"] = stab.order()
        elif args.group_cmd == "index":
            sub = _parse_group(args.sub, group.degree)
            report["index"] = subgroup_index(group, sub)
        elif args.group_cmd == "normalizer":
            sub = _parse_group(args.sub, group.degree)
            norm = normalizer(group, sub, counters)
            report["generators"] = [str(g) for g in norm.generators]
            report["order"] = norm.order()
        elif args.group_cmd == "conjugate":
            sub = _parse_group(args.sub, group.degree)
            other = _parse_group(args.other, group.degree)
            witness = conjugacy_test(group, sub, other, counters)
            report["conjugate"] = witness is not None
            report["witness"] = str(witness) if witness is not None else None
        elif args.group_cmd == "centralizer":
            cent = centralizer_in_sym(group, counters)
            report["generators"] = [str(g) for g in cent.generators]
            report["order"] = cent.order()
        elif args.group_cmd == "double-cosets":
            left = _parse_group(args.sub, group.degree)
            right = _parse_group(args.other, group.degree)
            reps = double_coset_reps(group, left, right, counters)
            report["representatives"] = [str(r) for r in reps]
        elif args.group_cmd == "coset-reps":
            sub = _parse_group(args.sub, group.degree)
            reps = list(enumerate_coset_reps(sub, group, counters))
            report["representatives"] = [str(r) for r in reps]
        else:
            raise ValueError(args.group_cmd)
    except BoundExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (HomextError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    report["counters"] = counters.as_dict()
    report["timing_ms"] = round((time.perf_counter() - t0) * 1000, 3)
    _emit(report, args.format)
    return 0


def cmd_multissr(args) -> int:
    t0 = time.perf_counter()
    try:
        data = load_multissr(args.file)
        target, family, ranks = data["target"], data["family"], data["ranks"]
        report: dict = {"command": "multissr solve", "instance": args.file}
        if ranks is not None:
            missing = [k for ms in [target, *family.values()]
                       for k, _ in ms if k not in ranks]
            if missing:
                raise ValueError(f"ranks missing for {sorted(set(missing))}")
            tau = {}
            for v, f in family.items():
                support = f.support()
                least = min(ranks[k] for k in support)
                mins = [k for k in support if ranks[k] == least]
                if len(mins) != 1 or mins[0] in tau:
                    raise ValueError(
                        "family is not triangular under the given ranks")
                tau[mins[0]] = v
            bundle = OracleBundle(
                equiv=lambda a, b: a == b,
                f_oracle=lambda v: family[v],
                precedes=lambda a, b: ranks[a] <= ranks[b],
                tri_oracle=lambda u: tau.get(u))
            sol = tri_solve(target, bundle)
            report["solution"] = None if sol is None else dict(sol)
        else:
            val, out = threshold_enumerate(
                iter(brute_subsum(target, sorted(family.items()))), args.k)
            report["val"] = val
            report["solutions"] = [dict(s) for s in out]
    except (HomextError, ValueError, OSError, json.JSONDecodeError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    report["timing_ms"] = round((time.perf_counter() - t0) * 1000, 3)
    _emit(report, args.format)
    return 0


def cmd_report(args) -> int:
    from . import report as report_mod
    try:
        paths = report_mod.write_report(args.out, quick=args.quick)
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    for p in paths:
        print(p)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="homext",
        description="Decide, search, count and enumerate extensions of "
                    "partial permutation-group homomorphisms.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p):
        p.add_argument("--format", choices=["json", "text"], default="json")

    def add_instance_opts(p):
        p.add_argument("--mode", choices=["brute", "triangular"], default=None,
                       help="override the instance file's mode")
        p.add_argument("--brute-cap", type=int, default=None,
                       help="largest |G| allowed in brute mode")
        p.add_argument("--index-bound-r", type=int, default=None,
                       help="r in the [G:M] <= C(n,r) triangular bound")
        p.add_argument("--no-bound-check", action="store_true",
                       help="run triangular mode outside its guaranteed regime")
        p.add_argument("--jobs", type=int, default=1,
                       help="worker threads across instance files")

    for name in ("decide", "search", "count", "enum", "solutions"):
        p = sub.add_parser(name, help=f"{name} extensions of instance files")
        p.add_argument("files", nargs="+")
        if name == "enum":
            p.add_argument("--k", type=int, required=True)
        add_instance_opts(p)
        add_common(p)

    p = sub.add_parser("verify", help="validate an extension file")
    p.add_argument("instance")
    p.add_argument("extension")
    add_instance_opts(p)
    add_common(p)

    p = sub.add_parser("group", help="permutation-group utilities")
    p.add_argument("group_cmd", choices=[
        "order", "orbits", "stabilizer", "index", "normalizer", "conjugate",
        "centralizer", "double-cosets", "coset-reps"])
    p.add_argument("--gens", required=True,
                   help='generators, e.g. "(1 2),(1 2 3 4 5)"')
    p.add_argument("--degree", type=int, default=None)
    p.add_argument("--point", type=int, default=None)
    p.add_argument("--sub", default=None,
                   help="subgroup generators where applicable")
    p.add_argument("--other", default=None,
                   help="second subgroup generators where applicable")
    add_common(p)

    p = sub.add_parser("multissr", help="explicit subset-sum instances")
    p.add_argument("multissr_cmd", choices=["solve"])
    p.add_argument("file")
    p.add_argument("--k", type=int, default=16,
                   help="threshold for brute enumeration")
    add_common(p)

    p = sub.add_parser("report", help="render benchmark figures and CSV")
    p.add_argument("--out", required=True)
    p.add_argument("--quick", action="store_true")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.command in ("decide", "search", "count", "enum", "solutions"):
        return cmd_homext(args.command, args)
    if args.command == "verify":
        return cmd_verify(args)
    if args.command == "group":
        return cmd_group(args)
    if args.command == "multissr":
        return cmd_multissr(args)
    if args.command == "report":
        return cmd_report(args)
    return 2


if __name__ == "__main__":
    sys.exit(main())
