"""Command-line entry point for the verification sweeps.

Each subcommand assembles a report dict and emits it as deterministic JSON
(sorted keys, sorted rows, two-space indent, trailing newline). Exit status
is 0 when every check passed, 1 on a mathematical failure, 2 on a usage
error.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict
from typing import List, Optional, Sequence, Tuple

from .blocks import enumerate_compositions, partitions
from .daha import TensorContext, casimir_compatibility, verify_daha
from .k0rep import (
    verify_quotient_intertwines,
    verify_serre_and_commute,
    verify_sl2_block_relation,
)
from .kverify import (
    find_conventions,
    verify_commute,
    verify_ef_relation,
    verify_serre_graded,
    verify_twist,
)


class UsageError(Exception):
    pass


def _parse_lambda(text: str) -> Tuple[int, ...]:
    try:
        parts = tuple(int(p) for p in text.split(","))
    except ValueError:
        raise UsageError("cannot parse partition %r" % text)
    if not parts or any(p < 1 for p in parts):
        raise UsageError("partition parts must be positive integers")
    return tuple(sorted(parts, reverse=True))


def _row_key(row: dict) -> str:
    return json.dumps(row, sort_keys=True)


def _report(command: str, config: dict, rows: List[dict],
            extra: Optional[dict] = None) -> Tuple[dict, int]:
    rows = sorted(rows, key=_row_key)
    counts = {"pass": 0, "fail": 0, "skipped": 0}
    for row in rows:
        counts[row["status"]] = counts.get(row["status"], 0) + 1
    status = "pass" if counts["fail"] == 0 else "fail"
    report = {"command": command, "config": config, "rows": rows,
              "counts": counts, "status": status}
    if extra:
        report.update(extra)
    return report, 0 if status == "pass" else 1


def _emit(report: dict, out: Optional[str]) -> None:
    text = json.dumps(report, sort_keys=True, indent=2) + "\n"
    if out:
        with open(out, "w") as fh:
            fh.write(text)
        counts = report.get("counts", {})
        print("%s: %s (%d pass, %d fail, %d skipped)" % (
            report.get("command", "?"), report.get("status", "?"),
            counts.get("pass", 0), counts.get("fail", 0),
            counts.get("skipped", 0)))
    else:
        sys.stdout.write(text)


# -- blocks ------------------------------------------------------------


def cmd_blocks(args: argparse.Namespace) -> Tuple[dict, int]:
    n, k = args.n, args.k
    if n < 1 or k < 2:
        raise UsageError("need --n >= 1 and --k >= 2")
    if args.lam is not None:
        lam = _parse_lambda(args.lam)
        if sum(lam) != n:
            raise UsageError("partition %s does not sum to n=%d" %
                             (",".join(map(str, lam)), n))
        lams = [lam]
    else:
        lams = list(partitions(n))
    from .blocks import count_simples, weight_space_dim

    rows = []
    for lam in lams:
        for a in enumerate_compositions(n, k):
            simples = count_simples(lam, a)
            dim = weight_space_dim(lam, k, a)
            rows.append({"lambda": list(lam), "block": list(a),
                         "simples": simples, "weight_dim": dim,
                         "status": "pass" if simples == dim else "fail"})
    return _report("blocks", {"n": n, "k": k}, rows)


# -- relations ---------------------------------------------------------


def cmd_relations(args: argparse.Namespace) -> Tuple[dict, int]:
    n_max, k_max = args.n, args.k
    if n_max < 1 or k_max < 2:
        raise UsageError("need --n >= 1 and --k >= 2")
    lam_filter = _parse_lambda(args.lam) if args.lam is not None else None
    which = args.relation
    rows = []
    for n in range(1, n_max + 1):
        for k in range(2, k_max + 1):
            if which in ("all", "ef"):
                for a in enumerate_compositions(n, k):
                    for i in range(1, k):
                        rows.append(verify_sl2_block_relation(
                            k, n, a, i, perturb=args.perturb))
            if which in ("all", "serre", "commute"):
                row = verify_serre_and_commute(k, n, perturb=args.perturb)
                if row["checks"] == 0:
                    row = dict(row, status="skipped")
                rows.append(row)
            if which in ("all", "quotient"):
                for lam in partitions(n):
                    if lam_filter is not None and lam != lam_filter:
                        continue
                    rows.append(verify_quotient_intertwines(lam, k, n))
    return _report("relations", {"n": n_max, "k": k_max,
                                 "relation": which,
                                 "perturb": args.perturb}, rows)


# -- daha --------------------------------------------------------------


def cmd_daha(args: argparse.Namespace) -> Tuple[dict, int]:
    if args.n < 2 or args.m < 0 or args.d < 2:
        raise UsageError("need --n >= 2, --m >= 0, --d >= 2")
    rows = []
    epsilons = set()
    for n in range(2, args.n + 1):
        for m in range(0, args.m + 1):
            for d in range(2, args.d + 1):
                ctx = TensorContext(n, m, d)
                row = verify_daha(ctx, perturb=args.perturb)
                if row["status"] == "pass" and row["epsilon"] is not None:
                    epsilons.add(row["epsilon"])
                rows.append(row)
                rows.append(dict(casimir_compatibility(ctx),
                                 relation="casimir"))
    extra = {"epsilon": sorted(epsilons)[0] if len(epsilons) == 1 else None}
    report, code = _report("daha", {"n": args.n, "m": args.m, "d": args.d,
                                    "perturb": args.perturb}, rows, extra)
    if len(epsilons) > 1:
        report["status"] = "fail"
        code = 1
    return report, code


# -- kernels -----------------------------------------------------------


def _kernel_task(task: Tuple) -> dict:
    name, a, i, j, variant, conv, perturb = task
    if name == "ef":
        return verify_ef_relation(a, i, variant, conv, perturb=perturb)
    if name == "commute":
        return verify_commute(a, i, j, variant, conv)
    if name == "serre":
        return verify_serre_graded(a, i, j, variant, conv, check_q1=True)
    if name == "twist":
        return verify_twist(a, i, conv)
    raise ValueError("unknown task %r" % name)


def cmd_kernels(args: argparse.Namespace) -> Tuple[dict, int]:
    n_max, k_max = args.n, args.k
    if n_max < 1 or k_max < 2:
        raise UsageError("need --n >= 1 and --k >= 2")
    if args.jobs < 1:
        raise UsageError("need --jobs >= 1")
    variants = args.variant or ["CK0", "P0"]
    which = args.relation
    conv, log = find_conventions()
    if conv is None:
        report = {"command": "kernels", "status": "fail", "conventions": None,
                  "failure_matrix": log,
                  "config": {"n": n_max, "k": k_max}}
        return report, 1
    tasks: List[Tuple] = []
    for n in range(1, n_max + 1):
        for k in range(2, k_max + 1):
            for a in enumerate_compositions(n, k):
                for i in range(1, k):
                    if which in ("all", "ef"):
                        for variant in variants:
                            tasks.append(("ef", a, i, 0, variant, conv,
                                          args.perturb))
                    if which in ("all", "commute"):
                        for j in range(1, k):
                            if j != i:
                                for variant in variants:
                                    tasks.append(("commute", a, i, j, variant,
                                                  conv, False))
                    if which in ("all", "serre"):
                        for j in (i - 1, i + 1):
                            if 1 <= j < k:
                                tasks.append(("serre", a, i, j, "CK0", conv,
                                              False))
                    if which in ("all", "twist"):
                        tasks.append(("twist", a, i, 0, "", conv, False))
    if args.jobs > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            chunk = max(1, len(tasks) // (args.jobs * 4))
            rows = list(pool.map(_kernel_task, tasks, chunksize=chunk))
    else:
        rows = [_kernel_task(t) for t in tasks]
    extra = {"conventions": asdict(conv), "rejected_candidates": len(log)}
    return _report("kernels", {"n": n_max, "k": k_max, "relation": which,
                               "variants": sorted(variants),
                               "perturb": args.perturb}, rows, extra)


# -- plumbing ----------------------------------------------------------


def _parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="slkcheck",
        description="Exact verification sweeps for the block combinatorics, "
                    "Grothendieck-group operators, Hecke-algebra action, and "
                    "localized kernel calculus.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("blocks",
                       help="compare orbit-class counts with weight-space "
                            "dimensions, block by block")
    p.add_argument("--n", type=int, default=4, help="size of the partitions")
    p.add_argument("--k", type=int, default=3, help="number of parts per block")
    p.add_argument("--lambda", dest="lam", default=None,
                   help="restrict to one partition, e.g. 2,1")
    p.add_argument("--out", default=None, help="write the JSON report here")
    p.set_defaults(func=cmd_blocks)

    p = sub.add_parser("relations",
                       help="exact operator identities on the tuple model")
    p.add_argument("--n", type=int, default=4, help="largest tuple length")
    p.add_argument("--k", type=int, default=3, help="largest value range")
    p.add_argument("--lambda", dest="lam", default=None,
                   help="restrict the quotient checks to one partition")
    p.add_argument("--relation", default="all",
                   choices=("all", "ef", "serre", "commute", "quotient"),
                   help="which identity family to run")
    p.add_argument("--perturb", action="store_true",
                   help="inject a fault; the run must then fail")
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_relations)

    p = sub.add_parser("daha",
                       help="polynomial/symmetric-group relations on tensor "
                            "space")
    p.add_argument("--n", type=int, default=3, help="largest vector-space dim")
    p.add_argument("--m", type=int, default=2, help="largest left-factor count")
    p.add_argument("--d", type=int, default=3, help="largest right-factor count")
    p.add_argument("--perturb", action="store_true")
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_daha)

    p = sub.add_parser("kernels",
                       help="convention search plus the localized kernel "
                            "relation sweep")
    p.add_argument("--n", type=int, default=4, help="largest composition sum")
    p.add_argument("--k", type=int, default=3, help="largest composition length")
    p.add_argument("--relation", default="all",
                   choices=("all", "ef", "commute", "serre", "twist"),
                   help="which kernel identity family to run "
                        "(the cubic check runs on the CK0 flavor)")
    p.add_argument("--variant", action="append",
                   choices=("CK0", "P0", "CK1", "P1"),
                   help="kernel flavor for ef/commute; repeatable; "
                        "default CK0 and P0")
    p.add_argument("--jobs", type=int, default=1,
                   help="worker processes for the sweep")
    p.add_argument("--perturb", action="store_true",
                   help="inject a fault into the first kernel of each "
                        "ef instance; the run must then fail")
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_kernels)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = _parser().parse_args(argv)
    try:
        report, code = args.func(args)
    except UsageError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2
    _emit(report, args.out)
    return code


if __name__ == "__main__":
    sys.exit(main())
