"""Batch command-line front end.

Subcommands: count (closed forms), enumerate (oracles), separate (the
difference-changing construction), verify (exhaustive sweeps).  Output on
stdout is byte-identical across runs for identical flags; timings go to
stderr.

Exit codes: 0 success, 2 precondition or regime error, 3 invariant
violation (a sweep failed or an internal guarantee fired), 4 node budget
exceeded.
"""

from __future__ import annotations

import argparse
import os
import sys

from . import verify as sweeps
from .core import (
    FormatError,
    InvalidPartitionError,
    PartitionType,
    UnsupportedTypeError,
    format_partition,
    parse_partition,
)
from .counting import (
    OutOfRegimeError,
    cyclic_multinomial,
    generalized_kaplansky,
    kaplansky,
    msun_count,
)
from .enumeration import (
    BudgetExceededError,
    EnumerationBudget,
    count_ap_partitions,
    count_spaced_subsets,
    enumerate_ap_partitions,
    enumerate_spaced_subsets,
    was_truncated,
)
from .separation import (
    InvariantViolationError,
    SeparationConditionError,
    format_trace,
    separate_with_trace,
)

BUDGET_ENV = "APCYCLE_MAX_NODES"


def _budget(args) -> EnumerationBudget | None:
    max_nodes = getattr(args, "max_nodes", None)
    if max_nodes is None:
        env = os.environ.get(BUDGET_ENV)
        if env:
            max_nodes = int(env)
    if max_nodes is None:
        return None
    return EnumerationBudget(max_nodes, getattr(args, "on_exceed", "fail"))


def _cmd_count(args) -> int:
    if args.kind == "kaplansky":
        value = kaplansky(args.n, args.k)
    elif args.kind == "generalized":
        value = generalized_kaplansky(args.n, args.p, args.k)
    elif args.kind == "msun":
        value = msun_count(args.n, args.m, args.p, args.k)
    else:  # cyclic-multinomial
        value = cyclic_multinomial(args.n, PartitionType.parse(args.type))
    print(value)
    return 0


def _cmd_enumerate(args) -> int:
    budget = _budget(args)
    if args.kind == "subsets":
        if args.count_only:
            print(count_spaced_subsets(args.n, args.m, args.p, args.k))
        else:
            for subset in enumerate_spaced_subsets(args.n, args.m, args.p, args.k):
                print("{" + ",".join(map(str, subset)) + "}")
        return 0
    t = PartitionType.parse(args.type)
    m = 1 if args.kind == "dissections" else args.m
    if args.count_only:
        result = count_ap_partitions(args.n, m, t, budget)
        print(result)
    else:
        result = enumerate_ap_partitions(args.n, m, t, budget)
        for p in result:
            print(format_partition(p))
    if was_truncated(result):
        print("warning: node budget exceeded, output truncated", file=sys.stderr)
        return 4
    return 0


def _cmd_separate(args) -> int:
    text = sys.stdin.readline() if args.partition == "-" else args.partition
    p = parse_partition(text, normalize=args.normalize)
    result, trace = separate_with_trace(p, args.to, start=args.start)
    print(format_partition(result))
    if args.trace:
        for line in format_trace(p, args.to, trace):
            print(f"# {line}")
    return 0


def _cmd_verify(args) -> int:
    kwargs = {"jobs": args.jobs}
    if args.theorem in ("lemma1", "thm2"):
        budget = _budget(args)
        if budget is not None:
            kwargs["budget"] = budget
    if args.n_max is not None:
        kwargs["n_max"] = args.n_max
    if args.m_max is not None and args.theorem != "lemma1":
        kwargs["m_max"] = args.m_max
    if args.mprime_max is not None and args.theorem in ("thm4", "prop4"):
        kwargs["mprime_max"] = args.mprime_max
    if args.theorem == "thm1":
        if args.p_max is not None:
            kwargs["p_max"] = args.p_max
        if args.k_max is not None:
            kwargs["k_max"] = args.k_max
    report = sweeps.run_check(args.theorem, **kwargs)
    print(report.to_json() if args.format == "json" else report.to_table())
    print(f"elapsed: {report.elapsed:.3f}s", file=sys.stderr)
    return 0 if report.passed else 3


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="apcycle",
        description="Exact combinatorics of AP-block partitions of the cyclic group Z_n.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    count = sub.add_parser("count", help="evaluate a closed-form count")
    count_kinds = count.add_subparsers(dest="kind", required=True)
    ck = count_kinds.add_parser("kaplansky", help="k-subsets of Z_n with no cyclically adjacent pair")
    ck.add_argument("--n", type=int, required=True)
    ck.add_argument("--k", type=int, required=True)
    cg = count_kinds.add_parser("generalized", help="k-subsets with all directed distances > p")
    cg.add_argument("--n", type=int, required=True)
    cg.add_argument("--p", type=int, required=True)
    cg.add_argument("--k", type=int, required=True)
    cm = count_kinds.add_parser("msun", help="k-subsets avoiding differences m, 2m, ..., pm")
    cm.add_argument("--n", type=int, required=True)
    cm.add_argument("--m", type=int, required=True)
    cm.add_argument("--p", type=int, required=True)
    cm.add_argument("--k", type=int, required=True)
    cc = count_kinds.add_parser("cyclic-multinomial", help="dissections of an n-cycle of a type")
    cc.add_argument("--n", type=int, required=True)
    cc.add_argument("--type", required=True, help='partition type, e.g. "1^8,2^3,3^2"')
    count.set_defaults(func=_cmd_count)

    enum = sub.add_parser("enumerate", help="materialize an enumeration oracle")
    enum_kinds = enum.add_subparsers(dest="kind", required=True)
    ep = enum_kinds.add_parser("partitions", help="AP-partitions of a given type and difference")
    ep.add_argument("--n", type=int, required=True)
    ep.add_argument("--m", type=int, required=True)
    ep.add_argument("--type", required=True)
    ed = enum_kinds.add_parser("dissections", help="difference-1 partitions of a given type")
    ed.add_argument("--n", type=int, required=True)
    ed.add_argument("--type", required=True)
    es = enum_kinds.add_parser("subsets", help="k-subsets avoiding differences m, 2m, ..., pm")
    es.add_argument("--n", type=int, required=True)
    es.add_argument("--m", type=int, required=True)
    es.add_argument("--p", type=int, required=True)
    es.add_argument("--k", type=int, required=True)
    for sp in (ep, ed, es):
        sp.add_argument("--count-only", action="store_true", help="print only the count")
        sp.add_argument(
            "--max-nodes",
            type=int,
            default=None,
            help=f"search node budget (default: ${BUDGET_ENV} or unlimited)",
        )
        sp.add_argument("--on-exceed", choices=("fail", "truncate"), default="fail")
    enum.set_defaults(func=_cmd_enumerate)

    sep = sub.add_parser("separate", help="rebuild a partition with another difference")
    sep.add_argument("partition", help='canonical line "n=.. m=.. blocks=(h:l)..." or - for stdin')
    sep.add_argument("--to", type=int, required=True, help="target difference")
    sep.add_argument("--start", type=int, default=None, help="explicit starting head")
    sep.add_argument("--trace", action="store_true", help="show the head-by-head construction")
    sep.add_argument("--normalize", action="store_true", help="accept blocks out of head order")
    sep.set_defaults(func=_cmd_separate)

    ver = sub.add_parser("verify", help="run an exhaustive verification sweep")
    ver.add_argument("theorem", choices=sweeps.CHECKS)
    ver.add_argument("--n-max", type=int, default=None)
    ver.add_argument("--m-max", type=int, default=None)
    ver.add_argument("--mprime-max", type=int, default=None)
    ver.add_argument("--p-max", type=int, default=None)
    ver.add_argument("--k-max", type=int, default=None)
    ver.add_argument("--format", choices=("table", "json"), default="table")
    ver.add_argument("--jobs", type=int, default=1, help="parallel worker processes")
    ver.add_argument("--max-nodes", type=int, default=None)
    ver.set_defaults(func=_cmd_verify, on_exceed="fail")

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except BudgetExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 4
    except InvariantViolationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (
        OutOfRegimeError,
        UnsupportedTypeError,
        SeparationConditionError,
        FormatError,
        InvalidPartitionError,
        ValueError,
    ) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
