"""Command-line front end: ``noncross <command> [options]``.

Exit status is 2 on a usage error (including rejected input), 1 when a
``verify`` suite reports a failure, and 0 otherwise.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from noncross import formulas as F
from noncross.biject import GlueIndex, abs_map, glue, kreweras_decompose, split
from noncross.census import census
from noncross.core import BlockSizeVector, ClassicalPartition, SignedPartition, kreweras, validate
from noncross.enumfam import FamilySpec, base_partition, count_by_enumeration, enumerate_family
from noncross.errors import NoncrossError
from noncross.sampler import estimate
from noncross.verify import SUITES, summary, verify_grid

FORMULAS = (
    "family-count",
    "type-count",
    "block-total",
    "block-total-given-m",
    "zero-block-total",
    "d-subfamily-block-total",
    "expected-blocks",
    "expected-blocks-of-size",
    "total-block-sum",
    "asymptotic",
    "identity",
    "first-two",
)


class UsageError(Exception):
    pass


def _family_args(p: argparse.ArgumentParser, family_required: bool = True) -> None:
    p.add_argument("--family", choices=("A", "B", "D"), required=family_required, default="A")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, default=1)
    p.add_argument("--mode", choices=("all", "divisible", "equal"), default="divisible")
    p.add_argument("--subfamily", choices=("D1", "D2"))


def _guard_arg(p: argparse.ArgumentParser) -> None:
    p.add_argument("--max-points", type=int, help="enumeration guard (default 16 or $NONCROSS_MAX_POINTS)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="noncross", description="Non-crossing partition families of types A, B and D.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("count", help="family size")
    _family_args(p)
    _guard_arg(p)
    p.add_argument("--method", choices=("formula", "enumerate", "both"), default="formula")

    p = sub.add_parser("enumerate", help="stream members as JSON lines")
    _family_args(p)
    _guard_arg(p)

    p = sub.add_parser("census", help="block-size census table")
    _family_args(p)
    _guard_arg(p)
    p.add_argument("--format", choices=("csv", "json"), default="csv")

    p = sub.add_parser("formula", help="evaluate a closed form")
    p.add_argument("--name", choices=FORMULAS, required=True)
    _family_args(p, family_required=False)
    for flag in ("--t", "--m", "--s", "--x", "--y"):
        p.add_argument(flag, type=int)
    p.add_argument("--r", help="type vector r_1,..,r_n (for type-count)")
    p.add_argument("--kind", choices=("lemma0", "lemma1", "chu"), help="identity to evaluate")

    p = sub.add_parser("verify", help="cross-check closed forms against enumeration")
    p.add_argument("--suite", required=True, help=f"one of: {', '.join(SUITES)}")
    _guard_arg(p)
    p.add_argument("--force", action="store_true", help="allow bounds above the suite cap")
    p.add_argument("--format", choices=("plain", "json"), default="plain")

    p = sub.add_parser("bijection", help="apply glue / split / abs / kreweras-decompose")
    p.add_argument("--op", choices=("glue", "split", "abs", "kreweras-decompose"), required=True)
    p.add_argument("--partition", required=True, help="JSON list of blocks, or an object with a 'blocks' key")
    p.add_argument("--k", type=int, default=1)
    p.add_argument("--i", type=int, default=0, help="glue index 0..k")

    p = sub.add_parser("kreweras", help="Kreweras complement of a partition of [n]")
    p.add_argument("--partition", required=True)

    p = sub.add_parser("sample", help="Monte Carlo estimate under the uniform law")
    _family_args(p)
    _guard_arg(p)
    p.add_argument("--statistic", choices=("total_blocks", "blocks_of_size_t", "nonzero_pairs_of_size_t"), default="total_blocks")
    p.add_argument("--t", type=int)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--trials", type=int, default=10_000)
    return parser


# ---------------------------------------------------------------------------
# helpers


def _spec(args) -> FamilySpec:
    return FamilySpec(args.family, args.n, args.k, args.mode, args.subfamily)


def _partition_json(p, family: str, n: int, k: int) -> str:
    return json.dumps({"family": family, "n": n, "k": k, "blocks": base_partition(p).as_lists()})


def _parse_blocks(text: str) -> list[list[int]]:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise UsageError(f"--partition is not valid JSON: {e}") from None
    if isinstance(data, dict):
        data = data.get("blocks")
    if not isinstance(data, list) or not all(isinstance(b, list) for b in data):
        raise UsageError("--partition must be a list of blocks")
    return data


def _classical(text: str) -> ClassicalPartition:
    blocks = _parse_blocks(text)
    return validate(blocks, sum(len(b) for b in blocks))


def _signed(text: str) -> SignedPartition:
    blocks = _parse_blocks(text)
    total = sum(len(b) for b in blocks)
    if total % 2:
        raise UsageError("a signed partition has an even number of labels")
    return validate(blocks, total // 2, signed=True)


def _ratio(num: int, den: int) -> str:
    return f"{num}/{den} = {Fraction(num, den)}"


def _need(args, *names: str) -> None:
    missing = [f"--{n}" for n in names if getattr(args, n) is None]
    if missing:
        raise UsageError(f"--name {args.name} needs {', '.join(missing)}")


def _formula(args) -> str:
    name, n, k = args.name, args.n, args.k
    if name == "expected-blocks":
        return _ratio(k * n + 1, k + 1)
    if name == "expected-blocks-of-size":
        _need(args, "t")
        F.expected_blocks_of_size(n, k, args.t)  # range check
        num = (n * k + 1) * F.binomial(n * (k + 1) - args.t - 1, n * k - 1)
        return _ratio(num, F.binomial((k + 1) * n, n))
    if name == "total-block-sum":
        return str(F.total_block_sum(n, k))
    if name == "asymptotic":
        _need(args, "t")
        return repr(F.asymptotic_blocks_of_size(n, k, args.t))
    if name == "first-two":
        return str(F.first_two_together_count(n, k))
    if name == "identity":
        _need(args, "kind")
        if args.kind == "chu":
            _need(args, "x", "y", "s")
            lhs, rhs = F.identity_check("chu", x=args.x, y=args.y, s=args.s)
        elif args.kind == "lemma0":
            _need(args, "m")
            lhs, rhs = F.identity_check("lemma0", n=n, m=args.m)
        else:
            _need(args, "m", "t")
            lhs, rhs = F.identity_check("lemma1", n=n, m=args.m, t=args.t)
        return f"{lhs} = {rhs}" if lhs == rhs else f"{lhs} != {rhs}"
    if name == "d-subfamily-block-total":
        _need(args, "t", "subfamily")
        return str(F.d_subfamily_block_total(n, k, args.t, args.subfamily))
    spec = _spec(args)
    if name == "family-count":
        return str(F.family_count(spec))
    if name == "type-count":
        _need(args, "r")
        try:
            r = tuple(int(x) for x in args.r.split(","))
        except ValueError:
            raise UsageError("--r must be comma-separated integers") from None
        r = r + (0,) * (n - len(r))
        return str(F.type_count(spec, BlockSizeVector(n, r, args.s or 0)))
    if name == "block-total":
        _need(args, "t")
        return str(F.block_total_formula(spec, args.t))
    if name == "block-total-given-m":
        _need(args, "t", "m")
        return str(F.block_total_given_m_formula(spec, args.t, args.m, args.s or 0))
    _need(args, "t")
    return str(F.zero_block_total_formula(spec, args.t))


# ---------------------------------------------------------------------------
# commands


def _run(args, out) -> int:
    cmd = args.command
    if cmd == "count":
        spec = _spec(args)
        if args.method == "formula":
            print(F.family_count(spec), file=out)
        elif args.method == "enumerate":
            print(count_by_enumeration(spec, args.max_points), file=out)
        else:
            a, b = F.family_count(spec), count_by_enumeration(spec, args.max_points)
            print(a if a == b else f"formula={a} enumeration={b}", file=out)
            return 0 if a == b else 1
    elif cmd == "enumerate":
        spec = _spec(args)
        for p in enumerate_family(spec, args.max_points):
            print(_partition_json(p, spec.type, spec.n, spec.k), file=out)
    elif cmd == "census":
        table = census(_spec(args), args.max_points)
        if args.format == "csv":
            out.write(table.to_csv())
        else:
            for row in table.rows():
                print(json.dumps(dict(zip(("family", "n", "k", "t", "m", "s", "count"), row))), file=out)
    elif cmd == "formula":
        if args.n is None:
            raise UsageError("--n is required")
        print(_formula(args), file=out)
    elif cmd == "verify":
        outcomes = verify_grid(args.suite, args.max_points, args.force)
        for o in outcomes:
            if args.format == "json":
                print(json.dumps(o.as_dict()), file=out)
            else:
                params = " ".join(f"{key}={value}" for key, value in o.params.items())
                print(f"{o.status}\t{o.check_id}\t{params}\t{o.formula_value}\t{o.oracle_value}", file=out)
        print(summary(args.suite, outcomes), file=out)
        return 1 if any(o.status == "fail" for o in outcomes) else 0
    elif cmd == "bijection":
        _bijection(args, out)
    elif cmd == "kreweras":
        p = _classical(args.partition)
        print(_partition_json(kreweras(p), "A", p.ground_size, 1), file=out)
    elif cmd == "sample":
        report = estimate(_spec(args), args.statistic, args.trials, args.seed, args.t, args.max_points)
        print(json.dumps(report.as_dict()), file=out)
    return 0


def _bijection(args, out) -> None:
    k = args.k
    if args.op == "abs":
        p = _signed(args.partition)
        print(_partition_json(abs_map(p), "A", p.half_size, 1), file=out)
        return
    p = _classical(args.partition)
    if args.op == "glue":
        q = glue(p, GlueIndex(k, args.i))
        print(_partition_json(q, "A", q.ground_size // k, k), file=out)
    elif args.op == "split":
        q = split(p, k)
        print(_partition_json(q, "A", q.ground_size // (k + 1), k + 1), file=out)
    else:
        for q in kreweras_decompose(p, k):
            print(_partition_json(q, "A", q.ground_size, 1), file=out)


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _run(args, sys.stdout)
    except (UsageError, NoncrossError, ValueError) as e:
        print(f"noncross {args.command}: error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
