"""Command-line front end.

Subcommands: rank, report, verify, explore, oracle.  Exit codes: 0 on
success, 1 when a verification or oracle comparison fails, 2 on input
parse errors, 3 on dimension-guard violations, 4 when the explorer hits a
chain rank below the order for n <= 3 (which a correct build never does).
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

from .errors import GuardExceeded, OrderTooLarge, ParseError
from .matrix import BicomplexMatrix
from .oracle import (
    GenParams,
    SplitMix64,
    chain_rank_reference,
    det_reference,
    random_invertible_entry_matrix,
    row_rank_reference,
)
from .parsing import parse_matrix
from .rank import DEFAULT_MAX_DIM, chain_rank, rank_report, row_rank
from .verify import BUILTIN_CASES, run_cases

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_PARSE = 2
EXIT_GUARD = 3
EXIT_VIOLATION = 4


def _int_at_least(minimum: int):
    def convert(text: str) -> int:
        try:
            value = int(text)
        except ValueError as exc:
            raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from exc
        if value < minimum:
            raise argparse.ArgumentTypeError(f"must be >= {minimum}")
        return value

    return convert


def _load(path: str) -> BicomplexMatrix:
    return parse_matrix(Path(path).read_text(encoding="utf-8")).matrix


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bcrank",
        description="Exact rank computations for bicomplex matrices.",
    )
    parser.add_argument(
        "--max-dim",
        type=_int_at_least(1),
        default=DEFAULT_MAX_DIM,
        help="override the chain-rank dimension guard (default %(default)s)",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_rank = sub.add_parser("rank", help="print the chain rank of a matrix file")
    p_rank.add_argument("file")
    p_rank.set_defaults(handler=cmd_rank)

    p_report = sub.add_parser("report", help="print all ranks, determinant and class")
    p_report.add_argument("file")
    p_report.add_argument("--json", action="store_true", help="emit JSON")
    p_report.set_defaults(handler=cmd_report)

    p_verify = sub.add_parser("verify", help="run the built-in worked-example suite")
    p_verify.add_argument("--list", action="store_true", help="list case ids only")
    p_verify.set_defaults(handler=cmd_verify)

    p_explore = sub.add_parser(
        "explore",
        help="random search for full-entry non-singular matrices with chain rank < n",
    )
    p_explore.add_argument("--n", type=_int_at_least(2), required=True)
    p_explore.add_argument("--trials", type=_int_at_least(1), required=True)
    p_explore.add_argument("--seed", type=int, default=0)
    p_explore.add_argument("--bound", type=_int_at_least(1), default=3)
    p_explore.add_argument("--jobs", type=_int_at_least(1), default=1)
    p_explore.set_defaults(handler=cmd_explore)

    p_oracle = sub.add_parser(
        "oracle", help="compare the engine against brute-force references"
    )
    p_oracle.add_argument("file")
    p_oracle.set_defaults(handler=cmd_oracle)

    return parser


def cmd_rank(args: argparse.Namespace) -> int:
    matrix = _load(args.file)
    r, _ = chain_rank(matrix, max_dim=args.max_dim)
    print(r)
    return EXIT_OK


def cmd_report(args: argparse.Namespace) -> int:
    matrix = _load(args.file)
    report = rank_report(matrix, max_dim=args.max_dim)
    if args.json:
        print(json.dumps(report.to_dict(), indent=2))
        return EXIT_OK
    print(f"matrix: {report.rows}x{report.cols} ({report.matrix_class.value})")
    print(f"chain_rank: {report.chain_rank}")
    print(f"row_rank: {report.row_rank}")
    print(f"col_rank: {report.col_rank}")
    print(f"idem_row_rank: {report.idem_row_rank}")
    print(f"idem_col_rank: {report.idem_col_rank}")
    print(f"rank_1A: {report.rank_1a}")
    print(f"rank_2A: {report.rank_2a}")
    if report.det is None:
        print("det: n/a (not square)")
    else:
        kind = "singular" if report.det_singular else "invertible"
        print(f"det: {report.det.format_literal()} ({kind})")
    if report.certificate is None:
        print("certificate: none")
    else:
        for rows, cols in report.certificate.levels:
            print(f"certificate level {len(rows)}: rows {list(rows)}, cols {list(cols)}")
    return EXIT_OK


def cmd_verify(args: argparse.Namespace, cases=BUILTIN_CASES) -> int:
    if args.list:
        for case in cases:
            print(case.case_id)
        return EXIT_OK
    results = run_cases(cases)
    failed = [r for r in results if not r.ok]
    for r in results:
        status = "PASS" if r.ok else "FAIL"
        print(f"{status} {r.case_id}: {r.description}")
        if not r.ok:
            print(f"     {r.detail}")
    print(f"{len(results) - len(failed)} passed, {len(failed)} failed")
    return EXIT_OK if not failed else EXIT_FAIL


def _explore_trial(task: tuple[int, int, int, int, int]) -> dict:
    seed, n, bound, max_dim, trial = task
    stream = SplitMix64(seed).child(trial)
    params = GenParams(coeff_bound=bound, singular_density=0.0, seed=seed)
    matrix, rejections = random_invertible_entry_matrix(n, params, stream)
    r, cert = chain_rank(matrix, max_dim=max_dim)
    if r == n:
        flag = "OK"
    elif n <= 3:
        flag = "VIOLATION"
    else:
        flag = "CANDIDATE"
    return {
        "seed": seed,
        "n": n,
        "trial": trial,
        "det": matrix.det().format_literal(),
        "chain_rank": r,
        "rejections": rejections,
        "flag": flag,
        "certificate": None if r == n or cert is None else cert.to_json_obj(),
    }


def cmd_explore(args: argparse.Namespace) -> int:
    if args.n > args.max_dim:
        raise GuardExceeded(
            f"explore order {args.n} exceeds the dimension guard {args.max_dim} "
            f"(raise --max-dim)"
        )
    tasks = [
        (args.seed, args.n, args.bound, args.max_dim, trial)
        for trial in range(args.trials)
    ]
    candidates = 0
    violations = 0

    def emit(record: dict) -> None:
        nonlocal candidates, violations
        if record["flag"] == "CANDIDATE":
            candidates += 1
        elif record["flag"] == "VIOLATION":
            violations += 1
        print(json.dumps(record, separators=(",", ":")))

    if args.jobs == 1:
        for task in tasks:
            emit(_explore_trial(task))
    else:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            for record in pool.map(_explore_trial, tasks):
                emit(record)
    print(
        f"explore n={args.n} trials={args.trials} seed={args.seed}: "
        f"{candidates} candidate(s), {violations} violation(s)",
        file=sys.stderr,
    )
    return EXIT_VIOLATION if violations else EXIT_OK


def cmd_oracle(args: argparse.Namespace) -> int:
    matrix = _load(args.file)
    checks: list[tuple[str, object, object]] = []
    engine_chain, _ = chain_rank(matrix, max_dim=args.max_dim)
    checks.append(("chain_rank", engine_chain, chain_rank_reference(matrix)))
    checks.append(("row_rank", row_rank(matrix), row_rank_reference(matrix)))
    if matrix.is_square() and matrix.rows <= 4:
        checks.append(
            (
                "det",
                matrix.det().format_literal(),
                det_reference(matrix).format_literal(),
            )
        )
    disagreements = [c for c in checks if c[1] != c[2]]
    for name, engine, reference in checks:
        status = "agree" if engine == reference else "DISAGREE"
        print(f"{name}: engine={engine} reference={reference} [{status}]")
    return EXIT_OK if not disagreements else EXIT_FAIL


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (GuardExceeded, OrderTooLarge) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_GUARD
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE


if __name__ == "__main__":
    raise SystemExit(main())
