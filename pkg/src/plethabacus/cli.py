"""Command line interface: expand, sgn, decompose, abacus, verify.

Partitions are written as comma separated weakly decreasing integers,
with `-` for the empty partition. Exit codes: 0 success, 1 verification
mismatch, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .abacus import IncompatibleAbaci, abacus_of
from .oracle import oracle_plethystic_mn
from .partitions import (
    InvalidPartition,
    NotContained,
    Partition,
    make_partition,
    make_skew,
    partitions_of_size_containing,
    partitions_up_to,
)
from .strips import classify_runner, r_decompose, sgn_r, sign_recursion_check
from .symfunc import plethystic_mn, plethystic_mn_multi


def _parse_partition(text: str) -> Partition:
    if text.strip() == "-":
        return make_partition([])
    try:
        parts = [int(x) for x in text.split(",") if x.strip() != ""]
        return make_partition(parts)
    except (ValueError, InvalidPartition) as e:
        raise argparse.ArgumentTypeError(f"bad partition {text!r}: {e}") from e


def _parse_int_list(text: str) -> list[int]:
    try:
        out = [int(x) for x in text.split(",") if x.strip() != ""]
    except ValueError as e:
        raise argparse.ArgumentTypeError(f"bad integer list {text!r}") from e
    if not out:
        raise argparse.ArgumentTypeError("empty integer list")
    return out


def _parse_range(text: str) -> tuple[int, int]:
    try:
        lo, hi = text.split("..")
        lo, hi = int(lo), int(hi)
    except ValueError as e:
        raise argparse.ArgumentTypeError(f"bad range {text!r}, expected a..b") from e
    if lo < 1 or hi < lo:
        raise argparse.ArgumentTypeError(f"bad range {text!r}: need 1 <= a <= b")
    return lo, hi


@dataclass(frozen=True)
class VerifyConfig:
    """Sweep bounds for the verify command."""

    max_nu_size: int = 4
    r_range: tuple[int, int] = (1, 3)
    m_range: tuple[int, int] = (1, 3)
    max_degree: int = 12
    jobs: int = 1

    def __post_init__(self):
        if self.max_nu_size < 0 or self.max_degree < 0:
            raise ValueError("size bounds must be non-negative")
        if self.r_range[0] < 1 or self.r_range[1] < self.r_range[0]:
            raise ValueError(f"bad r range {self.r_range}")
        if self.m_range[0] < 1 or self.m_range[1] < self.m_range[0]:
            raise ValueError(f"bad m range {self.m_range}")
        if self.jobs < 1:
            raise ValueError("jobs must be >= 1")


def _format_partition(p: Partition) -> str:
    return "(" + ",".join(str(x) for x in p.parts) + ")"


def cmd_expand(args) -> int:
    if args.ms is not None:
        expansion = plethystic_mn_multi(args.nu, args.r, args.ms)
    else:
        expansion = plethystic_mn(args.nu, args.r, args.m)
    if args.format == "json":
        print(json.dumps(expansion.to_json()))
    else:
        print(expansion.render())
    return 0


def _runner_lines(lam: Partition, nu: Partition, r: int) -> list[str]:
    b = max(len(lam), len(nu), 1)
    a, c = abacus_of(lam, b), abacus_of(nu, b)
    lines = []
    for t in range(r):
        try:
            kind = f"type {classify_runner(a, c, r, t).value}"
        except IncompatibleAbaci:
            kind = "bead counts differ"
        lines.append(f"runner {t}: {kind}")
    return lines


def cmd_sgn(args, full_chain: bool) -> int:
    lam, nu, r = args.lam, args.nu, args.r
    skew = make_skew(lam, nu)
    dec = r_decompose(skew, r)
    sign = 0 if dec is None else dec.sign
    assert sign == sgn_r(skew, r)
    if args.format == "json":
        print(
            json.dumps(
                {
                    "lambda": lam.to_json(),
                    "nu": nu.to_json(),
                    "r": r,
                    "sign": sign,
                    "decomposition": None if dec is None else dec.to_json(),
                    "runners": [line.split(": ")[1] for line in _runner_lines(lam, nu, r)],
                }
            )
        )
        return 0
    rendered = f"{sign:+d}" if sign else "0"
    print(f"sgn_{r}({_format_partition(lam)}/{_format_partition(nu)}) = {rendered}")
    if dec is None:
        for line in _runner_lines(lam, nu, r):
            print(line)
        return 0
    print("heights: " + ",".join(str(h) for h in dec.heights))
    if full_chain:
        for i, p in enumerate(dec.chain):
            print(f"mu^({i}) = {_format_partition(p)}")
    return 0


def cmd_abacus(args) -> int:
    b = args.beads if args.beads is not None else len(args.lam)
    a = abacus_of(args.lam, b)
    r = args.runners
    w = max(len(str(r - 1)), 1)
    print(" ".join(f"{t:>{w}}" for t in range(r)))
    rows = (max(a.bead_positions) // r + 1) if a.bead_positions else 0
    for row in range(rows):
        print(" ".join(f"{'X' if a.has_bead(row * r + t) else 'o':>{w}}" for t in range(r)))
    return 0


def _expansion_case(case) -> tuple[bool, str]:
    nu_parts, r, m = case
    nu = make_partition(nu_parts)
    ours = plethystic_mn(nu, r, m)
    truth = oracle_plethystic_mn(nu, r, m)
    if ours == truth:
        return True, ""
    return False, f"expansion mismatch at nu={list(nu_parts)} r={r} m={m}"


def _recursion_case(case) -> tuple[bool, str]:
    lam_parts, nu_parts, r = case
    report = sign_recursion_check(make_skew(make_partition(lam_parts), make_partition(nu_parts)), r)
    if report.lhs == report.rhs:
        return True, ""
    return False, (
        f"recursion mismatch at lambda={list(lam_parts)} nu={list(nu_parts)} r={r}:"
        f" lhs={report.lhs} rhs={report.rhs}"
    )


def _run_cases(fn, cases, jobs: int):
    if jobs <= 1:
        return [fn(c) for c in cases]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(fn, cases, chunksize=8))


def run_verify(config: VerifyConfig, out=None, err=None) -> int:
    """Sweep both identities inside the configured bounds; 0 iff all hold."""
    # resolve the streams late so callers may swap sys.stdout/sys.stderr
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    nus = [p for p in partitions_up_to(config.max_nu_size)]
    failures: list[str] = []
    expansion_total = recursion_total = 0
    for r in range(config.r_range[0], config.r_range[1] + 1):
        for m in range(config.m_range[0], config.m_range[1] + 1):
            block = [
                (nu.parts, r, m)
                for nu in nus
                if r * m + nu.size() <= config.max_degree
            ]
            print(f"verify: expansion r={r} m={m}: {len(block)} cases", file=err, flush=True)
            results = _run_cases(_expansion_case, block, config.jobs)
            expansion_total += len(block)
            failures.extend(msg for ok, msg in results if not ok)

            block4 = [
                (lam.parts, nu.parts, r)
                for nu in nus
                if r * m + nu.size() <= config.max_degree
                for lam in partitions_of_size_containing(r * m + nu.size(), nu)
            ]
            print(f"verify: recursion r={r} m={m}: {len(block4)} cases", file=err, flush=True)
            results = _run_cases(_recursion_case, block4, config.jobs)
            recursion_total += len(block4)
            failures.extend(msg for ok, msg in results if not ok)

    print(f"expansion vs polynomial oracle: {expansion_total} cases", file=out)
    print(f"sign recursion: {recursion_total} cases", file=out)
    if failures:
        print(f"FAIL: {len(failures)} mismatches; first: {failures[0]}", file=out)
        return 1
    print("PASS: all identities hold in the swept range", file=out)
    return 0


def cmd_verify(args) -> int:
    try:
        config = VerifyConfig(
            max_nu_size=args.max_nu_size,
            r_range=args.r_range,
            m_range=args.m_range,
            max_degree=args.max_degree,
            jobs=args.jobs,
        )
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    return run_verify(config)


def _default_jobs() -> int:
    env = os.environ.get("PLETHABACUS_JOBS")
    if env is not None:
        try:
            return max(1, int(env))
        except ValueError:
            pass
    return 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="plethabacus",
        description="Signed Schur expansions of s_nu * (p_r applied to h_m) via the abacus",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_expand = sub.add_parser("expand", help="expand s_nu * (p_r o h_m) in the Schur basis")
    p_expand.add_argument("--nu", type=_parse_partition, default=make_partition([]))
    p_expand.add_argument("--r", type=int, required=True)
    group = p_expand.add_mutually_exclusive_group(required=True)
    group.add_argument("--m", type=int)
    group.add_argument("--ms", type=_parse_int_list)
    p_expand.add_argument("--format", choices=["text", "json"], default="text")

    for name, help_text in [
        ("sgn", "sign of the greedy r-strip decomposition"),
        ("decompose", "sign plus the full decomposition chain"),
    ]:
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--lambda", dest="lam", type=_parse_partition, required=True)
        p.add_argument("--nu", type=_parse_partition, default=make_partition([]))
        p.add_argument("--r", type=int, required=True)
        p.add_argument("--format", choices=["text", "json"], default="text")

    p_abacus = sub.add_parser("abacus", help="render the runner diagram of a partition")
    p_abacus.add_argument("--lambda", dest="lam", type=_parse_partition, required=True)
    p_abacus.add_argument("--runners", type=int, required=True)
    p_abacus.add_argument("--beads", type=int, default=None)

    p_verify = sub.add_parser("verify", help="sweep the expansion and recursion identities")
    p_verify.add_argument("--max-nu-size", type=int, default=4)
    p_verify.add_argument("--r-range", type=_parse_range, default=(1, 3))
    p_verify.add_argument("--m-range", type=_parse_range, default=(1, 3))
    p_verify.add_argument("--max-degree", type=int, default=12)
    p_verify.add_argument("--jobs", type=int, default=_default_jobs())
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "expand":
            if args.m is not None and args.m < 1:
                parser.error("--m must be >= 1")
            if args.ms is not None and any(m < 1 for m in args.ms):
                parser.error("--ms entries must be >= 1")
            if args.r < 1:
                parser.error("--r must be >= 1")
            return cmd_expand(args)
        if args.command in ("sgn", "decompose"):
            if args.r < 1:
                parser.error("--r must be >= 1")
            return cmd_sgn(args, full_chain=args.command == "decompose")
        if args.command == "abacus":
            if args.runners < 1:
                parser.error("--runners must be >= 1")
            if args.beads is not None and args.beads < len(args.lam):
                parser.error("--beads smaller than the number of parts")
            return cmd_abacus(args)
        if args.command == "verify":
            return cmd_verify(args)
    except (NotContained, InvalidPartition) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    raise AssertionError(f"unhandled command {args.command}")


if __name__ == "__main__":
    sys.exit(main())
