"""Command line front end: sequence emitters, orbit runs, verification suites, figure datasets.

Exit codes: 0 success (orbits: terminated at the fixed point or a power of
two), 1 runtime/I-O failure or failed verification, 2 usage or resource
error, 3 orbit stopped by the step limit, 4 orbit stopped by the value
limit.
"""

from __future__ import annotations

import argparse
import os
import sys

from . import collatz, experiments, reflection, runlength, serialize
from .core import digit_sum, odd_part, trailing_zeros

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2
EXIT_STEP_LIMIT = 3
EXIT_OVERFLOW = 4

SEQUENCE_NAMES = ("tzs", "odd-part", "reflect", "palindromes", "rld", "digit-sum", "sorted-tzs")
VERIFY_SUITES = ("prop1", "prop2", "eq7", "corollary", "equivalence",
                 "rld-recursion", "partition", "antihom", "fixed-points")
FIGURE_IDS = ("1", "2", "3", "4", "5")

SEQUENCE_CAP = 20
STATS_CAP = 24

TERMINATION_EXIT = {
    collatz.TERMINATED_FIXED_POINT: EXIT_OK,
    collatz.TERMINATED_POWER_OF_TWO: EXIT_OK,
    collatz.TERMINATED_STEP_LIMIT: EXIT_STEP_LIMIT,
    collatz.TERMINATED_OVERFLOW: EXIT_OVERFLOW,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hailstone",
        description="Sequences, orbits and verification suites for the 3x+1 dynamics "
                    "and fixed-length binary reflections.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    seq = sub.add_parser("seq", help="emit one interval-spanning sequence")
    seq.add_argument("name", choices=SEQUENCE_NAMES)
    seq.add_argument("--L", type=int, help="expansion length (interval [0, 2**L - 1])")
    seq.add_argument("-k", type=int, help="palindrome half-length (for 'palindromes')")
    _output_flags(seq)
    seq.add_argument("--unsafe-large", action="store_true",
                     help=f"lift the L <= {SEQUENCE_CAP} materialization cap")

    traj = sub.add_parser("traj", help="run one orbit and emit its step table")
    traj.add_argument("x0", type=int)
    traj.add_argument("--formulation", choices=collatz.FORMULATIONS,
                      default=collatz.ACCELERATED)
    traj.add_argument("--max-steps", type=int, default=10_000)
    traj.add_argument("--value-limit", type=int, default=None,
                      help="terminate (exit 4) instead of exceeding this value")
    _output_flags(traj)

    verify = sub.add_parser("verify", help="run one exhaustive verification suite")
    verify.add_argument("suite", choices=VERIFY_SUITES)
    verify.add_argument("--L", type=int, help="largest expansion length to scan")
    verify.add_argument("-k", type=int, help="largest palindrome half-length to scan")
    verify.add_argument("--max", type=int, help="largest start value to scan")

    figures = sub.add_parser("figures", help="write one figure's dataset files (CSV and JSON)")
    figures.add_argument("id", choices=FIGURE_IDS)
    figures.add_argument("--L", type=int, help="expansion length (figures 1-4)")
    figures.add_argument("--Lmin", type=int, default=4, help="first interval (figure 5)")
    figures.add_argument("--Lmax", type=int, default=20, help="last interval (figure 5)")
    figures.add_argument("--frame", choices=experiments.FRAME_MODES,
                         default=experiments.FRAME_MINIMAL)
    figures.add_argument("--outdir", default=".")

    stats = sub.add_parser("stats", help="mass-ratio report for one interval")
    stats.add_argument("--L", type=int, required=True)
    stats.add_argument("--frame", choices=experiments.FRAME_MODES,
                       default=experiments.FRAME_MINIMAL)
    _output_flags(stats)
    stats.add_argument("--unsafe-large", action="store_true",
                       help=f"lift the L <= {STATS_CAP} cap")

    return parser


def _output_flags(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--format", choices=("csv", "json"), default="csv")
    sub.add_argument("--out", default=None, help="output path (default: stdout)")


def _sequence_values(args) -> list[int]:
    name = args.name
    if name == "palindromes":
        if args.k is None:
            raise ValueError("'palindromes' needs -k")
        return reflection.palindrome_sequence(args.k)
    if args.L is None:
        raise ValueError(f"'{name}' needs --L")
    L = args.L
    if L > SEQUENCE_CAP and not args.unsafe_large:
        raise ValueError(f"L={L} above the cap {SEQUENCE_CAP}; pass --unsafe-large to override")
    if name == "tzs":
        return [trailing_zeros(n, frame=L) for n in range(1 << L)]
    if name == "odd-part":
        return [odd_part(x) for x in range(1, (1 << L) + 1)]
    if name == "reflect":
        return reflection.reflection_table(L)
    if name == "rld":
        return runlength.rld_sequence(L)
    if name == "digit-sum":
        return [digit_sum(n) for n in range(1 << L)]
    if name == "sorted-tzs":
        return [trailing_zeros(reflection.reflect(n, L), frame=L) for n in range(1 << L)]
    raise ValueError(f"unknown sequence {name!r}")


def _cmd_seq(args) -> int:
    values = _sequence_values(args)
    text = (serialize.sequence_csv_text(values) if args.format == "csv"
            else serialize.sequence_json_text(values))
    serialize.write_text(args.out, text)
    return EXIT_OK


def _cmd_traj(args) -> int:
    traj = collatz.trajectory(args.x0, formulation=args.formulation,
                              max_steps=args.max_steps, value_limit=args.value_limit)
    text = (serialize.trajectory_csv_text(traj) if args.format == "csv"
            else serialize.trajectory_json_text(traj))
    serialize.write_text(args.out, text)
    return TERMINATION_EXIT[traj.terminated]


def _cmd_verify(args) -> int:
    suite = args.suite
    passed, detail = _run_suite(suite, args)
    print(f"{'PASS' if passed else 'FAIL'} {suite}: {detail}")
    return EXIT_OK if passed else EXIT_FAILURE


def _run_suite(suite: str, args) -> tuple[bool, str]:
    if suite == "prop1":
        Lmax = args.L or 16
        for L in range(1, Lmax + 1):
            report = reflection.sorted_tzs_property(L)
            if not report:
                return False, report.describe()
        return True, f"reflected trailing-zeros sequence equals its descending sort, L <= {Lmax}"
    if suite == "prop2":
        kmax = args.k or 12
        for k in range(1, kmax + 1):
            for w in range(1, 1 << k):
                expected = 3 << (k - trailing_zeros(w) - 1)
                if reflection.palindrome_diff(w, k) != expected:
                    return False, f"palindrome gap mismatch at w={w}, k={k}"
        return True, f"palindrome gaps match 3*2^(k-t-1), k <= {kmax}"
    if suite == "eq7":
        Lmax = args.L or 16
        for L in range(1, Lmax + 1):
            for x in range(1 << L):
                if reflection.mirror_length_identity(x, L) != (L, L):
                    return False, f"mirror length sums differ from {L} at x={x}"
        return True, f"both mirror length sums equal L, L <= {Lmax}"
    if suite == "corollary":
        kmax = args.k or 12
        for k in range(1, kmax + 1):
            pal_sum = 0
            ref_sum = 0
            for i in range(1, 1 << k):
                term = 3 << (k - trailing_zeros(i) - 1)
                pal_sum += term
                ref_sum += term - (1 << k)
                if pal_sum != reflection.palindrome(i, k) or ref_sum != reflection.reflect(i, k):
                    return False, f"partial sums diverge at i={i}, k={k}"
        return True, f"palindrome and reflection rebuilt by partial sums, k <= {kmax}"
    if suite == "equivalence":
        limit = args.max or 65536
        for x in range(1, limit + 1):
            a = collatz.step_accelerated(x)
            if collatz.step_mirror_palindrome(x) != a or collatz.step_mirror_reflection(x) != a:
                return False, f"step functions disagree at x={x}"
        return True, f"accelerated, mirror-palindrome and mirror-reflection steps agree, x <= {limit}"
    if suite == "rld-recursion":
        Lmax = args.L or 14
        for L in range(1, Lmax + 1):
            if runlength.rld_sequence_recursion(L) != runlength.rld_sequence(L):
                return False, f"recursion-built rld sequence differs at L={L}"
            report = runlength.rld_reflection_invariance(L)
            if not report:
                return False, report.describe()
        return True, f"rld recursion matches pointwise and is reflection invariant, L <= {Lmax}"
    if suite == "partition":
        Lmax = args.L or 12
        for L in range(1, Lmax + 1):
            report = runlength.partition_coverage(L)
            if not report:
                return False, report.describe()
        return True, f"every integer partition realized by block lengths, L <= {Lmax}"
    if suite == "antihom":
        Lmax = args.L or 6
        for L in range(1, Lmax + 1):
            for x in range(1 << L):
                for y in range(1 << L):
                    try:
                        reflection.concat_reflect(x, y, L)
                    except RuntimeError as exc:
                        return False, str(exc)
        return True, f"concatenation antihomomorphism holds, L <= {Lmax}"
    if suite == "fixed-points":
        limit = args.max or (1 << 20)
        found = collatz.find_fixed_points(limit)
        return found == [4], f"fixed points of the accelerated map in [1, {limit}]: {found}"
    raise ValueError(f"unknown suite {suite!r}")


def _cmd_figures(args) -> int:
    fid = args.id
    if fid == "5":
        datasets = [experiments.figure5_dataset(args.Lmin, args.Lmax, args.frame)]
        stem = f"fig5_L{args.Lmin}-{args.Lmax}"
        stems = [stem]
    else:
        if args.L is None:
            raise ValueError(f"figure {fid} needs --L")
        if fid == "4":
            datasets = list(experiments.figure4_dataset(args.L))
            stems = [f"fig4a_L{args.L}", f"fig4b_L{args.L}"]
        else:
            maker = {
                "1": experiments.figure1_dataset,
                "2": experiments.figure2_dataset,
                "3": experiments.figure3_dataset,
            }[fid]
            datasets = [maker(args.L)]
            stems = [f"fig{fid}_L{args.L}"]
    for dataset, stem in zip(datasets, stems):
        for ext, text in (("csv", serialize.dataset_csv_text(dataset)),
                          ("json", serialize.dataset_json_text(dataset))):
            path = os.path.join(args.outdir, f"{stem}.{ext}")
            serialize.write_text(path, text)
            print(path)
    return EXIT_OK


def _cmd_stats(args) -> int:
    if args.L > STATS_CAP and not args.unsafe_large:
        raise ValueError(f"L={args.L} above the cap {STATS_CAP}; pass --unsafe-large to override")
    report = experiments.mass_ratio(args.L, args.frame)
    text = (serialize.mass_ratio_csv_text(report) if args.format == "csv"
            else serialize.mass_ratio_json_text(report))
    serialize.write_text(args.out, text)
    return EXIT_OK


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    handler = {
        "seq": _cmd_seq,
        "traj": _cmd_traj,
        "verify": _cmd_verify,
        "figures": _cmd_figures,
        "stats": _cmd_stats,
    }[args.command]
    try:
        return handler(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAILURE


if __name__ == "__main__":
    sys.exit(main())
