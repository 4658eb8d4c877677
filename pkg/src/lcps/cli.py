"""Command line front end: solve, compare, bench, and matches subcommands.

Inputs are byte strings given as literals (-x/-y) or files (--x-file/--y-file),
optionally parsed as FASTA. All indices printed anywhere are 1-based.

Exit codes: 0 success, 2 usage error, 3 I/O error, 4 capacity exhausted on
every applicable algorithm, 5 solver disagreement from the compare command.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import dataclass, field
from pathlib import Path

from .bench import ALGORITHMS, GenSpec, run_suite
from .chain_solver import geometric_lcps
from .core import CapacityExceeded, InputTooLarge, validate_witness
from .dp_solver import DEFAULT_CELL_CAP, dp_lcps
from .geometry import DEFAULT_RECT_CAP
from .match_index import DEFAULT_MATCH_CAP, build_occurrence_lists
from .oracle import MAX_ORACLE_LEN, brute_force_lcps

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_IO = 3
EXIT_CAPACITY = 4
EXIT_MISMATCH = 5


class UsageError(Exception):
    pass


class IoError(Exception):
    pass


@dataclass
class RunConfig:
    command: str
    algo: str = "auto"
    fmt: str = "text"
    x_literal: str | None = None
    y_literal: str | None = None
    x_file: str | None = None
    y_file: str | None = None
    fasta: bool = False
    max_dp_cells: int = DEFAULT_CELL_CAP
    max_rects: int = DEFAULT_RECT_CAP
    max_matches: int = DEFAULT_MATCH_CAP
    n_list: tuple[int, ...] = ()
    s_list: tuple[int, ...] = ()
    seed: int = 0
    reps: int = 5
    bench_algos: tuple[str, ...] = ("dp", "geom")


def _add_input_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("-x", dest="x_literal", metavar="STR", help="first sequence literal")
    p.add_argument("-y", dest="y_literal", metavar="STR", help="second sequence literal")
    p.add_argument("--x-file", metavar="PATH", help="read the first sequence from a file")
    p.add_argument("--y-file", metavar="PATH", help="read the second sequence from a file")
    p.add_argument("--fasta", action="store_true", help="parse inputs as FASTA (first record)")


def _add_cap_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--max-dp-cells", type=int, default=DEFAULT_CELL_CAP,
                   help="cell cap for the dynamic program (default %(default)s)")
    p.add_argument("--max-rects", type=int, default=DEFAULT_RECT_CAP,
                   help="rectangle cap for the geometric solver (default %(default)s)")
    p.add_argument("--max-matches", type=int, default=DEFAULT_MATCH_CAP,
                   help="match-count cap (default %(default)s)")


def _int_list(text: str) -> tuple[int, ...]:
    text = text.strip()
    if not text:
        return ()
    return tuple(int(part) for part in text.split(","))


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lcps",
        description="Longest common palindromic subsequence of two sequences.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    solve = sub.add_parser("solve", help="compute an LCPS of two sequences")
    _add_input_flags(solve)
    _add_cap_flags(solve)
    solve.add_argument("--algo", choices=["dp", "geom", "oracle", "auto"], default="auto")
    solve.add_argument("--format", dest="fmt", choices=["text", "json"], default="text")

    compare = sub.add_parser("compare", help="run every solver and check they agree")
    _add_input_flags(compare)
    _add_cap_flags(compare)

    matches = sub.add_parser("matches", help="print match counts as JSON")
    _add_input_flags(matches)

    bench = sub.add_parser("bench", help="time the solvers on generated inputs")
    bench.add_argument("--n-list", type=_int_list, default=(),
                       help="comma-separated lengths, one instance per value (n = m)")
    bench.add_argument("--s-list", type=_int_list, default=(2,),
                       help="comma-separated alphabet sizes (default 2)")
    bench.add_argument("--seed", type=int, default=0)
    bench.add_argument("--reps", type=int, default=5, help="timing repetitions per row")
    bench.add_argument("--algo", default="dp,geom",
                       help="comma-separated algorithms to time (default dp,geom)")
    return parser


def parse_args(argv: list[str]) -> RunConfig:
    ns = build_parser().parse_args(argv)
    cfg = RunConfig(command=ns.command)
    if ns.command == "bench":
        cfg.n_list = ns.n_list
        cfg.s_list = ns.s_list if ns.s_list else (2,)
        cfg.seed = ns.seed
        cfg.reps = ns.reps
        cfg.bench_algos = tuple(part.strip() for part in ns.algo.split(",") if part.strip())
        unknown = [a for a in cfg.bench_algos if a not in ALGORITHMS]
        if unknown:
            raise UsageError(f"unknown bench algorithm(s): {', '.join(unknown)}")
        if cfg.reps < 1:
            raise UsageError("--reps must be at least 1")
        return cfg

    cfg.x_literal, cfg.y_literal = ns.x_literal, ns.y_literal
    cfg.x_file, cfg.y_file = ns.x_file, ns.y_file
    cfg.fasta = ns.fasta
    if ns.command in ("solve", "compare"):
        cfg.max_dp_cells = ns.max_dp_cells
        cfg.max_rects = ns.max_rects
        cfg.max_matches = ns.max_matches
        if min(cfg.max_dp_cells, cfg.max_rects, cfg.max_matches) < 1:
            raise UsageError("caps must be at least 1")
    if ns.command == "solve":
        cfg.algo = ns.algo
        cfg.fmt = ns.fmt
    for name, literal, path in (("x", cfg.x_literal, cfg.x_file),
                                ("y", cfg.y_literal, cfg.y_file)):
        if (literal is None) == (path is None):
            raise UsageError(f"give exactly one of -{name} or --{name}-file")
    return cfg


def parse_fasta(data: bytes) -> bytes:
    """First record's sequence: header lines start with '>', whitespace is
    dropped, ASCII letters are uppercased."""
    seen_header = False
    lines = []
    for line in data.splitlines():
        if line.startswith(b">"):
            if seen_header:
                break
            seen_header = True
        else:
            lines.append(line)
    joined = b"".join(lines)
    return bytes(ch for ch in joined if ch not in b" \t\r\n\v\f").upper()


def read_input(source: str, *, is_file: bool, fasta: bool) -> bytes:
    """One sequence from a literal or a file; empty input is fine."""
    if is_file:
        try:
            data = Path(source).read_bytes()
        except OSError as exc:
            raise IoError(str(exc)) from exc
    else:
        try:
            data = source.encode("latin-1")
        except UnicodeEncodeError as exc:
            raise UsageError("literals must consist of single-byte characters") from exc
    if fasta:
        return parse_fasta(data)
    if is_file:
        if data.endswith(b"\r\n"):
            data = data[:-2]
        elif data.endswith(b"\n"):
            data = data[:-1]
    return data


def _load_inputs(cfg: RunConfig) -> tuple[bytes, bytes]:
    x = read_input(cfg.x_literal if cfg.x_file is None else cfg.x_file,
                   is_file=cfg.x_file is not None, fasta=cfg.fasta)
    y = read_input(cfg.y_literal if cfg.y_file is None else cfg.y_file,
                   is_file=cfg.y_file is not None, fasta=cfg.fasta)
    return x, y


def _solve_dp(cfg, x, y):
    return dp_lcps(x, y, max_cells=cfg.max_dp_cells)


def _solve_geom(cfg, x, y):
    return geometric_lcps(x, y, max_rects=cfg.max_rects, max_matches=cfg.max_matches)


def _solve_oracle(cfg, x, y):
    return brute_force_lcps(x, y)


SOLVERS = {"dp": _solve_dp, "geom": _solve_geom, "oracle": _solve_oracle}


def _auto_order(cfg: RunConfig, x: bytes, y: bytes) -> list[str]:
    """Prefer the DP exactly when it fits its cap and the rectangle estimate
    is the larger of the two workloads; fall back to the other solver."""
    occ = build_occurrence_lists(x, y)
    est_rects = sum((len(xs) * len(ys)) ** 2 for xs, ys in occ.values())
    dp_cells = len(x) * len(x) * len(y) * len(y)
    if dp_cells <= cfg.max_dp_cells and est_rects > dp_cells:
        return ["dp", "geom"]
    return ["geom", "dp"]


def solve_command(cfg: RunConfig) -> int:
    x, y = _load_inputs(cfg)
    occ = build_occurrence_lists(x, y)
    r_total = sum(len(xs) * len(ys) for xs, ys in occ.values())

    order = [cfg.algo] if cfg.algo != "auto" else _auto_order(cfg, x, y)
    result = None
    algo_used = None
    t0 = time.perf_counter()
    last_exc: Exception | None = None
    for name in order:
        try:
            result = SOLVERS[name](cfg, x, y)
            algo_used = name
            break
        except CapacityExceeded as exc:
            last_exc = exc
    elapsed_ms = (time.perf_counter() - t0) * 1000.0
    if result is None:
        raise last_exc if last_exc is not None else CapacityExceeded("no algorithm ran")

    if cfg.fmt == "json":
        print(json.dumps({
            "x_len": len(x),
            "y_len": len(y),
            "algorithm": algo_used,
            "lcps_length": result.length,
            "lcps": result.z.decode("latin-1"),
            "x_indices": list(result.x_indices),
            "y_indices": list(result.y_indices),
            "matches": r_total,
            "elapsed_ms": elapsed_ms,
        }))
    else:
        print(result.length)
        if result.length:
            print(result.z.decode("latin-1"))
    return EXIT_OK


def compare_command(cfg: RunConfig) -> int:
    x, y = _load_inputs(cfg)
    algos = ["dp", "geom"] + (["oracle"] if len(x) <= MAX_ORACLE_LEN else [])
    lengths = {}
    all_valid = True
    for name in algos:
        t0 = time.perf_counter()
        result = SOLVERS[name](cfg, x, y)
        ms = (time.perf_counter() - t0) * 1000.0
        valid = validate_witness(result, x, y)
        all_valid = all_valid and valid
        lengths[name] = result.length
        print(f"{name}: length={result.length} "
              f"palindrome={result.z.decode('latin-1')} valid={valid} ms={ms:.3f}")
    if len(set(lengths.values())) > 1 or not all_valid:
        print(f"disagreement: {lengths}", file=sys.stderr)
        return EXIT_MISMATCH
    return EXIT_OK


def matches_command(cfg: RunConfig) -> int:
    x, y = _load_inputs(cfg)
    occ = build_occurrence_lists(x, y)
    per_sigma = {
        chr(ch): len(xs) * len(ys)
        for ch, (xs, ys) in occ.items()
        if xs and ys
    }
    print(json.dumps({"r": sum(per_sigma.values()), "per_sigma": per_sigma}))
    return EXIT_OK


def bench_command(cfg: RunConfig) -> int:
    specs = [
        GenSpec(n, n, s, cfg.seed)
        for n in cfg.n_list
        for s in cfg.s_list
    ]
    for row in run_suite(specs, cfg.bench_algos, cfg.reps):
        print(json.dumps(row))
    return EXIT_OK


COMMANDS = {
    "solve": solve_command,
    "compare": compare_command,
    "matches": matches_command,
    "bench": bench_command,
}


def main(argv: list[str] | None = None) -> int:
    if argv is None:
        argv = sys.argv[1:]
    try:
        cfg = parse_args(argv)
    except SystemExit as exc:  # argparse reports usage errors itself
        return int(exc.code or 0)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    try:
        return COMMANDS[cfg.command](cfg)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except IoError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    except (CapacityExceeded, InputTooLarge) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAPACITY


if __name__ == "__main__":
    sys.exit(main())
