"""Command-line front end: periods of files, word generation, benchmarks.

Exit codes: 0 on success, 1 on domain or I/O errors, 2 on a checksum
divergence between algorithms (a correctness bug worth a bug report).
"""

from __future__ import annotations

import argparse
import struct
import sys
from pathlib import Path

from . import bench
from .backend import active_backend
from .bench import ChecksumMismatch, CorpusSource
from .core import Alphabet, Word
from .lfap import full_abelian_periods_lfap
from .oracle import full_abelian_periods_bruteforce
from .qlfap import analyze
from .scaled import irreducible_factorization
from .wordgen import GenSpec, generate

ACGT = frozenset(b"ACGT")

# Corpus prefix grid used when --lengths is not given (clipped to file size).
DEFAULT_CORPUS_LENGTHS = tuple(range(1000, 10001, 1000)) + tuple(range(20000, 100001, 10000))


def _parse_int_list(text: str) -> list[int]:
    """Comma-separated integers; a:b:step tokens expand inclusively."""
    values: list[int] = []
    for token in text.split(","):
        token = token.strip()
        if ":" in token:
            parts = [int(p) for p in token.split(":")]
            if len(parts) != 3:
                raise argparse.ArgumentTypeError(f"range token must be start:stop:step, got {token!r}")
            start, stop, step = parts
            values.extend(range(start, stop + 1, step))
        else:
            values.append(int(token))
    if not values:
        raise argparse.ArgumentTypeError("empty integer list")
    return values


def _algorithms(selector: str) -> list[str]:
    if selector == "all":
        return ["qlfap", "lfap", "oracle"]
    names = [s.strip() for s in selector.split(",")]
    for name in names:
        if name not in bench.ALGORITHM_NAMES:
            raise argparse.ArgumentTypeError(f"unknown algorithm {name!r}")
    return names


def _read_word(path: str, filter_acgt: bool) -> Word:
    data = Path(path).read_bytes()
    if filter_acgt:
        data = data.translate(None, bytes(sorted(set(range(256)) - ACGT)))
    if not data:
        raise ValueError(f"no input left in {path!r} after filtering")
    return Word.from_bytes(data)


def cmd_periods(args: argparse.Namespace) -> int:
    w = _read_word(args.input, args.filter_acgt)
    algorithms = _algorithms(args.algo)
    analysis = analyze(w, backend=args.backend)
    results = {"qlfap": analysis.periods}
    if "lfap" in algorithms:
        results["lfap"] = full_abelian_periods_lfap(w, backend=args.backend)
    if "oracle" in algorithms:
        results["oracle"] = full_abelian_periods_bruteforce(w)
    reference = results["qlfap"]
    for name, result in results.items():
        if result.periods != reference.periods:
            raise ChecksumMismatch(f"{name} disagrees with qlfap on {args.input!r}")
    shown = results[algorithms[0]] if len(algorithms) == 1 else reference
    parts = [
        f"n={analysis.n}",
        f"sigma={analysis.sigma}",
        f"g={analysis.g}",
        f"s={analysis.s}",
    ]
    if analysis.profile is not None:
        parts.append(f"T={analysis.profile.T}")
    parts.append("periods=" + ",".join(str(p) for p in shown))
    print(" ".join(parts))
    if args.dump_profile:
        if analysis.profile is None:
            print("profile=trivial (single occurring letter or g=1)")
        else:
            print("L=" + "".join(map(str, analysis.profile.L.tolist())))
            factors = irreducible_factorization(analysis.profile)
            print("factors=" + ",".join(map(str, factors)))
    return 0


def cmd_gen(args: argparse.Namespace) -> int:
    spec = GenSpec(n=args.length, sigma=args.sigma, planted_period=args.period, seed=args.seed)
    out = Path(args.out)
    if args.count == 1:
        data = generate(spec).raw()
        out.write_bytes(data)
    else:
        # Length-prefixed records: u64 little-endian byte count, then the word.
        with out.open("wb") as fh:
            for k in range(args.count):
                word_spec = GenSpec(
                    n=args.length, sigma=args.sigma, planted_period=args.period,
                    seed=spec.seed + k if args.count > 1 else spec.seed,
                )
                data = generate(word_spec).raw()
                fh.write(struct.pack("<Q", len(data)))
                fh.write(data)
    print(f"wrote {out} ({out.stat().st_size} bytes, {args.count} word(s))")
    return 0


def _emit(records, out_path: str | None, cell_out: str | None) -> None:
    if out_path:
        with open(out_path, "w") as fh:
            bench.write_records_csv(records, fh)
        cell_path = cell_out or str(Path(out_path).with_suffix(".cells.csv"))
        with open(cell_path, "w") as fh:
            bench.write_cell_csv(records, fh)
    else:
        bench.write_records_csv(records, sys.stdout)
        if cell_out:
            with open(cell_out, "w") as fh:
                bench.write_cell_csv(records, fh)


def cmd_bench(args: argparse.Namespace) -> int:
    records = bench.run_grid(
        sigmas=args.sigma,
        lengths=args.length,
        periods=args.period,
        trials=args.trials,
        base_seed=args.seed,
        algorithms=_algorithms(args.algo),
        reps=args.reps,
        backend=args.backend,
    )
    _emit(records, args.out, args.cell_out)
    return 0


def cmd_corpus(args: argparse.Namespace) -> int:
    byte_filter = ACGT if args.filter_acgt else None
    if args.lengths is not None:
        lengths = tuple(args.lengths)
    else:
        probe = CorpusSource(Path(args.input), (1,), byte_filter)
        available = len(bench.load_corpus_bytes(probe))
        lengths = tuple(n for n in DEFAULT_CORPUS_LENGTHS if n <= available)
        if not lengths:
            lengths = (available,)
    source = CorpusSource(Path(args.input), lengths, byte_filter)
    records = bench.run_corpus(
        source, algorithms=_algorithms(args.algo), reps=args.reps, backend=args.backend
    )
    _emit(records, args.out, args.cell_out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="abper",
        description="Full Abelian periods: compute, generate planted inputs, benchmark.",
    )
    parser.add_argument(
        "--backend",
        choices=["auto", "c", "py"],
        default="auto",
        help=f"kernel backend (auto = {active_backend()})",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("periods", help="compute the full Abelian periods of a file")
    p.add_argument("input", help="raw-byte input file")
    p.add_argument("--algo", default="qlfap", help="qlfap|lfap|oracle|all or a comma list")
    p.add_argument("--dump-profile", action="store_true", help="also print the L array and factorization")
    p.add_argument("--filter-acgt", action="store_true", help="keep only A, C, G, T bytes")
    p.set_defaults(func=cmd_periods)

    p = sub.add_parser("gen", help="generate a word with a planted period")
    p.add_argument("--sigma", type=int, required=True)
    p.add_argument("--length", type=int, required=True)
    p.add_argument("--period", type=int, required=True)
    p.add_argument("--seed", type=int, default=1)
    p.add_argument("--count", type=int, default=1, help=">1 writes length-prefixed records")
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("bench", help="benchmark the algorithms over a generated grid")
    p.add_argument("--sigma", type=_parse_int_list, default=[2, 5, 10, 20])
    p.add_argument("--length", type=_parse_int_list, default=list(range(1000, 10001, 1000)),
                   help="comma list; a:b:step expands inclusively")
    p.add_argument("--period", type=_parse_int_list, default=[5, 20])
    p.add_argument("--trials", type=int, default=1000)
    p.add_argument("--reps", type=int, default=1)
    p.add_argument("--seed", type=int, default=1)
    p.add_argument("--algo", default="qlfap,lfap")
    p.add_argument("--out", help="records CSV path (default: stdout)")
    p.add_argument("--cell-out", help="plot-ready per-cell aggregate CSV path")
    p.set_defaults(func=cmd_bench)

    p = sub.add_parser("corpus", help="benchmark prefixes of a corpus file")
    p.add_argument("input")
    p.add_argument("--lengths", type=_parse_int_list, default=None,
                   help="prefix lengths (default: 1000..10000 by 1000 and 20000..100000 by 10000, clipped)")
    p.add_argument("--filter-acgt", action="store_true")
    p.add_argument("--algo", default="qlfap,lfap")
    p.add_argument("--reps", type=int, default=1)
    p.add_argument("--out", help="records CSV path (default: stdout)")
    p.add_argument("--cell-out", help="plot-ready per-cell aggregate CSV path")
    p.set_defaults(func=cmd_corpus)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.backend == "auto":
        args.backend = None
    try:
        return args.func(args)
    except ChecksumMismatch as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
