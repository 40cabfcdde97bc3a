"""Benchmark harness: timing records, CSV emission, per-cell summaries.

CSV layout: one metadata comment line ``# generator=<id> clock=<id>
host=<opaque>``, a header, then one row per measurement with the columns
``algorithm,sigma,n,planted_period,trial,elapsed_ns,result_checksum``.
Comment lines are ignored by the parser, so the per-cell ratio summary can
be appended as comments without breaking round-trips.

Timing uses ``time.perf_counter_ns`` (monotonic); each record's elapsed_ns
is the median over ``reps`` runs of the same algorithm on the same word.
Word generation and I/O are outside the timed region; each algorithm's own
letter-count preprocessing is inside it. Trials run sequentially so every
measurement owns the interpreter; the functions are pure, so callers may
shard cells across processes with disjoint output files if they want
parallelism.
"""

from __future__ import annotations

import csv
import hashlib
import io
import platform
import statistics
import time
from dataclasses import dataclass
from pathlib import Path
from typing import Callable, Iterable, Sequence

from .core import Alphabet, PeriodSet, Word
from .lfap import full_abelian_periods_lfap
from .oracle import full_abelian_periods_bruteforce
from .qlfap import full_abelian_periods_qlfap
from .wordgen import GENERATOR_ID, GenSpec, derive_seed, generate

CLOCK_ID = "perf_counter_ns"
CSV_FIELDS = ("algorithm", "sigma", "n", "planted_period", "trial", "elapsed_ns", "result_checksum")
ALGORITHM_NAMES = ("qlfap", "lfap", "oracle")


class ChecksumMismatch(RuntimeError):
    """Two algorithms disagreed on the same word: a correctness bug."""

    def __init__(self, message: str, seed: int | None = None):
        super().__init__(message)
        self.seed = seed


@dataclass(frozen=True)
class BenchRecord:
    algorithm: str
    sigma: int
    n: int
    planted_period: int | str
    trial: int
    elapsed_ns: int
    result_checksum: str


@dataclass(frozen=True)
class CorpusSource:
    """A raw-byte file benchmarked prefix by prefix."""

    path: Path
    prefix_lengths: tuple[int, ...]
    byte_filter: frozenset[int] | None = None

    def __post_init__(self) -> None:
        if any(a > b for a, b in zip(self.prefix_lengths, self.prefix_lengths[1:])):
            raise ValueError("prefix lengths must be non-decreasing")
        if not self.prefix_lengths:
            raise ValueError("no prefix lengths given")


@dataclass(frozen=True)
class CellSummary:
    sigma: int
    n: int
    planted_period: int | str
    mean_ns: dict[str, float]
    ratio: float | None  # mean lfap / mean qlfap when both were timed


def periodset_checksum(periods: Iterable[int]) -> str:
    """Order-independent digest: sha256 of the ascending period list."""
    data = ",".join(str(p) for p in sorted(periods)).encode()
    return hashlib.sha256(data).hexdigest()[:16]


def algorithm_runner(name: str, backend: str | None = None) -> Callable[[Word], PeriodSet]:
    if name == "qlfap":
        return lambda w: full_abelian_periods_qlfap(w, backend=backend)
    if name == "lfap":
        return lambda w: full_abelian_periods_lfap(w, backend=backend)
    if name == "oracle":
        return full_abelian_periods_bruteforce
    raise ValueError(f"unknown algorithm {name!r} (expected one of {ALGORITHM_NAMES})")


def time_call(fn: Callable[[Word], PeriodSet], w: Word, reps: int) -> tuple[int, PeriodSet]:
    """Median elapsed ns over ``reps`` runs, plus the (deterministic) result."""
    if reps < 1:
        raise ValueError("reps must be >= 1")
    times = []
    result = None
    for _ in range(reps):
        start = time.perf_counter_ns()
        result = fn(w)
        times.append(time.perf_counter_ns() - start)
    assert result is not None
    return max(1, int(statistics.median(times))), result


def _measure_word(
    w: Word,
    sigma: int,
    n: int,
    planted: int | str,
    trial: int,
    algorithms: Sequence[str],
    reps: int,
    backend: str | None,
    seed: int | None,
) -> list[BenchRecord]:
    records = []
    reference: tuple[str, str] | None = None
    for name in algorithms:
        elapsed, result = time_call(algorithm_runner(name, backend), w, reps)
        checksum = periodset_checksum(result)
        if reference is None:
            reference = (name, checksum)
        elif checksum != reference[1]:
            raise ChecksumMismatch(
                f"{name} disagrees with {reference[0]} on sigma={sigma} n={n} "
                f"planted_period={planted} trial={trial} seed={seed}",
                seed=seed,
            )
        records.append(
            BenchRecord(
                algorithm=name,
                sigma=sigma,
                n=n,
                planted_period=planted,
                trial=trial,
                elapsed_ns=elapsed,
                result_checksum=checksum,
            )
        )
    return records


def run_cell(
    sigma: int,
    n: int,
    period: int,
    trials: int,
    base_seed: int,
    algorithms: Sequence[str] = ("qlfap", "lfap"),
    reps: int = 1,
    backend: str | None = None,
) -> list[BenchRecord]:
    """Benchmark one (sigma, n, planted period) cell over seeded trials.

    All algorithms of a trial run on the identical word; checksum equality is
    enforced and a divergence aborts with the offending seed.
    """
    records: list[BenchRecord] = []
    for trial in range(trials):
        seed = derive_seed(base_seed, sigma, n, period, trial)
        w = generate(GenSpec(n=n, sigma=sigma, planted_period=period, seed=seed))
        records.extend(_measure_word(w, sigma, n, period, trial, algorithms, reps, backend, seed))
    return records


def run_grid(
    sigmas: Sequence[int],
    lengths: Sequence[int],
    periods: Sequence[int],
    trials: int,
    base_seed: int,
    algorithms: Sequence[str] = ("qlfap", "lfap"),
    reps: int = 1,
    backend: str | None = None,
) -> list[BenchRecord]:
    records: list[BenchRecord] = []
    for sigma in sigmas:
        for n in lengths:
            for period in periods:
                records.extend(
                    run_cell(sigma, n, period, trials, base_seed, algorithms, reps, backend)
                )
    return records


def load_corpus_bytes(source: CorpusSource) -> bytes:
    data = Path(source.path).read_bytes()
    if source.byte_filter is not None:
        keep = source.byte_filter
        data = data.translate(None, bytes(sorted(set(range(256)) - keep)))
    return data


def run_corpus(
    source: CorpusSource,
    algorithms: Sequence[str] = ("qlfap", "lfap"),
    reps: int = 1,
    backend: str | None = None,
) -> list[BenchRecord]:
    """Benchmark each requested prefix of the corpus file.

    The alphabet is re-inferred from the bytes of each prefix; rows carry
    planted_period="corpus".
    """
    data = load_corpus_bytes(source)
    available = len(data)
    records: list[BenchRecord] = []
    for n in source.prefix_lengths:
        if n > available:
            raise ValueError(
                f"prefix length {n} exceeds the corpus size after filtering ({available} bytes)"
            )
        prefix = data[:n]
        w = Word.from_bytes(prefix, Alphabet.from_bytes(prefix))
        records.extend(
            _measure_word(w, w.alphabet.size, n, "corpus", 0, algorithms, reps, backend, None)
        )
    return records


def metadata_line() -> str:
    host = hashlib.sha256(platform.node().encode()).hexdigest()[:8]
    return f"# generator={GENERATOR_ID} clock={CLOCK_ID} host={host}"


def summarize_cells(records: Iterable[BenchRecord]) -> list[CellSummary]:
    """Per-cell mean elapsed times and the lfap/qlfap ratio where defined.

    The mean is over per-word medians (one record per trial and algorithm).
    """
    cells: dict[tuple[int, int, int | str], dict[str, list[int]]] = {}
    for r in records:
        cells.setdefault((r.sigma, r.n, r.planted_period), {}).setdefault(r.algorithm, []).append(
            r.elapsed_ns
        )
    summaries = []
    for (sigma, n, planted), per_algo in sorted(cells.items(), key=lambda kv: (kv[0][0], kv[0][1], str(kv[0][2]))):
        means = {name: statistics.fmean(times) for name, times in per_algo.items()}
        ratio = None
        if "qlfap" in means and "lfap" in means and means["qlfap"] > 0:
            ratio = means["lfap"] / means["qlfap"]
        summaries.append(CellSummary(sigma=sigma, n=n, planted_period=planted, mean_ns=means, ratio=ratio))
    return summaries


def write_records_csv(records: Sequence[BenchRecord], fh: io.TextIOBase, with_summary: bool = True) -> None:
    fh.write(metadata_line() + "\n")
    writer = csv.writer(fh, lineterminator="\n")
    writer.writerow(CSV_FIELDS)
    for r in records:
        writer.writerow(
            [r.algorithm, r.sigma, r.n, r.planted_period, r.trial, r.elapsed_ns, r.result_checksum]
        )
    if with_summary:
        for s in summarize_cells(records):
            ratio = f"{s.ratio:.4f}" if s.ratio is not None else "-"
            means = " ".join(f"mean_ns_{name}={value:.1f}" for name, value in sorted(s.mean_ns.items()))
            fh.write(
                f"# cell sigma={s.sigma} n={s.n} planted_period={s.planted_period} {means} ratio_lfap_qlfap={ratio}\n"
            )


def write_cell_csv(records: Sequence[BenchRecord], fh: io.TextIOBase) -> None:
    """Plot-ready per-cell aggregates."""
    writer = csv.writer(fh, lineterminator="\n")
    writer.writerow(["sigma", "n", "planted_period", "mean_ns_qlfap", "mean_ns_lfap", "ratio"])
    for s in summarize_cells(records):
        writer.writerow(
            [
                s.sigma,
                s.n,
                s.planted_period,
                f"{s.mean_ns['qlfap']:.1f}" if "qlfap" in s.mean_ns else "",
                f"{s.mean_ns['lfap']:.1f}" if "lfap" in s.mean_ns else "",
                f"{s.ratio:.4f}" if s.ratio is not None else "",
            ]
        )


def read_records_csv(fh: io.TextIOBase) -> list[BenchRecord]:
    """Parse a records CSV back into BenchRecord objects (comments skipped)."""
    records = []
    header: list[str] | None = None
    for row in csv.reader(line for line in fh if not line.startswith("#")):
        if not row:
            continue
        if header is None:
            if tuple(row) != CSV_FIELDS:
                raise ValueError(f"unexpected CSV header: {row}")
            header = row
            continue
        algorithm, sigma, n, planted, trial, elapsed, checksum = row
        records.append(
            BenchRecord(
                algorithm=algorithm,
                sigma=int(sigma),
                n=int(n),
                planted_period=int(planted) if planted.isdigit() else planted,
                trial=int(trial),
                elapsed_ns=int(elapsed),
                result_checksum=checksum,
            )
        )
    return records
