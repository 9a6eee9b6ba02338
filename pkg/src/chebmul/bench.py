"""Experiment drivers: operation counts, relative error and timing.

Each driver returns a list of :class:`BenchRecord`; :func:`write_csv` turns
them into the CSV consumed by external plotting tools.
"""

from __future__ import annotations

import csv
import io
import math
import re
import time
from dataclasses import dataclass
from functools import partial
from typing import Callable, Iterable, Sequence, TextIO

import numpy as np

from .chebyshev import mul_dct, mul_direct, pm_chebyshev, pm_dft, pm_dft_accurate
from .costmodel import ADD_DEVIATIONS, CostModel, measured_closed_form, theoretical_cost
from .monomial import mul_fft, mul_karatsuba, mul_schoolbook
from .poly import OpCount, counting, exact_cheb_product, exact_mono_product, relative_error

DEFAULT_SEED = 20100
KARATSUBA_THRESHOLD = 32
CSV_COLUMNS = ("method", "n", "trials", "mean_time_us", "rel_error", "muls", "adds")

CHEB_METHODS: dict[str, Callable] = {
    "direct": mul_direct,
    "dct": mul_dct,
    "pm-schoolbook": partial(pm_chebyshev, mul=mul_schoolbook),
    "pm-karatsuba": partial(
        pm_chebyshev, mul=partial(mul_karatsuba, threshold=KARATSUBA_THRESHOLD)
    ),
    "pm-fft": partial(pm_chebyshev, mul=mul_fft),
    "pm-dft": pm_dft,
    "pm-dft-accurate": pm_dft_accurate,
}

MONO_METHODS: dict[str, Callable] = {
    "schoolbook": mul_schoolbook,
    "karatsuba": partial(mul_karatsuba, threshold=KARATSUBA_THRESHOLD),
    "fft": mul_fft,
}

METHODS = {**CHEB_METHODS, **MONO_METHODS}

# counting variants: Karatsuba recursion runs all the way down
COUNTABLE: dict[str, Callable] = {
    "schoolbook": mul_schoolbook,
    "karatsuba": mul_karatsuba,
    "direct": mul_direct,
    "pm-schoolbook": partial(pm_chebyshev, mul=mul_schoolbook),
    "pm-karatsuba": partial(pm_chebyshev, mul=mul_karatsuba),
}

# transform methods: instrumented flops checked against c * n * log2(2n)
FLOP_BOUND_FACTOR = {
    "fft": 40,
    "pm-dft": 80,
    "pm-dft-accurate": 80,
    "dct": 120,
}
_INSTRUMENTED = {
    "fft": mul_fft,
    "pm-dft": pm_dft,
    "pm-dft-accurate": pm_dft_accurate,
    "dct": mul_dct,
}


class UnknownMethodError(KeyError):
    def __init__(self, name: str, registry: Iterable[str]):
        super().__init__(name)
        self.name = name
        self.registry = sorted(registry)

    def __str__(self):
        return f"unknown method {self.name!r}; choose from: {', '.join(self.registry)}"


@dataclass
class BenchRecord:
    method: str
    n: int
    trials: int = 1
    mean_time_us: float | None = None
    rel_error: float | None = None
    muls: int | None = None
    adds: int | None = None
    # not part of the CSV
    expected_muls: int | None = None
    expected_adds: int | None = None
    match: bool | None = None
    note: str = ""

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("n must be >= 1")
        if self.mean_time_us is not None and self.mean_time_us <= 0:
            raise ValueError("mean_time_us must be positive")

    def row(self) -> list:
        return [
            self.method,
            self.n,
            self.trials,
            _fmt(self.mean_time_us),
            _fmt(self.rel_error),
            "" if self.muls is None else self.muls,
            "" if self.adds is None else self.adds,
        ]


def _fmt(x: float | None) -> str:
    return "" if x is None else repr(float(x))


def lookup(name: str, registry: dict[str, Callable] = METHODS) -> Callable:
    try:
        return registry[name]
    except KeyError:
        raise UnknownMethodError(name, registry) from None


def parse_sizes(text: str) -> list[int]:
    """``"2,4,8"`` or ``"2^1..2^10"`` (also ``"2..1024"``) into a list of sizes."""
    text = text.replace(" ", "")
    m = re.fullmatch(r"(?:2\^)?(\d+)\.\.(?:2\^)?(\d+)", text)
    if m:
        lo, hi = int(m.group(1)), int(m.group(2))
        if "^" not in text:
            lo, hi = int(math.log2(lo)), int(math.log2(hi))
        if lo > hi:
            raise ValueError(f"empty size range {text!r}")
        return [1 << k for k in range(lo, hi + 1)]
    try:
        sizes = [int(tok) for tok in text.split(",") if tok]
    except ValueError:
        raise ValueError(f"cannot parse sizes {text!r}") from None
    if not sizes or min(sizes) < 1:
        raise ValueError(f"sizes must be positive integers, got {text!r}")
    return sizes


def _random_pair(rng: np.random.Generator, n: int, value_range: tuple[float, float]):
    lo, hi = value_range
    return rng.uniform(lo, hi, n).tolist(), rng.uniform(lo, hi, n).tolist()


# -- experiments ---------------------------------------------------------------


def run_opcount(methods: Sequence[str], sizes: Sequence[int], seed: int = DEFAULT_SEED) -> list[BenchRecord]:
    """Instrumented operation counts compared with the closed forms."""
    rng = np.random.default_rng(seed)
    records = []
    for n in sizes:
        a, b = _random_pair(rng, n, (-50.0, 50.0))
        for name in methods:
            if name in COUNTABLE:
                ops = OpCount()
                COUNTABLE[name](counting(a, ops), counting(b, ops))
                exp_muls, exp_adds = measured_closed_form(name, n)
                pub_muls, pub_adds, _ = theoretical_cost(name, n)
                notes = []
                if pub_muls != exp_muls:
                    notes.append(f"published muls {pub_muls}")
                if pub_adds != exp_adds:
                    notes.append(f"published adds {pub_adds} ({ADD_DEVIATIONS[name]})")
                records.append(BenchRecord(
                    name, n, muls=ops.muls, adds=ops.adds,
                    expected_muls=exp_muls, expected_adds=exp_adds,
                    match=(ops.muls, ops.adds) == (exp_muls, exp_adds),
                    note="; ".join(notes),
                ))
            elif name in _INSTRUMENTED:
                ops = OpCount()
                _INSTRUMENTED[name](a, b, ops=ops)
                bound = FLOP_BOUND_FACTOR[name] * n * math.log2(2 * n)
                records.append(BenchRecord(
                    name, n, muls=ops.muls, adds=ops.adds,
                    match=ops.total <= bound,
                    note=f"not exactly countable; flops {ops.total} vs bound {bound:.0f}",
                ))
            else:
                raise UnknownMethodError(name, [*COUNTABLE, *_INSTRUMENTED])
    return records


def run_error(
    methods: Sequence[str],
    sizes: Sequence[int],
    trials: int = 50,
    value_range: tuple[float, float] = (-50.0, 50.0),
    seed: int = DEFAULT_SEED,
) -> list[BenchRecord]:
    """Mean relative error against the exact rational product.

    Every method sees the same ``trials`` random pairs for a given size.
    """
    if trials < 1:
        raise ValueError("trials must be >= 1")
    funcs = {name: lookup(name) for name in methods}
    rng = np.random.default_rng(seed)
    records = []
    for n in sizes:
        pairs = [_random_pair(rng, n, value_range) for _ in range(trials)]
        cheb_exact = mono_exact = None
        errors = {name: [] for name in methods}
        for a, b in pairs:
            if any(name in CHEB_METHODS for name in methods):
                cheb_exact = exact_cheb_product(a, b)
            if any(name in MONO_METHODS for name in methods):
                mono_exact = exact_mono_product(a, b)
            for name, fn in funcs.items():
                exact = cheb_exact if name in CHEB_METHODS else mono_exact
                errors[name].append(relative_error(fn(a, b), exact))
        for name in methods:
            records.append(BenchRecord(name, n, trials=trials, rel_error=float(np.mean(errors[name]))))
    return records


def time_call(fn: Callable, a, b, reps: int = 5, min_sample: float = 0.01) -> tuple[float, int]:
    """Mean seconds per call and total number of timed calls.

    Calls are grouped so that each of the ``reps`` samples lasts at least
    ``min_sample`` seconds on the monotonic clock.
    """
    if reps < 1:
        raise ValueError("reps must be >= 1")
    t0 = time.perf_counter()
    fn(a, b)
    once = max(time.perf_counter() - t0, 1e-9)
    inner = max(1, math.ceil(min_sample / once))
    total = 0.0
    for _ in range(reps):
        t0 = time.perf_counter()
        for _ in range(inner):
            fn(a, b)
        total += time.perf_counter() - t0
    return total / (reps * inner), reps * inner


def run_bench(
    methods: Sequence[str],
    sizes: Sequence[int],
    reps: int = 5,
    seed: int = DEFAULT_SEED,
    min_sample: float = 0.01,
) -> list[BenchRecord]:
    """Mean wall-clock time per multiplication, same data for every method."""
    funcs = {name: lookup(name) for name in methods}
    rng = np.random.default_rng(seed)
    records = []
    for n in sizes:
        a, b = _random_pair(rng, n, (-50.0, 50.0))
        for name, fn in funcs.items():
            mean, calls = time_call(fn, a, b, reps=reps, min_sample=min_sample)
            records.append(BenchRecord(name, n, trials=calls, mean_time_us=max(mean * 1e6, 1e-3)))
    return records


def run_costmodel(methods: Sequence[str], sizes: Sequence[int], model: CostModel = CostModel()) -> list[BenchRecord]:
    records = []
    for n in sizes:
        for name in methods:
            muls, adds, _ = theoretical_cost(name, n, model)
            records.append(BenchRecord(name, n, muls=muls, adds=adds))
    return records


# -- CSV -----------------------------------------------------------------------


def write_csv(records: Iterable[BenchRecord], out: TextIO, meta: dict | None = None) -> None:
    for key, value in (meta or {}).items():
        out.write(f"# {key}={value}\n")
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for rec in records:
        writer.writerow(rec.row())


def read_csv(src: TextIO | str) -> tuple[dict, list[BenchRecord]]:
    """Parse a CSV produced by :func:`write_csv`; returns ``(meta, records)``."""
    if isinstance(src, str):
        src = io.StringIO(src)
    meta, body = {}, []
    for line in src:
        if line.startswith("#"):
            key, _, value = line[1:].strip().partition("=")
            meta[key.strip()] = value.strip()
        elif line.strip():
            body.append(line)
    reader = csv.DictReader(body)
    if tuple(reader.fieldnames or ()) != CSV_COLUMNS:
        raise ValueError(f"unexpected CSV header {reader.fieldnames}")

    def opt(v, kind):
        return None if v == "" else kind(v)

    records = [
        BenchRecord(
            row["method"], int(row["n"]), int(row["trials"]),
            opt(row["mean_time_us"], float), opt(row["rel_error"], float),
            opt(row["muls"], int), opt(row["adds"], int),
        )
        for row in reader
    ]
    return meta, records
