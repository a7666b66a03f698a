"""Scaling measurements for the best-first enumerator.

Samples uniform random pair sets, runs the enumerator to a K budget while
recording the frontier size |P| and the cumulative process time at a grid
of K checkpoints, and fits a second-degree polynomial to the time curve.
CPU process time is used rather than wall clock, and each timed run is
preceded by a short untimed warm-up pass so allocator and cache startup
noise stays out of the measurement.

Times are machine-dependent; the reproducible claims are fit quality
(time vs K is near-quadratic, |P| vs K near-linear for K << 2^n) and the
exhaustion of the frontier when K reaches 2^n.
"""

from __future__ import annotations

import csv
import io
import time
from dataclasses import dataclass
from typing import NamedTuple, Optional, Sequence

import numpy as np

from .core import init, normalize

CSV_HEADER = ("n", "k", "pending_size", "elapsed_s", "trial", "seed")


class DegenerateFit(ValueError):
    """Not enough distinct K checkpoints for the requested fit."""


@dataclass(frozen=True)
class BenchConfig:
    """One measurement campaign.

    ``k_checkpoints`` overrides the default log-spaced grid of
    ``k_samples`` points; either way checkpoints are clipped to
    min(k_max, 2^n) per n. ``warmup`` enumeration steps run untimed
    before each trial.
    """

    n_values: Sequence[int] = (15, 100, 1000)
    k_max: int = 100_000
    k_samples: int = 50
    seed: int = 42
    trials: int = 1
    k_checkpoints: Optional[Sequence[int]] = None
    warmup: int = 1000

    def __post_init__(self):
        if not self.n_values or any(n < 1 for n in self.n_values):
            raise ValueError("n_values must be non-empty, all >= 1")
        if not (self.k_max >= self.k_samples >= 2):
            raise ValueError("need k_max >= k_samples >= 2")
        if self.trials < 1:
            raise ValueError("trials must be >= 1")


@dataclass(frozen=True)
class BenchRecord:
    n: int
    k: int
    pending_size: int
    elapsed_s: float
    trial: int
    seed: int


def checkpoints_for(config: BenchConfig, n: int) -> list[int]:
    """Ascending unique K checkpoints for one n, clipped to min(k_max, 2^n)."""
    k_cap = config.k_max
    if n < 63:
        k_cap = min(k_cap, 1 << n)
    if config.k_checkpoints is not None:
        ks = sorted({int(k) for k in config.k_checkpoints if 1 <= k <= k_cap})
        if not ks:
            raise ValueError("no checkpoints left after clipping")
        return ks
    grid = np.geomspace(1, k_cap, config.k_samples)
    return sorted({int(round(k)) for k in grid})


def run_bench(config: BenchConfig) -> list[BenchRecord]:
    """Run the measurement campaign; deterministic given the seed.

    Pairs are drawn from the standard uniform distribution with a generator
    seeded by (seed, n, trial), so pending-size columns replay exactly;
    elapsed times are machine noise by nature.
    """
    records: list[BenchRecord] = []
    for n in config.n_values:
        cps = checkpoints_for(config, n)
        for trial in range(config.trials):
            rng = np.random.default_rng([config.seed, n, trial])
            pairs = rng.random((n, 2))
            instance = normalize(pairs)
            warm = init(instance)
            for _ in range(min(config.warmup, cps[-1])):
                if warm.advance() is None:
                    break
            state = init(instance)
            emitted = 0
            start = time.process_time()
            for k in cps:
                while emitted < k:
                    state.advance()
                    emitted += 1
                records.append(
                    BenchRecord(
                        n=n,
                        k=k,
                        pending_size=state.pending_size(),
                        elapsed_s=time.process_time() - start,
                        trial=trial,
                        seed=config.seed,
                    )
                )
    return records


class QuadraticFit(NamedTuple):
    c2: float
    c1: float
    c0: float
    r_squared: float


class LinearFit(NamedTuple):
    m1: float
    m0: float
    r_squared: float


def _polyfit_r2(x, y, degree):
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    if len(np.unique(x)) < degree + 1:
        raise DegenerateFit(
            f"need at least {degree + 1} distinct K values, got {len(np.unique(x))}"
        )
    coeffs = np.polyfit(x, y, degree)
    resid = y - np.polyval(coeffs, x)
    ss_res = float(resid @ resid)
    ss_tot = float(((y - y.mean()) ** 2).sum())
    r2 = 1.0 if ss_tot == 0.0 else 1.0 - ss_res / ss_tot
    return coeffs, r2


def fit_quadratic(records: Sequence[BenchRecord]) -> QuadraticFit:
    """Least-squares degree-2 fit of elapsed time vs K for one n.

    Records may pool several trials but must share n. Returns coefficients
    (quadratic first) and the coefficient of determination.
    """
    if not records:
        raise DegenerateFit("no records")
    if len({r.n for r in records}) != 1:
        raise ValueError("records must all belong to one n")
    coeffs, r2 = _polyfit_r2([r.k for r in records], [r.elapsed_s for r in records], 2)
    return QuadraticFit(float(coeffs[0]), float(coeffs[1]), float(coeffs[2]), r2)


def fit_pending_linear(
    records: Sequence[BenchRecord], k_min: int = 0
) -> LinearFit:
    """Degree-1 fit of frontier size vs K, over checkpoints with k >= k_min."""
    kept = [r for r in records if r.k >= k_min]
    if not kept:
        raise DegenerateFit("no records at or above k_min")
    if len({r.n for r in kept}) != 1:
        raise ValueError("records must all belong to one n")
    coeffs, r2 = _polyfit_r2([r.k for r in kept], [r.pending_size for r in kept], 1)
    return LinearFit(float(coeffs[0]), float(coeffs[1]), r2)


def write_csv(records: Sequence[BenchRecord], fileobj: io.TextIOBase) -> None:
    """Emit records as CSV with header n,k,pending_size,elapsed_s,trial,seed."""
    writer = csv.writer(fileobj)
    writer.writerow(CSV_HEADER)
    for r in records:
        writer.writerow([r.n, r.k, r.pending_size, repr(r.elapsed_s), r.trial, r.seed])


def records_csv(records: Sequence[BenchRecord]) -> str:
    buf = io.StringIO()
    write_csv(records, buf)
    return buf.getvalue()
