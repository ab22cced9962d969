"""Seeded Monte Carlo harness for the crossing/monotonicity experiments.

Each (grid point, trial) pair gets its own PRNG substream, so results are
byte-identical regardless of worker count. Raw prefix counts P_k(v) share
the tree-wide normalization P_k, so crossing indicators compare integer
counts directly; monotonicity uses exact fractions.
"""

from __future__ import annotations

import datetime
import json
import os
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from math import sqrt

import numpy as np

from . import __version__
from .errors import BadSpecError, OutOfRangeError
from .profile_analysis import count_crossings, is_monotone
from .scale_free import sample_tree, substream_seed

EXPERIMENT_KINDS = (
    "no_cross_12_vs_n",
    "no_cross_ii1_vs_i",
    "monotone_i_vs_i",
    "monotone_1_vs_n",
)

DEFAULT_TRIALS = 5000
DEFAULT_FIXED_N = 250
DEFAULT_N_GRID = (10, 25, 50, 100, 150, 200)
DEFAULT_I_GRID = (1, 2, 5, 10, 25, 50, 100, 150, 200, 249)


@dataclass(frozen=True)
class ExperimentConfig:
    which: str
    grid: tuple[int, ...]
    trials: int = DEFAULT_TRIALS
    fixed_n: int = DEFAULT_FIXED_N
    seed: int = 0

    def __post_init__(self):
        if self.which not in EXPERIMENT_KINDS:
            raise BadSpecError(f"unknown experiment {self.which!r}")
        if self.trials < 1:
            raise OutOfRangeError(f"need trials >= 1, got {self.trials}")
        if self.which.endswith("_vs_n"):
            if any(n < 3 for n in self.grid):
                raise OutOfRangeError("vertex counts must be >= 3")
        else:
            if any(not 1 <= i < self.fixed_n for i in self.grid):
                raise OutOfRangeError(f"vertex indices must be in [1, {self.fixed_n})")


@dataclass(frozen=True)
class ExperimentResult:
    config: ExperimentConfig
    rows: tuple[dict, ...]
    wall_seconds: float = field(compare=False, default=0.0)


def default_grid(which: str) -> tuple[int, ...]:
    return DEFAULT_N_GRID if which.endswith("_vs_n") else DEFAULT_I_GRID


def _distance_matrix(parents: tuple[int, ...], n: int) -> np.ndarray:
    """All-pairs hop distances, built incrementally in attachment order."""
    D = np.zeros((n, n), dtype=np.int32)
    for t in range(2, n + 1):
        p = parents[t - 2]
        row = D[p - 1, : t - 1] + 1
        D[t - 1, : t - 1] = row
        D[: t - 1, t - 1] = row
    return D


def _prefix_counts(D: np.ndarray, vertices: tuple[int, ...]):
    """(P_k array, {v: P_k(v) array}) for k = 0..d, 0-based vertex ids."""
    n = D.shape[0]
    iu = np.triu_indices(n, 1)
    dvals = D[iu]
    d = int(dvals.max())
    weights = np.arange(d + 1) >= 2
    hist = np.bincount(dvals, minlength=d + 1)
    Pk = np.cumsum(np.where(weights, hist, 0))
    through = {}
    for v in vertices:
        on_path = (D[v][iu[0]] + D[v][iu[1]]) == dvals
        sel = on_path & (iu[0] != v) & (iu[1] != v)
        hist_v = np.bincount(dvals[sel], minlength=d + 1)
        through[v] = np.cumsum(np.where(weights, hist_v, 0))
    return Pk, through


def _trial_indicator(which: str, x: int, fixed_n: int, seed: int, trial: int) -> bool:
    rng = random.Random(substream_seed(seed, (x << 24) + trial))
    n = x if which.endswith("_vs_n") else fixed_n
    rec = sample_tree(n, rng)
    D = _distance_matrix(rec.parents, n)
    if which == "no_cross_12_vs_n":
        u, w = 0, 1
    elif which == "no_cross_ii1_vs_i":
        u, w = x - 1, x
    else:
        u, w = (0, None) if which == "monotone_1_vs_n" else (x - 1, None)
    if w is not None:
        _, through = _prefix_counts(D, (u, w))
        seq_u = tuple(int(c) for c in through[u][2:])
        seq_w = tuple(int(c) for c in through[w][2:])
        return count_crossings(seq_u, seq_w).count == 0
    Pk, through = _prefix_counts(D, (u,))
    bc = tuple(
        Fraction(int(pv), int(pk)) for pv, pk in zip(through[u][2:], Pk[2:])
    )
    return is_monotone(bc)


def _worker(args) -> int:
    return int(_trial_indicator(*args))


def worker_count() -> int:
    raw = os.environ.get("BCPROF_THREADS", "1")
    try:
        value = int(raw)
    except ValueError:
        raise BadSpecError(f"BCPROF_THREADS must be an integer, got {raw!r}")
    if value == 0:
        return os.cpu_count() or 1
    return max(1, value)


def run_experiment(cfg: ExperimentConfig) -> ExperimentResult:
    start = time.monotonic()
    workers = worker_count()
    rows = []
    for x in cfg.grid:
        tasks = [(cfg.which, x, cfg.fixed_n, cfg.seed, t) for t in range(cfg.trials)]
        if workers > 1:
            with ProcessPoolExecutor(max_workers=workers) as pool:
                hits = sum(pool.map(_worker, tasks, chunksize=64))
        else:
            hits = sum(_worker(task) for task in tasks)
        estimate = hits / cfg.trials
        stderr = sqrt(estimate * (1.0 - estimate) / cfg.trials)
        rows.append(
            {
                "x": x,
                "estimate": estimate,
                "stderr": stderr,
                "trials": cfg.trials,
                "seed": cfg.seed,
            }
        )
    return ExperimentResult(
        config=cfg, rows=tuple(rows), wall_seconds=time.monotonic() - start
    )


def render_csv(res: ExperimentResult) -> str:
    lines = ["x,estimate,stderr,trials,seed"]
    for row in res.rows:
        lines.append(
            f"{row['x']},{row['estimate']:.6f},{row['stderr']:.6f},"
            f"{row['trials']},{row['seed']}"
        )
    return "\n".join(lines) + "\n"


def write_csv(res: ExperimentResult, path: str) -> None:
    with open(path, "w") as fh:
        fh.write(render_csv(res))


def write_manifest(res: ExperimentResult, path: str) -> None:
    manifest = {
        "which": res.config.which,
        "grid": list(res.config.grid),
        "trials": res.config.trials,
        "fixed_n": res.config.fixed_n,
        "seed": res.config.seed,
        "version": __version__,
        "wall_seconds": res.wall_seconds,
        "generated": datetime.datetime.now(datetime.timezone.utc).isoformat(),
    }
    with open(path, "w") as fh:
        json.dump(manifest, fh, indent=2)
        fh.write("\n")
