"""Seeded Metropolis sampler for two networks exchanging link-quanta.

The chain state is the number of links ``R1`` held by the left pool. Each
step proposes ``R1 +/- 1`` with probability 1/2 and accepts with
``min(1, pi(R1')/pi(R1))`` where ``pi(R1)`` is proportional to
``W(R1, K1) W(R - R1, K2)``. The ratio has a closed form, so no
factorials or big integers are touched at run time.

Randomness comes from numpy's PCG64 bit generator. Every step consumes two
consecutive float64 draws from ``Generator.random``: the first picks the
direction, the second is the acceptance uniform.

The inner loop runs in a compiled kernel when one is available and falls
back to pure Python otherwise. Set ``NETTHERMO_PURE_PYTHON=1`` to force the
fallback. Both kernels produce identical trajectories.
"""
from __future__ import annotations

import math
import os
from collections import Counter
from dataclasses import dataclass, field
from typing import Dict, Optional

import numpy as np

from . import _kernels_py
from .errors import CapExceededError, ValidationError
from .oracle import partition_distribution

if os.environ.get("NETTHERMO_PURE_PYTHON", "") not in ("", "0"):
    _kernel = _kernels_py
else:
    try:
        from . import _kernels as _kernel
    except ImportError:  # extension not built
        _kernel = _kernels_py

KERNEL = _kernel.KERNEL_NAME
RNG_ALGORITHM = "numpy.PCG64/Generator.random float64, 2 draws per step"
CHUNK_STEPS = 1 << 16

__all__ = [
    "KERNEL",
    "RNG_ALGORITHM",
    "SimConfig",
    "Trajectory",
    "Summary",
    "acceptance_ratio",
    "run_exchange",
    "summarize",
]


@dataclass(frozen=True)
class SimConfig:
    pool_states_left: int
    pool_states_right: int
    total_links: int
    steps: int
    seed: int = 0
    initial_links_left: int = 0
    burn_in: Optional[int] = None
    sample_stride: int = 1

    def __post_init__(self):
        if self.burn_in is None:
            object.__setattr__(self, "burn_in", self.steps // 100)
        for name in ("pool_states_left", "pool_states_right", "total_links", "steps"):
            value = getattr(self, name)
            if isinstance(value, bool) or not isinstance(value, int) or value < 1:
                raise ValidationError(f"{name} must be a positive integer, got {value!r}")
        if self.sample_stride < 1:
            raise ValidationError(f"sample_stride must be >= 1, got {self.sample_stride}")
        if not 0 <= self.burn_in < self.steps:
            raise ValidationError(
                f"burn_in must satisfy 0 <= burn_in < steps, got {self.burn_in} "
                f"with steps={self.steps}"
            )
        if not 0 <= self.initial_links_left <= self.total_links:
            raise ValidationError(
                f"initial_links_left must lie in [0, {self.total_links}], "
                f"got {self.initial_links_left}"
            )
        if not 0 <= self.seed < 2**64:
            raise ValidationError(f"seed must be a 64-bit unsigned integer, got {self.seed}")


@dataclass(frozen=True)
class Trajectory:
    config: SimConfig
    steps_index: np.ndarray = field(repr=False)
    samples: np.ndarray = field(repr=False)
    acceptance_rate: float
    empirical_histogram: Dict[int, int]
    mean_occupation_left: float
    mean_occupation_right: float
    rng: str = RNG_ALGORITHM
    kernel: str = KERNEL


@dataclass(frozen=True)
class Summary:
    mean_links_left: float
    stderr_links_left: float
    mean_occupation_left: float
    mean_occupation_right: float
    tv_distance_to_exact: Optional[float]


def acceptance_ratio(links_left: int, step: int, k1: int, k2: int, total: int) -> float:
    """``pi(R1 + step) / pi(R1)`` for ``step`` in {+1, -1}, 0 if out of range.

    Same arithmetic as the kernels.
    """
    if step == 1:
        if links_left >= total:
            return 0.0
        s = links_left
        return ((s + k1) / (s + 1.0)) * ((total - s) / (total - s - 1.0 + k2))
    if step == -1:
        if links_left <= 0:
            return 0.0
        s = links_left
        return (s / (s - 1.0 + k1)) * ((total - s + k2) / (total - s + 1.0))
    raise ValidationError(f"step must be +1 or -1, got {step}")


def run_exchange(config: SimConfig, kernel=None) -> Trajectory:
    """Run the chain described by ``config``.

    ``kernel`` selects an implementation module explicitly; by default the
    one chosen at import is used.
    """
    kern = _kernel if kernel is None else kernel
    rng = np.random.Generator(np.random.PCG64(config.seed))
    k1, k2, total = config.pool_states_left, config.pool_states_right, config.total_links
    burn, stride = config.burn_in, config.sample_stride

    state = config.initial_links_left
    accepted = 0
    kept_idx, kept = [], []
    done = 0
    while done < config.steps:
        m = min(CHUNK_STEPS, config.steps - done)
        draws = rng.random((m, 2))
        u_dir = np.ascontiguousarray(draws[:, 0])
        u_acc = np.ascontiguousarray(draws[:, 1])
        out = np.empty(m, dtype=np.int64)
        state, acc = kern.advance(state, k1, k2, total, u_dir, u_acc, out)
        accepted += acc
        idx = np.arange(done, done + m, dtype=np.int64)
        mask = (idx >= burn) & ((idx - burn) % stride == 0)
        kept_idx.append(idx[mask])
        kept.append(out[mask])
        done += m

    steps_index = np.concatenate(kept_idx)
    samples = np.concatenate(kept)
    values, counts = np.unique(samples, return_counts=True)
    mean = float(samples.mean())
    return Trajectory(
        config=config,
        steps_index=steps_index,
        samples=samples,
        acceptance_rate=accepted / config.steps,
        empirical_histogram={int(v): int(c) for v, c in zip(values, counts)},
        mean_occupation_left=mean / k1,
        mean_occupation_right=(total - mean) / k2,
        kernel=kern.KERNEL_NAME,
    )


def _batch_stderr(samples: np.ndarray, batches: int = 50) -> float:
    n = len(samples) // batches
    if n < 2:
        return float(np.std(samples, ddof=1) / math.sqrt(len(samples))) if len(samples) > 1 else 0.0
    means = samples[: n * batches].reshape(batches, n).mean(axis=1)
    return float(np.std(means, ddof=1) / math.sqrt(batches))


def summarize(t: Trajectory, k1: int, k2: int) -> Summary:
    """Mean occupations and, when the exact oracle is in reach, TV distance.

    The standard error of the mean uses 50 batch means.
    """
    if len(t.samples) == 0:
        raise ValidationError("trajectory has no retained samples")
    total = t.config.total_links
    mean = float(t.samples.mean())
    try:
        dist = partition_distribution(k1, k2, total)
    except CapExceededError:
        tv = None
    else:
        n = len(t.samples)
        counts = Counter({i: 0 for i in range(total + 1)})
        counts.update(t.empirical_histogram)
        tv = 0.5 * sum(abs(counts[i] / n - p) for i, p in enumerate(dist.probabilities()))
    return Summary(
        mean_links_left=mean,
        stderr_links_left=_batch_stderr(t.samples.astype(np.float64)),
        mean_occupation_left=mean / k1,
        mean_occupation_right=(total - mean) / k2,
        tv_distance_to_exact=tv,
    )
