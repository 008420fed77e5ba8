"""Uniform sampling by unranking the canonical enumeration, and Monte Carlo
estimates of block statistics."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Callable

import numpy as np

from noncross.core import SignedPartition, block_type
from noncross.enumfam import FamilySpec, base_partition, check_guard, enumerate_family
from noncross.errors import OutOfRange

ALGORITHM = "numpy.PCG64"


@dataclass(frozen=True)
class SampleReport:
    spec: FamilySpec
    trials: int
    seed: int
    statistic: str
    mean: float
    stderr: float
    algorithm: str = ALGORITHM

    def as_dict(self) -> dict:
        s = self.spec
        return {
            "family": s.label,
            "n": s.n,
            "k": s.k,
            "mode": s.mode,
            "trials": self.trials,
            "seed": self.seed,
            "statistic": self.statistic,
            "mean": self.mean,
            "stderr": self.stderr,
            "algorithm": self.algorithm,
        }


@lru_cache(maxsize=64)
def _members(spec: FamilySpec, max_points: int | None) -> tuple:
    return tuple(enumerate_family(spec, max_points))


def _ranks(spec: FamilySpec, seed: int, count: int, max_points: int | None):
    if count < 1:
        raise OutOfRange("count must be at least 1")
    check_guard(spec, max_points)
    members = _members(spec, max_points)
    rng = np.random.Generator(np.random.PCG64(seed))
    return members, rng.integers(0, len(members), size=count)


def sample_uniform(spec: FamilySpec, seed: int, count: int = 1, max_points: int | None = None) -> list:
    """``count`` independent uniform members of the family."""
    members, ranks = _ranks(spec, seed, count, max_points)
    return [members[r] for r in ranks]


def _statistic(spec: FamilySpec, name: str, t: int | None) -> Callable:
    k = spec.k
    if name == "total_blocks":
        return lambda p: len(base_partition(p).blocks) - _mirror_count(p)
    if name in ("blocks_of_size_t", "nonzero_pairs_of_size_t"):
        if t is None or t < 1:
            raise OutOfRange(f"{name} needs t >= 1")
        if name == "blocks_of_size_t" and spec.type != "A":
            raise OutOfRange("blocks_of_size_t applies to type A; use nonzero_pairs_of_size_t")
        if name == "nonzero_pairs_of_size_t" and spec.type == "A":
            raise OutOfRange("nonzero_pairs_of_size_t applies to types B and D")
        return lambda p: block_type(base_partition(p)).scaled(k).rt(t)
    raise OutOfRange(f"unknown statistic {name!r}")


def _mirror_count(p) -> int:
    # a pair {V, -V} counts as one block
    base = base_partition(p)
    return len(base.nonzero_pairs()) if isinstance(base, SignedPartition) else 0


def estimate(
    spec: FamilySpec,
    statistic: str,
    trials: int,
    seed: int,
    t: int | None = None,
    max_points: int | None = None,
) -> SampleReport:
    """Monte Carlo mean and standard error of ``statistic``.

    Statistics: ``blocks_of_size_t`` (type A), ``nonzero_pairs_of_size_t``
    (types B, D), both with ``t`` in units of ``k``; ``total_blocks`` counts a
    symmetric pair once and a zero-block once.
    """
    f = _statistic(spec, statistic, t)
    members, ranks = _ranks(spec, seed, trials, max_points)
    values = np.array([f(m) for m in members], dtype=float)[ranks]
    mean = float(values.mean())
    sd = float(values.std(ddof=1)) if trials > 1 else 0.0
    label = statistic if t is None or statistic == "total_blocks" else f"{statistic}({t})"
    return SampleReport(spec, trials, seed, label, mean, sd / trials**0.5)
