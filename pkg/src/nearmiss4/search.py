"""Exhaustive scan for near-solutions of x^4 + y^4 = z^2.

For each pair min_x <= x <= y <= max_x with s = x^4 + y^4, the z worth
testing lie in the window [isqrt(s - t), isqrt(s + t)] (t the absolute
bound on the residual): anything outside misses s by more than t.  Once
s > t^2 consecutive squares straddling s are more than 2t apart, so the
window collapses to at most two candidates around isqrt(s); that regime
is served by a fixed-width int64 fast path, everything else by exact
big-int arithmetic.  Both paths must agree wherever both apply.

Work is partitioned into interleaved x-stripes across workers and the
merged result is sorted by (y, x, z), so output is independent of the
worker count.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import isqrt
from multiprocessing import Pool

import numpy as np

__all__ = ["SearchConfig", "SearchHit", "scan", "verify_hit"]

# Largest max_x for which s = x^4 + y^4 stays below 2^62, leaving int64
# headroom for the float-sqrt +/-1 corrections.  Beyond this bound every
# stripe falls back to exact big-int scanning.
FAST_PATH_MAX_X = isqrt(isqrt(2**61))

_FAST_MAX_BOUND = 2**32  # residual bounds above this skip the fast path


@dataclass(frozen=True)
class SearchConfig:
    max_x: int
    min_x: int = 1
    threshold: int = 0
    exact_residual: int | None = None
    workers: int = 1

    def __post_init__(self) -> None:
        if self.min_x < 1:
            raise ValueError(f"min_x must be >= 1, got {self.min_x}")
        if self.max_x < self.min_x:
            raise ValueError(f"need min_x <= max_x, got {self.min_x}..{self.max_x}")
        if self.threshold < 0:
            raise ValueError(f"threshold must be >= 0, got {self.threshold}")
        if self.workers < 1:
            raise ValueError(f"workers must be >= 1, got {self.workers}")

    @property
    def bound(self) -> int:
        """Absolute residual bound the candidate window must cover."""
        if self.exact_residual is not None:
            return abs(self.exact_residual)
        return self.threshold

    def keeps(self, delta: int) -> bool:
        if self.exact_residual is not None:
            return delta == self.exact_residual
        return abs(delta) <= self.threshold


@dataclass(frozen=True)
class SearchHit:
    x: int
    y: int
    z: int
    delta: int


_Row = tuple[int, int, int, int]


def _scan_x_exact(x: int, cfg: SearchConfig) -> list[_Row]:
    rows: list[_Row] = []
    t = cfg.bound
    x4 = x**4
    for y in range(x, cfg.max_x + 1):
        s = x4 + y**4
        z_lo = max(isqrt(s - t) if s > t else 1, 1)
        z_hi = isqrt(s + t)
        for z in range(z_lo, z_hi + 1):
            delta = s - z * z
            if cfg.keeps(delta):
                rows.append((x, y, z, delta))
    return rows


def _scan_x_fast(x: int, pow4: np.ndarray, cfg: SearchConfig) -> list[_Row]:
    # valid only when 2*x^4 > bound^2: then each pair admits at most the
    # two candidates isqrt(s) and isqrt(s) + 1
    s = pow4[x] + pow4[x:]
    r = np.sqrt(s.astype(np.float64)).astype(np.int64)
    r -= r * r > s
    r += (r + 1) * (r + 1) <= s
    rows: list[_Row] = []
    for z_arr, d_arr in ((r, s - r * r), (r + 1, s - (r + 1) * (r + 1))):
        if cfg.exact_residual is not None:
            mask = d_arr == cfg.exact_residual
        else:
            mask = np.abs(d_arr) <= cfg.threshold
        for i in np.nonzero(mask)[0]:
            rows.append((x, x + int(i), int(z_arr[i]), int(d_arr[i])))
    return rows


def _scan_stripe(job: tuple[SearchConfig, int, bool]) -> list[_Row]:
    cfg, index, force_exact = job
    t = cfg.bound
    use_fast = (
        not force_exact
        and cfg.max_x <= FAST_PATH_MAX_X
        and t <= _FAST_MAX_BOUND
    )
    pow4 = np.arange(cfg.max_x + 1, dtype=np.int64) ** 4 if use_fast else None
    rows: list[_Row] = []
    for x in range(cfg.min_x + index, cfg.max_x + 1, cfg.workers):
        if use_fast and 2 * x**4 > t * t:
            rows.extend(_scan_x_fast(x, pow4, cfg))
        else:
            rows.extend(_scan_x_exact(x, cfg))
    return rows


def scan(cfg: SearchConfig, force_exact: bool = False) -> list[SearchHit]:
    """All qualifying hits, each exactly once, sorted by (y, x, z).

    force_exact switches off the int64 fast path; results are identical
    either way (asserted by the test suite on overlap ranges).
    """
    jobs = [(cfg, i, force_exact) for i in range(cfg.workers)]
    if cfg.workers == 1:
        chunks = [_scan_stripe(jobs[0])]
    else:
        with Pool(cfg.workers) as pool:
            chunks = pool.map(_scan_stripe, jobs)
    rows = [row for chunk in chunks for row in chunk]
    rows.sort(key=lambda r: (r[1], r[0], r[2]))
    return [SearchHit(*row) for row in rows]


def verify_hit(hit: SearchHit) -> bool:
    """Recompute the residual from scratch and compare."""
    return hit.x**4 + hit.y**4 - hit.z * hit.z == hit.delta
