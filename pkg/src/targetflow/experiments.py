"""Target-fraction sweep: driver demand of random target subsets.

For each fraction f, ``trials`` uniform-random target sets of size
``round(f * n)`` (at least one node) are solved and the mean driver count
is normalized by the whole-network driver count, giving the ratio curve
that tends to sit near f for homogeneous random networks.
"""

import json
import math
import random
from dataclasses import dataclass

from .cover import solve
from .graph import DiGraph
from .matching import driver_count

CSV_HEADER = "f,trials,mean_nD,ratio,std"


@dataclass(frozen=True)
class SweepRow:
    f: float
    trials: int
    mean_nd: float
    ratio: float
    std: float


@dataclass(frozen=True)
class SweepResult:
    rows: tuple[SweepRow, ...]
    full_driver_count: int


def sweep(g: DiGraph, fractions, trials: int, seed: int) -> SweepResult:
    """Run the fraction sweep; deterministic per seed.

    Rows come out sorted by fraction, and trials are consumed in
    (fraction, trial-index) order, so a fixed seed reproduces results
    byte for byte.
    """
    if trials < 1:
        raise ValueError("trials must be at least 1")
    fracs = sorted(float(f) for f in fractions)
    if not fracs or fracs[0] <= 0 or fracs[-1] > 1:
        raise ValueError("fractions must lie in (0, 1]")
    nd_full = driver_count(g)
    rng = random.Random(seed)
    rows = []
    for f in fracs:
        size = max(1, round(f * g.n))
        counts = []
        for _ in range(trials):
            members = sorted(rng.sample(range(g.n), size))
            nd = solve(g, members).min_drivers
            if nd > nd_full:
                raise AssertionError(
                    f"subset driver count {nd} exceeds whole-network "
                    f"count {nd_full}")
            counts.append(nd)
        ratios = [c / nd_full for c in counts]
        mean_ratio = sum(ratios) / trials
        std = math.sqrt(sum((r - mean_ratio) ** 2 for r in ratios) / trials)
        rows.append(SweepRow(f, trials, sum(counts) / trials, mean_ratio, std))
    return SweepResult(tuple(rows), nd_full)


def sweep_to_csv(result: SweepResult) -> str:
    lines = [CSV_HEADER]
    for r in result.rows:
        lines.append(f"{r.f:.6g},{r.trials},{r.mean_nd:.6g},"
                     f"{r.ratio:.6g},{r.std:.6g}")
    return "\n".join(lines) + "\n"


def sweep_to_json(result: SweepResult) -> str:
    rows = [{"f": float(f"{r.f:.6g}"), "trials": r.trials,
             "mean_nD": float(f"{r.mean_nd:.6g}"),
             "ratio": float(f"{r.ratio:.6g}"),
             "std": float(f"{r.std:.6g}")} for r in result.rows]
    return json.dumps({"N_D": result.full_driver_count, "rows": rows},
                      indent=2) + "\n"
