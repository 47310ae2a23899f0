"""Randomized checks that sampled graphs meet the guaranteed intervals.

Every sample is drawn from its own generator seeded by ``(seed, index)``,
so a sweep is reproducible and can be split over worker processes without
changing the sample sequence.
"""

from __future__ import annotations

import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field

from .generators import random_3connected_planar, random_cubic_planar
from .plane import PlaneGraph
from .polyhedra import named
from .reduction import discharge
from .spectrum import has_cycle_in
from .values import cubic_interval, general_interval

__all__ = ["SweepConfig", "SweepResult", "check_interval", "sample", "run_sweep", "POLYHEDRA"]

POLYHEDRA = ("prism", "cube", "dodecahedron", "truncated-tetrahedron", "truncated-cube",
             "truncated-octahedron", "truncated-dodecahedron", "truncated-icosahedron", "truncated-prism")


@dataclass(frozen=True)
class SweepConfig:
    """``cubic`` selects the cubic interval ``[k, 5(k-1)/2]`` for ``k`` in
    ``ks`` (default 5, 7, 9); otherwise ``[k, 2k+3]`` for ``k`` from 3 to
    ``kmax``, with ``[4, 10]`` at ``k = 4``."""

    count: int = 100
    min_n: int = 10
    max_n: int = 40
    seed: int = 0
    kmax: int = 8
    cubic: bool = False
    ks: tuple | None = None
    polyhedra: bool = True

    def k_values(self) -> tuple:
        if self.ks is not None:
            return tuple(self.ks)
        return (5, 7, 9) if self.cubic else tuple(range(3, self.kmax + 1))

    def interval(self, k: int) -> tuple:
        return cubic_interval(k) if self.cubic else general_interval(k)


@dataclass
class SweepResult:
    config: SweepConfig
    samples: int = 0
    checks: int = 0
    skipped: list = field(default_factory=list)
    violations: list = field(default_factory=list)
    graphs: list = field(default_factory=list, repr=False)

    def to_dict(self) -> dict:
        return {"config": asdict(self.config), "samples": self.samples, "checks": self.checks,
                "skipped": self.skipped, "violations": self.violations}


def check_interval(G: PlaneGraph, a: int, b: int):
    """``"hit"`` if some cycle length lies in ``[a, b]``, ``"short"`` if the
    circumference is below ``a``, ``"violation"`` otherwise."""
    if has_cycle_in(G, a, b) is not None:
        return "hit"
    if b < G.n and has_cycle_in(G, b + 1, G.n) is not None:
        return "violation"
    return "short"


def sample(config: SweepConfig, i: int) -> tuple:
    """``(name, graph)`` for sample ``i``: the canonical polyhedra come first
    in cubic sweeps with ``polyhedra`` set."""
    if config.cubic and config.polyhedra and i < len(POLYHEDRA):
        return POLYHEDRA[i], named(POLYHEDRA[i])
    rng = random.Random(f"{config.seed}/{i}")
    if config.cubic:
        lo = max(4, config.min_n + config.min_n % 2)
        n = rng.randrange(lo, max(lo, config.max_n) + 1, 2)
        return f"random-{i}", random_cubic_planar(n, rng)
    n = rng.randint(max(4, config.min_n), max(4, config.min_n, config.max_n))
    return f"random-{i}", random_3connected_planar(n, rng)


def _one(args):
    config, i = args
    name, G = sample(config, i)
    out = {"index": i, "name": name, "n": G.n, "m": G.m, "hits": [], "skipped": [], "violations": []}
    for k in config.k_values():
        a, b = config.interval(k)
        res = check_interval(G, a, b)
        out[{"hit": "hits", "short": "skipped", "violation": "violations"}[res]].append(k)
    if config.cubic:
        # raises on a broken identity
        discharge(G, 5)
    return out, (G if out["violations"] else None)


def run_sweep(config: SweepConfig, jobs: int = 1) -> SweepResult:
    total = config.count + (len(POLYHEDRA) if config.cubic and config.polyhedra else 0)
    work = [(config, i) for i in range(total)]
    if jobs > 1 and total > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            rows = list(pool.map(_one, work, chunksize=max(1, total // (4 * jobs))))
    else:
        rows = [_one(w) for w in work]
    res = SweepResult(config)
    for row, G in rows:
        res.samples += 1
        res.checks += len(row["hits"]) + len(row["violations"])
        for k in row["skipped"]:
            res.skipped.append({"index": row["index"], "name": row["name"], "k": k})
        for k in row["violations"]:
            res.violations.append({"index": row["index"], "name": row["name"], "k": k, "n": row["n"]})
        if G is not None:
            res.graphs.append(G)
    return res
