"""Compare the compiled kernel against the pure-Python fallback.

Usage::

    python benchmarks/bench_backends.py [--sizes 256,1024,4096] [--repeat 3]

Prints one row per (workload, size) with the median wall time of each
backend and the speedup.  Backends that are not built are skipped.
"""

from __future__ import annotations

import argparse
import math
import random
import statistics
import time

from pgcover.cli import generate
from pgcover.kernels import available_backends, get_backend
from pgcover.minmax_decision import feasible
from pgcover.minmax_opt import trivial_lower_bound


def _convex_updates(kernel, n: int, seed: int) -> None:
    rng = random.Random(seed)
    core = kernel.ConvexCore(n)
    live = []
    for _ in range(4 * n):
        if live and rng.random() < 0.4:
            core.delete(live.pop(rng.randrange(len(live))))
        else:
            b = rng.randrange(n)
            slot, _ = core.insert(b, min(n - 1, b + rng.randrange(1, 16)))
            live.append(slot)


def _circle_matching(kernel, n: int, seed: int) -> None:
    rng = random.Random(seed)
    pts = sorted((rng.uniform(0, 2 * math.pi), c) for c in [0] * n + [1] * n)
    # the kernel expects the cut to start at a red point
    k = next(i for i, p in enumerate(pts) if p[1] == 0)
    pts = pts[k:] + pts[:k]
    base = pts[0][0]
    kernel.noncrossing_matching([(a - base) % (2 * math.pi) for a, _ in pts], [c for _, c in pts])


def _decision(backend: str, n: int, seed: int) -> None:
    inst = generate(n, seed, "uniform-disk").to_instance()
    feasible(inst, trivial_lower_bound(inst) + 0.25, backend=backend)


def _time(fn, repeat: int) -> float:
    runs = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        runs.append(time.perf_counter() - t0)
    return statistics.median(runs)


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--sizes", default="256,1024,4096")
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    sizes = [int(s) for s in args.sizes.split(",")]
    backends = available_backends()

    workloads = {
        "convex-updates": lambda b, n: _convex_updates(get_backend(b), n, args.seed),
        # the circle program's table is quadratic in the point count
        "circle-matching": lambda b, n: _circle_matching(get_backend(b), n // 4, args.seed),
        "feasible": lambda b, n: _decision(b, n, args.seed),
    }
    print(f"{'workload':<16} {'n':>6} " + " ".join(f"{b:>10}" for b in backends) + "   speedup")
    for name, work in workloads.items():
        for n in sizes:
            times = {b: _time(lambda: work(b, n), args.repeat) for b in backends}
            cells = " ".join(f"{times[b]:10.4f}" for b in backends)
            speed = times["python"] / times["compiled"] if "compiled" in times else float("nan")
            label = n // 4 if name == "circle-matching" else n
            print(f"{name:<16} {label:>6} {cells}   {speed:6.1f}x")


if __name__ == "__main__":
    main()
