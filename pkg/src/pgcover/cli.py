"""Command-line interface.

Every command prints a single JSON document on stdout; diagnostics go to
stderr.  Exit status: 0 success (``decide``: feasible), 1 infeasible or a
failed verification, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import math
import os
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Any, Sequence

import numpy as np

from pgcover import __version__
from pgcover.geom import Instance, Placement, Sensor, placement_cost

log = logging.getLogger("pgcover")

PROBLEMS = ("minmax-decision", "minmax", "minsum-boundary", "minsum-approx")
DISTRIBUTIONS = ("uniform-disk", "boundary", "clustered")
DISK_TOL = 1e-9


class InputError(Exception):
    """Bad input file or arguments; maps to exit status 2."""


# ---------------------------------------------------------------- file formats


@dataclass(frozen=True)
class InstanceFile:
    n: int
    center: tuple[float, float]
    radius: float
    sensors: tuple[tuple[float, float], ...]

    def __post_init__(self) -> None:
        if self.n < 1 or len(self.sensors) != self.n:
            raise InputError(f"expected n >= 1 sensors matching 'n', got n={self.n}, {len(self.sensors)} sensors")
        if not (self.radius > 0 and math.isfinite(self.radius)):
            raise InputError("radius must be a positive number")
        cx, cy = self.center
        for k, (x, y) in enumerate(self.sensors):
            if math.hypot(x - cx, y - cy) / self.radius > 1.0 + DISK_TOL:
                raise InputError(f"sensor {k} lies outside the disk")

    def to_json(self) -> str:
        doc = {"n": self.n, "center": list(self.center), "radius": self.radius, "sensors": [list(p) for p in self.sensors]}
        return json.dumps(doc) + "\n"

    @classmethod
    def from_json(cls, text: str) -> "InstanceFile":
        try:
            doc = json.loads(text)
            return cls(
                int(doc["n"]),
                (float(doc["center"][0]), float(doc["center"][1])),
                float(doc["radius"]),
                tuple((float(x), float(y)) for x, y in doc["sensors"]),
            )
        except InputError:
            raise
        except (KeyError, TypeError, ValueError, IndexError) as exc:
            raise InputError(f"malformed instance file: {exc}") from exc

    def to_instance(self) -> Instance:
        cx, cy = self.center
        sensors = []
        for x, y in self.sensors:
            dx, dy = (x - cx) / self.radius, (y - cy) / self.radius
            r = math.hypot(dx, dy)
            if r > 1.0:  # within DISK_TOL, checked on construction
                dx, dy = dx / r, dy / r
            sensors.append(Sensor.from_xy(dx, dy))
        return Instance(tuple(sensors), self.center, self.radius)


@dataclass(frozen=True)
class SolutionFile:
    problem: str
    objective: float
    placement_offset: float | None
    assignment: tuple[int, ...] | None
    feasible: bool | None = None
    bounds: dict[str, float] | None = field(default=None)

    def __post_init__(self) -> None:
        if self.problem not in PROBLEMS:
            raise InputError(f"unknown problem {self.problem!r}")
        if self.assignment is not None and sorted(self.assignment) != list(range(len(self.assignment))):
            raise InputError("assignment is not a permutation")

    def to_json(self) -> str:
        doc: dict[str, Any] = {"problem": self.problem, "objective": self.objective}
        if self.feasible is not None:
            doc["feasible"] = self.feasible
        doc["placement_offset"] = self.placement_offset
        doc["assignment"] = None if self.assignment is None else list(self.assignment)
        if self.bounds is not None:
            doc["bounds"] = dict(self.bounds)
        return json.dumps(doc) + "\n"

    @classmethod
    def from_json(cls, text: str) -> "SolutionFile":
        try:
            doc = json.loads(text)
            a = doc.get("assignment")
            return cls(
                doc["problem"],
                float(doc["objective"]),
                None if doc.get("placement_offset") is None else float(doc["placement_offset"]),
                None if a is None else tuple(int(x) for x in a),
                doc.get("feasible"),
                doc.get("bounds"),
            )
        except InputError:
            raise
        except (KeyError, TypeError, ValueError) as exc:
            raise InputError(f"malformed solution file: {exc}") from exc


def recompute_objective(inst_file: InstanceFile, sol: SolutionFile) -> float:
    """Max (min-max problems) or total (min-sum problems) movement in input units."""
    if sol.assignment is None or sol.placement_offset is None:
        raise InputError("solution carries no placement")
    inst = inst_file.to_instance()
    worst, total = placement_cost(inst, Placement(inst.n, sol.placement_offset), sol.assignment)
    return inst.scale * (worst if sol.problem.startswith("minmax") else total)


# ---------------------------------------------------------------- generation


def generate(n: int, seed: int, dist: str, center=(0.0, 0.0), radius: float = 1.0) -> InstanceFile:
    if n < 1:
        raise InputError("n must be at least 1")
    if dist not in DISTRIBUTIONS:
        raise InputError(f"unknown distribution {dist!r}")
    rng = np.random.default_rng(seed)
    if dist == "uniform-disk":
        r = np.sqrt(rng.random(n))
        a = rng.uniform(0.0, 2.0 * math.pi, n)
    elif dist == "boundary":
        r = np.ones(n)
        a = rng.uniform(0.0, 2.0 * math.pi, n)
    else:
        k = max(1, n // 8)
        cr = 0.8 * np.sqrt(rng.random(k))
        ca = rng.uniform(0.0, 2.0 * math.pi, k)
        hubs = np.stack([cr * np.cos(ca), cr * np.sin(ca)], axis=1)
        pts = hubs[rng.integers(0, k, n)] + rng.normal(0.0, 0.1, (n, 2))
        norm = np.hypot(pts[:, 0], pts[:, 1])
        pts[norm > 1.0] /= norm[norm > 1.0, None]
        r, a = np.hypot(pts[:, 0], pts[:, 1]), np.arctan2(pts[:, 1], pts[:, 0])
    xs = center[0] + radius * r * np.cos(a)
    ys = center[1] + radius * r * np.sin(a)
    if dist == "boundary":
        # keep boundary points exactly representable at unit radius
        xs, ys = center[0] + radius * np.cos(a), center[1] + radius * np.sin(a)
    return InstanceFile(n, (float(center[0]), float(center[1])), float(radius),
                        tuple((float(x), float(y)) for x, y in zip(xs, ys)))


# ---------------------------------------------------------------- solving


def solve_decide(inst_file: InstanceFile, lam: float, backend: str | None = None) -> SolutionFile:
    from pgcover.minmax_decision import feasible

    if not lam >= 0:
        raise InputError("lambda must be non-negative")
    inst = inst_file.to_instance()
    w = feasible(inst, lam / inst.scale, backend)
    if not w.feasible:
        return SolutionFile("minmax-decision", lam, None, None, feasible=False)
    return SolutionFile("minmax-decision", w.max_move * inst.scale, w.placement.offset, w.assignment, feasible=True)


def solve_optimize(inst_file: InstanceFile, seed: int = 0, backend: str | None = None) -> SolutionFile:
    from pgcover.minmax_opt import compute_lambda_c

    inst = inst_file.to_instance()
    lam, w = compute_lambda_c(inst, seed=seed, backend=backend)
    return SolutionFile("minmax", lam * inst.scale, w.placement.offset, w.assignment, feasible=True)


def solve_minsum(inst_file: InstanceFile, mode: str) -> SolutionFile:
    from pgcover.minsum import minsum_approx, minsum_boundary, minsum_lower_bound

    inst = inst_file.to_instance()
    if mode == "boundary":
        try:
            sol = minsum_boundary(inst, require_boundary=True)
        except ValueError as exc:
            raise InputError(str(exc)) from exc
        return SolutionFile("minsum-boundary", sol.cost * inst.scale, sol.placement.offset, sol.assignment)
    sol = minsum_approx(inst)
    bounds = {"lower": minsum_lower_bound(inst) * inst.scale, "upper": sol.cost * inst.scale}
    return SolutionFile("minsum-approx", sol.cost * inst.scale, sol.placement.offset, sol.assignment, bounds=bounds)


# ---------------------------------------------------------------- verification


def verify(inst_file: InstanceFile, seed: int = 0, grid: int = 1000, max_brute_n: int = 12) -> dict[str, Any]:
    """Compare the fast solvers against the brute-force references on one instance."""
    from pgcover import oracles
    from pgcover.minmax_decision import feasible
    from pgcover.minmax_opt import compute_lambda_c
    from pgcover.minsum import minsum_approx, minsum_boundary, minsum_lower_bound

    inst = inst_file.to_instance()
    checks: list[dict[str, Any]] = []

    def check(name: str, ok: bool, **info: Any) -> None:
        checks.append({"check": name, "ok": bool(ok), **info})

    lam, w = compute_lambda_c(inst, seed=seed)
    below = lam * (1 - 1e-6) - 1e-12
    check("minmax-bracket", w.feasible and (below < 0 or not feasible(inst, below).feasible), lambda_c=lam)
    check("minmax-witness", abs(w.max_move - lam) <= 1e-9, realized=w.max_move)
    if inst.n <= max_brute_n:
        ref = oracles.brute_lambda_c(inst)
        check("minmax-vs-brute", abs(ref - lam) <= 1e-9, brute=ref)
        for probe in (lam, 0.5 * lam, lam + 0.05, 0.5 * (lam + 2.0)):
            fast, slow = feasible(inst, probe).feasible, oracles.brute_feasible(inst, probe)
            check("decide-vs-brute", fast == slow, lam=probe)
    else:
        log.info("n=%d exceeds %d; brute-force min-max checks skipped", inst.n, max_brute_n)

    on_boundary = all(abs(s.radius - 1.0) <= 1e-9 for s in inst.sensors)
    if on_boundary:
        sol = minsum_boundary(inst)
        ref = min(
            oracles.hungarian_min_weight(
                [[math.dist(s.xy, Placement.canonical(inst.n, a.angle).vertex_xy(j)) for j in range(inst.n)] for s in inst.sensors]
            )[1]
            for a in inst.sensors
        )
        check("minsum-boundary-vs-hungarian", abs(sol.cost - ref) <= 1e-9, cost=sol.cost, hungarian=ref)
    approx = minsum_approx(inst)
    proj = minsum_boundary(inst, require_boundary=False)
    lower = minsum_lower_bound(inst)
    check("minsum-approx-chain", approx.cost <= lower + proj.cost + 1e-9, cost=approx.cost)
    upper = oracles.grid_minsum_upper(inst, grid)
    check("minsum-approx-ratio", approx.cost <= 3.0 * upper + 1e-9, grid_upper=upper)
    return {"n": inst.n, "ok": all(c["ok"] for c in checks), "checks": checks}


# ---------------------------------------------------------------- benchmarking


def _bench_cell(args: tuple[str, int, int, str, str | None]) -> dict[str, Any]:
    problem, n, seed, dist, backend = args
    inst_file = generate(n, seed, "boundary" if problem == "minsum-boundary" else dist)
    t0 = time.perf_counter()
    if problem == "minmax-decision":
        from pgcover.minmax_opt import trivial_lower_bound

        inst = inst_file.to_instance()
        # probe just above the easy lower bound, where the sweep does real work
        sol = solve_decide(inst_file, (trivial_lower_bound(inst) + 0.25) * inst.scale, backend)
    elif problem == "minmax":
        sol = solve_optimize(inst_file, seed, backend)
    elif problem == "minsum-boundary":
        sol = solve_minsum(inst_file, "boundary")
    else:
        sol = solve_minsum(inst_file, "approx")
    wall = time.perf_counter() - t0
    return {"problem": problem, "n": n, "seed": seed, "wall_time": wall, "objective": sol.objective}


def bench(problems: Sequence[str], ns: Sequence[int], seeds: Sequence[int], dist: str,
          backend: str | None, threads: int) -> list[dict[str, Any]]:
    cells = [(p, n, s, dist, backend) for p in problems for n in ns for s in seeds]
    if threads <= 1:
        return [_bench_cell(c) for c in cells]
    with ProcessPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(_bench_cell, cells))


def _thread_cap() -> int:
    raw = os.environ.get("PGCOVER_THREADS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        raise InputError(f"PGCOVER_THREADS must be an integer, got {raw!r}") from None


# ---------------------------------------------------------------- argument parsing


def _int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # argparse's default exit status is already 2
        self.print_usage(sys.stderr)
        self.exit(2, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=argparse.SUPPRESS, help="random seed")
    common.add_argument("--backend", choices=("auto", "compiled", "python"), default=argparse.SUPPRESS,
                        help="matching kernel backend")

    p = _Parser(prog="pgcover", description="Move sensors onto a regular polygon inscribed in a circle.")
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    p.add_argument("--seed", type=int, default=0, help="random seed (default 0)")
    p.add_argument("--backend", choices=("auto", "compiled", "python"), default="auto")
    p.add_argument("-v", "--verbose", action="store_true", help="log progress to stderr")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    g = sub.add_parser("gen", parents=[common], help="generate a random instance")
    g.add_argument("--n", type=int, required=True)
    g.add_argument("--dist", choices=DISTRIBUTIONS, default="uniform-disk")
    g.add_argument("--center", type=float, nargs=2, default=(0.0, 0.0), metavar=("X", "Y"))
    g.add_argument("--radius", type=float, default=1.0)
    g.add_argument("--out", help="write the instance here instead of stdout")

    d = sub.add_parser("decide", parents=[common], help="can every sensor move at most LAMBDA?")
    d.add_argument("instance")
    d.add_argument("--lambda", dest="lam", type=float, required=True)

    o = sub.add_parser("optimize", parents=[common], help="least possible maximum movement")
    o.add_argument("instance")

    m = sub.add_parser("minsum", parents=[common], help="total movement (exact on the boundary, else 3-approx)")
    m.add_argument("instance")
    m.add_argument("--mode", choices=("boundary", "approx"), default="approx")

    v = sub.add_parser("verify", parents=[common], help="check solvers against brute-force references")
    v.add_argument("instance")
    v.add_argument("--grid", type=int, default=1000, help="placements for the min-sum upper bound")

    b = sub.add_parser("bench", parents=[common], help="time solvers; writes CSV")
    b.add_argument("--n-list", dest="ns", type=_int_list, required=True, help="comma-separated sizes")
    b.add_argument("--seeds", type=_int_list, default=[0], help="comma-separated seeds")
    b.add_argument("--problems", default="minmax-decision", help=f"comma-separated subset of {','.join(PROBLEMS)}")
    b.add_argument("--dist", choices=DISTRIBUTIONS, default="uniform-disk")
    b.add_argument("--out-csv", dest="out", required=True, help="CSV output path")
    return p


def _read_instance(path: str) -> InstanceFile:
    try:
        with open(path, encoding="utf-8") as fh:
            return InstanceFile.from_json(fh.read())
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from exc


def _emit(doc: str | dict) -> None:
    sys.stdout.write(doc if isinstance(doc, str) else json.dumps(doc) + "\n")


def run(args: argparse.Namespace) -> int:
    backend = None if args.backend == "auto" else args.backend
    if args.command == "gen":
        text = generate(args.n, args.seed, args.dist, tuple(args.center), args.radius).to_json()
        if args.out:
            with open(args.out, "w", encoding="utf-8") as fh:
                fh.write(text)
        else:
            _emit(text)
        return 0
    if args.command == "decide":
        sol = solve_decide(_read_instance(args.instance), args.lam, backend)
        _emit(sol.to_json())
        return 0 if sol.feasible else 1
    if args.command == "optimize":
        _emit(solve_optimize(_read_instance(args.instance), args.seed, backend).to_json())
        return 0
    if args.command == "minsum":
        _emit(solve_minsum(_read_instance(args.instance), args.mode).to_json())
        return 0
    if args.command == "verify":
        report = verify(_read_instance(args.instance), args.seed, args.grid)
        for c in report["checks"]:
            if not c["ok"]:
                log.warning("check failed: %s", c)
        _emit(report)
        return 0 if report["ok"] else 1
    if args.command == "bench":
        problems = [p for p in args.problems.split(",") if p]
        unknown = set(problems) - set(PROBLEMS)
        if unknown:
            raise InputError(f"unknown problems: {sorted(unknown)}")
        if any(n < 1 for n in args.ns):
            raise InputError("sizes must be positive")
        rows = bench(problems, args.ns, args.seeds, args.dist, backend, _thread_cap())
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=["problem", "n", "seed", "wall_time", "objective"])
        writer.writeheader()
        writer.writerows(rows)
        with open(args.out, "w", encoding="utf-8", newline="") as fh:
            fh.write(buf.getvalue())
        _emit({"rows": len(rows), "out": args.out})
        return 0
    raise AssertionError(args.command)


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(name)s: %(message)s", stream=sys.stderr)
    try:
        return run(args)
    except InputError as exc:
        log.error("%s", exc)
        return 2


if __name__ == "__main__":
    sys.exit(main())
