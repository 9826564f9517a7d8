from __future__ import annotations

import math
import random

import pytest

from pgcover.geom import Instance

# filled by test_acceptance; printed once at the end of the run
ACCEPTANCE_LINES: dict[int, str] = {}


def random_instance(rng: random.Random, n: int, *, boundary: bool = False, clustered: bool = False) -> Instance:
    """Uniform points in the disk, on the circle, or bunched around a few hubs."""
    pairs = []
    if clustered:
        hubs = [(rng.uniform(0.0, 0.9), rng.uniform(0, 2 * math.pi)) for _ in range(rng.randint(1, 3))]
        for _ in range(n):
            r0, a0 = rng.choice(hubs)
            r = 1.0 if boundary else min(1.0, max(0.0, r0 + rng.gauss(0, 0.05)))
            pairs.append((r, a0 + rng.gauss(0, 0.1)))
    else:
        for _ in range(n):
            r = 1.0 if boundary else math.sqrt(rng.random())
            pairs.append((r, rng.uniform(0, 2 * math.pi)))
    return Instance.from_polar(pairs)


def regular_instance(n: int, offset: float = 0.0) -> Instance:
    return Instance.from_polar([(1.0, offset - 2 * math.pi * j / n) for j in range(n)])


@pytest.fixture
def rng() -> random.Random:
    return random.Random(12345)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for k in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(ACCEPTANCE_LINES[k])


def random_circular_intervals(rng: random.Random, n2: int, count: int) -> list[tuple[int, int]]:
    """Arcs with random start and length; about a third wrap."""
    out = []
    for _ in range(count):
        b = rng.randrange(n2)
        length = rng.randint(1, max(1, min(n2, rng.choice([2, 4, n2]))))
        out.append((b, (b + length - 1) % n2))
    return out


def assert_valid_matching(graph, matching) -> None:
    """Every pair is an edge and no right vertex is used twice."""
    by_id = {v.id: v for v in graph.vertices}
    used = set()
    for vid, pos in matching.pairs.items():
        assert pos in graph.neighbors(by_id[vid])
        assert pos not in used
        used.add(pos)
