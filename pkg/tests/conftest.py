import random
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from targetflow import DiGraph

DATA = Path(__file__).parent / "data"

# 9-node worked instance: edge list with 1-based labels and its target set.
CANONICAL_EDGES = ((1, 2), (6, 2), (2, 3), (6, 3), (3, 6), (3, 4), (7, 4),
                   (5, 6), (9, 6), (6, 7), (9, 7), (6, 9), (8, 9))
CANONICAL_TARGETS = (2, 3, 7, 9)


@pytest.fixture
def canonical():
    """Canonical instance with internal ids equal to label - 1."""
    g = DiGraph(9, [(t - 1, h - 1) for t, h in CANONICAL_EDGES])
    return g, [v - 1 for v in CANONICAL_TARGETS]


def random_graph(rng: random.Random, max_n: int, max_edges: int,
                 self_loops: bool = True) -> DiGraph:
    n = rng.randint(1, max_n)
    edges = set()
    for _ in range(rng.randint(0, max_edges)):
        a, b = rng.randrange(n), rng.randrange(n)
        if a == b and not self_loops:
            continue
        edges.add((a, b))
    return DiGraph(n, sorted(edges))


def random_targets(rng: random.Random, n: int) -> list[int]:
    size = rng.randint(1, n)
    return sorted(rng.sample(range(n), size))
