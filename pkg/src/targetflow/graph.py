"""Directed-graph representation, edge-list ingestion and random generators.

Graphs are structural: unweighted, no duplicate edges, self-loops allowed.
Node ids are dense 0-based integers; file ingestion maps arbitrary integer
labels onto them and reports the mapping.
"""

import random
from bisect import bisect_right
from itertools import accumulate

import numpy as np


class EdgeListError(ValueError):
    """Malformed edge-list input; carries the offending line number."""

    def __init__(self, message: str, line_no: int):
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no


class DiGraph:
    """Immutable directed graph over nodes ``0 .. n-1``.

    ``edges`` keeps construction order (several algorithms use it as a
    deterministic tie-break); equality is structural, i.e. order-blind.
    """

    __slots__ = ("n", "edges", "out_adj", "in_adj")

    def __init__(self, n: int, edges):
        if n < 0:
            raise ValueError("node count must be non-negative")
        edges = tuple((int(t), int(h)) for t, h in edges)
        seen = set()
        out_adj = [[] for _ in range(n)]
        in_adj = [[] for _ in range(n)]
        for t, h in edges:
            if not (0 <= t < n and 0 <= h < n):
                raise ValueError(f"edge ({t}, {h}) out of range for n={n}")
            if (t, h) in seen:
                raise ValueError(f"duplicate edge ({t}, {h})")
            seen.add((t, h))
            out_adj[t].append(h)
            in_adj[h].append(t)
        self.n = n
        self.edges = edges
        self.out_adj = tuple(tuple(v) for v in out_adj)
        self.in_adj = tuple(tuple(v) for v in in_adj)

    def __eq__(self, other):
        if not isinstance(other, DiGraph):
            return NotImplemented
        return self.n == other.n and set(self.edges) == set(other.edges)

    def __hash__(self):
        return hash((self.n, frozenset(self.edges)))

    def __repr__(self):
        return f"DiGraph(n={self.n}, edges={len(self.edges)})"


def parse_edge_list(text) -> tuple[DiGraph, dict[int, int]]:
    """Parse "tail head" integer pairs, one per line.

    Lines starting with ``#`` and blank lines are skipped.  Labels are
    compacted to dense 0-based ids in first-appearance order; duplicate
    edges collapse to one.  Returns the graph and the label -> internal-id
    map.

    Raises:
        EdgeListError: wrong token count or non-integer token.
    """
    if isinstance(text, str):
        lines = text.splitlines()
    else:
        lines = text
    labels: dict[int, int] = {}
    edges = []
    seen = set()
    for line_no, raw in enumerate(lines, start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise EdgeListError(f"expected 2 tokens, got {len(parts)}", line_no)
        try:
            a, b = int(parts[0]), int(parts[1])
        except ValueError:
            raise EdgeListError(f"non-integer token in {parts!r}", line_no) from None
        if a < 0 or b < 0:
            raise EdgeListError("labels must be non-negative", line_no)
        for lab in (a, b):
            if lab not in labels:
                labels[lab] = len(labels)
        e = (labels[a], labels[b])
        if e not in seen:
            seen.add(e)
            edges.append(e)
    return DiGraph(len(labels), edges), labels


def format_edge_list(g: DiGraph, labels: dict[int, int] | None = None) -> str:
    """Serialize a graph in the edge-list file format.

    ``labels`` is an original-label -> internal-id map as returned by
    :func:`parse_edge_list`; without it internal ids are written as labels.
    """
    if labels is None:
        name = {i: i for i in range(g.n)}
    else:
        name = {i: lab for lab, i in labels.items()}
    return "".join(f"{name[t]} {name[h]}\n" for t, h in g.edges)


def from_adjacency(a) -> DiGraph:
    """Graph of an n-by-n 0/1 matrix: edge (j -> i) exists iff ``a[i][j]``
    is nonzero, so row i of the matrix lists the nodes feeding node i."""
    a = np.asarray(a)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"adjacency matrix must be square, got {a.shape}")
    n = a.shape[0]
    rows, cols = np.nonzero(a)
    return DiGraph(n, [(int(j), int(i)) for i, j in zip(rows, cols)])


def to_adjacency(g: DiGraph) -> np.ndarray:
    """Inverse of :func:`from_adjacency`: a[i][j] = 1 iff edge (j -> i)."""
    a = np.zeros((g.n, g.n), dtype=np.int64)
    for t, h in g.edges:
        a[h, t] = 1
    return a


def generate_er(n: int, mu: float, seed: int) -> DiGraph:
    """Uniform random digraph with mean total degree ``mu``.

    Draws ``round(n * mu / 2)`` distinct directed edges uniformly without
    replacement from all ordered pairs excluding self-loops.  Deterministic
    for a fixed seed.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    if mu < 0:
        raise ValueError("mu must be non-negative")
    target = round(n * mu / 2)
    if target > n * (n - 1):
        raise ValueError(f"cannot place {target} distinct edges in a "
                         f"{n}-node loopless digraph")
    rng = random.Random(seed)
    if 2 * target >= n * (n - 1):
        # dense regime: sample directly from the enumerated pair space
        pairs = [(i, j) for i in range(n) for j in range(n) if i != j]
        return DiGraph(n, rng.sample(pairs, target))
    chosen = set()
    edges = []
    while len(edges) < target:
        t = rng.randrange(n)
        h = rng.randrange(n)
        if t != h and (t, h) not in chosen:
            chosen.add((t, h))
            edges.append((t, h))
    return DiGraph(n, edges)


def generate_sf(n: int, mu: float, gamma: float, seed: int) -> DiGraph:
    """Static-model scale-free digraph with tail exponent ``gamma``.

    Node weights follow ``(i + 1) ** (-1 / (gamma - 1))``; each of the
    ``round(n * mu / 2)`` edges picks tail and head independently with
    probability proportional to the weights, rejecting self-loops and
    duplicates.  Deterministic for a fixed seed.

    Raises:
        ValueError: gamma <= 2, n < 2, or the rejection loop exceeding
            ``100 * L`` attempts.
    """
    if n < 2:
        raise ValueError("n must be at least 2")
    if gamma <= 2:
        raise ValueError("gamma must exceed 2")
    if mu < 0:
        raise ValueError("mu must be non-negative")
    target = round(n * mu / 2)
    if target > n * (n - 1):
        raise ValueError(f"cannot place {target} distinct edges in a "
                         f"{n}-node loopless digraph")
    alpha = 1.0 / (gamma - 1.0)
    cum = list(accumulate((i + 1) ** (-alpha) for i in range(n)))
    total = cum[-1]
    rng = random.Random(seed)
    chosen = set()
    edges = []
    budget = 100 * max(target, 1)
    while len(edges) < target:
        if budget <= 0:
            raise RuntimeError(f"edge sampling did not converge within "
                               f"{100 * max(target, 1)} attempts")
        budget -= 1
        t = bisect_right(cum, rng.random() * total)
        h = bisect_right(cum, rng.random() * total)
        if t != h and (t, h) not in chosen:
            chosen.add((t, h))
            edges.append((t, h))
    return DiGraph(n, edges)
