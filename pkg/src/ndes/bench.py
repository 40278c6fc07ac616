"""Synthetic bounded-degree graphs and wall-clock timing of edge scoring."""

from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .graph import Graph
from .similarity import MeasureId, score_all_edges


def random_bounded_degree_graph(n: int, k: int, seed: int = 0) -> Graph:
    """Seeded pairing (configuration) model with ``k`` stubs per node.

    Self-loops and repeated pairs are rejected, so every degree is at most ``k``.
    """
    if n < 0 or k < 0:
        raise ValueError("n and k must be non-negative")
    rng = np.random.default_rng(seed)
    stubs = np.repeat(np.arange(n, dtype=np.int64), k)
    rng.shuffle(stubs)
    if len(stubs) % 2:
        stubs = stubs[:-1]
    pairs = stubs.reshape(-1, 2)
    return Graph.from_edges(pairs, node_count=n)


@dataclass(frozen=True)
class Timing:
    n: int
    k: int
    measure: MeasureId
    seconds: float
    edges: int


def _warm_up(measures: Iterable[MeasureId]) -> None:
    # compile the kernels outside the timed region
    g = Graph.from_edges([(0, 1), (1, 2), (0, 2), (2, 3)])
    for m in measures:
        score_all_edges(g, m)


def time_scoring(
    sizes: Sequence[int],
    max_degree: int,
    measures: Sequence[MeasureId],
    seed: int = 0,
    repeats: int = 1,
) -> list[Timing]:
    """Best-of-``repeats`` wall time of ``score_all_edges`` over a size ladder."""
    if not measures:
        raise ValueError("at least one measure is required")
    _warm_up(measures)
    rows = []
    for n in sizes:
        g = random_bounded_degree_graph(n, max_degree, seed)
        for m in measures:
            best = float("inf")
            for _ in range(max(1, repeats)):
                t0 = time.perf_counter()
                score_all_edges(g, m)
                best = min(best, time.perf_counter() - t0)
            rows.append(Timing(n, max_degree, m, best, g.edge_count))
    return rows
