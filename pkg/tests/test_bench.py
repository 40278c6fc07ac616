import pytest

from ndes.bench import random_bounded_degree_graph, time_scoring
from ndes.similarity import MeasureId


@pytest.mark.parametrize("n, k", [(50, 3), (1000, 10), (11, 5)])
def test_generator_bounds_degree(n, k):
    g = random_bounded_degree_graph(n, k, seed=3)
    assert g.node_count == n
    assert g.max_degree <= k
    # rejection of loops and repeats loses only a small fraction of stubs
    assert g.degrees.sum() >= 0.8 * n * k


def test_generator_is_seeded():
    assert random_bounded_degree_graph(300, 8, seed=1) == random_bounded_degree_graph(300, 8, seed=1)
    assert random_bounded_degree_graph(300, 8, seed=1) != random_bounded_degree_graph(300, 8, seed=2)


def test_time_scoring_rows():
    rows = time_scoring([100, 200], 5, [MeasureId.NDES], seed=0)
    assert [(r.n, r.k, r.measure) for r in rows] == [(100, 5, MeasureId.NDES), (200, 5, MeasureId.NDES)]
    with pytest.raises(ValueError):
        time_scoring([100], 5, [])
