"""Exit criteria for the package, one test per criterion.

The terminal summary (see conftest.py) prints one PASS/FAIL line per test.
"""

import math
import time
import warnings

import numpy as np
import pytest

from ndes.bench import random_bounded_degree_graph, time_scoring
from ndes.cli import main
from ndes.community import DetectorParams, detect
from ndes.datasets import data_path
from ndes.graph import Graph, Partition
from ndes.metrics import ari, conductance, cut_ratio, evaluate, expansion, modularity, nmi
from ndes.similarity import (
    MeasureId,
    adamic_adar,
    information,
    jaccard,
    ndes,
    rho,
    rho_oracle,
    rho_scores,
    salton,
    score_all_edges,
)

from oracles import ari_pair_count, graph_corpus, modularity_double_sum, nmi_direct, set_partitions

CORPUS = list(graph_corpus(200))
KARATE = str(data_path("karate.edgelist"))
KARATE_TRUTH = str(data_path("karate.truth"))


def test_c1_rho_oracle_equivalence():
    assert len(CORPUS) == 200
    assert max(g.node_count for g in CORPUS) <= 30
    rho_scores(CORPUS[0])  # compile outside the timed region
    t0 = time.perf_counter()
    checked = 0
    for g in CORPUS:
        for x, y in g.edges().tolist():
            assert rho(g, x, y) == rho_oracle(g, x, y), (g, x, y)
            checked += 1
    elapsed = time.perf_counter() - t0
    assert checked > 1000
    assert elapsed < 10.0, f"oracle comparison took {elapsed:.2f}s"


def test_c2_ndes_range_and_saturation():
    for g in CORPUS:
        scores = score_all_edges(g, MeasureId.NDES)
        assert np.all(scores.values >= 0.0) and np.all(scores.values <= 1.0)
        info = information(g, rho_scores(g))
        arc = scores.arc_values(g)
        for x in range(g.node_count):
            if info[x] > 0:
                assert arc[g.indptr[x] : g.indptr[x + 1]].max() == 1.0


def test_c3_asymmetry_witness():
    # K4 on {b, c, d, e} plus a-b and a-c
    g = Graph.from_edges([(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4), (0, 1), (0, 2)])
    r = rho_scores(g)
    info = information(g, r)
    assert rho_oracle(g, 0, 1) == r[0, 1] == 5
    assert info[1] == 16
    assert ndes(g, 0, 1, info, r) == 1.0
    assert ndes(g, 1, 0, info, r) == 0.3125


def test_c4_hand_derived_fixtures():
    tri = Graph.from_edges([(0, 1), (1, 2), (0, 2)])
    k4 = Graph.from_edges([(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])
    assert rho(tri, 0, 1) == 3
    assert rho(k4, 0, 1) == 13
    assert abs(jaccard(tri, 0, 1) - 1 / 3) <= 1e-12
    assert abs(salton(k4, 0, 1) - 2 / 3) <= 1e-12
    assert abs(adamic_adar(tri, 0, 1) - 1 / math.log(2)) <= 1e-12


def test_c5_metric_correctness(karate):
    for n in range(1, 8):
        labels = list(set_partitions(n, 3))
        parts = [Partition.from_labels(a) for a in labels]
        for a, pa in zip(labels, parts):
            for b, pb in zip(labels, parts):
                assert ari(pa, pb) == ari_pair_count(a, b)
                assert abs(nmi(pa, pb) - nmi_direct(a, b)) <= 1e-9

    g, truth = karate
    assert abs(modularity(g, truth) - modularity_double_sum(g, truth.assignment)) <= 1e-9

    one = Partition(np.zeros(g.node_count, dtype=np.int64), 1)
    assert modularity(g, one) == 0.0
    assert conductance(g, one) == 0.0
    assert cut_ratio(g, one) == 0.0
    assert expansion(g, one) == 0.0


def test_c6_two_triangles_end_to_end():
    g = Graph.from_edges([(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (2, 3)])
    p = detect(g, score_all_edges(g, MeasureId.NDES), DetectorParams(threshold=0.9))
    assert p.same_grouping(Partition.from_communities([[0, 1, 2], [3, 4, 5]], 6))
    assert abs(conductance(g, p) - 1 / 7) <= 1e-12
    assert abs(expansion(g, p) - 1 / 3) <= 1e-12
    assert abs(cut_ratio(g, p) - 1 / 9) <= 1e-12


@pytest.mark.parametrize("fmt", ["markdown", "csv", "json"])
def test_c7_compare_is_deterministic(tmp_path, fmt):
    outputs = []
    for i in range(2):
        out = tmp_path / f"compare{i}.{fmt}"
        argv = ["compare", "--graph", KARATE, "--truth", KARATE_TRUTH, "--format", fmt, "--out", str(out)]
        for m in ("NDES", "Jaccard", "Salton", "AdamicAdar"):
            argv += ["--measure", m]
        assert main(argv) == 0
        outputs.append(out.read_bytes())
    assert outputs[0] == outputs[1]
    assert len(outputs[0]) > 0


def test_c8_performance_sanity():
    g = random_bounded_degree_graph(20_000, 50, seed=7)
    assert g.max_degree <= 50
    score_all_edges(Graph.from_edges([(0, 1), (1, 2), (0, 2)]), MeasureId.NDES)  # warm-up
    t0 = time.perf_counter()
    scores = score_all_edges(g, MeasureId.NDES)
    elapsed = time.perf_counter() - t0
    assert len(scores) == 2 * g.edge_count
    assert elapsed < 10.0, f"NDES scoring took {elapsed:.2f}s"

    rows = time_scoring([1000, 4000, 16000], 50, [MeasureId.NDES], seed=0, repeats=3)
    seconds = [r.seconds for r in rows]
    assert seconds == sorted(seconds), seconds


def test_c9_ndes_modularity_direction(karate, capsys):
    g, truth = karate
    results = {}
    for m in (MeasureId.NDES, MeasureId.JACCARD, MeasureId.SALTON, MeasureId.ADAMIC_ADAR):
        p = detect(g, score_all_edges(g, m), DetectorParams(threshold="auto"))
        results[m] = evaluate(g, p, truth, measure=m.value, dataset="karate").modularity
    behind = [m.value for m in results if results[m] > results[MeasureId.NDES]]
    with capsys.disabled():
        line = ", ".join(f"{m.value}={q:.4f}" for m, q in results.items())
        print(f"\n[soft] karate modularity under auto threshold: {line}")
    if behind:
        # soft check: reported, never fails
        warnings.warn(f"NDES modularity below {behind} on karate: {results}")
