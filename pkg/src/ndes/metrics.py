"""Partition accuracy (NMI, ARI, NF1) and quality (modularity, conductance,
cut ratio, expansion) metrics.

Conventions:

* NMI uses natural-log entropies normalized by their arithmetic mean.  If
  either side has zero entropy the score is 1 for identical groupings and 0
  otherwise.
* NF1 averages, over detected communities, the best F1 against any truth
  community, then multiplies by ``min(1, n_detected / n_truth)``.
* Conductance is a volume-weighted mean over communities; cut ratio and
  expansion are plain means.
"""

from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import asdict, dataclass, field
from typing import Sequence

import numpy as np

from .graph import Graph, Partition

NF1_VARIANT = "mean best-match F1 over detected communities x min(1, |detected|/|truth|)"
AGGREGATION = "conductance: volume-weighted mean; cut_ratio, expansion: unweighted mean"


def _check_same_nodes(a: Partition, b: Partition) -> None:
    if a.node_count != b.node_count:
        raise ValueError(f"partitions cover different node sets ({a.node_count} vs {b.node_count} nodes)")


def contingency(a: Partition, b: Partition) -> np.ndarray:
    _check_same_nodes(a, b)
    flat = a.assignment * b.community_count + b.assignment
    counts = np.bincount(flat, minlength=a.community_count * b.community_count)
    return counts.reshape(a.community_count, b.community_count)


def _entropy(sizes: np.ndarray, n: int) -> float:
    return sum((s / n) * math.log(n / s) for s in sizes.tolist() if s)


def nmi(a: Partition, b: Partition) -> float:
    _check_same_nodes(a, b)
    if a.node_count == 0 or a.same_grouping(b):
        return 1.0
    n = a.node_count
    table = contingency(a, b)
    rows = table.sum(axis=1)
    cols = table.sum(axis=0)
    ha = _entropy(rows, n)
    hb = _entropy(cols, n)
    if ha == 0.0 or hb == 0.0:
        return 0.0
    mi = 0.0
    for i, j in zip(*np.nonzero(table)):
        nij = int(table[i, j])
        mi += (nij / n) * math.log((n * nij) / (int(rows[i]) * int(cols[j])))
    return min(1.0, max(0.0, mi / ((ha + hb) / 2)))


def _comb2(v) -> int:
    return sum(int(x) * (int(x) - 1) // 2 for x in np.asarray(v).ravel().tolist())


def ari(a: Partition, b: Partition) -> float:
    """Adjusted Rand index, evaluated as a single ratio of exact integers."""
    table = contingency(a, b)
    pairs = a.node_count * (a.node_count - 1) // 2
    index = _comb2(table)
    sa = _comb2(table.sum(axis=1))
    sb = _comb2(table.sum(axis=0))
    num = 2 * (pairs * index - sa * sb)
    den = pairs * (sa + sb) - 2 * sa * sb
    if den == 0:
        # only reachable when both partitions are all-singletons or all-one
        return 1.0 if a.same_grouping(b) else 0.0
    return num / den


def nf1(detected: Partition, truth: Partition) -> float:
    table = contingency(detected, truth)
    dsize = table.sum(axis=1)
    tsize = table.sum(axis=0)
    best = []
    for i in range(detected.community_count):
        overlap = table[i]
        # F1 = 2|D&T| / (|D| + |T|)
        f1 = 2.0 * overlap / (dsize[i] + tsize)
        best.append(f1.max() if len(f1) else 0.0)
    if not best:
        return 1.0
    coverage = min(1.0, detected.community_count / truth.community_count)
    return float(np.mean(best)) * coverage


# ---------------------------------------------------------------- quality


@dataclass(frozen=True)
class CommunityStats:
    size: np.ndarray
    internal_edges: np.ndarray
    volume: np.ndarray
    cut: np.ndarray


def community_stats(g: Graph, p: Partition) -> CommunityStats:
    if p.node_count != g.node_count:
        raise ValueError("partition does not cover the graph")
    k = p.community_count
    arcs = g.arcs()
    ca = p.assignment[arcs[:, 0]]
    cb = p.assignment[arcs[:, 1]]
    internal = np.bincount(ca[ca == cb], minlength=k) // 2
    volume = np.bincount(p.assignment, weights=g.degrees, minlength=k).astype(np.int64)
    return CommunityStats(p.sizes, internal, volume, volume - 2 * internal)


def modularity(g: Graph, p: Partition) -> float:
    m = g.edge_count
    if m == 0:
        raise ValueError("modularity is undefined for a graph without edges")
    s = community_stats(g, p)
    return float(sum(e / m - (d / (2 * m)) ** 2 for e, d in zip(s.internal_edges.tolist(), s.volume.tolist())))


def conductance_per_community(g: Graph, p: Partition) -> np.ndarray:
    s = community_stats(g, p)
    total = 2 * g.edge_count
    denom = np.minimum(s.volume, total - s.volume)
    return np.divide(s.cut, denom, out=np.zeros(len(denom)), where=denom > 0)


def conductance(g: Graph, p: Partition) -> float:
    s = community_stats(g, p)
    phi = conductance_per_community(g, p)
    if s.volume.sum() == 0:
        return 0.0
    return float(np.dot(phi, s.volume) / s.volume.sum())


def cut_ratio_per_community(g: Graph, p: Partition) -> np.ndarray:
    s = community_stats(g, p)
    pairs = s.size * (g.node_count - s.size)
    return np.divide(s.cut, pairs, out=np.zeros(len(pairs)), where=pairs > 0)


def cut_ratio(g: Graph, p: Partition) -> float:
    return float(np.mean(cut_ratio_per_community(g, p)))


def expansion_per_community(g: Graph, p: Partition) -> np.ndarray:
    s = community_stats(g, p)
    return s.cut / s.size


def expansion(g: Graph, p: Partition) -> float:
    return float(np.mean(expansion_per_community(g, p)))


# ---------------------------------------------------------------- reports

REPORT_FIELDS = (
    "measure",
    "dataset",
    "communities",
    "threshold",
    "nmi",
    "ari",
    "nf1",
    "modularity",
    "conductance",
    "cut_ratio",
    "expansion",
)


@dataclass
class EvalReport:
    measure: str
    dataset: str
    modularity: float
    conductance: float
    cut_ratio: float
    expansion: float
    nmi: float | None = None
    ari: float | None = None
    nf1: float | None = None
    communities: int | None = None
    threshold: float | None = None
    metadata: dict = field(default_factory=dict)

    def __post_init__(self):
        for name in ("modularity", "conductance", "cut_ratio", "expansion", "nmi", "ari", "nf1"):
            v = getattr(self, name)
            if v is not None and not math.isfinite(v):
                raise ValueError(f"{name} is not finite: {v}")

    def to_dict(self) -> dict:
        return asdict(self)

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True)

    def csv_row(self) -> list:
        return [_cell(getattr(self, f)) for f in REPORT_FIELDS]


def _cell(v):
    if v is None:
        return ""
    return repr(v) if isinstance(v, float) else str(v)


def evaluate(
    g: Graph,
    detected: Partition,
    truth: Partition | None = None,
    measure: str = "",
    dataset: str = "",
    threshold: float | None = None,
    per_community: bool = False,
) -> EvalReport:
    report = EvalReport(
        measure=str(measure),
        dataset=dataset,
        modularity=modularity(g, detected) if g.edge_count else 0.0,
        conductance=conductance(g, detected),
        cut_ratio=cut_ratio(g, detected),
        expansion=expansion(g, detected),
        communities=detected.community_count,
        threshold=threshold,
        metadata={"nf1_variant": NF1_VARIANT, "aggregation": AGGREGATION},
    )
    if per_community:
        report.metadata["per_community"] = {
            "size": detected.sizes.tolist(),
            "conductance": conductance_per_community(g, detected).tolist(),
            "cut_ratio": cut_ratio_per_community(g, detected).tolist(),
            "expansion": expansion_per_community(g, detected).tolist(),
        }
    if truth is not None:
        report.nmi = nmi(detected, truth)
        report.ari = ari(detected, truth)
        report.nf1 = nf1(detected, truth)
    return report


def reports_to_csv(reports: Sequence[EvalReport]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(REPORT_FIELDS)
    for r in reports:
        w.writerow(r.csv_row())
    return buf.getvalue()


def reports_to_json(reports: Sequence[EvalReport]) -> str:
    return json.dumps([r.to_dict() for r in reports], indent=2, sort_keys=True)


def render_markdown(reports: Sequence[EvalReport], digits: int = 4) -> str:
    """One markdown table per dataset, one row per measure."""
    out = []
    cols = ("nmi", "ari", "nf1", "modularity", "conductance", "cut_ratio", "expansion")
    by_dataset: dict[str, list[EvalReport]] = {}
    for r in reports:
        by_dataset.setdefault(r.dataset, []).append(r)
    for dataset, rows in by_dataset.items():
        out.append(f"### {dataset}\n")
        out.append("| measure | communities | " + " | ".join(cols) + " |")
        out.append("|---|---:|" + "---:|" * len(cols))
        for r in rows:
            cells = [("-" if getattr(r, c) is None else f"{getattr(r, c):.{digits}f}") for c in cols]
            out.append(f"| {r.measure} | {r.communities} | " + " | ".join(cells) + " |")
        out.append("")
    return "\n".join(out)
