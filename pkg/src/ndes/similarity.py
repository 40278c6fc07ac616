"""Local edge similarity measures.

The asymmetric neighborhood-density measure (NDES) is built in three steps:

1. ``rho(x, y)``: an integer density count for every edge,
2. ``I(x)``: the largest density over the edges incident to ``x``,
3. ``ndes(x, y) = rho(x, y) / I(x)``, which depends on direction.

The symmetric baselines (common neighbors, Jaccard, Salton/cosine,
Adamic-Adar, resource allocation, preferential attachment) share the same
edge-scoring interface.
"""

from __future__ import annotations

import csv
import enum
import io
import json
import math
from dataclasses import dataclass
from typing import Iterator

import numpy as np

from . import _kernels
from .graph import Graph


class NotAnEdgeError(ValueError):
    pass


class ScoreMismatchError(ValueError):
    """Edge scores do not line up with the graph they are used with."""


class MeasureId(str, enum.Enum):
    NDES = "NDES"
    COMMON_NEIGHBORS = "CommonNeighbors"
    JACCARD = "Jaccard"
    SALTON = "Salton"
    ADAMIC_ADAR = "AdamicAdar"
    RESOURCE_ALLOCATION = "ResourceAllocation"
    PREFERENTIAL_ATTACHMENT = "PreferentialAttachment"

    @property
    def asymmetric(self) -> bool:
        return self is MeasureId.NDES

    @property
    def normalized(self) -> bool:
        return self in (MeasureId.NDES, MeasureId.JACCARD, MeasureId.SALTON)

    @classmethod
    def parse(cls, name: str) -> "MeasureId":
        key = name.replace("-", "").replace("_", "").lower()
        for m in cls:
            if m.value.lower() == key:
                return m
        try:
            return _ALIASES[key]
        except KeyError:
            choices = ", ".join(m.value for m in cls)
            raise ValueError(f"unknown measure {name!r} (choose from {choices})") from None

    def __str__(self) -> str:
        return self.value


_ALIASES = {
    "cn": MeasureId.COMMON_NEIGHBORS,
    "jc": MeasureId.JACCARD,
    "cosine": MeasureId.SALTON,
    "aa": MeasureId.ADAMIC_ADAR,
    "ra": MeasureId.RESOURCE_ALLOCATION,
    "pa": MeasureId.PREFERENTIAL_ATTACHMENT,
}


@dataclass(frozen=True, eq=False)
class EdgeScores:
    """Scores keyed by node pair.

    ``pairs`` is an (N, 2) array of internal node indices.  Symmetric scores
    store each undirected edge once as ``x < y``; directed scores store both
    orientations.  ``measure`` is None for raw (integer) neighborhood
    densities.
    """

    measure: MeasureId | None
    pairs: np.ndarray
    values: np.ndarray
    directed: bool

    def __post_init__(self):
        pairs = np.asarray(self.pairs, dtype=np.int64).reshape(-1, 2)
        values = np.asarray(self.values)
        if len(pairs) != len(values):
            raise ValueError("pairs and values differ in length")
        if not self.directed and np.any(pairs[:, 0] >= pairs[:, 1]):
            raise ValueError("undirected scores must be keyed by x < y")
        pairs.flags.writeable = False
        values.flags.writeable = False
        object.__setattr__(self, "pairs", pairs)
        object.__setattr__(self, "values", values)
        object.__setattr__(self, "_lookup", None)

    def __len__(self) -> int:
        return len(self.values)

    def _key(self, x: int, y: int) -> tuple[int, int]:
        x, y = int(x), int(y)
        if not self.directed and x > y:
            x, y = y, x
        return x, y

    def __getitem__(self, pair: tuple[int, int]):
        lookup = self._lookup
        if lookup is None:
            lookup = {(int(a), int(b)): i for i, (a, b) in enumerate(self.pairs.tolist())}
            object.__setattr__(self, "_lookup", lookup)
        try:
            return self.values[lookup[self._key(*pair)]].item()
        except KeyError:
            raise KeyError(pair) from None

    def __contains__(self, pair) -> bool:
        try:
            self[pair]
        except KeyError:
            return False
        return True

    def items(self) -> Iterator[tuple[tuple[int, int], float]]:
        for (x, y), v in zip(self.pairs.tolist(), self.values.tolist()):
            yield (x, y), v

    def as_dict(self) -> dict[tuple[int, int], float]:
        return dict(self.items())

    def scaled(self, factor: float) -> "EdgeScores":
        return EdgeScores(self.measure, self.pairs, self.values * factor, self.directed)

    def arc_values(self, g: Graph) -> np.ndarray:
        """Scores aligned with ``g.indices`` (one entry per directed CSR slot).

        Raises ScoreMismatchError unless the scores cover exactly the edges of ``g``.
        """
        if self.directed:
            expected = 2 * g.edge_count
            pairs = self.pairs
            values = self.values
        else:
            expected = g.edge_count
            pairs = np.concatenate([self.pairs, self.pairs[:, ::-1]])
            values = np.concatenate([self.values, self.values])
        if len(self.pairs) != expected:
            raise ScoreMismatchError(f"expected {expected} scores for this graph, got {len(self.pairs)}")
        if len(pairs) and (pairs.min() < 0 or pairs.max() >= g.node_count):
            raise ScoreMismatchError("scores reference nodes outside the graph")
        pos = _kernels.arc_positions(g.indptr, g.indices, pairs[:, 0].copy(), pairs[:, 1].copy())
        if np.any(pos < 0):
            bad = pairs[np.flatnonzero(pos < 0)[0]]
            raise ScoreMismatchError(f"score for non-edge ({bad[0]}, {bad[1]})")
        out = np.empty(len(g.indices), dtype=values.dtype)
        filled = np.zeros(len(g.indices), dtype=bool)
        out[pos] = values
        filled[pos] = True
        if not filled.all():
            raise ScoreMismatchError("duplicate score pairs leave some edges unscored")
        return out

    def to_csv(self, g: Graph | None = None) -> str:
        """``src,dst,score`` rows; node labels are used when ``g`` is given."""
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["src", "dst", "score"])
        for (x, y), v in self.items():
            w.writerow([_name(g, x), _name(g, y), _fmt(v)])
        return buf.getvalue()

    def to_json(self, g: Graph | None = None) -> str:
        doc = {
            "measure": self.measure.value if self.measure else "rho",
            "directed": self.directed,
            "scores": [{"src": _name(g, x), "dst": _name(g, y), "score": v} for (x, y), v in self.items()],
        }
        return json.dumps(doc, indent=2)


def _name(g: Graph | None, x: int):
    return g.label_of(x) if g is not None else x


def _fmt(v) -> str:
    return repr(v) if isinstance(v, float) else str(v)


@dataclass(frozen=True, eq=False)
class NodeInfo:
    """Per-node information value: the maximum density over incident edges (0 if none)."""

    info: np.ndarray

    def __getitem__(self, x: int):
        return self.info[x].item()

    def __len__(self) -> int:
        return len(self.info)


# -------------------------------------------------------------- density / NDES


def _require_edge(g: Graph, x: int, y: int) -> tuple[int, int]:
    if not g.has_edge(x, y):
        raise NotAnEdgeError(f"({x}, {y}) is not an edge")
    return int(x), int(y)


def rho(g: Graph, x: int, y: int) -> int:
    """Neighborhood density of edge (x, y).

    With no common neighbor the density is 1 if either endpoint has degree 1
    and 0 otherwise.  Otherwise it is the sum of

    * the number of common neighbors ``C = N(x) & N(y)``,
    * ``sum |N(x) & N(z)|`` and ``sum |N(y) & N(z)|`` over ``z in C``,
    * the number of edges inside ``C``,
    * ``sum |N(w) & N(z)|`` over those edges ``{w, z}``.
    """
    x, y = _require_edge(g, x, y)
    buf = np.empty(min(g.degree(x), g.degree(y)), dtype=np.int64)
    return int(_kernels.rho_edge(g.indptr, g.indices, x, y, buf))


def rho_terms(g: Graph, x: int, y: int) -> tuple[int, int, int, int, int]:
    """The five density terms of edge (x, y) before the no-common-neighbor rule."""
    x, y = _require_edge(g, x, y)
    buf = np.empty(min(g.degree(x), g.degree(y)), dtype=np.int64)
    return tuple(int(t) for t in _kernels.rho_terms(g.indptr, g.indices, x, y, buf))


def rho_oracle(g: Graph, x: int, y: int) -> int:
    """Brute-force density built from plain Python sets; test reference only."""
    n = g.node_count
    adj = [set() for _ in range(n)]
    for a in range(n):
        for b in g.indices[g.indptr[a] : g.indptr[a + 1]].tolist():
            adj[a].add(b)
    if y not in adj[x]:
        raise NotAnEdgeError(f"({x}, {y}) is not an edge")

    common = [z for z in range(n) if z in adj[x] and z in adj[y]]
    if not common:
        return 1 if len(adj[x]) == 1 or len(adj[y]) == 1 else 0

    def shared(a, b):
        return sum(1 for v in range(n) if v in adj[a] and v in adj[b])

    total = len(common)
    for z in common:
        total += shared(x, z)
    for z in common:
        total += shared(y, z)
    for w in common:
        for z in common:
            if w < z and z in adj[w]:
                total += 1 + shared(w, z)
    return total


def rho_scores(g: Graph) -> EdgeScores:
    """Exact integer density for every undirected edge."""
    edges = g.edges()
    values = _kernels.rho_edges(g.indptr, g.indices, edges[:, 0].copy(), edges[:, 1].copy())
    return EdgeScores(None, edges, values, directed=False)


def information(g: Graph, precomputed_rho: EdgeScores) -> NodeInfo:
    try:
        arc = precomputed_rho.arc_values(g)
    except ScoreMismatchError as exc:
        raise ValueError(f"density scores inconsistent with graph: {exc}") from exc
    info = np.zeros(g.node_count, dtype=arc.dtype)
    deg = g.degrees
    nonempty = deg > 0
    if len(arc):
        info[nonempty] = np.maximum.reduceat(arc, g.indptr[:-1][nonempty])
    return NodeInfo(info)


def ndes(g: Graph, x: int, y: int, info: NodeInfo, precomputed_rho: EdgeScores) -> float:
    """Directed score rho(x, y) / I(x); 0 when the density is 0."""
    x, y = _require_edge(g, x, y)
    r = precomputed_rho[x, y]
    if r == 0:
        return 0.0
    return float(r / info[x])


def ndes_from_rho(g: Graph, precomputed_rho: EdgeScores, info: NodeInfo | None = None) -> EdgeScores:
    """Directed NDES scores for every arc, reusing precomputed densities."""
    arc = precomputed_rho.arc_values(g)
    if info is None:
        info = information(g, precomputed_rho)
    src = np.repeat(np.arange(g.node_count), g.degrees)
    denom = info.info[src]
    values = np.zeros(len(arc), dtype=np.float64)
    nz = arc != 0
    values[nz] = arc[nz] / denom[nz]
    return EdgeScores(MeasureId.NDES, g.arcs(), values, directed=True)


# ------------------------------------------------------------------ baselines


def _pair(g: Graph, x: int, y: int) -> tuple[np.ndarray, np.ndarray]:
    g.degree(x), g.degree(y)  # range check
    return np.array([x], dtype=np.int64), np.array([y], dtype=np.int64)


def common_neighbors_count(g: Graph, x: int, y: int) -> int:
    return int(_kernels.common_counts(g.indptr, g.indices, *_pair(g, x, y))[0])


def adamic_adar(g: Graph, x: int, y: int) -> float:
    """Sum of 1/ln(deg z) over common neighbors z."""
    return float(_kernels.degree_weighted_sums(g.indptr, g.indices, *_pair(g, x, y), True)[0])


def resource_allocation(g: Graph, x: int, y: int) -> float:
    return float(_kernels.degree_weighted_sums(g.indptr, g.indices, *_pair(g, x, y), False)[0])


def salton(g: Graph, x: int, y: int) -> float:
    """Cosine similarity of neighbor sets; 0 when either node is isolated."""
    dd = g.degree(x) * g.degree(y)
    if dd == 0:
        return 0.0
    return common_neighbors_count(g, x, y) / math.sqrt(dd)


def jaccard(g: Graph, x: int, y: int) -> float:
    c = common_neighbors_count(g, x, y)
    union = g.degree(x) + g.degree(y) - c
    return c / union if union else 0.0


def preferential_attachment(g: Graph, x: int, y: int) -> float:
    return float(g.degree(x) * g.degree(y))


SCALAR_MEASURES = {
    MeasureId.COMMON_NEIGHBORS: common_neighbors_count,
    MeasureId.JACCARD: jaccard,
    MeasureId.SALTON: salton,
    MeasureId.ADAMIC_ADAR: adamic_adar,
    MeasureId.RESOURCE_ALLOCATION: resource_allocation,
    MeasureId.PREFERENTIAL_ATTACHMENT: preferential_attachment,
}


def _symmetric_values(g: Graph, m: MeasureId, src: np.ndarray, dst: np.ndarray) -> np.ndarray:
    if m is MeasureId.ADAMIC_ADAR:
        return _kernels.degree_weighted_sums(g.indptr, g.indices, src, dst, True)
    if m is MeasureId.RESOURCE_ALLOCATION:
        return _kernels.degree_weighted_sums(g.indptr, g.indices, src, dst, False)
    deg = g.degrees
    dx = deg[src]
    dy = deg[dst]
    if m is MeasureId.PREFERENTIAL_ATTACHMENT:
        return (dx * dy).astype(np.float64)
    c = _kernels.common_counts(g.indptr, g.indices, src, dst)
    if m is MeasureId.COMMON_NEIGHBORS:
        return c.astype(np.float64)
    if m is MeasureId.JACCARD:
        union = dx + dy - c
        return np.divide(c, union, out=np.zeros(len(c)), where=union > 0)
    if m is MeasureId.SALTON:
        # sqrt of an exact integer product keeps batch and scalar paths identical
        root = np.sqrt((dx * dy).astype(np.float64))
        return np.divide(c, root, out=np.zeros(len(c)), where=root > 0)
    raise ValueError(f"not a symmetric measure: {m}")


def score_all_edges(g: Graph, m: MeasureId | str) -> EdgeScores:
    """Score every edge of ``g`` under measure ``m``.

    Symmetric measures give one score per undirected edge; NDES gives both
    orientations.  Densities are computed once per edge and shared by both
    NDES directions.
    """
    m = m if isinstance(m, MeasureId) else MeasureId.parse(m)
    if m is MeasureId.NDES:
        return ndes_from_rho(g, rho_scores(g))
    edges = g.edges()
    values = _symmetric_values(g, m, edges[:, 0].copy(), edges[:, 1].copy())
    return EdgeScores(m, edges, values, directed=False)
