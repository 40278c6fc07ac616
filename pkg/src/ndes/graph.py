"""Immutable simple-graph representation and edge-list / ground-truth ingestion.

The graph is stored in compressed sparse row form: ``indptr`` and ``indices``
are int64 arrays, and the neighbors of node ``x`` are
``indices[indptr[x]:indptr[x + 1]]`` in strictly ascending order.  External
node labels are arbitrary strings mapped to dense indices in order of first
appearance.
"""

from __future__ import annotations

import io
import logging
import os
from dataclasses import dataclass
from typing import IO, Iterable, Sequence, Union

import numpy as np

from ._kernels import intersect_sorted

logger = logging.getLogger(__name__)

Source = Union[str, "os.PathLike[str]", IO[bytes], IO[str]]

COMMENT_PREFIXES = ("#", "%")


class GraphFormatError(ValueError):
    """Malformed edge-list or ground-truth input."""

    def __init__(self, message: str, lineno: int | None = None):
        self.lineno = lineno
        if lineno is not None:
            message = f"line {lineno}: {message}"
        super().__init__(message)


class EmptyGraphError(ValueError):
    pass


class Graph:
    """Undirected simple graph with sorted CSR adjacency.

    Instances are immutable: the backing arrays are flagged read-only, so a
    graph can be shared freely between threads.
    """

    __slots__ = ("_indptr", "_indices", "_labels", "_index")

    def __init__(self, indptr, indices, labels: Sequence[str] | None = None):
        indptr = np.array(indptr, dtype=np.int64)
        indices = np.array(indices, dtype=np.int64)
        n = len(indptr) - 1
        if n < 0 or indptr[0] != 0 or indptr[-1] != len(indices):
            raise ValueError("inconsistent CSR arrays")
        if labels is None:
            labels = [str(i) for i in range(n)]
        labels = tuple(str(lab) for lab in labels)
        if len(labels) != n:
            raise ValueError(f"expected {n} labels, got {len(labels)}")
        index = {lab: i for i, lab in enumerate(labels)}
        if len(index) != n:
            raise ValueError("node labels must be unique")
        indptr.flags.writeable = False
        indices.flags.writeable = False
        self._indptr = indptr
        self._indices = indices
        self._labels = labels
        self._index = index
        self._check()

    def _check(self) -> None:
        n = self.node_count
        deg = np.diff(self._indptr)
        if np.any(deg < 0):
            raise ValueError("indptr must be non-decreasing")
        if len(self._indices) == 0:
            return
        if self._indices.min() < 0 or self._indices.max() >= n:
            raise ValueError("neighbor index out of range")
        rows = np.repeat(np.arange(n, dtype=np.int64), deg)
        if np.any(rows == self._indices):
            raise ValueError("self-loops are not allowed")
        # strictly ascending within each row
        step = np.diff(self._indices)
        same_row = rows[1:] == rows[:-1]
        if np.any(step[same_row] <= 0):
            raise ValueError("adjacency lists must be strictly ascending")
        # symmetric: the sorted reversed arc list equals the arc list
        rev = np.lexsort((rows, self._indices))
        if not (np.array_equal(self._indices[rev], rows) and np.array_equal(rows[rev], self._indices)):
            raise ValueError("adjacency is not symmetric")

    @classmethod
    def from_edges(
        cls,
        edges: Iterable[tuple[int, int]],
        node_count: int | None = None,
        labels: Sequence[str] | None = None,
    ) -> "Graph":
        """Build a graph from integer node pairs.

        Duplicates (in either orientation) collapse; self-loops are dropped.
        ``node_count`` may exceed the largest index to create isolated nodes.
        """
        arr = np.asarray(list(edges), dtype=np.int64).reshape(-1, 2)
        if node_count is None:
            node_count = int(arr.max()) + 1 if len(arr) else 0
        if len(arr) and (arr.min() < 0 or arr.max() >= node_count):
            raise ValueError("edge endpoint out of range")
        arr = arr[arr[:, 0] != arr[:, 1]]
        both = np.concatenate([arr, arr[:, ::-1]])
        if len(both):
            both = np.unique(both, axis=0)
        counts = np.bincount(both[:, 0], minlength=node_count) if len(both) else np.zeros(node_count, np.int64)
        indptr = np.zeros(node_count + 1, dtype=np.int64)
        np.cumsum(counts, out=indptr[1:])
        return cls(indptr, both[:, 1] if len(both) else np.empty(0, np.int64), labels)

    @property
    def indptr(self) -> np.ndarray:
        return self._indptr

    @property
    def indices(self) -> np.ndarray:
        return self._indices

    @property
    def labels(self) -> tuple[str, ...]:
        return self._labels

    @property
    def node_count(self) -> int:
        return len(self._indptr) - 1

    @property
    def edge_count(self) -> int:
        return len(self._indices) // 2

    @property
    def degrees(self) -> np.ndarray:
        return np.diff(self._indptr)

    @property
    def max_degree(self) -> int:
        return int(self.degrees.max()) if self.node_count else 0

    def index_of(self, label: str) -> int:
        return self._index[str(label)]

    def label_of(self, x: int) -> str:
        return self._labels[x]

    def _validate(self, x: int) -> int:
        if not 0 <= x < self.node_count:
            raise IndexError(f"node {x} out of range for graph with {self.node_count} nodes")
        return int(x)

    def degree(self, x: int) -> int:
        x = self._validate(x)
        return int(self._indptr[x + 1] - self._indptr[x])

    def neighbors(self, x: int) -> np.ndarray:
        x = self._validate(x)
        return self._indices[self._indptr[x] : self._indptr[x + 1]]

    def has_edge(self, x: int, y: int) -> bool:
        nbrs = self.neighbors(x)
        self._validate(y)
        i = np.searchsorted(nbrs, y)
        return bool(i < len(nbrs) and nbrs[i] == y)

    def edges(self) -> np.ndarray:
        """(edge_count, 2) array of undirected edges ``x < y`` in CSR order."""
        rows = np.repeat(np.arange(self.node_count, dtype=np.int64), self.degrees)
        keep = rows < self._indices
        return np.column_stack([rows[keep], self._indices[keep]])

    def arcs(self) -> np.ndarray:
        """(2 * edge_count, 2) array of directed arcs in CSR order."""
        rows = np.repeat(np.arange(self.node_count, dtype=np.int64), self.degrees)
        return np.column_stack([rows, self._indices])

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return (
            self._labels == other._labels
            and np.array_equal(self._indptr, other._indptr)
            and np.array_equal(self._indices, other._indices)
        )

    def __hash__(self) -> int:
        return hash((self._labels, self._indices.tobytes()))

    def __repr__(self) -> str:
        return f"Graph(node_count={self.node_count}, edge_count={self.edge_count})"


def neighbors(g: Graph, x: int) -> np.ndarray:
    return g.neighbors(x)


def common_neighbors(g: Graph, x: int, y: int) -> np.ndarray:
    """Sorted intersection of the neighbor lists of ``x`` and ``y`` (linear merge)."""
    a = g.neighbors(x)
    b = g.neighbors(y)
    out = np.empty(min(len(a), len(b)), dtype=np.int64)
    k = intersect_sorted(a, b, out)
    return out[:k]


@dataclass(frozen=True)
class Partition:
    """Assignment of every node to exactly one community in ``[0, community_count)``."""

    assignment: np.ndarray
    community_count: int

    def __post_init__(self):
        a = np.array(self.assignment, dtype=np.int64)
        if a.ndim != 1:
            raise ValueError("assignment must be one-dimensional")
        k = int(self.community_count)
        if len(a) == 0 and k != 0:
            raise ValueError("empty assignment must have zero communities")
        if len(a):
            if k < 1:
                raise ValueError("community_count must be positive")
            if a.min() < 0 or a.max() >= k:
                raise ValueError("community index out of range")
            if len(np.unique(a)) != k:
                raise ValueError("every community index must be used")
        a.flags.writeable = False
        object.__setattr__(self, "assignment", a)
        object.__setattr__(self, "community_count", k)

    @classmethod
    def from_labels(cls, labels: Sequence) -> "Partition":
        """Relabel arbitrary community labels to 0..k-1 in first-appearance order."""
        seen: dict = {}
        out = [seen.setdefault(lab, len(seen)) for lab in labels]
        return cls(np.array(out, dtype=np.int64), len(seen))

    @classmethod
    def from_communities(cls, communities: Iterable[Iterable[int]], node_count: int) -> "Partition":
        assignment = np.full(node_count, -1, dtype=np.int64)
        k = 0
        for k, members in enumerate(communities, start=1):
            for x in members:
                if assignment[x] != -1:
                    raise ValueError(f"node {x} appears in two communities")
                assignment[x] = k - 1
        if np.any(assignment < 0):
            raise ValueError("some nodes are not assigned to any community")
        return cls(assignment, k)

    @property
    def node_count(self) -> int:
        return len(self.assignment)

    @property
    def sizes(self) -> np.ndarray:
        return np.bincount(self.assignment, minlength=self.community_count)

    def communities(self) -> list[np.ndarray]:
        order = np.argsort(self.assignment, kind="stable")
        bounds = np.cumsum(self.sizes)[:-1]
        return np.split(order, bounds)

    def canonical(self) -> "Partition":
        """Same grouping, communities renumbered by their smallest member."""
        return Partition.from_labels(self.assignment.tolist())

    def same_grouping(self, other: "Partition") -> bool:
        return np.array_equal(self.canonical().assignment, other.canonical().assignment)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Partition):
            return NotImplemented
        return self.community_count == other.community_count and np.array_equal(self.assignment, other.assignment)

    def __hash__(self) -> int:
        return hash((self.community_count, self.assignment.tobytes()))


# ---------------------------------------------------------------- ingestion


@dataclass(frozen=True)
class EdgeListStats:
    lines: int
    self_loops: int
    duplicates: int


def _iter_lines(source: Source):
    if isinstance(source, (str, os.PathLike)):
        with open(source, "rb") as fh:
            yield from _iter_lines(fh)
        return
    for raw in source:
        if isinstance(raw, bytes):
            raw = raw.decode("utf-8")
        yield raw


def _content_lines(source: Source):
    for lineno, line in enumerate(_iter_lines(source), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith(COMMENT_PREFIXES):
            continue
        yield lineno, stripped.split()


def read_edge_list(source: Source) -> tuple[Graph, EdgeListStats]:
    """Parse an edge list and also report how many lines were normalized away."""
    index: dict[str, int] = {}
    labels: list[str] = []
    src: list[int] = []
    dst: list[int] = []
    lines = self_loops = 0

    def intern(label: str) -> int:
        i = index.get(label)
        if i is None:
            i = index[label] = len(labels)
            labels.append(label)
        return i

    for lineno, tokens in _content_lines(source):
        if len(tokens) != 2:
            raise GraphFormatError(f"expected 2 node labels, found {len(tokens)}", lineno)
        lines += 1
        u = intern(tokens[0])
        v = intern(tokens[1])
        if u == v:
            self_loops += 1
            continue
        src.append(u)
        dst.append(v)

    if lines == 0:
        raise EmptyGraphError("edge list contains no edges")
    g = Graph.from_edges(zip(src, dst), node_count=len(labels), labels=labels)
    stats = EdgeListStats(lines=lines, self_loops=self_loops, duplicates=len(src) - g.edge_count)
    return g, stats


def load_edge_list(source: Source) -> Graph:
    """Load a whitespace-separated edge list (SNAP style).

    Lines starting with ``#`` or ``%`` are comments.  Duplicate edges collapse
    and self-loops are dropped; both are reported through the module logger.
    """
    g, stats = read_edge_list(source)
    if stats.self_loops or stats.duplicates:
        logger.warning(
            "edge list normalized: %d self-loop(s) dropped, %d duplicate edge(s) collapsed",
            stats.self_loops,
            stats.duplicates,
        )
    return g


def load_ground_truth(source: Source, g: Graph) -> Partition:
    """Read one community per line (whitespace-separated labels) into a Partition over ``g``."""
    assignment = np.full(g.node_count, -1, dtype=np.int64)
    k = 0
    for lineno, tokens in _content_lines(source):
        for label in tokens:
            try:
                x = g.index_of(label)
            except KeyError:
                raise GraphFormatError(f"unknown node label {label!r}", lineno) from None
            if assignment[x] != -1:
                raise GraphFormatError(f"node {label!r} listed in more than one community", lineno)
            assignment[x] = k
        k += 1
    missing = np.flatnonzero(assignment < 0)
    if len(missing):
        names = ", ".join(g.label_of(int(x)) for x in missing[:5])
        raise GraphFormatError(f"{len(missing)} node(s) not in any community: {names}")
    # blank lines never create communities, so every index in [0, k) is used
    return Partition(assignment, k)


def format_edge_list(g: Graph) -> str:
    buf = io.StringIO()
    for x, y in g.edges():
        buf.write(f"{g.label_of(int(x))} {g.label_of(int(y))}\n")
    return buf.getvalue()


def format_partition(p: Partition, g: Graph) -> str:
    """Ground-truth text format: one community per line, members in index order."""
    return "".join(" ".join(g.label_of(int(x)) for x in members) + "\n" for members in p.communities())
