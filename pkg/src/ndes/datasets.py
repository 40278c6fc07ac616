"""Bundled benchmark data."""

from __future__ import annotations

from importlib import resources

from .graph import Graph, Partition, load_edge_list, load_ground_truth


def data_path(name: str):
    return resources.files("ndes") / "data" / name


def load_karate() -> tuple[Graph, Partition]:
    """Zachary's karate club (34 nodes, 78 edges) with its 16/18 faction split."""
    with data_path("karate.edgelist").open("rb") as fh:
        g = load_edge_list(fh)
    with data_path("karate.truth").open("rb") as fh:
        truth = load_ground_truth(fh, g)
    return g, truth
