"""Input validation helpers for the estimator layer."""

from __future__ import annotations

import numpy as np
from sklearn.utils import check_array

from .exceptions import NotConnectedError
from .graph import Graph, is_connected, parse_graph


def check_graph(X, require_connected: bool = True) -> Graph:
    """Coerce ``X`` into a :class:`Graph`.

    Accepts a :class:`Graph`, an edge-list document (``str``) or an
    array-like of shape ``(n_edges, 2)`` holding non-negative integer vertex
    ids. Array inputs keep their vertex ids.
    """
    if isinstance(X, Graph):
        g = X
    elif isinstance(X, str):
        g = parse_graph(X)
    else:
        edges = check_edge_array(X)
        g = Graph(map(tuple, edges.tolist()))
    if require_connected and not is_connected(g):
        raise NotConnectedError("graph is disconnected")
    return g


def check_edge_array(X) -> np.ndarray:
    """Validate an ``(n_edges, 2)`` array of vertex ids and return it as ``int64``."""
    arr = check_array(X, dtype=None, ensure_2d=True, ensure_min_samples=1)
    if arr.shape[1] != 2:
        raise ValueError(f"edge array must have shape (n_edges, 2), got {arr.shape}")
    if not np.issubdtype(arr.dtype, np.integer):
        as_int = arr.astype(np.int64)
        if not np.array_equal(as_int, arr):
            raise ValueError("edge array must contain integer vertex ids")
        arr = as_int
    arr = arr.astype(np.int64)
    if (arr < 0).any():
        raise ValueError("vertex ids must be non-negative")
    if (arr[:, 0] == arr[:, 1]).any():
        raise ValueError("edge array contains a self-loop; graphs must be simple")
    return arr
