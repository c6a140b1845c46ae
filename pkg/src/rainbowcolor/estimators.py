"""scikit-learn style front end.

The estimators take a graph as ``X`` (see :func:`~rainbowcolor.validation.check_graph`)
and expose results through trailing-underscore attributes, so they work with
``get_params``/``set_params``, ``clone`` and the usual fitted checks.
"""

from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator
from sklearn.utils.validation import check_is_fitted

from .coloring import color_graph
from .exact import MAX_EXACT_EDGES, exact_rc_certificate
from .graph import Graph, diameter, edge_key
from .validation import check_edge_array, check_graph


class RainbowColoring(BaseEstimator):
    """Build a rainbow coloring that meets the block-count bound.

    Parameters
    ----------
    strategy : {"auto", "two-connected", "theorem1"}, default="auto"
        ``auto`` uses the block construction when the graph has a cut vertex.

    Attributes
    ----------
    coloring_ : EdgeColoring
    n_colors_ : int
    bound_ : int
        ``ceil(n/2)`` or ``(n + r - 1) / 2`` depending on the construction.
    bound_kind_ : str
    r_ : int
        Number of even blocks.
    verified_ : bool
    notes_ : list of str
        Records any fallback to exhaustive search.
    """

    def __init__(self, strategy="auto"):
        self.strategy = strategy

    def fit(self, X, y=None):
        g = check_graph(X)
        outcome = color_graph(g, self.strategy)
        self.graph_ = g
        self.coloring_ = outcome.coloring
        self.n_colors_ = outcome.coloring.palette_size
        self.bound_ = outcome.bound
        self.bound_kind_ = outcome.bound_kind
        self.r_ = outcome.r
        self.verified_ = outcome.verified
        self.notes_ = outcome.notes
        return self

    def predict(self, X):
        """Colors of the edges listed in ``X`` (rows ``u, v``), in row order."""
        check_is_fitted(self, "coloring_")
        edges = check_edge_array(X)
        try:
            return np.array([self.coloring_[edge_key(u, v)] for u, v in edges.tolist()], dtype=np.int64)
        except KeyError as exc:
            raise ValueError(f"edge {exc.args[0]} is not in the fitted graph") from None

    def fit_predict(self, X, y=None):
        self.fit(X)
        if isinstance(X, (str, Graph)):
            X = np.array(self.graph_.edges, dtype=np.int64)
        return self.predict(X)


class RainbowConnectionNumber(BaseEstimator):
    """Exact rainbow connection number by exhaustive search.

    Parameters
    ----------
    cap : int or None
        Give up above this many colors.
    max_edges : int
        Refuse graphs with more edges.

    Attributes
    ----------
    rc_ : int
    coloring_ : EdgeColoring
        A coloring with ``rc_`` colors.
    diameter_ : int
    """

    def __init__(self, cap=None, max_edges=MAX_EXACT_EDGES):
        self.cap = cap
        self.max_edges = max_edges

    def fit(self, X, y=None):
        g = check_graph(X)
        self.rc_, self.coloring_ = exact_rc_certificate(g, cap=self.cap, max_edges=self.max_edges)
        self.diameter_ = diameter(g)
        return self
