"""Rainbow edge-colorings of graphs that meet block-count bounds."""

from .coloring import (
    ColoringOutcome,
    Lemma3Result,
    color_even_cycle,
    color_graph,
    color_odd_cycle,
    extend_over_even_ear,
    extend_over_even_ear_anchored,
    extend_over_odd_ear,
    lemma3_coloring,
    theorem1_bound,
    theorem1_coloring,
    theorem2_bound,
    two_connected_coloring,
)
from .decompose import (
    BlockDecomposition,
    BlockOrdering,
    EarDecomposition,
    block_decomposition,
    block_ordering,
    ear_decomposition,
)
from .exact import exact_rc, exact_rc_certificate
from .generators import Figure1Params, block_chain, figure1_graph, figure2_graph, random_two_connected
from .graph import EdgeColoring, Graph, diameter, format_edge_list, parse_graph, structure_class, to_dot
from .verify import (
    RainbowReport,
    find_incomplete_rainbow_path,
    is_incomplete_coloring,
    verify_lemma3_property,
    verify_rainbow,
)

__version__ = "0.1.0"


def __getattr__(name):
    # the estimators pull in scikit-learn, so load them only on demand
    if name in ("RainbowColoring", "RainbowConnectionNumber"):
        from . import estimators

        return getattr(estimators, name)
    raise AttributeError(f"module {__name__!r} has no attribute {name!r}")
