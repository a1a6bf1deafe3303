"""Recognition of interval k-graphs and interval H-graphs with a given vertex partition."""

from .graph import (
    ColoredGraph,
    GraphFormatError,
    PatternGraph,
    connected_components,
    gen_random,
    parse_graph,
    read_graph,
    render_graph,
)
from .pairdigraph import PairDigraph, build
from .recognizer import RecognitionOutcome, recognize
from .representation import (
    intervals_to_ordering,
    ordering_to_intervals,
    verify_ordering,
    verify_representation,
)
from .oracle import brute_force_recognize

__version__ = "0.1.0"
