"""DFS on a digraph given a partially complemented representation.

The representation stores, per vertex, either its out-neighbors or its
out-non-neighbors (flagged per vertex), so dense graphs such as graph
complements fit in memory linear in the *stored* size.  The traversal in
:func:`pc_dfs_forest` produces the exact DFS forest of the underlying
graph in time linear in that stored size, certified by operation counters.
"""

from .dfs import (
    DfsForest,
    DfsFrame,
    InvariantViolation,
    OpCounters,
    UndiscoveredList,
    pc_dfs_forest,
    restart_cursor,
    undirected_components,
)
from .oracle import (
    GeneratorSpec,
    SplitMix64,
    forests_equal,
    generate,
    standard_dfs,
)
from .pcdg import ParseError, parse, serialize
from .pcgraph import (
    ArcList,
    PcDigraph,
    PcGraphError,
    build_pc_lists,
    complement_vertex,
    materialize,
)

__all__ = [
    "ArcList",
    "DfsForest",
    "DfsFrame",
    "GeneratorSpec",
    "InvariantViolation",
    "OpCounters",
    "ParseError",
    "PcDigraph",
    "PcGraphError",
    "SplitMix64",
    "UndiscoveredList",
    "build_pc_lists",
    "complement_vertex",
    "forests_equal",
    "generate",
    "materialize",
    "parse",
    "pc_dfs_forest",
    "restart_cursor",
    "serialize",
    "standard_dfs",
    "undirected_components",
]

__version__ = "0.1.0"
