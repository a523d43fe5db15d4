"""Interval k-partite splitting, extremal constructions and ordered pattern
search for ordered uniform hypergraphs."""

from .core import (
    Density,
    Interval,
    OrderedHypergraph,
    density,
    induced,
    link,
    random_hypergraph,
    shadow,
    validate,
)
from .splitting import (
    Decomposition,
    DenseWitness,
    DyadicPartition,
    Piece,
    decompose,
    dyadic_partition,
    edge_level,
    extract_dense,
    extraction_constant,
    piece_count_bound,
    reduce_by_prefix,
    top_level,
)
from .constructions import (
    TreeBuildScript,
    anchored_block_hypergraph,
    canonical_simplex,
    crossing_free_family,
    expansion,
    loose_triangle,
    matching_family,
    power_gap_hypergraph,
    power_of_two_bipartite,
    tight_interval_hypergraph,
    tight_path,
    tight_tree,
    zigzag_path,
)
from .patterns import (
    Embedding,
    OrderedPattern,
    contains_any_order_type,
    contains_ordered_pattern,
    embed_forest,
    embed_tight_tree,
    exact_r_partite_parts,
    find_crossing_pair,
    find_intersection_pair,
    interval_kpartite_witness,
    interval_order_types,
    validate_simplex,
    validate_strong_simplex,
    validate_tight_tree,
)
from .oracle import (
    ForbiddenSpec,
    max_edges_avoiding,
    naive_contains,
    naive_edge_level,
    verify_decomposition,
)

__version__ = "0.1.0"
