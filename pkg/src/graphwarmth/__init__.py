"""Warmth of graphs and the homology of the edge-homomorphism complex."""

from .graphs import Graph, ParseError, read_graph, write_graph
from .generators import (
    complete,
    complete_bipartite,
    cycle,
    chung_lu,
    erdos_renyi,
    kneser,
    looped_cycle,
    mycielski,
    path,
    petersen,
    twisted_product,
    twisted_toroidal,
    Z2Action,
)
from .folding import FoldSequence, find_fold, is_dismantlable, is_stiff, stiff_reduction
from .warmth import (
    CapacityError,
    StableFamily,
    WarmthResult,
    d_stable_family_exists,
    find_complete_bipartite,
    generated_by_at_most,
    minimal_witness_size,
    two_stable_witness_search,
    verify_stable_family,
    warmth,
)
from .homcomplex import (
    CellComplex,
    EmptyComplexError,
    EvenClosedWalk,
    HomologySummary,
    SpanReport,
    betti_numbers_fast,
    build_hom_k2,
    cycle_chain,
    enumerate_even_closed_walks,
    h1_free_rank,
    h1_span_check,
    homological_connectivity,
    homology,
)
from .chromatic import chromatic_number, greedy_coloring, is_k_colorable
from .intlinalg import in_integer_image, rank_exact, smith_normal_form

__version__ = "0.1.0"
