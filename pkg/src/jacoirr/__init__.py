"""Jaco graphs, Zagreb-type indices and Khazamula irregularity of digraphs."""

from .fibonacci import fibonacci, shift_down_sum, weight_for_degree, weight_vector, zeckendorf
from .graph import (
    DegreeTriple,
    Digraph,
    GraphError,
    UndirectedView,
    build_bipartite_lr,
    build_cycle,
    build_path,
    build_wheel,
    degree_profile,
    directed_join,
    make_digraph,
    underlying_simple_graph,
)
from .indices import f_zagreb, table2_row, zagreb
from .jaco import build_jaco, fpm_sequence, jaco_degree_sequence, jaco_out_degree, jaconian_vertices
from .khazamula import (
    Convention,
    LinearForm,
    LinearParams,
    circ_integral,
    head_degree,
    irr_k,
    irr_k_terms,
    irr_kc,
    linear_integral,
    quad_reference,
    radius,
)

__version__ = "0.1.0"
