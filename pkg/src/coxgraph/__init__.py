"""Coxeter graph analysis: classification, just-infiniteness, profinite
invariants, explicit quotients and brute-force cross-checks."""

from .classify import (
    OTHER,
    ComponentClass,
    GramClass,
    catalog,
    catalog_types,
    classify_component,
    classify_graph,
    find_isomorphism,
    gram_class,
    gram_matrix,
    graphs_isomorphic,
)
from .graph import (
    INF,
    CoxeterGraph,
    boundary_labels,
    components,
    disjoint_union,
    induced,
    odd_subgraph,
    p_complement_components,
    parse,
    serialize,
)
from .invariants import (
    GroupReport,
    SemidirectData,
    abelianization_rank,
    analyze,
    direct_decomposition,
    finite_order,
    group_order,
    is_finite,
    is_just_infinite,
    is_virtually_abelian,
    is_virtually_indicable,
    is_virtually_z,
    semidirect_data,
)
from .oracles import AbelianInvariants, enumerate_cosets, snf_abelianization, todd_coxeter
from .profinite import CompareVerdict, Invariant, compare_profinite, fingerprint, rigidity_scope
from .quotients import (
    QuotientWitness,
    find_infinite_proper_quotient,
    parabolic_retraction,
    prime_collapse,
    resolve_infinite_edge,
    triangle_projection,
    verify_quotient_map,
)

__version__ = "0.1.0"
