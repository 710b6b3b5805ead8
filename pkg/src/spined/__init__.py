"""Spined categories and the triangulation functor on graphs and hypergraphs."""

__version__ = "0.1.0"

from .category import (
    LawReport,
    NatCategory,
    ProxyPushout,
    SFunctor,
    SpinedCategory,
    check_category_laws,
    check_sc1,
    check_sc2,
    check_sfunctor_laws,
    nat_proxy_pushout,
)
from .chordal import (
    clique_number,
    fill_in,
    is_chordal,
    is_chordal_bruteforce,
    min_completion_width,
    perfect_elimination_ordering,
)
from .graph import (
    GraphCategory,
    GraphMorphism,
    SimpleGraph,
    clique_sum_pushout,
    complete_graph,
    enumerate_monomorphisms,
    exists_monomorphism,
    mediating_morphism,
    spine_index,
    validate_homomorphism,
)
from .hypergraph import (
    Hypergraph,
    HypergraphCategory,
    hyper_clique_sum,
    hyper_spine,
    primal_graph,
)
from .triangulation import (
    Convention,
    WidthValue,
    check_domination,
    delta_generic,
    delta_graph,
    hypergraph_delta,
    treewidth_oracle,
)


__all__ = [
    "Convention",
    "GraphCategory",
    "GraphMorphism",
    "Hypergraph",
    "HypergraphCategory",
    "LawReport",
    "NatCategory",
    "ProxyPushout",
    "SFunctor",
    "SimpleGraph",
    "SpinedCategory",
    "WidthValue",
    "check_category_laws",
    "check_domination",
    "check_sc1",
    "check_sc2",
    "check_sfunctor_laws",
    "clique_number",
    "clique_sum_pushout",
    "complete_graph",
    "delta_generic",
    "delta_graph",
    "enumerate_monomorphisms",
    "exists_monomorphism",
    "fill_in",
    "hyper_clique_sum",
    "hyper_spine",
    "hypergraph_delta",
    "is_chordal",
    "is_chordal_bruteforce",
    "mediating_morphism",
    "min_completion_width",
    "nat_proxy_pushout",
    "perfect_elimination_ordering",
    "primal_graph",
    "spine_index",
    "treewidth_oracle",
    "validate_homomorphism",
]
