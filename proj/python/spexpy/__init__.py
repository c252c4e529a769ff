from ._spex import (
    FamilySpec,
    Graph,
    audit_case2,
    audit_claim1,
    audit_gamma2,
    audit_lemma31,
    audit_psi1,
    build_family,
    delete_vertices,
    edge_count,
    emit_graph6,
    graph_join,
    graph_union,
    has_fpm,
    hong_bound,
    independence_number,
    is_connected,
    is_fractional_k_extendable,
    is_isomorphic,
    make_complete,
    make_cycle,
    make_path,
    make_star,
    max_matching_size,
    min_degree,
    parse_graph6,
    spanning_tree_leafdist,
    spectral_radius,
    threshold_fke,
    threshold_tree,
    verify_thm1,
    verify_thm2,
)

__all__ = [name for name in dir() if not name.startswith("_")]
