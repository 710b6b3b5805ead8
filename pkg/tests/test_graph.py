import random
from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from spined.category import check_sc1, check_sc2
from spined.errors import ConstructionInconsistent, PreconditionViolation, RangeError
from spined.generators import (
    all_graphs,
    cycle_graph,
    grid_graph,
    path_graph,
    random_diagrams,
    random_extension,
)
from spined.graph import (
    GraphCategory,
    GraphMorphism,
    SimpleGraph,
    clique_sum_pushout,
    complete_graph,
    compose,
    enumerate_monomorphisms,
    exists_monomorphism,
    homomorphism_violation,
    identity_morphism,
    mediating_morphism,
    spine_index,
    validate_homomorphism,
)

from .helpers import brute_monomorphisms, graphs, graphs_with_permutation

GRAPHS = GraphCategory()
TRIANGLE = complete_graph(3)


def test_canonical_storage():
    G = SimpleGraph(4, [(3, 1), (0, 2), (1, 3), (2, 0)])
    assert G.edges == ((0, 2), (1, 3))
    assert G == SimpleGraph(4, [(0, 2), (1, 3)])


def test_rejects_loops_and_out_of_range():
    with pytest.raises(ValueError):
        SimpleGraph(3, [(1, 1)])
    with pytest.raises(RangeError):
        SimpleGraph(3, [(0, 3)])


@pytest.mark.parametrize("n", range(7))
def test_complete_graph_edge_count(n):
    assert complete_graph(n).edge_count == n * (n - 1) // 2


def test_validate_homomorphism_examples():
    C4 = cycle_graph(4)
    assert validate_homomorphism(identity_morphism(C4))
    collapse = GraphMorphism(complete_graph(2), C4, (1, 1))
    assert not validate_homomorphism(collapse)
    assert homomorphism_violation(collapse) == "collapsed-edge:0-1"
    assert validate_homomorphism(GraphMorphism(path_graph(3), C4, (0, 1, 2)))
    assert homomorphism_violation(GraphMorphism(path_graph(3), C4, (0, 2, 1))) == "missing-edge:0-1"
    assert homomorphism_violation(GraphMorphism(path_graph(3), C4, (0, 1))) == "length"
    assert homomorphism_violation(GraphMorphism(path_graph(3), C4, (0, 1, 7))) == "range"


def test_monomorphism_examples():
    # brute-force oracle: every injective map, checked edge by edge
    assert len(brute_monomorphisms(complete_graph(2), TRIANGLE)) == 6
    assert len(enumerate_monomorphisms(complete_graph(2), TRIANGLE)) == 6
    assert enumerate_monomorphisms(TRIANGLE, cycle_graph(5)) == []
    for n in range(6):
        H = random_graph_fixed(n)
        assert len(enumerate_monomorphisms(complete_graph(1), H)) == n


def random_graph_fixed(n):
    rng = random.Random(n)
    return SimpleGraph(n, [e for e in combinations(range(n), 2) if rng.random() < 0.5])


def test_enumeration_truncates_and_records_it():
    full = enumerate_monomorphisms(complete_graph(2), complete_graph(4))
    assert len(full) == 12 and not full.truncated
    cut = enumerate_monomorphisms(complete_graph(2), complete_graph(4), limit=5)
    assert len(cut) == 5 and cut.truncated
    assert cut == full[:5]


@settings(max_examples=150, deadline=None)
@given(graphs(0, 4), graphs(0, 6))
def test_enumeration_matches_brute_force_in_order(G, H):
    found = [m.vertex_map for m in enumerate_monomorphisms(G, H)]
    assert found == brute_monomorphisms(G, H)
    assert exists_monomorphism(G, H) == bool(found)
    assert all(GraphMorphism(G, H, vm).is_monomorphism for vm in found)


@settings(max_examples=60, deadline=None)
@given(graphs(0, 4), graphs_with_permutation(0, 6))
def test_enumeration_count_invariant_under_relabelling(G, Hp):
    H, perm = Hp
    assert len(enumerate_monomorphisms(G, H)) == len(enumerate_monomorphisms(G, H.relabel(perm)))


def test_exists_monomorphism_examples():
    assert exists_monomorphism(cycle_graph(4), complete_graph(4))
    assert not exists_monomorphism(complete_graph(4), cycle_graph(4))
    assert exists_monomorphism(path_graph(4), grid_graph(3))


@pytest.mark.parametrize("G, n", [(complete_graph(1), 1), (cycle_graph(5), 5), (SimpleGraph(0), 0)])
def test_spine_index_examples(G, n):
    assert spine_index(G) == n


@settings(max_examples=80, deadline=None)
@given(graphs(0, 6))
def test_spine_index_is_least_witness(G):
    n = spine_index(G)
    assert exists_monomorphism(G, complete_graph(n))
    if n >= 1:
        assert not exists_monomorphism(G, complete_graph(n - 1))


def _edge_into_triangle(edge):
    return GraphMorphism(complete_graph(2), TRIANGLE, edge)


def test_clique_sum_of_triangles_along_an_edge():
    p = clique_sum_pushout(_edge_into_triangle((0, 1)), _edge_into_triangle((0, 1)))
    assert p.apex.vertex_count == 4 and p.apex.edge_count == 5
    assert p.apex == SimpleGraph(4, [(0, 1), (0, 2), (1, 2), (0, 3), (1, 3)])
    assert p.leg_g.is_monomorphism and p.leg_h.is_monomorphism


def test_clique_sum_along_empty_clique_is_disjoint_union():
    G, H = path_graph(3), cycle_graph(4)
    K0 = complete_graph(0)
    p = clique_sum_pushout(GraphMorphism(K0, G, ()), GraphMorphism(K0, H, ()))
    assert p.apex == SimpleGraph(7, [(0, 1), (1, 2), (3, 4), (4, 5), (5, 6), (3, 6)])


def test_clique_sum_along_identities():
    ident = identity_morphism(TRIANGLE)
    p = clique_sum_pushout(ident, ident)
    assert p.apex == TRIANGLE
    assert p.leg_g == ident and p.leg_h == ident


def test_clique_sum_preconditions():
    with pytest.raises(PreconditionViolation):
        clique_sum_pushout(GraphMorphism(path_graph(3), TRIANGLE, (0, 1, 2)),
                           identity_morphism(TRIANGLE))
    with pytest.raises(PreconditionViolation):
        clique_sum_pushout(GraphMorphism(complete_graph(2), TRIANGLE, (0, 0)),
                           _edge_into_triangle((0, 1)))
    with pytest.raises(PreconditionViolation):
        clique_sum_pushout(_edge_into_triangle((0, 1)), identity_morphism(TRIANGLE))


@pytest.mark.parametrize("seed", range(40))
def test_clique_sum_counts_and_commutation(seed):
    (g, h, _, _), = random_diagrams(1, 9, seed)
    n = g.source.vertex_count
    p = clique_sum_pushout(g, h)
    assert p.apex.vertex_count == g.target.vertex_count + h.target.vertex_count - n
    assert p.apex.edge_count == g.target.edge_count + h.target.edge_count - n * (n - 1) // 2
    assert p.leg_g.is_monomorphism and p.leg_h.is_monomorphism
    assert compose(p.leg_g, g) == compose(p.leg_h, h)


def test_mediating_of_identities_is_identity():
    g, h = _edge_into_triangle((0, 1)), _edge_into_triangle((1, 2))
    m = mediating_morphism(g, h, identity_morphism(TRIANGLE), identity_morphism(TRIANGLE))
    assert m == identity_morphism(clique_sum_pushout(g, h).apex)


def test_mediating_into_larger_gluing():
    g = h = _edge_into_triangle((0, 1))
    g2 = GraphMorphism(TRIANGLE, complete_graph(4), (0, 1, 3))
    m = mediating_morphism(g, h, g2, identity_morphism(TRIANGLE))
    assert m.source.vertex_count == 4
    assert m.target.vertex_count == 5
    assert m.is_monomorphism
    assert check_sc2(GRAPHS, [(g, h, g2, identity_morphism(TRIANGLE))]).passed


def test_mediating_for_disjoint_unions_is_coproduct_of_maps():
    K0 = complete_graph(0)
    G, H = path_graph(2), path_graph(3)
    g2 = GraphMorphism(G, cycle_graph(4), (2, 3))
    h2 = GraphMorphism(H, path_graph(4), (3, 2, 1))
    m = mediating_morphism(GraphMorphism(K0, G, ()), GraphMorphism(K0, H, ()), g2, h2)
    assert m.vertex_map == (2, 3, 4 + 3, 4 + 2, 4 + 1)


def test_mediating_rejects_inconsistent_diagram():
    g = h = _edge_into_triangle((0, 1))
    bogus = GraphMorphism(complete_graph(2), complete_graph(4), (0, 1))
    with pytest.raises((ConstructionInconsistent, PreconditionViolation)):
        mediating_morphism(g, h, bogus, identity_morphism(TRIANGLE))


def test_sc1_single_vertex_witness():
    report = check_sc1(GRAPHS, [complete_graph(1)])
    assert report.passed and report.entries[0]["witness"] == 1


def test_sc1_on_all_graphs_up_to_four_vertices():
    population = [G for n in range(5) for G in all_graphs(n)]
    report = check_sc1(GRAPHS, population)
    assert report.passed
    assert report.population_size == 1 + 1 + 2 + 8 + 64
    assert all(e["witness"] == e["case"]["vertices"] for e in report.entries)


def test_sc2_on_random_small_diagrams():
    report = check_sc2(GRAPHS, random_diagrams(60, 5, seed=11))
    assert report.passed, report.failures


def test_graph_category_laws():
    from spined.category import check_category_laws

    population = [path_graph(2), path_graph(3), cycle_graph(3), cycle_graph(4)]
    assert check_category_laws(GRAPHS, population).passed


@settings(max_examples=40, deadline=None)
@given(graphs(1, 6), st.integers(0, 2), st.randoms(use_true_random=False))
def test_random_extension_is_mono(G, extra, rng):
    m = random_extension(G, extra, 0.4, rng)
    assert m.is_monomorphism
