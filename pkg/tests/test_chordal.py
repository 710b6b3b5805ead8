import random
from collections import Counter
from itertools import permutations

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from spined.chordal import (
    clique_number,
    elimination_width,
    fill_in,
    is_chordal,
    is_chordal_bruteforce,
    maximal_cliques,
    min_completion_width,
    perfect_elimination_ordering,
    simple_cycles,
)
from spined.errors import BoundExceeded, PreconditionViolation
from spined.generators import (
    cycle_graph,
    path_graph,
    petersen_graph,
    random_graphs,
    random_tree,
)
from spined.graph import SimpleGraph, complete_graph

from .helpers import atlas_graphs, brute_clique_number, graphs, graphs_with_permutation, to_nx


def literal_min_completion_width(G):
    """The definition itself: min over orderings of the brute-force clique number."""
    if G.vertex_count == 0:
        return 0
    return min(brute_clique_number(fill_in(G, o).completed)
               for o in permutations(range(G.vertex_count)))


def test_is_chordal_examples():
    assert is_chordal(complete_graph(5))
    assert not is_chordal(cycle_graph(4))
    rng = random.Random(0)
    for _ in range(30):
        T = random_tree(rng.randint(1, 8), rng)
        assert is_chordal(T) and is_chordal_bruteforce(T)


def test_bruteforce_examples():
    assert not is_chordal_bruteforce(cycle_graph(5))
    for chord in [(0, 2), (0, 3), (1, 3), (1, 4), (2, 4)]:
        assert not is_chordal_bruteforce(cycle_graph(5).add_edges([chord]))
    diamond = SimpleGraph(4, [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)])
    assert is_chordal_bruteforce(diamond)
    assert [len(c) for c in simple_cycles(diamond)] == [3, 4, 3]


def test_bruteforce_bound():
    with pytest.raises(BoundExceeded):
        is_chordal_bruteforce(path_graph(11))
    assert is_chordal_bruteforce(path_graph(11), bound=11)


def test_cycle_enumeration_counts():
    # K_n has C(n,k)(k-1)!/2 cycles of length k
    assert sum(1 for _ in simple_cycles(complete_graph(5))) == 10 + 15 + 12
    lengths = Counter(len(c) for c in simple_cycles(petersen_graph()))
    assert lengths == Counter(len(c) for c in nx.simple_cycles(nx.petersen_graph()))
    assert lengths == {5: 12, 6: 10, 8: 15, 9: 20}


def test_peo_witness_is_perfect():
    G = SimpleGraph(5, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)])
    order = perfect_elimination_ordering(G)
    assert sorted(order) == list(range(5))
    assert fill_in(G, order).fill_edges == ()
    assert perfect_elimination_ordering(cycle_graph(6)) is None


def test_chordal_agrees_with_bruteforce_on_atlas():
    for G in atlas_graphs(7):
        assert is_chordal(G) == is_chordal_bruteforce(G), G


def test_chordal_agrees_with_bruteforce_on_random_8_to_10():
    for G in random_graphs(200, 8, 10, seed=5):
        assert is_chordal(G) == is_chordal_bruteforce(G), G


@settings(max_examples=100, deadline=None)
@given(graphs(0, 9))
def test_chordal_agrees_with_networkx(G):
    assert is_chordal(G) == nx.is_chordal(to_nx(G))


@pytest.mark.parametrize("G, expected", [
    (complete_graph(6), 6), (cycle_graph(5), 2), (petersen_graph(), 2), (SimpleGraph(0), 0),
    (SimpleGraph(3), 1),
])
def test_clique_number_examples(G, expected):
    assert brute_clique_number(G) == expected
    assert clique_number(G) == expected


@settings(max_examples=150, deadline=None)
@given(graphs(0, 9))
def test_clique_number_matches_brute_force(G):
    assert clique_number(G) == brute_clique_number(G)
    cliques = list(maximal_cliques(G))
    assert len({tuple(sorted(c)) for c in cliques}) == len(cliques)
    assert sorted(sorted(c) for c in cliques) == sorted(sorted(c) for c in nx.find_cliques(to_nx(G))) \
        if G.vertex_count else cliques == []


def test_fill_in_examples():
    C4 = cycle_graph(4)
    completion = fill_in(C4, (0, 1, 2, 3))
    assert completion.fill_edges == ((1, 3),)
    assert fill_in(C4, (1, 0, 2, 3)).fill_edges == ((0, 2),)
    for order in permutations(range(5)):
        assert fill_in(complete_graph(5), order).fill_edges == ()


def test_fill_in_rejects_bad_ordering():
    with pytest.raises(PreconditionViolation):
        fill_in(cycle_graph(4), (0, 1, 2))
    with pytest.raises(PreconditionViolation):
        fill_in(cycle_graph(4), (0, 1, 1, 3))


@settings(max_examples=100, deadline=None)
@given(graphs(0, 9), st.randoms(use_true_random=False))
def test_fill_in_is_a_chordal_completion(G, rng):
    order = list(range(G.vertex_count))
    rng.shuffle(order)
    c = fill_in(G, order)
    assert c.completed.vertex_count == G.vertex_count
    assert set(c.completed.edges) == set(G.edges) | set(c.fill_edges)
    assert not set(c.fill_edges) & set(G.edges)
    assert is_chordal(c.completed)
    assert fill_in(c.completed, order).fill_edges == ()
    assert elimination_width(G, order) == clique_number(c.completed)


def test_peo_of_chordal_graph_has_no_fill():
    for G in atlas_graphs(6):
        order = perfect_elimination_ordering(G)
        if order is not None:
            assert fill_in(G, order).fill_edges == ()


def test_c4_width_over_all_24_orderings():
    C4 = cycle_graph(4)
    widths = [clique_number(fill_in(C4, o).completed) for o in permutations(range(4))]
    assert len(widths) == 24 and min(widths) == 3
    assert min_completion_width(C4) == 3


@pytest.mark.parametrize("G, expected", [
    (complete_graph(4), 4), (cycle_graph(4), 3), (path_graph(5), 2), (SimpleGraph(0), 0),
    (SimpleGraph(4), 1),
])
def test_min_completion_width_examples(G, expected):
    assert literal_min_completion_width(G) == expected
    assert min_completion_width(G) == expected


def test_exhaustive_matches_literal_definition():
    for G in atlas_graphs(6):
        assert min_completion_width(G, "exhaustive") == literal_min_completion_width(G), G


def test_branch_and_bound_matches_exhaustive():
    for G in atlas_graphs(7)[::3] + random_graphs(60, 6, 8, seed=9):
        assert min_completion_width(G, "bnb") == min_completion_width(G, "exhaustive"), G


def test_unknown_method():
    with pytest.raises(ValueError):
        min_completion_width(cycle_graph(4), "magic")


@settings(max_examples=100, deadline=None)
@given(graphs(0, 9))
def test_width_bounds_clique_number(G):
    w = min_completion_width(G)
    assert w >= clique_number(G)
    if is_chordal(G):
        assert w == clique_number(G)


@settings(max_examples=60, deadline=None)
@given(graphs_with_permutation(0, 10))
def test_width_is_isomorphism_invariant(Gp):
    G, perm = Gp
    assert min_completion_width(G) == min_completion_width(G.relabel(perm))
