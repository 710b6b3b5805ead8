"""Independent oracles and hypothesis strategies shared by the tests."""
from __future__ import annotations

from itertools import combinations, permutations

import networkx as nx
from hypothesis import strategies as st

from spined.graph import SimpleGraph


def from_nx(g: nx.Graph) -> SimpleGraph:
    index = {v: i for i, v in enumerate(sorted(g.nodes))}
    return SimpleGraph(len(index), [(index[u], index[v]) for u, v in g.edges])


def atlas_graphs(max_vertices: int = 7) -> list[SimpleGraph]:
    """One representative of every isomorphism class up to seven vertices."""
    return [from_nx(g) for g in nx.graph_atlas_g() if g.number_of_nodes() <= max_vertices]


def brute_clique_number(G: SimpleGraph) -> int:
    for k in range(G.vertex_count, 0, -1):
        for subset in combinations(range(G.vertex_count), k):
            if all(G.has_edge(u, v) for u, v in combinations(subset, 2)):
                return k
    return 0


def brute_monomorphisms(G: SimpleGraph, H: SimpleGraph) -> list[tuple[int, ...]]:
    """Every injective map checked edge by edge, in lexicographic order."""
    out = []
    for image in permutations(range(H.vertex_count), G.vertex_count):
        if all(H.has_edge(image[u], image[v]) for u, v in G.edges):
            out.append(image)
    return out


@st.composite
def graphs(draw, min_vertices: int = 0, max_vertices: int = 7) -> SimpleGraph:
    n = draw(st.integers(min_vertices, max_vertices))
    pairs = list(combinations(range(n), 2))
    chosen = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return SimpleGraph(n, [p for p, keep in zip(pairs, chosen) if keep])


@st.composite
def graphs_with_permutation(draw, min_vertices: int = 0, max_vertices: int = 7):
    G = draw(graphs(min_vertices, max_vertices))
    perm = draw(st.permutations(range(G.vertex_count)))
    return G, list(perm)


def to_nx(G: SimpleGraph) -> nx.Graph:
    g = nx.Graph()
    g.add_nodes_from(range(G.vertex_count))
    g.add_edges_from(G.edges)
    return g
