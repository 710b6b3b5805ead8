"""Named graph families and seeded random graphs, spans and diagrams."""
from __future__ import annotations

import random
from itertools import combinations
from typing import Iterator

from .graph import GraphMorphism, SimpleGraph, complete_graph
from .hypergraph import Hypergraph, HypergraphMorphism, hyper_spine

FAMILIES = ("path", "cycle", "complete", "grid", "tree", "random")


def path_graph(n: int) -> SimpleGraph:
    return SimpleGraph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> SimpleGraph:
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return SimpleGraph(n, [(i, (i + 1) % n) for i in range(n)])


def grid_graph(rows: int, cols: int | None = None) -> SimpleGraph:
    cols = rows if cols is None else cols
    edges = []
    for r in range(rows):
        for c in range(cols):
            v = r * cols + c
            if c + 1 < cols:
                edges.append((v, v + 1))
            if r + 1 < rows:
                edges.append((v, v + cols))
    return SimpleGraph(rows * cols, edges)


def star_graph(leaves: int) -> SimpleGraph:
    return SimpleGraph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def petersen_graph() -> SimpleGraph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return SimpleGraph(10, outer + spokes + inner)


def random_tree(n: int, rng: random.Random) -> SimpleGraph:
    """Uniform labelled tree via a random Pruefer sequence."""
    if n <= 1:
        return SimpleGraph(n)
    if n == 2:
        return SimpleGraph(2, [(0, 1)])
    code = [rng.randrange(n) for _ in range(n - 2)]
    degree = [1] * n
    for v in code:
        degree[v] += 1
    edges = []
    for v in code:
        leaf = min(u for u in range(n) if degree[u] == 1)
        edges.append((leaf, v))
        degree[leaf] -= 1
        degree[v] -= 1
    u, w = [x for x in range(n) if degree[x] == 1]
    edges.append((u, w))
    return SimpleGraph(n, edges)


def random_graph(n: int, p: float, rng: random.Random) -> SimpleGraph:
    return SimpleGraph(n, [e for e in combinations(range(n), 2) if rng.random() < p])


def random_graphs(
    count: int, min_vertices: int, max_vertices: int, seed: int
) -> list[SimpleGraph]:
    """Erdos-Renyi graphs with vertex count and density drawn per graph."""
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        n = rng.randint(min_vertices, max_vertices)
        out.append(random_graph(n, rng.uniform(0.15, 0.85), rng))
    return out


def family(name: str, n: int, seed: int = 0) -> SimpleGraph:
    if name == "path":
        return path_graph(n)
    if name == "cycle":
        return cycle_graph(n)
    if name == "complete":
        return complete_graph(n)
    if name == "grid":
        return grid_graph(n)
    if name == "tree":
        return random_tree(n, random.Random(seed))
    if name == "random":
        return random_graph(n, 0.5, random.Random(seed))
    raise ValueError(f"unknown family {name!r}")


def named_graphs() -> dict[str, SimpleGraph]:
    """Small members of the classical families, keyed by a short name."""
    graphs = {}
    for n in range(1, 9):
        graphs[f"P{n}"] = path_graph(n)
        graphs[f"K{n}"] = complete_graph(n)
    for n in range(3, 11):
        graphs[f"C{n}"] = cycle_graph(n)
    for n in range(2, 11):
        graphs[f"tree{n}"] = random_tree(n, random.Random(n))
    graphs["star6"] = star_graph(6)
    graphs["grid3x3"] = grid_graph(3)
    graphs["grid2x4"] = grid_graph(2, 4)
    graphs["petersen"] = petersen_graph()
    return graphs


def all_graphs(n: int) -> Iterator[SimpleGraph]:
    """Every labelled graph on ``n`` vertices."""
    pairs = list(combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        yield SimpleGraph(n, [pairs[i] for i in range(len(pairs)) if mask >> i & 1])


def random_embedding(n: int, size: int, p: float, rng: random.Random) -> GraphMorphism:
    """A random graph on ``size`` vertices with a random monomorphism from ``K_n``."""
    base = random_graph(size, p, rng)
    image = rng.sample(range(size), n)
    G = base.add_edges(combinations(image, 2))
    return GraphMorphism(complete_graph(n), G, tuple(image))


def random_extension(G: SimpleGraph, extra: int, p: float, rng: random.Random) -> GraphMorphism:
    """A random monomorphism from ``G`` into a random supergraph of a relabelled copy."""
    size = G.vertex_count + extra
    image = rng.sample(range(size), G.vertex_count)
    edges = {(image[u], image[v]) for u, v in G.edges}
    edges.update(e for e in combinations(range(size), 2) if rng.random() < p)
    return GraphMorphism(G, SimpleGraph(size, edges), tuple(image))


def random_span(
    rng: random.Random, max_apex: int, p: float = 0.5
) -> tuple[GraphMorphism, GraphMorphism]:
    """Two embeddings of a common ``K_n`` whose clique sum has at most ``max_apex`` vertices."""
    n = rng.randint(0, max(0, max_apex // 2))
    a = rng.randint(n, max(n, max_apex - n))
    b = rng.randint(n, max_apex - a + n)
    return random_embedding(n, a, p, rng), random_embedding(n, b, p, rng)


def random_diagrams(
    count: int, max_apex: int, seed: int, max_extra: int = 2, p: float = 0.5
) -> list[tuple[GraphMorphism, GraphMorphism, GraphMorphism, GraphMorphism]]:
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        g, h = random_span(rng, max_apex, p)
        g2 = random_extension(g.target, rng.randint(0, max_extra), p, rng)
        h2 = random_extension(h.target, rng.randint(0, max_extra), p, rng)
        out.append((g, h, g2, h2))
    return out


def random_mono_pairs(
    count: int, min_vertices: int, max_vertices: int, seed: int
) -> list[GraphMorphism]:
    """Monomorphisms ``G -> H`` with ``G`` a random subgraph of a random ``H``."""
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        H = random_graph(rng.randint(min_vertices, max_vertices), rng.uniform(0.2, 0.8), rng)
        keep = sorted(rng.sample(range(H.vertex_count), rng.randint(1, H.vertex_count)))
        index = {v: i for i, v in enumerate(keep)}
        edges = [(index[u], index[v]) for u, v in H.edges if u in index and v in index]
        G = SimpleGraph(len(keep), [e for e in edges if rng.random() < 0.8])
        out.append(GraphMorphism(G, H, tuple(keep)))
    return out


def random_hypergraph(n: int, edge_count: int, max_size: int, rng: random.Random) -> Hypergraph:
    edges = []
    for _ in range(edge_count if n else 0):
        k = rng.randint(1, min(max_size, n))
        edges.append(rng.sample(range(n), k))
    return Hypergraph(n, edges)


def random_hyper_embedding(n: int, size: int, rng: random.Random) -> HypergraphMorphism:
    """A random hypergraph holding a hyperedge over the image of ``hyper_spine(n)``."""
    base = random_hypergraph(size, rng.randint(0, 4), 3, rng)
    image = rng.sample(range(size), n)
    edges = list(base.hyperedges) + ([tuple(image)] if n else [])
    return HypergraphMorphism(hyper_spine(n), Hypergraph(size, edges), tuple(image))


def random_hyper_extension(H: Hypergraph, extra: int, rng: random.Random) -> HypergraphMorphism:
    size = H.vertex_count + extra
    image = rng.sample(range(size), H.vertex_count)
    edges = [tuple(image[v] for v in e) for e in H.hyperedges]
    edges += list(random_hypergraph(size, rng.randint(0, 2), 3, rng).hyperedges)
    return HypergraphMorphism(H, Hypergraph(size, edges), tuple(image))


def random_hyper_diagrams(count: int, max_apex: int, seed: int, max_extra: int = 2):
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        n = rng.randint(0, max_apex // 2)
        a = rng.randint(n, max(n, max_apex - n))
        b = rng.randint(n, max_apex - a + n)
        g = random_hyper_embedding(n, a, rng)
        h = random_hyper_embedding(n, b, rng)
        g2 = random_hyper_extension(g.target, rng.randint(0, max_extra), rng)
        h2 = random_hyper_extension(h.target, rng.randint(0, max_extra), rng)
        out.append((g, h, g2, h2))
    return out
