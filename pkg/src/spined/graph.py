"""Simple graphs, their monomorphisms and the spined category ``Grph_m``.

Vertices are the integers ``0 .. vertex_count - 1``.  Graphs are stored in
canonical form (each edge once as ``(u, v)`` with ``u < v``, edges sorted), so
``==`` is labelled equality, not isomorphism.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Any, Iterable, Iterator, Sequence

from .category import ProxyPushout, SpinedCategory
from .errors import ConstructionInconsistent, PreconditionViolation, RangeError


@dataclass(frozen=True)
class SimpleGraph:
    vertex_count: int
    edges: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        n = self.vertex_count
        if n < 0:
            raise RangeError(f"negative vertex count {n}")
        canonical = set()
        for u, v in self.edges:
            if not (0 <= u < n and 0 <= v < n):
                raise RangeError(f"edge ({u}, {v}) out of range for {n} vertices")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            canonical.add((u, v) if u < v else (v, u))
        object.__setattr__(self, "edges", tuple(sorted(canonical)))

    @cached_property
    def masks(self) -> tuple[int, ...]:
        """Adjacency of each vertex as an int bitset."""
        adj = [0] * self.vertex_count
        for u, v in self.edges:
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return tuple(adj)

    @cached_property
    def edge_set(self) -> frozenset[tuple[int, int]]:
        return frozenset(self.edges)

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.masks[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        return _bits(self.masks[v])

    def degree(self, v: int) -> int:
        return self.masks[v].bit_count()

    def relabel(self, perm: Sequence[int]) -> SimpleGraph:
        """The isomorphic copy with vertex ``v`` renamed ``perm[v]``."""
        return SimpleGraph(self.vertex_count, [(perm[u], perm[v]) for u, v in self.edges])

    def add_edges(self, extra: Iterable[tuple[int, int]]) -> SimpleGraph:
        return SimpleGraph(self.vertex_count, list(self.edges) + list(extra))

    def describe(self) -> dict[str, Any]:
        return {"vertices": self.vertex_count, "edges": [list(e) for e in self.edges]}

    def __repr__(self):
        return f"SimpleGraph({self.vertex_count}, {list(self.edges)})"


def _bits(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def complete_graph(n: int) -> SimpleGraph:
    return SimpleGraph(n, list(combinations(range(n), 2)))


def empty_graph(n: int = 0) -> SimpleGraph:
    return SimpleGraph(n)


@dataclass(frozen=True)
class GraphMorphism:
    """A vertex map between graphs; not validated on construction."""

    source: SimpleGraph
    target: SimpleGraph
    vertex_map: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "vertex_map", tuple(self.vertex_map))

    def __call__(self, v: int) -> int:
        return self.vertex_map[v]

    @property
    def is_homomorphism(self) -> bool:
        return homomorphism_violation(self) is None

    @property
    def is_injective(self) -> bool:
        return len(set(self.vertex_map)) == len(self.vertex_map)

    @property
    def is_monomorphism(self) -> bool:
        return self.is_injective and self.is_homomorphism

    def describe(self) -> dict[str, Any]:
        return {
            "source": self.source.describe(),
            "target": self.target.describe(),
            "map": list(self.vertex_map),
        }


def identity_morphism(G: SimpleGraph) -> GraphMorphism:
    return GraphMorphism(G, G, tuple(range(G.vertex_count)))


def compose(g: GraphMorphism, f: GraphMorphism) -> GraphMorphism:
    """``g o f``."""
    if f.target != g.source:
        raise PreconditionViolation("target of the first arrow is not the source of the second")
    return GraphMorphism(f.source, g.target, tuple(g.vertex_map[v] for v in f.vertex_map))


def homomorphism_violation(m: GraphMorphism) -> str | None:
    """Reason code why ``m`` is not a homomorphism, or None if it is."""
    if len(m.vertex_map) != m.source.vertex_count:
        return "length"
    n = m.target.vertex_count
    if any(not 0 <= x < n for x in m.vertex_map):
        return "range"
    for u, v in m.source.edges:
        a, b = m.vertex_map[u], m.vertex_map[v]
        if a == b:
            return f"collapsed-edge:{u}-{v}"
        if not m.target.has_edge(a, b):
            return f"missing-edge:{u}-{v}"
    return None


def validate_homomorphism(m: GraphMorphism) -> bool:
    return homomorphism_violation(m) is None


class MorphismList(list):
    """A list of morphisms that remembers whether enumeration was cut short."""

    truncated = False


def iter_monomorphisms(G: SimpleGraph, H: SimpleGraph) -> Iterator[tuple[int, ...]]:
    """Injective homomorphisms ``G -> H`` as vertex maps, lexicographically.

    Source vertices are assigned in index order; a candidate must have enough
    degree, be unused, and be adjacent to the images of every earlier
    neighbour.
    """
    n, m = G.vertex_count, H.vertex_count
    if n > m:
        return
    gadj, hadj = G.masks, H.masks
    hdeg = [hadj[w].bit_count() for w in range(m)]
    everything = (1 << m) - 1
    # candidates must dominate in degree
    allowed = [
        sum(1 << w for w in range(m) if hdeg[w] >= gadj[v].bit_count()) for v in range(n)
    ]
    earlier = [gadj[v] & ((1 << v) - 1) for v in range(n)]
    assignment = [0] * n

    def extend(v: int, used: int) -> Iterator[tuple[int, ...]]:
        if v == n:
            yield tuple(assignment)
            return
        cand = allowed[v] & ~used & everything
        for u in _bits(earlier[v]):
            cand &= hadj[assignment[u]]
        while cand:
            low = cand & -cand
            cand ^= low
            assignment[v] = low.bit_length() - 1
            yield from extend(v + 1, used | low)

    yield from extend(0, 0)


def enumerate_monomorphisms(
    G: SimpleGraph, H: SimpleGraph, limit: int | None = None
) -> MorphismList:
    out = MorphismList()
    for vm in iter_monomorphisms(G, H):
        if limit is not None and len(out) >= limit:
            out.truncated = True
            break
        out.append(GraphMorphism(G, H, vm))
    return out


def exists_monomorphism(G: SimpleGraph, H: SimpleGraph) -> bool:
    return next(iter_monomorphisms(G, H), None) is not None


def spine_index(G: SimpleGraph) -> int:
    """Least ``n`` with a monomorphism ``G -> K_n``."""
    return G.vertex_count


def _is_complete(G: SimpleGraph) -> bool:
    n = G.vertex_count
    return G.edge_count == n * (n - 1) // 2


def _check_spine_leg(m: GraphMorphism, name: str) -> None:
    if not _is_complete(m.source):
        raise PreconditionViolation(f"{name} must start at a complete graph")
    if not m.is_monomorphism:
        raise PreconditionViolation(f"{name} is not a monomorphism")


def clique_sum_pushout(g: GraphMorphism, h: GraphMorphism) -> ProxyPushout:
    """Glue ``g.target`` and ``h.target`` along the common clique ``K_n``.

    The apex keeps the vertices of ``G`` at their indices; vertices of ``H``
    outside the image of ``h`` follow in increasing order.
    """
    _check_spine_leg(g, "g")
    _check_spine_leg(h, "h")
    if g.source != h.source:
        raise PreconditionViolation("g and h must share their source")
    G, H = g.target, h.target
    glued = {h(v): g(v) for v in range(g.source.vertex_count)}
    leg_h_map = []
    fresh = G.vertex_count
    for w in range(H.vertex_count):
        if w in glued:
            leg_h_map.append(glued[w])
        else:
            leg_h_map.append(fresh)
            fresh += 1
    apex = SimpleGraph(
        fresh, list(G.edges) + [(leg_h_map[u], leg_h_map[v]) for u, v in H.edges]
    )
    leg_g = GraphMorphism(G, apex, tuple(range(G.vertex_count)))
    leg_h = GraphMorphism(H, apex, tuple(leg_h_map))
    return ProxyPushout(apex, leg_g, leg_h)


def mediating_morphism(
    g: GraphMorphism, h: GraphMorphism, g2: GraphMorphism, h2: GraphMorphism
) -> GraphMorphism:
    """The arrow ``P(g, h) -> P(g2 o g, h2 o h)`` acting as ``g2`` and ``h2`` on the parts."""
    for name, m in (("g2", g2), ("h2", h2)):
        if not m.is_monomorphism:
            raise PreconditionViolation(f"{name} is not a monomorphism")
    inner = clique_sum_pushout(g, h)
    outer = clique_sum_pushout(compose(g2, g), compose(h2, h))
    image: list[int | None] = [None] * inner.apex.vertex_count
    for leg, ext, outer_leg in ((inner.leg_g, g2, outer.leg_g), (inner.leg_h, h2, outer.leg_h)):
        for v in range(leg.source.vertex_count):
            x, y = leg(v), outer_leg(ext(v))
            if image[x] is not None and image[x] != y:
                raise ConstructionInconsistent(f"apex vertex {x} sent to {image[x]} and {y}")
            image[x] = y
    m = GraphMorphism(inner.apex, outer.apex, tuple(image))
    if not m.is_monomorphism:
        raise ConstructionInconsistent("mediating map is not a monomorphism")
    return m


class GraphCategory(SpinedCategory[SimpleGraph, GraphMorphism]):
    """Simple graphs and monomorphisms, spine ``K_n``, clique sums as proxy pushouts."""

    name = "graph"

    def identity(self, obj):
        return identity_morphism(obj)

    def compose(self, g, f):
        return compose(g, f)

    def is_valid_morphism(self, source, target, data):
        m = GraphMorphism(source, target, tuple(data))
        return m.is_monomorphism

    def morphism_data(self, m):
        return m.vertex_map

    def spine(self, n):
        return complete_graph(n)

    def spine_index(self, obj):
        return spine_index(obj)

    def proxy_pushout(self, g, h):
        return clique_sum_pushout(g, h)

    def mediating(self, g, h, g2, h2):
        return mediating_morphism(g, h, g2, h2)

    def hom(self, source, target, limit=None):
        return enumerate_monomorphisms(source, target, limit)

    def exists_morphism(self, source, target):
        return exists_monomorphism(source, target)
