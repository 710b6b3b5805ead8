"""Hypergraphs and the spined category ``HGrph_m``.

Arrows are injective vertex maps sending every hyperedge *into* some
hyperedge of the target.  The spine object on ``n`` vertices carries every
pair plus the full vertex set as hyperedges, so any hypergraph on ``n``
vertices embeds into it and its primal graph is ``K_n``.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Any, Iterable, Iterator

from .category import ProxyPushout, SpinedCategory
from .errors import ConstructionInconsistent, PreconditionViolation, RangeError
from .graph import SimpleGraph, _bits


@dataclass(frozen=True)
class Hypergraph:
    vertex_count: int
    hyperedges: tuple[tuple[int, ...], ...] = ()

    def __post_init__(self):
        n = self.vertex_count
        if n < 0:
            raise RangeError(f"negative vertex count {n}")
        canonical = set()
        for edge in self.hyperedges:
            edge = tuple(sorted(set(edge)))
            if not edge:
                raise ValueError("hyperedges must be non-empty")
            if edge[0] < 0 or edge[-1] >= n:
                raise RangeError(f"hyperedge {edge} out of range for {n} vertices")
            canonical.add(edge)
        object.__setattr__(self, "hyperedges", tuple(sorted(canonical)))

    @cached_property
    def edge_masks(self) -> tuple[int, ...]:
        return tuple(sum(1 << v for v in e) for e in self.hyperedges)

    @cached_property
    def incidence(self) -> tuple[tuple[int, ...], ...]:
        """For each vertex, the masks of the hyperedges through it."""
        out = [[] for _ in range(self.vertex_count)]
        for edge, mask in zip(self.hyperedges, self.edge_masks):
            for v in edge:
                out[v].append(mask)
        return tuple(tuple(x) for x in out)

    def describe(self) -> dict[str, Any]:
        return {"vertices": self.vertex_count, "hyperedges": [list(e) for e in self.hyperedges]}


def from_graph(G: SimpleGraph) -> Hypergraph:
    return Hypergraph(G.vertex_count, G.edges)


def primal_graph(H: Hypergraph) -> SimpleGraph:
    """Join two distinct vertices whenever some hyperedge holds both."""
    edges = set()
    for e in H.hyperedges:
        edges.update(combinations(e, 2))
    return SimpleGraph(H.vertex_count, edges)


def hyper_spine(n: int) -> Hypergraph:
    edges = list(combinations(range(n), 2))
    if n >= 1:
        edges.append(tuple(range(n)))
    return Hypergraph(n, edges)


@dataclass(frozen=True)
class HypergraphMorphism:
    source: Hypergraph
    target: Hypergraph
    vertex_map: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "vertex_map", tuple(self.vertex_map))

    def __call__(self, v: int) -> int:
        return self.vertex_map[v]

    @property
    def is_homomorphism(self) -> bool:
        if len(self.vertex_map) != self.source.vertex_count:
            return False
        if any(not 0 <= x < self.target.vertex_count for x in self.vertex_map):
            return False
        targets = self.target.edge_masks
        for edge in self.source.hyperedges:
            image = sum(1 << self.vertex_map[v] for v in edge)
            if not any(image & ~t == 0 for t in targets):
                return False
        return True

    @property
    def is_monomorphism(self) -> bool:
        return len(set(self.vertex_map)) == len(self.vertex_map) and self.is_homomorphism

    def describe(self) -> dict[str, Any]:
        return {
            "source": self.source.describe(),
            "target": self.target.describe(),
            "map": list(self.vertex_map),
        }


def hyper_identity(H: Hypergraph) -> HypergraphMorphism:
    return HypergraphMorphism(H, H, tuple(range(H.vertex_count)))


def hyper_compose(g: HypergraphMorphism, f: HypergraphMorphism) -> HypergraphMorphism:
    """``g o f``."""
    if f.target != g.source:
        raise PreconditionViolation("target of the first arrow is not the source of the second")
    return HypergraphMorphism(f.source, g.target, tuple(g.vertex_map[v] for v in f.vertex_map))


def iter_hyper_monomorphisms(A: Hypergraph, B: Hypergraph) -> Iterator[tuple[int, ...]]:
    """Injective containment-preserving maps ``A -> B``, lexicographically.

    A partial assignment survives only while the image of every hyperedge
    assigned so far still fits inside some hyperedge of ``B``.
    """
    n, m = A.vertex_count, B.vertex_count
    if n > m:
        return
    targets = B.edge_masks
    # hyperedges of A grouped by their largest vertex, checked once complete
    last = [[] for _ in range(n)]
    partial = [[] for _ in range(n)]
    for edge in A.hyperedges:
        last[edge[-1]].append(edge)
        for v in edge[:-1]:
            partial[v].append(edge)
    assignment = [0] * n

    def fits(edge: tuple[int, ...], upto: int) -> bool:
        image = sum(1 << assignment[v] for v in edge if v <= upto)
        return any(image & ~t == 0 for t in targets)

    def extend(v: int, used: int) -> Iterator[tuple[int, ...]]:
        if v == n:
            yield tuple(assignment)
            return
        for w in range(m):
            if used >> w & 1:
                continue
            assignment[v] = w
            if all(fits(e, v) for e in last[v]) and all(fits(e, v) for e in partial[v]):
                yield from extend(v + 1, used | 1 << w)

    yield from extend(0, 0)


def enumerate_hyper_monomorphisms(
    A: Hypergraph, B: Hypergraph, limit: int | None = None
) -> list[HypergraphMorphism]:
    out = []
    for vm in iter_hyper_monomorphisms(A, B):
        if limit is not None and len(out) >= limit:
            break
        out.append(HypergraphMorphism(A, B, vm))
    return out


def _check_spine_leg(m: HypergraphMorphism, name: str) -> None:
    if m.source != hyper_spine(m.source.vertex_count):
        raise PreconditionViolation(f"{name} must start at a spine object")
    if not m.is_monomorphism:
        raise PreconditionViolation(f"{name} is not a monomorphism")


def hyper_clique_sum(g: HypergraphMorphism, h: HypergraphMorphism) -> ProxyPushout:
    """Glue two hypergraphs along the images of a common spine object.

    Indexing mirrors the graph case: the vertices of ``g.target`` keep their
    numbers and the unglued vertices of ``h.target`` follow in order.
    """
    _check_spine_leg(g, "g")
    _check_spine_leg(h, "h")
    if g.source != h.source:
        raise PreconditionViolation("g and h must share their source")
    A, B = g.target, h.target
    glued = {h(v): g(v) for v in range(g.source.vertex_count)}
    leg_h_map = []
    fresh = A.vertex_count
    for w in range(B.vertex_count):
        if w in glued:
            leg_h_map.append(glued[w])
        else:
            leg_h_map.append(fresh)
            fresh += 1
    edges = list(A.hyperedges) + [tuple(leg_h_map[v] for v in e) for e in B.hyperedges]
    apex = Hypergraph(fresh, edges)
    return ProxyPushout(
        apex,
        HypergraphMorphism(A, apex, tuple(range(A.vertex_count))),
        HypergraphMorphism(B, apex, tuple(leg_h_map)),
    )


def hyper_mediating(g, h, g2, h2) -> HypergraphMorphism:
    for name, m in (("g2", g2), ("h2", h2)):
        if not m.is_monomorphism:
            raise PreconditionViolation(f"{name} is not a monomorphism")
    inner = hyper_clique_sum(g, h)
    outer = hyper_clique_sum(hyper_compose(g2, g), hyper_compose(h2, h))
    image: list[int | None] = [None] * inner.apex.vertex_count
    for leg, ext, outer_leg in ((inner.leg_g, g2, outer.leg_g), (inner.leg_h, h2, outer.leg_h)):
        for v in range(leg.source.vertex_count):
            x, y = leg(v), outer_leg(ext(v))
            if image[x] is not None and image[x] != y:
                raise ConstructionInconsistent(f"apex vertex {x} sent to {image[x]} and {y}")
            image[x] = y
    return HypergraphMorphism(inner.apex, outer.apex, tuple(image))


class HypergraphCategory(SpinedCategory[Hypergraph, HypergraphMorphism]):
    name = "hypergraph"

    def identity(self, obj):
        return hyper_identity(obj)

    def compose(self, g, f):
        return hyper_compose(g, f)

    def is_valid_morphism(self, source, target, data):
        return HypergraphMorphism(source, target, tuple(data)).is_monomorphism

    def morphism_data(self, m):
        return m.vertex_map

    def spine(self, n):
        return hyper_spine(n)

    def spine_index(self, obj):
        return obj.vertex_count

    def proxy_pushout(self, g, h):
        return hyper_clique_sum(g, h)

    def mediating(self, g, h, g2, h2):
        return hyper_mediating(g, h, g2, h2)

    def hom(self, source, target, limit=None):
        return enumerate_hyper_monomorphisms(source, target, limit)


def all_hypergraphs(n: int, max_edges: int | None = None) -> Iterable[Hypergraph]:
    """Every hypergraph on ``n`` labelled vertices (exponential; tiny ``n`` only)."""
    subsets = [s for s in range(1, 1 << n)]
    for choice in range(1 << len(subsets)):
        picked = [subsets[i] for i in _bits(choice)]
        if max_edges is not None and len(picked) > max_edges:
            continue
        yield Hypergraph(n, [tuple(_bits(s)) for s in picked])
