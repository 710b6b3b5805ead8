"""The triangulation functor and an independent exact treewidth oracle.

``delta(G)`` is the least value an S-functor takes on a pseudo-chordal object
receiving an arrow from ``G``.  Chordal graphs are pseudo-chordal and already
attain the minimum, and a chordal graph receiving a monomorphism from ``G``
induces a chordal completion of ``G`` of no larger clique number, so on graphs
the minimum runs over completions of ``G`` itself.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations
from typing import Any, Iterator, Protocol

from .category import NatCategory, SFunctor, SpinedCategory
from .chordal import clique_number, fill_in, min_completion_width
from .errors import BoundExceeded, BudgetExhausted
from .graph import GraphCategory, SimpleGraph, _bits
from .hypergraph import Hypergraph, primal_graph

ORACLE_BOUND = 16


class Convention(str, enum.Enum):
    PAPER = "paper"  # largest clique of the best completion
    STANDARD = "standard"  # usual treewidth, one less on non-empty graphs


@dataclass(frozen=True)
class WidthValue:
    value: int
    convention: Convention
    empty: bool = False

    def to(self, convention: Convention | str) -> WidthValue:
        convention = Convention(convention)
        if convention == self.convention or self.empty:
            return WidthValue(self.value, convention, self.empty)
        shift = 1 if convention == Convention.PAPER else -1
        return WidthValue(self.value + shift, convention, self.empty)


def delta_graph(G: SimpleGraph) -> WidthValue:
    return WidthValue(min_completion_width(G), Convention.PAPER, G.vertex_count == 0)


def treewidth_oracle(G: SimpleGraph, bound: int = ORACLE_BOUND) -> WidthValue:
    """Exact treewidth by dynamic programming over sets of eliminated vertices.

    ``best[S]`` is the least width of eliminating exactly ``S`` first; removing
    ``v`` after ``S`` costs the number of uneliminated vertices reachable from
    ``v`` through ``S``, which is ``v``'s degree at that point of elimination.
    """
    n = G.vertex_count
    if n > bound:
        raise BoundExceeded(f"{n} vertices exceeds the oracle bound {bound}")
    if n == 0:
        return WidthValue(0, Convention.STANDARD, True)
    adj = G.masks
    full = (1 << n) - 1

    def forward_degree(eliminated: int, v: int) -> int:
        seen = 1 << v
        frontier = 1 << v
        reach = 0
        while frontier:
            nxt = 0
            for u in _bits(frontier):
                nxt |= adj[u]
            nxt &= ~seen
            seen |= nxt
            reach |= nxt & ~eliminated
            frontier = nxt & eliminated
        return reach.bit_count()

    best = [0] * (1 << n)
    for S in range(1, 1 << n):
        value = n
        for v in _bits(S):
            prev = S & ~(1 << v)
            value = min(value, max(best[prev], forward_degree(prev, v)))
        best[S] = value
    return WidthValue(best[full], Convention.STANDARD)


class CandidateSource(Protocol):
    def candidates(self, obj: Any, level: int) -> Iterator[Any]:
        """Pseudo-chordal objects worth testing at S-functor value ``level``."""


@lru_cache(maxsize=1024)
def _completions(G: SimpleGraph) -> tuple[SimpleGraph, ...]:
    seen = {}
    for order in permutations(range(G.vertex_count)):
        H = fill_in(G, order).completed
        seen.setdefault(H, None)
    return tuple(seen)


class CompletionCandidates:
    """Chordal completions of ``G`` from every elimination ordering (small graphs)."""

    def candidates(self, obj: SimpleGraph, level: int) -> Iterator[SimpleGraph]:
        for H in _completions(obj):
            if clique_number(H) == level:
                yield H


class NatCandidates:
    """In Nat every object is pseudo-chordal: the only candidate at ``k`` is ``k``."""

    def candidates(self, obj: int, level: int) -> Iterator[int]:
        yield level


def delta_generic(
    instance: SpinedCategory,
    obj: Any,
    s: SFunctor,
    candidates: CandidateSource,
    budget: int | None = None,
) -> int:
    """Search levels ``0, 1, ...`` for a pseudo-chordal target receiving ``obj``.

    Terminates when each level offers finitely many candidates; the budget
    defaults to ``spine_index(obj)``, which always suffices when spine objects
    are pseudo-chordal with ``s(spine(n)) = n``.
    """
    if budget is None:
        budget = instance.spine_index(obj)
    for level in range(budget + 1):
        for target in candidates.candidates(obj, level):
            if s(target) == level and instance.exists_morphism(obj, target):
                return level
    raise BudgetExhausted(f"no pseudo-chordal target within budget {budget}")


omega = SFunctor("omega", clique_number)
delta = SFunctor("delta", lambda G: delta_graph(G).value)
nat_identity = SFunctor("identity", lambda n: n)
hyper_omega = SFunctor("omega-primal", lambda H: clique_number(primal_graph(H)))
hyper_delta = SFunctor("delta", lambda H: hypergraph_delta(H).value)

GRAPHS = GraphCategory()
NAT = NatCategory()


def check_domination(G: SimpleGraph, f: SFunctor) -> bool:
    return f(G) <= delta_graph(G).value


def hypergraph_delta(H: Hypergraph) -> WidthValue:
    """Width through the primal graph, whose cliques already cover every hyperedge."""
    return delta_graph(primal_graph(H))
