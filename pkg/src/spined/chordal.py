"""Chordal graphs, clique numbers and elimination-ordering completions.

Widths in this module use the max-clique convention: the width of a
completion is the size of its largest clique, one more than the usual
treewidth convention on non-empty graphs.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Iterator, Sequence

from .errors import BoundExceeded, PreconditionViolation
from .graph import SimpleGraph, _bits

EXHAUSTIVE_BOUND = 8


def perfect_elimination_ordering(G: SimpleGraph) -> list[int] | None:
    """A PEO of ``G`` found by maximum cardinality search, or None.

    MCS numbers vertices greedily by the count of already-numbered
    neighbours (ties to the lowest index); the reverse of the visit order is a
    PEO exactly when ``G`` is chordal, which is then verified directly.
    """
    n = G.vertex_count
    adj = G.masks
    weight = [0] * n
    unvisited = set(range(n))
    visit = []
    for _ in range(n):
        v = max(unvisited, key=lambda x: (weight[x], -x))
        unvisited.remove(v)
        visit.append(v)
        for u in _bits(adj[v]):
            if u in unvisited:
                weight[u] += 1
    order = visit[::-1]
    return order if _is_peo(G, order) else None


def _is_peo(G: SimpleGraph, order: Sequence[int]) -> bool:
    position = {v: i for i, v in enumerate(order)}
    adj = G.masks
    for v in order:
        later = [u for u in _bits(adj[v]) if position[u] > position[v]]
        if not later:
            continue
        parent = min(later, key=position.__getitem__)
        rest = sum(1 << u for u in later if u != parent)
        if rest & ~adj[parent]:
            return False
    return True


def is_chordal(G: SimpleGraph) -> bool:
    return perfect_elimination_ordering(G) is not None


def is_chordal_bruteforce(G: SimpleGraph, bound: int = 10) -> bool:
    """Scan every cycle of length at least four for a chord.

    Slow on purpose: it shares nothing with the elimination-ordering test and
    serves as its oracle.
    """
    n = G.vertex_count
    if n > bound:
        raise BoundExceeded(f"{n} vertices exceeds the brute-force bound {bound}")
    return all(_has_chord(G, cycle) for cycle in simple_cycles(G, min_length=4))


def simple_cycles(G: SimpleGraph, min_length: int = 3) -> Iterator[list[int]]:
    """Each cycle once: it starts at its least vertex and ``c[1] < c[-1]``."""
    adj = G.masks

    def walk(path: list[int], on_path: int) -> Iterator[list[int]]:
        start, last = path[0], path[-1]
        for w in _bits(adj[last]):
            if w == start and len(path) >= min_length and path[1] < path[-1]:
                yield list(path)
            elif w > start and not on_path >> w & 1:
                path.append(w)
                yield from walk(path, on_path | 1 << w)
                path.pop()

    for s in range(G.vertex_count):
        yield from walk([s], 1 << s)


def _has_chord(G: SimpleGraph, cycle: list[int]) -> bool:
    k = len(cycle)
    for i, j in combinations(range(k), 2):
        if j - i >= 2 and not (i == 0 and j == k - 1) and G.has_edge(cycle[i], cycle[j]):
            return True
    return False


def maximal_cliques(G: SimpleGraph) -> Iterator[list[int]]:
    """Bron-Kerbosch with Tomita pivoting over bitsets."""
    adj = G.masks

    def expand(clique: list[int], cand: int, done: int) -> Iterator[list[int]]:
        if not cand and not done:
            yield list(clique)
            return
        pivot = max(_bits(cand | done), key=lambda u: (cand & adj[u]).bit_count())
        for v in _bits(cand & ~adj[pivot]):
            clique.append(v)
            yield from expand(clique, cand & adj[v], done & adj[v])
            clique.pop()
            cand &= ~(1 << v)
            done |= 1 << v

    if G.vertex_count:
        yield from expand([], (1 << G.vertex_count) - 1, 0)


def clique_number(G: SimpleGraph) -> int:
    """Size of the largest complete subgraph; 0 for the empty graph."""
    return max((len(c) for c in maximal_cliques(G)), default=0)


@dataclass(frozen=True)
class ChordalCompletion:
    base: SimpleGraph
    fill_edges: tuple[tuple[int, int], ...]
    completed: SimpleGraph


def _check_ordering(G: SimpleGraph, ordering: Sequence[int]) -> None:
    if sorted(ordering) != list(range(G.vertex_count)):
        raise PreconditionViolation(f"{list(ordering)} is not an ordering of {G.vertex_count} vertices")


def fill_in(G: SimpleGraph, ordering: Sequence[int]) -> ChordalCompletion:
    """Eliminate vertices in order, turning each one's later neighbours into a clique."""
    _check_ordering(G, ordering)
    adj = list(G.masks)
    remaining = (1 << G.vertex_count) - 1
    fill = set()
    for v in ordering:
        remaining &= ~(1 << v)
        later = adj[v] & remaining
        for u in _bits(later):
            missing = later & ~adj[u] & ~(1 << u)
            for w in _bits(missing):
                fill.add((min(u, w), max(u, w)))
            adj[u] |= later & ~(1 << u)
    fill_edges = tuple(sorted(fill))
    return ChordalCompletion(G, fill_edges, G.add_edges(fill_edges))


def elimination_width(G: SimpleGraph, ordering: Sequence[int]) -> int:
    """Largest clique of ``fill_in(G, ordering).completed``.

    In the completed graph the ordering is perfect, so every maximal clique is
    a vertex together with its later neighbours at elimination time.
    """
    _check_ordering(G, ordering)
    adj = list(G.masks)
    remaining = (1 << G.vertex_count) - 1
    width = 0
    for v in ordering:
        remaining &= ~(1 << v)
        later = adj[v] & remaining
        width = max(width, later.bit_count() + 1)
        for u in _bits(later):
            adj[u] |= later & ~(1 << u)
    return width


def _eliminate(adj: list[int], v: int, remaining: int) -> tuple[list[int], int]:
    remaining &= ~(1 << v)
    later = adj[v] & remaining
    out = list(adj)
    for u in _bits(later):
        out[u] = (out[u] | later) & ~(1 << u)
    return out, remaining


def _exhaustive(G: SimpleGraph) -> int:
    """Minimum over every elimination ordering, no pruning."""
    best = G.vertex_count

    def visit(adj: list[int], remaining: int, width: int) -> None:
        nonlocal best
        if not remaining:
            best = min(best, width)
            return
        for v in _bits(remaining):
            step = max(width, (adj[v] & remaining).bit_count())
            nxt, rest = _eliminate(adj, v, remaining)
            visit(nxt, rest, step)

    visit(list(G.masks), (1 << G.vertex_count) - 1, 0)
    return best + 1


def _degeneracy(adj: list[int], remaining: int) -> int:
    """Max over the min-degree deletion sequence of the minimum degree."""
    best = 0
    while remaining:
        v = min(_bits(remaining), key=lambda x: (adj[x] & remaining).bit_count())
        best = max(best, (adj[v] & remaining).bit_count())
        remaining &= ~(1 << v)
    return best


def _greedy_min_fill(adj: list[int], remaining: int) -> int:
    width = 0
    while remaining:
        def fill_cost(x):
            nb = adj[x] & remaining & ~(1 << x)
            missing = sum((nb & ~adj[u] & ~(1 << u)).bit_count() for u in _bits(nb))
            return missing, nb.bit_count(), x

        v = min(_bits(remaining), key=fill_cost)
        width = max(width, (adj[v] & remaining & ~(1 << v)).bit_count())
        adj, remaining = _eliminate(adj, v, remaining)
    return width


def _branch_and_bound(G: SimpleGraph) -> int:
    """Depth-first search over orderings, smallest degree first.

    Widths here count later neighbours (clique size minus one).  A branch is
    cut once its running width, or a degeneracy lower bound for the rest,
    reaches the incumbent.  A simplicial vertex is eliminated without
    branching since doing so never hurts.
    """
    full = (1 << G.vertex_count) - 1
    best = _greedy_min_fill(list(G.masks), full)

    def search(adj: list[int], remaining: int, width: int) -> None:
        nonlocal best
        size = remaining.bit_count()
        if size - 1 <= width:
            best = min(best, width)
            return
        if max(width, _degeneracy(adj, remaining)) >= best:
            return
        order = sorted(_bits(remaining), key=lambda x: ((adj[x] & remaining).bit_count(), x))
        for v in order:
            nb = adj[v] & remaining
            if all(nb & ~adj[u] & ~(1 << u) == 0 for u in _bits(nb)):
                order = [v]
                break
        for v in order:
            step = max(width, (adj[v] & remaining).bit_count())
            if step >= best:
                continue
            nxt, rest = _eliminate(adj, v, remaining)
            search(nxt, rest, step)

    search(list(G.masks), full, 0)
    return best + 1


@lru_cache(maxsize=8192)
def min_completion_width(G: SimpleGraph, method: str = "auto") -> int:
    """Smallest possible largest clique over all chordal completions of ``G``.

    ``method`` is ``"exhaustive"`` (every ordering), ``"bnb"`` or ``"auto"``,
    which picks exhaustive search up to eight vertices.
    """
    if G.vertex_count == 0:
        return 0
    if method == "auto":
        method = "exhaustive" if G.vertex_count <= EXHAUSTIVE_BOUND else "bnb"
    if method == "exhaustive":
        return _exhaustive(G)
    if method == "bnb":
        return _branch_and_bound(G)
    raise ValueError(f"unknown method {method!r}")
