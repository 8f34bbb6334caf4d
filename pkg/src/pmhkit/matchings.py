"""Perfect matchings of a graph and pairings of its vertex set."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, FrozenSet, Iterable, Iterator, List, Optional, Tuple

from .errors import CompletionError, InvalidParameterError
from .graph import Edge, Graph, norm_edge

MATCHING_OF_G = "matching"
PAIRING = "pairing"


@dataclass(frozen=True)
class Matching:
    """A set of vertex pairs over the vertex set ``0..n-1``.

    Construction only normalises the pairs; use :func:`validate` to check
    disjointness, perfection and membership in a graph.
    """

    pairs: FrozenSet[Edge]
    n: int

    def __init__(self, pairs: Iterable[Tuple[int, int]], n: int):
        object.__setattr__(self, "pairs", frozenset(norm_edge(int(u), int(v)) for u, v in pairs))
        object.__setattr__(self, "n", int(n))

    def __len__(self):
        return len(self.pairs)

    def __iter__(self):
        return iter(sorted(self.pairs))

    def __contains__(self, e):
        return norm_edge(*e) in self.pairs

    @property
    def is_perfect(self) -> bool:
        return 2 * len(self.pairs) == self.n and len(self.covered()) == self.n

    def covered(self) -> set:
        return {x for e in self.pairs for x in e}

    def mate(self) -> Dict[int, int]:
        out: Dict[int, int] = {}
        for u, v in self.pairs:
            out[u] = v
            out[v] = u
        return out

    def sorted_pairs(self) -> List[Edge]:
        return sorted(self.pairs)

    def union(self, other: "Matching") -> "Matching":
        return Matching(self.pairs | other.pairs, self.n)


def _disjoint(m: Matching) -> bool:
    return 2 * len(m.pairs) == len(m.covered())


def validate(m: Matching, g: Graph, mode: str = MATCHING_OF_G) -> bool:
    """True iff ``m`` is a perfect matching of ``g`` (or a pairing of V(g))."""
    if m.n != g.n:
        raise InvalidParameterError(f"matching over {m.n} vertices, graph has {g.n}")
    if mode not in (MATCHING_OF_G, PAIRING):
        raise InvalidParameterError(f"unknown validation mode {mode!r}")
    if any(not (0 <= u < g.n and 0 <= v < g.n) or u == v for u, v in m.pairs):
        return False
    if not _disjoint(m) or 2 * len(m.pairs) != g.n:
        return False
    if mode == MATCHING_OF_G:
        return all(g.has_edge(u, v) for u, v in m.pairs)
    return True


def _match_from(adj, n: int, mate: List[int]) -> Iterator[List[Edge]]:
    """Backtrack over completions of ``mate`` (-1 = free), lowest free vertex first."""
    chosen: List[Edge] = []

    def rec(start: int) -> Iterator[List[Edge]]:
        v = start
        while v < n and mate[v] != -1:
            v += 1
        if v == n:
            yield list(chosen)
            return
        for w in adj[v]:
            if mate[w] == -1 and w != v:
                mate[v] = w
                mate[w] = v
                chosen.append((v, w) if v < w else (w, v))
                yield from rec(v + 1)
                chosen.pop()
                mate[v] = mate[w] = -1

    yield from rec(0)


def enumerate_perfect_matchings(g: Graph) -> Iterator[Matching]:
    """Every perfect matching of ``g`` exactly once, in a fixed order.

    Odd-order graphs give an empty stream.
    """
    if g.n % 2:
        return
    for edges in _match_from(g.adj, g.n, [-1] * g.n):
        yield Matching(edges, g.n)


def count_perfect_matchings(g: Graph) -> int:
    return sum(1 for _ in _match_from(g.adj, g.n, [-1] * g.n)) if g.n % 2 == 0 else 0


def double_factorial(k: int) -> int:
    out = 1
    while k > 1:
        out *= k
        k -= 2
    return out


def pairing_count(n: int) -> int:
    return double_factorial(n - 1)


def enumerate_pairings(n: int, shard: Optional[Tuple[int, int]] = None,
                       fixed: Optional[Edge] = None) -> Iterator[Matching]:
    """All ``(n-1)!!`` pairings of ``0..n-1``.

    ``shard=(k, w)`` keeps every ``w``-th item starting at item ``k``.
    ``fixed`` restricts the stream to pairings containing that pair; the
    relative order of the survivors is unchanged.
    """
    for _, m in enumerate_pairings_indexed(n, shard=shard, fixed=fixed):
        yield m


def iter_pairing_mates(n: int, fixed: Optional[Edge] = None) -> Iterator[List[int]]:
    """Pairings of ``0..n-1`` as mate arrays, in :func:`enumerate_pairings` order.

    The same list object is yielded every time; copy it to keep it.
    """
    if n < 2 or n % 2:
        raise InvalidParameterError(f"pairings need a positive even count, got {n}")
    mate = [-1] * n
    if fixed is not None:
        a, b = norm_edge(*fixed)
        if not (0 <= a < b < n):
            raise InvalidParameterError(f"fixed pair {fixed} out of range")
        mate[a], mate[b] = b, a

    def rec(v: int) -> Iterator[List[int]]:
        while v < n and mate[v] != -1:
            v += 1
        if v == n:
            yield mate
            return
        for w in range(v + 1, n):
            if mate[w] == -1:
                mate[v] = w
                mate[w] = v
                yield from rec(v + 1)
                mate[v] = mate[w] = -1

    yield from rec(0)


def from_mates(mate: List[int]) -> Matching:
    return Matching(((v, w) for v, w in enumerate(mate) if v < w), len(mate))


def enumerate_pairings_indexed(n: int, shard: Optional[Tuple[int, int]] = None,
                               fixed: Optional[Edge] = None) -> Iterator[Tuple[int, Matching]]:
    """Like :func:`enumerate_pairings` but yields ``(index, pairing)``.

    The index is the position in the unsharded stream.
    """
    k, w = shard if shard is not None else (0, 1)
    if w < 1 or not (0 <= k < w):
        raise InvalidParameterError(f"bad shard {shard}")
    for i, mate in enumerate(iter_pairing_mates(n, fixed)):
        if i % w == k:
            yield i, from_mates(mate)


def complete_matching(g: Graph, partial: Matching) -> Matching:
    """First perfect matching of ``g`` containing ``partial`` in search order."""
    if partial.n != g.n:
        raise InvalidParameterError(f"matching over {partial.n} vertices, graph has {g.n}")
    mate = [-1] * g.n
    for u, v in partial.pairs:
        if not g.has_edge(u, v):
            raise CompletionError(f"({u}, {v}) is not an edge of {g.label or 'the graph'}",
                                  partial=partial)
        if mate[u] != -1 or mate[v] != -1:
            raise CompletionError(f"pair ({u}, {v}) overlaps another pair", partial=partial)
        mate[u], mate[v] = v, u
    if g.n % 2:
        raise CompletionError("odd order graph has no perfect matching", partial=partial)
    for extra in _match_from(g.adj, g.n, mate):
        return Matching(list(partial.pairs) + extra, g.n)
    raise CompletionError("no perfect matching contains the given pairs", partial=partial)
