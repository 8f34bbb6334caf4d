"""Simple undirected graphs and the families built from cycles and paths.

Vertices are the integers ``0..n-1``.  Product graphs built from cycles and
paths keep a :class:`GridShape` so callers can recover the 1-based grid
coordinates ``(r, s)`` of a vertex, ``r`` indexing the first factor and
``s`` the second.  The linear layout is ``index = (s - 1) * p + (r - 1)``,
so that each fixed ``s`` (a copy of the first factor) is a contiguous block.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, Iterable, Iterator, List, Optional, Tuple

from .errors import InvalidParameterError

Edge = Tuple[int, int]


def norm_edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class GridShape:
    """Dimensions of a product of two cycles/paths."""

    p: int
    q: int
    p_cyclic: bool
    q_cyclic: bool


class Graph:
    """Immutable simple undirected graph.

    Equality compares vertex count and edge set only; ``label`` and ``grid``
    are descriptive.
    """

    __slots__ = ("n", "edges", "adj", "label", "grid", "_adjset")

    def __init__(self, n: int, edges: Iterable[Edge], label: str = "",
                 grid: Optional[GridShape] = None):
        if n < 0:
            raise InvalidParameterError(f"vertex count must be >= 0, got {n}")
        es = set()
        for u, v in edges:
            u, v = int(u), int(v)
            if u == v:
                raise InvalidParameterError(f"loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise InvalidParameterError(f"edge ({u}, {v}) out of range for n={n}")
            es.add(norm_edge(u, v))
        nbrs: List[List[int]] = [[] for _ in range(n)]
        for u, v in es:
            nbrs[u].append(v)
            nbrs[v].append(u)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "edges", frozenset(es))
        object.__setattr__(self, "adj", tuple(tuple(sorted(x)) for x in nbrs))
        object.__setattr__(self, "_adjset", tuple(frozenset(x) for x in nbrs))
        object.__setattr__(self, "label", label)
        object.__setattr__(self, "grid", grid)

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.edges == other.edges

    def __hash__(self):
        return hash((self.n, self.edges))

    def __reduce__(self):
        return (Graph, (self.n, sorted(self.edges), self.label, self.grid))

    def __repr__(self):
        name = self.label or "Graph"
        return f"<{name}: n={self.n}, m={self.m}>"

    @property
    def m(self) -> int:
        return len(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._adjset[u]

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def degrees(self) -> List[int]:
        return [len(a) for a in self.adj]

    def sorted_edges(self) -> List[Edge]:
        return sorted(self.edges)

    def is_regular(self, k: Optional[int] = None) -> bool:
        ds = set(self.degrees())
        if len(ds) > 1:
            return False
        return k is None or not ds or ds == {k}

    def remove_edges(self, edges: Iterable[Edge], label: str = "") -> "Graph":
        gone = {norm_edge(u, v) for u, v in edges}
        return Graph(self.n, (e for e in self.edges if e not in gone),
                     label=label or self.label, grid=self.grid)

    def relabel(self, label: str) -> "Graph":
        return Graph(self.n, self.edges, label=label, grid=self.grid)


# -- constructors -----------------------------------------------------------

def build_cycle(n: int) -> Graph:
    if n < 3:
        raise InvalidParameterError(f"a cycle needs at least 3 vertices, got {n}")
    return Graph(n, ((i, (i + 1) % n) for i in range(n)), label=f"C{n}")


def build_path(n: int) -> Graph:
    if n < 1:
        raise InvalidParameterError(f"a path needs at least 1 vertex, got {n}")
    return Graph(n, ((i, i + 1) for i in range(n - 1)), label=f"P{n}")


def build_complete(n: int) -> Graph:
    if n < 1:
        raise InvalidParameterError(f"complete graph needs at least 1 vertex, got {n}")
    return Graph(n, ((i, j) for i in range(n) for j in range(i + 1, n)), label=f"K{n}")


def build_complete_bipartite(a: int, b: int) -> Graph:
    if a < 1 or b < 1:
        raise InvalidParameterError("both sides of K_{a,b} must be nonempty")
    return Graph(a + b, ((i, a + j) for i in range(a) for j in range(b)),
                 label=f"K{a},{b}")


def build_hypercube(d: int) -> Graph:
    """Q_d on binary labels; vertex ``x`` is adjacent to ``x ^ (1 << k)``."""
    if d < 1:
        raise InvalidParameterError(f"hypercube dimension must be >= 1, got {d}")
    n = 1 << d
    return Graph(n, ((x, x ^ (1 << k)) for x in range(n) for k in range(d)
                     if x < x ^ (1 << k)), label=f"Q{d}")


def _factor_kind(g: Graph) -> Optional[bool]:
    """True for a cycle, False for a path, None otherwise."""
    n = g.n
    if n >= 3 and g.edges == build_cycle(n).edges:
        return True
    if n >= 1 and g.edges == build_path(n).edges:
        return False
    return None


def cartesian_product(g: Graph, h: Graph, label: str = "") -> Graph:
    """G□H with vertex (u_r, v_s) stored at index ``s * |G| + r`` (0-based)."""
    if g.n == 0 or h.n == 0:
        raise InvalidParameterError("cartesian product of an empty graph")
    p, q = g.n, h.n
    edges = []
    for s in range(q):
        for u, w in g.edges:
            edges.append((s * p + u, s * p + w))
    for r in range(p):
        for u, w in h.edges:
            edges.append((u * p + r, w * p + r))
    gk, hk = _factor_kind(g), _factor_kind(h)
    grid = GridShape(p, q, gk, hk) if gk is not None and hk is not None else None
    name = label or f"{g.label or 'G'}x{h.label or 'H'}"
    return Graph(p * q, edges, label=name, grid=grid)


def torus(p: int, q: int) -> Graph:
    """C_p□C_q."""
    return cartesian_product(build_cycle(p), build_cycle(q))


def cylinder(p: int, q: int) -> Graph:
    """C_p□P_q."""
    return cartesian_product(build_cycle(p), build_path(q))


# -- grid coordinates -------------------------------------------------------

@dataclass(frozen=True)
class GridCoord:
    """1-based position ``(r, s)`` in a ``p`` by ``q`` product."""

    r: int
    s: int
    p: int
    q: int

    def __post_init__(self):
        if self.p < 1 or self.q < 1:
            raise InvalidParameterError(f"bad grid dimensions {self.p}x{self.q}")
        if not (1 <= self.r <= self.p and 1 <= self.s <= self.q):
            raise InvalidParameterError(
                f"coordinate ({self.r}, {self.s}) outside 1..{self.p} x 1..{self.q}")


def grid_index(c: GridCoord) -> int:
    return (c.s - 1) * c.p + (c.r - 1)


def grid_coord(v: int, p: int, q: int) -> GridCoord:
    if p < 1 or q < 1 or not (0 <= v < p * q):
        raise InvalidParameterError(f"vertex {v} outside a {p}x{q} grid")
    return GridCoord(v % p + 1, v // p + 1, p, q)


def omega(r: int, s: int, p: int, q: int) -> int:
    """Vertex id of w_{r,s}; ``r`` and ``s`` wrap cyclically."""
    return grid_index(GridCoord((r - 1) % p + 1, (s - 1) % q + 1, p, q))


def layer(shape: GridShape, s: int) -> List[int]:
    """Vertices with second coordinate ``s`` (a copy of the first factor)."""
    return [(s - 1) * shape.p + r for r in range(shape.p)]


def fiber(shape: GridShape, r: int) -> List[int]:
    """Vertices with first coordinate ``r`` (a copy of the second factor)."""
    return [s * shape.p + (r - 1) for s in range(shape.q)]


# -- structure queries ------------------------------------------------------

def degree_sequence(g: Graph) -> List[int]:
    return sorted(g.degrees(), reverse=True)


def is_connected(g: Graph) -> bool:
    if g.n == 0:
        return True
    seen = {0}
    stack = [0]
    while stack:
        v = stack.pop()
        for w in g.adj[v]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == g.n


def cut_edges(g: Graph, side: Iterable[int]) -> List[Edge]:
    """Edges of ``g`` with exactly one endpoint in ``side``."""
    s = set(side)
    return sorted(e for e in g.edges if (e[0] in s) != (e[1] in s))


def _search_order(g: Graph) -> List[int]:
    order: List[int] = []
    seen = set()
    for root in sorted(range(g.n), key=lambda v: (-g.degree(v), v)):
        if root in seen:
            continue
        seen.add(root)
        queue = [root]
        while queue:
            v = queue.pop(0)
            order.append(v)
            for w in g.adj[v]:
                if w not in seen:
                    seen.add(w)
                    queue.append(w)
    return order


def iter_isomorphisms(g: Graph, h: Graph,
                      fixed: Optional[Dict[int, int]] = None) -> Iterator[Dict[int, int]]:
    """Yield every isomorphism ``g -> h`` extending ``fixed``, as dicts."""
    if g.n != h.n or g.m != h.m or degree_sequence(g) != degree_sequence(h):
        return
    order = _search_order(g)
    fmap: Dict[int, int] = {}
    used = set()
    for a, b in (fixed or {}).items():
        if b in used or g.degree(a) != h.degree(b):
            return
        fmap[a] = b
        used.add(b)
    for a in fmap:
        for c in fmap:
            if a < c and g.has_edge(a, c) != h.has_edge(fmap[a], fmap[c]):
                return
    order = [v for v in order if v not in fmap]

    def consistent(x: int, y: int) -> bool:
        if g.degree(x) != h.degree(y):
            return False
        for z, fz in fmap.items():
            if g.has_edge(x, z) != h.has_edge(y, fz):
                return False
        return True

    def rec(i: int) -> Iterator[Dict[int, int]]:
        if i == len(order):
            yield dict(fmap)
            return
        x = order[i]
        anchor = next((z for z in g.adj[x] if z in fmap), None)
        cands = h.adj[fmap[anchor]] if anchor is not None else range(h.n)
        for y in cands:
            if y in used or not consistent(x, y):
                continue
            fmap[x] = y
            used.add(y)
            yield from rec(i + 1)
            del fmap[x]
            used.discard(y)

    yield from rec(0)


def find_isomorphism(g: Graph, h: Graph) -> Optional[Dict[int, int]]:
    return next(iter_isomorphisms(g, h), None)


def is_isomorphism(g: Graph, h: Graph, mapping: Dict[int, int]) -> bool:
    """Check a candidate bijection edge by edge."""
    if g.n != h.n or sorted(mapping) != list(range(g.n)):
        return False
    if sorted(mapping.values()) != list(range(h.n)):
        return False
    image = {norm_edge(mapping[u], mapping[v]) for u, v in g.edges}
    return image == set(h.edges)


def stabilizer_orbits(g: Graph, v: int) -> List[List[int]]:
    """Orbits of the automorphisms fixing ``v`` acting on the other vertices."""
    parent = list(range(g.n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for auto in iter_isomorphisms(g, g, fixed={v: v}):
        for x, y in auto.items():
            rx, ry = find(x), find(y)
            if rx != ry:
                parent[max(rx, ry)] = min(rx, ry)
    groups: Dict[int, List[int]] = {}
    for x in range(g.n):
        if x != v:
            groups.setdefault(find(x), []).append(x)
    return sorted(groups.values())
