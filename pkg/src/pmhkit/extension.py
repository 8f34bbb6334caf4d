"""Hamiltonian extension of a perfect matching or pairing.

Given a graph ``g`` and a perfect matching ``m`` of ``g`` (pmh mode) or a
pairing of V(g) (ph mode), look for a perfect matching ``N`` of ``g``,
disjoint from ``m``, such that ``m ∪ N`` is a single cycle through every
vertex.

The search contracts every ``m``-pair to a supernode.  While ``N`` is being
built, the supernodes joined so far form vertex-disjoint paths; the solver
keeps these classes as a disjoint-set forest specialised to paths, where the
only data a class needs is its two free endpoints (``end[v]`` is the other
end of the path that ends at ``v``).  Joining two endpoints of the same class
closes a cycle and is only allowed for the very last ``N``-edge.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Dict, Iterable, Iterator, List, Optional, Sequence, Tuple

from .errors import BudgetExceeded, InvalidCertificateError, InvalidParameterError
from .graph import Edge, Graph, cut_edges, fiber, layer, norm_edge
from .matchings import MATCHING_OF_G, PAIRING, Matching, enumerate_perfect_matchings, validate

EXTENDED = "Extended"
REFUTED = "Refuted"
PMH = "pmh"
PH = "ph"


@dataclass
class SearchOptions:
    """Optional pruning rules and budgets.  Short-cycle rejection is always on."""

    cut_parity: bool = True
    forced_edges: bool = True
    node_budget: int = 0
    time_budget: float = 0.0
    auto_cuts: bool = True


@dataclass
class ExtensionOutcome:
    status: str
    witness: Optional[Matching]
    cycle: Optional[List[int]]
    nodes_explored: int
    prunes: Dict[str, int]
    elapsed: float

    @property
    def extended(self) -> bool:
        return self.status == EXTENDED

    def to_dict(self, timing: bool = True) -> dict:
        out = {
            "status": self.status,
            "witness": [list(e) for e in self.witness.sorted_pairs()] if self.witness else None,
            "cycle": self.cycle,
            "nodes_explored": self.nodes_explored,
            "prunes": dict(sorted(self.prunes.items())),
        }
        if timing:
            out["elapsed"] = round(self.elapsed, 6)
        return out


@dataclass(frozen=True)
class CutCertificate:
    """Vertex side ``S`` together with the edges of the cut it induces."""

    side: frozenset
    crossing: frozenset

    @classmethod
    def from_side(cls, g: Graph, side: Iterable[int]) -> "CutCertificate":
        s = frozenset(side)
        return cls(s, frozenset(cut_edges(g, s)))

    def to_dict(self) -> dict:
        return {"side": sorted(self.side), "crossing": [list(e) for e in sorted(self.crossing)]}


def grid_cuts(g: Graph) -> List[frozenset]:
    """Cuts registered automatically for cylinder and torus graphs.

    Every copy of either factor is one side; for a path factor every prefix
    of copies is a side as well.
    """
    shape = g.grid
    if shape is None:
        return []
    sides = []
    for s in range(1, shape.q + 1):
        sides.append(frozenset(layer(shape, s)))
    for r in range(1, shape.p + 1):
        sides.append(frozenset(fiber(shape, r)))
    if not shape.q_cyclic:
        for k in range(2, shape.q):
            sides.append(frozenset(v for s in range(1, k + 1) for v in layer(shape, s)))
    if not shape.p_cyclic:
        for k in range(2, shape.p):
            sides.append(frozenset(v for r in range(1, k + 1) for v in fiber(shape, r)))
    # drop duplicates and trivial sides, keep a stable order
    seen, out = set(), []
    for side in sides:
        if 0 < len(side) < g.n and side not in seen:
            seen.add(side)
            out.append(side)
    return out


class ExtensionSolver:
    """Reusable search over one graph; ``solve`` takes an M-mate array."""

    def __init__(self, g: Graph, cuts: Optional[Sequence[Iterable[int]]] = None,
                 options: Optional[SearchOptions] = None):
        self.g = g
        self.options = options or SearchOptions()
        sides = [frozenset(c) for c in (cuts or [])]
        if self.options.auto_cuts:
            sides += [c for c in grid_cuts(g) if c not in sides]
        self.sides = sides if self.options.cut_parity else []
        # per-vertex crossing edges of every side, before removing M
        n = g.n
        self._cross_all: List[List[Tuple[int, int]]] = [[] for _ in range(n)]
        self._member: List[List[int]] = [[] for _ in range(n)]
        self._open0 = [0] * len(self.sides)
        for c, side in enumerate(self.sides):
            for v in side:
                self._member[v].append(c)
                for w in g.adj[v]:
                    if w not in side:
                        self._cross_all[v].append((c, w))
                        self._cross_all[w].append((c, v))
                        self._open0[c] += 1
        self.nodes = 0
        self.prunes = {"short_cycle": 0, "cut_parity": 0, "dead_vertex": 0, "forced": 0}

    def _stats(self) -> Dict[str, int]:
        out = {"short_cycle": self.prunes["short_cycle"]}
        if self.options.cut_parity:
            out["cut_parity"] = self.prunes["cut_parity"]
        if self.options.forced_edges:
            out["dead_vertex"] = self.prunes["dead_vertex"]
            out["forced"] = self.prunes["forced"]
        return out

    def solve(self, mm: List[int]) -> Optional[List[Edge]]:
        """First extension ``N`` of the pairing given by ``mm`` or None."""
        g = self.g
        n = g.n
        adj = g.adj
        opts = self.options
        use_forced = opts.forced_edges
        node_budget = opts.node_budget
        deadline = time.monotonic() + opts.time_budget if opts.time_budget > 0 else 0.0
        prunes = self.prunes

        nm = [-1] * n
        end = list(mm)
        chosen: List[Edge] = []

        # cut bookkeeping: open crossing edges and free vertices per side
        sides = self.sides
        ncut = len(sides)
        member = self._member
        open_ = list(self._open0)
        free_in = [len(side) for side in sides]
        if ncut:
            cross = []
            for v, lst in enumerate(self._cross_all):
                mv = mm[v]
                kept = [t for t in lst if t[1] != mv]
                if len(kept) != len(lst) and v < mv:
                    for c, z in lst:
                        if z == mv:
                            open_[c] -= 1
                cross.append(kept)
        for c in range(ncut):
            if open_[c] == 0 and free_in[c] % 2:
                prunes["cut_parity"] += 1
                self.nodes += 1
                return None

        state = {"nodes": self.nodes}

        def take(v: int, w: int) -> bool:
            """Assign N-edge vw; False if a cut with no open edge has odd free count."""
            a, b = end[v], end[w]
            end[a] = b
            end[b] = a
            if not ncut:
                nm[v] = w
                nm[w] = v
                return True
            for c in member[v]:
                free_in[c] -= 1
            for c in member[w]:
                free_in[c] -= 1
            emptied = []
            # w is still free while v's edges close, so vw is counted once
            for x, y in ((v, w), (w, v)):
                for c, z in cross[x]:
                    if nm[z] == -1:
                        open_[c] -= 1
                        if open_[c] == 0:
                            emptied.append(c)
                nm[x] = y
            for c in emptied:
                if free_in[c] % 2:
                    return False
            return True

        def untake(v: int, w: int) -> None:
            for x in (w, v):
                nm[x] = -1
                if ncut:
                    for c, z in cross[x]:
                        if nm[z] == -1 and z != x:
                            open_[c] += 1
                    for c in member[x]:
                        free_in[c] += 1
            end[end[v]] = v
            end[end[w]] = w

        def rec(rem: int) -> bool:
            nodes = state["nodes"] + 1
            state["nodes"] = nodes
            if node_budget and nodes > node_budget:
                raise BudgetExceeded(f"node budget {node_budget} exceeded",
                                     {"nodes_explored": nodes})
            if deadline and nodes & 1023 == 0 and time.monotonic() > deadline:
                raise BudgetExceeded(f"time budget {opts.time_budget}s exceeded",
                                     {"nodes_explored": nodes})
            if rem == 0:
                return True
            pivot = -1
            if use_forced:
                forced = -1
                for v in range(n):
                    if nm[v] != -1:
                        continue
                    if pivot < 0:
                        pivot = v
                    cnt = 0
                    mv = mm[v]
                    ev = end[v]
                    for w in adj[v]:
                        if nm[w] == -1 and w != mv and (w != ev or rem == 1):
                            cnt += 1
                            if cnt > 1:
                                break
                    if cnt == 0:
                        prunes["dead_vertex"] += 1
                        return False
                    if cnt == 1 and forced < 0:
                        forced = v
                if forced >= 0 and forced != pivot:
                    prunes["forced"] += 1
                    pivot = forced
            else:
                pivot = 0
                while nm[pivot] != -1:
                    pivot += 1
            v = pivot
            mv = mm[v]
            for w in adj[v]:
                if nm[w] != -1 or w == mv:
                    continue
                if end[v] == w and rem != 1:
                    prunes["short_cycle"] += 1
                    continue
                if take(v, w):
                    chosen.append((v, w) if v < w else (w, v))
                    if rec(rem - 1):
                        return True
                    chosen.pop()
                else:
                    prunes["cut_parity"] += 1
                untake(v, w)
            return False

        try:
            found = rec(n // 2)
        finally:
            self.nodes = state["nodes"]
        return sorted(chosen) if found else None


def _check_input(g: Graph, m: Matching, mode: str) -> None:
    if mode not in (PMH, PH):
        raise InvalidParameterError(f"unknown extension mode {mode!r}")
    if m.n != g.n:
        raise InvalidParameterError(f"matching over {m.n} vertices, graph has {g.n}")
    vmode = MATCHING_OF_G if mode == PMH else PAIRING
    if not validate(m, g, vmode):
        what = "perfect matching of the graph" if mode == PMH else "pairing of the vertex set"
        raise InvalidParameterError(f"input is not a {what}")


def mate_array(m: Matching) -> List[int]:
    mm = [-1] * m.n
    for u, v in m.pairs:
        mm[u] = v
        mm[v] = u
    return mm


def trace_cycle(m: Matching, nmatch: Matching) -> List[int]:
    """Vertex sequence of ``m ∪ nmatch`` from vertex 0, leaving along ``m``."""
    a, b = m.mate(), nmatch.mate()
    if not a:
        return []
    seq = [0]
    cur, use_m = 0, True
    while True:
        cur = a[cur] if use_m else b[cur]
        use_m = not use_m
        if cur == 0:
            return seq
        seq.append(cur)


def extend_matching(g: Graph, m: Matching, mode: str = PMH,
                    options: Optional[SearchOptions] = None,
                    cuts: Optional[Sequence[Iterable[int]]] = None) -> ExtensionOutcome:
    """Search for ``N`` with ``m ∪ N`` a Hamiltonian cycle whose non-``m`` edges lie in ``g``.

    Returns Refuted only after the search space is exhausted; running out
    of budget raises :class:`BudgetExceeded`.
    """
    _check_input(g, m, mode)
    t0 = time.perf_counter()
    solver = ExtensionSolver(g, cuts=cuts, options=options)
    found = solver.solve(mate_array(m))
    elapsed = time.perf_counter() - t0
    if found is None:
        return ExtensionOutcome(REFUTED, None, None, solver.nodes, solver._stats(), elapsed)
    witness = Matching(found, g.n)
    return ExtensionOutcome(EXTENDED, witness, trace_cycle(m, witness), solver.nodes,
                            solver._stats(), elapsed)


def is_hamiltonian_union(m: Matching, n: Matching, vcount: int) -> bool:
    """True iff ``m`` and ``n`` are disjoint and ``m ∪ n`` is one cycle on ``vcount`` vertices."""
    if m.n != vcount or n.n != vcount:
        raise InvalidParameterError("matchings are over a different vertex count")
    for x in (m, n):
        if 2 * len(x.pairs) != vcount or len(x.covered()) != vcount:
            raise InvalidParameterError("both matchings must be perfect")
    if m.pairs & n.pairs or vcount < 4:
        return False
    return len(trace_cycle(m, n)) == vcount


def verify_odd_cut_certificate(g: Graph, m: Matching, cert: CutCertificate) -> bool:
    """True iff the certificate's cut is nonempty, odd, and lies entirely in ``m``.

    A Hamiltonian cycle crosses every cut an even number of times, so such
    an ``m`` has no extension.
    """
    if m.n != g.n or not m.is_perfect:
        raise InvalidParameterError("m must be a perfect matching over V(g)")
    if any(not 0 <= v < g.n for v in cert.side):
        raise InvalidCertificateError("certificate side has vertices outside the graph")
    if cert.crossing != frozenset(cut_edges(g, cert.side)):
        raise InvalidCertificateError("crossing edges do not match the cut induced by the side")
    if not cert.crossing or len(cert.crossing) % 2 == 0:
        return False
    return all(e in m.pairs for e in cert.crossing)


def enumerate_extensions(g: Graph, m: Matching, mode: str = PMH) -> Iterator[Matching]:
    """Every extension of ``m``, by brute force over perfect matchings of ``g - m``.

    Independent of :class:`ExtensionSolver`; used as its reference oracle.
    """
    _check_input(g, m, mode)
    rest = g.remove_edges(m.pairs)
    for nmatch in enumerate_perfect_matchings(rest):
        if is_hamiltonian_union(m, nmatch, g.n):
            yield nmatch
