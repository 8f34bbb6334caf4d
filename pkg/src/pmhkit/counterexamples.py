"""Explicit perfect matchings of C_p□P_q and C_p□C_q with no Hamiltonian extension.

Vertices are named as in the grid convention of :mod:`pmhkit.graph`:
``w(r, s)`` is column ``r`` of the cycle C_p and position ``s`` along the
second factor.  In the torus constructions the rows ``s = 1..6`` are also
called ``a..f``, so ``b(i)`` is ``w(i, 2)`` and the edge ``L_i`` is
``b_i c_i``, ``R_i`` is ``d_i e_i``.  Column indices wrap modulo ``p``.

Outside the prescribed edges every construction uses a fixed completion so
outputs are reproducible; non-extendability does not depend on it.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Optional, Tuple

from .errors import InvalidParameterError, NoPerfectMatchingError
from .graph import Edge, Graph, cylinder, norm_edge, omega, torus
from .matchings import Matching

ODD_CUT = "odd-cut"
STRUCTURAL = "structural"

CYLINDER = "cylinder"
TORUS_Q3 = "torus-q3"
TORUS_GENERAL = "torus-general"

ROW_NAMES = "abcdef"

GridEdge = Tuple[Tuple[int, int], Tuple[int, int]]


@dataclass(frozen=True)
class CounterexampleSpec:
    """A constructed matching split into the prescribed part and the filler."""

    family: str
    p: int
    q: int
    listed_edges: Tuple[GridEdge, ...]
    completion: Tuple[GridEdge, ...]
    kind: str = STRUCTURAL

    def graph(self) -> Graph:
        return cylinder(self.p, self.q) if self.family == CYLINDER else torus(self.p, self.q)

    def _ids(self, es) -> List[Edge]:
        return [norm_edge(omega(*a, self.p, self.q), omega(*b, self.p, self.q)) for a, b in es]

    def listed_ids(self) -> List[Edge]:
        return sorted(self._ids(self.listed_edges))

    def matching(self) -> Matching:
        return Matching(self._ids(self.listed_edges) + self._ids(self.completion),
                        self.p * self.q)


def _wrap(i: int, p: int) -> int:
    return (i - 1) % p + 1


def _horizontal(p: int, s: int, parity: int) -> List[GridEdge]:
    """Edges w(i,s) w(i+1,s) for every i in [p] with i % 2 == parity."""
    return [((i, s), (_wrap(i + 1, p), s)) for i in range(1, p + 1) if i % 2 == parity]


def cylinder_spec(p: int, q: int) -> CounterexampleSpec:
    if p < 3 or q < 3:
        raise InvalidParameterError(f"cylinder needs p, q >= 3, got ({p}, {q})")
    if (p * q) % 2:
        raise NoPerfectMatchingError(f"C{p}□P{q} has odd order {p * q}")
    if p % 2:
        listed = [((i, q - 1), (i, q)) for i in range(1, p + 1)]
        # q is even: pair rows 1-2, 3-4, ..., q-3 - q-2 vertically
        rest = [((i, s), (i, s + 1)) for s in range(1, q - 2, 2) for i in range(1, p + 1)]
        return CounterexampleSpec(CYLINDER, p, q, tuple(listed), tuple(rest), kind=ODD_CUT)
    listed = []
    for i in range(1, p + 1, 2):
        listed.append(((i, q - 1), (i + 1, q - 1)))
        listed.append(((_wrap(i - 1, p), q), (i, q)))
    rest = [e for s in range(1, q - 1) for e in _horizontal(p, s, 1)]
    return CounterexampleSpec(CYLINDER, p, q, tuple(listed), tuple(rest), kind=STRUCTURAL)


def cylinder_matching(p: int, q: int) -> Tuple[Matching, str]:
    """Non-extendable perfect matching of C_p□P_q and its kind.

    Odd ``p`` gives the ``odd-cut`` kind: all rungs between the last two
    copies of C_p are matched.  Even ``p`` gives the ``structural`` kind.
    """
    spec = cylinder_spec(p, q)
    return spec.matching(), spec.kind


def odd_cut_side(p: int, q: int) -> List[int]:
    """Side of the odd cut used by :func:`cylinder_matching` for odd ``p``: rows ``s <= q-1``."""
    return [omega(r, s, p, q) for s in range(1, q) for r in range(1, p + 1)]


def torus_q3_spec(p: int) -> CounterexampleSpec:
    if p < 6 or p % 2:
        raise InvalidParameterError(f"torus_q3_matching needs even p >= 6, got {p}")
    a, b, c = 1, 2, 3
    listed = [
        ((1, a), (2, a)), ((1, b), (2, b)), ((1, c), (2, c)),
        ((3, a), (3, c)), ((3, b), (4, b)), ((4, a), (5, a)),
        ((4, c), (5, c)), ((5, b), (6, b)), ((6, a), (6, c)),
    ]
    rest = [((i, s), (i + 1, s)) for i in range(7, p, 2) for s in (a, b, c)]
    return CounterexampleSpec(TORUS_Q3, p, 3, tuple(listed), tuple(rest))


def torus_q3_matching(p: int) -> Matching:
    return torus_q3_spec(p).matching()


def torus_general_spec(p: int, q: int) -> CounterexampleSpec:
    if p < 6 or p % 2 or q < 5:
        raise InvalidParameterError(
            f"torus_general_matching needs even p >= 6 and q >= 5, got ({p}, {q})")
    a, b, c, d, e = 1, 2, 3, 4, 5
    f = 6 if q >= 6 else 1  # f coincides with a on C_5
    listed: List[GridEdge] = []
    for s in (a, f):
        listed += _horizontal(p, s, 0)
    for s in (b, e):
        listed += _horizontal(p, s, 1)
    listed += [((i, c), (i, d)) for i in range(1, p + 1)]
    seen, unique = set(), []
    for edge in listed:
        if edge not in seen:
            seen.add(edge)
            unique.append(edge)
    rest = [edge for s in range(7, q + 1) for edge in _horizontal(p, s, 1)]
    return CounterexampleSpec(TORUS_GENERAL, p, q, tuple(unique), tuple(rest))


def torus_general_matching(p: int, q: int) -> Matching:
    return torus_general_spec(p, q).matching()


def left_edges(p: int, q: int) -> List[Edge]:
    """The edges b_i c_i, i in [p]."""
    return [norm_edge(omega(i, 2, p, q), omega(i, 3, p, q)) for i in range(1, p + 1)]


def right_edges(p: int, q: int) -> List[Edge]:
    """The edges d_i e_i, i in [p]."""
    return [norm_edge(omega(i, 4, p, q), omega(i, 5, p, q)) for i in range(1, p + 1)]


OK = "ok"
NO_PERFECT_MATCHING = "no-perfect-matching"
PRIOR_WORK = "covered-by-prior-work"


@dataclass(frozen=True)
class Orientation:
    p: int
    q: int
    swapped: bool
    status: str


def normalize_orientation(p: int, q: int) -> Orientation:
    """Orient C_p□C_q so the first cycle is even and at least 6 when possible."""
    if p < 3 or q < 3:
        raise InvalidParameterError(f"need p, q >= 3, got ({p}, {q})")
    if 4 in (p, q):
        return Orientation(p, q, False, PRIOR_WORK)
    if (p * q) % 2:
        return Orientation(p, q, False, NO_PERFECT_MATCHING)
    if p % 2 == 0:
        return Orientation(p, q, False, OK)
    return Orientation(q, p, True, OK)


def known_counterexample(p: int, q: int) -> Optional[CounterexampleSpec]:
    """The construction that applies to C_p□C_q after normalisation, if any."""
    o = normalize_orientation(p, q)
    if o.status != OK:
        return None
    return torus_q3_spec(o.p) if o.q == 3 else torus_general_spec(o.p, o.q)
