"""Cut parity: every Hamiltonian cycle crosses an edge cut an even number of times.

On C6 x C5, take perfect matchings M that contain every edge between rows c
and d. Row c is then cut off by the edges to row d (all in M, an even number)
and the edges L_i = b_i c_i. So any extension N must use an even number of L
edges, and likewise of the R edges d_i e_i.

Run: python demos/06_cut_parity.py
"""
import random

from pmhkit.counterexamples import left_edges, right_edges
from pmhkit.extension import extend_matching
from pmhkit.graph import Graph, omega, torus
from pmhkit.matchings import Matching, enumerate_perfect_matchings

p, q = 6, 5
g = torus(p, q)
cd = [tuple(sorted((omega(i, 3, p, q), omega(i, 4, p, q)))) for i in range(1, p + 1)]
used = {v for e in cd for v in e}
rest = [v for v in range(g.n) if v not in used]
idx = {v: i for i, v in enumerate(rest)}
h = Graph(len(rest), [(idx[u], idx[v]) for u, v in g.edges if u in idx and v in idx])
ms = [Matching(cd + [(rest[u], rest[v]) for u, v in pm.pairs], g.n)
      for pm in enumerate_perfect_matchings(h)]
print(len(ms), "matchings contain every c_i d_i edge")

L, R = set(left_edges(p, q)), set(right_edges(p, q))
rng = random.Random(1)
for m in rng.sample(ms, 5):
    out = extend_matching(g, m)
    if out.extended:
        n = out.witness.pairs
        print(f"extended: |L n N| = {len(L & n)}, |R n N| = {len(R & n)}")
    else:
        print("not extendable")
