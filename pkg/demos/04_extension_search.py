"""Searching for a second matching N that closes M into one Hamiltonian cycle.

Run: python demos/04_extension_search.py
"""
from pmhkit.counterexamples import torus_general_matching
from pmhkit.errors import BudgetExceeded
from pmhkit.extension import (PH, SearchOptions, enumerate_extensions, extend_matching,
                              is_hamiltonian_union)
from pmhkit.graph import build_complete, build_cycle, build_hypercube, torus
from pmhkit.matchings import Matching

m = Matching([(0, 1), (2, 3), (4, 5)], 6)
out = extend_matching(build_cycle(6), m)
print(out.status, "N =", out.witness.sorted_pairs(), "cycle:", out.cycle)
print("union is Hamiltonian:", is_hamiltonian_union(m, out.witness, 6))

# In PH mode M may use non-edges; only N has to come from the graph.
anti = Matching([(0, 7), (1, 6), (2, 5), (3, 4)], 8)
print("Q3 antipodal pairing:", extend_matching(build_hypercube(3), anti, PH).status)

# The naive oracle lists every extension.
k4 = Matching([(0, 1), (2, 3)], 4)
print("K4 extensions:", [n.sorted_pairs() for n in enumerate_extensions(build_complete(4), k4)])

# Optional prunes shrink the tree but never change the answer or the witness.
g, bad = torus(8, 6), torus_general_matching(8, 6)
for opts in [SearchOptions(cut_parity=False, forced_edges=False), SearchOptions()]:
    out = extend_matching(g, bad, options=opts)
    print(f"cut_parity={opts.cut_parity} forced={opts.forced_edges}: "
          f"{out.status} in {out.nodes_explored} nodes")

# A budget stops the search with an error, never with a false refutation.
try:
    extend_matching(g, bad, options=SearchOptions(node_budget=100))
except BudgetExceeded as exc:
    print("budget hit:", exc.progress)
