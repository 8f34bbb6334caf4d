"""Deciding the PMH and PH properties by exhaustive search.

Run: python demos/05_property_checks.py [--q4]
The --q4 flag adds the two million pairing check of C4 x C4 (a few minutes).
"""
import sys

from pmhkit.graph import build_complete, build_complete_bipartite, build_cycle, build_hypercube, torus
from pmhkit.properties import check_ph, check_pmh, verify_paper_claims

for g in [build_complete(4), build_complete_bipartite(3, 3), build_hypercube(3), build_cycle(6)]:
    rep = check_ph(g)
    print(f"PH  {g.label:6s} {rep.verdict:6s} checked {rep.total_checked}")

for p, q in [(3, 4), (6, 3), (4, 5), (3, 3)]:
    rep = check_pmh(torus(p, q))
    cx = rep.counterexample.sorted_pairs() if rep.counterexample else None
    print(f"PMH {rep.graph_label:6s} {rep.verdict:7s} first failure: {cx}")

# Symmetry: pair vertex 0 only with one vertex per orbit of its stabilizer.
rep = check_ph(build_hypercube(3), symmetry=True)
print("Q3 with symmetry:", rep.verdict, rep.symmetry)

# Worker count does not change the report.
a = check_pmh(torus(4, 3), workers=1).to_dict(canonical=True)
b = check_pmh(torus(4, 3), workers=3).to_dict(canonical=True)
print("same report with 1 and 3 workers:", a == b)

only = None if "--q4" in sys.argv else ["ph-K4", "ph-K3,3", "ph-Q3", "cylinder", "torus", "pmh", "iso"]
for r in verify_paper_claims(only=only, canonical=True):
    print(f"{r.status:5s} {r.item:22s} expected {r.expected:9s} observed {r.observed}")
