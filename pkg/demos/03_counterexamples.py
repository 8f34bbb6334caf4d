"""Perfect matchings of cylinders and tori that no Hamiltonian cycle extends.

Run: python demos/03_counterexamples.py
"""
from pmhkit import counterexamples as cx
from pmhkit.extension import CutCertificate, extend_matching, verify_odd_cut_certificate
from pmhkit.graph import cylinder, torus

# Cylinders C_p x P_q. For odd p the matching contains a whole odd cut.
for p, q in [(3, 4), (4, 3), (6, 4)]:
    m, kind = cx.cylinder_matching(p, q)
    out = extend_matching(cylinder(p, q), m)
    print(f"C{p}xP{q}: {kind:10s} -> {out.status} after {out.nodes_explored} nodes")

m, _ = cx.cylinder_matching(3, 4)
g = cylinder(3, 4)
cert = CutCertificate.from_side(g, cx.odd_cut_side(3, 4))
print("odd cut of size", len(cert.crossing), "lies inside M:", verify_odd_cut_certificate(g, m, cert))

# Tori C_p x C_3: nine listed edges, the rest completed column by column.
spec = cx.torus_q3_spec(6)
print("listed edges of C6xC3:", spec.listed_ids())
print("C6xC3 ->", extend_matching(torus(6, 3), spec.matching()).status)

# Tori C_p x C_q with q >= 5 use three edge families on rows a..f.
for p, q in [(6, 5), (6, 6), (8, 5)]:
    out = extend_matching(torus(p, q), cx.torus_general_matching(p, q))
    print(f"C{p}xC{q} -> {out.status}, prunes {out.prunes}")

# Orientation rules: which construction applies to C_p x C_q, if any.
for p, q in [(3, 6), (7, 6), (4, 7), (3, 5)]:
    o = cx.normalize_orientation(p, q)
    print(f"({p},{q}) -> ({o.p},{o.q}) swapped={o.swapped} status={o.status}")
