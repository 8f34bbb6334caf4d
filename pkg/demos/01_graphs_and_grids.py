"""Building graphs: cycles, paths, hypercubes and their Cartesian products.

Run: python demos/01_graphs_and_grids.py
"""
from pmhkit import graph as G

# A torus C6 x C3: 18 vertices, every vertex has degree 4.
t = G.torus(6, 3)
print(t.label, "vertices:", t.n, "edges:", t.m, "4-regular:", t.is_regular(4))

# Vertices are integers; the grid coordinate (r, s) maps to (s-1)*p + (r-1).
c = G.grid_coord(7, 6, 3)
print("vertex 7 sits at r =", c.r, "s =", c.s)
print("back again:", G.grid_index(c))

# omega wraps both indices, which keeps formulas like w_{i+1,s} readable.
print("w(7,1) wraps to w(1,1) =", G.omega(7, 1, 6, 3))

# Layers (fixed s) and fibres (fixed r) are the natural cuts of a grid.
print("layer s=2:", G.layer(t.grid, 2))
print("fibre r=1:", G.fiber(t.grid, 1))

# A cylinder C4 x P3 has boundary rows of degree 3.
cyl = G.cylinder(4, 3)
print(cyl.label, "degree sequence:", G.degree_sequence(cyl))

# C4 x C4 is the 4-dimensional hypercube; find an explicit isomorphism.
mapping = G.find_isomorphism(G.torus(4, 4), G.build_hypercube(4))
print("C4xC4 -> Q4:", [format(mapping[v], "04b") for v in range(16)])

# Automorphisms fixing vertex 0 of Q4 split the rest by Hamming weight.
orbits = G.stabilizer_orbits(G.build_hypercube(4), 0)
print("orbit sizes around 0:", sorted(len(o) for o in orbits))
