"""Perfect matchings of a graph versus pairings of its vertex set.

Run: python demos/02_matchings_and_pairings.py
"""
from pmhkit.graph import build_cycle, build_hypercube, torus
from pmhkit.matchings import (Matching, PAIRING, complete_matching, count_perfect_matchings,
                              double_factorial, enumerate_pairings, enumerate_perfect_matchings,
                              validate)

c6 = build_cycle(6)
for m in enumerate_perfect_matchings(c6):
    print("C6 matching:", m.sorted_pairs())

print("Q3 has", count_perfect_matchings(build_hypercube(3)), "perfect matchings")
print("C4xC4 has", count_perfect_matchings(torus(4, 4)), "perfect matchings")

# A pairing may use non-edges. Eight vertices have 7!! = 105 of them.
print("pairings of 8 points:", sum(1 for _ in enumerate_pairings(8)), "=", double_factorial(7))

antipodal = Matching([(0, 7), (1, 6), (2, 5), (3, 4)], 8)
q3 = build_hypercube(3)
print("antipodal pairs form a matching of Q3?", validate(antipodal, q3))
print("...but a valid pairing?", validate(antipodal, q3, PAIRING))

# Shards split the pairing stream round-robin; together they cover it once.
parts = [list(enumerate_pairings(6, shard=(k, 3))) for k in range(3)]
print("shard sizes for 15 pairings over 3 workers:", [len(p) for p in parts])

# Grow a partial matching into a perfect one.
print("completed:", complete_matching(c6, Matching([(1, 2)], 6)).sorted_pairs())
