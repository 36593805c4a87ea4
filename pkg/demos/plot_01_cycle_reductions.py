"""
Tight cycles, blow-ups and the reduction to five vertices
=========================================================

A copy of C_l minus an edge sits inside the 2-blow-up of a shorter cycle.
This script builds the pieces and checks each containment.
"""

from codegree_lab import (blow_up, explicit_c7_embedding, find_embedding, inductive_embedding,
                          tight_cycle, tight_cycle_minus, verify_embedding)

# Tight cycles: consecutive triples taken cyclically.
C5 = tight_cycle(5)
C5m = tight_cycle_minus(5)
print("C5 edges: ", C5.edges)
print("C5- edges:", C5m.edges)

# C6 minus an edge lives in the 2-blow-up of a single edge (complete 2+2+2 tripartite).
C3x2 = blow_up(tight_cycle(3), 2).result
emb = find_embedding(tight_cycle_minus(6), C3x2)
print("\nC6- into C3(2):", emb.mapping, verify_embedding(emb))

# The hand-written map of C7 minus an edge into C5-(2).
c7 = explicit_c7_embedding()
print("C7- into C5-(2):", c7.mapping, verify_embedding(c7))

# Longer cycles: found by search, no closed form needed.
for l in range(8, 13):
    emb = inductive_embedding(l)
    print(f"C{l}- into C{l - 3}-(2):", emb.mapping)
