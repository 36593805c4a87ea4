"""
The iterated tripartite construction
====================================

Three copies of a hypergraph plus every crossing triple, repeated from a
single edge. Densities decrease towards 1/4 and small depths contain no C_l
minus an edge for l not divisible by three.
"""

from codegree_lab import density_sequence, freeness_check, mubayi_rodl
from codegree_lab.hypergraph import degree_profile

for row in density_sequence(4):
    print(f"depth {row.depth}: n={row.n:4d}  {row.ratio:>16}  = {row.density_decimal:.4f}")

H1 = mubayi_rodl(1).result
print("\nminimum codegree at depth 1:", degree_profile(H1).min_codegree)
for entry in freeness_check(H1, [4, 5, 6, 7, 8, 9]).entries:
    print(f"C{entry.length}-: {entry.status}")

H2 = mubayi_rodl(2).result
print("\ndepth 2, C5-:", freeness_check(H2, [5]).status(5))
