"""
Finding C5 minus an edge with nice pictures
===========================================

Random hypergraphs with minimum codegree at least 0.3 n are searched with the
nice-picture driver; the report shows the nested sets S_k, the pair sets P_k
and the assembled copy.
"""

import math

from codegree_lab import find_c5_minus, mubayi_rodl, random_hypergraph

n, eps = 80, 0.3
H = random_hypergraph(n, 0.35, seed=2, min_codegree_target=math.ceil(eps * n))
report = find_c5_minus(H, eps, seed=2)
print(report.text())

# The same driver on a host without any copy: the sets S_k run dry and no
# two pair sets ever meet.
free = mubayi_rodl(2).result
print(find_c5_minus(free, eps, extended=True).text())
