"""
Codegree Turán numbers at small n
=================================

Exact values by branch and bound for n <= 6, and local-search lower bounds
beyond that.
"""

from codegree_lab import ex2_exact, ex2_heuristic, mubayi_rodl, tight_cycle_minus

F = tight_cycle_minus(5)
for n in (4, 5, 6):
    res = ex2_exact(n, F)
    print(f"ex2({n}, C5-) = {res.value}  ({res.num_classes} extremal classes)")
    print("  witness:", res.witness.edges)

start = mubayi_rodl(1).result
for n, initial in ((9, start), (12, None)):
    res = ex2_heuristic(n, F, iterations=300, seed=1, initial=initial)
    print(f"ex2({n}, C5-) >= {res.value}  with {len(res.witness.edges)} edges")
