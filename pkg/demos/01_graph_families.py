"""Graph families with exponentially many cliques.

The Moon-Moser graph with k triads has 3**k maximal cliques, which is what
makes clique *enumeration* exponential even though a single maximum clique
may be easy to find.  This script builds the first few family members and
checks the counts against the closed forms.
"""

from tricliq import (
    complete_multipartite,
    enumerate_maximal_cliques,
    enumerate_triangles,
    moon_moser,
)

print("Moon-Moser family")
print(f"{'k':>3} {'n':>4} {'m':>5} {'n(n-3)/2':>9} {'triangles':>10} {'maximal':>8} {'3^k':>6}")
for k in range(1, 5):
    g = moon_moser(k)
    cliques = enumerate_maximal_cliques(g)
    assert all(len(c) == k for c in cliques)
    print(f"{k:>3} {g.n:>4} {g.m:>5} {g.n * (g.n - 3) // 2:>9} "
          f"{len(enumerate_triangles(g)):>10} {len(cliques):>8} {3**k:>6}")

print()
print("A 13-vertex graph with parts 3/3/3/4 (the near-balanced relative):")
t13 = complete_multipartite([3, 3, 3, 4])
cliques = enumerate_maximal_cliques(t13)
print(f"  n={t13.n} m={t13.m} triangles={len(enumerate_triangles(t13))} "
      f"maximal cliques={len(cliques)} (= 3*3*3*4), all of size "
      f"{max(len(c) for c in cliques)}")

print()
print("Complement structure: dropping the edges of moon_moser(3) leaves")
comp = moon_moser(3).complement()
print(f"  {comp.m} edges forming the three independent triads as triangles:")
print(f"  {sorted(comp.edges)}")
