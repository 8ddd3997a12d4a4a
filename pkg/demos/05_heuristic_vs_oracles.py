"""Heuristic vs. the exact oracles on random graphs.

Every heuristic answer is a genuine clique and never beats the true maximum;
whether it *reaches* the maximum is an empirical question.  This script
measures the agreement rate over seeded G(n,p) samples, the same measurement
the acceptance suite reports, plus a three-way oracle cross-check.
"""

import random

from tricliq import (
    Graph,
    enumerate_maximal_cliques,
    extract_max_clique,
    maghout_cliques,
    max_clique_exact,
    moon_moser,
)


def gnp(n, p, seed):
    rng = random.Random(seed)
    return Graph(n, [(u, v) for u in range(1, n + 1)
                     for v in range(u + 1, n + 1) if rng.random() < p])


print("three-way oracle agreement on moon_moser(3):")
mm3 = moon_moser(3)
bk = enumerate_maximal_cliques(mm3)
mag = maghout_cliques(mm3)
print(f"  bron-kerbosch: {len(bk)} cliques, maghout: {len(mag)}, "
      f"identical sets: {set(bk) == set(mag)}, "
      f"omega: {max_clique_exact(mm3).omega}")

print("\nagreement sweep (40 graphs per cell):")
print(f"{'n':>4} {'p':>5} {'agree':>7} {'mean gap':>9}")
for n in (10, 16, 22):
    for p in (0.3, 0.5, 0.7):
        hits, gaps = 0, []
        for seed in range(40):
            g = gnp(n, p, seed)
            size = extract_max_clique(g).size
            omega = max_clique_exact(g).omega
            assert size <= omega
            hits += size == omega
            gaps.append(omega - size)
        print(f"{n:>4} {p:>5} {hits / 40:>7.2f} {sum(gaps) / 40:>9.2f}")

print("\nThe heuristic is exact on the structured families and on sparse"
      "\nrandom graphs, and degrades on dense ones; the oracles make the"
      "\ngap visible instead of letting it hide.")
