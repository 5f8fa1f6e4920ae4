"""
Exhaustively classifying the exponent-two fields
================================================

Quadratic extensions of F_q(x) in which the infinite place ramifies
have ideal class number h = 2^(t-1) (q even) or 2^(t-2) (q odd), with t
the number of ramified places, exactly when the class group has
exponent two.  That pins the ramification per (q, h), leaves finitely
many feasible (q, g, h) cells, and each cell is small enough to scan
completely.  This script runs the whole search and prints the result.
"""

import time

from quadff import classification_table, full_classification

###############################################################################
# Scan every feasible cell for h in {2, 4, 8, 16, 32}.  Results are
# cached under ~/.cache/quadff (or $QUADFF_CACHE_DIR), so a second run
# is instant; use_cache=False forces the full recomputation.
t0 = time.perf_counter()
cells = full_classification(jobs=1)
dt = time.perf_counter() - t0

n_curves = sum(c.n_candidates for c in cells)
n_classes = sum(len(c.classes) for c in cells)
print(f"scanned {n_curves} curves in {len(cells)} cells "
      f"({dt:.1f}s) -> {n_classes} isomorphism classes\n")

###############################################################################
# The table groups classes by class number.  Each line shows a
# canonical representative together with t, the L-polynomial and the
# place counts N_1..N_g.  19 classes appear: the 14 previously
# reported, plus 5 whose branch points are all rational (four elliptic
# curves with full rational 2-torsion at q = 3, 5, 7, 9 and one genus-2
# field over F_5 ramified at every rational place).
print(classification_table(cells), end="")

###############################################################################
# Every accepted class satisfies N_1 <= h, and the enumeration itself
# double-checks each curve's L-polynomial against the functional
# equation, the Hasse-Weil bound, the Riemann hypothesis and the small-
# genus closed forms; any violation would be recorded per cell.
bad = [f for c in cells for f in c.property_failures]
print(f"\nproperty violations across all curves: {len(bad)}")
