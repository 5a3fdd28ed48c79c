"""Two actions of the Klein four-group on six points.

They have the same permutation character, so no trace computation can tell
them apart, yet their orbit decompositions differ.  Counting fixed points
is therefore weaker than knowing the action.
"""

from boxcount.repmodel import klein_report

kr = klein_report()
for n, (chi, orbits) in enumerate(zip(kr.characters, kr.orbit_sizes), 1):
    print(f"action {n}: fixed points per element {chi}, orbit sizes {orbits}")
print("isomorphic as G-sets:", kr.isomorphic)
