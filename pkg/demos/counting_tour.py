"""A short walk through counting plane partitions in a box.

Run with ``python demos/counting_tour.py``.
"""

from boxcount import count_q, enum_plane_partitions, n_count, n_count_q
from boxcount.algebra import expand
from boxcount.combinatorics import format_plane_partition

# the 20 plane partitions in a 2x2x2 box, as height matrices
box = (2, 2, 2)
pps = list(enum_plane_partitions(box))
print(len(pps), "plane partitions in", box)
for t in pps[:5]:
    print(format_plane_partition(t).replace("\n", " / "), " volume", t.volume)
print("...")

# closed form against enumeration
for box in [(1, 1, 1), (2, 2, 2), (3, 3, 3), (2, 3, 4), (4, 4, 4)]:
    print(box, n_count(*box))

# the q-version keeps track of volume: coefficient of q^k counts partitions with k cubes
p = expand(n_count_q(3, 3, 3))
print("N(3,3,3)_q =", p)
print("same polynomial from the transfer matrix:", p == count_q((3, 3, 3)))
print("palindromic:", p.is_palindromic(27), " value at q=1:", p(1))

# big boxes are fine for the formula even though enumeration would take forever
print("N(10,10,10) =", n_count(10, 10, 10))
