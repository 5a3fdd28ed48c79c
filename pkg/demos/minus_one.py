"""Evaluating generating functions at q = -1.

Setting q = -1 weights each partition by (-1)^volume, so the value is a
signed count.  For plane partitions in a box that signed count equals the
number of self-complementary ones, and for the symmetric class it counts
the transpose-complementary ones.
"""

from itertools import product

from boxcount import count_class, n_count_q
from boxcount.algebra import eval_at_minus_one
from boxcount.formulas import tau_polynomial

print(" box        N(-1)  #self-complementary")
for box in product(range(1, 4), repeat=3):
    signed = eval_at_minus_one(n_count_q(*box))
    direct = count_class(box, "SC", "bruteforce").count
    print(f" {box}  {str(signed):>6}  {direct:>6}")

print()
print(" a c   tau-poly(-1)  #transpose-complementary")
for a, c in product(range(1, 4), repeat=2):
    tp = tau_polynomial(a, c)
    direct = count_class((a, a, c), "TC", "bruteforce").count
    print(f" {a} {c}   {tp(-1):>6}        {direct:>6}")
