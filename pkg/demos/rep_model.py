"""Plane partitions as weight vectors.

Exterior powers of a diagonal matrix have the partitions in a rectangle as
an eigenbasis; the antidiagonal matrix K sends each basis vector to its
complement.  Exact arithmetic over Q(zeta_8) means every identity below is
checked with ``==`` rather than a tolerance.
"""

from boxcount.algebra import I
from boxcount.combinatorics import PlanePartition
from boxcount.repmodel import (
    chain_action_k,
    chain_eigenvalue_dq,
    conjugator,
    d_q_at,
    d_q_matrix,
    k_matrix,
    wedge_basis,
    wedge_power,
)

a, b = 2, 2
basis = wedge_basis(a, b)
w = wedge_power(d_q_matrix(a, b), a)
for k, p in enumerate(basis):
    print(f"x_{p.cols}: eigenvalue {w[k][k]}")

# K acts by a scalar times a permutation of the basis
wk = wedge_power(k_matrix(a, b), a)
for col, p in enumerate(basis):
    row = next(r for r in range(len(basis)) if wk[r, col])
    print(f"K x_{p.cols} = {wk[row, col]} x_{basis[row].cols}")

# on chain monomials the same operators read off volume and complementation
t = PlanePartition(((2, 1), (1, 0)), (2, 2, 2))
print("exponent of D_q on p_T:", chain_eigenvalue_dq(t))
scalar, image = chain_action_k(t)
print(f"K p_T = {scalar} p_T'  with T' = {image.heights}")

# the conjugator C turns K into D at s = -i
c = conjugator(2)
lhs = c @ k_matrix(2, 2) @ c.inverse()
print("C K C^-1 == D_-1 :", lhs == d_q_at(2, 2, -I))
