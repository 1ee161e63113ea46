"""Exact determinants and adjugates on small integer matrices."""
from maxdet import IntMatrix, adjugate, det_bareiss, det_cofactor
from maxdet.errors import ArithmeticOverflowError

# The 3x3 seed used to start the greedy growth
a3 = IntMatrix.from_rows([[1, 0, 1], [1, 1, 0], [0, 1, 1]])
print("det(A3) by Bareiss :", det_bareiss(a3))
print("det(A3) by Laplace :", det_cofactor(a3))

# m @ adj(m) is det(m) times the identity
adj = adjugate(a3)
print("adj(A3) =", adj.rows)
print("A3 @ adj(A3) =", (a3 @ adj).rows)

# 64-bit checking is on by default; width=None switches to unbounded integers
big = [[1 << 40, 1], [1, 1 << 40]]
try:
    det_bareiss(big)
except ArithmeticOverflowError as exc:
    print("checked arithmetic:", exc)
print("unbounded:", det_bareiss(big, width=None))
