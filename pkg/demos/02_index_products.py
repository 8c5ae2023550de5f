"""The index algebra: harmonic and q-shuffle products.

Products of values correspond to products of indices.  The harmonic
product is the plain quasi-shuffle; the q-shuffle adds carry terms
whose coefficients live in the prime field and vanish unless q-1
divides the carried weight.
"""

from ffmzv import Index, IndexAlgebra, field

for q in (2, 3):
    A = IndexAlgebra(field(q))
    one = A.mono((1,))
    print(f"== q = {q} ==")
    print(f"harmonic   (1) * (1) = {A.harmonic(one, one)}")
    print(f"q-shuffle  (1) * (1) = {A.qshuffle(one, one)}")
    print()

A3 = IndexAlgebra(field(3))
print("The carry coefficients at q = 3 for s = n = 2:")
for j in range(1, 4):
    print(f"  Delta[{j}] = {A3.delta(2, 2, j)}")
print(f"so the q-shuffle (2) * (2) = {A3.qshuffle(A3.mono((2,)), A3.mono((2,)))}")

print()
print("Auxiliary operators used by the relation generators:")
print(f"  (1,2) boxplus (3,1)      = {A3.boxplus(A3.mono((1, 2)), A3.mono((3, 1)))}")
print(f"  alpha_1;(2) of ()        = {A3.alpha(1, (2,), 'harmonic', A3.one())}")
print(f"  D_(2) applied to (2)     = {A3.d_op(Index((2,)), A3.mono((2,)))}")

print()
print("Both products are commutative, unital, and weight-graded;")
P = A3.qshuffle(A3.mono((2, 1)), A3.mono((1, 1)))
print(f"  (2,1) *z (1,1) is homogeneous of weight {P.weight()} with "
      f"{len(P.support())} terms")
