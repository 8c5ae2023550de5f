"""The classical side of the story.

Real multiple zeta values satisfy the duality zeta(s) = zeta(s-dual);
the dagger values (weakly increasing summation, alternating sign) are
the analogue of the function-field construction.  Numerics below show
why the naive classical analogue of the involution is expected to fail:
the dagger values of a dual pair visibly disagree, and the candidate
obstruction is zeta(3)^2 modulo zeta(2).
"""

from ffmzv import Index, dual_index, mzdv_num, mzv_num
from ffmzv.charzero import check_prodsum0, example45_report

M = 10 ** 6

print("Duality pairs (values agree within tail bounds):")
for s in ((3,), (2, 4), (2, 2)):
    d = dual_index(Index(s))
    a, b = mzv_num(Index(s), M), mzv_num(d, M)
    print(f"  zeta{s} = {float(a.value):.10f}   zeta{tuple(d)} = {float(b.value):.10f}")

print()
print("Dagger values via weakly increasing sums:")
for s in ((2,), (2, 3), (2, 4), (2, 1, 1, 2)):
    v = mzdv_num(Index(s), M)
    print(f"  dagger{s} = {float(v.value):+.10f}  (tail <= {v.tail_bound:.2e})")

print()
print("The slice identity ties the two families together:")
rep = check_prodsum0(Index((2, 3)), M, 1e-6)
print(f"  (2,3): {rep.cases[0].status} -- {rep.cases[0].detail}")

print()
print("The would-be counterexample data:")
rep = example45_report(M)
for c in rep.cases:
    print(f"  [{c.status}] {c.input}: {c.detail}")
print()
print("Note the sign flip: dagger(2,4) and -dagger(2,1,1,2) differ by")
print("something congruent to zeta(3)^2 modulo zeta(2)-multiples, which")
print("is conjecturally nonzero; the congruence itself is not decided here.")
