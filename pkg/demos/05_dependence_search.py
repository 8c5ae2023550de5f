"""Hunting linear relations numerically.

Truncated series plus exact F_q elimination give an independent probe:
candidate relations with polynomial coefficients of bounded degree,
valid to the working precision.  The finder rediscovers the fundamental
relation from nothing but series coefficients.
"""

from ffmzv import (DependenceProblem, Evaluator, Index, field,
                   find_dependence, recommended_precision)

F = field(2)
E = Evaluator(F)
N = 40

values = {
    "Li_2(1)": E.eval_value("li", Index((2,)), N),
    "Li_(1,1)(1)": E.eval_value("li", Index((1, 1)), N),
}
print(f"Searching for a_1 * Li_2 + a_2 * Li_(1,1) = 0, deg a_j <= 2, N = {N}")
print(f"(recommended precision for this problem: {recommended_precision(2, 2)})")
kernel = find_dependence(DependenceProblem(list(values.values()), 2))
for tup in kernel:
    combo = " + ".join(f"({p}) * {name}" for p, name in zip(tup, values))
    print(f"  candidate: {combo} = 0")

print()
print("A pair with no relation at this degree bound:")
pair = [E.eval_value("zeta", Index(()), N), E.eval_value("zeta", Index((1,)), N)]
print(f"  {{1, zeta(1)}}: kernel = {find_dependence(DependenceProblem(pair, 2))}")

print()
print("Characteristic-2 Frobenius: zeta(1)^2 = zeta(2).")
z1 = E.eval_value("zeta", Index((1,)), N)
z2 = E.eval_value("zeta", Index((2,)), N)
sq = z1 * z1
kernel = find_dependence(DependenceProblem([sq, z2.with_prec(sq.prec)], 0))
print(f"  kernel at degree bound 0: {[tuple(str(p) for p in t) for t in kernel]}")

print()
print("Candidates are certified only to the precision used; everything")
print("returned has been substituted back into the inputs and vanished.")
