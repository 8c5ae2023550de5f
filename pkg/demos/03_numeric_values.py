"""Evaluating the four value families in GF(q)((1/T)).

The zeta families sum power sums S_d(s) over degree levels d; the li
families use the Carlitz factorials L_d instead.  Dagger variants run
over weakly increasing levels with an alternating sign.  The script
checks two classical facts numerically along the way.
"""

from ffmzv import Evaluator, Index, RatFunc, carlitz_l, field, rat_to_laurent

F2 = field(2)
E = Evaluator(F2)
N = 30

print("Values at q = 2, precision", N)
for fam in ("zeta", "zeta-dagger", "li", "li-dagger"):
    v = E.eval_value(fam, Index((1, 2)), N)
    print(f"  {fam:<12} (1,2) -> {v}")

print()
print("S_d(s) coincides with 1/L_d^s for s <= q (exact fractions):")
for d in range(4):
    lhs = E.power_sum_exact(d, 2)
    rhs = RatFunc(F2.poly([1]), carlitz_l(F2, d) ** 2)
    print(f"  d={d}: S_d(2) == L_d^-2  ->  {lhs == rhs}")

print()
print("The fundamental relation Li_q(1) = L_1 Li_(1,q-1)(1), numerically:")
li_q = E.eval_value("li", Index((2,)), N)
li_pair = E.eval_value("li", Index((1, 1)), N)
l1 = rat_to_laurent(RatFunc.of(carlitz_l(F2, 1)), N)
print(f"  Li_2(1)          = {li_q}")
print(f"  L_1 Li_(1,1)(1)  = {l1 * li_pair}")
print(f"  equal to common precision: {li_q == l1 * li_pair}")

print()
print("And as an exact identity of rational functions, for each level d:")
rep = E.fundamental_identity_check(3)
print(f"  d=3: {rep.cases[0].status} ({rep.cases[0].detail})")

print()
print("Star values are a sign-and-reversal of the daggers:")
z = E.eval_value("zeta-star", Index((2, 1)), N)
w = E.eval_value("zeta-dagger", Index((1, 2)), N)
print(f"  zeta-star(2,1) = {z}")
print(f"  matches (+1) * zeta-dagger(1,2): {z == w}")
