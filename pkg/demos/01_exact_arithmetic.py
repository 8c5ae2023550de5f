"""A tour of the exact arithmetic layer.

Everything downstream rests on four rings: GF(q), the polynomial ring
F_q[T], its fraction field, and truncated Laurent series in 1/T with an
explicit absolute precision.  This script pokes at each one.
"""

from ffmzv import LaurentSeries, RatFunc, carlitz_l, field, rat_to_laurent

print("== GF(q) ==")
F4 = field(4)
u = F4.gen
print(f"In GF(4) = F_2[u]/(u^2+u+1):  u * u = {u * u},  u^3 = {u ** 3}")
F9 = field(9)
print(f"In GF(9) = F_3[u]/(u^2+1):    u * u = {F9.gen * F9.gen}  (i.e. -1)")

print()
print("== F_q[T] and F_q(T) ==")
F2 = field(2)
t = F2.T
L2 = carlitz_l(F2, 2)
print(f"L_2 over F_2 = (T - T^2)(T - T^4) = {L2}")
f = RatFunc(F2.poly([1]), t * (t + F2.poly([1])))
print(f"1/(T(T+1)) stays reduced with a monic denominator: {f}")

print()
print("== Laurent series with precision tracking ==")
s = rat_to_laurent(f, 8)
print(f"Its expansion at the infinite place: {s}")
inv = s.inverse()
print(f"Inverting it recovers the polynomial (with a precision cost): {inv}")
a = LaurentSeries(F2, 0, (1, 1), 12)
print(f"Characteristic 2 squaring: (1 + 1/T)^2 = {a * a}")

# precision is tracked through every operation: multiplying two series
# of precision 10 whose leading exponents differ keeps a sound bound
x = LaurentSeries(F2, -1, (1,), 10)
y = LaurentSeries(F2, -2, (1,), 10)
print(f"(T^-1 @prec10) * (T^-2 @prec10) = {x * y}  [prec {(x * y).prec}]")

print()
print("== zero testing is precision-aware ==")
z = s - s
print(f"s - s is only zero *to its precision*: is_zero_to_prec = {z.is_zero_to_prec}")
