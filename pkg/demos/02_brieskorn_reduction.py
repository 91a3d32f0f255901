"""Reduce polynomial classes to the finite t-series normal form.

Classes in the Brieskorn lattice satisfy [g df/dz_i] = -t [dg/dz_i].
Iterating this rewrites any polynomial class as a finite sum
sum_k t^k (combination of Milnor basis elements). We demonstrate the
cube-power recurrence of the socle element for the cone point
(z1^3 + z2^3 + z3^3)/3:

    [phi8^k] = -t^3 (k-2)^3 [phi8^(k-3)]
"""

from fractions import Fraction

from saitoforms import MPoly, analyze, reduce_class

v = ("z1", "z2", "z3")
f = sum((MPoly.variable(n, v) ** 3 for n in v),
        MPoly.zero(v)) * Fraction(1, 3)
data = analyze(f, [Fraction(1, 3)] * 3)

socle = data.basis[-1]
print("socle element:", socle)
for k in range(2, 9):
    red = reduce_class(data, socle ** k)
    print("[(%s)^%d] = %s" % (socle, k, red))
