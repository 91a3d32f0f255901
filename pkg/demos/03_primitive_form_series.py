"""Compute the primitive-form series of f = x^3 + y^7 to sixth order.

The universal unfolding F = f + sum u_i phi_i deforms f over twelve
parameters. The primitive form zeta_+ is the unique class whose
oscillating projection e^((F-f)/t) zeta_+ reduces to the constant class.
At sixth order in the deformation parameters it acquires corrections on
the basis elements y and y^2; we print them and check the result.
"""

import time

from fractions import Fraction

from saitoforms import MPoly, analyze, build_unfolding, primitive_form, \
    verify_primitive

v = ("x", "y")
x = MPoly.variable("x", v)
y = MPoly.variable("y", v)
data = analyze(x ** 3 + y ** 7, [Fraction(1, 3), Fraction(1, 7)])

t0 = time.monotonic()
unf = build_unfolding(data, 6)
pf = primitive_form(unf)
print("computed in %.1fs" % (time.monotonic() - t0))
print()
for q, j, elem in pf.records():
    print("t^%d * (%s) * [ %s ]" % (q, data.basis[j - 1], elem))
print()
print("verify_primitive:", bool(verify_primitive(unf, pf)))
