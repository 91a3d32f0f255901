"""Primitive forms along the one-parameter family of a cone point.

For f = (z1^3 + z2^3 + z3^3)/3 the space of opposite filtration choices
is one-dimensional: a single free coordinate c(8,1). We restrict the
unfolding to the socle direction sigma and print the resulting series,
which is the reciprocal of a period integral:

    c = 0:  zeta_+ = 1/g(sigma)
    c = 1:  zeta_+ = 1/(g(sigma) - h(sigma))
"""

from fractions import Fraction

from saitoforms import MPoly, analyze, build_unfolding, moduli_report, \
    primitive_form

v = ("z1", "z2", "z3")
f = sum((MPoly.variable(n, v) ** 3 for n in v),
        MPoly.zero(v)) * Fraction(1, 3)
data = analyze(f, [Fraction(1, 3)] * 3)

print(moduli_report(data))
print()

unf = build_unfolding(data, 9, mask=[8])
for c in (None, {(8, 1): Fraction(1)}):
    pf = primitive_form(unf, c=c)
    label = "0" if c is None else "1"
    print("c = %s:" % label)
    for q, j, elem in pf.records():
        print("  t^%d phi%d: %s" % (q, j, str(elem).replace("u1", "sigma")))
    print()
