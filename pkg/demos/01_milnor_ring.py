"""Analyze a weighted-homogeneous singularity.

We take f = x^3 + y^7 with weights (1/3, 1/7), compute its Milnor ring
basis, the weighted degrees, and the residue pairing, and check that the
orthogonalized basis pairs up exactly anti-diagonally.
"""

from fractions import Fraction

from saitoforms import MPoly, analyze

v = ("x", "y")
x = MPoly.variable("x", v)
y = MPoly.variable("y", v)
data = analyze(x ** 3 + y ** 7, [Fraction(1, 3), Fraction(1, 7)])

print("f =", data.f)
print("Milnor number:", data.mu)
print("central charge:", data.s)
print()
print("basis (by weighted degree):")
for b, d in zip(data.basis, data.degrees):
    print("  deg %-6s  %s" % (d, b))

print()
print("residue pairing matrix (anti-diagonal after orthogonalization):")
mat = data.residue_pairing_matrix()
for row in mat:
    print("  " + "  ".join("%6s" % c for c in row))
