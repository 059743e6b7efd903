"""Walk: the associated form as an involution on two classical families.

Run with: python3 demos/duality_walk.py
"""

from fractions import Fraction

from assoform import (
    Family,
    FamilyPoint,
    MatrixQ,
    family_form,
    involution_check,
    j_quartic,
    mobius,
    orbit_duality_check,
    render_poly,
)

# Away from finitely many parameters, applying the associated form twice
# returns to the line of the original quartic.
for t in (1, 3, 6):
    p = FamilyPoint(Family.BINARY_QUARTIC, Fraction(t))
    f = family_form(p)
    print(f"t = {t}: {render_poly(f)} -> {involution_check(f).value}")
print()

# On absolute invariants the involution is a Mobius map of the J-line.
for t in (1, 3):
    p = FamilyPoint(Family.BINARY_QUARTIC, Fraction(t))
    j = j_quartic(family_form(p))
    print(f"t = {t}: J = {j}, image J = {mobius(Family.BINARY_QUARTIC, j)}")
print()

# On orbits it swaps parameter t with -12/t up to inverse-transpose frames.
shear = MatrixQ([[1, 2], [0, 1]]) @ MatrixQ([[1, 0], [-1, 1]])
for t in (1, 4):
    p = FamilyPoint(Family.BINARY_QUARTIC, Fraction(t))
    print(f"t = {t}: orbit duality with a unimodular frame:",
          orbit_duality_check(p, shear))
