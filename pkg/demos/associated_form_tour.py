"""Tour: from a nondegenerate form to its associated form.

Run with: python3 demos/associated_form_tour.py
"""

from fractions import Fraction

from assoform import (
    Family,
    FamilyPoint,
    Space,
    associated_form,
    family_form,
    gradient,
    hilbert_function,
    parse_poly,
    render_poly,
)

# The Fermat quartic in two variables. Its gradient ideal has finite
# colength, so the quotient algebra has a one-dimensional socle in degree
# n(d-2) = 4, and the associated form packages the socle pairing.
f = parse_poly("z1^4 + z2^4", 2, Space.Z)
af = associated_form(f)
print("f =", render_poly(f))
print("associated form =", render_poly(af.form))
print("socle values mu:", {m: str(v) for m, v in af.mu.items()})
print()

# The Hilbert function of the gradient algebra is symmetric; its top
# degree carries the socle.
print("Hilbert function of the gradient algebra:", hilbert_function(gradient(f)))
print()

# A one-parameter family: the associated form follows a closed form in t.
for t in (1, 3, Fraction(-7, 3)):
    q = family_form(FamilyPoint(Family.BINARY_QUARTIC, t))
    print(f"t = {t}:  associated form = {render_poly(associated_form(q).form)}")
