"""Walk: covariants of a Sylvester-presented binary quintic.

Run with: python3 demos/quintic_identity.py
"""

from assoform import (
    Space,
    SylvesterQuintic,
    parse_poly,
    quintic_covariants,
    render_poly,
    verify_quintic_identity,
    verify_quintic_relation,
)

# A binary quintic presented as a*X^5 + b*Y^5 + c*Z^5 with X + Y + Z = 0.
x = parse_poly("z1", 2, Space.Z)
y = parse_poly("z2", 2, Space.Z)
s = SylvesterQuintic(1, 1, 1, x, y)
print("quintic =", render_poly(s.to_poly()))

cov = quintic_covariants(s)
print("C40 =", cov.C40, " C80 =", cov.C80, " discriminant =", cov.delta)
print("C22 =", render_poly(cov.C22))
print("C33 =", render_poly(cov.C33))

# The covariants satisfy one algebraic relation, and a weighted combination
# of them reconstructs the associated form times the discriminant.
print("relation holds:", verify_quintic_relation(s))
print("decomposition identity holds:", verify_quintic_identity(s))
