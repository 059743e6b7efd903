import random
from fractions import Fraction

import pytest

from assoform.duality import (
    INFINITY,
    Family,
    FamilyPoint,
    InvolutionStatus,
    family_form,
    involution_check,
    j_transform_check,
    mobius,
    orbit_duality_check,
    proportional,
)
from assoform.errors import ExcludedParameterError, InputError, NondegeneracyError
from assoform.invariants import TernaryCubicFamily, j_cubic_family, j_quartic
from assoform.linalg import MatrixQ
from assoform.milnor import associated_form, is_nondegenerate
from assoform.poly import Poly, Space, parse_poly

Q = Family.BINARY_QUARTIC
C3 = Family.TERNARY_CUBIC


def qp(t):
    return FamilyPoint(Q, Fraction(t))


def cp(t):
    return FamilyPoint(C3, Fraction(t))


def unimodular(rng, n):
    # product of shears has determinant one
    m = MatrixQ.identity(n)
    for _ in range(4):
        i = rng.randrange(n)
        j = rng.randrange(n)
        if i == j:
            continue
        rows = [
            [
                Fraction(1 if r == c else 0)
                + (Fraction(rng.randint(-3, 3)) if (r, c) == (i, j) else 0)
                for c in range(n)
            ]
            for r in range(n)
        ]
        m = m @ MatrixQ(rows)
    return m


def test_family_point_validation():
    assert qp(3).t == Fraction(3)
    assert cp("1/2").t == Fraction(1, 2)
    with pytest.raises(ExcludedParameterError):
        qp(2)
    with pytest.raises(ExcludedParameterError):
        qp(-2)
    with pytest.raises(ExcludedParameterError):
        cp(-3)
    # only the rational cube root of -27 is excluded
    assert cp(3).t == 3


def test_family_form_values():
    assert family_form(qp(0)) == parse_poly("z1^4 + z2^4", 2, Space.Z)
    assert family_form(qp(Fraction(5, 2))) == parse_poly(
        "z1^4 + 5/2*z1^2*z2^2 + z2^4", 2, Space.Z
    )
    assert family_form(cp(0)) == parse_poly("z1^3 + z2^3 + z3^3", 3, Space.Z)
    assert family_form(cp(-6)) == parse_poly(
        "z1^3 + z2^3 + z3^3 - 6*z1*z2*z3", 3, Space.Z
    )


def test_proportional():
    f = parse_poly("z1^2 + 3*z2^2", 2, Space.Z)
    assert proportional(f, 7 * f)
    assert proportional(-2 * f, f)
    assert not proportional(f, parse_poly("z1^2 + 4*z2^2", 2, Space.Z))
    assert not proportional(f, parse_poly("z1^2", 2, Space.Z))
    zero = Poly(2, Space.Z, {})
    assert proportional(zero, zero)
    assert not proportional(f, zero)
    assert not proportional(zero, f)
    with pytest.raises(InputError):
        proportional(f, parse_poly("z1^2", 3, Space.Z))


def test_involution_fixed_quartic():
    for t in (1, 3, -1, Fraction(1, 2), Fraction(12, 5)):
        status = involution_check(family_form(qp(t)))
        assert status is InvolutionStatus.FIXED


def test_involution_fixed_cubic():
    for t in (1, 2, -1, Fraction(1, 2)):
        status = involution_check(family_form(cp(t)))
        assert status is InvolutionStatus.FIXED


def test_involution_image_degenerate():
    for t in (0, 6, -6):
        assert involution_check(family_form(qp(t))) is InvolutionStatus.IMAGE_DEGENERATE
    for t in (0, 6):
        assert involution_check(family_form(cp(t))) is InvolutionStatus.IMAGE_DEGENERATE


def test_involution_requires_nondegenerate_input():
    with pytest.raises(NondegeneracyError):
        involution_check(parse_poly("z1^4 + 2*z1^2*z2^2 + z2^4", 2, Space.Z))


def test_exceptional_set_quartic_grid():
    # the image is degenerate exactly at 0, 6, -6 on this grid
    ts = [Fraction(k) for k in range(-8, 9) if abs(k) != 2]
    ts += [Fraction(1, 2), Fraction(-12, 5), Fraction(13, 2)]
    for t in ts:
        status = involution_check(family_form(qp(t)))
        expected = (
            InvolutionStatus.IMAGE_DEGENERATE
            if t in (0, 6, -6)
            else InvolutionStatus.FIXED
        )
        assert status is expected


def test_exceptional_set_cubic_grid():
    ts = [Fraction(k) for k in range(-5, 9) if k != -3]
    ts += [Fraction(1, 3), Fraction(-9, 2)]
    for t in ts:
        status = involution_check(family_form(cp(t)))
        expected = (
            InvolutionStatus.IMAGE_DEGENERATE
            if t in (0, 6)
            else InvolutionStatus.FIXED
        )
        assert status is expected


def test_involution_random_quartics():
    rng = random.Random(11)
    fixed = 0
    for _ in range(20):
        f = Poly(
            2,
            Space.Z,
            {
                (4 - i, i): Fraction(rng.randint(-5, 5))
                for i in range(5)
            },
        )
        if not f.is_homogeneous() or f.degree() != 4 or not is_nondegenerate(f):
            continue
        first = associated_form(f).form.retag(Space.Z)
        if not is_nondegenerate(first):
            assert involution_check(f) is InvolutionStatus.IMAGE_DEGENERATE
            continue
        assert involution_check(f) is InvolutionStatus.FIXED
        assert proportional(associated_form(first).form.retag(Space.Z), f)
        fixed += 1
    assert fixed >= 10


def test_orbit_duality_identity_frame():
    assert orbit_duality_check(qp(1), MatrixQ.identity(2))
    assert orbit_duality_check(qp(3), MatrixQ.identity(2))
    assert orbit_duality_check(cp(1), MatrixQ.identity(3))
    assert orbit_duality_check(cp(-2), MatrixQ.identity(3))


def test_orbit_duality_unimodular_frames():
    rng = random.Random(23)
    for t in (1, 3, -4, Fraction(5, 2)):
        assert orbit_duality_check(qp(t), unimodular(rng, 2))
    for t in (1, 2, -2):
        assert orbit_duality_check(cp(t), unimodular(rng, 3))


def test_orbit_duality_exclusions():
    eye2 = MatrixQ.identity(2)
    for t in (0, 6, -6):
        with pytest.raises(ExcludedParameterError):
            orbit_duality_check(qp(t), eye2)
    eye3 = MatrixQ.identity(3)
    for t in (0, 6):
        with pytest.raises(ExcludedParameterError):
            orbit_duality_check(cp(t), eye3)
    with pytest.raises(InputError):
        orbit_duality_check(qp(1), MatrixQ([[2, 0], [0, 1]]))


def test_j_transform_quartic():
    for t in (1, 3, -1, 5, Fraction(1, 2), Fraction(-7, 3), Fraction(12, 5)):
        assert j_transform_check(qp(t))
    # frozen spot value: J(t=1) = 2197/972, image J = 2197/1225
    f = family_form(qp(1))
    assert j_quartic(f) == Fraction(2197, 972)
    assert j_quartic(associated_form(f).form) == Fraction(2197, 1225)


def test_j_transform_cubic():
    for t in (1, 2, -1, 3, -2, Fraction(1, 2)):
        assert j_transform_check(cp(t))
    f = family_form(cp(1))
    j = j_cubic_family(TernaryCubicFamily.from_poly(f))
    image = TernaryCubicFamily.from_poly(associated_form(f).form)
    assert j_cubic_family(image) == 1 / j


def test_j_transform_exclusions():
    for t in (0, 6, -6):
        with pytest.raises(ExcludedParameterError):
            j_transform_check(qp(t))
    for t in (0, 6):
        with pytest.raises(ExcludedParameterError):
            j_transform_check(cp(t))


def test_mobius_quartic():
    assert mobius(Q, 1) is INFINITY
    assert mobius(Q, INFINITY) == 1
    assert mobius(Q, 0) == 0
    assert mobius(Q, 2) == 2
    assert mobius(Q, 3) == Fraction(3, 2)
    assert mobius(Q, Fraction(2197, 972)) == Fraction(2197, 1225)
    for z in (0, 2, -1, Fraction(7, 3), INFINITY, 1):
        w = mobius(Q, z)
        back = mobius(Q, w)
        if z is INFINITY:
            assert back is INFINITY
        else:
            assert back == Fraction(z)


def test_mobius_cubic():
    assert mobius(C3, 0) is INFINITY
    assert mobius(C3, INFINITY) == 0
    assert mobius(C3, 1) == 1
    assert mobius(C3, -1) == -1
    assert mobius(C3, 2) == Fraction(1, 2)
    for z in (1, -1, 2, Fraction(-3, 7), INFINITY, 0):
        w = mobius(C3, z)
        back = mobius(C3, w)
        if z is INFINITY:
            assert back is INFINITY
        else:
            assert back == Fraction(z)


def test_mobius_matches_j_of_image():
    for t in (1, 3, Fraction(1, 2), -5):
        f = family_form(qp(t))
        assert mobius(Q, j_quartic(f)) == j_quartic(associated_form(f).form)
    for t in (1, 2, Fraction(-5, 2)):
        f = family_form(cp(t))
        j = j_cubic_family(TernaryCubicFamily.from_poly(f))
        image = TernaryCubicFamily.from_poly(associated_form(f).form)
        assert mobius(C3, j) == j_cubic_family(image)


def test_family_enum_round_trip():
    assert Family("quartic") is Q
    assert Family("cubic") is C3
    assert mobius("quartic", 3) == Fraction(3, 2)
