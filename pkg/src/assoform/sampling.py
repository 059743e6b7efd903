"""Seeded random generators for forms, tuples, matrices, and frames.

Coefficients are drawn uniformly from {-5,...,5} minus {0} so exact
arithmetic stays cheap; draws that violate a requested property
(nondegeneracy, finite colength, invertibility) are rejected and the
rejection is logged.
"""

from __future__ import annotations

import logging
from fractions import Fraction

from .linalg import MatrixQ
from .milnor import PolyTuple, is_finite_colength, is_nondegenerate
from .poly import Poly, Space, monomial_basis, render_poly

logger = logging.getLogger("assoform.sampling")

COEFF_POOL = tuple(k for k in range(-5, 6) if k != 0)

_MAX_REJECTIONS = 1000


def random_form(rng, nvars, degree, space=Space.Z):
    """Dense form with every coefficient drawn from the nonzero pool."""
    return Poly(
        nvars,
        space,
        {m: Fraction(rng.choice(COEFF_POOL)) for m in monomial_basis(nvars, degree)},
    )


def random_nondegenerate_form(rng, nvars, degree):
    for _ in range(_MAX_REJECTIONS):
        f = random_form(rng, nvars, degree)
        if is_nondegenerate(f):
            return f
        logger.info("rejected degenerate draw: %s", render_poly(f))
    raise RuntimeError("rejection sampling failed to find a nondegenerate form")


def random_finite_colength_tuple(rng, nvars, degree):
    """Tuple of nvars random forms of the given degree with finite colength."""
    for _ in range(_MAX_REJECTIONS):
        ft = PolyTuple([random_form(rng, nvars, degree) for _ in range(nvars)])
        if is_finite_colength(ft):
            return ft
        logger.info(
            "rejected infinite-colength draw: %s",
            "; ".join(render_poly(f) for f in ft.forms),
        )
    raise RuntimeError("rejection sampling failed to find a finite-colength tuple")


def random_invertible_matrix(rng, n, bound=3):
    for _ in range(_MAX_REJECTIONS):
        m = MatrixQ([[Fraction(rng.randint(-bound, bound)) for _ in range(n)] for _ in range(n)])
        if m.det() != 0:
            return m
        logger.info("rejected singular matrix draw")
    raise RuntimeError("rejection sampling failed to find an invertible matrix")


def random_unimodular_matrix(rng, n, shears=4, bound=3):
    """Product of elementary shears; determinant is exactly one."""
    m = MatrixQ.identity(n)
    for _ in range(shears):
        i = rng.randrange(n)
        j = rng.randrange(n)
        if i == j:
            continue
        rows = [
            [
                Fraction(1 if r == c else 0)
                + (Fraction(rng.randint(-bound, bound)) if (r, c) == (i, j) else 0)
                for c in range(n)
            ]
            for r in range(n)
        ]
        m = m @ MatrixQ(rows)
    return m


def random_linear_frame(rng, bound=3):
    """Pair of binary linear forms with a nonzero coefficient determinant."""
    for _ in range(_MAX_REJECTIONS):
        entries = [Fraction(rng.randint(-bound, bound)) for _ in range(4)]
        if entries[0] * entries[3] - entries[1] * entries[2] == 0:
            logger.info("rejected degenerate linear frame draw")
            continue
        x = Poly(2, Space.Z, {(1, 0): entries[0], (0, 1): entries[1]})
        y = Poly(2, Space.Z, {(1, 0): entries[2], (0, 1): entries[3]})
        return x, y
    raise RuntimeError("rejection sampling failed to find an invertible frame")
