"""Randomized verification suites behind the command-line `verify` command.

Case inputs are generated sequentially from a seeded PRNG so a given seed
always produces the same cases; evaluation may fan out over threads
(ASSOFORM_THREADS) and results are re-sorted by case index, so the report
is byte-identical either way.
"""

from __future__ import annotations

import os
import random
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction

from .duality import (
    Family,
    FamilyPoint,
    InvolutionStatus,
    family_form,
    involution_check,
    j_transform_check,
    orbit_duality_check,
    proportional,
)
from .errors import InputError
from .invariants import (
    SylvesterQuintic,
    TernaryCubicFamily,
    delta_cubic_family,
    quintic_covariants,
    verify_cubic_identity,
    verify_quartic_identity,
    verify_quintic_identity,
    verify_quintic_relation,
)
from .milnor import (
    PolyTuple,
    associated_form,
    associated_form_tuple,
    hilbert_function,
)
from .apolarity import apolar_tuple, in_U, inverse_system_check, same_span
from .poly import ActionKind, Poly, Space, act, render_poly
from .sampling import (
    COEFF_POOL,
    logger,
    random_finite_colength_tuple,
    random_invertible_matrix,
    random_linear_frame,
    random_nondegenerate_form,
    random_unimodular_matrix,
)

SUITE_NAMES = (
    "quartic",
    "quintic",
    "cubic",
    "involution",
    "equivariance",
    "apolarity",
    "hilbert",
)


def thread_count():
    raw = os.environ.get("ASSOFORM_THREADS", "").strip()
    if not raw:
        return 1
    try:
        n = int(raw)
    except ValueError as exc:
        raise InputError(f"ASSOFORM_THREADS must be an integer, got {raw!r}") from exc
    return max(1, n)


def _render_matrix(m):
    return "[" + "; ".join(
        " ".join(str(m[i, j]) for j in range(m.ncols)) for i in range(m.nrows)
    ) + "]"


def _render_tuple(ft):
    return "; ".join(render_poly(f) for f in ft.forms)


def _gen_quartic(rng, count):
    cases = []
    for _ in range(count):
        f = random_nondegenerate_form(rng, 2, 4)
        cases.append((render_poly(f), lambda f=f: verify_quartic_identity(f)))
    return cases


def _gen_cubic(rng, count):
    cases = []
    for _ in range(count):
        while True:
            p = TernaryCubicFamily(
                Fraction(rng.choice(COEFF_POOL)),
                Fraction(rng.choice(COEFF_POOL)),
                Fraction(rng.choice(COEFF_POOL)),
                Fraction(rng.choice(COEFF_POOL)),
            )
            if delta_cubic_family(p) != 0:
                break
            logger.info("rejected zero-discriminant cubic draw: %s", p)
        cases.append(
            (render_poly(p.to_poly()), lambda p=p: verify_cubic_identity(p))
        )
    return cases


def _gen_quintic(rng, count):
    cases = []
    for _ in range(count):
        while True:
            x, y = random_linear_frame(rng)
            s = SylvesterQuintic(
                Fraction(rng.choice(COEFF_POOL)),
                Fraction(rng.choice(COEFF_POOL)),
                Fraction(rng.choice(COEFF_POOL)),
                x,
                y,
            )
            if quintic_covariants(s).delta != 0:
                break
            logger.info("rejected zero-discriminant quintic draw")
        desc = (
            f"a={s.a} b={s.b} c={s.c} "
            f"X={render_poly(s.X)} Y={render_poly(s.Y)}"
        )
        cases.append(
            (
                desc,
                lambda s=s: verify_quintic_relation(s) and verify_quintic_identity(s),
            )
        )
    return cases


def _involution_case(point):
    f = family_form(point)
    if point.family is Family.BINARY_QUARTIC:
        exceptional = point.t in (0, 6, -6)
    else:
        exceptional = point.t in (0, 6)
    status = involution_check(f)
    if exceptional:
        return status is InvolutionStatus.IMAGE_DEGENERATE
    return status is InvolutionStatus.FIXED and j_transform_check(point)


def _gen_involution(rng, count):
    cases = []
    for k in range(count):
        family = Family.BINARY_QUARTIC if k % 2 == 0 else Family.TERNARY_CUBIC
        while True:
            t = Fraction(rng.randint(-9, 9), rng.randint(1, 3))
            try:
                point = FamilyPoint(family, t)
            except InputError:
                logger.info("rejected excluded family parameter t=%s", t)
                continue
            break
        cases.append(
            (
                f"{family.value} t={point.t}",
                lambda point=point: _involution_case(point),
            )
        )
        # every few parameters, also check the orbit form of the duality
        if k % 5 == 0 and point.t != 0 and point.t not in (6, -6):
            n = 2 if family is Family.BINARY_QUARTIC else 3
            C = random_unimodular_matrix(rng, n)
            cases.append(
                (
                    f"{family.value} t={point.t} orbit C={_render_matrix(C)}",
                    lambda point=point, C=C: orbit_duality_check(point, C),
                )
            )
    return cases


def _phi_equivariant(f, C):
    lhs = associated_form(act(C, f, ActionKind.ON_FORMS)).form
    rhs = C.det() ** 2 * act(C, associated_form(f).form, ActionKind.ON_DUAL_FORMS)
    return lhs == rhs


def _psi_equivariant(ft, C1, C2):
    n = ft.nvars
    moved = [act(C1, f, ActionKind.ON_FORMS) for f in ft.forms]
    c2inv = C2.inverse()
    mixed = PolyTuple(
        [
            sum((moved[i] * c2inv[i, j] for i in range(n)), Poly.zero(n, Space.Z))
            for j in range(n)
        ]
    )
    lhs = associated_form_tuple(mixed).form
    rhs = (
        C1.det()
        * C2.det()
        * act(C1, associated_form_tuple(ft).form, ActionKind.ON_DUAL_FORMS)
    )
    return lhs == rhs


def _gen_equivariance(rng, count):
    cases = []
    shapes = ((2, 4), (2, 5), (3, 3), (3, 4))
    for _ in range(count):
        n, d = rng.choice(shapes)
        f = random_nondegenerate_form(rng, n, d)
        C = random_invertible_matrix(rng, n)
        desc = f"n={n} d={d} f={render_poly(f)} C={_render_matrix(C)}"
        cases.append((desc, lambda f=f, C=C: _phi_equivariant(f, C)))
    for _ in range(count // 2):
        n = rng.choice((2, 3))
        dd = rng.choice((2, 3))
        ft = random_finite_colength_tuple(rng, n, dd)
        C1 = random_invertible_matrix(rng, n)
        C2 = random_invertible_matrix(rng, n)
        desc = (
            f"tuple n={n} deg={dd} f=({_render_tuple(ft)}) "
            f"C1={_render_matrix(C1)} C2={_render_matrix(C2)}"
        )
        cases.append(
            (desc, lambda ft=ft, C1=C1, C2=C2: _psi_equivariant(ft, C1, C2))
        )
    return cases


def _apolarity_case(ft, d):
    af = associated_form_tuple(ft)
    if not inverse_system_check(ft, af.form):
        return False
    recovered = apolar_tuple(af.form, d)
    if not isinstance(recovered, PolyTuple):
        return False
    if not same_span(list(recovered.forms), list(ft.forms)):
        return False
    if not proportional(associated_form_tuple(recovered).form, af.form):
        return False
    return in_U(af.form, d)


def _gen_apolarity(rng, count):
    cases = []
    for _ in range(count):
        n = rng.choice((2, 3))
        d = rng.choice((3, 4)) if n == 2 else 3
        ft = random_finite_colength_tuple(rng, n, d - 1)
        cases.append(
            (
                f"n={n} d={d} f=({_render_tuple(ft)})",
                lambda ft=ft, d=d: _apolarity_case(ft, d),
            )
        )
    return cases


def _expected_hilbert(n, dd):
    # coefficients of (1 + x + ... + x^(dd-1))^n
    coeffs = [1]
    block = [1] * dd
    for _ in range(n):
        out = [0] * (len(coeffs) + dd - 1)
        for i, a in enumerate(coeffs):
            for j, b in enumerate(block):
                out[i + j] += a * b
        coeffs = out
    return coeffs


def _gen_hilbert(rng, count):
    cases = []
    shapes = ((2, 2), (2, 3), (2, 4), (3, 2), (3, 3))
    for _ in range(count):
        n, dd = rng.choice(shapes)
        ft = random_finite_colength_tuple(rng, n, dd)
        expected = _expected_hilbert(n, dd)
        cases.append(
            (
                f"n={n} deg={dd} f=({_render_tuple(ft)})",
                lambda ft=ft, expected=expected: hilbert_function(ft) == expected,
            )
        )
    return cases


_GENERATORS = {
    "quartic": _gen_quartic,
    "quintic": _gen_quintic,
    "cubic": _gen_cubic,
    "involution": _gen_involution,
    "equivariance": _gen_equivariance,
    "apolarity": _gen_apolarity,
    "hilbert": _gen_hilbert,
}


def run_suite(suite, seed, count):
    """Generate and evaluate one suite; the result dict is seed-deterministic."""
    if suite not in _GENERATORS:
        raise InputError(
            f"unknown suite {suite!r}; choose one of {', '.join(SUITE_NAMES)}"
        )
    if count < 1:
        raise InputError("count must be positive")
    rng = random.Random(seed)
    cases = _GENERATORS[suite](rng, count)
    workers = thread_count()
    thunks = [fn for _, fn in cases]
    if workers == 1:
        outcomes = [fn() for fn in thunks]
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            outcomes = list(pool.map(lambda fn: fn(), thunks))
    records = [
        {"index": i, "case": desc, "pass": bool(ok)}
        for i, ((desc, _), ok) in enumerate(zip(cases, outcomes))
    ]
    records.sort(key=lambda r: r["index"])
    failures = [r["case"] for r in records if not r["pass"]]
    return {
        "suite": suite,
        "seed": seed,
        "count": count,
        "cases": records,
        "failures": failures,
        "pass": not failures,
    }
