"""Exact sparse polynomials in n variables with a source/dual space tag.

Coefficients are `fractions.Fraction` throughout; no floating point enters
any computation. Monomials are exponent tuples of length nvars. Terms are
kept in graded-lexicographic order (higher total degree first, then
lexicographic with variable 1 dominant), which fixes every matrix layout
and the rendered text form.

The space tag distinguishes polynomials in the source variables z1..zn
from polynomials on the dual space in e1..en; the polar pairing `diamond`
consumes one of each. Retagging is a relabeling, not a copy of data.
"""

from __future__ import annotations

import enum
from fractions import Fraction
from math import comb, factorial, perm

from .errors import DegreeMismatchError, InputError, PolyParseError, SingularMatrixError
from .linalg import MatrixQ


class Space(enum.Enum):
    Z = "z"
    E = "e"


class ActionKind(enum.Enum):
    ON_FORMS = "forms"
    ON_DUAL_FORMS = "dual_forms"


def grlex_key(mono):
    # Ascending sort under this key lists monomials in graded-lex order,
    # e.g. z1^2 before z1*z2 before z2^2 within degree 2.
    return (-sum(mono), tuple(-e for e in mono))


def monomial_basis(nvars, degree):
    """All exponent tuples of the given total degree, graded-lex ordered.

    >>> monomial_basis(2, 2)
    [(2, 0), (1, 1), (0, 2)]
    """
    if nvars < 1:
        raise ValueError("nvars must be positive")
    if degree < 0:
        raise ValueError("degree must be nonnegative")
    out = []

    def emit(prefix, remaining, slots):
        if slots == 1:
            out.append(prefix + (remaining,))
            return
        for e in range(remaining, -1, -1):
            emit(prefix + (e,), remaining - e, slots - 1)

    emit((), degree, nvars)
    return out


def factorial_product(mono):
    p = 1
    for e in mono:
        p *= factorial(e)
    return p


def _coerce_space(space):
    if isinstance(space, Space):
        return space
    return Space(space)


class Poly:
    """Immutable sparse polynomial; zero coefficients are never stored."""

    __slots__ = ("nvars", "space", "_terms")

    def __init__(self, nvars, space, terms=()):
        if nvars < 1:
            raise ValueError("nvars must be positive")
        self.nvars = nvars
        self.space = _coerce_space(space)
        clean = {}
        items = terms.items() if hasattr(terms, "items") else terms
        for mono, coeff in items:
            mono = tuple(mono)
            if len(mono) != nvars or any(e < 0 or not isinstance(e, int) for e in mono):
                raise ValueError(f"bad monomial {mono} for nvars={nvars}")
            c = Fraction(coeff)
            if c:
                c += clean.get(mono, 0)
                if c:
                    clean[mono] = c
                else:
                    del clean[mono]
        self._terms = clean

    @classmethod
    def zero(cls, nvars, space):
        return cls(nvars, space, {})

    @classmethod
    def constant(cls, nvars, space, value):
        return cls(nvars, space, {(0,) * nvars: Fraction(value)})

    @classmethod
    def variable(cls, nvars, space, index):
        """The variable with the given 1-based index."""
        if not 1 <= index <= nvars:
            raise ValueError("variable index out of range")
        mono = tuple(int(i == index - 1) for i in range(nvars))
        return cls(nvars, space, {mono: Fraction(1)})

    def items(self):
        """Terms as (monomial, coefficient) pairs in graded-lex order."""
        return sorted(self._terms.items(), key=lambda kv: grlex_key(kv[0]))

    def coeff(self, mono):
        return self._terms.get(tuple(mono), Fraction(0))

    def support(self):
        return set(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def __len__(self):
        return len(self._terms)

    def __eq__(self, other):
        return (
            isinstance(other, Poly)
            and self.nvars == other.nvars
            and self.space == other.space
            and self._terms == other._terms
        )

    __hash__ = None

    def __repr__(self):
        return f"Poly({self.nvars}, {self.space.value!r}, {render_poly(self)!r})"

    def degree(self):
        """Total degree, or None for the zero polynomial."""
        if not self._terms:
            return None
        return max(sum(m) for m in self._terms)

    def is_homogeneous(self):
        degs = {sum(m) for m in self._terms}
        return len(degs) <= 1

    def homogeneous_degree(self):
        if not self._terms:
            return None
        degs = {sum(m) for m in self._terms}
        if len(degs) != 1:
            raise InputError("polynomial is not homogeneous")
        return degs.pop()

    def retag(self, space):
        return Poly(self.nvars, space, self._terms)

    def _check_compatible(self, other):
        if self.nvars != other.nvars or self.space != other.space:
            raise ValueError("polynomials live in different rings")

    def __add__(self, other):
        self._check_compatible(other)
        terms = dict(self._terms)
        for m, c in other._terms.items():
            s = terms.get(m, Fraction(0)) + c
            if s:
                terms[m] = s
            else:
                terms.pop(m, None)
        return Poly(self.nvars, self.space, terms)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return Poly(self.nvars, self.space, {m: -c for m, c in self._terms.items()})

    def __mul__(self, other):
        if isinstance(other, Poly):
            self._check_compatible(other)
            terms = {}
            for m1, c1 in self._terms.items():
                for m2, c2 in other._terms.items():
                    m = tuple(a + b for a, b in zip(m1, m2))
                    s = terms.get(m, Fraction(0)) + c1 * c2
                    if s:
                        terms[m] = s
                    else:
                        del terms[m]
            return Poly(self.nvars, self.space, terms)
        c = Fraction(other)
        return Poly(self.nvars, self.space, {m: v * c for m, v in self._terms.items()})

    __rmul__ = __mul__

    def __truediv__(self, scalar):
        return self * (Fraction(1) / Fraction(scalar))

    def __pow__(self, exponent):
        if exponent < 0:
            raise ValueError("negative power of a polynomial")
        result = Poly.constant(self.nvars, self.space, 1)
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            base = base * base if e > 1 else base
            e >>= 1
        return result

    def partial(self, index):
        """Partial derivative with respect to the 0-based variable index."""
        terms = {}
        for m, c in self._terms.items():
            if m[index]:
                m2 = m[:index] + (m[index] - 1,) + m[index + 1 :]
                terms[m2] = c * m[index]
        return Poly(self.nvars, self.space, terms)

    def lead(self):
        if not self._terms:
            raise ValueError("zero polynomial has no leading term")
        mono = min(self._terms, key=grlex_key)
        return mono, self._terms[mono]

    def coefficient_vector(self, degree, basis=None):
        """Coefficients against monomial_basis(nvars, degree).

        The polynomial must be zero or homogeneous of that degree.
        """
        if self._terms and {sum(m) for m in self._terms} != {degree}:
            raise InputError(f"polynomial is not homogeneous of degree {degree}")
        if basis is None:
            basis = monomial_basis(self.nvars, degree)
        return [self._terms.get(m, Fraction(0)) for m in basis]

    @classmethod
    def from_vector(cls, nvars, space, degree, vec, basis=None):
        if basis is None:
            basis = monomial_basis(nvars, degree)
        return cls(nvars, space, dict(zip(basis, vec)))


def parse_poly(text, nvars, space):
    """Parse polynomial text into a Poly.

    Grammar: terms joined by + or -, each term [sign][coeff "*"]varpart
    with coeff = int or int/posint and varpart = ("z"|"e")index["^"exp]
    factors joined by "*". Whitespace is ignored. A bare rational is a
    degree-0 term, so "0" is the zero polynomial.

    >>> parse_poly("z1^4 + 1/2*z1^2*z2^2", 2, "z").items()
    [((4, 0), Fraction(1, 1)), ((2, 2), Fraction(1, 2))]
    """
    space = _coerce_space(space)
    pos = 0
    n = len(text)

    def skip_ws():
        nonlocal pos
        while pos < n and text[pos].isspace():
            pos += 1

    def read_int(what):
        nonlocal pos
        start = pos
        while pos < n and text[pos].isdigit():
            pos += 1
        if pos == start:
            raise PolyParseError(f"expected {what}", start)
        return int(text[start:pos])

    def read_var(exps):
        nonlocal pos
        letter = text[pos]
        if letter != space.value:
            raise PolyParseError(
                f"variable letter {letter!r} does not match the {space.value}-space", pos
            )
        pos += 1
        idx_start = pos
        idx = read_int("variable index")
        if not 1 <= idx <= nvars:
            raise PolyParseError(f"variable index {idx} out of range 1..{nvars}", idx_start)
        exp = 1
        save = pos
        skip_ws()
        if pos < n and text[pos] == "^":
            pos += 1
            skip_ws()
            exp = read_int("exponent")
        else:
            pos = save
        exps[idx - 1] += exp

    terms = []
    skip_ws()
    if pos == n:
        raise PolyParseError("empty input", pos)
    first = True
    while pos < n:
        sign = 1
        if text[pos] in "+-":
            sign = -1 if text[pos] == "-" else 1
            pos += 1
            skip_ws()
        elif not first:
            raise PolyParseError("expected '+' or '-' between terms", pos)
        first = False
        coeff = Fraction(1)
        exps = [0] * nvars
        if pos < n and text[pos].isdigit():
            num = read_int("integer")
            save = pos
            skip_ws()
            if pos < n and text[pos] == "/":
                pos += 1
                skip_ws()
                den_start = pos
                den = read_int("denominator")
                if den == 0:
                    raise PolyParseError("zero denominator", den_start)
                coeff = Fraction(num, den)
            else:
                pos = save
                coeff = Fraction(num)
            save = pos
            skip_ws()
            if pos < n and text[pos] == "*":
                pos += 1
                skip_ws()
                if pos >= n or not text[pos].isalpha():
                    raise PolyParseError("expected a variable after '*'", pos)
                read_var(exps)
            else:
                pos = save
                terms.append((tuple(exps), sign * coeff))
                skip_ws()
                continue
        elif pos < n and text[pos].isalpha():
            read_var(exps)
        else:
            raise PolyParseError("expected a term", pos)
        while True:
            save = pos
            skip_ws()
            if pos < n and text[pos] == "*":
                pos += 1
                skip_ws()
                if pos >= n or not text[pos].isalpha():
                    raise PolyParseError("expected a variable after '*'", pos)
                read_var(exps)
            else:
                pos = save
                break
        terms.append((tuple(exps), sign * coeff))
        skip_ws()
    return Poly(nvars, space, terms)


def render_poly(p):
    """Text form that parse_poly round-trips; graded-lex term order.

    >>> render_poly(Poly(2, "e", {(2, 2): Fraction(1, 24)}))
    '1/24*e1^2*e2^2'
    """
    if not p:
        return "0"
    letter = p.space.value
    pieces = []
    for mono, coeff in p.items():
        factors = []
        for i, e in enumerate(mono):
            if e == 1:
                factors.append(f"{letter}{i + 1}")
            elif e > 1:
                factors.append(f"{letter}{i + 1}^{e}")
        mag = abs(coeff)
        if not factors:
            body = str(mag)
        elif mag == 1:
            body = "*".join(factors)
        else:
            body = str(mag) + "*" + "*".join(factors)
        pieces.append((coeff < 0, body))
    out = ("-" if pieces[0][0] else "") + pieces[0][1]
    for negative, body in pieces[1:]:
        out += (" - " if negative else " + ") + body
    return out


def diamond(g, F):
    """Polar pairing: apply g(d/de1,...,d/den) to the dual form F.

    g lives in the z-space, F in the e-space; the result is a dual form of
    degree deg F - deg g. Bilinear; full contraction of equal degrees gives
    a constant, and monomials pair to the factorial product i1!...in! on
    the diagonal.

    >>> diamond(parse_poly("z1", 2, "z"), parse_poly("e1^2", 2, "e"))
    Poly(2, 'e', '2*e1')
    """
    if g.space != Space.Z or F.space != Space.E:
        raise InputError("diamond expects a z-space polynomial acting on an e-space one")
    if g.nvars != F.nvars:
        raise ValueError("variable count mismatch")
    if not g or not F:
        return Poly.zero(F.nvars, Space.E)
    j = g.homogeneous_degree()
    k = F.homogeneous_degree()
    if j > k:
        raise DegreeMismatchError(f"cannot apply degree {j} to degree {k}")
    terms = {}
    for mg, cg in g._terms.items():
        for mf, cf in F._terms.items():
            if any(a > b for a, b in zip(mg, mf)):
                continue
            scale = 1
            for a, b in zip(mg, mf):
                scale *= perm(b, a)
            m = tuple(b - a for a, b in zip(mg, mf))
            s = terms.get(m, Fraction(0)) + cg * cf * scale
            if s:
                terms[m] = s
            else:
                del terms[m]
    return Poly(F.nvars, Space.E, terms)


def _substitute(f, replacements):
    """Substitute replacements[i] for variable i; algebra homomorphism."""
    result = {}
    cache = {}

    def power(i, e):
        if (i, e) not in cache:
            cache[(i, e)] = replacements[i] ** e
        return cache[(i, e)]

    out = Poly.zero(replacements[0].nvars, replacements[0].space)
    for mono, coeff in f._terms.items():
        prod = Poly.constant(out.nvars, out.space, coeff)
        for i, e in enumerate(mono):
            if e:
                prod = prod * power(i, e)
        out = out + prod
    return out


def act(C, f, kind):
    """Linear substitution action of an invertible matrix on a form.

    ON_FORMS sends f(z) to f(z C^{-T}); ON_DUAL_FORMS sends F(e) to F(e C).
    Both are degree-preserving ring maps, so acting on products equals the
    product of the acted factors.
    """
    kind = kind if isinstance(kind, ActionKind) else ActionKind(kind)
    if C.nrows != C.ncols or C.nrows != f.nvars:
        raise ValueError("matrix shape does not match the variable count")
    if kind is ActionKind.ON_FORMS:
        S = C.inverse()  # z_i -> sum_j (C^{-1})_{ij} z_j realizes z -> z C^{-T}
        rows = S.entries
    else:
        if C.det() == 0:
            raise SingularMatrixError("matrix is singular")
        rows = C.transpose().entries  # e_i -> sum_j C_{ji} e_j realizes e -> e C
    replacements = [
        Poly(f.nvars, f.space, {tuple(int(k == j) for k in range(f.nvars)): rows[i][j] for j in range(f.nvars) if rows[i][j]})
        for i in range(f.nvars)
    ]
    return _substitute(f, replacements)


def _poly_det(rows):
    n = len(rows)
    if n == 1:
        return rows[0][0]
    first = rows[0]
    total = None
    for j in range(n):
        if not first[j]:
            continue
        minor = [[row[k] for k in range(n) if k != j] for row in rows[1:]]
        piece = first[j] * _poly_det(minor)
        if j % 2:
            piece = -piece
        total = piece if total is None else total + piece
    if total is None:
        zero = rows[0][0]
        return Poly.zero(zero.nvars, zero.space)
    return total


def hessian(f, nvars=None):
    """Determinant of the matrix of second partials.

    For homogeneous f of degree d in n variables the result is homogeneous
    of degree n(d-2). Transforms with determinant weight -2 under ON_FORMS.
    """
    if nvars is not None and nvars != f.nvars:
        raise InputError(f"form has {f.nvars} variables, not {nvars}")
    d = f.homogeneous_degree()
    if d is None or d < 2:
        raise InputError("hessian needs a homogeneous form of degree at least 2")
    n = f.nvars
    grads = [f.partial(i) for i in range(n)]
    rows = [[grads[i].partial(j) for j in range(n)] for i in range(n)]
    return _poly_det(rows)


def jacobian(forms):
    """Determinant of (df_i/dz_j) for n forms in n variables.

    The Jacobian of a gradient tuple is exactly the Hessian of the source
    form, with no sign or scale correction.
    """
    forms = list(getattr(forms, "forms", forms))
    n = forms[0].nvars
    if len(forms) != n or any(f.nvars != n for f in forms):
        raise InputError("jacobian needs exactly n forms in n variables")
    degs = {f.homogeneous_degree() for f in forms}
    if len(degs) != 1 or degs == {None}:
        raise InputError("jacobian needs nonzero forms of one common degree")
    rows = [[f.partial(j) for j in range(n)] for f in forms]
    return _poly_det(rows)
