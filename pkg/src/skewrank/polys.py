"""Homogeneous polynomials attached to a space of skew matrices.

The Pfaffian cubic and the Gauss quadrics of a span sum x_i w_i are computed
by running the exterior-algebra routines with polynomial coefficients.  The
emptiness test builds the degree n+2 piece of the ideal of n+1 quadric-variable
systems (the Macaulay bound) and checks that it fills all forms of that degree.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations_with_replacement
from math import comb

from .errors import NotQuadric, TooManyVariables
from .fields import RATIONALS, field_of
from .linalg import rank

__all__ = [
    "HomogPoly",
    "monomials",
    "MacaulayCertificate",
    "pfaffian_cubic",
    "gauss_quadrics",
    "projective_empty",
    "symbolic_point",
]

_VARNAMES = "abcd"


def monomials(nvars: int, degree: int):
    """Exponent tuples of the given degree in graded-lex order (a^d first)."""
    out = []
    for combo in combinations_with_replacement(range(nvars), degree):
        exp = [0] * nvars
        for i in combo:
            exp[i] += 1
        out.append(tuple(exp))
    return out


class HomogPoly:
    """Homogeneous polynomial with exact coefficients, stored sparsely."""

    __slots__ = ("nvars", "degree", "coeffs", "field")

    def __init__(self, nvars: int, degree: int, coeffs=None, field=RATIONALS):
        self.nvars = nvars
        self.degree = degree
        self.field = field
        c = {}
        for exp, v in (coeffs or {}).items():
            if len(exp) != nvars or sum(exp) != degree:
                raise ValueError(f"exponent {exp} does not fit ({nvars} vars, degree {degree})")
            if v:
                c[tuple(exp)] = field(v)
        self.coeffs = c

    @classmethod
    def variable(cls, i: int, nvars: int, field=RATIONALS):
        exp = [0] * nvars
        exp[i] = 1
        return cls(nvars, 1, {tuple(exp): field.one}, field)

    @classmethod
    def constant(cls, c, nvars: int, field=RATIONALS):
        return cls(nvars, 0, {(0,) * nvars: c}, field)

    @classmethod
    def linear(cls, coeffs, field=RATIONALS):
        n = len(coeffs)
        d = {}
        for i, c in enumerate(coeffs):
            exp = [0] * n
            exp[i] = 1
            d[tuple(exp)] = c
        return cls(n, 1, d, field)

    def _lift(self, other):
        if isinstance(other, HomogPoly):
            if other.nvars != self.nvars:
                raise ValueError("polynomials in different numbers of variables")
            return other
        if not other:
            return HomogPoly(self.nvars, self.degree, {}, self.field)
        return HomogPoly.constant(other, self.nvars, self.field)

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if not isinstance(other, HomogPoly):
            if not other:
                return not self.coeffs
            return self == self._lift(other)
        if self.nvars != other.nvars:
            return False
        if not self.coeffs and not other.coeffs:
            return True
        return self.degree == other.degree and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.nvars, self.degree, frozenset(self.coeffs.items())))

    def __add__(self, other):
        other = self._lift(other)
        if not other.coeffs:
            return self
        if not self.coeffs:
            return other
        if other.degree != self.degree:
            raise ValueError("sum of forms of different degree")
        c = dict(self.coeffs)
        for exp, v in other.coeffs.items():
            c[exp] = c[exp] + v if exp in c else v
        return HomogPoly(self.nvars, self.degree, c, self.field)

    __radd__ = __add__

    def __neg__(self):
        return HomogPoly(self.nvars, self.degree, {k: -v for k, v in self.coeffs.items()}, self.field)

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) + (-self)

    def __mul__(self, other):
        if not isinstance(other, HomogPoly):
            if not other:
                return HomogPoly(self.nvars, self.degree, {}, self.field)
            return HomogPoly(self.nvars, self.degree, {k: v * other for k, v in self.coeffs.items()}, self.field)
        if other.nvars != self.nvars:
            raise ValueError("polynomials in different numbers of variables")
        deg = self.degree + other.degree
        c = {}
        for e1, v1 in self.coeffs.items():
            for e2, v2 in other.coeffs.items():
                exp = tuple(a + b for a, b in zip(e1, e2))
                t = v1 * v2
                c[exp] = c[exp] + t if exp in c else t
        return HomogPoly(self.nvars, deg, c, self.field)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        out = HomogPoly.constant(self.field.one, self.nvars, self.field)
        for _ in range(k):
            out = out * self
        return out

    def __call__(self, *point):
        if len(point) == 1 and isinstance(point[0], (list, tuple)):
            point = tuple(point[0])
        acc = self.field.zero
        for exp, v in self.coeffs.items():
            t = v
            for x, k in zip(point, exp):
                if k:
                    t = t * x**k
            acc = acc + t
        return acc

    def coefficient(self, exp):
        return self.coeffs.get(tuple(exp), self.field.zero)

    def coefficient_vector(self):
        return [self.coefficient(m) for m in monomials(self.nvars, self.degree)]

    def to_sympy(self, symbols=None):
        import sympy

        if symbols is None:
            symbols = sympy.symbols(" ".join(_VARNAMES[: self.nvars]) if self.nvars <= 4
                                    else " ".join(f"x{i}" for i in range(self.nvars)))
            if self.nvars == 1:
                symbols = (symbols,)
        expr = sympy.Integer(0)
        for exp, v in self.coeffs.items():
            term = sympy.Rational(v.numerator, v.denominator)
            for s, k in zip(symbols, exp):
                term *= s**k
            expr += term
        return expr

    @classmethod
    def from_sympy(cls, expr, symbols, field=RATIONALS):
        import sympy

        p = sympy.Poly(expr, *symbols)
        if p.is_zero:
            return cls(len(symbols), 0, {}, field)
        terms = p.terms()
        deg = sum(terms[0][0])
        d = {}
        for exp, c in terms:
            c = sympy.Rational(c)
            d[tuple(exp)] = field(c.p) / field(c.q)
        return cls(len(symbols), deg, d, field)

    def __repr__(self):
        if not self.coeffs:
            return "0"
        names = _VARNAMES if self.nvars <= 4 else [f"x{i}" for i in range(self.nvars)]
        parts = []
        for exp in monomials(self.nvars, self.degree):
            v = self.coeffs.get(exp)
            if v is None:
                continue
            mono = "*".join(
                names[i] if k == 1 else f"{names[i]}^{k}" for i, k in enumerate(exp) if k
            )
            parts.append(f"{v}*{mono}" if mono else str(v))
        return " + ".join(parts)

    def to_json(self):
        from .fields import format_scalar

        return {
            "nvars": self.nvars,
            "degree": self.degree,
            "coeffs": {"".join(map(str, e)): format_scalar(v) for e, v in sorted(self.coeffs.items(), reverse=True)},
        }


def symbolic_point(generators):
    """The tensor sum x_i w_i with HomogPoly coefficients, and the field."""
    from .exterior import SkewTensor

    field = generators[0].field
    for g in generators[1:]:
        from .fields import common_field

        field = common_field(field, g.field)
    k = len(generators)
    xs = [HomogPoly.variable(i, k, field) for i in range(k)]
    dim = generators[0].dim
    coeffs = []
    for pos in range(len(generators[0].coeffs)):
        acc = HomogPoly(k, 1, {}, field)
        for x, g in zip(xs, generators):
            c = g.coeffs[pos]
            if c:
                acc = acc + x * c
        coeffs.append(acc)
    return SkewTensor(dim, tuple(coeffs)), field


def pfaffian_cubic(space) -> HomogPoly:
    """Pf(sum x_i w_i) as a cubic in the span coordinates (dim V = 6)."""
    from .errors import DimensionMismatch
    from .exterior import pfaffian

    gens = _generators(space)
    if gens[0].dim != 6:
        raise DimensionMismatch("the Pfaffian cubic needs 6x6 matrices")
    w, field = symbolic_point(gens)
    out = pfaffian(w)
    if not isinstance(out, HomogPoly) or not out:
        return HomogPoly(len(gens), 3, {}, field)
    return out


def gauss_quadrics(space) -> list:
    """Coordinates of (sum x_i w_i) ^ (sum x_i w_i), one quadric per 4-index."""
    from .exterior import gauss_map

    gens = _generators(space)
    w, field = symbolic_point(gens)
    four = gauss_map(w)
    k = len(gens)
    return [q if q else HomogPoly(k, 2, {}, field) for q in four.coeffs]


def _generators(space):
    return list(getattr(space, "generators", space))


@dataclass(frozen=True)
class MacaulayCertificate:
    saturation_degree: int
    achieved_rank: int
    target_rank: int
    verdict: str  # "empty" or "nonempty"

    @property
    def empty(self) -> bool:
        return self.verdict == "empty"

    def to_json(self):
        return {
            "saturation_degree": self.saturation_degree,
            "achieved_rank": self.achieved_rank,
            "target_rank": self.target_rank,
            "verdict": self.verdict,
        }


def projective_empty(quadrics, nvars: int) -> MacaulayCertificate:
    """Decide whether quadrics in ``nvars`` variables have no common projective zero."""
    if nvars > 4:
        raise TooManyVariables(f"{nvars} variables; at most 4 supported")
    if nvars < 1:
        raise TooManyVariables("need at least one variable")
    quadrics = list(quadrics)
    for q in quadrics:
        if q.nvars != nvars:
            raise NotQuadric(f"quadric in {q.nvars} variables, expected {nvars}")
        if q.coeffs and q.degree != 2:
            raise NotQuadric(f"form of degree {q.degree} in a quadric system")
    d = nvars + 1
    target_monos = monomials(nvars, d)
    target = len(target_monos)
    assert target == comb(d + nvars - 1, nvars - 1)
    col = {m: i for i, m in enumerate(target_monos)}
    nonzero = [q for q in quadrics if q.coeffs]
    if not nonzero:
        return MacaulayCertificate(d, 0, target, "nonempty")
    field = nonzero[0].field
    rows = []
    seen = set()
    for m in monomials(nvars, d - 2):
        for q in nonzero:
            row = [field.zero] * target
            for exp, v in q.coeffs.items():
                row[col[tuple(a + b for a, b in zip(exp, m))]] = v
            key = tuple(row)
            if key not in seen:
                seen.add(key)
                rows.append(row)
    r = rank(rows)
    return MacaulayCertificate(d, r, target, "empty" if r == target else "nonempty")


def field_of_poly(p: HomogPoly):
    for v in p.coeffs.values():
        return field_of(v)
    return p.field
