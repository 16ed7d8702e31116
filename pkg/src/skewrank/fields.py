"""Exact scalar fields.

Three kinds of field are supported:

* ``RATIONALS`` -- elements are plain :class:`fractions.Fraction` objects;
* :class:`QuadraticTower` -- multiquadratic extensions Q(sqrt d1, ..., sqrt dm)
  with square-free integer radicands, elements are :class:`TowerElement`;
* :class:`PrimeField` -- F_p for p > 5, elements are :class:`ModP`.

Field objects double as descriptors: they compare by value, know how to coerce,
parse and format their elements, and answer square-root queries.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction
from functools import cached_property
from typing import Union

from sympy import factorint, isprime
from sympy.ntheory import sqrt_mod

from .errors import (
    BadField,
    DivisionByZero,
    MixedFields,
    ParseError,
    UnsupportedRadicand,
    ZeroRadicand,
)

__all__ = [
    "RATIONALS",
    "Rationals",
    "QuadraticTower",
    "TowerElement",
    "PrimeField",
    "ModP",
    "field_of",
    "field_arithmetic",
    "adjoin_sqrt",
    "try_sqrt",
    "squarefree_part",
    "parse_field",
    "common_field",
    "format_scalar",
]


def squarefree_part(x) -> int:
    """Square-free integer s with x = s * r**2 for some rational r."""
    x = Fraction(x)
    if x == 0:
        raise ZeroRadicand("zero has no square class")
    n = x.numerator * x.denominator
    sign = -1 if n < 0 else 1
    out = 1
    for prime, mult in factorint(abs(n)).items():
        if mult % 2:
            out *= prime
    return sign * out


def _rational_sqrt(x: Fraction):
    if x < 0:
        return None
    n, d = x.numerator, x.denominator
    rn, rd = math.isqrt(n), math.isqrt(d)
    if rn * rn == n and rd * rd == d:
        return Fraction(rn, rd)
    return None


def _fmt_fraction(x: Fraction) -> str:
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def _parse_fraction(s: str) -> Fraction:
    try:
        return Fraction(s.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"not an exact rational: {s!r}") from exc


# ---------------------------------------------------------------------------
# Rationals


class Rationals:
    kind = "rationals"
    radicands: tuple = ()

    zero = Fraction(0)
    one = Fraction(1)

    def __call__(self, x) -> Fraction:
        if isinstance(x, Fraction):
            return x
        if isinstance(x, int):
            return Fraction(x)
        if isinstance(x, str):
            return self.parse(x)
        if isinstance(x, TowerElement):
            if x.is_rational():
                return x.rational_part()
        raise MixedFields(f"cannot coerce {x!r} into Q")

    def __eq__(self, other):
        return isinstance(other, Rationals)

    def __hash__(self):
        return hash("Q")

    def __repr__(self):
        return "RATIONALS"

    def parse(self, s: str) -> Fraction:
        return _parse_fraction(s)

    def format(self, x) -> str:
        return _fmt_fraction(self(x))

    def try_sqrt(self, x):
        return _rational_sqrt(self(x))

    def is_subfield_of(self, other) -> bool:
        return isinstance(other, (Rationals, QuadraticTower))

    def descriptor(self) -> str:
        return "q"


RATIONALS = Rationals()


# ---------------------------------------------------------------------------
# Multiquadratic towers


class QuadraticTower:
    """Q(sqrt d_0, ..., sqrt d_{m-1}) with square-free, independent radicands.

    Elements are coefficient vectors over the basis sqrt(prod_{i in S} d_i),
    S running over subsets encoded as bitmasks.
    """

    kind = "quadratic_tower"

    def __init__(self, radicands):
        rads = tuple(int(d) for d in radicands)
        if not rads:
            raise BadField("a quadratic tower needs at least one radicand; use RATIONALS")
        for i, d in enumerate(rads):
            if d == 0:
                raise ZeroRadicand("radicand 0")
            if squarefree_part(d) != d or d == 1:
                raise UnsupportedRadicand(f"radicand {d} is not square-free")
            if _class_in_span(d, rads[:i]):
                raise UnsupportedRadicand(
                    f"sqrt({d}) already lies in Q{tuple(rads[:i])}"
                )
        self.radicands = rads
        self.m = len(rads)
        self.size = 1 << self.m
        self.zero = TowerElement(self, (Fraction(0),) * self.size)
        self.one = TowerElement(self, (Fraction(1),) + (Fraction(0),) * (self.size - 1))

    def __eq__(self, other):
        return isinstance(other, QuadraticTower) and other.radicands == self.radicands

    def __hash__(self):
        return hash(("tower", self.radicands))

    def __repr__(self):
        return f"QuadraticTower({self.radicands})"

    @cached_property
    def _mask_factor(self):
        # product of radicands in each mask (used for sqrt(S)*sqrt(T))
        out = []
        for mask in range(self.size):
            v = 1
            for i in range(self.m):
                if mask >> i & 1:
                    v *= self.radicands[i]
            out.append(v)
        return tuple(out)

    @cached_property
    def _mul_table(self):
        f = self._mask_factor
        return tuple(
            tuple((s ^ t, f[s & t]) for t in range(self.size)) for s in range(self.size)
        )

    @cached_property
    def base(self):
        """Tower with the last radicand removed."""
        if self.m == 1:
            return RATIONALS
        return QuadraticTower(self.radicands[:-1])

    def gen(self, i: int) -> "TowerElement":
        c = [Fraction(0)] * self.size
        c[1 << i] = Fraction(1)
        return TowerElement(self, tuple(c))

    def __call__(self, x) -> "TowerElement":
        if isinstance(x, TowerElement):
            if x.field == self:
                return x
            return self._embed(x)
        if isinstance(x, (int, Fraction)):
            c = [Fraction(0)] * self.size
            c[0] = Fraction(x)
            return TowerElement(self, tuple(c))
        if isinstance(x, str):
            return self.parse(x)
        raise MixedFields(f"cannot coerce {x!r} into {self!r}")

    def _embed(self, x: "TowerElement") -> "TowerElement":
        index = []
        for d in x.field.radicands:
            if d not in self.radicands:
                raise MixedFields(f"{x.field!r} is not a subfield of {self!r}")
            index.append(self.radicands.index(d))
        c = [Fraction(0)] * self.size
        for mask, v in enumerate(x.coeffs):
            if v:
                new = 0
                for i, j in enumerate(index):
                    if mask >> i & 1:
                        new |= 1 << j
                c[new] = v
        return TowerElement(self, tuple(c))

    def is_subfield_of(self, other) -> bool:
        return isinstance(other, QuadraticTower) and set(self.radicands) <= set(
            other.radicands
        )

    def extend(self, d: int) -> "QuadraticTower":
        return QuadraticTower(self.radicands + (d,))

    # --- text form -------------------------------------------------------

    _TERM = re.compile(
        r"\s*([+-])?\s*(?:(\d+(?:/\d+)?)\s*(?:\*\s*sqrt\(\s*(-?\d+)\s*\))?"
        r"|sqrt\(\s*(-?\d+)\s*\))\s*"
    )

    def parse(self, s: str) -> "TowerElement":
        s = s.strip()
        if not s:
            raise ParseError("empty scalar")
        pos = 0
        total = self.zero
        first = True
        while pos < len(s):
            m = self._TERM.match(s, pos)
            if not m or m.end() == pos:
                raise ParseError(f"cannot parse scalar {s!r} at offset {pos}")
            sign, coef, rad1, rad2 = m.groups()
            if sign is None and not first:
                raise ParseError(f"missing operator in {s!r}")
            first = False
            c = Fraction(coef) if coef is not None else Fraction(1)
            if sign == "-":
                c = -c
            rad = rad1 if rad1 is not None else rad2
            term = self(c) if rad is None else self.sqrt_of_integer(int(rad)) * c
            total = total + term
            pos = m.end()
        return total

    def sqrt_of_integer(self, n: int) -> "TowerElement":
        r = self.try_sqrt(self(n))
        if r is None:
            raise ParseError(f"sqrt({n}) does not lie in {self!r}")
        return r

    def format(self, x) -> str:
        x = self(x)
        parts = []
        for mask, v in enumerate(x.coeffs):
            if not v:
                continue
            if mask == 0:
                parts.append(_fmt_fraction(v))
                continue
            rad = f"sqrt({self._mask_factor[mask]})"
            if v == 1:
                parts.append(rad)
            elif v == -1:
                parts.append("-" + rad)
            else:
                parts.append(f"{_fmt_fraction(v)}*{rad}")
        if not parts:
            return "0"
        out = parts[0]
        for p in parts[1:]:
            out += p if p.startswith("-") else "+" + p
        return out

    # --- square roots ----------------------------------------------------

    def split(self, x: "TowerElement"):
        """Write x = a + b*sqrt(d_last) with a, b in :attr:`base`."""
        top = 1 << (self.m - 1)
        half = top
        a = x.coeffs[:half]
        b = x.coeffs[half:]
        base = self.base
        if base is RATIONALS:
            return a[0], b[0]
        return TowerElement(base, a), TowerElement(base, b)

    def join(self, a, b) -> "TowerElement":
        base = self.base
        a = base(a)
        b = base(b)
        if base is RATIONALS:
            return TowerElement(self, (a, b))
        return TowerElement(self, a.coeffs + b.coeffs)

    def try_sqrt(self, x):
        x = self(x)
        base = self.base
        d = self.radicands[-1]
        a, b = self.split(x)
        root = None
        if not b:
            s = base.try_sqrt(a)
            if s is not None:
                root = self(s) if base is RATIONALS else self._embed(s)
            else:
                t = base.try_sqrt(a / d)
                if t is not None:
                    root = self.join(0, t)
        else:
            n = base.try_sqrt(a * a - b * b * d)
            if n is not None:
                for w in ((a + n) / 2, (a - n) / 2):
                    u = base.try_sqrt(w)
                    if u is not None and u:
                        root = self.join(u, b / (2 * u))
                        break
        if root is None:
            return None
        return -root if root.leading() < 0 else root

    def descriptor(self) -> str:
        return "qsqrt:" + ",".join(str(d) for d in self.radicands)


def _class_in_span(d: int, rads) -> bool:
    """Is d a product of a subset of ``rads`` modulo rational squares?"""
    n = len(rads)
    for mask in range(1 << n):
        v = d
        for i in range(n):
            if mask >> i & 1:
                v *= rads[i]
        if _rational_sqrt(Fraction(v)) is not None:
            return True
    return False


class TowerElement:
    __slots__ = ("field", "coeffs")

    def __init__(self, field: QuadraticTower, coeffs):
        self.field = field
        self.coeffs = tuple(coeffs)

    def _pair(self, other):
        """Return (a, b) representing (self, other) in a common field, or None."""
        if isinstance(other, TowerElement):
            if other.field == self.field:
                return self, other
            if other.field.is_subfield_of(self.field):
                return self, self.field._embed(other)
            if self.field.is_subfield_of(other.field):
                return other.field._embed(self), other
            raise MixedFields(f"{self.field!r} vs {other.field!r}")
        if isinstance(other, (int, Fraction)):
            return self, self.field(other)
        return None

    def __add__(self, other):
        pr = self._pair(other)
        if pr is None:
            return NotImplemented
        a, b = pr
        return TowerElement(a.field, tuple(p + q for p, q in zip(a.coeffs, b.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return TowerElement(self.field, tuple(-p for p in self.coeffs))

    def __sub__(self, other):
        pr = self._pair(other)
        if pr is None:
            return NotImplemented
        a, b = pr
        return TowerElement(a.field, tuple(p - q for p, q in zip(a.coeffs, b.coeffs)))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return TowerElement(self.field, tuple(p * other for p in self.coeffs))
        pr = self._pair(other)
        if pr is None:
            return NotImplemented
        a, b = pr
        table = a.field._mul_table
        out = [Fraction(0)] * a.field.size
        for s, p in enumerate(a.coeffs):
            if not p:
                continue
            row = table[s]
            for t, q in enumerate(b.coeffs):
                if q:
                    idx, f = row[t]
                    out[idx] += p * q * f
        return TowerElement(a.field, tuple(out))

    __rmul__ = __mul__

    def conjugate(self, i: int):
        bit = 1 << i
        return TowerElement(
            self.field,
            tuple(-v if mask & bit else v for mask, v in enumerate(self.coeffs)),
        )

    def inverse(self):
        if not self:
            raise DivisionByZero("division by zero in quadratic tower")
        num = self.field.one
        cur = self
        for i in range(self.field.m):
            c = cur.conjugate(i)
            num = num * c
            cur = cur * c
        return num * (1 / cur.coeffs[0])

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise DivisionByZero("division by zero")
            return self * (1 / Fraction(other))
        pr = self._pair(other)
        if pr is None:
            return NotImplemented
        a, b = pr
        return a * b.inverse()

    def __rtruediv__(self, other):
        return self.field(other) * self.inverse()

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        out = self.field.one
        for _ in range(n):
            out = out * self
        return out

    def __bool__(self):
        return any(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.coeffs[0] == other and not any(self.coeffs[1:])
        if isinstance(other, TowerElement):
            try:
                a, b = self._pair(other)
            except MixedFields:
                return False
            return a.coeffs == b.coeffs
        return NotImplemented

    def __hash__(self):
        if self.is_rational():
            return hash(self.coeffs[0])
        return hash((self.field, self.coeffs))

    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    def rational_part(self) -> Fraction:
        return self.coeffs[0]

    def leading(self) -> Fraction:
        for v in self.coeffs:
            if v:
                return v
        return Fraction(0)

    def __repr__(self):
        return f"<{self.field.format(self)}>"

    def __str__(self):
        return self.field.format(self)


# ---------------------------------------------------------------------------
# Prime fields


class PrimeField:
    kind = "prime_field"
    radicands: tuple = ()

    def __init__(self, p: int):
        p = int(p)
        if p <= 5 or not isprime(p):
            raise BadField(f"modulus must be a prime > 5, got {p}")
        self.p = p
        self.zero = ModP(0, p)
        self.one = ModP(1, p)

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("fp", self.p))

    def __repr__(self):
        return f"PrimeField({self.p})"

    def __call__(self, x) -> "ModP":
        if isinstance(x, ModP):
            if x.p != self.p:
                raise MixedFields(f"F_{x.p} vs F_{self.p}")
            return x
        if isinstance(x, int):
            return ModP(x % self.p, self.p)
        if isinstance(x, Fraction):
            if x.denominator % self.p == 0:
                raise DivisionByZero(f"denominator of {x} vanishes mod {self.p}")
            return ModP(x.numerator * pow(x.denominator, -1, self.p) % self.p, self.p)
        if isinstance(x, str):
            return self.parse(x)
        raise MixedFields(f"cannot coerce {x!r} into F_{self.p}")

    def parse(self, s: str) -> "ModP":
        return self(_parse_fraction(s))

    def format(self, x) -> str:
        return str(self(x).v)

    def try_sqrt(self, x):
        x = self(x)
        if not x.v:
            return x
        roots = sqrt_mod(x.v, self.p, all_roots=True)
        if not roots:
            return None
        return ModP(min(roots), self.p)

    def is_subfield_of(self, other) -> bool:
        return self == other

    def descriptor(self) -> str:
        return f"fp:{self.p}"


class ModP:
    __slots__ = ("v", "p")

    def __init__(self, v: int, p: int):
        self.v = v
        self.p = p

    def _c(self, other):
        if isinstance(other, ModP):
            if other.p != self.p:
                raise MixedFields(f"F_{self.p} vs F_{other.p}")
            return other.v
        if isinstance(other, int):
            return other % self.p
        if isinstance(other, Fraction):
            if other.denominator % self.p == 0:
                raise DivisionByZero(f"{other} is not defined mod {self.p}")
            return other.numerator * pow(other.denominator, -1, self.p) % self.p
        return None

    def __add__(self, other):
        o = self._c(other)
        if o is None:
            return NotImplemented
        return ModP((self.v + o) % self.p, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._c(other)
        if o is None:
            return NotImplemented
        return ModP((self.v - o) % self.p, self.p)

    def __rsub__(self, other):
        o = self._c(other)
        if o is None:
            return NotImplemented
        return ModP((o - self.v) % self.p, self.p)

    def __neg__(self):
        return ModP(-self.v % self.p, self.p)

    def __mul__(self, other):
        o = self._c(other)
        if o is None:
            return NotImplemented
        return ModP(self.v * o % self.p, self.p)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._c(other)
        if o is None:
            return NotImplemented
        if not o:
            raise DivisionByZero(f"division by zero mod {self.p}")
        return ModP(self.v * pow(o, -1, self.p) % self.p, self.p)

    def __rtruediv__(self, other):
        o = self._c(other)
        if o is None:
            return NotImplemented
        if not self.v:
            raise DivisionByZero(f"division by zero mod {self.p}")
        return ModP(o * pow(self.v, -1, self.p) % self.p, self.p)

    def __pow__(self, n: int):
        return ModP(pow(self.v, n, self.p), self.p)

    def __bool__(self):
        return self.v != 0

    def __eq__(self, other):
        if isinstance(other, ModP):
            return self.p == other.p and self.v == other.v
        if isinstance(other, int):
            return self.v == other % self.p
        return NotImplemented

    def __hash__(self):
        return hash((self.v, self.p))

    def __repr__(self):
        return f"{self.v} mod {self.p}"


Scalar = Union[Fraction, TowerElement, ModP]


def field_of(x):
    if isinstance(x, TowerElement):
        return x.field
    if isinstance(x, ModP):
        return PrimeField(x.p)
    if isinstance(x, (int, Fraction)):
        return RATIONALS
    raise MixedFields(f"{x!r} is not a supported scalar")


def common_field(*fields):
    """Smallest field among ``fields`` containing all the others."""
    out = RATIONALS
    for f in fields:
        if f == out or f.is_subfield_of(out):
            continue
        if out.is_subfield_of(f):
            out = f
            continue
        raise MixedFields(f"{out!r} vs {f!r}")
    return out


_OPS = {
    "add": lambda a, b: a + b,
    "sub": lambda a, b: a - b,
    "mul": lambda a, b: a * b,
    "div": lambda a, b: a / b,
}


def field_arithmetic(a, b, op: str):
    if field_of(a) != field_of(b):
        raise MixedFields(f"{field_of(a)!r} vs {field_of(b)!r}")
    if op == "div" and not b:
        raise DivisionByZero("division by zero")
    try:
        return _OPS[op](a, b)
    except ZeroDivisionError as exc:
        raise DivisionByZero(str(exc)) from exc


def try_sqrt(field, x):
    return field.try_sqrt(x)


def adjoin_sqrt(field, d):
    """Return ``field`` if d is already a square in it, else the tower extended by sqrt d."""
    if isinstance(field, PrimeField):
        raise BadField("square roots are only adjoined to Q or quadratic towers")
    d = field(d)
    if not d:
        raise ZeroRadicand("cannot adjoin sqrt(0)")
    if field.try_sqrt(d) is not None:
        return field
    if isinstance(d, TowerElement):
        if not d.is_rational():
            raise UnsupportedRadicand(f"radicand {d} is not rational")
        d = d.rational_part()
    s = squarefree_part(d)
    if isinstance(field, Rationals):
        return QuadraticTower((s,))
    return field.extend(s)


def parse_field(spec: str):
    """Parse ``q``, ``qsqrt``, ``qsqrt:2,3`` or ``fp:<p>``."""
    spec = spec.strip().lower()
    if spec in ("q", "qq", "rationals", "qsqrt"):
        return RATIONALS
    if spec.startswith("qsqrt:"):
        rads = [int(x) for x in spec[6:].split(",") if x.strip()]
        return QuadraticTower(rads) if rads else RATIONALS
    if spec.startswith("fp:"):
        try:
            return PrimeField(int(spec[3:]))
        except ValueError as exc:
            raise BadField(f"bad prime in {spec!r}") from exc
    raise BadField(f"unknown field {spec!r}")


def format_scalar(x) -> str:
    """Canonical string of a scalar in its own field."""
    return field_of(x).format(x)
