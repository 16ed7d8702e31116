"""Exact dense linear algebra over the fields in :mod:`skewrank.fields`.

Matrices are lists of rows, vectors are lists; entries are field elements
(never bare ints, which would divide into floats).  Subspaces are represented
by a basis in reduced row echelon form, which makes equality a tuple compare.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm

from .fields import RATIONALS, field_of

__all__ = [
    "rref",
    "rank",
    "nullspace",
    "span",
    "intersect",
    "subspace_sum",
    "contains",
    "same_span",
    "complement",
    "coordinates",
    "solve",
    "det",
    "inverse",
    "matmul",
    "matvec",
    "transpose",
    "identity",
]


def _field(rows, field):
    if field is not None:
        return field
    for r in rows:
        for x in r:
            return field_of(x)
    return RATIONALS


def rref(rows, ncols: int | None = None):
    """Reduced row echelon form.  Returns (nonzero rows, pivot columns)."""
    m = [list(r) for r in rows]
    if not m:
        return [], []
    n = len(m[0]) if ncols is None else ncols
    pivots = []
    r = 0
    for c in range(n):
        p = None
        for i in range(r, len(m)):
            if m[i][c]:
                p = i
                break
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        inv = 1 / m[r][c]
        prow = [x * inv for x in m[r]]
        m[r] = prow
        for i in range(len(m)):
            if i != r:
                f = m[i][c]
                if f:
                    row = m[i]
                    m[i] = [a - f * b for a, b in zip(row, prow)]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def _int_rank(rows) -> int:
    # fraction-free elimination on integer rows with content removal
    m = []
    for r in rows:
        den = 1
        for x in r:
            den = lcm(den, x.denominator)
        ir = [int(x * den) for x in r]
        if any(ir):
            m.append(ir)
    if not m:
        return 0
    n = len(m[0])
    rk = 0
    for c in range(n):
        p = None
        for i in range(rk, len(m)):
            if m[i][c]:
                p = i
                break
        if p is None:
            continue
        m[rk], m[p] = m[p], m[rk]
        pr = m[rk]
        a = pr[c]
        for i in range(rk + 1, len(m)):
            b = m[i][c]
            if b:
                row = [a * x - b * y for x, y in zip(m[i], pr)]
                g = 0
                for x in row:
                    if x:
                        g = gcd(g, x)
                        if g == 1:
                            break
                if g > 1:
                    row = [x // g for x in row]
                m[i] = row
        rk += 1
        if rk == len(m):
            break
    return rk


def rank(rows) -> int:
    rows = [list(r) for r in rows]
    if not rows or not rows[0]:
        return 0
    if all(isinstance(x, Fraction) for r in rows for x in r):
        return _int_rank(rows)
    return len(rref(rows)[0])


def nullspace(rows, ncols: int, field=None):
    """Basis of {x : rows . x = 0}, one vector per free column."""
    F = _field(rows, field)
    zero, one = F.zero, F.one
    red, piv = rref(rows, ncols) if rows else ([], [])
    free = [c for c in range(ncols) if c not in piv]
    basis = []
    for f in free:
        v = [zero] * ncols
        v[f] = one
        for row, p in zip(red, piv):
            v[p] = -row[f]
        basis.append(v)
    return basis


def span(vectors, n: int | None = None):
    """Echelon basis (as a tuple of tuples) of the span of ``vectors``."""
    vectors = [list(v) for v in vectors]
    if not vectors:
        return ()
    red, _ = rref(vectors, n)
    return tuple(tuple(r) for r in red)


def subspace_sum(*spaces):
    rows = [list(v) for s in spaces for v in s]
    return span(rows)


def intersect(a, b, field=None):
    """Echelon basis of span(a) and span(b) intersected."""
    a = [list(v) for v in a]
    b = [list(v) for v in b]
    if not a or not b:
        return ()
    F = _field(a + b, field)
    n = len(a[0])
    # columns: a_i and -b_j; a null vector (x, y) gives sum x_i a_i in both
    cols = a + [[-x for x in v] for v in b]
    mat = [[cols[j][i] for j in range(len(cols))] for i in range(n)]
    ns = nullspace(mat, len(cols), F)
    vecs = []
    for z in ns:
        v = [F.zero] * n
        for i, coef in enumerate(z[: len(a)]):
            if coef:
                v = [p + coef * q for p, q in zip(v, a[i])]
        vecs.append(v)
    return span(vecs, n)


def contains(basis, v) -> bool:
    basis = [list(x) for x in basis]
    if not any(v):
        return True
    if not basis:
        return False
    return rank(basis + [list(v)]) == rank(basis)


def same_span(a, b) -> bool:
    a = [list(x) for x in a]
    b = [list(x) for x in b]
    ra = rank(a) if a else 0
    rb = rank(b) if b else 0
    if ra != rb:
        return False
    if ra == 0:
        return True
    return rank(a + b) == ra


def complement(basis, n: int, field=None):
    """Standard basis vectors spanning a complement (echelon non-pivot columns)."""
    F = _field(basis, field)
    _, piv = rref([list(v) for v in basis], n) if basis else ([], [])
    out = []
    for c in range(n):
        if c not in piv:
            v = [F.zero] * n
            v[c] = F.one
            out.append(v)
    return out


def coordinates(basis, v, field=None):
    """Coefficients c with sum c_i basis_i = v, or None if v is not in the span."""
    basis = [list(x) for x in basis]
    F = _field(basis + [list(v)], field)
    n = len(v)
    k = len(basis)
    mat = [[basis[j][i] for j in range(k)] + [v[i]] for i in range(n)]
    red, piv = rref(mat, k + 1)
    if k in piv:
        return None
    out = [F.zero] * k
    for row, p in zip(red, piv):
        out[p] = row[k]
    return out


def solve(mat, rhs, field=None):
    """One solution of mat . x = rhs (free variables set to zero), or None."""
    F = _field(mat + [list(rhs)], field)
    n = len(mat[0])
    aug = [list(r) + [b] for r, b in zip(mat, rhs)]
    red, piv = rref(aug, n + 1)
    if n in piv:
        return None
    x = [F.zero] * n
    for row, p in zip(red, piv):
        x[p] = row[n]
    return x


def det(mat):
    m = [list(r) for r in mat]
    n = len(m)
    F = _field(m, None)
    out = F.one
    for c in range(n):
        p = None
        for i in range(c, n):
            if m[i][c]:
                p = i
                break
        if p is None:
            return F.zero
        if p != c:
            m[c], m[p] = m[p], m[c]
            out = -out
        piv = m[c][c]
        out = out * piv
        inv = 1 / piv
        for i in range(c + 1, n):
            f = m[i][c] * inv
            if f:
                m[i] = [a - f * b for a, b in zip(m[i], m[c])]
    return out


def inverse(mat, field=None):
    F = _field(mat, field)
    n = len(mat)
    aug = [list(r) + [F.one if i == j else F.zero for j in range(n)] for i, r in enumerate(mat)]
    red, piv = rref(aug, 2 * n)
    if piv[:n] != list(range(n)) or len(piv) < n:
        raise ZeroDivisionError("singular matrix")
    return [row[n:] for row in red]


def matmul(a, b):
    bt = list(zip(*b))
    return [[sum((x * y for x, y in zip(row, col)), start=row[0] * 0) for col in bt] for row in a]


def matvec(a, v):
    return [sum((x * y for x, y in zip(row, v)), start=row[0] * 0) for row in a]


def transpose(a):
    return [list(r) for r in zip(*a)]


def identity(n: int, field=RATIONALS):
    return [[field.one if i == j else field.zero for j in range(n)] for i in range(n)]
