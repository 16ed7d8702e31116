"""Lie algebra stabilizers in gl(V) of subspaces of the second exterior power."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import SizeMismatch
from .exterior import derive
from .fields import format_scalar
from .linalg import nullspace, rref, same_span, span
from .rank import MatrixSubspace

__all__ = [
    "StabilizerBasis",
    "stabilizer_algebra",
    "orbit_dimension",
    "check_algebra_membership",
    "bracket",
    "same_algebra",
]


@dataclass
class StabilizerBasis:
    dim_v: int
    basis: list  # matrices (lists of rows)

    @property
    def dim(self) -> int:
        return len(self.basis)

    def flat(self):
        return [[x for row in m for x in row] for m in self.basis]

    def contains(self, x) -> bool:
        from .linalg import contains

        return contains(self.flat(), [v for row in x for v in row])

    def to_json(self):
        return {
            "dim_v": self.dim_v,
            "dim": self.dim,
            "basis": [[[format_scalar(v) for v in row] for row in m] for m in self.basis],
        }


def _residual_map(space: MatrixSubspace):
    """Linear map sending a coordinate vector to its coordinates outside span(W).

    Projection is along the coordinate complement of the echelon pivots of W.
    """
    red, piv = rref([list(v) for v in space.basis])
    ncoord = len(space.generators[0].coeffs)
    free = [c for c in range(ncoord) if c not in piv]

    def residual(vec):
        v = list(vec)
        for row, p in zip(red, piv):
            f = v[p]
            if f:
                v = [a - f * b for a, b in zip(v, row)]
        return [v[c] for c in free]

    return residual


def _constraint_rows(space: MatrixSubspace, extra_trace: bool = False):
    n = space.dim_v
    F = space.field
    residual = _residual_map(space)
    columns = []
    for a in range(n):
        for b in range(n):
            e_ab = [[F.one if (i, j) == (a, b) else F.zero for j in range(n)] for i in range(n)]
            col = []
            for w in space.generators:
                col.extend(residual(derive(e_ab, w).coeffs))
            columns.append(col)
    rows = [list(r) for r in zip(*columns)]
    if extra_trace:
        rows.append([F.one if a == b else F.zero for a in range(n) for b in range(n)])
    return rows


def stabilizer_algebra(space: MatrixSubspace, traceless: bool = False) -> StabilizerBasis:
    """Echelon basis of {X in gl(V) : X.w in W for every generator w}.

    With ``traceless`` the result is intersected with sl(V).
    """
    n = space.dim_v
    rows = _constraint_rows(space, traceless)
    ns = nullspace(rows, n * n, space.field)
    basis = span(ns, n * n)
    mats = [[list(v[i * n:(i + 1) * n]) for i in range(n)] for v in basis]
    return StabilizerBasis(n, mats)


def orbit_dimension(space: MatrixSubspace) -> int:
    return space.dim_v ** 2 - stabilizer_algebra(space).dim


def check_algebra_membership(space: MatrixSubspace, x) -> bool:
    n = space.dim_v
    if len(x) != n or any(len(r) != n for r in x):
        raise SizeMismatch(f"expected a {n}x{n} matrix")
    F = space.field
    x = [[F(v) for v in r] for r in x]
    residual = _residual_map(space)
    return all(not any(residual(derive(x, w).coeffs)) for w in space.generators)


def bracket(x, y):
    n = len(x)
    xy = [[sum((x[i][k] * y[k][j] for k in range(n)), start=x[0][0] * 0) for j in range(n)] for i in range(n)]
    yx = [[sum((y[i][k] * x[k][j] for k in range(n)), start=x[0][0] * 0) for j in range(n)] for i in range(n)]
    return [[a - b for a, b in zip(r1, r2)] for r1, r2 in zip(xy, yx)]


def same_algebra(mats_a, mats_b) -> bool:
    """Exact equality of the spans of two lists of square matrices."""
    fa = [[v for row in m for v in row] for m in mats_a]
    fb = [[v for row in m for v in row] for m in mats_b]
    return same_span(fa, fb)
