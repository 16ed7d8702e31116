"""Linear spaces of skew matrices, pointwise rank, and the constant rank 4 test."""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from functools import cached_property

from .errors import (
    ConsistencyError,
    DependentGenerators,
    DimensionMismatch,
    NotConstantRank,
    UnsupportedDimension,
    ZeroCoefficients,
    ZeroTensor,
)
from .exterior import SkewTensor, act
from .fields import common_field, format_scalar
from .linalg import intersect, matvec, nullspace, rank, same_span, span, subspace_sum
from .polys import HomogPoly, MacaulayCertificate, gauss_quadrics, pfaffian_cubic, projective_empty

__all__ = [
    "MatrixSubspace",
    "LineReport",
    "RankCertificate",
    "rank_at",
    "kernel_image",
    "constant_rank_four",
    "classify_line",
    "transform_subspace",
]


@dataclass(frozen=True, eq=False)
class MatrixSubspace:
    """k linearly independent skew tensors (1 <= k <= 4) on V of dim 5 or 6."""

    generators: tuple

    def __post_init__(self):
        gens = tuple(self.generators)
        object.__setattr__(self, "generators", gens)
        if not 1 <= len(gens) <= 4:
            raise DimensionMismatch(f"{len(gens)} generators; expected 1 to 4")
        dims = {g.dim for g in gens}
        if len(dims) != 1:
            raise DimensionMismatch(f"generators of mixed dimensions {sorted(dims)}")
        if gens[0].dim not in (5, 6):
            raise UnsupportedDimension(f"dim V = {gens[0].dim}; expected 5 or 6")
        F = self.field
        rows = [[F(x) for x in g.coeffs] for g in gens]
        if rank(rows) < len(gens):
            raise DependentGenerators("generators are linearly dependent")
        object.__setattr__(self, "generators", tuple(SkewTensor(g.dim, tuple(r)) for g, r in zip(gens, rows)))

    @classmethod
    def of(cls, *generators):
        return cls(tuple(generators))

    @classmethod
    def from_matrices(cls, matrices):
        return cls(tuple(SkewTensor.from_matrix(m) for m in matrices))

    @property
    def dim_v(self) -> int:
        return self.generators[0].dim

    @property
    def k(self) -> int:
        return len(self.generators)

    @cached_property
    def field(self):
        return common_field(*(g.field for g in self.generators))

    @cached_property
    def basis(self):
        """Echelon basis of the span, as coordinate tuples."""
        return span([list(g.coeffs) for g in self.generators])

    def point(self, coeffs) -> SkewTensor:
        if len(coeffs) != self.k:
            raise DimensionMismatch(f"{len(coeffs)} coefficients for {self.k} generators")
        F = self.field
        out = None
        for c, g in zip(coeffs, self.generators):
            c = F(c)
            t = c * g
            out = t if out is None else out + t
        return out

    def transform(self, g) -> "MatrixSubspace":
        return MatrixSubspace(tuple(act(g, w) for w in self.generators))

    def same_span(self, other) -> bool:
        if other.dim_v != self.dim_v:
            return False
        return same_span(self.basis, other.basis)

    def contains(self, w: SkewTensor) -> bool:
        from .linalg import contains

        return contains(self.basis, list(w.coeffs))

    def matrices(self):
        return [g.matrix() for g in self.generators]

    def __repr__(self):
        return f"MatrixSubspace(dim_v={self.dim_v}, k={self.k}, {list(self.generators)})"


def transform_subspace(g, space: MatrixSubspace) -> MatrixSubspace:
    return space.transform(g)


def rank_at(space: MatrixSubspace, coeffs) -> int:
    if not any(coeffs):
        raise ZeroCoefficients("all coefficients are zero")
    return rank(space.point(coeffs).matrix())


def kernel_image(w: SkewTensor):
    """Echelon bases of ker and im of the matrix of w."""
    if not w:
        raise ZeroTensor("zero tensor has no well-defined kernel/image split")
    m = w.matrix()
    F = w.field
    ker = span(nullspace(m, w.dim, F), w.dim)
    img = span(m, w.dim)
    return ker, img


@dataclass
class RankCertificate:
    value: bool
    reason: str
    cubic: HomogPoly | None = None
    macaulay: MacaulayCertificate | None = None

    def __bool__(self):
        return self.value

    def to_json(self):
        return {
            "constant_rank_four": self.value,
            "reason": self.reason,
            "pfaffian_cubic": None if self.cubic is None else self.cubic.to_json(),
            "macaulay": None if self.macaulay is None else self.macaulay.to_json(),
        }


def constant_rank_four(space: MatrixSubspace) -> RankCertificate:
    """Exact decision of 'every nonzero element has rank 4', with certificate."""
    k = space.k
    if space.dim_v == 5:
        if k == 4:
            return RankCertificate(False, "every 3-space of 5x5 skew matrices meets the rank-2 locus")
        cubic = None
    else:
        cubic = pfaffian_cubic(space)
        if cubic:
            return RankCertificate(False, "Pfaffian cubic is not identically zero", cubic)
    cert = projective_empty(gauss_quadrics(space), k)
    if cert.empty:
        return RankCertificate(True, "no rank-2 point and no rank-6 point", cubic, cert)
    return RankCertificate(False, "Gauss quadrics have a common zero (rank-2 point)", cubic, cert)


@dataclass
class LineReport:
    kind: str  # "general" or "special"
    pivot: tuple | None = None
    hyperplane: tuple | None = None
    images: tuple = dc_field(default_factory=tuple)

    def __post_init__(self):
        if self.kind == "general":
            assert self.pivot is not None and self.hyperplane is None and len(self.pivot) == 2
        elif self.kind == "special":
            assert self.hyperplane is not None and self.pivot is None and len(self.hyperplane) == 5
        else:
            raise ValueError(f"unknown line kind {self.kind!r}")

    @property
    def witness(self):
        return self.pivot if self.kind == "general" else self.hyperplane

    def to_json(self):
        vecs = lambda b: [[format_scalar(x) for x in v] for v in b]
        out = {"kind": self.kind}
        if self.pivot is not None:
            out["pivot"] = vecs(self.pivot)
        if self.hyperplane is not None:
            out["hyperplane"] = vecs(self.hyperplane)
        return out


def _check_constant(space):
    cert = constant_rank_four(space)
    if not cert:
        raise NotConstantRank(cert.reason)
    return cert


def classify_line(line: MatrixSubspace, check: bool = True) -> LineReport:
    """General (pivot = common 2-plane of images) or special (common kernel vector)."""
    if line.k != 2:
        raise DimensionMismatch(f"a line needs 2 generators, got {line.k}")
    if line.dim_v != 6:
        raise UnsupportedDimension("line classification is for 6x6 matrices")
    if check:
        _check_constant(line)
    a, b = line.generators
    ka, la = kernel_image(a)
    kb, lb = kernel_image(b)
    common_ker = intersect(ka, kb)
    meet = intersect(la, lb)
    if len(meet) == 4:
        raise ConsistencyError("two distinct rank-4 points with equal images")
    if common_ker:
        hyper = subspace_sum(la, lb)
        if len(hyper) != 5 or len(meet) != 3:
            raise ConsistencyError("special line whose images do not span a hyperplane")
        return LineReport("special", hyperplane=hyper, images=(la, lb))
    if len(meet) != 2:
        raise ConsistencyError(f"general line with images meeting in dimension {len(meet)}")
    _, lc = kernel_image(a + b)
    if not same_span(intersect(meet, lc), meet):
        raise ConsistencyError("pivot not contained in the image at a third point")
    return LineReport("general", pivot=meet, images=(la, lb))


def apply_to_subspace(g, basis):
    """Echelon basis of g applied to the span of ``basis`` (column vectors)."""
    return span([matvec(g, list(v)) for v in basis])
