"""Kernel and image data along lines and planes of skew matrices.

A polynomial kernel section of degree d on a k-space W = <w_1..w_k> is a
vector v(x) of degree-d forms in x_1..x_k with (sum x_i w_i) v(x) = 0
identically.  Counting these degree by degree gives integer invariants of the
kernel bundle: on a line they are the Kronecker minimal indices of the pencil,
on a plane they separate the four orbits.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ConsistencyError, DimensionMismatch, NotConstantRank, ZeroCoefficients
from .linalg import nullspace, rank, span
from .polys import monomials
from .rank import MatrixSubspace, constant_rank_four, kernel_image

__all__ = [
    "BundleFingerprint",
    "polynomial_kernel_dim",
    "minimal_indices_line",
    "plane_kernel_fingerprint",
    "fingerprint",
    "image_fiber_check",
]


@dataclass(frozen=True)
class BundleFingerprint:
    degree0_kernel_dim: int
    degree1_kernel_dim: int
    degree2_kernel_dim: int
    line_minimal_indices: tuple | None = None

    def to_json(self):
        out = {
            "degree0_kernel_dim": self.degree0_kernel_dim,
            "degree1_kernel_dim": self.degree1_kernel_dim,
            "degree2_kernel_dim": self.degree2_kernel_dim,
        }
        if self.line_minimal_indices is not None:
            out["d1"], out["d2"] = self.line_minimal_indices
        return out


def _require_constant(space):
    cert = constant_rank_four(space)
    if not cert:
        raise NotConstantRank(cert.reason)


def polynomial_kernel_dim(space: MatrixSubspace, degree: int) -> int:
    """Dimension of the degree-``degree`` polynomial kernel sections of the space."""
    n, k, F = space.dim_v, space.k, space.field
    mats = space.matrices()
    src = monomials(k, degree)
    dst = {m: i for i, m in enumerate(monomials(k, degree + 1))}
    # unknown block alpha (n coordinates each), equation block beta = alpha + e_i
    rows = [[F.zero] * (n * len(src)) for _ in range(n * len(dst))]
    for a, alpha in enumerate(src):
        for i in range(k):
            beta = list(alpha)
            beta[i] += 1
            b = dst[tuple(beta)]
            m = mats[i]
            for r in range(n):
                row = rows[b * n + r]
                for c in range(n):
                    if m[r][c]:
                        row[a * n + c] = row[a * n + c] + m[r][c]
    return n * len(src) - rank(rows)


def minimal_indices_line(line: MatrixSubspace, check: bool = True) -> tuple:
    """Kronecker minimal indices (d1 <= d2) of the kernel of the pencil s*A + t*B.

    With kernel bundle O(-d1) + O(-d2) on the line, the number of degree-d
    sections is sum max(0, d - d_i + 1); second differences recover the d_i.
    """
    if line.k != 2:
        raise DimensionMismatch(f"a line needs 2 generators, got {line.k}")
    if check:
        _require_constant(line)
    corank = line.dim_v - 4
    counts = []
    indices = []
    d = 0
    while len(indices) < corank:
        counts.append(polynomial_kernel_dim(line, d))
        prev = counts[d - 1] if d >= 1 else 0
        prev2 = counts[d - 2] if d >= 2 else 0
        indices.extend([d] * (counts[d] - 2 * prev + prev2))
        d += 1
        if d > 2 * line.dim_v:
            raise ConsistencyError("kernel degrees did not close up")
    if len(indices) != corank:
        raise ConsistencyError(f"found {len(indices)} minimal indices for a kernel of rank {corank}")
    return tuple(indices)


def plane_kernel_fingerprint(plane: MatrixSubspace, check: bool = True) -> BundleFingerprint:
    """Integer kernel-section counts, with lower-degree multiples removed.

    degree1 = N1 - k*N0 and degree2 = N2 - k*N1 + C(k,2)*N0 count sections not
    obtained as products of lower-degree sections with linear forms.
    """
    if check:
        _require_constant(plane)
    k = plane.k
    n0, n1, n2 = (polynomial_kernel_dim(plane, d) for d in range(3))
    d1 = n1 - k * n0
    d2 = n2 - k * n1 + (k * (k - 1) // 2) * n0
    indices = minimal_indices_line(plane, check=False) if k == 2 else None
    return BundleFingerprint(n0, d1, d2, indices)


def fingerprint(space: MatrixSubspace, check: bool = True) -> BundleFingerprint:
    return plane_kernel_fingerprint(space, check=check)


def image_fiber_check(plane: MatrixSubspace, coeffs):
    """Echelon basis of the image of the matrix at the given point of the space."""
    if not any(coeffs):
        raise ZeroCoefficients("all coefficients are zero")
    return kernel_image(plane.point(coeffs))[1]
