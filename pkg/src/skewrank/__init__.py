"""Exact computations with linear spaces of skew-symmetric matrices of constant rank 4.

The main entry points are re-exported here; see the submodules for details.
"""

from .bundles import BundleFingerprint, minimal_indices_line, plane_kernel_fingerprint
from .exterior import SkewTensor, pfaffian, triple_pfaffian, wedge
from .fields import RATIONALS, PrimeField, QuadraticTower, parse_field
from .normal_forms import ELL_G, ELL_S, LABELS, PI5, PI5_ORDER5, PI_G, PI_P, PI_T, normal_form
from .order5 import Order5Report, classify_plane_order5
from .planes import (
    OrbitReport,
    classify_plane,
    corollary_chain,
    no_constant_rank_3space,
    random_plane,
    special_locus,
    verify_witness,
)
from .polys import projective_empty
from .rank import MatrixSubspace, classify_line, constant_rank_four, rank_at
from .stabilizer import orbit_dimension, stabilizer_algebra

__version__ = "0.1.0"

__all__ = [
    "BundleFingerprint",
    "ELL_G",
    "ELL_S",
    "LABELS",
    "MatrixSubspace",
    "OrbitReport",
    "Order5Report",
    "PI5",
    "PI5_ORDER5",
    "PI_G",
    "PI_P",
    "PI_T",
    "PrimeField",
    "QuadraticTower",
    "RATIONALS",
    "SkewTensor",
    "classify_line",
    "classify_plane",
    "classify_plane_order5",
    "constant_rank_four",
    "corollary_chain",
    "minimal_indices_line",
    "no_constant_rank_3space",
    "normal_form",
    "orbit_dimension",
    "parse_field",
    "pfaffian",
    "plane_kernel_fingerprint",
    "projective_empty",
    "random_plane",
    "rank_at",
    "special_locus",
    "stabilizer_algebra",
    "triple_pfaffian",
    "verify_witness",
    "wedge",
]
