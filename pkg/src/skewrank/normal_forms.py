"""Normal forms of constant rank 4 lines and planes, and their stabilizer families.

Indices are 0-based throughout.  The order-5 plane ``PI5_ORDER5`` lives on
C^5 = <e0..e4>; ``PI5`` is the same plane placed in the hyperplane
H = <e0..e4> of C^6, so its 6x6 matrices have a zero last row and column.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import UnknownLabel
from .exterior import SkewTensor
from .rank import MatrixSubspace

__all__ = [
    "LABELS",
    "canonical_label",
    "PI_G",
    "PI_T",
    "PI_P",
    "PI5",
    "PI5_ORDER5",
    "ELL_G",
    "ELL_S",
    "normal_form",
    "pi_t_stabilizer_family",
    "pi_p_stabilizer_family",
    "pi5_sl2_family",
    "pi_t_matrix",
    "pi_p_matrix",
    "pi5_sl2_matrix",
]

LABELS = ("PlaneG", "PlaneT", "PlaneP", "Plane5")


def _t(dim, *terms):
    return SkewTensor.from_terms(dim, terms)


PI_G = MatrixSubspace.of(
    _t(6, (1, 0, 4), (-1, 1, 3)),
    _t(6, (1, 0, 5), (-1, 2, 3)),
    _t(6, (1, 1, 5), (-1, 2, 4)),
)

PI_T = MatrixSubspace.of(
    _t(6, (1, 0, 2), (1, 1, 3)),
    _t(6, (1, 0, 3), (1, 1, 4)),
    _t(6, (1, 0, 4), (1, 1, 5)),
)

PI_P = MatrixSubspace.of(
    _t(6, (1, 0, 3), (1, 1, 2)),
    _t(6, (1, 0, 4), (1, 2, 3)),
    _t(6, (1, 0, 5), (1, 1, 3)),
)

# e1^e4+e2^e3, e1^e5+e2^e4, e2^e5+e3^e4 in 1-based labels
PI5_ORDER5 = MatrixSubspace.of(
    _t(5, (1, 0, 3), (1, 1, 2)),
    _t(5, (1, 0, 4), (1, 1, 3)),
    _t(5, (1, 1, 4), (1, 2, 3)),
)

PI5 = MatrixSubspace.of(
    _t(6, (1, 0, 3), (1, 1, 2)),
    _t(6, (1, 0, 4), (1, 1, 3)),
    _t(6, (1, 1, 4), (1, 2, 3)),
)

ELL_G = MatrixSubspace.of(
    _t(6, (1, 0, 2), (1, 1, 3)),
    _t(6, (1, 0, 4), (1, 1, 5)),
)

ELL_S = MatrixSubspace.of(
    _t(6, (1, 0, 2), (1, 1, 3)),
    _t(6, (1, 0, 4), (1, 1, 2)),
)

_BY_LABEL = {"PlaneG": PI_G, "PlaneT": PI_T, "PlaneP": PI_P, "Plane5": PI5}
_ALIASES = {
    "pi_g": "PlaneG", "g": "PlaneG",
    "pi_t": "PlaneT", "t": "PlaneT",
    "pi_p": "PlaneP", "p": "PlaneP",
    "pi_5": "Plane5", "pi5": "Plane5", "5": "Plane5",
}


def canonical_label(name: str) -> str:
    if name in _BY_LABEL:
        return name
    key = name.lower().replace("-", "_")
    if key in _ALIASES:
        return _ALIASES[key]
    raise UnknownLabel(f"unknown plane type {name!r}")


def normal_form(label: str) -> MatrixSubspace:
    return _BY_LABEL[canonical_label(label)]


def _F(rows):
    return [[Fraction(x) for x in r] for r in rows]


def pi_t_matrix(x=0, y=0, z=0, u=0, v=0, p=0, q=0, r=0, s=0, t=0):
    """Member of the ten-parameter stabilizer family of PI_T."""
    return _F([
        [x + u, z, p, q, r, s],
        [y, v + u, q, r, s, t],
        [0, 0, 3 * v, -y, 0, 0],
        [0, 0, -3 * z, x + 2 * v, -2 * y, 0],
        [0, 0, 0, -2 * z, 2 * x + v, -3 * y],
        [0, 0, 0, 0, -z, 3 * x],
    ])


def pi_p_matrix(u00=0, u10=0, u20=0, u30=0, u40=0, u50=0, u11=0, u21=0, u12=0, u22=0,
                u33=None, u44=None, u55=None):
    """Member of the ten-parameter stabilizer family of PI_P.

    The diagonal entries u33, u44, u55 default to the values forced by the
    dependence relations; passing them explicitly allows violating those.
    As written, the u20 direction is not exact: the solved algebra carries
    -2*u20 in position (3, 4), not -u20.
    """
    if u33 is None:
        u33 = -u00 + u11 + u22
    if u44 is None:
        u44 = -2 * u00 + u11 + 2 * u22
    if u55 is None:
        u55 = -2 * u00 + 2 * u11 + u22
    return _F([
        [u00, u10, u20, u30, u40, u50],
        [0, u11, u21, u20, 0, u30],
        [0, u12, u22, -u10, u30, 0],
        [0, 0, 0, u33, -u20, -2 * u10],
        [0, 0, 0, 0, u44, u12],
        [0, 0, 0, 0, u21, u55],
    ])


def pi5_sl2_matrix(x=0, y=0, z=0):
    """Member of a three-parameter sl2 family in sl5.

    Only the x direction stabilizes PI5_ORDER5.  The transposed family is
    exactly the sl5 stabilizer of PI5_ORDER5 after the sign change
    diag(1, 1, -1, -1, -1).
    """
    return _F([
        [2 * x, -2 * z, 0, 0, 0],
        [-y, x, z, 0, 0],
        [0, 3 * y, 0, 3 * z, 0],
        [0, 0, y, -x, z],
        [0, 0, 0, 2 * y, -2 * x],
    ])


def _unit_family(fn, names):
    return [fn(**{n: 1}) for n in names]


def pi_t_stabilizer_family():
    return _unit_family(pi_t_matrix, "x y z u v p q r s t".split())


def pi_p_stabilizer_family():
    return _unit_family(pi_p_matrix, "u00 u10 u20 u30 u40 u50 u11 u21 u12 u22".split())


def pi5_sl2_family():
    return _unit_family(pi5_sl2_matrix, "x y z".split())
