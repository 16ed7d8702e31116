"""Two- and four-vectors over V with dim V in {5, 6}.

Coordinates are stored in lexicographic order of strictly increasing index
tuples; every sign is the parity of the sorting permutation.  Coefficients may
be any ring elements supporting + and * (exact scalars, or polynomials when a
computation is run symbolically).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations

from .errors import DimensionMismatch, UnsupportedDimension
from .fields import RATIONALS, common_field, field_of

__all__ = [
    "SkewTensor",
    "FourTensor",
    "pairs",
    "quads",
    "perm_sign",
    "wedge",
    "gauss_map",
    "pfaffian",
    "triple_pfaffian",
    "volume_coefficient",
    "dual_covector",
    "dual_two_form",
    "act",
    "derive",
    "e",
]

_PAIRS = {n: tuple(combinations(range(n), 2)) for n in (2, 3, 4, 5, 6)}
_PAIR_INDEX = {n: {p: i for i, p in enumerate(ps)} for n, ps in _PAIRS.items()}
_QUADS = {n: tuple(combinations(range(n), 4)) for n in (4, 5, 6)}
_QUAD_INDEX = {n: {q: i for i, q in enumerate(qs)} for n, qs in _QUADS.items()}


def pairs(n: int):
    return _PAIRS[n]


def quads(n: int):
    return _QUADS[n]


def perm_sign(seq) -> int:
    """Sign of the permutation sorting ``seq`` (0 if an index repeats)."""
    seq = list(seq)
    if len(set(seq)) != len(seq):
        return 0
    sign = 1
    for i in range(len(seq)):
        for j in range(i + 1, len(seq)):
            if seq[i] > seq[j]:
                sign = -sign
    return sign


# the six ways of splitting i<j<k<l into an ordered pair of pairs
_SPLITS = (
    ((0, 1), (2, 3), 1),
    ((0, 2), (1, 3), -1),
    ((0, 3), (1, 2), 1),
    ((1, 2), (0, 3), 1),
    ((1, 3), (0, 2), -1),
    ((2, 3), (0, 1), 1),
)


def _check_dim(dim):
    if dim not in (4, 5, 6):
        raise UnsupportedDimension(f"dimension {dim} not supported")


@dataclass(frozen=True, eq=False)
class SkewTensor:
    """An element of the second exterior power, i.e. a skew-symmetric matrix."""

    dim: int
    coeffs: tuple

    def __post_init__(self):
        if len(self.coeffs) != len(_PAIRS[self.dim]):
            raise DimensionMismatch(
                f"expected {len(_PAIRS[self.dim])} coordinates for dim {self.dim}"
            )

    @classmethod
    def zero(cls, dim: int, field=RATIONALS):
        return cls(dim, (field.zero,) * len(_PAIRS[dim]))

    @classmethod
    def from_dict(cls, dim: int, coords, field=RATIONALS):
        """``coords`` maps (i, j) to a scalar; i > j entries are sign-flipped."""
        c = [field.zero] * len(_PAIRS[dim])
        idx = _PAIR_INDEX[dim]
        for (i, j), v in coords.items():
            if i == j:
                raise DimensionMismatch("diagonal entry in a skew tensor")
            v = field(v)
            if i > j:
                i, j, v = j, i, -v
            c[idx[(i, j)]] = c[idx[(i, j)]] + v
        return cls(dim, tuple(c))

    @classmethod
    def from_terms(cls, dim: int, terms, field=RATIONALS):
        """Build from ``[(coef, i, j), ...]`` meaning sum coef * e_i ^ e_j."""
        d = {}
        for coef, i, j in terms:
            key = (min(i, j), max(i, j))
            v = field(coef) if i < j else -field(coef)
            d[key] = d.get(key, field.zero) + v
        return cls.from_dict(dim, d, field)

    @classmethod
    def from_matrix(cls, m):
        n = len(m)
        return cls(n, tuple(m[i][j] for i, j in _PAIRS[n]))

    @cached_property
    def field(self):
        return common_field(*(field_of(x) for x in self.coeffs))

    def matrix(self):
        n = self.dim
        z = self.coeffs[0] * 0
        m = [[z] * n for _ in range(n)]
        for (i, j), v in zip(_PAIRS[n], self.coeffs):
            m[i][j] = v
            m[j][i] = -v
        return m

    def __getitem__(self, key):
        i, j = key
        if i == j:
            return self.coeffs[0] * 0
        if i < j:
            return self.coeffs[_PAIR_INDEX[self.dim][(i, j)]]
        return -self.coeffs[_PAIR_INDEX[self.dim][(j, i)]]

    @property
    def coords(self):
        return {p: v for p, v in zip(_PAIRS[self.dim], self.coeffs) if v}

    def _same(self, other):
        if not isinstance(other, SkewTensor):
            return False
        if other.dim != self.dim:
            raise DimensionMismatch(f"dim {self.dim} vs {other.dim}")
        return True

    def __add__(self, other):
        if not self._same(other):
            return NotImplemented
        return SkewTensor(self.dim, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other):
        if not self._same(other):
            return NotImplemented
        return SkewTensor(self.dim, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self):
        return SkewTensor(self.dim, tuple(-a for a in self.coeffs))

    def __rmul__(self, c):
        return SkewTensor(self.dim, tuple(c * a for a in self.coeffs))

    def __mul__(self, c):
        return SkewTensor(self.dim, tuple(a * c for a in self.coeffs))

    def __eq__(self, other):
        if not isinstance(other, SkewTensor) or other.dim != self.dim:
            return False
        return all(a == b for a, b in zip(self.coeffs, other.coeffs))

    def __hash__(self):
        return hash((self.dim, self.coeffs))

    def __bool__(self):
        return any(self.coeffs)

    def map(self, f):
        return SkewTensor(self.dim, tuple(f(a) for a in self.coeffs))

    def __repr__(self):
        terms = []
        for (i, j), v in self.coords.items():
            terms.append(f"{v}*e{i}^e{j}")
        return "SkewTensor(" + (" + ".join(terms) or "0") + ")"


@dataclass(frozen=True, eq=False)
class FourTensor:
    dim: int
    coeffs: tuple

    def __post_init__(self):
        if len(self.coeffs) != len(_QUADS[self.dim]):
            raise DimensionMismatch(
                f"expected {len(_QUADS[self.dim])} coordinates for dim {self.dim}"
            )

    def __getitem__(self, key):
        s = perm_sign(key)
        if s == 0:
            return self.coeffs[0] * 0
        v = self.coeffs[_QUAD_INDEX[self.dim][tuple(sorted(key))]]
        return v if s > 0 else -v

    @property
    def coords(self):
        return {q: v for q, v in zip(_QUADS[self.dim], self.coeffs) if v}

    def __eq__(self, other):
        if not isinstance(other, FourTensor) or other.dim != self.dim:
            return False
        return all(a == b for a, b in zip(self.coeffs, other.coeffs))

    def __hash__(self):
        return hash((self.dim, self.coeffs))

    def __bool__(self):
        return any(self.coeffs)

    def __add__(self, other):
        return FourTensor(self.dim, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other):
        return FourTensor(self.dim, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __rmul__(self, c):
        return FourTensor(self.dim, tuple(c * a for a in self.coeffs))

    def __repr__(self):
        terms = [f"{v}*e{''.join(map(str, q))}" for q, v in self.coords.items()]
        return "FourTensor(" + (" + ".join(terms) or "0") + ")"


def e(dim: int, i: int, j: int, coef=1, field=RATIONALS) -> SkewTensor:
    """The basis tensor coef * e_i ^ e_j."""
    return SkewTensor.from_terms(dim, [(coef, i, j)], field)


def wedge(w1: SkewTensor, w2: SkewTensor) -> FourTensor:
    if w1.dim != w2.dim:
        raise DimensionMismatch(f"dim {w1.dim} vs {w2.dim}")
    n = w1.dim
    _check_dim(n)
    idx = _PAIR_INDEX[n]
    a, b = w1.coeffs, w2.coeffs
    out = []
    for q in _QUADS[n]:
        acc = None
        for (p1, p2, s) in _SPLITS:
            x = a[idx[(q[p1[0]], q[p1[1]])]]
            y = b[idx[(q[p2[0]], q[p2[1]])]]
            t = x * y
            if s < 0:
                t = -t
            acc = t if acc is None else acc + t
        out.append(acc)
    return FourTensor(n, tuple(out))


def gauss_map(w: SkewTensor) -> FourTensor:
    return wedge(w, w)


def _pf(m, idx):
    if not idx:
        return 1
    first = idx[0]
    total = 0
    for k in range(1, len(idx)):
        a = m[first][idx[k]]
        if not a:
            continue
        rest = idx[1:k] + idx[k + 1:]
        term = a * _pf(m, rest)
        total = total + term if k % 2 == 1 else total - term
    return total


def pfaffian(w: SkewTensor, indices=None):
    """Pfaffian of the matrix of ``w`` or of its principal submatrix on ``indices``."""
    idx = list(range(w.dim)) if indices is None else sorted(indices)
    if len(idx) % 2:
        raise UnsupportedDimension("Pfaffian of an odd-order matrix")
    out = _pf(w.matrix(), idx)
    if isinstance(out, int):
        return w.field(out)
    return out


def volume_coefficient(four: FourTensor, two: SkewTensor):
    """Coefficient of e_0 ^ ... ^ e_5 in four ^ two (dim 6)."""
    if four.dim != 6 or two.dim != 6:
        raise UnsupportedDimension("volume pairing is defined for dim 6")
    idx = _PAIR_INDEX[6]
    acc = None
    for q, v in zip(_QUADS[6], four.coeffs):
        comp = tuple(i for i in range(6) if i not in q)
        t = v * two.coeffs[idx[comp]]
        if perm_sign(q + comp) < 0:
            t = -t
        acc = t if acc is None else acc + t
    return acc


def triple_pfaffian(w1: SkewTensor, w2: SkewTensor, w3: SkewTensor):
    """Coefficient of the volume form in w1 ^ w2 ^ w3; equals 6 Pf(w) on the diagonal."""
    if not (w1.dim == w2.dim == w3.dim):
        raise DimensionMismatch("triple product of tensors of different dimension")
    if w1.dim != 6:
        raise UnsupportedDimension("triple Pfaffian is defined for dim 6")
    return volume_coefficient(wedge(w1, w2), w3)


def dual_covector(four: FourTensor):
    """dim 5: the linear form v -> coefficient of the volume in four ^ v."""
    if four.dim != 5:
        raise UnsupportedDimension("covector duality needs dim 5")
    out = []
    for m in range(5):
        q = tuple(i for i in range(5) if i != m)
        v = four.coeffs[_QUAD_INDEX[5][q]]
        out.append(v if perm_sign(q + (m,)) > 0 else -v)
    return out


def dual_two_form(four: FourTensor) -> SkewTensor:
    """dim 6: the 2-form x^y -> coefficient of the volume in four ^ x ^ y.

    For four = w ^ w with w of rank 4 this is the Plucker vector of the kernel
    of w.
    """
    if four.dim != 6:
        raise UnsupportedDimension("2-form duality needs dim 6")
    out = []
    for p in _PAIRS[6]:
        q = tuple(i for i in range(6) if i not in p)
        v = four.coeffs[_QUAD_INDEX[6][q]]
        out.append(v if perm_sign(q + p) > 0 else -v)
    return SkewTensor(6, tuple(out))


def act(g, w: SkewTensor) -> SkewTensor:
    """Induced action of the matrix g: sum w_ij g e_i ^ g e_j, i.e. g W g^T."""
    n = w.dim
    if len(g) != n:
        raise DimensionMismatch(f"{len(g)}x{len(g)} matrix acting on dim {n}")
    out = []
    cols = list(zip(*g))
    nz = [(i, j, v) for (i, j), v in zip(_PAIRS[n], w.coeffs) if v]
    for a, b in _PAIRS[n]:
        acc = None
        for i, j, v in nz:
            t = v * (g[a][i] * g[b][j] - g[a][j] * g[b][i])
            acc = t if acc is None else acc + t
        if acc is None:
            acc = w.coeffs[0] * 0 + g[0][0] * 0
        out.append(acc)
    del cols
    return SkewTensor(n, tuple(out))


def derive(x, w: SkewTensor) -> SkewTensor:
    """Derivation action of x in gl(V): x W + W x^T."""
    n = w.dim
    m = w.matrix()
    out = []
    for a, b in _PAIRS[n]:
        acc = m[0][0] * 0
        for k in range(n):
            if x[a][k] and m[k][b]:
                acc = acc + x[a][k] * m[k][b]
            if m[a][k] and x[b][k]:
                acc = acc + m[a][k] * x[b][k]
        out.append(acc)
    return SkewTensor(n, tuple(out))
