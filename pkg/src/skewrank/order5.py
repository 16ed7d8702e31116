"""Reduction of a constant rank 4 plane of 5x5 skew matrices to the family

    A = e1^e2 + e3^e4,   B = e1^e3 + e2^f,   C = e1^e5 + e2^g,

with f = f3 e3 + f4 e4 + f5 e5 and g in {e3, e4}.  Labels e1..e5 are the
0-based indices 0..4 in code.  The Gauss images of the plane are hyperplanes
of C^5 meeting in a 2-plane l = <e1, e2>; everything else is read off in a
basis adapted to l and a complement P.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .errors import ChowIntersection, ConstructionFailed, UnsupportedDimension, DimensionMismatch
from .exterior import SkewTensor, act
from .fields import format_scalar
from .linalg import complement, intersect, inverse, nullspace, rank, span, solve, transpose
from .rank import MatrixSubspace, constant_rank_four

__all__ = ["Order5Report", "classify_plane_order5", "order5_family", "family_rank_condition"]


def order5_family(branch: str, f, field=None) -> list:
    """The three reduced generators for a branch ("g_is_e3"/"g_is_e4") and f = (f3, f4, f5)."""
    F = field if field is not None else _field_of_params(f)
    f3, f4, f5 = (F(x) for x in f)
    one = F.one
    a = SkewTensor.from_terms(5, [(one, 0, 1), (one, 2, 3)], F)
    b = SkewTensor.from_terms(5, [(one, 0, 2), (f3, 1, 2), (f4, 1, 3), (f5, 1, 4)], F)
    g = 2 if branch == "g_is_e3" else 3
    c = SkewTensor.from_terms(5, [(one, 0, 4), (one, 1, g)], F)
    return [a, b, c]


def _field_of_params(f):
    from .fields import common_field, field_of

    return common_field(*(field_of(x) for x in f))


def family_rank_condition(branch: str, f) -> bool:
    """Exact constant-rank-4 condition of the family (derived by elimination)."""
    f3, f4, f5 = f
    if branch == "g_is_e3":
        return bool(f4) and bool(f5)
    return bool(f5) and bool(f5 + f3 * f4)


def literal_constraint(branch: str, f) -> bool:
    f3, f4, f5 = f
    if branch == "g_is_e3":
        return bool(f4) and bool(f5)
    return bool(f3) and bool(f4) and bool(f5)


@dataclass
class Order5Report:
    reduced_generators: list
    branch: str
    f_params: tuple
    reduction_basis: list  # columns are e1..e5 in input coordinates
    literal_constraint: bool
    rank_condition: bool
    ell: tuple = ()

    def verify(self, plane: MatrixSubspace) -> bool:
        image = MatrixSubspace(tuple(act(self.reduction_basis, w) for w in self.reduced_generators))
        return image.same_span(plane)

    def to_json(self):
        return {
            "branch": self.branch,
            "f_params": [format_scalar(x) for x in self.f_params],
            "reduction_basis": [[format_scalar(x) for x in r] for r in self.reduction_basis],
            "literal_constraint": self.literal_constraint,
            "rank_condition": self.rank_condition,
        }


def _blocks(t: SkewTensor):
    m = t.matrix()
    ll = m[0][1]
    lp = [[m[i][j] for j in range(2, 5)] for i in range(2)]
    pp = [[m[i][j] for j in range(2, 5)] for i in range(2, 5)]
    return ll, lp, pp


def _attempt(plane: MatrixSubspace, ell_basis, F):
    """One reduction with a fixed ordered basis (e1, e2) of l; raises ConstructionFailed."""
    zero, one = F.zero, F.one
    pcomp = complement(ell_basis, 5, F)
    base = transpose([list(v) for v in ell_basis] + pcomp)
    binv = inverse(base)
    ts = [act(binv, w) for w in plane.generators]
    blocks = [_blocks(t) for t in ts]

    # pi1 = plane meet (l ^ V): combinations with vanishing P^P block
    pp_rows = [[b[2][0][1], b[2][0][2], b[2][1][2]] for b in blocks]
    pi1 = nullspace(transpose(pp_rows), 3, F)
    if len(pi1) != 2:
        raise ConstructionFailed("plane does not meet l^V in a line")

    def combo(x):
        out = None
        for c, t in zip(x, ts):
            if c:
                out = c * t if out is None else out + c * t
        return out

    a_idx = next(i for i, r in enumerate(pp_rows) if any(r))
    a_t = ts[a_idx]
    rho = _blocks(a_t)[2]
    kvec = nullspace(rho, 3, F)
    if len(kvec) != 1:
        raise ConstructionFailed("P^P part of A is not of rank 2")
    kvec = kvec[0]

    def dot(u, v):
        acc = zero
        for x, y in zip(u, v):
            acc = acc + x * y
        return acc

    t1, t2 = combo(pi1[0]), combo(pi1[1])
    p1, q1 = _blocks(t1)[1]
    p2, q2 = _blocks(t2)[1]

    def pick(u1, u2):
        # combination s t1 + r t2 whose component lies in R = ker(rho)^perp
        c1, c2 = dot(kvec, u1), dot(kvec, u2)
        if not c1 and not c2:
            raise ConstructionFailed("whole pencil satisfies the R-condition")
        return (-c2, c1)

    sb = pick(p1, p2)
    sc = pick(q1, q2)
    b_t = sb[0] * t1 + sb[1] * t2
    c_t = sc[0] * t1 + sc[1] * t2
    if rank([list(b_t.coeffs), list(c_t.coeffs)]) < 2:
        raise ConstructionFailed("B and C coincide")
    e3 = _blocks(b_t)[1][0]
    e5 = _blocks(c_t)[1][0]
    g = _blocks(c_t)[1][1]
    if rank([e3, g]) == 1:
        branch = "g_is_e3"
        r_basis = span([rho[i] for i in range(3)], 3)
        e4 = next((list(v) for v in r_basis if rank([e3, list(v)]) == 2), None)
        if e4 is None:
            raise ConstructionFailed("R is not a plane")
    else:
        branch = "g_is_e4"
        e4 = list(g)
    if rank([e3, e4, e5]) < 3:
        raise ConstructionFailed("e3, e4, e5 dependent")

    # basis (e1, e2, e3, e4, e5) in the l+P coordinates, before lifting
    pvecs = [e3, e4, e5]
    b1 = [[one, zero, zero, zero, zero], [zero, one, zero, zero, zero]]
    b1 += [[zero, zero] + list(v) for v in pvecs]
    m1 = transpose(b1)
    m1inv = inverse(m1)
    a1, bb1, cc1 = (act(m1inv, t) for t in (a_t, b_t, c_t))
    all_, alp, app = _blocks(a1)
    bll, blp, _ = _blocks(bb1)
    cll, clp, _ = _blocks(cc1)

    # unknowns: N (2x3, row-major, N[i][k] = l_i-component of the lift of e_{3+k}), x, y
    rows, rhs = [], []
    for i in range(2):
        for j in range(3):
            row = [zero] * 8
            # (N A_pp)[i][j] = sum_k N[i][k] app[k][j]
            for k in range(3):
                row[3 * i + k] = -app[k][j]
            row[6] = blp[i][j]
            row[7] = clp[i][j]
            rows.append(row)
            rhs.append(-alp[i][j])
    for tll, tlp in ((bll, blp), (cll, clp)):
        # (N T_lp^T - T_lp N^T)[0][1] = sum_k N[0][k] T_lp[1][k] - T_lp[0][k] N[1][k]
        row = [zero] * 8
        for k in range(3):
            row[k] = row[k] + tlp[1][k]
            row[3 + k] = row[3 + k] - tlp[0][k]
        rows.append(row)
        rhs.append(-tll)
    sol = solve(rows, rhs, F)
    if sol is None:
        raise ConstructionFailed("lift system is inconsistent")
    n_mat = [sol[0:3], sol[3:6]]
    x, y = sol[6], sol[7]
    lift = [[one if i == j else zero for j in range(5)] for i in range(5)]
    for i in range(2):
        for k in range(3):
            lift[i][2 + k] = n_mat[i][k]
    m2 = [[sum((m1[r][c] * lift[c][s] for c in range(5)), start=zero) for s in range(5)] for r in range(5)]
    m2inv = inverse(m2)
    a_full = a_t + x * b_t + y * c_t
    a2, b2, c2 = (act(m2inv, t) for t in (a_full, b_t, c_t))
    lam = a2[(0, 1)]
    alpha = a2[(2, 3)]
    gamma = c2[(1, 2)] if branch == "g_is_e3" else c2[(1, 3)]
    if not lam or not alpha or not gamma:
        raise ConstructionFailed("degenerate normalisation constants")

    s = [one, one, one, alpha / lam, one / gamma] if branch == "g_is_e3" else \
        [one, one, one, alpha / lam, alpha / lam]
    # coordinates in the scaled basis e_i'' = s_i e_i are T_ij / (s_i s_j)
    def rescale(t, c):
        m = t.matrix()
        return SkewTensor.from_matrix(
            [[m[i][j] * c / (s[i] * s[j]) for j in range(5)] for i in range(5)]
        )

    a3 = rescale(a2, one / lam)
    b3 = rescale(b2, one)
    c3 = rescale(c2, s[3] if branch == "g_is_e4" else one / gamma)
    fparams = (b3[(1, 2)], b3[(1, 3)], b3[(1, 4)])
    family = order5_family(branch, fparams, F)
    full = [[sum((base[r][c] * m2[c][t] for c in range(5)), start=zero) for t in range(5)] for r in range(5)]
    basis = [[full[r][c] * s[c] for c in range(5)] for r in range(5)]
    if not (a3 == family[0] and b3 == family[1] and c3 == family[2]):
        raise ConstructionFailed("normalised generators differ from the family")
    return Order5Report(
        reduced_generators=family,
        branch=branch,
        f_params=fparams,
        reduction_basis=basis,
        literal_constraint=literal_constraint(branch, fparams),
        rank_condition=family_rank_condition(branch, fparams),
        ell=tuple(tuple(v) for v in ell_basis),
    )


def _ell_changes(F):
    rng = (0, 1, -1, 2, -2)
    yield [[F.one, F.zero], [F.zero, F.one]]
    yield [[F.zero, F.one], [F.one, F.zero]]
    for a, b, c, d in product(rng, repeat=4):
        if a * d - b * c == 0:
            continue
        yield [[F(a), F(b)], [F(c), F(d)]]


def _pencil_lines(plane, F):
    """Common image 2-planes l of pencils of the plane (each pencil lies in l ^ V)."""
    from .planes import dual_grid, line_of
    from .rank import kernel_image

    seen = []
    lams = [(1, 0, 0), (0, 1, 0), (0, 0, 1)] + [l for l in dual_grid(2) if l not in ((1, 0, 0), (0, 1, 0), (0, 0, 1))]
    for lam in lams:
        pencil = line_of(plane, lam)
        a, b = pencil.generators
        imgs = [kernel_image(w)[1] for w in (a, b, a + b)]
        ell = intersect(intersect(imgs[0], imgs[1], F), imgs[2], F)
        if len(ell) != 2 or ell in seen:
            continue
        seen.append(ell)
        yield ell


def classify_plane_order5(plane: MatrixSubspace, max_attempts: int = 400, check: bool = True) -> Order5Report:
    """Reduce a constant rank 4 plane in the second exterior power of C^5 to its normal family."""
    if plane.dim_v != 5:
        raise UnsupportedDimension("order-5 reduction needs 5x5 matrices")
    if plane.k != 3:
        raise DimensionMismatch(f"a plane needs 3 generators, got {plane.k}")
    if check:
        cert = constant_rank_four(plane)
        if not cert:
            raise ChowIntersection("plane meets the Grassmannian G(1,4): " + cert.reason)
    F = plane.field
    fallback = None
    ells = list(_pencil_lines(plane, F))
    n = 0
    # cheap changes of basis first, across every pencil, before exotic ones
    for change in _ell_changes(F):
        for ell in ells:
            if n >= max_attempts:
                return _fallback_or_fail(fallback)
            n += 1
            eb = [[change[i][0] * ell[0][c] + change[i][1] * ell[1][c] for c in range(5)] for i in range(2)]
            try:
                rep = _attempt(plane, eb, F)
            except ConstructionFailed:
                continue
            if not rep.verify(plane):
                continue
            if rep.literal_constraint and rep.rank_condition:
                return rep
            if fallback is None:
                fallback = rep
    return _fallback_or_fail(fallback)


def _fallback_or_fail(fallback):
    if fallback is not None:
        return fallback
    raise ConstructionFailed("no basis of l led to the normal family")
