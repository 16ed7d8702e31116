"""Classification of constant rank 4 planes of 6x6 skew matrices.

The classifier follows the geometric argument directly.  A plane whose images
span only a hyperplane H lies in the second exterior power of H (type 5).
Otherwise its generic line is general, and the pivots of a grid of lines
decide the rest: three pivots spanning V give type G; pivots through a common
point give type P, or type T when they all coincide.  Each branch builds an
explicit basis change and the result is checked against the normal form.
"""

from __future__ import annotations

import logging
import random
from dataclasses import dataclass, field as dc_field

from .errors import (
    BadField,
    ConstructionFailed,
    DimensionMismatch,
    MissingWitness,
    NotConstantRank,
    UnexpectedLocus,
    UnsupportedDimension,
    WitnessVerificationFailed,
)
from .exterior import SkewTensor, act, dual_two_form, gauss_map, wedge
from .fields import RATIONALS, Rationals, adjoin_sqrt, format_scalar
from .linalg import (
    complement,
    contains,
    coordinates,
    det,
    identity,
    intersect,
    inverse,
    nullspace,
    rank,
    same_span,
    solve,
    span,
    subspace_sum,
    transpose,
)
from .normal_forms import LABELS, PI_G, PI_P, PI_T, PI5, canonical_label, normal_form
from .order5 import Order5Report, classify_plane_order5
from .polys import HomogPoly
from .rank import LineReport, MatrixSubspace, RankCertificate, classify_line, constant_rank_four, kernel_image

log = logging.getLogger(__name__)

__all__ = [
    "OrbitReport",
    "SpecialLocus",
    "classify_plane",
    "special_locus",
    "verify_witness",
    "random_plane",
    "random_gl",
    "no_constant_rank_3space",
    "dual_grid",
    "line_of",
    "restrict_to_hyperplane",
    "corollary_chain",
]


# ---------------------------------------------------------------------------
# reports


@dataclass
class OrbitReport:
    label: str
    witness: list | None = None
    hyperplane_witness: tuple | None = None
    extension_radicands: list = dc_field(default_factory=list)
    order5: Order5Report | None = None
    certificate: RankCertificate | None = None
    grid_size: int = 0

    def to_json(self):
        out = {"label": self.label}
        out["witness"] = None if self.witness is None else [
            [format_scalar(x) for x in row] for row in self.witness
        ]
        out["hyperplane_witness"] = None if self.hyperplane_witness is None else [
            [format_scalar(x) for x in v] for v in self.hyperplane_witness
        ]
        out["extension_radicands"] = [int(d) for d in self.extension_radicands]
        if self.order5 is not None:
            out["order5"] = self.order5.to_json()
        if self.certificate is not None:
            out["certificate"] = self.certificate.to_json()
        return out


@dataclass
class SpecialLocus:
    kind: str  # empty | conic | pencil_line | all
    defining_form: HomogPoly | None = None

    def to_json(self):
        return {
            "kind": self.kind,
            "defining_form": None if self.defining_form is None else self.defining_form.to_json(),
        }


# ---------------------------------------------------------------------------
# lines of a plane


def dual_grid(radius: int = 2):
    """Dual points [1:i:j], [0:1:j], [0:0:1] with |i|, |j| <= radius."""
    pts = [(1, i, j) for i in range(-radius, radius + 1) for j in range(-radius, radius + 1)]
    pts += [(0, 1, j) for j in range(-radius, radius + 1)]
    pts.append((0, 0, 1))
    return pts


def line_of(plane: MatrixSubspace, lam):
    """The line {x : lam . x = 0} of a plane, as a 2-generator subspace."""
    F = plane.field
    lam = [F(v) for v in lam]
    ns = nullspace([lam], 3, F)
    return MatrixSubspace((plane.point(ns[0]), plane.point(ns[1])))


def _cross(u, v):
    return [u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0]]


# ---------------------------------------------------------------------------
# type 5


def restrict_to_hyperplane(plane: MatrixSubspace, hyper):
    """Coordinates of a plane inside the second exterior power of H (echelon basis of H)."""
    F = plane.field
    comp = complement(hyper, 6, F)
    base = transpose([list(v) for v in hyper] + comp)
    binv = inverse(base)
    gens = []
    for w in plane.generators:
        m = act(binv, w).matrix()
        if any(m[5][j] for j in range(6)):
            raise ConstructionFailed("generator not contained in the hyperplane")
        gens.append(SkewTensor.from_matrix([row[:5] for row in m[:5]]))
    return MatrixSubspace(tuple(gens))


# ---------------------------------------------------------------------------
# type G


def _split_in(w: SkewTensor, a, b, F):
    """Solve w = sum_ij C_ij a_i ^ b_j; returns the 2x2 matrix C or None."""
    cols = []
    for ai in a:
        for bj in b:
            cols.append(_wedge_vec(ai, bj, F))
    mat = [[cols[c][r] for c in range(4)] for r in range(len(cols[0]))]
    sol = solve(mat, list(w.coeffs), F)
    if sol is None:
        return None
    return [[sol[0], sol[1]], [sol[2], sol[3]]]


def _wedge_vec(u, v, F):
    """Coordinates of u ^ v for vectors u, v of length 6."""
    from .exterior import pairs

    return [u[i] * v[j] - u[j] * v[i] for i, j in pairs(len(u))]


def _lin(coefs, vecs, F):
    out = [F.zero] * len(vecs[0])
    for c, v in zip(coefs, vecs):
        if c:
            out = [x + c * y for x, y in zip(out, v)]
    return out


def _hyperbolic_basis(S, F):
    """Q with Q^T S Q = [[0,1],[1,0]] for a nonsingular symmetric 2x2 S.

    Returns (Q, field) where field may be a quadratic extension of F.
    """
    x, y, z = S[0][0], S[0][1], S[1][1]
    if not x * z - y * y:
        raise ConstructionFailed("degenerate quadratic form")
    if not x:
        u = [F.one, F.zero]
        w = [-z, 2 * y]
    else:
        disc = y * y - x * z
        r = F.try_sqrt(disc)
        if r is None:
            F = adjoin_sqrt(F, disc)
            r = F.try_sqrt(F(disc))
            x, y, z = F(x), F(y), F(z)
        u = [-y + r, x]
        w = [-y - r, x]
    u = [F(v) for v in u]
    w = [F(v) for v in w]
    x, y, z = F(x), F(y), F(z)
    usw = u[0] * (x * w[0] + y * w[1]) + u[1] * (y * w[0] + z * w[1])
    w = [v / usw for v in w]
    return [[u[0], w[0]], [u[1], w[1]]], F


def _disc_is_square(S, F):
    x, y, z = S[0][0], S[0][1], S[1][1]
    if not x:
        return True
    return F.try_sqrt(y * y - x * z) is not None


def _g_data(plane, l1, l2, l3, F):
    """Decompose V along three general lines whose pivots together span V."""
    (lam1, d1), (lam2, d2), (lam3, d3) = l1, l2, l3
    p12 = _cross(lam1, lam2)
    p13 = _cross(lam1, lam3)
    p23 = _cross(lam2, lam3)
    if rank([p12, p13, p23]) < 3:
        raise ConstructionFailed("concurrent lines")
    w12, w13, w23 = plane.point(p12), plane.point(p13), plane.point(p23)
    a = [list(v) for v in d1]
    b = [list(v) for v in d2]
    c = [list(v) for v in d3]
    C = _split_in(w12, a, b, F)
    D = _split_in(w13, a, c, F)
    if C is None or D is None:
        raise ConstructionFailed("intersection point not in the wedge of pivots")
    e2, e3 = _lin(C[0], b, F), _lin(C[1], b, F)
    e4, e5 = _lin(D[0], c, F), _lin(D[1], c, F)
    S = _split_in(w23, [e2, e3], [e4, e5], F)
    if S is None:
        raise ConstructionFailed("third point not in the wedge of pivots")
    if S[0][1] != S[1][0]:
        raise ConstructionFailed("plane is not in the Pfaffian hypersurface")
    return a, [e2, e3], [e4, e5], S


def _g_witness(a, b, c, S, F):
    Q, F2 = _hyperbolic_basis(S, F)
    qinv_t = transpose(inverse(Q, F2))
    a = [[F2(x) for x in v] for v in a]
    b = [[F2(x) for x in v] for v in b]
    c = [[F2(x) for x in v] for v in c]
    a2 = [_lin([Q[0][j], Q[1][j]], a, F2) for j in range(2)]
    b2 = [_lin([qinv_t[0][j], qinv_t[1][j]], b, F2) for j in range(2)]
    c2 = [_lin([qinv_t[0][j], qinv_t[1][j]], c, F2) for j in range(2)]
    f = a2 + b2 + c2
    cols = [f[0], f[3], f[5], f[1], f[2], f[4]]
    return transpose(cols), F2


# ---------------------------------------------------------------------------
# type P


def _basis_coords(plane, base):
    binv = inverse(base)
    return [act(binv, w) for w in plane.generators]


def _p_witness(plane: MatrixSubspace, e0, F):
    """Normal form through the common point e0 of the pivots."""
    comp = complement([e0], 6, F)
    base = transpose([list(e0)] + comp)
    ts = _basis_coords(plane, base)
    mats = [t.matrix() for t in ts]
    psi = [[m[0][j] for j in range(1, 6)] for m in mats]
    rho = [[[m[i][j] for j in range(1, 6)] for i in range(1, 6)] for m in mats]
    U = span([row for r in rho for row in r], 5)
    if len(U) != 3:
        raise ConstructionFailed(f"residual images span dimension {len(U)}")
    # omega_c: combination with psi in U
    ucomp_rows = nullspace([list(v) for v in U], 5, F)  # annihilator of U
    eqs = [[sum((n[j] * psi[i][j] for j in range(5)), start=F.zero) for i in range(3)] for n in ucomp_rows]
    kc = nullspace(eqs, 3, F)
    if len(kc) != 1:
        raise ConstructionFailed("psi mod U does not have a one-dimensional kernel")
    xc = kc[0]

    def comb(x, vecs):
        return _lin(x, vecs, F)

    def comb_mat(x):
        out = [[F.zero] * 5 for _ in range(5)]
        for c, m in zip(x, rho):
            if c:
                out = [[p + c * q for p, q in zip(r1, r2)] for r1, r2 in zip(out, m)]
        return out

    E1 = comb(xc, psi)
    if not any(E1):
        raise ConstructionFailed("psi vanishes on omega_c")
    # solve sum x_i rho_i = E1 ^ k for (x, k)
    from .exterior import pairs

    prs = pairs(5)
    cols = []
    for i in range(3):
        cols.append([rho[i][p][q] for p, q in prs])
    for j in range(5):
        ej = [F.one if t == j else F.zero for t in range(5)]
        cols.append([-(E1[p] * ej[q] - E1[q] * ej[p]) for p, q in prs])
    mat = [[cols[c][r] for c in range(8)] for r in range(len(prs))]
    ns = nullspace(mat, 8, F)
    sols = [(v[:3], v[3:]) for v in ns if any(v[:3])]
    chosen = []
    for xv, kv in sols:
        if rank([c[0] for c in chosen] + [xv]) > len(chosen):
            chosen.append((xv, kv))
        if len(chosen) == 2:
            break
    if len(chosen) != 2:
        raise ConstructionFailed("W1 is not a plane")
    (xa, e3), (xb, e5) = chosen
    if rank([xa, xb, xc]) < 3:
        raise ConstructionFailed("omega_c lies in W1")
    rc = comb_mat(xc)
    target = [rc[p][q] for p, q in prs]
    basis2 = [_wedge_vec(e3, e5, F), _wedge_vec(E1, e3, F), _wedge_vec(E1, e5, F)]
    sol = solve([[basis2[c][r] for c in range(3)] for r in range(len(prs))], target, F)
    if sol is None:
        raise ConstructionFailed("rho(omega_c) not in the wedge of <E1, e3, e5>")
    lam, mu, nu = sol
    if not lam:
        raise ConstructionFailed("rho(omega_c) has no e3^e5 part")
    e3 = [p + (nu / lam) * q for p, q in zip(e3, E1)]
    e5 = [p + (-mu / lam) * q for p, q in zip(e5, E1)]
    inv = F.one / lam
    xa = [inv * v for v in xa]
    xb = [inv * v for v in xb]
    xc = [inv * v for v in xc]
    E1 = comb(xc, psi)
    E2 = comb(xa, psi)
    E4 = comb(xb, psi)
    # back to coordinates of V: y-coordinates -> base columns 1..5, e0 -> column 0
    def lift(v, e0coef=None):
        full = [F.zero] + list(v)
        return [sum((base[r][c] * full[c] for c in range(6)), start=F.zero) for r in range(6)]

    E0 = list(e0)
    cols = [E0, [-t for t in lift(e3)], [-t for t in lift(e5)], lift(E1), lift(E4), lift(E2)]
    g = transpose(cols)
    if not det(g):
        raise ConstructionFailed("P-type basis is singular")
    return g


# ---------------------------------------------------------------------------
# type T


def _t_witness(plane: MatrixSubspace, pivot, F):
    d = [list(v) for v in pivot]
    comp = complement(d, 6, F)
    base = transpose(d + comp)
    ts = _basis_coords(plane, base)
    mats = [t.matrix() for t in ts]
    for m in mats:
        if any(m[i][j] for i in range(2, 6) for j in range(2, 6)):
            raise ConstructionFailed("plane not contained in pivot ^ V")
    fv = [[m[0][j] for j in range(2, 6)] for m in mats]
    gv = [[m[1][j] for j in range(2, 6)] for m in mats]
    Fs = span(fv, 4)
    Gs = span(gv, 4)
    if len(Fs) != 3 or len(Gs) != 3:
        raise ConstructionFailed("f or g is not injective")
    FG = intersect(Fs, Gs, F)
    if len(FG) != 2:
        raise ConstructionFailed("images of f and g do not meet in a plane")

    def preimage(vals, target):
        # {x in C^3 : sum x_i vals_i in target}
        ann = nullspace([list(v) for v in target], 4, F)
        eqs = [[sum((n[j] * vals[i][j] for j in range(4)), start=F.zero) for i in range(3)] for n in ann]
        return nullspace(eqs, 3, F)

    wf = preimage(fv, FG)
    wg = preimage(gv, FG)
    wb = intersect(wf, wg, F)
    if len(wb) != 1:
        raise ConstructionFailed("W_f and W_g do not meet in a point")
    xb = list(wb[0])

    def apply(vals, x):
        return _lin(x, vals, F)

    def solve_pre(vals, target):
        sol = solve([[vals[i][r] for i in range(3)] for r in range(4)], target, F)
        if sol is None:
            raise ConstructionFailed("value outside the image")
        return sol

    xa = solve_pre(gv, apply(fv, xb))
    xc = solve_pre(fv, apply(gv, xb))
    if rank([xa, xb, xc]) < 3:
        raise ConstructionFailed("a, b, c dependent")
    e2, e3 = apply(fv, xa), apply(fv, xb)
    e4, e5 = apply(fv, xc), apply(gv, xc)
    # e0^e1 coefficients x, y, z of the three combinations
    def c01(x):
        return sum((xi * m[0][1] for xi, m in zip(x, mats)), start=F.zero)

    x0, y0, z0 = c01(xa), c01(xb), c01(xc)

    def lift(v):
        full = [F.zero, F.zero] + list(v)
        return [sum((base[r][c] * full[c] for c in range(6)), start=F.zero) for r in range(6)]

    E0, E1 = d
    cols = [E0, E1, lift(e2)]
    for v, s in ((e3, x0), (e4, y0), (e5, z0)):
        lv = lift(v)
        cols.append([p - s * q for p, q in zip(lv, E0)])
    g = transpose(cols)
    if not det(g):
        raise ConstructionFailed("T-type basis is singular")
    return g


# ---------------------------------------------------------------------------
# driver


def _general_lines(plane, radius):
    F = plane.field
    for lam in dual_grid(radius):
        lam = tuple(F(v) for v in lam)
        rep = classify_line(line_of(plane, lam), check=False)
        yield lam, rep


def _try_identity(plane: MatrixSubspace):
    if plane.dim_v != 6:
        return None
    for label in LABELS:
        nf = normal_form(label)
        if plane.same_span(nf):
            return label
    return None


def classify_plane(plane: MatrixSubspace, check: bool = True, max_radius: int = 5) -> OrbitReport:
    """Label a constant rank 4 plane of 6x6 skew matrices and build a witness."""
    if plane.dim_v != 6:
        raise UnsupportedDimension("plane classification is for 6x6 matrices; use classify_plane_order5")
    if plane.k != 3:
        raise DimensionMismatch(f"a plane needs 3 generators, got {plane.k}")
    cert = constant_rank_four(plane) if check else None
    if cert is not None and not cert:
        raise NotConstantRank(cert.reason)
    F = plane.field

    images = [kernel_image(w)[1] for w in plane.generators]
    hyper = subspace_sum(*images)
    label = _try_identity(plane)
    if len(hyper) == 5:
        restricted = restrict_to_hyperplane(plane, hyper)
        o5 = classify_plane_order5(restricted, check=False)
        rep = OrbitReport("Plane5", hyperplane_witness=hyper, order5=o5, certificate=cert)
        if label == "Plane5":
            rep.witness = identity(6, F)
        return rep
    if label is not None:
        return OrbitReport(label, witness=identity(6, F), certificate=cert)

    radius = 2
    while radius <= max_radius:
        rep = _classify_with_grid(plane, radius, F)
        if rep is not None:
            rep.certificate = cert
            rep.grid_size = len(dual_grid(radius))
            if not verify_witness(rep, plane):
                raise WitnessVerificationFailed(f"{rep.label} witness does not map the normal form onto the input")
            return rep
        log.info("dual grid of radius %d insufficient; extending", radius)
        radius += 1
    raise ConstructionFailed("grid exhausted without a decision")


def _classify_with_grid(plane, radius, F):
    general = []
    disjoint_pair = False
    for lam, rep in _general_lines(plane, radius):
        if rep.kind != "general":
            continue
        if not disjoint_pair:
            disjoint_pair = any(rank([*piv, *rep.pivot]) == 4 for _, piv in general)
        general.append((lam, rep.pivot))
    if len(general) < 3:
        return None
    if disjoint_pair:
        return _classify_g(plane, general, F)
    pivots = []
    for _, piv in general:
        if not any(same_span(piv, q) for q in pivots):
            pivots.append(piv)
    if len(pivots) == 1:
        g = _t_witness(plane, pivots[0], F)
        return OrbitReport("PlaneT", witness=g)
    point = intersect(pivots[0], pivots[1], F)
    if len(point) != 1 or not all(contains(p, point[0]) for p in pivots):
        raise ConstructionFailed("pivots meet pairwise but share no common point")
    g = _p_witness(plane, point[0], F)
    return OrbitReport("PlaneP", witness=g)


def _classify_g(plane, general, F, max_triples: int = 60):
    first = None
    tried = 0
    n = len(general)
    for i in range(n):
        for j in range(i + 1, n):
            if rank([*general[i][1], *general[j][1]]) < 4:
                continue
            for k in range(j + 1, n):
                li, lj, lk = general[i], general[j], general[k]
                if len(subspace_sum(li[1], lj[1], lk[1])) != 6:
                    continue
                try:
                    data = _g_data(plane, li, lj, lk, F)
                except ConstructionFailed:
                    continue
                tried += 1
                if first is None:
                    first = data
                if _disc_is_square(data[3], F):
                    g, F2 = _g_witness(*data, F)
                    return OrbitReport("PlaneG", witness=g)
                if tried >= max_triples:
                    break
            if tried >= max_triples:
                break
        if tried >= max_triples:
            break
    if first is None:
        return None
    g, F2 = _g_witness(*first, F)
    rads = list(F2.radicands[len(getattr(F, "radicands", ())):]) if F2 != F else []
    return OrbitReport("PlaneG", witness=g, extension_radicands=rads)


def verify_witness(report: OrbitReport, plane: MatrixSubspace) -> bool:
    """Does the witness carry the label's normal form onto the plane's span?"""
    if report.witness is None:
        if report.hyperplane_witness is None:
            raise MissingWitness("report carries no witness")
        hyper = report.hyperplane_witness
        return len(hyper) == 5 and all(
            same_span(subspace_sum(hyper, kernel_image(w)[1]), hyper) for w in plane.generators
        )
    g = report.witness
    if len(g) != plane.dim_v:
        return False
    nf = normal_form(report.label)
    image = [act(g, w) for w in nf.generators]
    return same_span([list(w.coeffs) for w in image], list(plane.basis))


# ---------------------------------------------------------------------------
# special lines


def _kernel_plucker(w: SkewTensor) -> SkewTensor:
    return dual_two_form(gauss_map(w))


def special_locus(plane: MatrixSubspace, check: bool = True) -> SpecialLocus:
    """Locus in the dual plane of lines whose members share a kernel vector."""
    import sympy

    if plane.dim_v != 6 or plane.k != 3:
        raise DimensionMismatch("special locus needs a plane of 6x6 matrices")
    if not isinstance(plane.field, Rationals):
        raise BadField("special locus is computed over the rationals only")
    if check:
        cert = constant_rank_four(plane)
        if not cert:
            raise NotConstantRank(cert.reason)
    F = plane.field
    lam = [HomogPoly.variable(i, 3, F) for i in range(3)]
    units = [[F.one if i == j else F.zero for j in range(3)] for i in range(3)]
    pts = [_cross(lam, u) for u in units]

    def tensor_at(x):
        coeffs = []
        for pos in range(15):
            acc = HomogPoly(3, 1, {}, F)
            for xi, g in zip(x, plane.generators):
                c = g.coeffs[pos]
                if c and xi:
                    acc = acc + xi * c
            coeffs.append(acc)
        return SkewTensor(6, tuple(coeffs))

    kappas = [_kernel_plucker(tensor_at(p)) for p in pts]
    polys = []
    for i, j in ((0, 1), (0, 2), (1, 2)):
        four = wedge(kappas[i], kappas[j])
        polys.extend(c for c in four.coeffs if c)
    if not polys:
        return SpecialLocus("all")
    syms = sympy.symbols("a b c")
    g = None
    for p in polys:
        e = p.to_sympy(syms)
        g = e if g is None else sympy.gcd(g, e)
        if g.is_number:
            return SpecialLocus("empty")
    sqf = sympy.sqf_part(sympy.Poly(g, *syms))
    deg = sqf.total_degree()
    form = HomogPoly.from_sympy(sqf.as_expr(), syms, F)
    if deg == 0:
        return SpecialLocus("empty")
    if deg == 1:
        return SpecialLocus("pencil_line", form)
    if deg == 2:
        hess = sympy.hessian(sqf.as_expr(), syms)
        if hess.det() != 0:
            return SpecialLocus("conic", form)
    raise UnexpectedLocus(f"special-line polynomial of degree {deg}: {sqf.as_expr()}")


# ---------------------------------------------------------------------------
# random corpus


def random_gl(n: int, rng: random.Random, box: int = 3, field=RATIONALS):
    while True:
        g = [[field(rng.randint(-box, box)) for _ in range(n)] for _ in range(n)]
        if det(g):
            return g


def random_plane(label: str, seed: int, box: int = 3) -> MatrixSubspace:
    """A random conjugate of a normal form, with the generators mixed as well."""
    label = canonical_label(label)
    rng = random.Random(f"{label}:{seed}")
    g = random_gl(6, rng, box)
    mix = random_gl(3, rng, 2)
    gens = [act(g, w) for w in normal_form(label).generators]
    mixed = []
    for row in mix:
        acc = None
        for c, w in zip(row, gens):
            t = c * w
            acc = t if acc is None else acc + t
        mixed.append(acc)
    return MatrixSubspace(tuple(mixed))


def no_constant_rank_3space(space: MatrixSubspace) -> RankCertificate:
    """Constant rank 4 test for a 3-space; returns a certificate that is always false in practice."""
    if space.k != 4:
        raise DimensionMismatch(f"a 3-space needs 4 generators, got {space.k}")
    if space.dim_v != 6:
        raise UnsupportedDimension("3-spaces of 6x6 matrices only")
    return constant_rank_four(space)


# ---------------------------------------------------------------------------
# the constraint chain for a 3-space through a P-type plane


@dataclass
class ChainReport:
    first: list  # coordinate functionals spanned by Omega^w^w for w in the plane generators
    second: list  # ... by the mixed products
    quadric: HomogPoly  # Omega^Omega^w'' restricted to the linear solutions
    residual_decomposable: bool  # every Omega satisfying all conditions has rank <= 2
    residual_basis: list = dc_field(default_factory=list)


def corollary_chain(omegas, free_pairs):
    """Replay the elimination for Omega = sum of free coordinates against a plane.

    ``free_pairs`` lists the (i, j) coordinates of Omega left free.  Returns the
    functionals, the quadric on their common kernel, and the largest rank of a
    residual Omega (the constraint chain forces rank <= 2).
    """
    from .exterior import triple_pfaffian

    F = RATIONALS
    n = len(free_pairs)
    units = [SkewTensor.from_terms(6, [(1, i, j)]) for i, j in free_pairs]

    def functional(a, b):
        return [triple_pfaffian(u, a, b) for u in units]

    w, w1, w2 = omegas
    first = [functional(w, w), functional(w1, w1), functional(w2, w2)]
    second = [functional(w, w1), functional(w, w2), functional(w1, w2)]
    sol = nullspace(first + second, n, F)
    # quadric Omega ^ Omega ^ w2 on the solution space
    k = len(sol)
    xs = [HomogPoly.variable(i, k, F) for i in range(k)]
    coeffs = []
    for pos in range(15):
        acc = HomogPoly(k, 1, {}, F)
        for x, s in zip(xs, sol):
            v = sum((s[t] * units[t].coeffs[pos] for t in range(n)), start=F.zero)
            if v:
                acc = acc + x * v
        coeffs.append(acc)
    omega_sym = SkewTensor(6, tuple(coeffs))
    quad = triple_pfaffian(omega_sym, omega_sym, w2)
    if not isinstance(quad, HomogPoly):
        quad = HomogPoly(k, 2, {}, F)
    # linear part of the quadric's zero set: directions where the quadric's Gram matrix vanishes
    gram = [[F.zero] * k for _ in range(k)]
    for exp, c in quad.coeffs.items():
        idx = [i for i, e in enumerate(exp) for _ in range(e)]
        i, j = idx
        if i == j:
            gram[i][i] = gram[i][i] + c
        else:
            gram[i][j] = gram[i][j] + c / 2
            gram[j][i] = gram[j][i] + c / 2
    radical = nullspace(gram, k, F) if k else []
    residual = []
    for r in radical:
        v = [sum((r[t] * s[i] for t, s in enumerate(sol)), start=F.zero) for i in range(n)]
        residual.append(SkewTensor.from_dict(6, {p: c for p, c in zip(free_pairs, v)}))
    from .polys import gauss_quadrics

    decomposable = bool(residual) and not any(gauss_quadrics(residual))
    return ChainReport(first, second, quad, decomposable, residual)
