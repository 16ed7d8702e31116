"""End-to-end acceptance checks.

Each test prints one ``PASS``/``FAIL`` line with its measured runtime and
asserts both the mathematical statement and the time budget.  Nothing here
is loosened to make a check pass; a statement that does not hold exactly is
reported as a failure.
"""

from __future__ import annotations

import json
import random
import time
from fractions import Fraction

import pytest

from skewrank.bundles import minimal_indices_line, plane_kernel_fingerprint
from skewrank.cli import run_command
from skewrank.errors import ChowIntersection, DependentGenerators
from skewrank.exterior import SkewTensor, pfaffian, triple_pfaffian
from skewrank.fields import PrimeField
from skewrank.io import parse_input
from skewrank.linalg import det, identity, same_span, span
from skewrank.normal_forms import (
    ELL_G,
    ELL_S,
    LABELS,
    PI5_ORDER5,
    PI_P,
    PI_T,
    normal_form,
    pi5_sl2_family,
    pi_p_stabilizer_family,
    pi_t_stabilizer_family,
)
from skewrank.order5 import classify_plane_order5
from skewrank.planes import (
    classify_plane,
    corollary_chain,
    dual_grid,
    line_of,
    no_constant_rank_3space,
    random_gl,
    random_plane,
    special_locus,
    verify_witness,
)
from skewrank.polys import HomogPoly, gauss_quadrics, monomials, projective_empty
from skewrank.rank import MatrixSubspace, apply_to_subspace, classify_line
from skewrank.stabilizer import orbit_dimension, same_algebra, stabilizer_algebra

pytestmark = pytest.mark.acceptance

CORPUS_SIZE = 100


@pytest.fixture
def report(capsys):
    def emit(number, title, ok, seconds, budget, detail=""):
        status = "PASS" if ok and seconds < budget else "FAIL"
        line = f"{status} [{number:>2}] {title}: {seconds:.2f}s (budget {budget:g}s)"
        if detail:
            line += f"; {detail}"
        with capsys.disabled():
            print("\n" + line)
        return status == "PASS"

    return emit


def _unit(i, n=6):
    return [Fraction(int(i == j)) for j in range(n)]


# 1 -------------------------------------------------------------------------


def test_normal_form_classification(report):
    worst = 0.0
    ok = True
    for label in LABELS:
        plane = normal_form(label)
        doc = parse_input(json.dumps({
            "dim": 6,
            "field": "q",
            "generators": [[[str(x) for x in row] for row in m] for m in plane.matrices()],
        }))
        t0 = time.perf_counter()
        out = run_command("classify-plane", doc)["result"]
        worst = max(worst, time.perf_counter() - t0)
        ident = [[str(x) for x in row] for row in identity(6)]
        ok &= out["label"] == label and out["witness"] == ident and out["verified"]
    assert report(1, "normal forms classify to themselves with identity witness", ok, worst, 1.0,
                  "slowest single call")


# 2 -------------------------------------------------------------------------


def test_orbit_robustness(report):
    t0 = time.perf_counter()
    wrong = []
    for label in LABELS:
        for seed in range(CORPUS_SIZE):
            plane = random_plane(label, seed)
            rep = classify_plane(plane)
            if rep.label != label or not verify_witness(rep, plane):
                wrong.append((label, seed, rep.label))
    elapsed = time.perf_counter() - t0
    assert report(2, f"{4 * CORPUS_SIZE} random conjugates keep their label", not wrong, elapsed, 120,
                  f"{len(wrong)} mismatches"), wrong


# 3 -------------------------------------------------------------------------


def test_orbit_dimensions(report):
    t0 = time.perf_counter()
    dims = {label: orbit_dimension(normal_form(label)) for label in LABELS}
    stabs = {label: stabilizer_algebra(normal_form(label)).dim for label in ("PlaneG", "PlaneT", "PlaneP")}
    sl_stab = stabilizer_algebra(PI5_ORDER5, traceless=True)
    family = pi5_sl2_family()
    family_inside = [sl_stab.contains(m) for m in family]
    equal = same_algebra(sl_stab.basis, family)
    elapsed = time.perf_counter() - t0
    checks = {
        "orbit dims 26": all(d == 26 for d in dims.values()),
        "stabilizer dims 10": all(d == 10 for d in stabs.values()),
        "sl5 stabilizer dim 3": sl_stab.dim == 3,
        "sl5 stabilizer = three-parameter sl2 family": equal,
    }
    failed = [k for k, v in checks.items() if not v]
    detail = "all hold" if not failed else f"fails: {failed}; family directions inside stabilizer: {family_inside}"
    assert report(3, "orbit and stabilizer dimensions", not failed, elapsed, 10, detail), detail


# 4 -------------------------------------------------------------------------


def test_stabilizer_shapes(report):
    t0 = time.perf_counter()
    t_equal = same_algebra(stabilizer_algebra(PI_T).basis, pi_t_stabilizer_family())
    p_stab = stabilizer_algebra(PI_P)
    p_family = pi_p_stabilizer_family()
    p_equal = same_algebra(p_stab.basis, p_family)
    outside = [n for n, m in zip("u00 u10 u20 u30 u40 u50 u11 u21 u12 u22".split(), p_family) if not p_stab.contains(m)]
    elapsed = time.perf_counter() - t0
    detail = f"pi_t family equal: {t_equal}; pi_p family equal: {p_equal}; pi_p directions outside: {outside}"
    assert report(4, "stabilizer algebras equal the parametrized families", t_equal and p_equal, elapsed, 10,
                  detail), detail


# 5 -------------------------------------------------------------------------


def test_line_dichotomy(report):
    t0 = time.perf_counter()
    g = classify_line(ELL_G)
    s = classify_line(ELL_S)
    ok = g.kind == "general" and same_span(g.pivot, span([_unit(0), _unit(1)], 6))
    ok &= s.kind == "special" and same_span(s.hyperplane, span([_unit(i) for i in range(5)], 6))
    bad = 0
    for seed in range(CORPUS_SIZE):
        rng = random.Random(f"line:{seed}")
        for base, rep in ((ELL_G, g), (ELL_S, s)):
            m = random_gl(6, rng)
            out = classify_line(base.transform(m))
            if out.kind != rep.kind or not same_span(out.witness, apply_to_subspace(m, rep.witness)):
                bad += 1
    ok &= bad == 0
    ok &= orbit_dimension(ELL_G) == 22 and orbit_dimension(ELL_S) == 21
    elapsed = time.perf_counter() - t0
    assert report(5, "general/special line dichotomy", ok, elapsed, 60, f"{bad} bad conjugates")


# 6 -------------------------------------------------------------------------


def _random_three_space(n):
    rng = random.Random(f"p3:{n}")
    kind = n % 5
    while True:
        if kind < 4:
            base = list(random_plane(LABELS[kind], n).generators)
            extra = [SkewTensor(6, tuple(Fraction(rng.randint(-3, 3)) for _ in range(15)))]
        else:
            base = []
            extra = [SkewTensor(6, tuple(Fraction(rng.randint(-3, 3)) for _ in range(15))) for _ in range(4)]
        try:
            return MatrixSubspace(tuple(base + extra))
        except DependentGenerators:
            continue


def test_no_constant_rank_three_space(report):
    t0 = time.perf_counter()
    true_count = sum(bool(no_constant_rank_3space(_random_three_space(n))) for n in range(500))

    t = lambda *terms: SkewTensor.from_terms(6, terms)
    omegas = (t((1, 0, 1), (1, 3, 5)), t((1, 0, 2), (1, 3, 4)), t((1, 0, 3), (1, 4, 5)))
    free = [(0, 1), (0, 2), (1, 2)] + [(i, j) for i in range(3) for j in range(3, 6)]
    chain = corollary_chain(omegas, free)

    def unit(*ps):
        return [Fraction(int(q in ps)) for q in free]

    first_ok = same_span(span(chain.first), span([unit((1, 5)), unit((2, 4)), unit((1, 2))]))
    second_ok = same_span(
        span(chain.first + chain.second),
        span(chain.first + [unit((1, 4), (2, 5)), unit((1, 3)), unit((2, 3))]),
    )
    # after the linear conditions the quadric is a nonzero square of the (1,4) coordinate
    quad = chain.quadric
    last_ok = len(quad.coeffs) == 1 and max(next(iter(quad.coeffs))) == 2
    # whatever survives lies in e0 ^ V, hence has rank <= 2
    residual_ok = chain.residual_decomposable and all(
        not any(w.matrix()[i][j] for i in range(1, 6) for j in range(1, 6)) for w in chain.residual_basis
    )
    ok = true_count == 0 and first_ok and second_ok and last_ok and residual_ok
    elapsed = time.perf_counter() - t0
    detail = (f"{true_count} constant-rank 3-spaces; chain stages "
              f"{[first_ok, second_ok, last_ok, residual_ok]}")
    assert report(6, "no 3-space of constant rank 4, constraint chain", ok, elapsed, 120, detail), detail


# 7 -------------------------------------------------------------------------


def test_special_locus_invariant(report):
    expected = {"PlaneG": "empty", "PlaneT": "conic", "PlaneP": "pencil_line", "Plane5": "all"}
    t0 = time.perf_counter()
    bad = []
    for label, kind in expected.items():
        if special_locus(normal_form(label)).kind != kind:
            bad.append((label, "normal form"))
        for seed in range(50):
            got = special_locus(random_plane(label, 1000 + seed)).kind
            if got != kind:
                bad.append((label, seed, got))
    elapsed = time.perf_counter() - t0
    assert report(7, "special-line locus per plane type", not bad, elapsed, 120, f"{len(bad)} mismatches"), bad


# 8 -------------------------------------------------------------------------


def _decomposable(rng):
    while True:
        u = [rng.randint(-3, 3) for _ in range(5)]
        v = [rng.randint(-3, 3) for _ in range(5)]
        w = SkewTensor.from_matrix([[Fraction(u[i] * v[j] - u[j] * v[i]) for j in range(5)] for i in range(5)])
        if w:
            return w


def test_order_five_reduction(report):
    t0 = time.perf_counter()
    bad = []
    planes = [PI5_ORDER5] + [PI5_ORDER5.transform(random_gl(5, random.Random(f"o5:{s}"))) for s in range(CORPUS_SIZE)]
    for n, plane in enumerate(planes):
        rep = classify_plane_order5(plane)
        if not (rep.verify(plane) and rep.literal_constraint and rep.rank_condition):
            bad.append((n, rep.branch, rep.f_params))
    rejected = 0
    for s in range(20):
        rng = random.Random(f"chow:{s}")
        gens = list(PI5_ORDER5.transform(random_gl(5, rng)).generators)
        gens[rng.randrange(3)] = _decomposable(rng)
        try:
            space = MatrixSubspace(tuple(gens))
        except DependentGenerators:
            rejected += 1  # dependent generators; nothing to classify
            continue
        try:
            classify_plane_order5(space)
        except ChowIntersection:
            rejected += 1
    ok = not bad and rejected == 20
    elapsed = time.perf_counter() - t0
    assert report(8, "order-5 reduction with branch constraints; Chow planes rejected", ok, elapsed, 60,
                  f"{len(bad)} failed reductions, {rejected}/20 rejected"), bad


# 9 -------------------------------------------------------------------------


def _has_fp_zero(quads, p):
    """Exhaustive search for a common zero on P^2(F_p); quads are coefficient lists over monomials(3, 2)."""
    mons = monomials(3, 2)
    pts = [(1, y, z) for y in range(p) for z in range(p)] + [(0, 1, z) for z in range(p)] + [(0, 0, 1)]
    for x, y, z in pts:
        vals = (x, y, z)
        if all(sum(c * vals[0] ** m[0] * vals[1] ** m[1] * vals[2] ** m[2] for c, m in zip(q, mons)) % p == 0
               for q in quads):
            return True
    return False


def test_macaulay_soundness(report):
    t0 = time.perf_counter()
    mons = monomials(3, 2)
    unsound = 0
    empties = 0
    for n in range(200):
        p = (101, 103)[n % 2]
        F = PrimeField(p)
        rng = random.Random(f"mac:{n}")
        nq = rng.choice((2, 3, 3, 4))
        quads = [[rng.randrange(p) for _ in mons] for _ in range(nq)]
        planted = n % 4 == 0
        if planted:
            # plant a common zero by adjusting the z^2 coefficient of every quadric
            pt = (rng.randrange(p), rng.randrange(p), 1)
            for q in quads:
                val = sum(c * pt[0] ** m[0] * pt[1] ** m[1] * pt[2] ** m[2] for c, m in zip(q, mons)) % p
                q[mons.index((0, 0, 2))] = (q[mons.index((0, 0, 2))] - val) % p
        cert = projective_empty([HomogPoly(3, 2, {m: F(c) for m, c in zip(mons, q)}, F) for q in quads], 3)
        if cert.empty:
            empties += 1
            if planted or _has_fp_zero(quads, p):
                unsound += 1
    corpus_ok = all(
        projective_empty(gauss_quadrics(random_plane(label, seed)), 3).empty
        for label in LABELS
        for seed in range(CORPUS_SIZE)
    )
    ok = unsound == 0 and corpus_ok
    elapsed = time.perf_counter() - t0
    assert report(9, "Macaulay emptiness agrees with brute force; corpus Gauss quadrics empty", ok, elapsed, 120,
                  f"{empties} empty verdicts checked, {unsound} unsound"), (unsound, corpus_ok)


# 10 ------------------------------------------------------------------------


def test_bundle_fingerprints(report):
    t0 = time.perf_counter()
    prints = {label: set() for label in LABELS}
    for label in LABELS:
        for seed in range(CORPUS_SIZE):
            f = plane_kernel_fingerprint(random_plane(label, seed), check=False)
            prints[label].add((f.degree0_kernel_dim, f.degree1_kernel_dim, f.degree2_kernel_dim))
    single = all(len(v) == 1 for v in prints.values())
    distinct = len(set().union(*prints.values())) == 4
    mismatched = 0
    bad_degree = 0
    sampled = 0
    grid = dual_grid(2)
    for n in range(200):
        label = LABELS[n % 4]
        plane = random_plane(label, n // 4)
        line = line_of(plane, grid[n % len(grid)])
        d = minimal_indices_line(line, check=False)
        kind = classify_line(line, check=False).kind
        sampled += 1
        bad_degree += sum(d) != 2
        mismatched += (d == (0, 2)) != (kind == "special")
    ok = single and distinct and not mismatched and not bad_degree
    elapsed = time.perf_counter() - t0
    detail = (f"fingerprints {dict((k, sorted(v)) for k, v in prints.items())}; "
              f"{mismatched}/{sampled} index/kind mismatches")
    assert report(10, "kernel fingerprints and minimal indices", ok, elapsed, 120, detail), detail


# 11 ------------------------------------------------------------------------


def test_pfaffian_identities(report):
    t0 = time.perf_counter()
    bad = 0
    for n in range(500):
        rng = random.Random(f"pf:{n}")
        w = SkewTensor(6, tuple(Fraction(rng.randint(-5, 5), rng.randint(1, 3)) for _ in range(15)))
        pf = pfaffian(w)
        bad += pf * pf != det(w.matrix())
        bad += triple_pfaffian(w, w, w) != 6 * pf
    elapsed = time.perf_counter() - t0
    assert report(11, "Pf^2 = det and w^w^w = 6 Pf vol", bad == 0, elapsed, 30, f"{bad} violations")
