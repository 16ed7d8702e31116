import random
from itertools import product

from hypothesis import given, strategies as st

from skewrank.fields import PrimeField, RATIONALS
from skewrank.normal_forms import PI_G, PI_T
from skewrank.polys import HomogPoly, gauss_quadrics, monomials, pfaffian_cubic, projective_empty


def _var(i, n=3, F=RATIONALS):
    return HomogPoly.variable(i, n, F)


def test_monomial_count():
    assert len(monomials(3, 4)) == 15
    assert monomials(2, 1) == [(1, 0), (0, 1)]


def test_coordinate_squares_have_no_common_zero():
    a, b, c = (_var(i) for i in range(3))
    cert = projective_empty([a * a, b * b, c * c], 3)
    assert cert.empty and cert.achieved_rank == cert.target_rank == 15


def test_shared_line_is_detected():
    a, b, _ = (_var(i) for i in range(3))
    cert = projective_empty([a * a, a * b], 3)
    assert not cert.empty
    assert cert.achieved_rank < cert.target_rank


def test_normal_form_certificates():
    for plane in (PI_G, PI_T):
        assert not pfaffian_cubic(plane)
        assert projective_empty(gauss_quadrics(plane), 3).empty


@given(st.integers(min_value=0, max_value=10**6))
def test_sympy_roundtrip(seed):
    rng = random.Random(seed)
    p = HomogPoly(3, 2, {m: RATIONALS(rng.randint(-3, 3)) for m in monomials(3, 2)}, RATIONALS)
    import sympy

    syms = sympy.symbols("a b c")
    assert HomogPoly.from_sympy(p.to_sympy(syms), syms, RATIONALS) == p


def test_soundness_against_brute_force_small_prime():
    F = PrimeField(11)
    rng = random.Random(3)
    pts = [(1, y, z) for y in range(11) for z in range(11)] + [(0, 1, z) for z in range(11)] + [(0, 0, 1)]
    for _ in range(30):
        qs = [HomogPoly(3, 2, {m: F(rng.randrange(11)) for m in monomials(3, 2)}, F) for _ in range(3)]
        cert = projective_empty(qs, 3)
        has_zero = any(all(not q([F(x) for x in p]) for q in qs) for p in pts)
        if cert.empty:
            assert not has_zero
