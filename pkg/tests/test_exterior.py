import random
from fractions import Fraction

from hypothesis import given, strategies as st

from skewrank.exterior import (
    SkewTensor,
    act,
    derive,
    dual_two_form,
    e,
    gauss_map,
    pfaffian,
    triple_pfaffian,
    wedge,
)
from skewrank.linalg import det, matmul, nullspace, same_span, span, transpose
from skewrank.planes import random_gl
from skewrank.rank import kernel_image

from conftest import random_tensor


def test_pfaffian_of_standard_forms():
    w = e(6, 0, 1) + e(6, 2, 3) + e(6, 4, 5)
    assert pfaffian(w) == 1
    assert triple_pfaffian(w, w, w) == 6
    assert pfaffian(e(6, 0, 1) + 2 * e(6, 2, 3) + 3 * e(6, 4, 5)) == 6


def test_gauss_map_sign():
    w = e(6, 0, 4) - e(6, 1, 3)
    four = gauss_map(w)
    assert four == wedge(w, w)
    assert sorted(c for c in four.coeffs if c) == [-2]


@given(st.integers(min_value=0, max_value=10**6))
def test_pfaffian_squares_to_determinant(seed):
    w = random_tensor(random.Random(seed))
    assert pfaffian(w) ** 2 == det(w.matrix())


@given(st.integers(min_value=0, max_value=10**6))
def test_action_is_congruence(seed):
    rng = random.Random(seed)
    w = random_tensor(rng)
    g = random_gl(6, rng)
    assert act(g, w).matrix() == matmul(matmul(g, w.matrix()), transpose(g))
    # Pf(g W g^T) = det(g) Pf(W)
    assert pfaffian(act(g, w)) == det(g) * pfaffian(w)


@given(st.integers(min_value=0, max_value=10**6))
def test_derivation_is_linearised_action(seed):
    rng = random.Random(seed)
    w = random_tensor(rng)
    x = [[Fraction(rng.randint(-2, 2)) for _ in range(6)] for _ in range(6)]
    m = w.matrix()
    xm = matmul(x, m)
    # X W + W X^T, and W X^T = -(X W)^T for skew W
    expected = [[a - b for a, b in zip(r1, r2)] for r1, r2 in zip(xm, transpose(xm))]
    assert derive(x, w).matrix() == expected


def test_kernel_plucker_of_rank_four():
    w = e(6, 0, 1) + e(6, 2, 3)
    kappa = dual_two_form(gauss_map(w))
    ker, _ = kernel_image(w)
    # kappa is decomposable and spans the kernel <e4, e5>
    assert not any(wedge(kappa, kappa).coeffs)
    img = span(kappa.matrix(), 6)
    assert same_span(img, ker)


def test_from_matrix_roundtrip(rng):
    w = random_tensor(rng)
    assert SkewTensor.from_matrix(w.matrix()).coeffs == w.coeffs
