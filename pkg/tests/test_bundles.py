import random

import pytest

from skewrank.bundles import image_fiber_check, minimal_indices_line, plane_kernel_fingerprint
from skewrank.errors import NotConstantRank, ZeroCoefficients
from skewrank.exterior import e
from skewrank.linalg import intersect, span
from skewrank.normal_forms import ELL_G, ELL_S, LABELS, PI_G, PI_T, PI5, normal_form
from skewrank.planes import dual_grid, line_of, random_gl, random_plane
from skewrank.rank import MatrixSubspace, classify_line

# degreewise kernel counts on the normal forms (computed once, kept as regression values)
FINGERPRINTS = {
    "PlaneG": (0, 2, 0),
    "PlaneT": (0, 0, 4),
    "PlaneP": (0, 1, 2),
    "Plane5": (1, 0, 1),
}


def _fp(space):
    f = plane_kernel_fingerprint(space)
    return f.degree0_kernel_dim, f.degree1_kernel_dim, f.degree2_kernel_dim


def test_line_minimal_indices():
    assert minimal_indices_line(ELL_G) == (1, 1)
    assert minimal_indices_line(ELL_S) == (0, 2)
    g = random_gl(6, random.Random(9))
    assert minimal_indices_line(ELL_G.transform(g)) == (1, 1)


@pytest.mark.parametrize("label", LABELS)
def test_fingerprints(label):
    assert _fp(normal_form(label)) == FINGERPRINTS[label]
    assert _fp(random_plane(label, 11)) == FINGERPRINTS[label]


def test_fingerprints_are_distinct():
    assert len(set(FINGERPRINTS.values())) == 4


def test_indices_follow_line_kind():
    plane = random_plane("PlaneP", 2)
    for lam in dual_grid(1):
        line = line_of(plane, lam)
        d = minimal_indices_line(line, check=False)
        assert sum(d) == 2
        assert (d == (0, 2)) == (classify_line(line, check=False).kind == "special")


def test_image_splits_for_pi_g():
    first = span([[1, 0, 0, 0, 0, 0], [0, 1, 0, 0, 0, 0], [0, 0, 1, 0, 0, 0]], 6)
    second = span([[0, 0, 0, 1, 0, 0], [0, 0, 0, 0, 1, 0], [0, 0, 0, 0, 0, 1]], 6)
    for lam in [(1, 0, 0), (1, 2, -1), (0, 1, 3)]:
        img = image_fiber_check(PI_G, lam)
        assert len(img) == 4
        assert len(intersect(img, first)) == 2 and len(intersect(img, second)) == 2


def test_pi_t_images_contain_first_two_axes():
    axes = span([[1, 0, 0, 0, 0, 0], [0, 1, 0, 0, 0, 0]], 6)
    for lam in dual_grid(2):
        img = image_fiber_check(PI_T, lam)
        assert len(intersect(img, axes)) == 2


def test_pi5_images_lie_in_hyperplane():
    img = image_fiber_check(PI5, (1, 1, 1))
    assert all(v[5] == 0 for v in img)
    with pytest.raises(ZeroCoefficients):
        image_fiber_check(PI5, (0, 0, 0))


def test_non_constant_rejected():
    with pytest.raises(NotConstantRank):
        minimal_indices_line(MatrixSubspace.of(e(6, 0, 1), e(6, 2, 3) + e(6, 4, 5)))
