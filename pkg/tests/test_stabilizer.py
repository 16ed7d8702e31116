import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from skewrank.errors import SizeMismatch
from skewrank.linalg import identity, transpose
from skewrank.normal_forms import (
    ELL_G,
    ELL_S,
    LABELS,
    PI5_ORDER5,
    PI_P,
    PI_T,
    normal_form,
    pi5_sl2_family,
    pi_p_matrix,
    pi_p_stabilizer_family,
    pi_t_matrix,
    pi_t_stabilizer_family,
)
from skewrank.planes import random_gl
from skewrank.rank import MatrixSubspace
from skewrank.stabilizer import (
    bracket,
    check_algebra_membership,
    orbit_dimension,
    same_algebra,
    stabilizer_algebra,
)


@pytest.mark.parametrize("label", LABELS)
def test_plane_orbits_have_dimension_26(label):
    assert stabilizer_algebra(normal_form(label)).dim == 10
    assert orbit_dimension(normal_form(label)) == 26


def test_line_orbit_dimensions():
    assert orbit_dimension(ELL_G) == 22
    assert orbit_dimension(ELL_S) == 21


def test_order_five_stabilizer():
    assert stabilizer_algebra(PI5_ORDER5).dim == 4
    assert stabilizer_algebra(PI5_ORDER5, traceless=True).dim == 3


def test_pi_t_family_is_the_stabilizer():
    assert same_algebra(stabilizer_algebra(PI_T).basis, pi_t_stabilizer_family())
    assert check_algebra_membership(PI_T, pi_t_matrix(x=1))


def test_pi_p_relations_are_needed():
    assert not check_algebra_membership(PI_P, pi_p_matrix(u00=1, u33=0))
    assert check_algebra_membership(PI_P, pi_p_matrix(u00=1))


def test_pi_p_family_with_corrected_entry():
    # the u20 direction enters the (3,4) slot with coefficient -2
    fam = pi_p_stabilizer_family()
    fam[2][3][4] = Fraction(-2)
    assert same_algebra(stabilizer_algebra(PI_P).basis, fam)


def test_pi5_algebra_up_to_sign_twist():
    # the transposed three-parameter family stabilizes pi5 after flipping e2, e3, e4
    d = [[Fraction(int(i == j) * (1 if i < 2 else -1)) for j in range(5)] for i in range(5)]
    twisted = PI5_ORDER5.transform(d)
    fam = [transpose(m) for m in pi5_sl2_family()]
    assert same_algebra(stabilizer_algebra(twisted, traceless=True).basis, fam)


def test_identity_always_stabilizes():
    for label in LABELS:
        assert check_algebra_membership(normal_form(label), identity(6))
    with pytest.raises(SizeMismatch):
        check_algebra_membership(PI_T, identity(5))


@pytest.mark.parametrize("space", [PI_T, PI_P, ELL_S])
def test_stabilizer_is_a_lie_algebra(space):
    stab = stabilizer_algebra(space)
    for x in stab.basis:
        for y in stab.basis:
            assert stab.contains(bracket(x, y))


@given(st.integers(min_value=0, max_value=10**6))
def test_stabilizer_dimension_is_conjugation_invariant(seed):
    g = random_gl(6, random.Random(seed))
    assert stabilizer_algebra(ELL_G.transform(g)).dim == 14
