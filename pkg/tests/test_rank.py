import random

import pytest
from hypothesis import given, strategies as st

from skewrank.errors import ConsistencyError, DependentGenerators, NotConstantRank, ZeroCoefficients
from skewrank.exterior import e
from skewrank.linalg import same_span, span
from skewrank.normal_forms import ELL_G, ELL_S, LABELS, PI5_ORDER5, normal_form
from skewrank.planes import random_gl
from skewrank.rank import MatrixSubspace, apply_to_subspace, classify_line, constant_rank_four, rank_at


def test_dependent_generators_rejected():
    w = e(6, 0, 1) + e(6, 2, 3)
    with pytest.raises(DependentGenerators):
        MatrixSubspace.of(w, 2 * w)


def test_rank_at_points():
    assert rank_at(ELL_G, (1, 0)) == 4
    assert rank_at(ELL_G, (2, -3)) == 4
    with pytest.raises(ZeroCoefficients):
        rank_at(ELL_G, (0, 0))


@pytest.mark.parametrize("label", LABELS)
def test_normal_forms_have_constant_rank_four(label):
    cert = constant_rank_four(normal_form(label))
    assert cert and cert.macaulay.empty


def test_order_five_plane_is_constant_rank():
    assert constant_rank_four(PI5_ORDER5)


def test_rank_two_point_is_found():
    space = MatrixSubspace.of(e(6, 0, 1), e(6, 0, 2) + e(6, 1, 3))
    cert = constant_rank_four(space)
    assert not cert and "common zero" in cert.reason


def test_rank_six_point_is_found():
    space = MatrixSubspace.of(e(6, 0, 1) + e(6, 2, 3), e(6, 4, 5) + e(6, 0, 2))
    cert = constant_rank_four(space)
    assert not cert and cert.cubic


def test_line_normal_forms():
    g = classify_line(ELL_G)
    assert g.kind == "general" and same_span(g.pivot, span([[1, 0, 0, 0, 0, 0], [0, 1, 0, 0, 0, 0]], 6))
    s = classify_line(ELL_S)
    assert s.kind == "special" and len(s.hyperplane) == 5


def test_non_constant_line_rejected():
    with pytest.raises(NotConstantRank):
        classify_line(MatrixSubspace.of(e(6, 0, 1), e(6, 2, 3) + e(6, 4, 5)))


@given(st.integers(min_value=0, max_value=10**6), st.sampled_from(["g", "s"]))
def test_line_kind_is_invariant(seed, kind):
    g = random_gl(6, random.Random(seed))
    base = ELL_G if kind == "g" else ELL_S
    before = classify_line(base, check=False)
    after = classify_line(base.transform(g), check=False)
    assert after.kind == before.kind
    assert same_span(after.witness, apply_to_subspace(g, before.witness))
