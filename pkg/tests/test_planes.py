import pytest

from skewrank.errors import MissingWitness, NotConstantRank
from skewrank.exterior import SkewTensor, e
from skewrank.linalg import identity, rank, span
from skewrank.normal_forms import LABELS, PI5, normal_form
from skewrank.planes import (
    OrbitReport,
    classify_plane,
    corollary_chain,
    no_constant_rank_3space,
    random_plane,
    special_locus,
    verify_witness,
)
from skewrank.rank import MatrixSubspace


@pytest.mark.parametrize("label", LABELS)
def test_normal_forms_classify_to_themselves(label):
    rep = classify_plane(normal_form(label))
    assert rep.label == label
    assert rep.witness == identity(6)


@pytest.mark.parametrize("label", LABELS)
@pytest.mark.parametrize("seed", range(3))
def test_random_conjugates(label, seed):
    plane = random_plane(label, seed)
    rep = classify_plane(plane)
    assert rep.label == label
    assert verify_witness(rep, plane)


def test_witness_for_wrong_label_fails():
    plane = random_plane("PlaneT", 0)
    rep = classify_plane(plane)
    assert not verify_witness(OrbitReport("PlaneP", witness=rep.witness), plane)
    with pytest.raises(MissingWitness):
        verify_witness(OrbitReport("PlaneP"), plane)


def test_plane5_hyperplane_witness():
    plane = random_plane("Plane5", 1)
    rep = classify_plane(plane)
    assert rep.label == "Plane5" and len(rep.hyperplane_witness) == 5
    assert rep.order5.verify(rep.order5 and _restricted(plane, rep))


def _restricted(plane, rep):
    from skewrank.planes import restrict_to_hyperplane

    return restrict_to_hyperplane(plane, rep.hyperplane_witness)


def test_non_constant_plane_rejected():
    plane = MatrixSubspace.of(e(6, 0, 1), e(6, 2, 3), e(6, 4, 5))
    with pytest.raises(NotConstantRank):
        classify_plane(plane)


@pytest.mark.parametrize(
    "label,kind", [("PlaneG", "empty"), ("PlaneT", "conic"), ("PlaneP", "pencil_line"), ("Plane5", "all")]
)
def test_special_locus(label, kind):
    assert special_locus(normal_form(label)).kind == kind
    assert special_locus(random_plane(label, 5)).kind == kind


def test_three_spaces_are_never_constant_rank():
    p = normal_form("PlaneP")
    cert = no_constant_rank_3space(MatrixSubspace(p.generators + (e(6, 0, 1),)))
    assert not cert


def test_constraint_chain():
    t = lambda *terms: SkewTensor.from_terms(6, terms)
    w = t((1, 0, 1), (1, 3, 5))
    w1 = t((1, 0, 2), (1, 3, 4))
    w2 = t((1, 0, 3), (1, 4, 5))
    free = [(0, 1), (0, 2), (1, 2)] + [(i, j) for i in range(3) for j in range(3, 6)]
    rep = corollary_chain((w, w1, w2), free)
    col = {p: n for n, p in enumerate(free)}

    def unit(*ps):
        return [1 if q in ps else 0 for q in free]

    assert span(rep.first) == span([unit((1, 2)), unit((1, 5)), unit((2, 4))])
    second = span(rep.first + rep.second)
    for extra in (unit((1, 3)), unit((2, 3))):
        assert rank(second + (tuple(extra),)) == len(second)
    assert rank([*rep.first, *rep.second]) == 6
    assert rep.quadric.degree == 2 and rep.residual_decomposable
    assert all(not any(w.coeffs[5:]) for w in rep.residual_basis)  # only e0 ^ v terms survive
