import random
from fractions import Fraction as Q

import pytest

from ncsurf.errors import DegenerateRelations, NotPotential
from ncsurf.exactla import rank_rows
from ncsurf.presets import antisym_tensor, sklyanin_tensor, skew_tensor
from ncsurf.superpot import (
    CUBIC,
    QUADRATIC,
    GradedPresentation,
    Tensor,
    check_quadruple,
    check_quintuple,
    extract_relations,
    pencil_determinant,
    random_tensor,
    recover_superpotential,
    relation_space_of,
)

COMMUTATORS = GradedPresentation(
    QUADRATIC,
    [
        [((0, 1), 1), ((1, 0), -1)],
        [((1, 2), 1), ((2, 1), -1)],
        [((2, 0), 1), ((0, 2), -1)],
    ],
)

COMM_QUADRIC = GradedPresentation(
    CUBIC,
    [
        [((0, 0, 1), 1), ((1, 0, 0), -1)],
        [((0, 1, 1), 1), ((1, 1, 0), -1)],
    ],
)


def test_antisymmetric_passes_not_elliptic():
    v = check_quadruple(antisym_tensor())
    assert v.passed
    assert v.elliptic is False
    for j in range(3):
        assert pencil_determinant(antisym_tensor(), j).is_zero()


def test_sklyanin_passes_elliptic():
    v = check_quadruple(sklyanin_tensor(1, 2, 3))
    assert v.passed and v.elliptic


def test_single_term_tensor_fails_with_witness():
    w = [[[1 if (i, j, k) == (0, 0, 0) else 0 for k in range(3)] for j in range(3)] for i in range(3)]
    v = check_quadruple(Tensor(QUADRATIC, w))
    assert not v.passed
    assert v.witness is not None


def test_positive_dimensional_rank_drop_still_yields_witness():
    # diag contraction diag(v_x, v_y, 0): rank <= 1 along two whole lines
    w = [[[0] * 3 for _ in range(3)] for _ in range(3)]
    w[0][0][0] = 1
    w[1][1][1] = 1
    v = check_quadruple(Tensor(QUADRATIC, w))
    assert not v.passed
    assert v.witness is not None and "slot" in v.witness


def test_random_degenerate_tensor_reports_witness():
    rng = random.Random(55)
    found = 0
    while found < 3:
        t = random_tensor(QUADRATIC, 1, rng)
        v = check_quadruple(t)
        if not v.passed:
            assert v.witness is not None
            found += 1


def test_antisymmetrizer_relations_are_commutators():
    rs = extract_relations(antisym_tensor())
    assert rs.dim == 3
    # span{y(x)z - z(x)y, z(x)x - x(x)z, x(x)y - y(x)x} in path coordinates
    comms = []
    for a, b in ((1, 2), (2, 0), (0, 1)):
        vec = [Q(0)] * 9
        vec[a * 3 + b] = Q(1)
        vec[b * 3 + a] = Q(-1)
        comms.append(tuple(vec))
    assert rank_rows(list(rs.basis) + comms) == 3


def test_sklyanin_relations_shape():
    rs = extract_relations(sklyanin_tensor(1, 2, 3))
    assert rs.dim == 3
    # cyclic relations a y(x)z + b z(x)y + c x(x)x: e.g. a*e12 + b*e21 + c*e00
    expected = [Q(0)] * 9
    expected[1 * 3 + 2] = Q(1)
    expected[2 * 3 + 1] = Q(2)
    expected[0 * 3 + 0] = Q(3)
    stacked = list(rs.basis) + [tuple(expected)]
    assert rank_rows(stacked) == 3  # the expected relation lies in the span


def test_generic_cubic_tensor_passes():
    rng = random.Random(1)
    t = random_tensor(CUBIC, 3, rng)
    assert check_quintuple(t).passed


def test_quintuple_identity_kernel_passes_dim2_fails():
    # slot-0 contraction matrix with kernel spanned by the identity:
    # columns (a,b) -> values e1, e2, e3, -e1 so that col00 + col11 = 0
    w = [[[[0, 0], [0, 0]], [[0, 0], [0, 0]]], [[[0, 0], [0, 0]], [[0, 0], [0, 0]]]]
    # Phi[(c,d)][(a,b)] = w[a][b][c][d]; kernel (1,0,0,1) means w[0][0] = -w[1][1]
    w[0][0][0][0] = 1
    w[1][1][0][0] = -1
    w[0][1][0][1] = 1
    w[1][0][1][0] = 1
    t = Tensor(CUBIC, w)
    v = check_quintuple(t)
    assert v.details[0]["kernel_dim"] == 1 and v.details[0]["ok"]
    # rank-2 contraction map: kernel dimension 2 meets the rank-one quadric
    w2 = [[[[0, 0], [0, 0]], [[0, 0], [0, 0]]], [[[0, 0], [0, 0]], [[0, 0], [0, 0]]]]
    w2[0][0][0][0] = 1
    w2[0][1][1][0] = 1
    t2 = Tensor(CUBIC, w2)
    v2 = check_quintuple(t2)
    assert not v2.passed
    assert v2.details[0]["kernel_dim"] >= 2


def test_commutators_recover_antisymmetrizer():
    w = recover_superpotential(COMMUTATORS)
    expect = antisym_tensor()
    assert w == expect or w == expect.scale(-1)


def test_commutative_quadric_round_trip():
    w = recover_superpotential(COMM_QUADRIC)
    nz = {k: v for k, v in w.entries.items() if v}
    assert set(nz) == {(0, 0, 1, 1), (0, 1, 1, 0), (1, 0, 0, 1), (1, 1, 0, 0)}
    rs = extract_relations(w)
    assert rs.same_subspace(relation_space_of(COMM_QUADRIC))


def test_quadratic_round_trip():
    rs = extract_relations(sklyanin_tensor(2, 3, 5))
    w = recover_superpotential(rs)
    assert extract_relations(w).same_subspace(rs)


def test_not_potential():
    rng = random.Random(9)
    rels = []
    for _ in range(2):
        rels.append([Q(rng.randint(-3, 3)) for _ in range(8)])
    p = GradedPresentation(CUBIC, rels)
    with pytest.raises(NotPotential):
        recover_superpotential(p)


def test_degenerate_relations():
    w = [[[1 if (i, j, k) == (0, 0, 0) else 0 for k in range(3)] for j in range(3)] for i in range(3)]
    with pytest.raises(DegenerateRelations):
        extract_relations(Tensor(QUADRATIC, w))


def _random_gl(rng, n):
    while True:
        m = [[Q(rng.randint(-3, 3)) for _ in range(n)] for _ in range(n)]
        from ncsurf.exactla import Matrix

        if Matrix(m).det() != 0:
            return m


def test_verdict_invariant_under_basis_change():
    rng = random.Random(6)
    for t, checker in (
        (sklyanin_tensor(1, 2, 3), check_quadruple),
        (antisym_tensor(), check_quadruple),
        (random_tensor(CUBIC, 3, random.Random(2)), check_quintuple),
    ):
        base = checker(t)
        mats = [_random_gl(rng, t.dims[0]) for _ in range(len(t.dims))]
        moved = t.transform(mats)
        again = checker(moved)
        assert again.passed == base.passed
        if t.kind == QUADRATIC:
            assert again.elliptic == base.elliptic


def test_scaling_changes_nothing():
    t = sklyanin_tensor(1, 2, 3)
    s = t.scale(Q(-7, 3))
    assert check_quadruple(s).passed
    assert extract_relations(s).same_subspace(extract_relations(t))


def test_tensor_json_roundtrip():
    t = sklyanin_tensor(1, 2, Q(3, 7))
    assert Tensor.from_json(t.to_json()) == t
    p = COMM_QUADRIC
    assert GradedPresentation.from_json(p.to_json()).relations == p.relations


def test_skew_linear_case():
    # q-product 1 makes the point scheme the whole plane
    t = skew_tensor(2, 3, Q(1, 6))
    v = check_quadruple(t)
    assert v.passed and v.elliptic is False
    t2 = skew_tensor(2, 2, 2)
    v2 = check_quadruple(t2)
    assert v2.passed and v2.elliptic is True
