import random
from fractions import Fraction as Q

import pytest

from ncsurf.errors import WrongHilbert
from ncsurf.polyring.unipoly import UniPoly
from ncsurf.presets import antisym_tensor, commutative_quadric_presentation, sklyanin_tensor
from ncsurf.quiveralg import (
    Quiver,
    build_algebra,
    build_unchecked,
    cartan_and_coxeter,
    global_dimension,
    pdim_simple,
)
from ncsurf.superpot import (
    QUADRATIC,
    RelationSpace,
    extract_relations,
    recover_superpotential,
)


def plane_algebra():
    return build_algebra(Quiver.quadratic(), extract_relations(antisym_tensor()))


def quadric_algebra():
    w = recover_superpotential(commutative_quadric_presentation())
    return build_algebra(Quiver.cubic(), extract_relations(w))


def test_plane_dims():
    a = plane_algebra()
    assert a.total_dim == 15
    assert a.dims == {
        (0, 0): 1, (1, 1): 1, (2, 2): 1,
        (0, 1): 3, (1, 2): 3, (0, 2): 6,
    }


def test_quadric_dims():
    a = quadric_algebra()
    assert a.total_dim == 24
    assert a.dim(0, 1) == 2 and a.dim(0, 2) == 4 and a.dim(0, 3) == 6
    assert a.dim(1, 3) == 4 and a.dim(2, 3) == 2


def test_wrong_hilbert():
    basis = tuple(tuple(Q(1) if i == j else Q(0) for j in range(9)) for i in range(9))
    with pytest.raises(WrongHilbert):
        build_algebra(Quiver.quadratic(), RelationSpace(QUADRATIC, 3, 2, basis))


def test_associativity_exhaustive():
    assert plane_algebra().check_associativity()
    assert quadric_algebra().check_associativity()


def test_radical_nilpotency():
    # J^len vanishes structurally: products of maximal chains land in the
    # window and further multiplication hits no component
    a = plane_algebra()
    for u in range(a.dim(0, 1)):
        for v in range(a.dim(1, 2)):
            coords = a.mult(0, 1, 2, u, v)
            assert len(coords) == 6
    assert (0, 3) not in a.basis  # J^3 = 0 for the quadratic quiver
    b = quadric_algebra()
    assert (0, 4) not in b.basis  # J^4 = 0 for the cubic quiver


def test_cartan_coxeter_quadratic():
    c, phi, unip = cartan_and_coxeter(plane_algebra())
    assert [[int(x) for x in r] for r in c.data] == [[1, 3, 6], [0, 1, 3], [0, 0, 1]]
    assert unip


def test_cartan_coxeter_cubic():
    c, phi, unip = cartan_and_coxeter(quadric_algebra())
    assert [[int(x) for x in r] for r in c.data] == [
        [1, 2, 4, 6],
        [0, 1, 2, 4],
        [0, 0, 1, 2],
        [0, 0, 0, 1],
    ]
    assert unip


def test_kronecker_not_unipotent():
    k = build_unchecked((2,))
    c, phi, unip = cartan_and_coxeter(k)
    assert [[int(x) for x in r] for r in c.data] == [[1, 2], [0, 1]]
    assert not unip
    from ncsurf.exactla import charpoly

    assert charpoly(phi) == UniPoly([1, 2, 1])  # (t+1)^2


def test_global_dimension():
    assert global_dimension(plane_algebra()) == 2
    assert global_dimension(quadric_algebra()) == 2
    assert [pdim_simple(plane_algebra(), k) for k in range(3)] == [2, 1, 0]
    assert [pdim_simple(quadric_algebra(), k) for k in range(4)] == [2, 1, 1, 0]


def test_hereditary_fixture():
    assert global_dimension(build_unchecked((3, 3))) == 1
    assert global_dimension(build_unchecked((2,))) == 1


def test_sklyanin_algebra_gldim():
    a = build_algebra(Quiver.quadratic(), extract_relations(sklyanin_tensor(1, 2, 3)))
    assert global_dimension(a) == 2
    _, _, unip = cartan_and_coxeter(a)
    assert unip


def test_build_invariant_under_relation_basis_change():
    rs = extract_relations(sklyanin_tensor(1, 2, 3))
    rng = random.Random(12)
    # replace the basis by random invertible combinations of itself
    from ncsurf.exactla import Matrix, rref_rows

    while True:
        m = [[Q(rng.randint(-3, 3)) for _ in range(3)] for _ in range(3)]
        if Matrix(m).det() != 0:
            break
    newbasis = []
    for i in range(3):
        vec = [Q(0)] * 9
        for j in range(3):
            for k in range(9):
                vec[k] += m[i][j] * rs.basis[j][k]
        newbasis.append(tuple(vec))
    red, pivots = rref_rows(newbasis)
    rs2 = RelationSpace(rs.kind, 3, 2, tuple(tuple(red[i]) for i in range(len(pivots))))
    a1 = build_algebra(Quiver.quadratic(), rs)
    a2 = build_algebra(Quiver.quadratic(), rs2)
    assert a1.basis == a2.basis
    assert a1._mult == a2._mult


def test_idempotent_components_match_cartan():
    a = quadric_algebra()
    c, _, _ = cartan_and_coxeter(a)
    for i in range(4):
        for j in range(4):
            expect = a.dim(i, j) if j >= i else 0
            assert int(c.data[i][j]) == expect


def test_algebra_json_shape():
    dump = plane_algebra().to_json()
    assert dump["dims"]["0,2"] == 6
    assert "0,1,2" in dump["structure_constants"]
