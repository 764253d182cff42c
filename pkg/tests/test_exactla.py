import random
from fractions import Fraction as Q

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ncsurf import kernels
from ncsurf.exactla import Matrix, charpoly, kernel_basis, q_parse, q_str, rank_rows, rref
from ncsurf.polyring.unipoly import UniPoly


def rand_matrix(rng, nr, nc, height=9):
    return Matrix([[rng.randint(-height, height) for _ in range(nc)] for _ in range(nr)])


def test_rref_identity():
    m = Matrix.identity(2)
    red, pivots = rref(m)
    assert red == m
    assert pivots == (0, 1)


def test_rref_rank_one():
    red, pivots = rref(Matrix([[1, 2], [2, 4]]))
    assert red == Matrix([[1, 2], [0, 0]])
    assert pivots == (0,)


def test_rref_idempotent_and_row_space():
    rng = random.Random(3)
    for _ in range(10):
        m = rand_matrix(rng, rng.randint(1, 6), rng.randint(1, 6))
        red, pivots = rref(m)
        again, pivots2 = rref(red)
        assert again == red and pivots2 == pivots
        # row space preserved: stacking does not increase rank
        stacked = list(m.data) + list(red.data)
        assert rank_rows(stacked) == m.rank() == len(pivots)
        assert list(pivots) == sorted(pivots)


def test_rank_mod_p_oracle():
    rng = random.Random(7)
    m = rand_matrix(rng, 6, 9)
    r = m.rank()
    ints = [[int(x) for x in row] for row in m.data]
    for p in (211, 307, 401):
        assert kernels.modp_rank(ints, p) == r


def test_kernel_examples():
    assert kernel_basis(Matrix.identity(3)) == []
    z = kernel_basis(Matrix.zero(2, 3))
    assert len(z) == 3
    k = kernel_basis(Matrix([[1, 1, 0], [0, 1, 1]]))
    assert len(k) == 1
    v = k[0]
    assert v[0] * -1 == v[1] and v[0] == v[2]  # proportional to (1, -1, 1)


def test_kernel_properties():
    rng = random.Random(11)
    for _ in range(10):
        m = rand_matrix(rng, rng.randint(1, 5), rng.randint(1, 6))
        ker = kernel_basis(m)
        assert len(ker) == m.ncols - m.rank()
        assert m.rank() == m.transpose().rank()
        for v in ker:
            assert any(x == 1 for x in v)  # normalized free variable
            assert all(x == 0 for x in m.apply(v))


def test_charpoly_examples():
    assert charpoly(Matrix([[1, 0], [0, 2]])) == UniPoly([2, -3, 1])
    assert charpoly(Matrix([[0, 1], [0, 0]])) == UniPoly([0, 0, 1])


def _cofactor_det(m: Matrix) -> Q:
    n = m.nrows
    if n == 1:
        return m.data[0][0]
    total = Q(0)
    sign = 1
    for j in range(n):
        if m.data[0][j]:
            minor = Matrix([[m.data[i][c] for c in range(n) if c != j] for i in range(1, n)])
            total += sign * m.data[0][j] * _cofactor_det(minor)
        sign = -sign
    return total


def test_charpoly_constant_term_is_det():
    rng = random.Random(5)
    for _ in range(5):
        m = rand_matrix(rng, 4, 4)
        cp = charpoly(m)
        # charpoly(0) = det(0*I - m) = det(-m)
        neg = Matrix([[-x for x in row] for row in m.data])
        assert cp.evaluate(0) == _cofactor_det(neg)
        assert m.det() == _cofactor_det(m)


def _charpoly_mod_p(m, p):
    """Faddeev-LeVerrier over F_p (valid for p > matrix size)."""
    n = len(m)
    a = [[x % p for x in row] for row in m]
    coeffs = [0] * (n + 1)
    coeffs[n] = 1
    mk = [row[:] for row in a]
    for k in range(1, n + 1):
        ck = (-sum(mk[i][i] for i in range(n))) * pow(k, p - 2, p) % p
        coeffs[n - k] = ck
        if k < n:
            for i in range(n):
                mk[i][i] = (mk[i][i] + ck) % p
            mk = [
                [sum(a[i][l] * mk[l][j] for l in range(n)) % p for j in range(n)]
                for i in range(n)
            ]
    return coeffs


def test_charpoly_commutes_with_mod_p():
    rng = random.Random(13)
    m = rand_matrix(rng, 4, 4)
    cp = charpoly(m)
    ints = [[int(x) for x in row] for row in m.data]
    for p in (101, 211, 307):
        expect = [int(cp[i]) % p for i in range(5)]
        assert _charpoly_mod_p(ints, p) == expect


@settings(max_examples=30, deadline=None)
@given(
    st.lists(
        st.lists(st.integers(min_value=-9, max_value=9), min_size=3, max_size=3),
        min_size=1,
        max_size=5,
    )
)
def test_rank_nullity_property(rows):
    m = Matrix(rows)
    assert m.rank() + len(kernel_basis(m)) == m.ncols


def test_q_str_roundtrip():
    for x in (Q(3), Q(-7, 2), Q(0), Q(22, 7)):
        assert q_parse(q_str(x)) == x
    assert q_str(Q(5)) == "5"
    assert q_str(Q(-1, 3)) == "-1/3"


def test_matrix_inverse_and_unipotent():
    m = Matrix([[1, 3, 6], [0, 1, 3], [0, 0, 1]])
    inv = m.inverse()
    assert m * inv == Matrix.identity(3)
    phi = inv.transpose() * m
    assert phi.is_unipotent_shift()
    with pytest.raises(ValueError):
        Matrix([[1, 2], [2, 4]]).inverse()
