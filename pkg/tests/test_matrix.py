import random

import pytest

from bredim.errors import DimensionMismatchError
from bredim.matrix import (
    IntMatrix,
    determinant,
    ext_gcd,
    hermite_normal_form,
    inverse_unimodular,
    left_kernel,
    rank,
    smith_normal_form,
)
from bredim.oracles import fraction_det, invariant_factors_by_minors


def M(rows, cols=None):
    return IntMatrix.from_rows(rows, cols=cols)


def test_shape_validation():
    with pytest.raises(DimensionMismatchError):
        IntMatrix(2, 2, (1, 2, 3))
    with pytest.raises(DimensionMismatchError):
        IntMatrix.from_rows([[1, 2], [3]])
    with pytest.raises(DimensionMismatchError):
        IntMatrix.from_rows([])
    assert IntMatrix.from_rows([], cols=3).rows == 0


def test_matmul_and_transpose():
    a = M([[1, 2], [3, 4]])
    b = M([[0, 1], [1, 0]])
    assert (a @ b) == M([[2, 1], [4, 3]])
    assert a.transpose() == M([[1, 3], [2, 4]])
    with pytest.raises(DimensionMismatchError):
        a @ M([[1, 2, 3]])


def test_ext_gcd():
    for a, b in [(2, 3), (-4, 6), (0, 0), (0, -7), (12, 18), (-5, -15)]:
        g, x, y = ext_gcd(a, b)
        assert g >= 0
        assert x * a + y * b == g
        assert g == __import__("math").gcd(a, b)


def test_hnf_already_canonical():
    h, u = hermite_normal_form(M([[2, 4]]))
    assert h == M([[2, 4]])
    assert u == M([[1]])


def test_hnf_row_swap():
    m = M([[0, 1], [1, 0]])
    h, u = hermite_normal_form(m)
    assert h == IntMatrix.identity(2)
    assert abs(determinant(u)) == 1
    assert (u @ m) == h


def test_hnf_gcd_column():
    # gcd(2, 3) = 1, computed independently by the extended Euclid check above
    m = M([[2, 0], [3, 0]])
    h, u = hermite_normal_form(m)
    assert h == M([[1, 0], [0, 0]])
    assert (u @ m) == h
    assert abs(determinant(u)) == 1


def test_hnf_reduces_above_pivots():
    h, _ = hermite_normal_form(M([[1, 5], [0, 3]]))
    assert h == M([[1, 2], [0, 3]])


def test_hnf_properties_random():
    rng = random.Random(7)
    for _ in range(200):
        rows, cols = rng.randint(1, 5), rng.randint(1, 5)
        m = M([[rng.randint(-30, 30) for _ in range(cols)] for _ in range(rows)])
        h, u = hermite_normal_form(m)
        assert (u @ m) == h
        assert abs(fraction_det(u)) == 1
        again, _ = hermite_normal_form(h)
        assert again == h
        # unimodular left multiplication cannot change the canonical form
        shear = [[1 if i == j else 0 for j in range(rows)] for i in range(rows)]
        if rows > 1:
            i, j = rng.sample(range(rows), 2)
            shear[i][j] = rng.randint(-3, 3)
        v = M(shear)
        h2, _ = hermite_normal_form(v @ m)
        assert h2 == h


def test_snf_diag_2_3():
    d, s, t = smith_normal_form(M([[2, 0], [0, 3]]))
    assert d.diagonal() == (1, 6)
    assert (s @ M([[2, 0], [0, 3]]) @ t) == d


def test_snf_zero_matrix():
    d, _, _ = smith_normal_form(IntMatrix.zero(3, 2))
    assert d == IntMatrix.zero(3, 2)


def test_snf_2x2_example():
    m = M([[2, 4], [6, 8]])
    d, s, t = smith_normal_form(m)
    assert d.diagonal() == (2, 4)
    assert (s @ m @ t) == d
    assert abs(determinant(s)) == 1
    assert abs(determinant(t)) == 1


def test_snf_oscillation_regression():
    # This input used to bounce between row and column clearing forever.
    m = M([[-3, -8, -8], [1, -2, 3], [4, -7, 9]])
    d, s, t = smith_normal_form(m)
    assert (s @ m @ t) == d
    assert [x for x in d.diagonal() if x] == invariant_factors_by_minors(m)


def test_snf_properties_random():
    rng = random.Random(11)
    for _ in range(150):
        rows, cols = rng.randint(1, 8), rng.randint(1, 8)
        m = M([[rng.randint(-50, 50) for _ in range(cols)] for _ in range(rows)])
        d, s, t = smith_normal_form(m)
        diag = d.diagonal()
        assert (s @ m @ t) == d
        assert abs(fraction_det(s)) == 1
        assert abs(fraction_det(t)) == 1
        assert all(x >= 0 for x in diag)
        assert all(
            d.at(i, j) == 0 for i in range(d.rows) for j in range(d.cols) if i != j
        )
        assert all(b % a == 0 for a, b in zip(diag, diag[1:]) if a)
        assert all(b == 0 for a, b in zip(diag, diag[1:]) if a == 0)


def test_snf_matches_minor_gcds():
    rng = random.Random(13)
    for _ in range(60):
        rows, cols = rng.randint(1, 3), rng.randint(1, 3)
        m = M([[rng.randint(-9, 9) for _ in range(cols)] for _ in range(rows)])
        d, _, _ = smith_normal_form(m)
        assert [x for x in d.diagonal() if x] == invariant_factors_by_minors(m)


def test_determinant():
    assert determinant(IntMatrix.identity(3)) == 1
    assert determinant(M([[2, 0], [1, 3]])) == 6
    assert determinant(M([[1, 2], [2, 4]])) == 0
    assert determinant(IntMatrix.from_rows([], cols=0)) == 1
    rng = random.Random(17)
    for _ in range(100):
        n = rng.randint(1, 5)
        m = M([[rng.randint(-9, 9) for _ in range(n)] for _ in range(n)])
        assert determinant(m) == fraction_det(m)


def test_rank():
    assert rank(M([[1, 2], [2, 4]])) == 1
    assert rank(IntMatrix.zero(2, 3)) == 0
    assert rank(IntMatrix.identity(4)) == 4


def test_left_kernel():
    m = M([[1, 2], [2, 4]])
    k = left_kernel(m)
    assert k.rows == 1
    assert (k @ m).is_zero()
    assert left_kernel(IntMatrix.identity(3)).rows == 0


def test_inverse_unimodular():
    u = M([[1, 2], [0, 1]])
    v = inverse_unimodular(u)
    assert (v @ u) == IntMatrix.identity(2)
    with pytest.raises(DimensionMismatchError):
        inverse_unimodular(M([[2, 0], [0, 1]]))
