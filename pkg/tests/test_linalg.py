from fractions import Fraction

import pytest

from hessk3 import linalg as la


def test_hnf_known():
    h, u = la.hnf([[2, 4, 4], [-6, 6, 12], [10, -4, -16]])
    assert la.matmul(u, [[2, 4, 4], [-6, 6, 12], [10, -4, -16]]) == h
    assert all(h[i][j] == 0 for i in range(3) for j in range(i))
    assert abs(h[0][0] * h[1][1] * h[2][2]) == 144
    assert abs(la.det(u)) == 1


def test_snf_known():
    m = [[2, 4, 4], [-6, 6, 12], [10, -4, -16]]
    u, s, v = la.snf(m)
    assert la.matmul(la.matmul(u, m), v) == s
    assert [s[i][i] for i in range(3)] == [2, 6, 12]
    assert la.elementary_divisors(m) == [2, 6, 12]


def test_snf_rectangular_and_zero():
    assert la.elementary_divisors([[0, 0], [0, 0], [0, 0]]) == [0, 0]
    u, s, v = la.snf([[4, 6, 8]])
    assert s == [[2, 0, 0]]


def test_det_and_rank():
    assert la.det([[1, 2], [3, 4]]) == -2
    assert la.det(la.identity(5)) == 1
    assert la.rank([[1, 2], [2, 4]]) == 1
    assert la.det([[2, -1, 0], [-1, 2, -1], [0, -1, 2]]) == 4


def test_kernel_and_left_kernel():
    m = [[1, 2, 3], [2, 4, 6]]
    k = la.kernel(m, 3)
    assert len(k) == 2
    for v in k:
        assert la.matvec(m, v) == [0, 0]
    lk = la.left_kernel(m)
    assert len(lk) == 1 and la.vecmat(lk[0], m) == [0, 0, 0]


def test_solve_integer():
    assert la.solve_integer([[2, 0], [0, 3]], [4, 9]) == [2, 3]
    assert la.solve_integer([[2, 0], [0, 3]], [1, 0]) is None


def test_signature_and_inverse():
    assert la.signature([[0, 1], [1, 0]]) == (1, 1, 0)
    assert la.signature([[-2, 1], [1, -2]]) == (0, 2, 0)
    inv = la.inverse_rational([[2, 1], [1, 1]])
    assert inv == [[1, -1], [-1, 2]]
    assert la.inverse_rational([[2, 0], [0, 4]])[1][1] == Fraction(1, 4)


def test_json_round_trip():
    m = [[1, Fraction(-3, 7)], [0, 5]]
    assert la.loads(la.dumps(m)) == m


def test_block_diag():
    assert la.block_diag([[1]], [[0, 1], [1, 0]]) == [[1, 0, 0], [0, 0, 1], [0, 1, 0]]


@pytest.mark.parametrize("big", [2**80, -(3**60)])
def test_bigint_entries(big):
    m = [[big, 1], [0, 1]]
    assert la.det(m) == big
    assert la.elementary_divisors(m) == [1, abs(big)]
