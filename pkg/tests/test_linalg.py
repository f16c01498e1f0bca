"""Exact matrix kernels against independent oracles."""

import random
from fractions import Fraction

import numpy as np
import pytest

from k3z3 import linalg

from _oracles import naive_determinant, random_unimodular_pair


def random_int_matrix(rng, n, m, span=6):
    return [[rng.randint(-span, span) for _ in range(m)] for _ in range(n)]


def test_as_matrix_validates_shape():
    with pytest.raises(ValueError):
        linalg.as_matrix([1, 2, 3])
    with pytest.raises(ValueError):
        linalg.as_matrix([[1, 2], [3]])
    assert linalg.as_matrix([]).shape == (0, 0)


def test_as_int_matrix_rejects_proper_fractions():
    linalg.as_int_matrix([[Fraction(4, 2)]])
    with pytest.raises(ValueError, match="integer entries"):
        linalg.as_int_matrix([[Fraction(1, 2)]])
    with pytest.raises(ValueError, match="integer entries"):
        linalg.as_int_matrix([[1.5]])


def test_bareiss_determinant_examples():
    assert linalg.bareiss_determinant([[0, 1], [1, 0]]) == -1
    assert linalg.bareiss_determinant([[2, 0], [0, 3]]) == 6
    assert linalg.bareiss_determinant([[1, 2], [2, 4]]) == 0
    assert linalg.bareiss_determinant([]) == 1
    with pytest.raises(ValueError):
        linalg.bareiss_determinant([[1, 2, 3], [4, 5, 6]])


def test_bareiss_determinant_matches_cofactor_expansion():
    rng = random.Random(23)
    for _ in range(60):
        n = rng.randint(1, 5)
        m = random_int_matrix(rng, n, n)
        assert linalg.bareiss_determinant(m) == naive_determinant(m)


def test_smith_normal_form_properties():
    rng = random.Random(29)
    for _ in range(40):
        n, m = rng.randint(1, 6), rng.randint(1, 6)
        a = linalg.as_matrix(random_int_matrix(rng, n, m))
        u, d, v = linalg.smith_normal_form(a, check=True)
        assert np.array_equal(u @ a @ v, d)
        diag = [int(d[i, i]) for i in range(min(n, m))]
        for i in range(n):
            for j in range(m):
                if i != j:
                    assert d[i, j] == 0
        nonzero = [x for x in diag if x]
        assert all(x > 0 for x in nonzero)
        for first, second in zip(nonzero, nonzero[1:]):
            assert second % first == 0
        # no nonzero entry may follow a zero on the diagonal
        seen_zero = False
        for x in diag:
            if x == 0:
                seen_zero = True
            elif seen_zero:
                pytest.fail("zero diagonal entry before a nonzero one")


def test_smith_normal_form_handles_rank_deficiency():
    a = [[2, 4, 6], [1, 2, 3], [3, 6, 9]]
    u, d, v = linalg.smith_normal_form(a, check=True)
    assert [int(d[i, i]) for i in range(3)] == [1, 0, 0]


def test_integer_kernel_is_saturated():
    rng = random.Random(31)
    for _ in range(40):
        n, m = rng.randint(1, 6), rng.randint(1, 6)
        a = linalg.as_matrix(random_int_matrix(rng, n, m, span=4))
        ker = linalg.integer_kernel(a)
        assert not np.any(a @ ker) if ker.shape[1] else True
        rank = len(linalg.elementary_divisors(a))
        assert ker.shape[1] == m - rank
        if ker.shape[1]:
            # a saturated lattice has unit elementary divisors
            assert linalg.elementary_divisors(ker) == [1] * ker.shape[1]


def test_solve_integer_recovers_known_solutions():
    rng = random.Random(37)
    for _ in range(30):
        n = rng.randint(2, 6)
        r = rng.randint(1, n)
        u, _ = random_unimodular_pair(rng, n)
        a = u[:, :r]  # full column rank, saturated image
        x = linalg.as_matrix(random_int_matrix(rng, r, 3, span=5))
        b = a @ x
        got = linalg.solve_integer(a, b)
        assert np.array_equal(got, x)


def test_solve_integer_error_cases():
    with pytest.raises(ValueError, match="inconsistent"):
        linalg.solve_integer([[1], [0]], [[0], [1]])
    with pytest.raises(ValueError, match="no integral solution"):
        linalg.solve_integer([[2], [0]], [[1], [0]])
    with pytest.raises(ValueError, match="full column rank"):
        linalg.solve_integer([[1, 1], [1, 1]], [[1], [1]])


def test_rational_inverse():
    rng = random.Random(41)
    for _ in range(20):
        n = rng.randint(1, 5)
        u, uinv = random_unimodular_pair(rng, n)
        assert np.array_equal(linalg.rational_inverse(u), uinv)
    a = [[Fraction(1, 2), 0], [Fraction(1, 3), Fraction(2, 1)]]
    ainv = linalg.rational_inverse(a)
    assert np.array_equal(linalg.as_matrix(a) @ ainv, linalg.identity(2))
    with pytest.raises(ValueError, match="singular"):
        linalg.rational_inverse([[1, 2], [2, 4]])


def test_inertia_examples():
    assert linalg.inertia([[0, 1], [1, 0]]) == (1, 1, 0)
    assert linalg.inertia([[2, 0], [0, -3]]) == (1, 1, 0)
    assert linalg.inertia([[-2, 1], [1, -2]]) == (0, 2, 0)
    assert linalg.inertia(linalg.zeros(3, 3)) == (0, 0, 3)
    assert linalg.inertia([[1, 1], [1, 1]]) == (1, 0, 1)
    assert linalg.inertia(np.empty((0, 0), dtype=object)) == (0, 0, 0)


def test_inertia_requires_symmetry():
    with pytest.raises(ValueError, match="symmetric"):
        linalg.inertia([[0, 1], [2, 0]])


def test_inertia_matches_floating_point_eigenvalues():
    rng = random.Random(43)
    for _ in range(60):
        n = rng.randint(1, 7)
        m = random_int_matrix(rng, n, n, span=4)
        sym = [[m[i][j] + m[j][i] for j in range(n)] for i in range(n)]
        eigs = np.linalg.eigvalsh(np.array(sym, dtype=float))
        want = (
            int(sum(e > 1e-8 for e in eigs)),
            int(sum(e < -1e-8 for e in eigs)),
            int(sum(abs(e) <= 1e-8 for e in eigs)),
        )
        assert linalg.inertia(sym) == want


def test_inertia_accepts_fractions_and_respects_congruence():
    rng = random.Random(47)
    base = [[2, 1, 0], [1, -2, 3], [0, 3, 0]]
    expected = linalg.inertia(base)
    for _ in range(20):
        u, _ = random_unimodular_pair(rng, 3)
        scale = np.array(
            [
                [Fraction(rng.randint(1, 5), rng.randint(1, 5)) if i == j else Fraction(0) for j in range(3)]
                for i in range(3)
            ],
            dtype=object,
        )
        q = u @ scale
        congruent = q.T @ linalg.as_matrix(base) @ q
        assert linalg.inertia(congruent) == expected


def test_inertia_counts_sum_to_dimension():
    rng = random.Random(53)
    for _ in range(30):
        n = rng.randint(1, 6)
        m = random_int_matrix(rng, n, n, span=3)
        sym = [[m[i][j] + m[j][i] for j in range(n)] for i in range(n)]
        pos, neg, null = linalg.inertia(sym)
        assert pos + neg + null == n


def test_block_diag_and_identity():
    a = linalg.block_diag([[1]], [[2, 0], [0, 3]])
    assert a.tolist() == [[1, 0, 0], [0, 2, 0], [0, 0, 3]]
    assert linalg.identity(3).tolist() == [[1, 0, 0], [0, 1, 0], [0, 0, 1]]
