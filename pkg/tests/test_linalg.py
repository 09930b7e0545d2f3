"""Exact linear algebra checks, including brute-force oracles over F5."""

import itertools
import random
from fractions import Fraction

import pytest

from altcomm import PrimeField, RationalField
from altcomm.linalg import Matrix, kernel_from_rref

Q = RationalField()
F5 = PrimeField(5)


def qmat(rows):
    return Matrix(Q, [[Fraction(v) for v in row] for row in rows],
                  cols=len(rows[0]) if rows else 0)


def test_rref_frozen_example():
    reduced, pivots = qmat([[2, 4], [1, 2]]).rref()
    assert pivots == [0]
    assert reduced.data == [[Fraction(1), Fraction(2)], [Fraction(0), Fraction(0)]]


def test_rref_identity_is_fixed():
    m = Matrix.identity(Q, 3)
    reduced, pivots = m.rref()
    assert reduced == m and pivots == [0, 1, 2]


def test_kernel_against_exhaustive_enumeration_over_f5():
    # oracle: try all 25 vectors of F5^2 against [[1, 1]]
    m = Matrix(F5, [[1, 1]], cols=2)
    brute = [v for v in itertools.product(range(5), repeat=2)
             if (v[0] + v[1]) % 5 == 0 and any(v)]
    kernel = m.kernel_basis()
    assert len(kernel) == 1
    assert tuple(kernel[0]) in brute, "kernel vector must actually annihilate"
    # the basis vector is normalized with a one in the free position
    assert kernel[0][1] == 1


def test_kernel_members_all_annihilate():
    rng = random.Random(0)
    for _ in range(20):
        rows, cols = rng.randint(1, 4), rng.randint(1, 5)
        m = Matrix(F5, [[rng.randrange(5) for _ in range(cols)] for _ in range(rows)],
                   cols=cols)
        for v in m.kernel_basis():
            assert not any(x % 5 for x in m.matvec(v))


def test_rank_nullity():
    rng = random.Random(1)
    for _ in range(25):
        rows, cols = rng.randint(1, 5), rng.randint(1, 5)
        m = Matrix(Q, [[Fraction(rng.randint(-3, 3)) for _ in range(cols)]
                       for _ in range(rows)], cols=cols)
        assert m.rank() + len(m.kernel_basis()) == cols


def test_solve_finds_exact_solution():
    m = qmat([[1, 2], [3, 4]])
    x = m.solve([Fraction(5), Fraction(11)])
    assert m.matvec(x) == [Fraction(5), Fraction(11)]
    assert x == [Fraction(1), Fraction(2)]


def test_solve_inconsistent_returns_none():
    m = qmat([[1, 1], [1, 1]])
    assert m.solve([Fraction(0), Fraction(1)]) is None


def test_solve_is_deterministic_with_free_variables():
    m = Matrix(F5, [[1, 1, 0]], cols=3)
    x1 = m.solve([3])
    x2 = m.solve([3])
    assert x1 == x2
    # free variables pinned to zero
    assert x1 == [3, 0, 0]


def test_solve_with_zero_columns():
    m = Matrix(Q, [[], []], cols=0)
    assert m.solve([Q.zero, Q.zero]) == []
    assert m.solve([Q.one, Q.zero]) is None


def test_matmul_and_matvec_agree():
    rng = random.Random(2)
    a = Matrix(Q, [[Fraction(rng.randint(-4, 4)) for _ in range(3)] for _ in range(2)],
               cols=3)
    b = Matrix(Q, [[Fraction(rng.randint(-4, 4)) for _ in range(2)] for _ in range(3)],
               cols=2)
    ab = a @ b
    for j in range(2):
        assert ab.column(j) == a.matvec(b.column(j))


def test_stack_and_from_columns():
    a = qmat([[1, 2]])
    b = qmat([[3, 4], [5, 6]])
    s = Matrix.stack(Q, [a, b])
    assert s.rows == 3 and s.data[2] == [Fraction(5), Fraction(6)]
    c = Matrix.from_columns(Q, [[Fraction(1), Fraction(2)], [Fraction(3), Fraction(4)]])
    assert c.data == [[Fraction(1), Fraction(3)], [Fraction(2), Fraction(4)]]


def test_kernel_from_rref_matches_kernel_basis():
    m = Matrix(F5, [[1, 2, 3], [2, 4, 1]], cols=3)
    reduced, pivots = m.rref()
    assert kernel_from_rref(F5, reduced, pivots) == m.kernel_basis()


def test_dimension_mismatch_raises():
    m = qmat([[1, 2]])
    with pytest.raises(ValueError):
        m.matvec([Fraction(1)])
    with pytest.raises(ValueError):
        m.solve([Fraction(1), Fraction(2)])
