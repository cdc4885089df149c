from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from artinlab.errors import FieldMismatch
from artinlab.linalg import (
    QQ,
    Echelon,
    Field,
    IntMatrix,
    Matrix,
    check_same_field,
    integer_subgroup_rank,
    inverse,
    is_nilpotent,
    kernel,
    mat_vec,
    matmul,
    minimal_polynomial,
    minpoly_squarefree,
    p_eval_matrix,
    rank,
    rref_rank_solve,
    solve,
)

F7 = Field.prime(7)
small = st.integers(min_value=-4, max_value=4)


def matrices(rows=st.integers(1, 4), cols=st.integers(1, 4)):
    return st.tuples(rows, cols).flatmap(
        lambda rc: st.lists(st.lists(small, min_size=rc[1], max_size=rc[1]), min_size=rc[0], max_size=rc[0])
    )


def test_rank_and_kernel_small():
    m = [[1, 2], [2, 4]]
    assert rank(m, 2, QQ) == 1
    (k,) = kernel(m, 2, QQ)
    assert mat_vec(m, k, QQ) == [0, 0]


def test_field_parsing_and_coercion():
    assert Field.parse("Q") == QQ
    assert Field.parse("Fp:101").p == 101
    assert F7("3/2") == 3 * pow(2, -1, 7) % 7
    assert QQ("3/2") == Fraction(3, 2)
    with pytest.raises(ValueError):
        Field.parse("R")


def test_field_mismatch():
    with pytest.raises(FieldMismatch):
        check_same_field(QQ, F7)


@settings(max_examples=60, deadline=None)
@given(matrices())
def test_kernel_is_annihilated_and_rank_nullity(m):
    n = len(m[0])
    for F in (QQ, F7):
        mm = [[F(x) for x in r] for r in m]
        ker = kernel(mm, n, F)
        assert rank(mm, n, F) + len(ker) == n
        for v in ker:
            assert all(x == 0 for x in mat_vec(mm, v, F))


@settings(max_examples=60, deadline=None)
@given(matrices(), st.lists(small, min_size=4, max_size=4))
def test_solve_returns_solution_when_consistent(m, x):
    n = len(m[0])
    x = x[:n]
    b = mat_vec(m, x, QQ)
    y = solve(m, n, b, QQ)
    assert y is not None and mat_vec(m, y, QQ) == b


@settings(max_examples=40, deadline=None)
@given(matrices(st.just(3), st.just(3)))
def test_inverse_roundtrip(m):
    if rank(m, 3, QQ) < 3:
        with pytest.raises(ZeroDivisionError):
            inverse(m, QQ)
        return
    inv = inverse(m, QQ)
    assert matmul(m, inv, QQ, 3) == [[1 if i == j else 0 for j in range(3)] for i in range(3)]


@settings(max_examples=40, deadline=None)
@given(matrices(st.just(3), st.just(3)))
def test_minimal_polynomial_annihilates(m):
    f = minimal_polynomial(m, QQ)
    assert all(x == 0 for r in p_eval_matrix(f, m, QQ) for x in r)


def test_minpoly_squarefree_examples():
    assert minpoly_squarefree([[0, 1], [0, 0]], QQ) == [([0, 1], 2)]
    assert len(minpoly_squarefree([[0, 0], [0, 1]], QQ)) == 2
    assert is_nilpotent([[0, 1], [0, 0]], QQ)
    assert not is_nilpotent([[1, 0], [0, 0]], QQ)


@settings(max_examples=60, deadline=None)
@given(st.lists(st.lists(st.integers(-6, 6), min_size=3, max_size=3), min_size=0, max_size=5))
def test_subgroup_rank_is_rational_rank(cols):
    m = IntMatrix.from_columns(cols, 3)
    rows = [[c[i] for c in cols] for i in range(3)] if cols else [[], [], []]
    expected = rank(rows, len(cols), QQ) if cols else 0
    assert integer_subgroup_rank(m) == expected


def test_subgroup_rank_ignores_torsion_quotient():
    # 2Z + 4Z inside Z has rank 1 even though the generators are not primitive
    assert integer_subgroup_rank(IntMatrix.from_columns([[2], [4]], 1)) == 1


def test_rref_rank_solve():
    m = Matrix.from_rows(QQ, [[1, 1], [0, 1]])
    rhs = Matrix.from_rows(QQ, [[3], [1]])
    res = rref_rank_solve(m, rhs)
    assert res.rank == 2
    assert res.solution.rows() == [[2], [1]]


def test_echelon_membership():
    e = Echelon(3, QQ, [[1, 1, 0]])
    assert e.contains([2, 2, 0])
    assert not e.contains([1, 0, 0])
    assert e.add([0, 1, 0]) and not e.add([1, 0, 0])
    assert e.dim == 2
