from fractions import Fraction

from hypothesis import given
from hypothesis import strategies as st

from klrspecht.linalg import determinant, is_unitriangular, rank, solve


def test_rank_and_determinant():
    cols = [{0: 1, 1: 2}, {0: 2, 1: 4}, {2: 1}]
    assert rank(cols, 3) == 2
    assert determinant([{0: 1}, {0: 3, 1: -1}], 2) == -1


def test_solve():
    cols = [{0: 2}, {0: 1, 1: 1}]
    (x,) = solve(cols, [{0: 3, 1: 1}], 2)
    assert x == {0: Fraction(1), 1: Fraction(1)}


def test_unitriangular():
    assert is_unitriangular([{0: 1}, {0: 5, 1: 1}], [0, 1])
    assert not is_unitriangular([{0: 1, 1: 2}, {1: 1}], [0, 1])


matrices = st.integers(1, 4).flatmap(
    lambda n: st.lists(st.lists(st.integers(-3, 3), min_size=n, max_size=n), min_size=n, max_size=n)
)


@given(matrices)
def test_determinant_matches_sympy(m):
    import sympy

    n = len(m)
    cols = [{r: m[r][c] for r in range(n) if m[r][c]} for c in range(n)]
    assert determinant(cols, n) == sympy.Matrix(m).det()
    assert rank(cols, n) == sympy.Matrix(m).rank()
