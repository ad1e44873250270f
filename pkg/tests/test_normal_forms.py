import sympy
from hypothesis import given, settings
from hypothesis import strategies as st
from sympy.matrices.normalforms import smith_normal_form

from enhanced_alexander.laurent import RatPoly
from enhanced_alexander.normal_forms import (
    IntegerSystem,
    hnf_rows,
    invariant_factors_q,
    rank_mod_p,
    reduce_mod_lattice,
    smith_diagonal_int,
)

small_matrices = st.integers(1, 4).flatmap(
    lambda m: st.integers(1, 4).flatmap(
        lambda n: st.lists(st.lists(st.integers(-5, 5), min_size=n, max_size=n), min_size=m, max_size=m)
    )
)


@given(small_matrices, st.data())
def test_integer_system_finds_solutions(mat, data):
    n = len(mat[0])
    x = data.draw(st.lists(st.integers(-4, 4), min_size=n, max_size=n))
    cols = [{i: mat[i][j] for i in range(len(mat))} for j in range(n)]
    b = {i: sum(mat[i][j] * x[j] for j in range(n)) for i in range(len(mat))}
    sol = IntegerSystem(cols).solve(b)
    assert sol is not None
    for i in range(len(mat)):
        assert sum(mat[i][j] * sol.get(j, 0) for j in range(n)) == b[i]


def test_integer_system_detects_unsolvable():
    cols = [{0: 2}, {0: 4, 1: 2}]
    assert IntegerSystem(cols).solve({0: 1}) is None
    assert IntegerSystem(cols).solve({1: 1}) is None


@settings(max_examples=60)
@given(small_matrices)
def test_smith_matches_sympy(mat):
    ours = smith_diagonal_int(mat)
    snf = smith_normal_form(sympy.Matrix(mat), domain=sympy.ZZ)
    theirs = [abs(int(snf[i, i])) for i in range(min(snf.shape)) if snf[i, i] != 0]
    assert ours == theirs


@given(small_matrices, st.sampled_from([2, 3, 5, 7]))
def test_rank_mod_p_matches_sympy(mat, p):
    assert rank_mod_p(mat, p) == _sympy_rank_mod(sympy.Matrix(mat), p)


def _sympy_rank_mod(m, p):
    from sympy.polys.matrices import DomainMatrix

    dm = DomainMatrix.from_Matrix(m).convert_to(sympy.GF(p))
    return dm.rank()


def test_invariant_factors_over_q():
    # diag(t - 1, (t - 1)^2) disguised by a column operation
    a = RatPoly([-1, 1])
    b = RatPoly([1, -2, 1])
    assert invariant_factors_q([[a, a], [RatPoly(), b]]) == [a, b]
    # coprime entries collapse to 1 and their product
    c = RatPoly([1, 1])
    assert invariant_factors_q([[a, RatPoly()], [RatPoly(), c]]) == [RatPoly([1]), a * c]


@given(st.lists(st.lists(st.integers(-6, 6), min_size=3, max_size=3), max_size=4), st.lists(st.integers(-9, 9), min_size=3, max_size=3), st.lists(st.integers(-3, 3), max_size=4))
def test_lattice_reduction_is_canonical(vectors, v, combo):
    basis = hnf_rows(vectors, 3)
    shifted = list(v)
    for c, vec in zip(combo, vectors):
        shifted = [x + c * y for x, y in zip(shifted, vec)]
    assert reduce_mod_lattice(v, basis) == reduce_mod_lattice(shifted, basis)
