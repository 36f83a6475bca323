"""
Test exact arithmetic and linear algebra
Scalars in Q(r2), polynomials, matrices, Plücker vectors, Pfaffians, forms,
flags and Fourier-Motzkin elimination
"""
from fractions import Fraction
from itertools import combinations, permutations

import pytest
from hypothesis import given, settings, strategies as st
import sympy
from sympy import Rational, Symbol

from algebra.flags import Flag, intersect_with_interval
from algebra.forms import BilinearForm, is_isotropic, perp
from algebra.fourier_motzkin import FMECapError, Inequality, eliminate, is_infeasible, pick_column
from algebra.matrix import DimensionMismatchError, ExactMatrix, MatrixFormatError
from algebra.plucker import (
    NotAntisymmetricError,
    dual_plucker_equal,
    is_totally_positive,
    pfaffian,
    plucker_projectively_equal,
    plucker_vector,
)
from algebra.scalar import (
    ONE,
    SQRT2,
    ZERO,
    QuadScalar,
    ScalarParseError,
    ScalarZeroDivisionError,
    parse_scalar_list,
    quad_arith,
    quad_sign,
)
from algebra.symbolic import SymPoly, constant_value, from_sympy, is_constant

fractions = st.fractions(min_value=-50, max_value=50, max_denominator=40)
scalars = st.builds(QuadScalar, fractions, fractions)
nonzero_scalars = scalars.filter(lambda x: not x.is_zero())


def _q(text: str) -> QuadScalar:
    return QuadScalar.parse(text)


def _antisymmetric(values, size):
    """Antisymmetric matrix filled row by row above the diagonal"""
    grid = [[ZERO] * size for _ in range(size)]
    it = iter(values)
    for i in range(size):
        for j in range(i + 1, size):
            v = next(it)
            grid[i][j], grid[j][i] = v, -v
    return ExactMatrix(grid)


# ===================================
# SCALARS
# ===================================

def test_parse_literals():
    assert _q("3") == QuadScalar(3)
    assert _q("-1/2") == QuadScalar(Fraction(-1, 2))
    assert _q("1r2") == SQRT2
    assert _q("-2r2") == QuadScalar(0, -2)
    assert _q("1/2+3/4r2") == QuadScalar(Fraction(1, 2), Fraction(3, 4))
    assert _q("1-1r2") == QuadScalar(1, -1)


@pytest.mark.parametrize("text", ["", "r2", "1/0", "abc", "1+", "2r3"])
def test_parse_rejects_malformed(text):
    with pytest.raises(ScalarParseError):
        QuadScalar.parse(text)


def test_str_parses_back():
    for text in ("0", "7/3", "1r2", "-1/2-3r2", "5+1/3r2"):
        x = _q(text)
        assert QuadScalar.parse(str(x)) == x


def test_sqrt2_squares_to_two():
    assert SQRT2 * SQRT2 == QuadScalar(2)


def test_sign_of_mixed_components():
    assert quad_sign(_q("3-2r2")) == 1      # 9 > 8
    assert quad_sign(_q("1-1r2")) == -1
    assert quad_sign(_q("-3+2r2")) == -1
    assert quad_sign(ZERO) == 0


def test_quad_arith_and_division_by_zero():
    assert quad_arith("add", _q("1"), SQRT2) == _q("1+1r2")
    assert quad_arith("div", ONE, _q("1+1r2")) == _q("-1+1r2")
    with pytest.raises(ScalarZeroDivisionError):
        quad_arith("div", ONE, ZERO)


def test_parse_scalar_list():
    assert parse_scalar_list("1,1,-1/10") == [ONE, ONE, _q("-1/10")]
    assert parse_scalar_list(" ") == []


@given(scalars, scalars, scalars)
def test_field_laws(a, b, c):
    assert (a + b) * c == a * c + b * c
    assert a * b == b * a
    assert (a - b) + b == a


@given(nonzero_scalars)
def test_inverse(a):
    assert a * a.inverse() == ONE


@given(scalars, scalars)
def test_sign_is_multiplicative(a, b):
    assert (a * b).sign() == a.sign() * b.sign()


@given(scalars)
def test_sign_agrees_with_float(a):
    if abs(float(a)) > 1e-9:
        assert a.sign() == (1 if float(a) > 0 else -1)


# ===================================
# POLYNOMIALS
# ===================================

def test_poly_arithmetic():
    b = SymPoly.symbol("b")
    p = (b + 1) * (b - 1)
    assert p == b ** 2 - 1
    assert p.evaluate({"b": _q("3")}) == QuadScalar(8)
    assert p.degree() == 2
    assert p.variables() == {"b"}


def test_poly_constant_results_are_scalars():
    x = SymPoly.symbol("x")
    assert isinstance(x - x, QuadScalar)
    assert (x - x).is_zero()
    assert (1 - x) + x == ONE
    assert isinstance((SQRT2 * x + 1) - SQRT2 * x, QuadScalar)
    assert is_constant(x * 0)
    assert not is_constant(x)


def test_poly_mixes_with_scalars():
    x = SymPoly.symbol("x")
    assert SQRT2 * x == x * SQRT2
    assert (x * 4) / 2 == x * 2
    assert (SQRT2 * x) * (SQRT2 * x) == 2 * x ** 2
    assert (SQRT2 * x).evaluate({"x": SQRT2}) == QuadScalar(2)


def test_poly_division_by_nonconstant_rejected():
    with pytest.raises(ValueError):
        SymPoly.symbol("x") / SymPoly.symbol("y")
    with pytest.raises(ValueError):
        constant_value(SymPoly.symbol("x"))


def test_poly_substitute():
    x, y = SymPoly.symbol("x"), SymPoly.symbol("y")
    assert (x * y + x).substitute({"x": y + 1}) == (y + 1) * y + y + 1
    assert (x * y).substitute({"x": 0}) == ZERO


def test_from_sympy_rejects_entries_outside_the_ring():
    b = Symbol("b")
    assert from_sympy(sympy.sqrt(2) * b) == SQRT2 * SymPoly.symbol("b")
    assert from_sympy(Rational(1, 2) + sympy.sqrt(2)) == _q("1/2+1r2")
    with pytest.raises(ValueError):
        from_sympy(1 / b)
    with pytest.raises(ValueError):
        from_sympy(sympy.sqrt(3) * b)
    with pytest.raises(ValueError):
        from_sympy(sympy.pi)


def test_symbolic_rows_in_plucker_vectors():
    b = SymPoly.symbol("b")
    M = ExactMatrix([[1, 0], [b, 1], [0, b]])
    p = plucker_vector(M)
    assert p[(1, 2)] == ONE
    assert p[(1, 3)] == b
    assert p[(2, 3)] == b ** 2


# ===================================
# MATRICES
# ===================================

def test_det_rank_kernel_inverse():
    M = ExactMatrix([[1, 2, 3], [4, 5, 6], [7, 8, 10]])
    assert M.det() == QuadScalar(-3)
    assert M.rank() == 3
    assert M @ M.inverse() == ExactMatrix.identity(3)

    S = ExactMatrix([[1, 2, 3], [2, 4, 6]])
    K = S.kernel()
    assert K.shape == (3, 2)
    assert all(e.is_zero() for row in (S @ K).rows for e in row)


def test_det_with_sqrt2_entries():
    M = ExactMatrix([[SQRT2, 1], [1, SQRT2]])
    assert M.det() == ONE


def _leibniz_det(M: ExactMatrix) -> QuadScalar:
    total = ZERO
    for perm in permutations(range(M.n_rows)):
        inversions = sum(1 for a, b in combinations(perm, 2) if a > b)
        term = ONE if inversions % 2 == 0 else -ONE
        for i, j in enumerate(perm):
            term = term * M[i, j]
        total = total + term
    return total


def test_det_of_permuted_blocks():
    M = ExactMatrix([[0, 2, 0], [3, 0, 0], [0, 0, 5]])
    assert M.diagonal_blocks() == [([0], [1]), ([1], [0]), ([2], [2])]
    assert M.det() == QuadScalar(-30)


def test_det_with_a_zero_column_off_the_triangle():
    M = ExactMatrix([[0, 1, 1], [0, 1, 2], [0, 3, 1]])
    assert not M.is_upper_triangular() and not M.is_lower_triangular()
    assert M.det().is_zero()


@settings(max_examples=60, deadline=None)
@given(st.lists(scalars, min_size=16, max_size=16), st.lists(st.booleans(), min_size=16, max_size=16))
def test_det_agrees_with_leibniz_on_sparse_patterns(values, mask):
    M = ExactMatrix([[values[4 * i + j] if mask[4 * i + j] else 0 for j in range(4)] for i in range(4)])
    assert M.det() == _leibniz_det(M)


def test_singular_inverse_rejected():
    with pytest.raises(ArithmeticError):
        ExactMatrix([[1, 2], [2, 4]]).inverse()


def test_ragged_and_mismatched_shapes():
    with pytest.raises(DimensionMismatchError):
        ExactMatrix([[1, 2], [3]])
    with pytest.raises(DimensionMismatchError):
        ExactMatrix.identity(2) @ ExactMatrix.identity(3)


def test_same_column_span():
    A = ExactMatrix([[1, 0], [0, 1], [1, 1]])
    B = ExactMatrix([[1, 1], [1, -1], [2, 0]])
    assert A.same_column_span(B)
    assert not A.same_column_span(ExactMatrix([[1, 0], [0, 1], [0, 0]]))


def test_json_format():
    M = ExactMatrix([[1, "1r2"], ["-1/2", 0]])
    assert ExactMatrix.from_json(M.to_json()) == M


@pytest.mark.parametrize("text", [
    "not json",
    '{"rows": 1, "cols": 2}',
    '{"rows": 1, "cols": 2, "entries": [["1"]]}',
    '{"rows": 1, "cols": 1, "entries": [["x"]]}',
])
def test_json_format_errors(text):
    with pytest.raises(MatrixFormatError):
        ExactMatrix.from_json(text)


def test_validate_reports_every_bad_entry():
    errors = ExactMatrix.validate_json_dict({"rows": 1, "cols": 2, "entries": [["x", "y"]]})
    assert len(errors) == 2


# ===================================
# PLÜCKER VECTORS AND PFAFFIANS
# ===================================

def test_plucker_vector_of_plane():
    M = ExactMatrix([[1, 0], [0, 1], [2, 3]])
    p = plucker_vector(M)
    assert p.coords[(1, 2)] == ONE
    assert p.coords[(1, 3)] == QuadScalar(3)
    assert p.coords[(2, 3)] == QuadScalar(-2)
    assert len(list(p.subsets())) == 3


def test_plucker_vector_matches_determinants():
    M = ExactMatrix([[1, 2], [3, 5], [-1, 4], [2, "1r2"]])
    p = plucker_vector(M)
    for S in combinations(range(1, 5), 2):
        assert p.coords[S] == M.submatrix([s - 1 for s in S], range(2)).det()


def test_plucker_vector_needs_k_at_most_n():
    with pytest.raises(DimensionMismatchError):
        plucker_vector(ExactMatrix([[1, 2, 3]]))


@given(st.lists(fractions, min_size=6, max_size=6), fractions.filter(lambda q: q != 0))
@settings(max_examples=40)
def test_plucker_scales_with_basis_change(entries, c):
    M = ExactMatrix([entries[0:2], entries[2:4], entries[4:6]])
    scaled = M @ ExactMatrix([[c, 0], [0, 1]])
    p, q = plucker_vector(M), plucker_vector(scaled)
    assert all(q.coords[S] == p.coords[S] * QuadScalar(c) for S in p.subsets())


def test_projective_equality():
    M = ExactMatrix([[1, 0], [0, 1], [2, 3]])
    p = plucker_vector(M)
    assert plucker_projectively_equal(p, p.scaled(QuadScalar(5)))
    assert not plucker_projectively_equal(p, p.scaled(QuadScalar(-5)))
    assert plucker_projectively_equal(p, p.scaled(QuadScalar(-5)), up_to_sign=True)


def test_pfaffian_of_4x4():
    a, b, c, d, e, f = (QuadScalar(v) for v in (1, 2, 3, 4, 5, 6))
    M = _antisymmetric([a, b, c, d, e, f], 4)
    assert pfaffian(M) == a * f - b * e + c * d


@given(st.lists(fractions, min_size=15, max_size=15))
@settings(max_examples=25)
def test_pfaffian_squares_to_determinant(values):
    M = _antisymmetric([QuadScalar(v) for v in values], 6)
    assert pfaffian(M) * pfaffian(M) == M.det()


def test_pfaffian_rejects_bad_input():
    with pytest.raises(NotAntisymmetricError):
        pfaffian(ExactMatrix.identity(2))
    with pytest.raises(NotAntisymmetricError):
        pfaffian(ExactMatrix.zeros(3, 3))


def test_totally_positive():
    assert is_totally_positive(ExactMatrix([[1, 1], [1, 2]]))
    assert not is_totally_positive(ExactMatrix([[1, 2], [1, 1]]))
    assert is_totally_positive(ExactMatrix([[1, 0], [1, 1]]), strict=False)


# ===================================
# FORMS AND FLAGS
# ===================================

def test_form_kinds():
    assert BilinearForm.type_c(2).matrix.is_antisymmetric()
    assert BilinearForm.type_b(2).matrix.is_symmetric()
    assert BilinearForm.type_d(4).matrix.is_symmetric()
    assert BilinearForm.type_b(3).dimension == 7


def test_coordinate_lagrangian_is_isotropic():
    for form in (BilinearForm.type_c(3), BilinearForm.type_b(3)):
        E = ExactMatrix.identity(form.dimension).leading_columns(3)
        assert is_isotropic(E, form)
        assert not is_isotropic(ExactMatrix.identity(form.dimension), form)


def test_perp_dimension_and_duality():
    form = BilinearForm.type_c(2)
    L = ExactMatrix([[1], [2], [0], [0]])
    P = perp(L, form)
    assert P.shape == (4, 3)
    assert dual_plucker_equal(plucker_vector(L), plucker_vector(P))


def test_flag_ranks_validated():
    with pytest.raises(ValueError):
        Flag.from_rows([[1, 0, 0], [2, 0, 0]], (1, 2))
    with pytest.raises(ValueError):
        Flag.from_rows([[1, 0, 0]], (2, 1))


def test_intersect_with_interval():
    F = Flag.from_rows([[1, 0, 0, 1], [0, 1, 0, 0], [0, 0, 1, 0]], (1, 2, 3))
    G = intersect_with_interval(F, 2, 4)
    assert G.ambient == 3
    assert G.ranks == (1, 2)
    assert G.subspace(1).same_column_span(ExactMatrix([[1], [0], [0]]))


def test_intersect_with_interval_range_checked():
    F = Flag.from_rows([[1, 0, 0]], (1,))
    with pytest.raises(ValueError):
        intersect_with_interval(F, 2, 5)


# ===================================
# FOURIER-MOTZKIN
# ===================================

def test_feasible_and_infeasible_systems():
    # x >= 0, y >= 0, x + y <= -1
    rows = [Inequality.of([1, 0]), Inequality.of([0, 1]), Inequality.of([-1, -1], -1)]
    assert is_infeasible(rows, 100)
    # x >= 0, y >= 0, x + y <= 1
    rows[-1] = Inequality.of([-1, -1], 1)
    assert not is_infeasible(rows, 100)


def test_forced_equality_on_a_cone():
    # x - y >= 0 and y - x >= 0 force x = y, so x - y >= 1 is impossible
    rows = [Inequality.of([1, -1]), Inequality.of([-1, 1])]
    assert is_infeasible(rows + [Inequality.of([1, -1], -1)], 100)
    assert not is_infeasible(rows + [Inequality.of([1, 1], -1)], 100)


def test_sqrt2_coefficients():
    # r2 x >= 1 and x <= 1/2 is infeasible; x <= 1 is not
    assert is_infeasible([Inequality.of([SQRT2], -1), Inequality.of([-1], "1/2")], 100)
    assert not is_infeasible([Inequality.of([SQRT2], -1), Inequality.of([-1], 1)], 100)


def test_row_cap():
    rows = [Inequality.of([1, (-1) ** k * (k + 1)]) for k in range(6)]
    rows += [Inequality.of([-1, k]) for k in range(1, 6)]
    col = pick_column(rows, [0, 1])
    with pytest.raises(FMECapError):
        eliminate(rows, col, 3)


def test_normalized_rows_deduplicate():
    assert Inequality.of([2, 4], 2).normalized() == Inequality.of([1, 2], 1)
    assert Inequality.of([-3, 3]).normalized() == Inequality.of([-1, 1])
