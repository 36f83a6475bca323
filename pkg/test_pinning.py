"""
Test pinning generators, group membership and the folding identities
"""
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from algebra.matrix import DimensionMismatchError, ExactMatrix
from algebra.scalar import SQRT2, QuadScalar
from algebra.symbolic import SymPoly
from pinning import (
    CoordinateMap,
    GeneratorSpec,
    GroupDescriptor,
    PinningError,
    chi_word,
    fold_identity,
    generator,
    group_membership,
    verify_compatibility,
    verify_ddagger2,
    word_product,
    x_word,
    y_word,
)
from pinning.compatibility import compatibility_failures, ddagger2_failures
from pinning.generators import phi, sdot_gen, sdot_inv_gen

PARAMS = ["1", "2", "-1/3", "7/5", "1r2"]

small_fractions = st.fractions(min_value=-20, max_value=20, max_denominator=30)
nonzero_fractions = small_fractions.filter(lambda q: q != 0)


def _q(text: str) -> QuadScalar:
    return QuadScalar.parse(text)


def _descriptors():
    for system in ("C", "B"):
        for n in (2, 3, 4):
            yield GroupDescriptor(system, n)
    yield GroupDescriptor("D", 4)


# ===================================
# DESCRIPTORS
# ===================================

def test_descriptor_ambient_dimensions():
    """Ambient sizes follow the rank convention"""
    assert GroupDescriptor("A", 3).ambient == 4
    assert GroupDescriptor("C", 3).ambient == 6
    assert GroupDescriptor("B", 3).ambient == 7
    assert GroupDescriptor("D", 4).ambient == 8
    assert GroupDescriptor("B", 3).type_a == GroupDescriptor("A", 6)


def test_descriptor_parse_and_errors():
    """Descriptors parse from text and reject bad systems"""
    assert GroupDescriptor.parse("C(3)") == GroupDescriptor("C", 3)
    assert GroupDescriptor.parse(" B ( 2 ) ") == GroupDescriptor("B", 2)
    with pytest.raises(PinningError):
        GroupDescriptor.parse("E(6)")
    with pytest.raises(PinningError):
        GroupDescriptor("D", 3)


# ===================================
# GENERATOR MATRICES
# ===================================

def test_type_a_y_generator_is_lower_elementary():
    """y_2(m) in GL(5) is the identity plus m at (3, 2)"""
    g = GroupDescriptor("A", 4)
    M = generator(g, GeneratorSpec("y", 2, "5/3"))
    expected = ExactMatrix.identity(5).with_entry(2, 1, _q("5/3"))
    assert M == expected


def test_type_b_last_x_generator_block():
    """x_n of SO(5) carries sqrt2*m and m^2 in the middle block"""
    g = GroupDescriptor("B", 2)
    m = _q("3")
    M = generator(g, GeneratorSpec("x", 2, m))
    block = M.submatrix(range(1, 4), range(1, 4))
    assert block == ExactMatrix([
        [1, SQRT2 * m, m * m],
        [0, 1, SQRT2 * m],
        [0, 0, 1],
    ])
    assert M[0, 0] == 1 and M[4, 4] == 1


def test_type_b_last_sdot_block():
    """sdot_n of SO(2n+1) acts on the middle block as a signed antidiagonal"""
    g = GroupDescriptor("B", 3)
    block = sdot_gen(g, 3).submatrix(range(2, 5), range(2, 5))
    assert block == ExactMatrix([[0, 0, 1], [0, -1, 0], [1, 0, 0]])


def test_type_c_sdot_is_product_of_type_a_sdots():
    """sdot_1 of Sp(4) equals sdot_1 sdot_3 of GL(4)"""
    C2 = GroupDescriptor("C", 2)
    A3 = GroupDescriptor("A", 3)
    lhs = generator(C2, GeneratorSpec("sdot", 1))
    rhs = generator(A3, GeneratorSpec("sdot", 1)) @ generator(A3, GeneratorSpec("sdot", 3))
    assert lhs == rhs


def test_sdot_is_phi_of_rotation():
    """Wherever phi_i is a block embedding, sdot_i = phi_i([[0,-1],[1,0]])"""
    for g in list(_descriptors()) + [GroupDescriptor("A", 3)]:
        for i in range(1, g.rank + 1):
            if g.system == "B" and i == g.n:
                continue
            assert sdot_gen(g, i) == phi(g, i, 0, -1, 1, 0), f"{g}, i={i}"


def test_sdot_inverse():
    """sdot_i times its inverse is the identity"""
    for g in _descriptors():
        for i in range(1, g.rank + 1):
            assert sdot_gen(g, i) @ sdot_inv_gen(g, i) == ExactMatrix.identity(g.ambient)


def test_type_d_last_generator_interleaves():
    """phi_n of SO(2n) puts its blocks on (n-1, n+1) and (n, n+2)"""
    g = GroupDescriptor("D", 4)
    M = generator(g, GeneratorSpec("y", 4, "2"))
    assert M[4, 2] == 2 and M[5, 3] == 2
    assert M == ExactMatrix.identity(8).with_entry(4, 2, 2).with_entry(5, 3, 2)


def test_generator_errors():
    """Bad indices, zero torus parameters and missing parameters are rejected"""
    g = GroupDescriptor("C", 2)
    with pytest.raises(PinningError):
        generator(g, GeneratorSpec("x", 3, "1"))
    with pytest.raises(PinningError):
        GeneratorSpec("chi", 1, "0")
    with pytest.raises(PinningError):
        GeneratorSpec("y", 1)
    with pytest.raises(PinningError):
        GeneratorSpec("sdot", 1, "1")
    with pytest.raises(PinningError):
        GeneratorSpec("z", 1, "1")


# ===================================
# WORD PRODUCTS
# ===================================

def test_empty_word_product_is_identity():
    """No letters multiply to the identity"""
    g = GroupDescriptor("B", 2)
    assert word_product(g, [], [], []) == ExactMatrix.identity(5)


def test_type_a_y_word_hand_product():
    """y_1(a) y_2(b) y_1(c) in GL(3)"""
    a, b, c = _q("2"), _q("3"), _q("5")
    M = y_word(GroupDescriptor("A", 2), (1, 2, 1), (a, b, c))
    assert M[1, 0] == a + c
    assert M[2, 1] == b
    assert M[2, 0] == b * c
    assert M.is_lower_unitriangular()


def test_word_product_length_mismatch():
    """Letters, kinds and params must agree in length"""
    with pytest.raises(PinningError):
        word_product(GroupDescriptor("A", 2), (1, 2), ("y",), ("1",))


def test_x_sdot_inv_is_x_times_sdot_inverse():
    """x_sdot_inv is x_i(m) followed by sdot_i^-1"""
    g = GroupDescriptor("C", 3)
    lhs = word_product(g, [2], ["x_sdot_inv"], ["4"])
    rhs = word_product(g, [2, 2], ["x", "sdot_inv"], ["4", None])
    assert lhs == rhs


def test_x_sdot_inv_block_form():
    """x_i(t) sdot_i^-1 = phi_i([[-t, 1], [-1, 0]])"""
    g = GroupDescriptor("A", 3)
    t = _q("7/2")
    assert generator(g, GeneratorSpec("x_sdot_inv", 2, t)) == phi(g, 2, -t, 1, -1, 0)


# ===================================
# GROUP MEMBERSHIP
# ===================================

def test_identity_is_member():
    for g in _descriptors():
        assert group_membership(ExactMatrix.identity(g.ambient), g)


def test_every_generator_is_member():
    """x, y, chi and sdot of C, B (n <= 4) and D(4) preserve the form with det 1"""
    for g in _descriptors():
        for i in range(1, g.rank + 1):
            assert group_membership(generator(g, GeneratorSpec("sdot", i)), g), f"sdot_{i} {g}"
            for p in PARAMS:
                for kind in ("x", "y", "chi"):
                    M = generator(g, GeneratorSpec(kind, i, p))
                    assert group_membership(M, g), f"{kind}_{i}({p}) in {g}"


def test_non_member_and_size_mismatch():
    """diag(2,1,1,1) is not symplectic; wrong sizes raise"""
    C2 = GroupDescriptor("C", 2)
    M = ExactMatrix.identity(4).with_entry(0, 0, 2)
    assert not group_membership(M, C2)
    with pytest.raises(DimensionMismatchError):
        group_membership(ExactMatrix.identity(5), C2)


def test_orthogonal_membership_needs_determinant_one():
    """-I preserves every form; it lies in Sp(4) and SO(8) but not in SO(5)"""
    assert group_membership(-ExactMatrix.identity(4), GroupDescriptor("C", 2))
    assert not group_membership(-ExactMatrix.identity(5), GroupDescriptor("B", 2))
    assert group_membership(-ExactMatrix.identity(8), GroupDescriptor("D", 4))
    swap = ExactMatrix.identity(5).with_entry(0, 0, 0).with_entry(4, 4, 0).with_entry(0, 4, 1).with_entry(4, 0, 1)
    assert not group_membership(swap, GroupDescriptor("B", 2))


def test_symbolic_generators_multiply_out():
    m = SymPoly.symbol("m")
    C2 = GroupDescriptor("C", 2)
    assert generator(C2, GeneratorSpec("x", 1, m)) @ generator(C2, GeneratorSpec("x", 1, -m)) == ExactMatrix.identity(4)
    with pytest.raises(PinningError):
        GeneratorSpec("chi", 1, m)


def test_type_a_membership_is_invertibility():
    A2 = GroupDescriptor("A", 2)
    assert group_membership(ExactMatrix.identity(3).with_entry(0, 0, 5), A2)
    assert not group_membership(ExactMatrix.zeros(3, 3), A2)


# ===================================
# ONE-PARAMETER LAWS
# ===================================

@settings(max_examples=25, deadline=None)
@given(a=small_fractions, b=small_fractions)
def test_y_one_parameter_law(a, b):
    """y_i(a) y_i(b) = y_i(a+b) on every root of C(3), B(3) and D(4)"""
    for g in (GroupDescriptor("C", 3), GroupDescriptor("B", 3), GroupDescriptor("D", 4)):
        for i in range(1, g.rank + 1):
            lhs = y_word(g, (i, i), (a, b))
            assert lhs == generator(g, GeneratorSpec("y", i, a + b))


@settings(max_examples=25, deadline=None)
@given(a=small_fractions, b=small_fractions)
def test_x_one_parameter_law(a, b):
    for g in (GroupDescriptor("C", 2), GroupDescriptor("B", 2)):
        for i in range(1, g.rank + 1):
            assert x_word(g, (i, i), (a, b)) == generator(g, GeneratorSpec("x", i, a + b))


@settings(max_examples=25, deadline=None)
@given(s=nonzero_fractions, t=nonzero_fractions)
def test_chi_one_parameter_law(s, t):
    """chi_i(s) chi_i(t) = chi_i(st)"""
    for g in (GroupDescriptor("C", 2), GroupDescriptor("B", 2), GroupDescriptor("D", 4)):
        for i in range(1, g.rank + 1):
            lhs = word_product(g, (i, i), ("chi", "chi"), (s, t))
            assert lhs == generator(g, GeneratorSpec("chi", i, s * t))


def test_positive_upper_products_are_upper_triangular():
    """x-words times torus elements stay in the upper Borel of GL"""
    for g in (GroupDescriptor("C", 3), GroupDescriptor("B", 3)):
        letters = list(range(1, g.n + 1)) * 2
        M = x_word(g, letters, ["1/2"] * len(letters)) @ chi_word(g, ["2"] * g.n)
        assert M.is_upper_triangular()


# ===================================
# FOLDING IDENTITIES
# ===================================

def test_coordinate_maps():
    """Named closed forms evaluate and report positivity"""
    m = _q("3")
    assert CoordinateMap("identity")(m) == m
    assert CoordinateMap("scale", SQRT2)(m) == SQRT2 * m
    assert CoordinateMap("square_negate")(m) == -9
    assert CoordinateMap("scale", SQRT2).preserves_positivity
    assert not CoordinateMap("square_negate").preserves_positivity
    assert all(CoordinateMap(name).fixes_zero() for name in ("identity", "square", "square_negate"))
    with pytest.raises(PinningError):
        CoordinateMap("cube")


def test_y_fold_identity_type_c():
    """y_1 of Sp(6) is y_1 y_5 of GL(6)"""
    identity = fold_identity(GroupDescriptor("C", 3), 1, "y")
    assert identity.target_letters == (1, 5)
    for m in ("1", "2", "3"):
        assert identity.holds_at(m)


def test_y_fold_identity_type_b_last():
    """y_n of SO(5) is y_2(m/sqrt2) y_3(sqrt2 m) y_2(m/sqrt2)"""
    identity = fold_identity(GroupDescriptor("B", 2), 2, "y")
    assert identity.target_letters == (2, 3, 2)
    assert [f.factor for f in identity.coordinate_maps] == [SQRT2 / 2, SQRT2, SQRT2 / 2]
    assert all(f.preserves_positivity and f.fixes_zero() for f in identity.coordinate_maps)
    for m in ("1", "1/2", "-3", "7/5"):
        assert identity.holds_at(m)


def test_compatibility_holds_everywhere():
    """Every y, x, chi and sdot identity holds for C and B up to rank 4"""
    for system in ("C", "B"):
        for n in (2, 3, 4):
            g = GroupDescriptor(system, n)
            for i in range(1, n + 1):
                assert compatibility_failures(g, i) == [], f"{g}, i={i}"
                assert verify_compatibility(g, i)


def test_factorization_holds_everywhere():
    """x_i(m) sdot_i^-1 factors along the folded letters with commuting factors"""
    for system in ("C", "B"):
        for n in (2, 3, 4):
            g = GroupDescriptor(system, n)
            for i in range(1, n + 1):
                assert ddagger2_failures(g, i) == [], f"{g}, i={i}"
                assert verify_ddagger2(g, i)


def test_factorization_type_b_last_maps():
    """The long B block uses sqrt2 m, -m^2, sqrt2 m"""
    identity = fold_identity(GroupDescriptor("B", 2), 2, "x_sdot_inv")
    names = [f.name for f in identity.coordinate_maps]
    assert names == ["scale", "square_negate", "scale"]
    for m in ("1", "1/2", "-3"):
        assert identity.holds_at(m)


def test_type_c_last_identity_is_single_letter():
    identity = fold_identity(GroupDescriptor("C", 3), 3, "x_sdot_inv")
    assert identity.target_letters == (3,)


def test_fold_identity_rejects_type_d():
    with pytest.raises(PinningError):
        fold_identity(GroupDescriptor("D", 4), 1, "y")


# ===================================
# TYPE D GENERATOR PRODUCT
# ===================================

def test_type_d_generator_product_spans_displayed_matrix():
    """y4 y2 y3 y1 y2 y4 applied to e1..e4 spans the closed-form 8x4 matrix"""
    t1, t2, t3, t4, t5, t6 = [_q(v) for v in ("2", "3", "1/2", "5", "7/3", "4")]
    g = GroupDescriptor("D", 4)
    X = y_word(g, (4, 2, 3, 1, 2, 4), (t1, t2, t3, t4, t5, t6)).leading_columns(4)
    p5 = t2 * t3 * t4 * t5 * t6
    displayed = ExactMatrix([
        [1, 0, 0, 0],
        [0, 1, 0, 0],
        [0, 0, 1, 0],
        [0, 0, 0, 1],
        [t4 * t5 * t6, -(t2 + t5) * t6, t1 + t6, 0],
        [t3 * t4 * t5 * t6, -t3 * t5 * t6, 0, t1 + t6],
        [p5, 0, -t3 * t5 * t6, (t2 + t5) * t6],
        [0, p5, -t3 * t4 * t5 * t6, t4 * t5 * t6],
    ])
    assert X.same_column_span(displayed)
