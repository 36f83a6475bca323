"""
Test the counterexample constructions, the no-extension certifier, proof
hints, the catalog and the D(4) Pfaffian example
"""
import pytest

from algebra.flags import Flag
from algebra.forms import is_isotropic
from algebra.symbolic import SymPoly
from algebra.scalar import SQRT2, QuadScalar
from counterexamples import (
    PROVEN,
    UNKNOWN,
    Catalog,
    ConstructionError,
    ExtensionProblem,
    HintError,
    HintParser,
    b2_equality_report,
    build_counterexample,
    catalog_entries,
    catalog_ranks,
    certify_construction,
    certify_flag,
    extend_B2,
    falsify,
    load_hints,
    no_extension_certificate,
    pfaffian_demo_report,
    reduce_by_interval_then_certify,
    type_d_report,
    typeD_pfaffian_point,
)
from counterexamples.certifier import certify_with_hints, gap_blocks, pivot_rows, top_problem
from counterexamples.constructions import b2_line, gap_and_floor, small_case_vector_b, verify_construction
from counterexamples.type_d import WITNESS_T, displayed_matrix, minor_ratio, shuffle_sign
from pinning.groups import GroupDescriptor
from positivity.flags import standard_flag
from positivity.sampling import ParameterError

HINTED = "B.case_i.n4.K1"

HINT_DOCUMENT = """
hints:
  - construction: C.case_i.n2.K1
    rank: 2
    parameters: [b]
    branches:
      - name: only
        vector: ["0", "b", "0", "0"]
"""


def _q(text: str) -> QuadScalar:
    return QuadScalar.parse(text)


# ============================================================================
# CONSTRUCTIONS
# ============================================================================

def test_gap_and_floor():
    assert gap_and_floor(4, [1, 2, 4]) == (3, 2)
    assert gap_and_floor(4, [1]) == (4, 1)
    with pytest.raises(ConstructionError, match="consecutive"):
        gap_and_floor(4, [3, 4])
    with pytest.raises(ConstructionError, match="consecutive"):
        gap_and_floor(3, [1, 2, 3])
    with pytest.raises(ConstructionError, match="nonempty"):
        gap_and_floor(3, [4])


def test_case_selection_and_names():
    assert build_counterexample("C", 2, [1]).name == "C.case_i.n2.K1"
    assert build_counterexample("C", 4, [1, 2, 4]).case == "case_ii"
    assert build_counterexample("C", 4, [1]).case == "case_i"
    assert build_counterexample("C", 4, [2, 3]).case == "case_i"
    assert build_counterexample("C", 5, [1, 2, 4, 5]).case == "case_iii"
    assert build_counterexample("B", 3, [2]).variant == "corner"
    assert build_counterexample("B", 3, [1]).variant == "odd"
    assert build_counterexample("B", 4, [1]).variant == "even"


def test_case_i_type_c_rows():
    c = build_counterexample("C", 2, [1])
    assert c.matrix.rows == [[1, 0, 0, 1]]
    assert (c.g, c.f) == (2, 1)


def test_small_case_vectors_b():
    assert small_case_vector_b(1) == [1, SQRT2, 1]
    assert small_case_vector_b(2) == [0, 1, SQRT2, 1, 0]


def test_construction_errors():
    with pytest.raises(ConstructionError, match="B\\(2\\)"):
        build_counterexample("B", 2, [1])
    with pytest.raises(ConstructionError):
        build_counterexample("D", 4, [1])
    with pytest.raises(ConstructionError):
        build_counterexample("C", 3, [2, 3])


@pytest.mark.parametrize("system,n", [("C", 2), ("C", 3), ("C", 4), ("B", 3), ("B", 4)])
def test_every_catalog_flag_is_isotropic_and_nonnegative(system, n):
    for c in catalog_entries(system, n):
        report = verify_construction(c)
        assert report.passed, (c.name, report.failures())
        assert len(report.checks) == 2 * len(c.ranks)


def test_construction_json():
    data = build_counterexample("B", 3, [1, 3]).to_json_dict()
    assert data["case"] == "case_ii"
    assert data["expected"] == {"nonneg_member": True, "extendable": False}
    assert data["rows"][0][3] == "1r2"


# ============================================================================
# CERTIFIER
# ============================================================================

def test_gap_blocks():
    assert gap_blocks([1], 3) == [(1, None)]
    assert gap_blocks([2], 3) == [(0, 2), (2, None)]
    assert gap_blocks([1, 2, 4], 4) == [(2, 4)]
    assert gap_blocks([1, 2, 3], 3) == []


def test_pivot_rows():
    c = build_counterexample("C", 2, [1])
    assert pivot_rows(c.flag.subspace(1)) == (1,)


def test_extension_problem_shape():
    problem = top_problem(build_counterexample("C", 2, [1]))
    assert problem.ambient == 4
    assert problem.target_rank == 2
    assert problem.dimension == 3
    assert problem.quadratic_constraint() is None


def test_quadratic_constraint_for_orthogonal_forms():
    problem = top_problem(build_counterexample("B", 3, [1]))
    assert problem.quadratic_constraint() is not None


@pytest.mark.parametrize("system,n,K", [
    ("C", 2, [1]),
    ("C", 3, [1]),
    ("C", 3, [2]),
    ("C", 3, [1, 3]),
    ("C", 4, [1, 2, 4]),
    ("B", 3, [1]),
    ("B", 3, [2]),
    ("B", 3, [1, 3]),
])
def test_direct_certificates(system, n, K):
    c = build_counterexample(system, n, K)
    certificates = certify_flag(c.flag, c.descriptor.form, n, c.name)
    assert certificates[-1].verdict == PROVEN
    report = certify_construction(c)
    assert report.descriptor["verdict"] == PROVEN
    assert report.descriptor["method"] == "direct"
    assert report.descriptor["used_hints"] is False


def test_c3_rank_two_needs_the_unbounded_gap():
    c = build_counterexample("C", 3, [2])
    certificates = certify_flag(c.flag, c.descriptor.form, 3, c.name)
    assert [cert.verdict for cert in certificates] == [UNKNOWN, PROVEN]
    assert certificates[-1].target_rank == 3


def test_certificate_records_forced_equalities():
    cert = no_extension_certificate(top_problem(build_counterexample("C", 2, [1])))
    assert cert.verdict == PROVEN
    assert cert.residual_dimension == 0
    assert cert.equalities
    assert cert.to_dict()["verdict"] == PROVEN


def test_standard_flag_extends():
    """The next rank of a coordinate flag is not excluded"""
    c2 = GroupDescriptor("C", 2)
    certificates = certify_flag(standard_flag(c2, [1]), c2.form, 2, "standard")
    assert certificates[-1].verdict == UNKNOWN
    assert certificates[-1].residual_dimension > 0


@pytest.mark.parametrize("system,n,K", [("C", 4, [1, 2, 4]), ("B", 4, [1, 4])])
def test_interval_reduction(system, n, K):
    report = reduce_by_interval_then_certify(build_counterexample(system, n, K))
    assert report.passed, report.failures()
    assert len(report.checks) == 2


def test_interval_reduction_needs_case_ii():
    report = reduce_by_interval_then_certify(build_counterexample("C", 3, [1]))
    assert not report.passed
    assert report.checks[0].witness == "case_i"


def test_b4_interval_method():
    report = certify_construction(build_counterexample("B", 4, [1, 4]))
    assert report.descriptor["verdict"] == PROVEN
    assert report.descriptor["method"] in ("direct", "interval")


def test_falsify_finds_no_extension():
    report = falsify(top_problem(build_counterexample("C", 2, [1])), trials=40, seed=1)
    assert report.passed
    assert report.samples == 40


def test_falsify_finds_standard_extension():
    c2 = GroupDescriptor("C", 2)
    problem = ExtensionProblem.unbounded(standard_flag(c2, [1]).subspace(1), c2.form, "standard")
    report = falsify(problem, trials=20, seed=3)
    assert not report.passed


# ============================================================================
# PROOF HINTS
# ============================================================================

def test_packaged_hints_load():
    hints = load_hints()
    assert HINTED in hints
    hint = hints[HINTED]
    assert hint.rank == 2
    assert hint.parameters == ("b",)
    assert [branch.name for branch in hint.branches] == ["a = 1", "d = 1"]
    assert len(hint.branches[0].vector) == 9


def test_parse_entry():
    b = SymPoly.symbol("b")
    assert HintParser.parse_entry("1r2*b", ("b",)) == SQRT2 * b
    assert HintParser.parse_entry("-1/2*b^2", ("b",)) == _q("-1/2") * b * b
    assert HintParser.parse_entry("-b", ("b",)) == -b
    assert HintParser.parse_entry("0", ()) == 0
    assert HintParser.parse_entry("1/2+3/4r2", ()) == _q("1/2+3/4r2")


def test_parse_entry_polynomials():
    b, c = SymPoly.symbol("b"), SymPoly.symbol("c")
    assert HintParser.parse_entry("(b + 1)^2", ("b",)) == b * b + 2 * b + 1
    assert HintParser.parse_entry("b*c - 2r2", ("b", "c")) == b * c - 2 * SQRT2
    assert isinstance(HintParser.parse_entry("b - b + 3", ("b",)), QuadScalar)


@pytest.mark.parametrize("text,message", [
    ("c", "Undeclared parameter"),
    ("2r3*b", "Invalid factor"),
    ("b^-1", "Invalid factor"),
    ("1/0", "Invalid factor"),
    ("b $ 2", "Invalid factor"),
    (" ", "Empty"),
])
def test_parse_entry_errors(text, message):
    with pytest.raises(HintError, match=message):
        HintParser.parse_entry(text, ("b",))


def test_parse_document():
    hints = HintParser.parse(HINT_DOCUMENT)
    assert list(hints) == ["C.case_i.n2.K1"]
    assert hints["C.case_i.n2.K1"].description == ""


@pytest.mark.parametrize("content,message", [
    ("", "Empty hint file"),
    ("hints: [", "Invalid YAML"),
    ("- 1", "'hints' list"),
    ("hints:\n  - construction: X\n    branches: [{vector: ['1']}]", "Missing required field: rank"),
    ("hints:\n  - construction: X\n    rank: 0\n    branches: [{vector: ['1']}]", "positive integer"),
    ("hints:\n  - construction: X\n    rank: 2\n    branches: []", "nonempty list"),
    ("hints:\n  - construction: X\n    rank: 2\n    branches: [{vector: ['1']}, {vector: ['1', '0']}]",
     "different lengths"),
])
def test_validate_reports_errors(content, message):
    errors = HintParser.validate(content)
    assert len(errors) == 1
    assert message in errors[0]


def test_duplicate_hints_rejected():
    with pytest.raises(HintError, match="Duplicate"):
        HintParser.parse(HINT_DOCUMENT + HINT_DOCUMENT.replace("hints:\n", "", 1))


def test_load_hints_missing_file(tmp_path):
    with pytest.raises(HintError, match="Cannot read"):
        load_hints(tmp_path / "missing.yaml")


def test_hint_rank_must_follow_top_rank():
    hint = load_hints()[HINTED]
    with pytest.raises(HintError, match="rank above the top rank"):
        certify_with_hints(build_counterexample("B", 3, [1, 3]), hint)


def test_b4_line_needs_hints():
    c = build_counterexample("B", 4, [1])
    certificates = certify_flag(c.flag, c.descriptor.form, 4, c.name)
    assert certificates[-1].verdict == UNKNOWN
    assert certificates[-1].residual_dimension == 3
    report = certify_construction(c)
    assert report.descriptor["verdict"] == UNKNOWN
    assert report.descriptor["method"] is None


def test_b4_line_certified_with_hints():
    c = build_counterexample("B", 4, [1])
    hinted = certify_with_hints(c, load_hints()[HINTED])
    assert hinted.passed, hinted.failures()
    report = certify_construction(c, load_hints())
    assert report.descriptor["verdict"] == PROVEN
    assert report.descriptor["method"] == "hints"
    assert report.descriptor["used_hints"] is True


def test_hints_can_be_switched_off(features):
    features["proof_hints"] = False
    report = certify_construction(build_counterexample("B", 4, [1]), load_hints())
    assert report.descriptor["verdict"] == UNKNOWN


# ============================================================================
# CATALOG
# ============================================================================

@pytest.mark.parametrize("n,count", [(2, 1), (3, 4), (4, 11)])
def test_catalog_ranks(n, count):
    assert len(catalog_ranks(n)) == count


def test_catalog_order():
    assert catalog_ranks(3) == [(1,), (2,), (1, 2), (1, 3)]


def test_catalog_entries_and_lookup():
    catalog = Catalog(ranges={"C": (2, 3)}, hints={})
    assert catalog.names() == [
        "C.case_i.n2.K1",
        "C.case_i.n3.K1",
        "C.case_i.n3.K2",
        "C.case_i.n3.K1-2",
        "C.case_ii.n3.K1-3",
    ]
    assert catalog.get("C.case_i.n3.K2").ranks == (2,)
    assert catalog.get("C.case_i.n5.K1").descriptor.n == 5


def test_catalog_lookup_errors():
    catalog = Catalog(ranges={"C": (2,)}, hints={})
    with pytest.raises(ConstructionError, match="Invalid construction name"):
        catalog.get("C2K1")
    with pytest.raises(ConstructionError, match="names no construction"):
        catalog.get("C.case_ii.n2.K1")


def test_catalog_run():
    catalog = Catalog(ranges={"C": (2,)}, hints={})
    report = catalog.run(catalog.get("C.case_i.n2.K1"))
    assert report.passed, report.failures()
    assert report.descriptor["verdict"] == PROVEN
    assert report.descriptor["method"] == "direct"
    assert report.checks[-1].name == f"no extension: {PROVEN}"


def test_catalog_run_without_hints_fails():
    catalog = Catalog(ranges={"B": (4,)}, hints={})
    report = catalog.run(catalog.get(HINTED))
    assert not report.passed
    assert [c.name for c in report.failures()] == [f"no extension: {UNKNOWN}"]


def test_catalog_summary_small():
    report = Catalog(ranges={"C": (2, 3), "B": (3,)}).summary_report()
    assert report.passed, report.failures()
    assert len(report.checks) == 9


@pytest.mark.slow
def test_full_catalog():
    report = Catalog().summary_report()
    assert report.passed, report.failures()
    assert len(report.checks) == 31


# ============================================================================
# B(2)
# ============================================================================

def test_b2_line_is_isotropic():
    b2 = GroupDescriptor("B", 2)
    point = b2_line(1, 1, 1)
    assert point[4] == _q("1/2")
    M = extend_B2(point, 1)
    assert M.rows[1] == [0, 1, 2, 2, 1]
    assert is_isotropic(Flag.from_rows(M.rows, (1, 2)).subspace(2), b2.form)


def test_b2_equality_report():
    report = b2_equality_report(samples=5, seed=42)
    assert report.passed, report.failures()
    assert len(report.checks) == 5


# ============================================================================
# TYPE D
# ============================================================================

def test_shuffle_signs():
    assert shuffle_sign(()) == 1
    assert shuffle_sign((1, 3)) == -1
    assert shuffle_sign((2, 4)) == -1
    assert shuffle_sign((3, 4)) == 1
    assert shuffle_sign((1, 2, 3, 4)) == 1


def test_pfaffians_at_ones():
    point = typeD_pfaffian_point([1] * 6)
    assert point.canonical == {
        (): 1,
        (1, 2): 1, (1, 3): 1, (1, 4): 1, (2, 3): 1, (2, 4): 2, (3, 4): 2,
        (1, 2, 3, 4): 1,
    }
    assert point.E0B.is_antisymmetric()
    assert point.lusztig_nonneg


def test_raw_pfaffians_at_ones_carry_the_shuffle_signs():
    point = typeD_pfaffian_point([1] * 6)
    assert point.pfaffians[(1, 3)] == -1
    assert point.pfaffians[(2, 4)] == -2
    negative = {I for I, v in point.pfaffians.items() if v.sign() < 0}
    assert negative == {I for I in point.pfaffians if shuffle_sign(I) < 0}
    for I, v in point.pfaffians.items():
        assert point.canonical[I] == shuffle_sign(I) * v


def test_top_pfaffian_is_product_of_parameters():
    t = ["2", "1/3", "5", "-1", "7/2", "1/2"]
    point = typeD_pfaffian_point(t)
    product = QuadScalar.coerce(1)
    for v in t:
        product = product * _q(v)
    assert point.pfaffians[(1, 2, 3, 4)] == product
    assert point.pfaffians[(3, 4)] == _q("5/2")


def test_generator_plane_matches_closed_form():
    t = ["1/2", "3", "-2", "1", "4/3", "-1/5"]
    assert typeD_pfaffian_point(t).X == displayed_matrix(t)


def test_witness_is_positive_but_not_lusztig_nonnegative():
    point = typeD_pfaffian_point(WITNESS_T)
    assert point.all_positive()
    assert not point.lusztig_nonneg
    assert point.canonical[(2, 4)] == _q("1/10")


def test_small_negative_pair_is_not_a_witness():
    point = typeD_pfaffian_point(["1", "1", "1", "1", "-1/10", "-1/10"])
    assert point.canonical[(2, 4)].sign() < 0
    assert not point.all_positive()


def test_minor_ratio():
    assert minor_ratio(typeD_pfaffian_point([1] * 6)) == 1
    assert minor_ratio(typeD_pfaffian_point(WITNESS_T)) is not None


def test_parameter_count():
    with pytest.raises(ParameterError):
        typeD_pfaffian_point([1] * 5)


def test_pfaffian_demo_report():
    report = pfaffian_demo_report()
    assert report.passed
    assert len(report.checks) == 4
    assert report.descriptor["all_canonical_positive"] is True
    assert report.descriptor["lusztig_nonneg"] is False


@pytest.mark.parametrize("t", [
    ["1", "1", "1", "1", "-1/10", "-1/10"],
    ["1", "2", "1", "1", "1/2", "3"],
])
def test_pfaffian_demo_report_fails_off_the_witness(t):
    report = pfaffian_demo_report(t)
    assert not report.passed
    assert [c.name for c in report.failures()] == ["canonical coordinates positive, point not Lusztig nonnegative"]


def test_type_d_report():
    report = type_d_report(samples=3, seed=42)
    assert report.passed, report.failures()
    assert len(report.checks) == 4 * 3 + 1
