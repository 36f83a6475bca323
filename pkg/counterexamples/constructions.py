"""
Explicit nonnegative flags that do not extend

For K not of the form {k, ..., n}, g is the first gap from the right and f
the largest element of K below g. The case is read off g:

    (i)   g = n
    (ii)  g = n - 1
    (iii) g <= n - 2

Rows of a construction matrix are the row vectors of the printed
displays; L_k is the span of the first k rows.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Optional, Tuple

from algebra.flags import Flag
from algebra.forms import is_isotropic
from algebra.matrix import ExactMatrix
from algebra.scalar import QuadScalar, SQRT2, ZERO
from config.settings import B2_DOUBLING_CAP
from pinning.groups import GroupDescriptor
from positivity.flags import is_plucker_positive_flag
from positivity.reports import Report
from positivity.sampling import make_rng, positive_rationals

logger = logging.getLogger(__name__)

EXPECTED = {"nonneg_member": True, "extendable": False}

# Two rows spanning the B(3) corner point, on 7 consecutive coordinates
CORNER_ROWS = ((1, 2, 2, 2, 2, 1, 0), (0, 1, 2, 2, 2, 2, 1))


class ConstructionError(ValueError):
    """Raised when no counterexample exists (or none is built) for a system and K"""
    pass


@dataclass(frozen=True)
class Construction:
    name: str
    descriptor: GroupDescriptor
    ranks: Tuple[int, ...]
    case: str
    matrix: ExactMatrix
    g: int
    f: int
    variant: str = ""
    expected: Dict = field(default_factory=lambda: dict(EXPECTED))

    @property
    def flag(self) -> Flag:
        return Flag.from_rows(self.matrix.rows, self.ranks)

    def to_json_dict(self) -> dict:
        return {
            "name": self.name,
            "descriptor": self.descriptor.to_json_dict(),
            "K": list(self.ranks),
            "case": self.case,
            "variant": self.variant,
            "g": self.g,
            "f": self.f,
            "expected": dict(self.expected),
            "rows": [[str(e) for e in row] for row in self.matrix.rows],
        }


def construction_name(system: str, n: int, case: str, K: Iterable[int]) -> str:
    return f"{system}.{case}.n{n}.K{'-'.join(str(k) for k in sorted(K))}"


def gap_and_floor(n: int, K: Iterable[int]) -> Tuple[int, int]:
    """
    (g, f): the first gap from the right and the largest element of K below it

    Raises:
        ConstructionError: K is empty, leaves [n], or is {k, ..., n}
    """
    K = set(K)
    if not K or min(K) < 1 or max(K) > n:
        raise ConstructionError(f"K = {sorted(K)} is not a nonempty subset of [{n}]")
    missing = [i for i in range(1, n + 1) if i not in K]
    if not missing:
        raise ConstructionError(f"K = [{n}] is consecutive up to n; every point extends")
    g = missing[-1]
    below = [i for i in K if i < g]
    if not below:
        raise ConstructionError(f"K = {sorted(K)} is consecutive up to n; every point extends")
    return g, max(below)


def _unit(N: int, *entries) -> List[QuadScalar]:
    """Row vector with the given (1-based index, value) entries"""
    row = [ZERO] * N
    for index, value in entries:
        row[index - 1] = QuadScalar.coerce(value)
    return row


def _identity_rows(N: int, indices: Iterable[int], sign: int = 1) -> List[List[QuadScalar]]:
    return [_unit(N, (i, sign)) for i in indices]


# ============================================================================
# TYPE C
# ============================================================================

def _c_case_i(n: int, f: int) -> List[list]:
    N = 2 * n
    return _identity_rows(N, range(1, f)) + [_unit(N, (f, 1), (2 * n - f + 1, 1))]


def _c_case_ii(n: int, f: int, middle: List[QuadScalar]) -> List[list]:
    N = len(middle)
    ell = n - f - 2
    rows = _identity_rows(N, range(1, f))
    rows.append(middle)
    rows += _identity_rows(N, range(f, n - 2), (-1) ** ell)
    rows += _identity_rows(N, (n - 1, n))
    return rows


def _case_iii(N: int, n: int, f: int) -> List[list]:
    """Rows inside span(e_1, ..., e_n); shared by types B and C"""
    sigma = (-1) ** (f - 1)
    rows = _identity_rows(N, range(5, f + 4))
    rows.append(_unit(N, (1, sigma), (4, sigma)))
    rows.append(_unit(N, (2, sigma)))
    rows.append(_unit(N, (3, sigma)))
    rows += _identity_rows(N, range(f + 4, n + 1))
    rows.append(_unit(N, (4, (-1) ** (n - f - 3))))
    return rows


# ============================================================================
# TYPE B
# ============================================================================

def small_case_vector_b(m: int) -> List[QuadScalar]:
    """
    The nonextendable isotropic line in R^(2m+1):
    e1 + r2 e(m+1) + e(2m+1) for odd m, e2 + r2 e(m+1) + e(2m) for even m
    """
    N = 2 * m + 1
    if m % 2:
        return _unit(N, (1, 1), (m + 1, SQRT2), (2 * m + 1, 1))
    return _unit(N, (2, 1), (m + 1, SQRT2), (2 * m, 1))


def _b_case_i(n: int, f: int) -> Tuple[List[list], str]:
    N = 2 * n + 1
    if f == n - 1:
        rows = _identity_rows(N, range(1, f - 1))
        for corner in CORNER_ROWS:
            rows.append(_unit(N, *[(f - 1 + j, v) for j, v in enumerate(corner)]))
        return rows, "corner"
    m = n - f + 1
    local = small_case_vector_b(m)
    rows = _identity_rows(N, range(1, f))
    rows.append(_unit(N, *[(f + j, v) for j, v in enumerate(local)]))
    return rows, "odd" if m % 2 else "even"


def build_counterexample(system: str, n: int, K: Iterable[int]) -> Construction:
    """
    The explicit Plücker-nonnegative isotropic flag at ranks K that admits
    no nonnegative extension to a complete isotropic flag

    Raises:
        ConstructionError: K is consecutive up to n, the system is not B or
            C, or B(2) is requested (every nonnegative point extends there)
    """
    K = tuple(sorted(set(K)))
    if system not in ("B", "C"):
        raise ConstructionError(f"No counterexample catalog for system '{system}'")
    if system == "B" and n < 3:
        raise ConstructionError("B(2) has no counterexample; Lusztig and Plücker nonnegativity agree")
    if n < 2:
        raise ConstructionError(f"{system}({n}) has no counterexample")
    g, f = gap_and_floor(n, K)
    variant = ""
    if system == "C":
        N = 2 * n
        if g == n:
            case, rows = "case_i", _c_case_i(n, f)
        elif g == n - 1:
            case, rows = "case_ii", _c_case_ii(n, f, _unit(N, (n - 2, 1), (n + 3, 1)))
        else:
            case, rows = "case_iii", _case_iii(N, n, f)
    else:
        N = 2 * n + 1
        if g == n:
            case = "case_i"
            rows, variant = _b_case_i(n, f)
        elif g == n - 1:
            case = "case_ii"
            rows = _c_case_ii(n, f, _unit(N, (n - 2, 1), (n + 1, SQRT2), (n + 4, 1)))
        else:
            case, rows = "case_iii", _case_iii(N, n, f)

    descriptor = GroupDescriptor(system, n)
    name = construction_name(system, n, case, K)
    logger.debug(f"{name}: g={g}, f={f}, {len(rows)} rows")
    return Construction(name, descriptor, K, case, ExactMatrix(rows), g, f, variant)


# ============================================================================
# VERIFICATION
# ============================================================================

def plucker_nonnegativity_witness(F: Flag, k: int) -> Optional[str]:
    """None when the rank-k Plücker vector is nonzero with one weak sign"""
    p = F.plucker(k)
    first = p.first_nonzero()
    if first is None:
        return "all Plücker coordinates vanish"
    scale = p.coords[first].sign()
    for S in p.subsets():
        if scale * p.coords[S].sign() < 0:
            return f"coordinate {S} = {p.coords[S]} has the wrong sign"
    return None


def verify_construction(c: Construction) -> Report:
    """Isotropy and Plücker nonnegativity at every rank of c, one check each"""
    report = Report("verify-construction", {"name": c.name, **c.descriptor.to_json_dict(), "K": list(c.ranks)})
    try:
        F = c.flag
    except ValueError as e:
        report.add("rows are independent", False, str(e))
        return report
    form = c.descriptor.form
    for k in c.ranks:
        report.add(f"rank {k}: isotropic", is_isotropic(F.subspace(k), form))
        witness = plucker_nonnegativity_witness(F, k)
        report.add(f"rank {k}: Plücker nonnegative", witness is None, witness)
    logger.info(f"verify {c.name}: {report.summary()}")
    return report


# ============================================================================
# B(2): EVERY NONNEGATIVE LINE EXTENDS
# ============================================================================

def b2_line(b, c, d) -> List[QuadScalar]:
    """(1, b, c, d, e) with e fixed by isotropy: e = bd - c^2/2"""
    b, c, d = (QuadScalar.coerce(v) for v in (b, c, d))
    return [QuadScalar.coerce(1), b, c, d, b * d - c * c / 2]


def extend_B2(point, x) -> ExactMatrix:
    """
    The 2 x 5 matrix [L_1; (0, 1, 2x, 2x^2, 2bx^2 + d - 2cx)] for the line
    L_1 = (1, b, c, d, e)
    """
    point = [QuadScalar.coerce(v) for v in point]
    x = QuadScalar.coerce(x)
    _, b, c, d, _ = point
    second = [ZERO, QuadScalar.coerce(1), 2 * x, 2 * x * x, 2 * b * x * x + d - 2 * c * x]
    return ExactMatrix([point, second])


def extend_b2_until_positive(point, x=1, cap: int = None) -> Tuple[Optional[ExactMatrix], int]:
    """Double x until the rank-{1, 2} flag is strictly positive; (matrix, doublings) or (None, cap)"""
    cap = B2_DOUBLING_CAP if cap is None else cap
    g = GroupDescriptor("B", 2)
    x = QuadScalar.coerce(x)
    for doublings in range(cap + 1):
        M = extend_B2(point, x)
        F = Flag.from_rows(M.rows, (1, 2))
        if is_plucker_positive_flag(F, g, strict=True):
            return M, doublings
        x = 2 * x
    logger.warning(f"B(2) extension of {point} still not positive after {cap} doublings")
    return None, cap


def b2_equality_report(samples: int, seed: int) -> Report:
    """Seeded positive isotropic lines in R^5 extend to strictly positive rank-{1, 2} flags"""
    report = Report("b2-equality", GroupDescriptor("B", 2).to_json_dict(), seed, samples)
    for index in range(samples):
        b, c, d = positive_rationals(make_rng(seed, index), 3)
        if (b * d - c * c / 2).sign() <= 0:
            d = d + c * c / b
        point = b2_line(b, c, d)
        M, doublings = extend_b2_until_positive(point)
        report.add(
            f"sample {index}: line {[str(v) for v in point]} extends",
            M is not None,
            {"doublings": doublings},
        )
    logger.info(f"b2-equality: {report.summary()}")
    return report
