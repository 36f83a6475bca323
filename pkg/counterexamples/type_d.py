"""
The D(4) Pfaffian counterexample

The isotropic 4-plane X = y4(t1) y2(t2) y3(t3) y1(t4) y2(t5) y4(t6) . span(e1..e4)
is normalized to [I; B]. Its spin coordinates are the signed Pfaffians of the
principal submatrices of the antisymmetric matrix E0 B, where E0 is the
lower-left block of the D(4) form. Every one of them is positive at
positive t, but so are they at some t with a negative entry, while the
point is Lusztig nonnegative only when every t_i >= 0.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from itertools import combinations
from typing import Dict, List, Sequence, Tuple

from algebra.matrix import ExactMatrix
from algebra.plucker import pfaffian
from algebra.scalar import QuadScalar
from pinning.generators import y_word
from pinning.groups import GroupDescriptor
from positivity.reports import Report
from positivity.sampling import check_counts, make_rng, positive_rationals, signed_rationals

logger = logging.getLogger(__name__)

D4 = GroupDescriptor("D", 4)
WORD = (4, 2, 3, 1, 2, 4)

# All canonical coordinates positive although t5 < 0 and t6 < 0: t2 + t5 < 0 < t1 + t6
WITNESS_T = ("1", "1", "1", "1", "-2", "-1/10")

Subset = Tuple[int, ...]
EVEN_SUBSETS: Tuple[Subset, ...] = tuple(
    S for size in (0, 2, 4) for S in combinations(range(1, 5), size)
)


def shuffle_sign(I: Subset) -> int:
    """
    Sign of the permutation listing I and then [4] minus I, both increasing

    Canonical coordinates are sgn(I, [4] minus I) Pf_I. At t = (1, ..., 1)
    the raw Pfaffians are Pf_13 = -1, Pf_24 = -2 and positive elsewhere,
    and 13 and 24 are exactly the even subsets with an odd shuffle.
    """
    return -1 if (sum(I) - len(I) * (len(I) + 1) // 2) % 2 else 1


def _params(t: Sequence) -> List[QuadScalar]:
    t = [QuadScalar.coerce(v) for v in t]
    check_counts("typeD_pfaffian_point", t, len(WORD))
    return t


def generator_plane(t: Sequence) -> ExactMatrix:
    """The first four columns of the generator product, normalized to [I; B]"""
    X = y_word(D4, WORD, _params(t)).leading_columns(4)
    top = X.submatrix(range(4), range(4))
    return X @ top.inverse()


def displayed_matrix(t: Sequence) -> ExactMatrix:
    """Closed form of the normalized plane"""
    t1, t2, t3, t4, t5, t6 = _params(t)
    p5 = t2 * t3 * t4 * t5 * t6
    return ExactMatrix([
        [1, 0, 0, 0],
        [0, 1, 0, 0],
        [0, 0, 1, 0],
        [0, 0, 0, 1],
        [t4 * t5 * t6, -(t2 + t5) * t6, t1 + t6, 0],
        [t3 * t4 * t5 * t6, -t3 * t5 * t6, 0, t1 + t6],
        [p5, 0, -t3 * t5 * t6, (t2 + t5) * t6],
        [0, p5, -t3 * t4 * t5 * t6, t4 * t5 * t6],
    ])


def lower_left_form_block() -> ExactMatrix:
    return D4.form.matrix.submatrix(range(4, 8), range(4))


def spin_pfaffians(E0B: ExactMatrix) -> Dict[Subset, QuadScalar]:
    """Pf((E0 B)[I, I]) for every even I"""
    out = {}
    for I in EVEN_SUBSETS:
        idx = [i - 1 for i in I]
        out[I] = pfaffian(E0B.submatrix(idx, idx))
    return out


@dataclass(frozen=True)
class PfaffianPoint:
    t: Tuple[QuadScalar, ...]
    X: ExactMatrix
    E0B: ExactMatrix
    pfaffians: Dict[Subset, QuadScalar]
    lusztig_nonneg: bool

    @property
    def canonical(self) -> Dict[Subset, QuadScalar]:
        return {I: v * shuffle_sign(I) for I, v in self.pfaffians.items()}

    def all_positive(self) -> bool:
        return all(v.sign() > 0 for v in self.canonical.values())

    def to_json_dict(self) -> dict:
        label = lambda I: "".join(str(i) for i in I) or "empty"
        return {
            "t": [str(v) for v in self.t],
            "lusztig_nonneg": self.lusztig_nonneg,
            "pfaffians": {label(I): str(v) for I, v in self.pfaffians.items()},
            "canonical": {label(I): str(v) for I, v in self.canonical.items()},
            "all_canonical_positive": self.all_positive(),
        }


def typeD_pfaffian_point(t: Sequence) -> PfaffianPoint:
    """
    Raises:
        ParameterError: t does not have six entries
        NotAntisymmetricError: E0 B fails to be antisymmetric
    """
    t = _params(t)
    X = generator_plane(t)
    E0B = lower_left_form_block() @ X.submatrix(range(4, 8), range(4))
    point = PfaffianPoint(tuple(t), X, E0B, spin_pfaffians(E0B), all(v.sign() >= 0 for v in t))
    logger.debug(f"typeD point at {[str(v) for v in t]}: all canonical positive = {point.all_positive()}")
    return point


def complementary_rows(I: Subset) -> List[int]:
    """0-based rows ([4] minus I) together with 9 - i for i in I"""
    rows = [i for i in range(1, 5) if i not in I] + [9 - i for i in I]
    return [r - 1 for r in sorted(rows)]


def minor_ratio(point: PfaffianPoint):
    """
    The common value of Pf_I^2 / minor, or None when some Pf_I^2 differs
    from its minor by another factor (or vanishes alone)
    """
    ratio = None
    for I, pf in point.pfaffians.items():
        minor = point.X.submatrix(complementary_rows(I), range(4)).det()
        square = pf * pf
        if minor.is_zero() or square.is_zero():
            if not (minor.is_zero() and square.is_zero()):
                return None
            continue
        value = square / minor
        if ratio is None:
            ratio = value
        elif value != ratio:
            return None
    return ratio


# ============================================================================
# REPORTS
# ============================================================================

def pfaffian_demo_report(t: Sequence = WITNESS_T) -> Report:
    point = typeD_pfaffian_point(t)
    report = Report("pfaffian-demo", {**D4.to_json_dict(), **point.to_json_dict()})
    report.add("E0 B is antisymmetric", point.E0B.is_antisymmetric())
    report.add("generator product matches the closed form", point.X == displayed_matrix(point.t))
    report.add("Pf_I^2 equals its minor up to one scalar", minor_ratio(point) is not None)
    report.add("canonical coordinates positive, point not Lusztig nonnegative",
               point.all_positive() and not point.lusztig_nonneg,
               {"all_canonical_positive": point.all_positive(), "lusztig_nonneg": point.lusztig_nonneg})
    logger.info(f"pfaffian-demo: {report.summary()}")
    return report


def type_d_report(samples: int, seed: int) -> Report:
    """Closed form, antisymmetry and the minor identity at signed t; canonical positivity at positive t"""
    report = Report("type-d", D4.to_json_dict(), seed, samples)
    for index in range(samples):
        t = signed_rationals(make_rng(seed, index), len(WORD))
        point = typeD_pfaffian_point(t)
        tag = f"sample {index}"
        report.add(f"{tag}: generator product matches the closed form", point.X == displayed_matrix(t),
                   [str(v) for v in t])
        report.add(f"{tag}: E0 B is antisymmetric", point.E0B.is_antisymmetric())
        report.add(f"{tag}: Pf_I^2 equals its minor up to one scalar", minor_ratio(point) is not None)
        positive = typeD_pfaffian_point(positive_rationals(make_rng(seed, samples + index), len(WORD)))
        report.add(f"{tag}: positive t has positive canonical coordinates", positive.all_positive(),
                   [str(v) for v in positive.t])
    witness = typeD_pfaffian_point(WITNESS_T)
    report.add("witness: canonical coordinates positive, point not Lusztig nonnegative",
               witness.all_positive() and not witness.lusztig_nonneg, witness.to_json_dict())
    logger.info(f"type-d: {report.summary()}")
    return report
