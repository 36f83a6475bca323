"""
Deodhar cells through the Marsh-Rietsch factorization

Along a distinguished subexpression each position contributes one factor:
x_i(m) sdot_i^-1 where the running product goes down, y_i(t) where the
letter is skipped, sdot_i where it goes up.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import List, Sequence, Tuple

from algebra.matrix import ExactMatrix
from algebra.scalar import QuadScalar
from pinning.compatibility import fold_identity
from pinning.generators import word_product
from pinning.groups import GroupDescriptor
from positivity.flags import same_flag
from positivity.sampling import ParameterError, check_counts, make_rng, positive_rationals, signed_rationals
from weyl.folding import fold_subexpression
from weyl.subexpressions import Subexpression, check_distinguished

logger = logging.getLogger(__name__)

FACTOR_KINDS = {"minus": "x_sdot_inv", "zero": "y", "plus": "sdot"}


@dataclass(frozen=True)
class MRPoint:
    subexpr: Subexpression
    m_params: Tuple[QuadScalar, ...]
    t_params: Tuple[QuadScalar, ...]
    matrix: ExactMatrix

    def complete_flag_ranks(self) -> range:
        return range(1, self.matrix.n_rows)

    def same_complete_flag(self, other: ExactMatrix) -> bool:
        return same_flag(self.matrix, other, self.complete_flag_ranks())


def factor_sequence(subexpr: Subexpression, m: Sequence, t: Sequence) -> Tuple[List[str], List]:
    """Generator kinds and parameters, one per position of the base word"""
    m_iter, t_iter = iter(m), iter(t)
    kinds, params = [], []
    for cls_name in subexpr.classification:
        kinds.append(FACTOR_KINDS[cls_name])
        if cls_name == "minus":
            params.append(next(m_iter))
        elif cls_name == "zero":
            params.append(next(t_iter))
        else:
            params.append(None)
    return kinds, params


def marsh_rietsch_point(subexpr: Subexpression, m: Sequence, t: Sequence, g: GroupDescriptor) -> MRPoint:
    """
    g_1 ... g_p for the subexpression, the matrix whose flag is p_{u,v}(m, t)

    Raises:
        ParameterError: parameter counts do not match the minus and zero
            positions, or some t is zero
    """
    m = tuple(QuadScalar.coerce(x) for x in m)
    t = tuple(QuadScalar.coerce(x) for x in t)
    check_counts("m", m, len(subexpr.positions("minus")))
    check_counts("t", t, len(subexpr.positions("zero")))
    if any(x.is_zero() for x in t):
        raise ParameterError("Deodhar parameters t must be nonzero")
    kinds, params = factor_sequence(subexpr, m, t)
    matrix = word_product(g, subexpr.base.letters, kinds, params)
    return MRPoint(subexpr, m, t, matrix)


def folded_factorization(subexpr: Subexpression, m: Sequence, t: Sequence, g: GroupDescriptor) -> ExactMatrix:
    """
    The same point computed in the ambient GL: the folded subexpression with
    each parameter pushed through the coordinate maps of its block
    """
    folded = fold_subexpression(subexpr)
    m_iter, t_iter = iter(m), iter(t)
    a_params: List = []
    for i, cls_name in zip(subexpr.base.letters, subexpr.classification):
        if cls_name == "plus":
            a_params.extend([None] * len(fold_identity(g, i, "y").target_letters))
            continue
        if cls_name == "minus":
            identity, value = fold_identity(g, i, "x_sdot_inv"), next(m_iter)
        else:
            identity, value = fold_identity(g, i, "y"), next(t_iter)
        a_params.extend(f(QuadScalar.coerce(value)) for f in identity.coordinate_maps)
    kinds = [FACTOR_KINDS[c] for c in folded.classification]
    for kind, param in zip(kinds, a_params):
        if (kind == "sdot") != (param is None):
            raise ParameterError(f"Folded classification {folded.classification} does not match the blocks")
    return word_product(g.type_a, folded.base.letters, kinds, a_params)


def fold_cell_containment_check(g: GroupDescriptor, subexpr: Subexpression, samples: int, seed: int) -> bool:
    """
    Sampled points of the cell for subexpr land in the type-A cell of its
    folding: both factorizations give the same complete flag
    """
    if not check_distinguished(subexpr):
        logger.warning(f"{subexpr} is not distinguished")
        return False
    n_minus, n_zero = len(subexpr.positions("minus")), len(subexpr.positions("zero"))
    for index in range(samples):
        rng = make_rng(seed, index)
        m = signed_rationals(rng, n_minus)
        t = positive_rationals(rng, n_zero)
        point = marsh_rietsch_point(subexpr, m, t, g)
        try:
            ambient = folded_factorization(subexpr, m, t, g)
        except ParameterError as e:
            logger.warning(f"{g} {subexpr}: {e}")
            return False
        if not point.same_complete_flag(ambient):
            logger.warning(f"{g} {subexpr}: sample {index} leaves the folded cell")
            return False
    logger.info(f"{g} {subexpr}: {samples} samples inside the folded cell")
    return True


def distinct_points(first: MRPoint, second: MRPoint) -> bool:
    return not first.same_complete_flag(second.matrix)
