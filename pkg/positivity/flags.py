"""
Flags of group elements and their Plücker positivity
"""
from __future__ import annotations

import logging
from typing import Iterable, List, Tuple

from algebra.flags import Flag
from algebra.forms import is_isotropic, perp
from algebra.matrix import ExactMatrix
from algebra.plucker import dual_plucker_equal
from pinning.groups import GroupDescriptor, MembershipError, group_membership

logger = logging.getLogger(__name__)


def mirror_rank(g: GroupDescriptor, k: int) -> int:
    """N - k, the rank of L_k perp"""
    return g.ambient - k


def extended_ranks(g: GroupDescriptor, K: Iterable[int]) -> Tuple[int, ...]:
    K = set(K)
    if g.system == "A":
        return tuple(sorted(K))
    return tuple(sorted(K | {mirror_rank(g, k) for k in K}))


def _check_ranks(g: GroupDescriptor, K: Iterable[int]) -> List[int]:
    K = sorted(set(K))
    if not K or K[0] < 1 or K[-1] > g.rank:
        raise MembershipError(f"Ranks {K} are not a nonempty subset of [{g.rank}]")
    return K


def duality_problems(M: ExactMatrix, g: GroupDescriptor, ranks: Iterable[int]) -> List[str]:
    """
    Every rank k at which the leading columns fail L_(N-k) = L_k^perp or the
    Plücker vectors fail to match up to sign
    """
    problems = []
    for k in ranks:
        L = M.leading_columns(k)
        L_mirror = M.leading_columns(mirror_rank(g, k))
        if not perp(L, g.form).same_column_span(L_mirror):
            problems.append(f"rank {mirror_rank(g, k)} is not the perp of rank {k}")
            continue
        flag = Flag(g.ambient, (k, mirror_rank(g, k)), M) if k < mirror_rank(g, k) else None
        if flag is None:
            continue
        if not dual_plucker_equal(flag.plucker(k), flag.plucker(mirror_rank(g, k)), up_to_sign=True):
            problems.append(f"Plücker vectors of ranks {k} and {mirror_rank(g, k)} differ")
    return problems


def flag_from_group_element(M: ExactMatrix, g: GroupDescriptor, K: Iterable[int], extended: bool = False) -> Flag:
    """
    Leading-column flag of M at ranks K, with the mirror ranks N - K when
    extended

    Raises:
        MembershipError: M is not in the group, or an extended rank is not
            the perp of its partner
    """
    K = _check_ranks(g, K)
    if not group_membership(M, g):
        raise MembershipError(f"Matrix is not an element of {g}")
    if not extended:
        return Flag(g.ambient, tuple(K), M.leading_columns(K[-1]))
    if g.system == "A":
        raise MembershipError("Extended flags need a bilinear form")
    problems = duality_problems(M, g, K)
    if problems:
        raise MembershipError("; ".join(problems))
    ranks = extended_ranks(g, K)
    return Flag(g.ambient, ranks, M.leading_columns(ranks[-1]))


def standard_flag(g: GroupDescriptor, K: Iterable[int]) -> Flag:
    return flag_from_group_element(ExactMatrix.identity(g.ambient), g, K)


def positivity_problems(F: Flag, g: GroupDescriptor, strict: bool = True) -> List[str]:
    """
    Witnesses against Plücker positivity (strict) or nonnegativity, plus
    every non-isotropic subspace of rank at most n
    """
    problems = []
    for k in F.ranks:
        p = F.plucker(k)
        first = p.first_nonzero()
        if first is None:
            problems.append(f"rank {k}: all Plücker coordinates vanish")
            continue
        scale = p.coords[first].sign()
        for S in p.subsets():
            s = scale * p.coords[S].sign()
            if s < 0 or (strict and s == 0):
                problems.append(f"rank {k}: coordinate {S} has sign {s} after normalization")
                break
        if g.form is not None and k <= g.n and not is_isotropic(F.subspace(k), g.form):
            problems.append(f"rank {k}: subspace is not isotropic")
    return problems


def is_plucker_positive_flag(F: Flag, g: GroupDescriptor, strict: bool = True) -> bool:
    problems = positivity_problems(F, g, strict)
    for problem in problems:
        logger.debug(f"{g} flag at ranks {F.ranks}: {problem}")
    return not problems


def same_flag(F: ExactMatrix, G: ExactMatrix, ranks: Iterable[int]) -> bool:
    """Leading columns of the two matrices span the same subspaces at every rank"""
    return all(F.leading_columns(k).same_column_span(G.leading_columns(k)) for k in ranks)
