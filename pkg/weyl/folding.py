"""
Folding words of B(n) and C(n) into type A

psi(i) = (i, 2n-i) for i < n and psi(n) = (n) in type C;
psi(i) = (i, 2n+1-i) for i < n and psi(n) = (n, n+1, n) in type B.
"""
from __future__ import annotations

import logging
from typing import Iterable, List, Tuple

from weyl.elements import WeylElement, WeylError
from weyl.subexpressions import Subexpression, distinguished_subexpression
from weyl.words import (
    Word,
    appendix_w0_word,
    minimal_coset_rep,
    parabolic_complement,
)

logger = logging.getLogger(__name__)


def ambient_dimension(system: str, n: int) -> int:
    if system == "C":
        return 2 * n
    if system == "B":
        return 2 * n + 1
    raise WeylError(f"No folding for system '{system}'")


def fold_letter(system: str, n: int, i: int) -> Tuple[int, ...]:
    if system == "C":
        return (i, 2 * n - i) if i < n else (n,)
    if system == "B":
        return (i, 2 * n + 1 - i) if i < n else (n, n + 1, n)
    raise WeylError(f"No folding for system '{system}'")


def fold_blocks(w: Word) -> List[Tuple[int, ...]]:
    return [fold_letter(w.system, w.rank, i) for i in w.letters]


def fold_word(w: Word) -> Word:
    N = ambient_dimension(w.system, w.rank)
    return Word("A", N - 1, tuple(j for block in fold_blocks(w) for j in block))


def fold_subexpression(s: Subexpression) -> Subexpression:
    """Each kept letter keeps its whole block, each skipped letter skips it"""
    mask = [keep for block, keep in zip(fold_blocks(s.base), s.mask) for _ in block]
    return Subexpression(fold_word(s.base), tuple(mask))


def fold_leq_n(w: Word) -> Word:
    """The first component of every block, the one with index at most n"""
    N = ambient_dimension(w.system, w.rank)
    return Word("A", N - 1, tuple(block[0] for block in fold_blocks(w)))


def block_spans(w: Word) -> List[range]:
    """Positions of each block inside fold_word(w)"""
    spans, start = [], 0
    for block in fold_blocks(w):
        spans.append(range(start, start + len(block)))
        start += len(block)
    return spans


def fold_element(w: WeylElement, system: str) -> WeylElement:
    """The ambient permutation of a signed element (centre fixed for B)"""
    return w.to_ambient(odd=(system == "B"))


# ============================================================================
# PARABOLIC STATEMENTS FOR K = {k, ..., n}
# ============================================================================

def _check_tail(n: int, K: Iterable[int]) -> List[int]:
    K = sorted(set(K))
    if not K or K != list(range(K[0], n + 1)):
        raise WeylError(f"K = {K} is not of the form {{k, ..., {n}}}")
    return K


def longest_coset_word(system: str, n: int, K: Iterable[int]) -> Word:
    """
    Reduced word for w0^J (J = [n] minus K): the leftmost subexpression of
    the closed-form longest word for the coset representative
    """
    K = _check_tail(n, K)
    J = parabolic_complement(n, K)
    w0 = WeylElement.longest("signed", n)
    target = minimal_coset_rep(w0, J, side="right")
    sub = distinguished_subexpression(target, appendix_w0_word(system, n), "leftmost")
    return sub.kept_word


def same_first_entries(system: str, n: int, K: Iterable[int]) -> bool:
    """
    The ambient one-line arrays of w0^J and of the type-A representative for
    J' = [N-1] minus K agree on 1..n, cosets W_J*w
    """
    K = _check_tail(n, K)
    N = ambient_dimension(system, n)
    J = parabolic_complement(n, K)
    J_prime = parabolic_complement(N - 1, K)
    folded = fold_element(minimal_coset_rep(WeylElement.longest("signed", n), J, side="left"), system)
    ambient = minimal_coset_rep(WeylElement.longest("A", N), J_prime, side="left")
    logger.debug(f"same_first_entries {system}({n}) K={K}: {folded} vs {ambient}")
    return folded.images[:n] == ambient.images[:n]


def keeps_small_transpositions(system: str, n: int, K: Iterable[int]) -> Subexpression:
    """
    Leftmost subexpression of psi(w0^J) for the shortest element of
    w0^A * W_J', J' = [N-1] minus K
    """
    K = _check_tail(n, K)
    N = ambient_dimension(system, n)
    word = longest_coset_word(system, n, K)
    J_prime = parabolic_complement(N - 1, K)
    target = minimal_coset_rep(WeylElement.longest("A", N), J_prime, side="right")
    return distinguished_subexpression(target, fold_word(word), "leftmost")


def every_block_keeps_small_letter(system: str, n: int, K: Iterable[int]) -> bool:
    """
    Every block of psi(w0^J) keeps a letter of index at most n in the
    leftmost subexpression; in type C this says the subexpression contains
    fold_leq_n(w0^J)
    """
    K = _check_tail(n, K)
    sub = keeps_small_transpositions(system, n, K)
    word = longest_coset_word(system, n, K)
    for span in block_spans(word):
        if not any(sub.mask[p] and sub.base.letters[p] <= n for p in span):
            return False
    return True
