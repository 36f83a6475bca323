"""
Weyl groups of types A, B and C as (signed) permutations
"""
from weyl.elements import WeylElement, WeylError, bfs_lengths, cayley_graph
from weyl.words import (
    CapExceededError,
    Word,
    appendix_w0_word,
    bruhat_leq,
    is_reduced,
    length_and_inversions,
    minimal_coset_rep,
    reduced_words,
    word_to_element,
)
from weyl.subexpressions import (
    NotBelowError,
    Subexpression,
    check_distinguished,
    check_reverse_distinguished,
    distinguished_subexpression,
)
from weyl.folding import fold_leq_n, fold_subexpression, fold_word

__all__ = [
    "WeylElement",
    "WeylError",
    "CapExceededError",
    "NotBelowError",
    "Word",
    "Subexpression",
    "appendix_w0_word",
    "bfs_lengths",
    "bruhat_leq",
    "cayley_graph",
    "check_distinguished",
    "check_reverse_distinguished",
    "distinguished_subexpression",
    "fold_leq_n",
    "fold_subexpression",
    "fold_word",
    "is_reduced",
    "length_and_inversions",
    "minimal_coset_rep",
    "reduced_words",
    "word_to_element",
]
