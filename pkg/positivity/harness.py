"""
Verification suites over seeded Lusztig-positive samples

Each suite returns a Report; sample k of a suite is drawn from the
generator keyed by (seed, k).
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Iterable, List, Optional, Tuple

from algebra.flags import Flag
from algebra.matrix import ExactMatrix
from algebra.plucker import is_totally_positive
from algebra.scalar import QuadScalar
from pinning.compatibility import compatibility_failures, ddagger2_failures
from pinning.generators import GENERATOR_KINDS, GeneratorSpec, chi_word, generator, word_product, x_word, y_word
from pinning.groups import GroupDescriptor, MembershipError, group_membership
from positivity.deodhar import distinct_points, fold_cell_containment_check, marsh_rietsch_point
from positivity.flags import (
    duality_problems,
    flag_from_group_element,
    positivity_problems,
    same_flag,
)
from positivity.reports import Report
from positivity.sampling import longest_word, make_rng, positive_rationals, signed_rationals
from weyl.elements import WeylElement, all_elements
from weyl.folding import every_block_keeps_small_letter, fold_leq_n, fold_subexpression, fold_word, same_first_entries
from weyl.subexpressions import (
    Subexpression,
    all_subexpressions,
    check_distinguished,
    distinguished_subexpression,
)
from weyl.words import Word, appendix_w0_word, is_reduced, reduced_word, reduced_words, word_to_element

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class PositiveSample:
    descriptor: GroupDescriptor
    ranks: Tuple[int, ...]
    params: Tuple[QuadScalar, ...]
    matrix: ExactMatrix
    flag: Flag
    seed: int
    index: int = 0


def lusztig_positive_sample(g: GroupDescriptor, K: Iterable[int], seed: int, index: int = 0,
                            word: Optional[Word] = None) -> PositiveSample:
    """y_w0(t) with positive rational t, projected to the flag at ranks K"""
    word = word or longest_word(g)
    params = tuple(positive_rationals(make_rng(seed, index), len(word)))
    M = y_word(g, word.letters, params)
    flag = flag_from_group_element(M, g, K)
    return PositiveSample(g, flag.ranks, params, M, flag, seed, index)


def positive_group_element(g: GroupDescriptor, seed: int, index: int = 0) -> ExactMatrix:
    """An element of U_-^{>0} T^{>0} U_+^{>0}"""
    word = longest_word(g)
    rng = make_rng(seed, index)
    lower = positive_rationals(rng, len(word))
    torus = positive_rationals(rng, g.rank)
    upper = positive_rationals(rng, len(word))
    return y_word(g, word.letters, lower) @ chi_word(g, torus) @ x_word(g, word.letters, upper)


def random_group_element(g: GroupDescriptor, seed: int, index: int = 0, length: Optional[int] = None) -> ExactMatrix:
    """Product of random generators with signed parameters"""
    rng = make_rng(seed, index)
    length = length or 3 * g.rank
    kinds = [("x", "y", "chi", "sdot")[int(k)] for k in rng.integers(0, 4, size=length)]
    letters = [int(i) for i in rng.integers(1, g.rank + 1, size=length)]
    values = signed_rationals(rng, length)
    params = [None if kind == "sdot" else value for kind, value in zip(kinds, values)]
    return word_product(g, letters, kinds, params)


# ============================================================================
# FLAG-LEVEL SUITES
# ============================================================================

def theorem_forward_report(g: GroupDescriptor, K: Iterable[int], samples: int, seed: int,
                           extended: bool = True, total_positivity: bool = False) -> Report:
    """
    Lusztig positive implies Plücker positive: every sample is strictly
    positive and isotropic at ranks K, and (for B and C) the mirror ranks
    are perps with matching Plücker vectors
    """
    K = sorted(set(K))
    report = Report("theorem", {**g.to_json_dict(), "K": K}, seed, samples)
    for index in range(samples):
        sample = lusztig_positive_sample(g, K, seed, index)
        problems = positivity_problems(sample.flag, g, strict=True)
        report.add(f"sample {index}: strictly Plücker positive", not problems, problems or None)
        if extended and g.form is not None:
            dual = duality_problems(sample.matrix, g, K)
            report.add(f"sample {index}: extended flag duality", not dual, dual or None)
        if total_positivity:
            element = positive_group_element(g, seed, index)
            report.add(f"sample {index}: totally positive in GL", is_totally_positive(element))
    logger.info(f"theorem {g} K={K}: {report.summary()}")
    return report


def word_independence_report(g: GroupDescriptor, K: Iterable[int], samples: int, seed: int) -> Report:
    """Samples along a second reduced word of w0 are positive as well"""
    K = sorted(set(K))
    word = longest_word(g)
    other = reduced_word(WeylElement.longest(word.kind, word.degree), word.system)
    report = Report("word-independence", {**g.to_json_dict(), "K": K}, seed, samples)
    if other.letters == word.letters:
        report.add("second reduced word differs from the first", False, str(other))
        return report
    for index in range(samples):
        sample = lusztig_positive_sample(g, K, seed, index, word=other)
        problems = positivity_problems(sample.flag, g, strict=True)
        report.add(f"sample {index} along {other}: strictly Plücker positive", not problems, problems or None)
    return report


def duality_report(g: GroupDescriptor, samples: int, seed: int) -> Report:
    """L_(N-i) = L_i^perp with Plücker equality up to sign, on random group elements"""
    report = Report("duality", g.to_json_dict(), seed, samples)
    ranks = list(range(1, g.n + 1))
    for index in range(samples):
        M = random_group_element(g, seed, index)
        problems = duality_problems(M, g, ranks)
        report.add(f"element {index}: leading flags are dual", not problems, problems or None)
    logger.info(f"duality {g}: {report.summary()}")
    return report


def boundary_curve_sample(g: GroupDescriptor, F: Flag, t) -> Flag:
    """
    The flag of A(t) M with A(t) = y_w0(t, ..., t) chi(1, ..., 1) x_w0(t, ..., t);
    for t > 0 and F nonnegative the result is strictly positive

    Raises:
        MembershipError: F is not a Plücker nonnegative isotropic flag of g
    """
    problems = positivity_problems(F, g, strict=False)
    if problems:
        raise MembershipError(f"boundary curve needs a nonnegative flag of {g}: " + "; ".join(problems))
    t = QuadScalar.coerce(t)
    word = longest_word(g)
    ts = [t] * len(word)
    A = y_word(g, word.letters, ts) @ chi_word(g, [1] * g.rank) @ x_word(g, word.letters, ts)
    return Flag(F.ambient, F.ranks, A @ F.basis)


# ============================================================================
# DEODHAR CELLS
# ============================================================================

def mr_consistency_report(g: GroupDescriptor, samples: int, seed: int) -> Report:
    """
    Every distinguished subexpression of the closed-form w0 word folds into
    its type-A cell; the top cell matches y-word flags and is injective
    """
    word = appendix_w0_word(g.system, g.n)
    report = Report("deodhar", g.to_json_dict(), seed, samples)
    for sub in all_subexpressions(word):
        if not check_distinguished(sub):
            continue
        ok = fold_cell_containment_check(g, sub, min(samples, 10), seed)
        report.add(f"cell {sub.to_json_dict()['mask']} folds into its type-A cell", ok)

    top = Subexpression(word, (False,) * len(word))
    for index in range(samples):
        rng = make_rng(seed, index)
        t1 = positive_rationals(rng, len(word))
        t2 = positive_rationals(rng, len(word))
        p1 = marsh_rietsch_point(top, [], t1, g)
        agrees = same_flag(p1.matrix, y_word(g, word.letters, t1), range(1, g.ambient))
        report.add(f"pair {index}: top cell is the y-word flag", agrees)
        if t1 != t2:
            p2 = marsh_rietsch_point(top, [], t2, g)
            report.add(f"pair {index}: distinct parameters give distinct flags", distinct_points(p1, p2))
    logger.info(f"deodhar {g}: {report.summary()}")
    return report


# ============================================================================
# WEYL GROUP PROPERTIES
# ============================================================================

def _spot_elements(n: int) -> List[WeylElement]:
    word = appendix_w0_word("C", n)
    out, seen = [], set()
    for p in range(len(word) + 1):
        prefix = Subexpression(word, (True,) * p + (False,) * (len(word) - p)).element
        for u in (prefix, prefix.inverse()):
            if u not in seen:
                seen.add(u)
                out.append(u)
    return out


def distinguished_report(system: str, n: int, exhaustive: bool = False) -> Report:
    """
    Distinguished subexpressions of the closed-form w0 word: existence,
    uniqueness, stability under folding, and the parabolic statements for
    every K = {k, ..., n}
    """
    word = appendix_w0_word(system, n)
    report = Report("weyl-distinguished", {"system": system, "n": n, "exhaustive": exhaustive})
    elements = all_elements("signed", n) if exhaustive else _spot_elements(n)
    for u in elements:
        sub = distinguished_subexpression(u, word)
        report.add(f"u = {u}: distinguished subexpression", check_distinguished(sub), str(sub))
        report.add(f"u = {u}: folds to a distinguished subexpression",
                   check_distinguished(fold_subexpression(sub)))
        if exhaustive:
            found = [s for s in all_subexpressions(word, u) if s.is_reduced() and check_distinguished(s)]
            report.add(f"u = {u}: unique", found == [sub], [str(s) for s in found])
    if exhaustive:
        for sub in all_subexpressions(word):
            if check_distinguished(sub) and not check_distinguished(fold_subexpression(sub)):
                report.add(f"mask {sub}: folds to a distinguished subexpression", False)
    for k in range(1, n + 1):
        K = list(range(k, n + 1))
        report.add(f"K = {K}: same first entries", same_first_entries(system, n, K))
        report.add(f"K = {K}: every block keeps a small letter", every_block_keeps_small_letter(system, n, K))
    logger.info(f"weyl {system}({n}): {report.summary()}")
    return report


# ============================================================================
# PINNINGS AND FOLDING
# ============================================================================

def pinning_report(g: GroupDescriptor, samples: int, seed: int) -> Report:
    """
    Every generator preserves the form and has determinant 1 at seeded
    signed parameters; for B and C the folding identities and the x sdot^-1
    factorization hold as well
    """
    report = Report("verify-pinning", g.to_json_dict(), seed, samples)
    for i in range(1, g.rank + 1):
        for kind in GENERATOR_KINDS:
            if kind in ("sdot", "sdot_inv"):
                specs = [GeneratorSpec(kind, i)]
            else:
                values = signed_rationals(make_rng(seed, i), samples)
                specs = [GeneratorSpec(kind, i, v) for v in values]
            bad = [str(spec.param) for spec in specs if not group_membership(generator(g, spec), g)]
            report.add(f"{kind}_{i}: group member", not bad, bad or None)
        if g.system in ("B", "C"):
            failures = compatibility_failures(g, i)
            report.add(f"root {i}: generators fold to the standard pinning", not failures, failures or None)
            failures = ddagger2_failures(g, i)
            report.add(f"root {i}: x sdot^-1 factors along the folded block", not failures, failures or None)
    logger.info(f"verify-pinning {g}: {report.summary()}")
    return report


def fold_report(word: Word) -> Report:
    """The folded word and its reducedness, next to the word's own"""
    folded = fold_word(word)
    report = Report("fold", {
        "system": word.system,
        "n": word.rank,
        "word": list(word.letters),
        "psi": list(folded.letters),
        "psi_leq_n": list(fold_leq_n(word).letters),
    })
    reduced = is_reduced(word)
    report.add("word is reduced", reduced)
    report.add("folded word reduced iff the word is", is_reduced(folded) == reduced)
    longest = word_to_element(word) == WeylElement.longest(word.kind, word.degree)
    folded_longest = word_to_element(folded) == WeylElement.longest(folded.kind, folded.degree)
    report.descriptor.update({"is_w0": longest, "psi_is_w0A": folded_longest})
    if longest and reduced:
        report.add("a reduced word of w0 folds to a reduced word of w0 in type A", folded_longest and is_reduced(folded))
    return report


def longest_word_folding_report(system: str, n: int) -> Report:
    """Every reduced word of w0 folds to a reduced word of the type-A w0"""
    w0 = WeylElement.longest("signed", n)
    words = reduced_words(w0, system)
    report = Report("fold-w0", {"system": system, "n": n, "reduced_words": len(words)})
    for word in words:
        folded = fold_word(word)
        ok = is_reduced(folded) and word_to_element(folded) == WeylElement.longest("A", folded.degree)
        report.add(f"{word} folds to a reduced word of w0", ok, len(folded))
    logger.info(f"fold-w0 {system}({n}): {report.summary()}")
    return report
