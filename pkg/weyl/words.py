"""
Words in the simple reflections, reducedness, Bruhat order and cosets
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from itertools import combinations
from typing import Dict, Iterable, List, Optional, Tuple

from config.settings import REDUCED_WORD_CAP
from weyl.elements import WeylElement, WeylError, element_from_letters

logger = logging.getLogger(__name__)

SYSTEMS = ("A", "B", "C")


class CapExceededError(RuntimeError):
    """Raised when an enumeration would produce more items than its cap"""
    pass


@dataclass(frozen=True)
class Word:
    """
    A sequence of simple-reflection indices

    A(r) has letters 1..r and acts on [r+1]; B(n) and C(n) have letters
    1..n and share the signed permutations of [n].
    """

    system: str
    rank: int
    letters: Tuple[int, ...]

    def __post_init__(self):
        letters = tuple(int(i) for i in self.letters)
        object.__setattr__(self, "letters", letters)
        if self.system not in SYSTEMS:
            raise WeylError(f"Invalid system '{self.system}'. Must be one of: {list(SYSTEMS)}")
        if self.rank < 1:
            raise WeylError(f"Rank must be positive, got {self.rank}")
        bad = [i for i in letters if not 1 <= i <= self.rank]
        if bad:
            raise WeylError(f"Letters {bad} are not simple roots of {self.system}({self.rank})")

    @classmethod
    def parse(cls, system: str, rank: int, text: str) -> Word:
        """Comma-separated integers; the empty string is the empty word"""
        try:
            letters = tuple(int(t) for t in text.split(",") if t.strip())
        except ValueError as e:
            raise WeylError(f"Cannot parse word '{text}': {e}")
        return cls(system, rank, letters)

    @property
    def kind(self) -> str:
        return "A" if self.system == "A" else "signed"

    @property
    def degree(self) -> int:
        """n of the permutation group the word lives in"""
        return self.rank + 1 if self.system == "A" else self.rank

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __str__(self) -> str:
        return ",".join(str(i) for i in self.letters)

    def replace(self, letters: Iterable[int]) -> Word:
        return Word(self.system, self.rank, tuple(letters))


def word_to_element(w: Word) -> WeylElement:
    """Product of the letters, left to right"""
    return element_from_letters(w.kind, w.degree, w.letters)


def length_and_inversions(w: WeylElement) -> int:
    return w.length()


def is_reduced(w: Word) -> bool:
    return len(w) == word_to_element(w).length()


def reduced_word(w: WeylElement, system: str) -> Word:
    """One reduced word, peeling off the largest right descent each time"""
    letters: List[int] = []
    current = w
    while not current.is_identity():
        i = max(current.right_descents())
        letters.append(i)
        current = current * current.simple_of(i)
    return Word(system, w.rank, tuple(reversed(letters)))


def reduced_words(w: WeylElement, system: str, cap: Optional[int] = None) -> List[Word]:
    """
    All reduced words of w by descent recursion: every reduced word ends in a
    right descent s, and the rest is a reduced word of w*s

    Raises:
        CapExceededError: more than cap words exist
    """
    cap = REDUCED_WORD_CAP if cap is None else cap
    memo: Dict[WeylElement, List[Tuple[int, ...]]] = {}

    def words(x: WeylElement) -> List[Tuple[int, ...]]:
        if x in memo:
            return memo[x]
        if x.is_identity():
            result = [()]
        else:
            result = []
            for i in x.right_descents():
                for prefix in words(x * x.simple_of(i)):
                    result.append(prefix + (i,))
                    if len(result) > cap:
                        raise CapExceededError(f"More than {cap} reduced words for {x}")
        memo[x] = result
        return result

    found = sorted(words(w))
    logger.debug(f"reduced_words({w}): {len(found)} words")
    return [Word(system, w.rank, letters) for letters in found]


def bruhat_leq(u: WeylElement, v: WeylElement) -> bool:
    """
    Right-to-left greedy subword test along a reduced word of v

    Walking the letters of v from the right, a letter is used exactly when
    it is a right descent of what is left of u.
    """
    if (u.kind, u.n) != (v.kind, v.n):
        raise WeylError(f"Kind mismatch: {u.kind}({u.n}) against {v.kind}({v.n})")
    if u.length() > v.length():
        return False
    x = u
    for i in reversed(reduced_word(v, "A" if v.kind == "A" else "C").letters):
        s = x.simple_of(i)
        if (x * s).length() < x.length():
            x = x * s
    return x.is_identity()


def bruhat_leq_exhaustive(u: WeylElement, v: WeylElement) -> bool:
    """Oracle: some subset of the letters of a reduced word of v multiplies to u"""
    word = reduced_word(v, "A" if v.kind == "A" else "C").letters
    for size in range(u.length(), len(word) + 1):
        for positions in combinations(range(len(word)), size):
            if element_from_letters(u.kind, u.n, [word[p] for p in positions]) == u:
                return True
    return False


def appendix_w0_word(system: str, n: int) -> Word:
    """
    s_n (s_{n-1} s_n) ... (s_1 ... s_n) (s_1)(s_2 s_1) ... (s_{n-1} ... s_1),
    a reduced word of length n^2 for the longest element of B(n) or C(n)
    """
    if system not in ("B", "C"):
        raise WeylError(f"No closed-form longest word for system '{system}'")
    letters: List[int] = []
    for k in range(n, 0, -1):
        letters.extend(range(k, n + 1))
    for k in range(1, n):
        letters.extend(range(k, 0, -1))
    return Word(system, n, tuple(letters))


def type_a_w0_word(rank: int) -> Word:
    """(1)(2 1)(3 2 1)...(r ... 1), reduced for the reversal permutation"""
    letters: List[int] = []
    for k in range(1, rank + 1):
        letters.extend(range(k, 0, -1))
    return Word("A", rank, tuple(letters))


def minimal_coset_rep(w: WeylElement, J: Iterable[int], side: str = "right") -> WeylElement:
    """
    Shortest element of w*W_J (side "right") or of W_J*w (side "left")

    Descents on the chosen side are stripped until none lies in J.
    """
    J = sorted(set(J))
    if side not in ("right", "left"):
        raise WeylError(f"Invalid coset side '{side}'")
    bad = [j for j in J if not 1 <= j <= w.rank]
    if bad:
        raise WeylError(f"Indices {bad} are not simple roots for rank {w.rank}")
    current = w
    while True:
        for j in J:
            s = current.simple_of(j)
            moved = current * s if side == "right" else s * current
            if moved.length() < current.length():
                current = moved
                break
        else:
            return current


def parabolic_complement(rank: int, K: Iterable[int]) -> List[int]:
    """J = [rank] minus K"""
    K = set(K)
    return [i for i in range(1, rank + 1) if i not in K]
