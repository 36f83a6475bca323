"""
Subexpressions of reduced words and their distinguished forms

A subexpression keeps or skips each letter of its base word. Positions are
classified by the prefix products u_(k): J+ where the length goes up, J-
where it goes down, Jo where the letter is skipped.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from itertools import product
from typing import Dict, List, Tuple

from weyl.elements import WeylElement, WeylError
from weyl.words import Word, bruhat_leq, is_reduced, word_to_element

logger = logging.getLogger(__name__)

CLASSES = ("plus", "zero", "minus")


class NotBelowError(ValueError):
    """Raised when u is not below v in the Bruhat order"""
    pass


@dataclass(frozen=True)
class Subexpression:
    base: Word
    mask: Tuple[bool, ...]
    classification: Tuple[str, ...] = field(init=False, compare=False)

    def __post_init__(self):
        mask = tuple(bool(b) for b in self.mask)
        object.__setattr__(self, "mask", mask)
        if len(mask) != len(self.base):
            raise WeylError(f"Mask of length {len(mask)} on a word of length {len(self.base)}")
        object.__setattr__(self, "classification", _classify(self.base, mask))

    @classmethod
    def from_string(cls, base: Word, text: str) -> Subexpression:
        """'1' keeps, '0' skips: "10110" """
        if set(text) - {"0", "1"}:
            raise WeylError(f"Mask '{text}' must consist of 0 and 1")
        return cls(base, tuple(c == "1" for c in text))

    def prefix_products(self) -> List[WeylElement]:
        """u_(0), u_(1), ..., u_(p)"""
        x = WeylElement.identity(self.base.kind, self.base.degree)
        out = [x]
        for i, keep in zip(self.base.letters, self.mask):
            if keep:
                x = x * x.simple_of(i)
            out.append(x)
        return out

    def suffix_products(self) -> List[WeylElement]:
        """r_(0), ..., r_(p) with r_(j) the product of the kept letters after position j"""
        x = WeylElement.identity(self.base.kind, self.base.degree)
        out = [x]
        for i, keep in zip(reversed(self.base.letters), reversed(self.mask)):
            if keep:
                x = x.simple_of(i) * x
            out.append(x)
        return list(reversed(out))

    @property
    def element(self) -> WeylElement:
        return self.prefix_products()[-1]

    @property
    def kept_word(self) -> Word:
        return self.base.replace(i for i, keep in zip(self.base.letters, self.mask) if keep)

    def positions(self, cls_name: str) -> List[int]:
        """0-based positions in J+ ("plus"), Jo ("zero") or J- ("minus")"""
        return [k for k, c in enumerate(self.classification) if c == cls_name]

    def is_reduced(self) -> bool:
        return is_reduced(self.kept_word)

    def __str__(self) -> str:
        return " ".join(str(i) if keep else "1" for i, keep in zip(self.base.letters, self.mask))

    def to_json_dict(self) -> Dict:
        return {
            "system": self.base.system,
            "rank": self.base.rank,
            "base": list(self.base.letters),
            "mask": "".join("1" if b else "0" for b in self.mask),
            "classification": list(self.classification),
        }


def _classify(base: Word, mask: Tuple[bool, ...]) -> Tuple[str, ...]:
    x = WeylElement.identity(base.kind, base.degree)
    out = []
    for i, keep in zip(base.letters, mask):
        if not keep:
            out.append("zero")
            continue
        y = x * x.simple_of(i)
        out.append("plus" if y.length() > x.length() else "minus")
        x = y
    return tuple(out)


def distinguished_subexpression(u: WeylElement, v: Word, direction: str = "rightmost") -> Subexpression:
    """
    The unique reduced distinguished (rightmost) or reverse distinguished
    (leftmost) subexpression of v for u

    Raises:
        NotBelowError: u is not below the element of v
    """
    if direction not in ("rightmost", "leftmost"):
        raise WeylError(f"Invalid direction '{direction}'")
    if not is_reduced(v):
        raise WeylError(f"Base word {v} is not reduced")
    p = len(v)
    mask = [False] * p
    x = u
    order = range(p - 1, -1, -1) if direction == "rightmost" else range(p)
    for j in order:
        s = x.simple_of(v.letters[j])
        moved = x * s if direction == "rightmost" else s * x
        if moved.length() < x.length():
            mask[j] = True
            x = moved
    if not x.is_identity():
        raise NotBelowError(f"{u} is not below {word_to_element(v)} in the Bruhat order")
    return Subexpression(v, tuple(mask))


def check_distinguished(s: Subexpression) -> bool:
    """u_(j) <= u_(j-1) s_{i_j} at every position"""
    prefixes = s.prefix_products()
    for j, i in enumerate(s.base.letters, start=1):
        before = prefixes[j - 1]
        if not bruhat_leq(prefixes[j], before * before.simple_of(i)):
            return False
    return True


def check_reverse_distinguished(s: Subexpression) -> bool:
    """r_(j-1) <= s_{i_j} r_(j) at every position, on suffix products"""
    suffixes = s.suffix_products()
    for j, i in enumerate(s.base.letters, start=1):
        after = suffixes[j]
        if not bruhat_leq(suffixes[j - 1], after.simple_of(i) * after):
            return False
    return True


def all_subexpressions(v: Word, u: WeylElement = None) -> List[Subexpression]:
    """Oracle: every mask on v, optionally only those multiplying to u"""
    out = []
    for mask in product((False, True), repeat=len(v)):
        s = Subexpression(v, mask)
        if u is None or s.element == u:
            out.append(s)
    return out
