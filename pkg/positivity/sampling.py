"""
Seeded rational parameters

Every draw comes from a PCG64 generator keyed by (seed, index), so sample k
of a report does not depend on how many samples were drawn before it.
"""
from __future__ import annotations

import logging
from fractions import Fraction
from typing import List, Sequence

import numpy as np

from algebra.scalar import QuadScalar
from config.settings import PARAM_MAX
from pinning.groups import GroupDescriptor
from weyl.words import Word, appendix_w0_word, type_a_w0_word

logger = logging.getLogger(__name__)


class ParameterError(ValueError):
    """Raised for parameter vectors of the wrong length or with forbidden zeros"""
    pass


def make_rng(seed: int, index: int = 0) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence([seed, index])))


def positive_rationals(rng: np.random.Generator, count: int, param_max: int = None) -> List[QuadScalar]:
    """p/q with p, q uniform in [1, param_max]"""
    top = param_max or PARAM_MAX
    draws = rng.integers(1, top + 1, size=(count, 2))
    return [QuadScalar(Fraction(int(p), int(q))) for p, q in draws]


def signed_rationals(rng: np.random.Generator, count: int, param_max: int = None) -> List[QuadScalar]:
    """Positive draws with an independent fair sign flip each"""
    values = positive_rationals(rng, count, param_max)
    flips = rng.integers(0, 2, size=count)
    return [-v if flip else v for v, flip in zip(values, flips)]


def longest_word(g: GroupDescriptor) -> Word:
    """The closed-form reduced word for w0 used by every sampler"""
    if g.system == "A":
        return type_a_w0_word(g.n)
    if g.system in ("B", "C"):
        return appendix_w0_word(g.system, g.n)
    raise ParameterError(f"No Lusztig sampler for {g}")


def check_counts(name: str, values: Sequence, expected: int) -> None:
    if len(values) != expected:
        raise ParameterError(f"{name}: expected {expected} parameters, got {len(values)}")
