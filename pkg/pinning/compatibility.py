"""
Compatibility of the B and C pinnings with the standard pinning of the
ambient GL

Every generator of Sp(2n) or SO(2n+1) is a product of type-A generators
along psi(i), with parameters pushed through simple closed-form maps.
Identities are polynomial of degree at most 2 in the parameter, so checking
them at three or more distinct points proves them.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Iterable, List, Tuple

from algebra.scalar import SQRT2, QuadScalar
from pinning.generators import GeneratorSpec, generator, word_product
from pinning.groups import GroupDescriptor, PinningError
from weyl.folding import fold_letter

logger = logging.getLogger(__name__)

CHECK_PARAMS = ("1", "1/2", "-3", "7/5")

MAP_NAMES = ("identity", "scale", "square", "square_negate")


@dataclass(frozen=True)
class CoordinateMap:
    """One f_j: m -> m, c*m, m^2 or -m^2"""

    name: str
    factor: QuadScalar = QuadScalar(1)

    def __post_init__(self):
        if self.name not in MAP_NAMES:
            raise PinningError(f"Invalid coordinate map '{self.name}'. Must be one of: {list(MAP_NAMES)}")

    def __call__(self, m):
        if self.name == "identity":
            return m
        if self.name == "scale":
            return self.factor * m
        if self.name == "square":
            return m * m
        return -(m * m)

    @property
    def preserves_positivity(self) -> bool:
        if self.name == "scale":
            return self.factor.sign() > 0
        return self.name in ("identity", "square")

    def fixes_zero(self) -> bool:
        return self(QuadScalar(0)).is_zero()

    def __str__(self) -> str:
        if self.name == "scale":
            return f"m -> ({self.factor})*m"
        return {"identity": "m -> m", "square": "m -> m^2", "square_negate": "m -> -m^2"}[self.name]


IDENTITY = CoordinateMap("identity")
HALF_SQRT2 = CoordinateMap("scale", SQRT2 / 2)  # m / sqrt 2
TIMES_SQRT2 = CoordinateMap("scale", SQRT2)


@dataclass(frozen=True)
class FoldIdentity:
    """
    generator^Phi_i(m) = prod_j generator^A_{psi(i)_j}(f_j(m))

    kind is "x", "y" or "x_sdot_inv"; the last one carries the square-negate
    map on the middle letter of the long B block.
    """

    system: str
    n: int
    index: int
    kind: str
    target_letters: Tuple[int, ...]
    coordinate_maps: Tuple[CoordinateMap, ...]

    def sides(self, m) -> Tuple:
        g = GroupDescriptor(self.system, self.n)
        spec = GeneratorSpec(self.kind, self.index, m)
        lhs = generator(g, spec)
        rhs = word_product(
            g.type_a,
            self.target_letters,
            [self.kind] * len(self.target_letters),
            [f(spec.param) for f in self.coordinate_maps],
        )
        return lhs, rhs

    def holds_at(self, m) -> bool:
        lhs, rhs = self.sides(m)
        return lhs == rhs

    def describe(self) -> str:
        maps = ", ".join(str(f) for f in self.coordinate_maps)
        return f"{self.kind}_{self.index}^{self.system} along {self.target_letters} with [{maps}]"


def fold_identity(g: GroupDescriptor, i: int, kind: str) -> FoldIdentity:
    if g.system not in ("B", "C"):
        raise PinningError(f"No folding identities for {g}")
    if kind not in ("x", "y", "x_sdot_inv"):
        raise PinningError(f"No folding identity for generator kind '{kind}'")
    letters = fold_letter(g.system, g.n, i)
    if g.system == "B" and i == g.n:
        if kind == "x_sdot_inv":
            maps = (TIMES_SQRT2, CoordinateMap("square_negate"), TIMES_SQRT2)
        else:
            maps = (HALF_SQRT2, TIMES_SQRT2, HALF_SQRT2)
    else:
        maps = (IDENTITY,) * len(letters)
    return FoldIdentity(g.system, g.n, i, kind, letters, maps)


def _chi_sides(g: GroupDescriptor, i: int, t) -> Tuple:
    A = g.type_a
    lhs = generator(g, GeneratorSpec("chi", i, t))
    t = GeneratorSpec("chi", i, t).param
    if g.system == "B" and i == g.n:
        rhs = word_product(A, [g.n, g.n + 1], ["chi", "chi"], [t * t, t * t])
    else:
        letters = fold_letter(g.system, g.n, i)
        rhs = word_product(A, letters, ["chi"] * len(letters), [t] * len(letters))
    return lhs, rhs


def _sdot_sides(g: GroupDescriptor, i: int) -> Tuple:
    letters = fold_letter(g.system, g.n, i)
    lhs = generator(g, GeneratorSpec("sdot", i))
    rhs = word_product(g.type_a, letters, ["sdot"] * len(letters), [None] * len(letters))
    return lhs, rhs


def compatibility_failures(g: GroupDescriptor, i: int, params: Iterable = CHECK_PARAMS) -> List[str]:
    """Every identity of the generator comparison that fails, with its parameter"""
    failures = []
    params = list(params)
    for kind in ("y", "x"):
        identity = fold_identity(g, i, kind)
        for m in params:
            if not identity.holds_at(m):
                failures.append(f"{identity.describe()} at m = {m}")
    for t in params:
        lhs, rhs = _chi_sides(g, i, t)
        if lhs != rhs:
            failures.append(f"chi_{i}^{g.system} at t = {t}")
    lhs, rhs = _sdot_sides(g, i)
    if lhs != rhs:
        failures.append(f"sdot_{i}^{g.system}")
    return failures


def verify_compatibility(g: GroupDescriptor, i: int, params: Iterable = CHECK_PARAMS) -> bool:
    failures = compatibility_failures(g, i, params)
    for failure in failures:
        logger.warning(f"Compatibility identity fails: {failure}")
    return not failures


def ddagger2_failures(g: GroupDescriptor, i: int, params: Iterable = CHECK_PARAMS) -> List[str]:
    failures = []
    identity = fold_identity(g, i, "x_sdot_inv")
    A = g.type_a
    for m in list(params):
        if not identity.holds_at(m):
            failures.append(f"{identity.describe()} at m = {m}")
        letters = identity.target_letters
        if i < g.n:
            first = generator(A, GeneratorSpec("x_sdot_inv", letters[0], m))
            second = generator(A, GeneratorSpec("x_sdot_inv", letters[1], m))
            if first @ second != second @ first:
                failures.append(f"factors along {letters} do not commute at m = {m}")
    return failures


def verify_ddagger2(g: GroupDescriptor, i: int, params: Iterable = CHECK_PARAMS) -> bool:
    """x_i(m) sdot_i^-1 factors along psi(i), with (sqrt2 m, -m^2, sqrt2 m) on the long B block"""
    failures = ddagger2_failures(g, i, params)
    for failure in failures:
        logger.warning(f"Factorization fails: {failure}")
    return not failures
