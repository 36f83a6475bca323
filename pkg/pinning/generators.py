"""
Generator matrices of the pinnings

Every generator is an edit of the identity. For A, C, D and the short
roots of B the 2x2 block of phi_i sits on one or two pairs of indices; the
last root of B is written out from its 3x3 displays. Parameters may be
QuadScalar or SymPoly (chi needs a numeric, nonzero parameter).
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Any, List, Optional, Sequence, Tuple

from algebra.matrix import ExactMatrix
from algebra.symbolic import SymPoly
from algebra.scalar import ONE, SQRT2, ZERO, QuadScalar
from pinning.groups import GroupDescriptor, PinningError

logger = logging.getLogger(__name__)

GENERATOR_KINDS = ("x", "y", "chi", "sdot", "sdot_inv", "x_sdot_inv")


def _param(value: Any):
    if isinstance(value, SymPoly):
        return value
    if isinstance(value, str):
        return QuadScalar.parse(value)
    return QuadScalar.coerce(value)


@dataclass(frozen=True)
class GeneratorSpec:
    kind: str
    index: int
    param: Optional[Any] = None

    def __post_init__(self):
        if self.kind not in GENERATOR_KINDS:
            raise PinningError(f"Invalid generator kind '{self.kind}'. Must be one of: {list(GENERATOR_KINDS)}")
        if self.kind in ("sdot", "sdot_inv"):
            if self.param is not None:
                raise PinningError(f"{self.kind} takes no parameter")
            return
        if self.param is None:
            raise PinningError(f"{self.kind} needs a parameter")
        object.__setattr__(self, "param", _param(self.param))
        if self.kind == "chi":
            if isinstance(self.param, SymPoly):
                raise PinningError("chi needs a numeric parameter")
            if self.param.is_zero():
                raise PinningError("chi needs a nonzero parameter")


def _check_index(g: GroupDescriptor, i: int) -> None:
    if not 1 <= i <= g.rank:
        raise PinningError(f"{g} has no simple root {i}")


def block_pairs(g: GroupDescriptor, i: int) -> Optional[List[Tuple[int, int]]]:
    """
    1-based index pairs (p, q) on which phi_i places its 2x2 block, or None
    for the last root of B
    """
    _check_index(g, i)
    n, N = g.n, g.ambient
    if g.system == "A":
        return [(i, i + 1)]
    if i < n:
        # 2n-i for Sp(2n) and SO(2n), 2n+1-i for SO(2n+1)
        return [(i, i + 1), (N - i, N - i + 1)]
    if g.system == "C":
        return [(n, n + 1)]
    if g.system == "D":
        return [(n - 1, n + 1), (n, n + 2)]
    return None


def phi(g: GroupDescriptor, i: int, a, b, c, d) -> ExactMatrix:
    """phi_i([[a, b], [c, d]]) for every root whose image is linear"""
    pairs = block_pairs(g, i)
    if pairs is None:
        raise PinningError(f"phi_{i} of {g} is not a block embedding")
    grid = [[ONE if r == s else ZERO for s in range(g.ambient)] for r in range(g.ambient)]
    for p, q in pairs:
        p, q = p - 1, q - 1
        grid[p][p], grid[p][q], grid[q][p], grid[q][q] = a, b, c, d
    return ExactMatrix(grid, n_cols=g.ambient)


def _b_last(g: GroupDescriptor, entries: dict) -> ExactMatrix:
    """Identity with the (n..n+2) block replaced, offsets relative to n"""
    n = g.n
    grid = [[ONE if r == s else ZERO for s in range(g.ambient)] for r in range(g.ambient)]
    for (dr, dc), value in entries.items():
        grid[n - 1 + dr][n - 1 + dc] = value
    return ExactMatrix(grid, n_cols=g.ambient)


def _is_b_last(g: GroupDescriptor, i: int) -> bool:
    _check_index(g, i)
    return g.system == "B" and i == g.n


def x_gen(g: GroupDescriptor, i: int, m) -> ExactMatrix:
    m = _param(m)
    if _is_b_last(g, i):
        return _b_last(g, {(0, 1): SQRT2 * m, (0, 2): m * m, (1, 2): SQRT2 * m})
    return phi(g, i, ONE, m, ZERO, ONE)


def y_gen(g: GroupDescriptor, i: int, m) -> ExactMatrix:
    m = _param(m)
    if _is_b_last(g, i):
        return _b_last(g, {(1, 0): SQRT2 * m, (2, 0): m * m, (2, 1): SQRT2 * m})
    return phi(g, i, ONE, ZERO, m, ONE)


def chi_gen(g: GroupDescriptor, i: int, t) -> ExactMatrix:
    t = GeneratorSpec("chi", i, t).param
    if _is_b_last(g, i):
        return _b_last(g, {(0, 0): t * t, (2, 2): (t * t).inverse()})
    return phi(g, i, t, ZERO, ZERO, t.inverse())


def sdot_gen(g: GroupDescriptor, i: int) -> ExactMatrix:
    """phi_i([[0, -1], [1, 0]]) = x_i(-1) y_i(1) x_i(-1)"""
    return x_gen(g, i, -1) @ y_gen(g, i, 1) @ x_gen(g, i, -1)


def sdot_inv_gen(g: GroupDescriptor, i: int) -> ExactMatrix:
    return x_gen(g, i, 1) @ y_gen(g, i, -1) @ x_gen(g, i, 1)


def generator(g: GroupDescriptor, spec: GeneratorSpec) -> ExactMatrix:
    if spec.kind == "x":
        return x_gen(g, spec.index, spec.param)
    if spec.kind == "y":
        return y_gen(g, spec.index, spec.param)
    if spec.kind == "chi":
        return chi_gen(g, spec.index, spec.param)
    if spec.kind == "sdot":
        return sdot_gen(g, spec.index)
    if spec.kind == "sdot_inv":
        return sdot_inv_gen(g, spec.index)
    return x_gen(g, spec.index, spec.param) @ sdot_inv_gen(g, spec.index)


def word_product(g: GroupDescriptor, letters: Sequence[int], kinds: Sequence[str], params: Sequence) -> ExactMatrix:
    """
    Left-to-right product of one generator per letter

    Args:
        letters: simple-root indices
        kinds: one GENERATOR_KINDS entry per letter
        params: one parameter per letter (None for sdot, sdot_inv)
    """
    letters = list(letters)
    if not (len(letters) == len(kinds) == len(params)):
        raise PinningError(
            f"word_product: {len(letters)} letters, {len(kinds)} kinds, {len(params)} params"
        )
    result = ExactMatrix.identity(g.ambient)
    for i, kind, param in zip(letters, kinds, params):
        result = result @ generator(g, GeneratorSpec(kind, i, param))
    return result


def y_word(g: GroupDescriptor, letters: Sequence[int], params: Sequence) -> ExactMatrix:
    letters = list(letters)
    return word_product(g, letters, ["y"] * len(letters), params)


def x_word(g: GroupDescriptor, letters: Sequence[int], params: Sequence) -> ExactMatrix:
    letters = list(letters)
    return word_product(g, letters, ["x"] * len(letters), params)


def chi_word(g: GroupDescriptor, params: Sequence) -> ExactMatrix:
    """chi_1(t_1) ... chi_n(t_n), a torus element"""
    return word_product(g, range(1, g.rank + 1), ["chi"] * g.rank, params)
