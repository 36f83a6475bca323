"""
Exact Fourier-Motzkin elimination over QuadScalar

A row (coeffs, const) stands for coeffs . x + const >= 0. Rows are scaled so
their first nonzero coefficient has absolute value 1, which makes duplicates
exact matches.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Iterable, List, Optional, Sequence, Tuple

from algebra.scalar import QuadScalar, ZERO

logger = logging.getLogger(__name__)


class FMECapError(RuntimeError):
    """Raised when an elimination step would exceed the row cap"""
    pass


@dataclass(frozen=True)
class Inequality:
    coeffs: Tuple[QuadScalar, ...]
    const: QuadScalar = ZERO

    @classmethod
    def of(cls, coeffs: Sequence, const=0) -> Inequality:
        return cls(tuple(QuadScalar.coerce(c) for c in coeffs), QuadScalar.coerce(const))

    def is_trivial(self) -> bool:
        return all(c.is_zero() for c in self.coeffs)

    def is_contradiction(self) -> bool:
        """0 >= -const with const < 0"""
        return self.is_trivial() and self.const.sign() < 0

    def normalized(self) -> Inequality:
        for c in self.coeffs:
            if not c.is_zero():
                inv = (c if c.sign() > 0 else -c).inverse()
                return Inequality(tuple(a * inv for a in self.coeffs), self.const * inv)
        return self

    def combine(self, other: Inequality, col: int) -> Inequality:
        """Positive combination of a row with positive and a row with negative coefficient at col"""
        p, q = self.coeffs[col], -other.coeffs[col]
        coeffs = tuple(q * a + p * b for a, b in zip(self.coeffs, other.coeffs))
        return Inequality(coeffs, q * self.const + p * other.const).normalized()


def _dedupe(rows: Iterable[Inequality]) -> List[Inequality]:
    seen, out = set(), []
    for row in rows:
        row = row.normalized()
        if row.is_trivial() and not row.is_contradiction():
            continue
        if row not in seen:
            seen.add(row)
            out.append(row)
    return out


def split_on(rows: Sequence[Inequality], col: int) -> Tuple[List[Inequality], List[Inequality], List[Inequality]]:
    """Rows with zero, positive and negative coefficient at col"""
    z, p, n = [], [], []
    for row in rows:
        s = row.coeffs[col].sign()
        (z if s == 0 else p if s > 0 else n).append(row)
    return z, p, n


def pick_column(rows: Sequence[Inequality], columns: Iterable[int]) -> Optional[int]:
    """The live column with the fewest new rows, p*n - (p+n)"""
    best, best_cost = None, None
    for col in columns:
        _, p, n = split_on(rows, col)
        if not p and not n:
            continue
        cost = len(p) * len(n) - len(p) - len(n)
        if best_cost is None or cost < best_cost:
            best, best_cost = col, cost
    return best


def eliminate(rows: Sequence[Inequality], col: int, row_cap: int) -> List[Inequality]:
    z, p, n = split_on(rows, col)
    if len(z) + len(p) * len(n) > row_cap:
        raise FMECapError(f"Eliminating column {col} gives {len(z) + len(p) * len(n)} rows (cap {row_cap})")
    logger.debug(f"  col {col}: z={len(z)}, p+n={len(p) + len(n)}, p*n={len(p) * len(n)}")
    return _dedupe(z + [a.combine(b, col) for a in p for b in n])


def eliminate_all(rows: Sequence[Inequality], row_cap: int) -> List[Inequality]:
    """Project out every column; what is left are constant rows"""
    rows = _dedupe(rows)
    if not rows:
        return []
    live = set(range(len(rows[0].coeffs)))
    while True:
        if any(r.is_contradiction() for r in rows):
            return rows
        col = pick_column(rows, sorted(live))
        if col is None:
            return rows
        live.discard(col)
        rows = eliminate(rows, col, row_cap)


def is_infeasible(rows: Sequence[Inequality], row_cap: int) -> bool:
    """
    True iff the system has no real solution

    Raises:
        FMECapError: an elimination step exceeds row_cap
    """
    return any(r.is_contradiction() for r in eliminate_all(rows, row_cap))
