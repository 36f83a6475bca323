"""
Partial flags as column spans

A Flag keeps one basis matrix; the subspace of rank k is the span of its
first k columns.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import List, Tuple

from algebra.matrix import DimensionMismatchError, ExactMatrix
from algebra.plucker import PluckerVector, plucker_vector

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Flag:
    ambient: int
    ranks: Tuple[int, ...]
    basis: ExactMatrix

    def __post_init__(self):
        ranks = tuple(self.ranks)
        object.__setattr__(self, "ranks", ranks)
        if list(ranks) != sorted(set(ranks)):
            raise ValueError(f"Flag ranks must be strictly increasing, got {ranks}")
        if ranks and (ranks[0] < 1 or ranks[-1] > self.ambient):
            raise ValueError(f"Flag ranks {ranks} out of range for ambient dimension {self.ambient}")
        if self.basis.n_rows != self.ambient:
            raise DimensionMismatchError(
                f"Basis has {self.basis.n_rows} rows, ambient dimension is {self.ambient}"
            )
        if ranks and self.basis.n_cols < ranks[-1]:
            raise DimensionMismatchError(
                f"Basis has {self.basis.n_cols} columns, top rank is {ranks[-1]}"
            )

    @classmethod
    def from_basis(cls, basis: ExactMatrix, ranks) -> Flag:
        flag = cls(basis.n_rows, tuple(ranks), basis)
        problems = flag.validate()
        if problems:
            raise ValueError("; ".join(problems))
        return flag

    @classmethod
    def from_rows(cls, rows, ranks) -> Flag:
        """Build from the row-vector convention used in printed constructions"""
        return cls.from_basis(ExactMatrix(rows).transpose(), ranks)

    def validate(self) -> List[str]:
        """Every rank whose leading columns are not independent"""
        return [
            f"first {k} columns have rank {self.subspace(k).rank()}, expected {k}"
            for k in self.ranks
            if self.subspace(k).rank() != k
        ]

    def subspace(self, k: int) -> ExactMatrix:
        return self.basis.leading_columns(k)

    def plucker(self, k: int) -> PluckerVector:
        return plucker_vector(self.subspace(k))

    def restrict_ranks(self, ranks) -> Flag:
        return Flag(self.ambient, tuple(ranks), self.basis.leading_columns(max(ranks, default=0)))

    def to_json_dict(self) -> dict:
        return {"ambient": self.ambient, "ranks": list(self.ranks), "basis": self.basis.to_json_dict()}


def intersect_with_interval(F: Flag, a: int, b: int) -> Flag:
    """
    Flag of the subspaces L_k meet span(e_a..e_b), written in the
    coordinates of the interval (dimension b-a+1)

    Zero-dimensional and repeated intersections are dropped, as is the
    full interval itself.
    """
    if not 1 <= a <= b <= F.ambient:
        raise ValueError(f"Empty or out-of-range interval [{a}, {b}] for ambient {F.ambient}")
    inside = list(range(a - 1, b))
    outside = [i for i in range(F.ambient) if i < a - 1 or i >= b]
    width = b - a + 1

    columns: List[list] = []
    ranks: List[int] = []
    for k in F.ranks:
        L = F.subspace(k)
        if outside:
            coeffs = L.submatrix(outside, range(k)).kernel()
            meet = L @ coeffs
        else:
            meet = L
        restricted = meet.submatrix(inside, range(meet.n_cols))
        for col in restricted.columns():
            trial = ExactMatrix.from_columns(columns + [list(col)])
            if trial.rank() > len(columns):
                columns.append(list(col))
        dim = len(columns)
        if 0 < dim < width and (not ranks or ranks[-1] != dim):
            ranks.append(dim)
    basis = ExactMatrix.from_columns(columns) if columns else ExactMatrix.zeros(width, 0)
    logger.debug(f"intersect_with_interval [{a}, {b}]: ranks {F.ranks} -> {ranks}")
    return Flag(width, tuple(ranks), basis)
