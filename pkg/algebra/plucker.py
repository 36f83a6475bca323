"""
Plücker vectors and Pfaffians

plucker_vector walks the columns left to right, keeping every j-row minor of
the first j columns (Laplace expansion along the newest column). No
division happens anywhere, so SymPoly entries go through unchanged.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
from typing import Dict, Optional, Tuple

from algebra.matrix import DimensionMismatchError, ExactMatrix
from algebra.scalar import QuadScalar, ZERO, ONE

logger = logging.getLogger(__name__)

Subset = Tuple[int, ...]  # sorted, 1-based


class NotAntisymmetricError(ValueError):
    """Raised when a Pfaffian is requested for a non-antisymmetric or odd matrix"""
    pass


@dataclass(frozen=True)
class PluckerVector:
    n: int
    k: int
    coords: Dict[Subset, object] = field(compare=False)

    def __getitem__(self, subset) -> object:
        return self.coords[tuple(sorted(subset))]

    def subsets(self):
        """k-subsets in lexicographic order"""
        return combinations(range(1, self.n + 1), self.k)

    def nonzero_subsets(self):
        return [S for S in self.subsets() if not self.coords[S].is_zero()]

    def first_nonzero(self) -> Optional[Subset]:
        for S in self.subsets():
            if not self.coords[S].is_zero():
                return S
        return None

    def is_zero(self) -> bool:
        return self.first_nonzero() is None

    def scaled(self, c) -> PluckerVector:
        return PluckerVector(self.n, self.k, {S: c * v for S, v in self.coords.items()})

    def normalized(self) -> PluckerVector:
        """Divide by the first nonzero coordinate in lexicographic order"""
        S = self.first_nonzero()
        if S is None:
            return self
        inv = self.coords[S].inverse()
        return self.scaled(inv)

    def sign_pattern(self) -> Dict[Subset, int]:
        return {S: v.sign() for S, v in self.coords.items()}

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "k": self.k,
            "coords": {",".join(map(str, S)): str(self.coords[S]) for S in self.subsets()},
        }

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PluckerVector):
            return NotImplemented
        return (self.n, self.k) == (other.n, other.k) and all(
            self.coords[S] == other.coords[S] for S in self.subsets()
        )


def plucker_vector(M: ExactMatrix) -> PluckerVector:
    """All maximal minors of an N x k matrix, keyed by 1-based row subsets"""
    N, k = M.shape
    if k > N:
        raise DimensionMismatchError(f"Plücker vector needs k <= N, got {M.shape}")
    minors: Dict[Subset, object] = {(): ONE}
    for j in range(k):
        col = M.column(j)
        nxt: Dict[Subset, object] = {}
        for S in combinations(range(1, N + 1), j + 1):
            acc = ZERO
            for p, row in enumerate(S):
                entry = col[row - 1]
                if not entry:
                    continue
                rest = minors[S[:p] + S[p + 1:]]
                if not rest:
                    continue
                term = entry * rest
                # sign (-1)^(p + j) of the (p, j) cofactor, both 0-based
                acc = acc + term if (p + j) % 2 == 0 else acc - term
            nxt[S] = acc
        minors = nxt
    return PluckerVector(N, k, minors)


def reversed_complement(S: Subset, N: int) -> Subset:
    """{N+1-j : j not in S}"""
    return tuple(sorted(N + 1 - j for j in range(1, N + 1) if j not in S))


def plucker_projectively_equal(p: PluckerVector, q: PluckerVector, up_to_sign: bool = False) -> bool:
    """
    True iff q = lambda * p for a nonzero lambda

    Without up_to_sign, lambda must be positive.
    """
    if (p.n, p.k) != (q.n, q.k):
        return False
    S = p.first_nonzero()
    if S is None or q.coords[S].is_zero():
        return False
    lam = q.coords[S] / p.coords[S]
    if not up_to_sign and lam.sign() < 0:
        return False
    return all((q.coords[T] - lam * p.coords[T]).is_zero() for T in p.subsets())


def dual_plucker_equal(p: PluckerVector, q: PluckerVector, up_to_sign: bool = True) -> bool:
    """
    Compare a k-subspace L with a candidate (N-k)-dimensional L-perp

    Coordinates of p are carried to q along S -> reversed_complement(S).
    """
    if p.n != q.n or p.k + q.k != p.n:
        return False
    carried = PluckerVector(
        p.n, q.k, {reversed_complement(S, p.n): v for S, v in p.coords.items()}
    )
    return plucker_projectively_equal(carried, q, up_to_sign=up_to_sign)


def pfaffian(M: ExactMatrix) -> QuadScalar:
    """Pfaffian by expansion along the first row (memoized on index sets)"""
    if not M.is_square():
        raise NotAntisymmetricError(f"Pfaffian of non-square matrix {M.shape}")
    if M.n_rows % 2:
        raise NotAntisymmetricError(f"Pfaffian of odd-size matrix {M.shape}")
    if not M.is_antisymmetric():
        raise NotAntisymmetricError("Pfaffian requested for a non-antisymmetric matrix")

    @lru_cache(maxsize=None)
    def pf(indices: Tuple[int, ...]):
        if not indices:
            return ONE
        first, rest = indices[0], indices[1:]
        acc = ZERO
        for pos, j in enumerate(rest):
            a = M[first, j]
            if a.is_zero():
                continue
            term = a * pf(rest[:pos] + rest[pos + 1:])
            acc = acc + term if pos % 2 == 0 else acc - term
        return acc

    return pf(tuple(range(M.n_rows)))


def all_minors(M: ExactMatrix) -> Dict[Tuple[Subset, Subset], object]:
    """Every square minor, keyed by (row subset, column subset)"""
    out = {}
    for size in range(1, min(M.shape) + 1):
        for cols in combinations(range(1, M.n_cols + 1), size):
            sub = M.submatrix(range(M.n_rows), [c - 1 for c in cols])
            for rows, value in plucker_vector(sub).coords.items():
                out[(rows, cols)] = value
    return out


def is_totally_positive(M: ExactMatrix, strict: bool = True) -> bool:
    """All minors > 0 (strict) or >= 0"""
    for value in all_minors(M).values():
        s = value.sign()
        if s < 0 or (strict and s == 0):
            return False
    return True
