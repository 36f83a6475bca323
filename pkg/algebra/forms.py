"""
Bilinear forms on the ambient spaces of Sp(2n), SO(2n+1) and SO(2n)

All three Gram matrices are antidiagonal up to sign. Index conventions are
1-based in the docstrings, 0-based in code.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Sequence

from algebra.matrix import DimensionMismatchError, ExactMatrix
from algebra.scalar import ZERO

logger = logging.getLogger(__name__)

FORM_KINDS = ("TypeC_E", "TypeB_Eprime", "TypeD_E", "Custom")


@dataclass(frozen=True)
class BilinearForm:
    kind: str
    n: int
    matrix: ExactMatrix

    def __post_init__(self):
        if self.kind not in FORM_KINDS:
            raise ValueError(f"Invalid form kind '{self.kind}'. Must be one of: {list(FORM_KINDS)}")
        if not self.matrix.is_square():
            raise DimensionMismatchError(f"Gram matrix must be square, got {self.matrix.shape}")

    @property
    def dimension(self) -> int:
        return self.matrix.n_rows

    @classmethod
    def type_c(cls, n: int) -> BilinearForm:
        """Alternating E on R^2n: E[i, 2n+1-i] = (-1)^(i+1)"""
        N = 2 * n
        entries = {(i - 1, N - i): (-1) ** (i + 1) for i in range(1, N + 1)}
        return cls("TypeC_E", n, ExactMatrix.from_sparse(N, N, entries))

    @classmethod
    def type_b(cls, n: int) -> BilinearForm:
        """Symmetric E' on R^(2n+1): E'[i, 2n+2-i] = (-1)^i"""
        N = 2 * n + 1
        entries = {(i - 1, N - i): (-1) ** i for i in range(1, N + 1)}
        return cls("TypeB_Eprime", n, ExactMatrix.from_sparse(N, N, entries))

    @classmethod
    def type_d(cls, n: int) -> BilinearForm:
        """Symmetric E = [[0, E0^t], [E0, 0]] with E0[i, n+1-i] = (-1)^(n-i+1)"""
        N = 2 * n
        entries = {}
        for i in range(1, n + 1):
            j = n + 1 - i
            sign = (-1) ** (n - i + 1)
            entries[(n + i - 1, j - 1)] = sign  # E0 block, lower left
            entries[(j - 1, n + i - 1)] = sign  # E0^t block, upper right
        return cls("TypeD_E", n, ExactMatrix.from_sparse(N, N, entries))

    @classmethod
    def custom(cls, matrix: ExactMatrix) -> BilinearForm:
        return cls("Custom", matrix.n_rows, matrix)

    def pair(self, v: Sequence, w: Sequence):
        """v^t * Gram * w"""
        gw = self.matrix.apply(list(w))
        acc = ZERO
        for a, b in zip(v, gw):
            if a and b:
                acc = a * b + acc
        return acc

    def gram_restricted(self, M: ExactMatrix) -> ExactMatrix:
        """M^t * Gram * M, the pairing matrix of the columns of M"""
        if M.n_rows != self.dimension:
            raise DimensionMismatchError(
                f"Columns of length {M.n_rows} against a form on R^{self.dimension}"
            )
        return M.transpose() @ self.matrix @ M


def is_isotropic(M: ExactMatrix, form: BilinearForm) -> bool:
    """True iff every pair of columns of M pairs to zero (self-pairs included)"""
    gram = form.gram_restricted(M)
    return all(e.is_zero() for row in gram.rows for e in row)


def perp(M: ExactMatrix, form: BilinearForm) -> ExactMatrix:
    """Basis of {v : w^t * Gram * v = 0 for every column w of M}, as columns"""
    if M.n_rows != form.dimension:
        raise DimensionMismatchError(
            f"Columns of length {M.n_rows} against a form on R^{form.dimension}"
        )
    if M.n_cols == 0:
        return ExactMatrix.identity(form.dimension)
    return (M.transpose() @ form.matrix).kernel()
