"""
Dense exact matrices

Entries are QuadScalar (or SymPoly for symbolic rows in the certifier). The
field operations (det, rank, kernel, inverse) require QuadScalar entries;
structural operations and products work over either ring.
"""
from __future__ import annotations

import json
import logging
from typing import Iterable, List, Sequence, Tuple

import networkx as nx

from algebra.scalar import QuadScalar, ScalarParseError, ZERO, ONE

logger = logging.getLogger(__name__)


def _permutation_sign(order: Sequence[int]) -> int:
    inversions = sum(1 for a in range(len(order)) for b in range(a + 1, len(order)) if order[a] > order[b])
    return -1 if inversions % 2 else 1


class DimensionMismatchError(ValueError):
    """Raised when matrix shapes are incompatible with an operation"""
    pass


class MatrixFormatError(ValueError):
    """Raised when a matrix JSON document is malformed"""
    pass


class ExactMatrix:
    """Immutable row-major matrix"""

    __slots__ = ("_rows", "n_rows", "n_cols")

    def __init__(self, rows: Sequence[Sequence], n_cols: int = None) -> None:
        self._rows: Tuple[tuple, ...] = tuple(
            tuple(e if hasattr(e, "is_zero") else QuadScalar.coerce(e) for e in row) for row in rows
        )
        self.n_rows = len(self._rows)
        self.n_cols = len(self._rows[0]) if self._rows else (n_cols or 0)
        for row in self._rows:
            if len(row) != self.n_cols:
                raise DimensionMismatchError(
                    f"Ragged matrix: expected {self.n_cols} entries per row, got {len(row)}"
                )

    # ------------------------------------------------------------------
    # Constructors
    # ------------------------------------------------------------------

    @classmethod
    def identity(cls, n: int) -> ExactMatrix:
        return cls([[ONE if i == j else ZERO for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, n_rows: int, n_cols: int) -> ExactMatrix:
        return cls([[ZERO] * n_cols for _ in range(n_rows)], n_cols=n_cols)

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence], n_rows: int = None) -> ExactMatrix:
        if not columns:
            return cls.zeros(n_rows or 0, 0)
        height = len(columns[0])
        return cls([[col[i] for col in columns] for i in range(height)])

    @classmethod
    def from_sparse(cls, n_rows: int, n_cols: int, entries: dict) -> ExactMatrix:
        """Build from {(row, col): value} with 0-based positions"""
        grid = [[ZERO] * n_cols for _ in range(n_rows)]
        for (i, j), value in entries.items():
            grid[i][j] = QuadScalar.coerce(value)
        return cls(grid, n_cols=n_cols)

    # ------------------------------------------------------------------
    # Access
    # ------------------------------------------------------------------

    @property
    def shape(self) -> Tuple[int, int]:
        return self.n_rows, self.n_cols

    @property
    def rows(self) -> Tuple[tuple, ...]:
        return self._rows

    def __getitem__(self, index: Tuple[int, int]):
        i, j = index
        return self._rows[i][j]

    def row(self, i: int) -> tuple:
        return self._rows[i]

    def column(self, j: int) -> tuple:
        return tuple(row[j] for row in self._rows)

    def columns(self) -> List[tuple]:
        return [self.column(j) for j in range(self.n_cols)]

    def leading_columns(self, k: int) -> ExactMatrix:
        return self.submatrix(range(self.n_rows), range(k))

    def submatrix(self, rows: Iterable[int], cols: Iterable[int]) -> ExactMatrix:
        rows, cols = list(rows), list(cols)
        return ExactMatrix([[self._rows[i][j] for j in cols] for i in rows], n_cols=len(cols))

    def with_entry(self, i: int, j: int, value) -> ExactMatrix:
        grid = [list(r) for r in self._rows]
        grid[i][j] = value
        return ExactMatrix(grid, n_cols=self.n_cols)

    def hstack(self, other: ExactMatrix) -> ExactMatrix:
        if self.n_rows != other.n_rows:
            raise DimensionMismatchError(f"hstack: {self.shape} vs {other.shape}")
        return ExactMatrix(
            [a + b for a, b in zip(self._rows, other._rows)], n_cols=self.n_cols + other.n_cols
        )

    def transpose(self) -> ExactMatrix:
        return ExactMatrix(
            [[self._rows[i][j] for i in range(self.n_rows)] for j in range(self.n_cols)],
            n_cols=self.n_rows,
        )

    @property
    def T(self) -> ExactMatrix:
        return self.transpose()

    # ------------------------------------------------------------------
    # Arithmetic
    # ------------------------------------------------------------------

    def __matmul__(self, other: ExactMatrix) -> ExactMatrix:
        if self.n_cols != other.n_rows:
            raise DimensionMismatchError(f"matmul: {self.shape} @ {other.shape}")
        # Generators and forms have a few nonzeros per column
        cols = [[(k, b) for k, b in enumerate(col) if b] for col in other.columns()]
        out = []
        for row in self._rows:
            out_row = []
            for col in cols:
                acc = ZERO
                for k, b in col:
                    a = row[k]
                    if a:
                        acc = a * b + acc
                out_row.append(acc)
            out.append(out_row)
        return ExactMatrix(out, n_cols=other.n_cols)

    def __add__(self, other: ExactMatrix) -> ExactMatrix:
        if self.shape != other.shape:
            raise DimensionMismatchError(f"add: {self.shape} + {other.shape}")
        return ExactMatrix(
            [[a + b for a, b in zip(r1, r2)] for r1, r2 in zip(self._rows, other._rows)],
            n_cols=self.n_cols,
        )

    def __neg__(self) -> ExactMatrix:
        return ExactMatrix([[-a for a in row] for row in self._rows], n_cols=self.n_cols)

    def __sub__(self, other: ExactMatrix) -> ExactMatrix:
        return self + (-other)

    def scale(self, c) -> ExactMatrix:
        return ExactMatrix([[c * a for a in row] for row in self._rows], n_cols=self.n_cols)

    def apply(self, vector: Sequence) -> list:
        if len(vector) != self.n_cols:
            raise DimensionMismatchError(f"apply: {self.shape} to vector of length {len(vector)}")
        out = []
        for row in self._rows:
            acc = ZERO
            for a, b in zip(row, vector):
                if a and b:
                    acc = a * b + acc
            out.append(acc)
        return out

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        return self.shape == other.shape and self._rows == other._rows

    def __hash__(self) -> int:
        return hash(self._rows)

    def is_square(self) -> bool:
        return self.n_rows == self.n_cols

    def is_antisymmetric(self) -> bool:
        if not self.is_square():
            return False
        n = self.n_rows
        return all(self._rows[i][j] == -self._rows[j][i] for i in range(n) for j in range(i, n))

    def is_symmetric(self) -> bool:
        return self.is_square() and self == self.transpose()

    def is_upper_triangular(self) -> bool:
        return all(
            not self._rows[i][j] for i in range(self.n_rows) for j in range(min(i, self.n_cols))
        )

    def is_lower_triangular(self) -> bool:
        return all(
            not self._rows[i][j] for i in range(self.n_rows) for j in range(i + 1, self.n_cols)
        )

    def diagonal_blocks(self) -> List[Tuple[List[int], List[int]]]:
        """
        (rows, cols) of each connected piece of the nonzero pattern. Listing
        the rows and the columns piece by piece makes the matrix block
        diagonal.
        """
        graph = nx.Graph()
        graph.add_nodes_from(("r", i) for i in range(self.n_rows))
        graph.add_nodes_from(("c", j) for j in range(self.n_cols))
        graph.add_edges_from(
            (("r", i), ("c", j)) for i, row in enumerate(self._rows) for j, e in enumerate(row) if e
        )
        blocks = []
        for part in nx.connected_components(graph):
            rows = sorted(i for side, i in part if side == "r")
            cols = sorted(j for side, j in part if side == "c")
            blocks.append((rows, cols))
        return sorted(blocks)

    def is_lower_unitriangular(self) -> bool:
        return self.is_square() and all(
            (self._rows[i][j] == ONE) if i == j else not self._rows[i][j]
            for i in range(self.n_rows)
            for j in range(i, self.n_cols)
        )

    # ------------------------------------------------------------------
    # Field operations (QuadScalar entries)
    # ------------------------------------------------------------------

    def det(self) -> QuadScalar:
        """
        Determinant: the diagonal product of a triangular matrix, otherwise
        Bareiss elimination on each diagonal block of the nonzero pattern
        """
        if not self.is_square():
            raise DimensionMismatchError(f"det of non-square {self.shape}")
        if self.n_rows == 0:
            return ONE
        if self.is_upper_triangular() or self.is_lower_triangular():
            det = ONE
            for i in range(self.n_rows):
                det = det * self._rows[i][i]
            return det
        blocks = self.diagonal_blocks()
        if len(blocks) == 1:
            return self._bareiss_det()
        if any(len(rows) != len(cols) for rows, cols in blocks):
            return ZERO
        order_rows = [i for rows, _ in blocks for i in rows]
        order_cols = [j for _, cols in blocks for j in cols]
        det = ONE if _permutation_sign(order_rows) == _permutation_sign(order_cols) else -ONE
        for rows, cols in blocks:
            det = det * self.submatrix(rows, cols)._bareiss_det()
        return det

    def _bareiss_det(self) -> QuadScalar:
        """Determinant by Bareiss fraction-free elimination"""
        n = self.n_rows
        m = [list(r) for r in self._rows]
        sign = 1
        prev = ONE
        for k in range(n - 1):
            if m[k][k].is_zero():
                for i in range(k + 1, n):
                    if not m[i][k].is_zero():
                        m[k], m[i] = m[i], m[k]
                        sign = -sign
                        break
                else:
                    return ZERO
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    m[i][j] = (m[k][k] * m[i][j] - m[i][k] * m[k][j]) / prev
            prev = m[k][k]
        det = m[n - 1][n - 1]
        return det if sign > 0 else -det

    def row_echelon(self) -> Tuple[List[list], List[int]]:
        """Reduced row echelon form and pivot columns (Gauss-Jordan)"""
        m = [list(r) for r in self._rows]
        pivots: List[int] = []
        piv_r = 0
        for piv_c in range(self.n_cols):
            for i_row in range(piv_r, self.n_rows):
                if not m[i_row][piv_c].is_zero():
                    break
            else:
                continue
            m[piv_r], m[i_row] = m[i_row], m[piv_r]
            inv = m[piv_r][piv_c].inverse()
            m[piv_r] = [e * inv for e in m[piv_r]]
            for r in range(self.n_rows):
                if r != piv_r and not m[r][piv_c].is_zero():
                    f = m[r][piv_c]
                    m[r] = [a - f * b for a, b in zip(m[r], m[piv_r])]
            pivots.append(piv_c)
            piv_r += 1
            if piv_r == self.n_rows:
                break
        return m, pivots

    def rank(self) -> int:
        return len(self.row_echelon()[1])

    def kernel(self) -> ExactMatrix:
        """Columns form a basis of {x : self @ x = 0}"""
        rref, pivots = self.row_echelon()
        free = [c for c in range(self.n_cols) if c not in pivots]
        basis = []
        for f in free:
            vec = [ZERO] * self.n_cols
            vec[f] = ONE
            for r, p in enumerate(pivots):
                vec[p] = -rref[r][f]
            basis.append(vec)
        return ExactMatrix.from_columns(basis, n_rows=self.n_cols) if basis else ExactMatrix.zeros(self.n_cols, 0)

    def inverse(self) -> ExactMatrix:
        if not self.is_square():
            raise DimensionMismatchError(f"inverse of non-square {self.shape}")
        n = self.n_rows
        rref, pivots = self.hstack(ExactMatrix.identity(n)).row_echelon()
        if pivots[:n] != list(range(n)):
            raise ZeroDivisionError("matrix is singular")
        return ExactMatrix([row[n:] for row in rref], n_cols=n)

    def same_column_span(self, other: ExactMatrix) -> bool:
        r = self.rank()
        return r == other.rank() and self.hstack(other).rank() == r

    # ------------------------------------------------------------------
    # Serialization
    # ------------------------------------------------------------------

    def to_json_dict(self) -> dict:
        return {
            "rows": self.n_rows,
            "cols": self.n_cols,
            "entries": [[str(e) for e in row] for row in self._rows],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict())

    @staticmethod
    def validate_json_dict(data) -> List[str]:
        """Return every problem with a matrix JSON document (empty = valid)"""
        errors = []
        if not isinstance(data, dict):
            return ["Matrix document must be a JSON object"]
        for field in ("rows", "cols", "entries"):
            if field not in data:
                errors.append(f"Missing required field: {field}")
        if errors:
            return errors
        rows, cols, entries = data["rows"], data["cols"], data["entries"]
        if not isinstance(rows, int) or not isinstance(cols, int) or rows < 0 or cols < 0:
            errors.append("'rows' and 'cols' must be non-negative integers")
            return errors
        if not isinstance(entries, list) or len(entries) != rows:
            errors.append(f"'entries' must be a list of {rows} rows")
            return errors
        for i, row in enumerate(entries):
            if not isinstance(row, list) or len(row) != cols:
                errors.append(f"Row {i + 1} must have {cols} entries")
                continue
            for j, literal in enumerate(row):
                try:
                    QuadScalar.parse(str(literal))
                except ScalarParseError:
                    errors.append(f"Entry ({i + 1}, {j + 1}) is not a scalar literal: {literal!r}")
        return errors

    @classmethod
    def from_json_dict(cls, data) -> ExactMatrix:
        errors = cls.validate_json_dict(data)
        if errors:
            raise MatrixFormatError("; ".join(errors))
        return cls(
            [[QuadScalar.parse(str(e)) for e in row] for row in data["entries"]],
            n_cols=data["cols"],
        )

    @classmethod
    def from_json(cls, text: str) -> ExactMatrix:
        try:
            data = json.loads(text)
        except json.JSONDecodeError as e:
            raise MatrixFormatError(f"Invalid JSON: {e}") from e
        return cls.from_json_dict(data)

    def __repr__(self) -> str:
        return f"ExactMatrix({self.n_rows}x{self.n_cols})"

    def __str__(self) -> str:
        cells = [[str(e) for e in row] for row in self._rows]
        width = max((len(c) for row in cells for c in row), default=1)
        return "\n".join("[ " + "  ".join(c.rjust(width) for c in row) + " ]" for row in cells)
