"""Exact matrices over Scalar: determinant and Pfaffian engines.

Three determinant routes (cofactor expansion, fraction-free elimination,
Dodgson condensation) and two Pfaffian routes (signed perfect matchings,
first-row expansion) cross-check each other; the condensation route is itself
one of the verified identities, via

    det M * det M(interior) = det M(1,1) det M(n,n) - det M(1,n) det M(n,1),

where M(i,j) drops row i and column j and the interior minor drops both border
rows and columns (taken as 1 for 2x2 matrices).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Sequence

from .scalar import Scalar

COFACTOR_CAP = 8
MATCHINGS_CAP = 8


class NonSquare(ValueError):
    """Operation requires a square matrix."""


class OddOrder(ValueError):
    """Pfaffians exist for even order only."""


class OrderTooLarge(ValueError):
    """The factorial-cost reference engine is capped at small orders."""


@dataclass(frozen=True)
class Matrix:
    rows: int
    cols: int
    entries: tuple[Scalar, ...]  # row-major

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise ValueError("dimensions must be nonnegative")
        if len(self.entries) != self.rows * self.cols:
            raise ValueError("entry count does not match dimensions")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[Scalar]]) -> "Matrix":
        r = len(rows)
        c = len(rows[0]) if r else 0
        if any(len(row) != c for row in rows):
            raise ValueError("ragged rows")
        return cls(r, c, tuple(Fraction(x) for row in rows for x in row))

    @classmethod
    def build(cls, rows: int, cols: int, fn: Callable[[int, int], Scalar]) -> "Matrix":
        return cls(
            rows, cols, tuple(Fraction(fn(i, j)) for i in range(rows) for j in range(cols))
        )

    def __getitem__(self, ij: tuple[int, int]) -> Scalar:
        i, j = ij
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError(f"entry ({i},{j}) out of range")
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple[Scalar, ...]:
        return self.entries[i * self.cols : (i + 1) * self.cols]

    def to_lists(self) -> list[list[Scalar]]:
        return [list(self.row(i)) for i in range(self.rows)]

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols


class SkewMatrix(Matrix):
    """Square matrix with M[i,j] = -M[j,i] (checked at construction)."""

    def __post_init__(self):
        super().__post_init__()
        if self.rows != self.cols:
            raise NonSquare("skew matrix must be square")
        for i in range(self.rows):
            for j in range(i, self.cols):
                if self[i, j] != -self[j, i]:
                    raise ValueError(f"not skew-symmetric at ({i},{j})")

    @classmethod
    def from_upper(cls, order: int, fn: Callable[[int, int], Scalar]) -> "SkewMatrix":
        """Build from the strict upper triangle, f(i,j) with i < j."""
        rows = [[Fraction(0)] * order for _ in range(order)]
        for i in range(order):
            for j in range(i + 1, order):
                v = Fraction(fn(i, j))
                rows[i][j] = v
                rows[j][i] = -v
        return cls(order, order, tuple(x for row in rows for x in row))


def minor(M: Matrix, drop_rows: Iterable[int], drop_cols: Iterable[int]) -> Matrix:
    """Submatrix with the given rows and columns removed."""
    drop_rows, drop_cols = tuple(drop_rows), tuple(drop_cols)
    dr, dc = set(drop_rows), set(drop_cols)
    if len(dr) != len(drop_rows) or len(dc) != len(drop_cols):
        raise IndexError("duplicate indices in minor")
    for i in dr:
        if not 0 <= i < M.rows:
            raise IndexError(f"row {i} out of range")
    for j in dc:
        if not 0 <= j < M.cols:
            raise IndexError(f"column {j} out of range")
    keep_r = [i for i in range(M.rows) if i not in dr]
    keep_c = [j for j in range(M.cols) if j not in dc]
    return Matrix(
        len(keep_r),
        len(keep_c),
        tuple(M[i, j] for i in keep_r for j in keep_c),
    )


def _require_square(M: Matrix):
    if not M.is_square:
        raise NonSquare(f"{M.rows}x{M.cols} matrix is not square")


def det_cofactor(M: Matrix) -> Scalar:
    """Laplace expansion along the first row; reference oracle, order <= 8."""
    _require_square(M)
    if M.rows > COFACTOR_CAP:
        raise OrderTooLarge(f"cofactor expansion capped at order {COFACTOR_CAP}")
    return _det_laplace(M.to_lists())


def _det_laplace(rows: list[list[Scalar]]) -> Scalar:
    n = len(rows)
    if n == 0:
        return Fraction(1)
    if n == 1:
        return rows[0][0]
    total = Fraction(0)
    sign = 1
    for j in range(n):
        a = rows[0][j]
        if a != 0:
            sub = [[row[c] for c in range(n) if c != j] for row in rows[1:]]
            total += sign * a * _det_laplace(sub)
        sign = -sign
    return total


def det_fraction_free(M: Matrix) -> Scalar:
    """Bareiss-style fraction-free elimination with row-swap pivoting.

    Exact over the rational field; a column with no available pivot proves the
    matrix singular, so the determinant is 0 outright.
    """
    _require_square(M)
    n = M.rows
    if n == 0:
        return Fraction(1)
    a = M.to_lists()
    sign = 1
    prev = Fraction(1)
    for k in range(n - 1):
        if a[k][k] == 0:
            for r in range(k + 1, n):
                if a[r][k] != 0:
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return Fraction(0)
        pivot = a[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * pivot - a[i][k] * a[k][j]) / prev
            a[i][k] = Fraction(0)
        prev = pivot
    return sign * a[n - 1][n - 1]


def det_condensation(M: Matrix) -> Scalar:
    """Iterated condensation of 2x2 connected minors.

    Each step replaces the matrix by its 2x2 connected minors, divided
    elementwise by the interior of the matrix two steps back.  A vanishing
    interior entry makes the division impossible, in which case the whole call
    falls back to fraction-free elimination.
    """
    _require_square(M)
    n = M.rows
    if n == 0:
        return Fraction(1)
    if n == 1:
        return M[0, 0]
    cur = M.to_lists()
    prev: list[list[Scalar]] | None = None
    try:
        while len(cur) > 1:
            m = len(cur) - 1
            nxt = [
                [
                    cur[i][j] * cur[i + 1][j + 1] - cur[i][j + 1] * cur[i + 1][j]
                    for j in range(m)
                ]
                for i in range(m)
            ]
            if prev is not None:
                for i in range(m):
                    for j in range(m):
                        nxt[i][j] /= prev[i + 1][j + 1]
            prev, cur = cur, nxt
    except ZeroDivisionError:
        return det_fraction_free(M)
    return cur[0][0]


def desnanot_jacobi_residual(M: Matrix) -> Scalar:
    """det M * det(interior) - [det M(1,1) det M(n,n) - det M(1,n) det M(n,1)].

    Identically zero for every square matrix of order >= 2 (the interior minor
    is taken as 1 at order 2).
    """
    _require_square(M)
    n = M.rows
    if n < 2:
        raise NonSquare("relation needs order >= 2")
    last = n - 1
    det = det_fraction_free
    lhs = det(M) * det(minor(M, (0, last), (0, last)))
    rhs = det(minor(M, (0,), (0,))) * det(minor(M, (last,), (last,))) - det(
        minor(M, (0,), (last,))
    ) * det(minor(M, (last,), (0,)))
    return lhs - rhs


def _check_even_skew(M: Matrix):
    _require_square(M)
    if M.rows % 2:
        raise OddOrder("Pfaffian requires even order")


def perfect_matchings(items: Sequence[int]):
    """Yield all perfect matchings of `items` as lists of (i, j) pairs, i < j."""
    items = list(items)
    if not items:
        yield []
        return
    first = items[0]
    for idx in range(1, len(items)):
        rest = items[1:idx] + items[idx + 1 :]
        for rest_match in perfect_matchings(rest):
            yield [(first, items[idx])] + rest_match


def matching_sign(pairs: Sequence[tuple[int, int]]) -> int:
    """(-1)^(number of crossings): pairs (i,j), (i',j') with i < i' < j < j'."""
    crossings = 0
    for idx, (i, j) in enumerate(pairs):
        for i2, j2 in pairs[idx + 1 :]:
            lo, hi = (i, j) if i < i2 else (i2, j2)
            a, b = (i2, j2) if i < i2 else (i, j)
            if lo < a < hi < b:
                crossings += 1
    return -1 if crossings % 2 else 1


def pfaffian_matchings(M: Matrix) -> Scalar:
    """Pfaffian as the signed sum over perfect matchings (order <= 8)."""
    _check_even_skew(M)
    if M.rows > MATCHINGS_CAP:
        raise OrderTooLarge(f"matching enumeration capped at order {MATCHINGS_CAP}")
    total = Fraction(0)
    for pairs in perfect_matchings(range(M.rows)):
        term = Fraction(matching_sign(pairs))
        for i, j in pairs:
            term *= M[i, j]
        total += term
    return total


def pfaffian_expansion(M: Matrix) -> Scalar:
    """Pfaffian by recursive expansion along the first row."""
    _check_even_skew(M)
    return _pf_expand(M.to_lists())


def _pf_expand(rows: list[list[Scalar]]) -> Scalar:
    n = len(rows)
    if n == 0:
        return Fraction(1)
    total = Fraction(0)
    sign = 1
    for j in range(1, n):
        a = rows[0][j]
        if a != 0:
            keep = [k for k in range(1, n) if k != j]
            sub = [[rows[r][c] for c in keep] for r in keep]
            total += sign * a * _pf_expand(sub)
        sign = -sign
    return total
