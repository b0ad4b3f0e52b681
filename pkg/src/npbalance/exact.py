"""Exact integer matrices: Hermite normal form, kernels, primitive vectors.

Everything here is arbitrary-precision integer arithmetic; no floating
point is used anywhere.  The Hermite form is column-style: ``M * U = H``
with ``U`` unimodular, ``H`` in column echelon form with positive pivots
and the entries left of each pivot reduced into ``[0, pivot)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Iterable, Sequence

from npbalance.errors import InvariantError


@dataclass(frozen=True)
class IntMatrix:
    """Immutable row-major integer matrix.  ``cols == 0`` is allowed so a
    trivial kernel can be returned as a matrix with no columns."""

    rows: int
    cols: int
    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if self.rows < 1 or self.cols < 0:
            raise InvariantError("matrix needs at least one row")
        if len(self.entries) != self.rows:
            raise InvariantError("row count mismatch")
        for row in self.entries:
            if len(row) != self.cols:
                raise InvariantError("ragged matrix")
            for e in row:
                if not isinstance(e, int):
                    raise InvariantError("matrix entries must be exact integers")

    @staticmethod
    def from_rows(rows: Iterable[Sequence[int]]) -> "IntMatrix":
        tup = tuple(tuple(int(e) for e in row) for row in rows)
        ncols = len(tup[0]) if tup else 0
        return IntMatrix(len(tup), ncols, tup)

    @staticmethod
    def identity(n: int) -> "IntMatrix":
        return IntMatrix.from_rows([[int(i == j) for j in range(n)] for i in range(n)])

    @staticmethod
    def zero(rows: int, cols: int) -> "IntMatrix":
        return IntMatrix(rows, cols, tuple(tuple(0 for _ in range(cols)) for _ in range(rows)))

    def transpose(self) -> "IntMatrix":
        return IntMatrix.from_rows([[self.entries[i][j] for i in range(self.rows)]
                                    for j in range(self.cols)])

    def mul(self, other: "IntMatrix") -> "IntMatrix":
        if self.cols != other.rows:
            raise InvariantError("matrix shape mismatch in product")
        rows = []
        for i in range(self.rows):
            row = []
            for j in range(other.cols):
                row.append(sum(self.entries[i][k] * other.entries[k][j] for k in range(self.cols)))
            rows.append(row)
        return IntMatrix(self.rows, other.cols, tuple(tuple(r) for r in rows))

    def column(self, j: int) -> tuple[int, ...]:
        return tuple(self.entries[i][j] for i in range(self.rows))

    def columns(self) -> list[tuple[int, ...]]:
        return [self.column(j) for j in range(self.cols)]

    def is_zero(self) -> bool:
        return all(e == 0 for row in self.entries for e in row)


def _egcd(a: int, b: int) -> tuple[int, int, int]:
    """Return (g, x, y) with g = gcd(a,b) >= 0 and x*a + y*b = g."""
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r != 0:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    return old_r, old_s, old_t


def hermite_normal_form(mat: IntMatrix) -> tuple[IntMatrix, IntMatrix]:
    """Column-style Hermite normal form: returns (H, U) with M*U = H and
    |det U| = 1.  Pivots are positive; entries left of a pivot in its row
    lie in [0, pivot); zero columns end up rightmost."""
    r, c = mat.rows, mat.cols
    if c == 0:
        raise InvariantError("Hermite form needs at least one column")
    h = [list(row) for row in mat.entries]
    u = [[int(i == j) for j in range(c)] for i in range(c)]

    def combine(j: int, k: int, a: int, b: int, cc: int, d: int):
        # (col_j, col_k) <- (a*col_j + b*col_k, cc*col_j + d*col_k)
        for row in h:
            row[j], row[k] = a * row[j] + b * row[k], cc * row[j] + d * row[k]
        for row in u:
            row[j], row[k] = a * row[j] + b * row[k], cc * row[j] + d * row[k]

    def swap(j: int, k: int):
        for row in h:
            row[j], row[k] = row[k], row[j]
        for row in u:
            row[j], row[k] = row[k], row[j]

    def negate(j: int):
        for row in h:
            row[j] = -row[j]
        for row in u:
            row[j] = -row[j]

    piv = 0
    for i in range(r):
        if piv >= c:
            break
        nz = [j for j in range(piv, c) if h[i][j] != 0]
        if not nz:
            continue
        if nz[0] != piv:
            swap(nz[0], piv)
        for j in range(piv + 1, c):
            if h[i][j] == 0:
                continue
            p, q = h[i][piv], h[i][j]
            g, x, y = _egcd(p, q)
            combine(piv, j, x, y, -(q // g), p // g)
        if h[i][piv] < 0:
            negate(piv)
        pivot = h[i][piv]
        for j in range(piv):
            q = h[i][j] // pivot
            if q:
                for row in h:
                    row[j] -= q * row[piv]
                for row in u:
                    row[j] -= q * row[piv]
        piv += 1

    H = IntMatrix.from_rows(h) if c else IntMatrix(r, 0, tuple(() for _ in range(r)))
    U = IntMatrix.from_rows(u) if c else IntMatrix.identity(0) if c else IntMatrix(max(c, 1), 0, ((),))
    if c == 0:
        # degenerate: 0x0 transform
        U = IntMatrix(1, 0, ((),))
    return H, U


def _pivots(h: IntMatrix) -> list[tuple[int, int]]:
    """(pivot_row, column) pairs of a column-echelon matrix, left to right."""
    out = []
    for j in range(h.cols):
        col = h.column(j)
        nz = [i for i, e in enumerate(col) if e != 0]
        if nz:
            out.append((nz[0], j))
    return out


def rank(mat: IntMatrix) -> int:
    """Rank over the rationals (= number of Hermite pivots)."""
    h, _ = hermite_normal_form(mat)
    return len(_pivots(h))


def integer_kernel(a: IntMatrix) -> IntMatrix:
    """Basis of {v integer : A^T v = 0} as columns of a d x r matrix.

    The basis is canonical (Hermite-reduced) and each column is a
    primitive vector; r = d - rank(A).  r may be zero.
    """
    d = a.rows
    at = a.transpose()
    h, u = hermite_normal_form(at)
    kernel_cols = [u.column(j) for j in range(at.cols)
                   if all(h.entries[i][j] == 0 for i in range(at.rows))]
    if not kernel_cols:
        return IntMatrix(d, 0, tuple(() for _ in range(d)))
    k0 = IntMatrix.from_rows([[col[i] for col in kernel_cols] for i in range(d)])
    hk, _ = hermite_normal_form(k0)
    # basis columns of a saturated kernel lattice are automatically primitive
    cols = [hk.column(j) for j in range(hk.cols)
            if any(e != 0 for e in hk.column(j))]
    k = IntMatrix.from_rows([[col[i] for col in cols] for i in range(d)])
    if not a.transpose().mul(k).is_zero():
        raise InvariantError("kernel verification A^T K = 0 failed")
    return k


def primitive(v: Sequence[int]) -> tuple[int, ...]:
    """Divide by the gcd of the entries and make the first nonzero entry
    positive.  The zero vector has no primitive form."""
    vals = [int(e) for e in v]
    g = 0
    for e in vals:
        g = gcd(g, abs(e))
    if g == 0:
        raise InvariantError("zero vector has no primitive form")
    vals = [e // g for e in vals]
    for e in vals:
        if e != 0:
            if e < 0:
                vals = [-x for x in vals]
            break
    return tuple(vals)


def determinant(mat: IntMatrix) -> int:
    """Fraction-free (Bareiss) determinant of a square integer matrix."""
    if mat.rows != mat.cols:
        raise InvariantError("determinant of non-square matrix")
    n = mat.rows
    m = [list(row) for row in mat.entries]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def solve_columns(a: IntMatrix, b: Sequence[int]) -> tuple[int, ...] | None:
    """One integer solution x of A x = b, or None if none exists."""
    if len(b) != a.rows:
        raise InvariantError("rhs length mismatch")
    h, u = hermite_normal_form(a)
    rhs = [int(e) for e in b]
    y = [0] * a.cols
    for prow, col in _pivots(h):
        # entries above the pivot are zero, so rows < prow are already final
        for i in range(prow):
            if rhs[i] != 0:
                return None
        pivot = h.entries[prow][col]
        if rhs[prow] % pivot != 0:
            return None
        t = rhs[prow] // pivot
        y[col] = t
        if t:
            for i in range(a.rows):
                rhs[i] -= t * h.entries[i][col]
    if any(e != 0 for e in rhs):
        return None
    x = [sum(u.entries[i][j] * y[j] for j in range(a.cols)) for i in range(a.cols)]
    return tuple(x)


def in_column_lattice(k: IntMatrix, v: Sequence[int]) -> bool:
    """Whether v is an integer combination of the columns of K."""
    if k.cols == 0:
        return all(int(e) == 0 for e in v)
    return solve_columns(k, v) is not None
