"""Exact linear algebra over the integers and the rationals.

Everything here works on plain Python ``int`` / ``fractions.Fraction`` entries
stored as lists of rows.  Ranks and determinants go through fraction-free
(Bareiss) elimination so intermediate entries stay integral; nullspaces are
finished with a short rational back-substitution.
"""
from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Sequence

Number = int | Fraction
Row = list[Number]


def _as_rows(rows: Iterable[Sequence[Number]]) -> list[list[Number]]:
    return [list(r) for r in rows]


def integerize_row(row: Sequence[Number]) -> list[int]:
    """Scale a rational row by the lcm of its denominators."""
    den = 1
    for x in row:
        if isinstance(x, Fraction) and x.denominator != 1:
            den = lcm(den, x.denominator)
    if den == 1:
        return [int(x) for x in row]
    return [int(x * den) for x in row]


def primitive_row(row: Sequence[int]) -> list[int]:
    g = 0
    for x in row:
        g = gcd(g, x)
    if g <= 1:
        return list(row)
    return [x // g for x in row]


def echelon_form(rows: Iterable[Sequence[Number]]) -> tuple[list[list[int]], list[int]]:
    """Fraction-free row echelon form.

    Rational rows are first scaled to integer rows (this does not change the
    row space).  Returns the nonzero echelon rows and their pivot columns.
    """
    A = [integerize_row(r) for r in rows]
    m = len(A)
    if m == 0:
        return [], []
    n = len(A[0])
    pivots: list[int] = []
    prev = 1
    r = 0
    for c in range(n):
        if r == m:
            break
        p = r
        while p < m and A[p][c] == 0:
            p += 1
        if p == m:
            continue
        if p != r:
            A[r], A[p] = A[p], A[r]
        pivot_row = A[r]
        piv = pivot_row[c]
        for i in range(r + 1, m):
            row = A[i]
            a = row[c]
            if a == 0:
                if piv != prev:
                    for j in range(c + 1, n):
                        if row[j]:
                            row[j] = piv * row[j] // prev
            else:
                for j in range(c + 1, n):
                    row[j] = (piv * row[j] - a * pivot_row[j]) // prev
                row[c] = 0
        prev = piv
        pivots.append(c)
        r += 1
    return A[:r], pivots


def rank(rows: Iterable[Sequence[Number]]) -> int:
    return len(echelon_form(rows)[1])


def rref(rows: Iterable[Sequence[Number]]) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form over Q (nonzero rows only)."""
    E, pivots = echelon_form(rows)
    R = [[Fraction(x) for x in row] for row in E]
    for k in range(len(R) - 1, -1, -1):
        c = pivots[k]
        inv = 1 / R[k][c]
        R[k] = [x * inv for x in R[k]]
        for i in range(k):
            f = R[i][c]
            if f:
                Rk = R[k]
                R[i] = [x - f * y for x, y in zip(R[i], Rk)]
    return R, pivots


def nullspace(rows: Sequence[Sequence[Number]], ncols: int | None = None) -> list[list[Fraction]]:
    """Basis of {x : A x = 0} over Q, one vector per free column."""
    rows = _as_rows(rows)
    if ncols is None:
        if not rows:
            raise ValueError("ncols is required for an empty matrix")
        ncols = len(rows[0])
    if not rows:
        return [[Fraction(int(i == j)) for j in range(ncols)] for i in range(ncols)]
    R, pivots = rref(rows)
    pivset = set(pivots)
    basis = []
    for free in range(ncols):
        if free in pivset:
            continue
        v = [Fraction(0)] * ncols
        v[free] = Fraction(1)
        for k, c in enumerate(pivots):
            v[c] = -R[k][free]
        basis.append(v)
    return basis


def determinant(rows: Sequence[Sequence[Number]]) -> Number:
    """Bareiss determinant; exact for integer and rational matrices."""
    A = _as_rows(rows)
    n = len(A)
    if any(len(r) != n for r in A):
        raise ValueError("determinant of a non-square matrix")
    if n == 0:
        return 1
    scale = Fraction(1)
    B = []
    for r in A:
        ir = integerize_row(r)
        nz = next((x for x, y in zip(r, ir) if x), None)
        if nz is not None:
            k = next(y for x, y in zip(r, ir) if x)
            scale *= Fraction(nz) / k
        B.append(ir)
    sign = 1
    prev = 1
    for c in range(n):
        p = c
        while p < n and B[p][c] == 0:
            p += 1
        if p == n:
            return 0
        if p != c:
            B[c], B[p] = B[p], B[c]
            sign = -sign
        piv = B[c][c]
        pr = B[c]
        for i in range(c + 1, n):
            row = B[i]
            a = row[c]
            for j in range(c + 1, n):
                row[j] = (piv * row[j] - a * pr[j]) // prev
            row[c] = 0
        prev = piv
    det = sign * B[n - 1][n - 1] * scale
    if isinstance(det, Fraction) and det.denominator == 1:
        return int(det)
    return det


def matmul(A: Sequence[Sequence[Number]], B: Sequence[Sequence[Number]]) -> list[list[Number]]:
    Bt = list(zip(*B))
    return [[sum(a * b for a, b in zip(row, col)) for col in Bt] for row in A]


def matvec(A: Sequence[Sequence[Number]], v: Sequence[Number]) -> list[Number]:
    return [sum(a * x for a, x in zip(row, v)) for row in A]


def transpose(A: Sequence[Sequence[Number]]) -> list[list[Number]]:
    return [list(c) for c in zip(*A)]


def identity(n: int) -> list[list[int]]:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    x0, y0, x1, y1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    if a < 0:
        return -a, -x0, -y0
    return a, x0, y0


def hermite_normal_form(rows: Sequence[Sequence[int]]) -> tuple[list[list[int]], list[list[int]]]:
    """Row-style Hermite normal form with transform.

    Returns ``(H, U)`` with ``U`` unimodular and ``U @ rows == H``.  Nonzero
    rows of ``H`` come first, pivots are positive and entries above a pivot are
    reduced into ``[0, pivot)``.
    """
    H = [list(map(int, r)) for r in rows]
    m = len(H)
    U = identity(m)
    if m == 0:
        return H, U
    n = len(H[0])
    r = 0
    for c in range(n):
        if r == m:
            break
        for i in range(r + 1, m):
            b = H[i][c]
            if b == 0:
                continue
            a = H[r][c]
            g, x, y = _xgcd(a, b)
            pa, pb = a // g, b // g
            Hr, Hi = H[r], H[i]
            H[r] = [x * u + y * v for u, v in zip(Hr, Hi)]
            H[i] = [-pb * u + pa * v for u, v in zip(Hr, Hi)]
            Ur, Ui = U[r], U[i]
            U[r] = [x * u + y * v for u, v in zip(Ur, Ui)]
            U[i] = [-pb * u + pa * v for u, v in zip(Ur, Ui)]
        if H[r][c] == 0:
            continue
        if H[r][c] < 0:
            H[r] = [-x for x in H[r]]
            U[r] = [-x for x in U[r]]
        p = H[r][c]
        for i in range(r):
            q = H[i][c] // p
            if q:
                H[i] = [u - q * v for u, v in zip(H[i], H[r])]
                U[i] = [u - q * v for u, v in zip(U[i], U[r])]
        r += 1
    return H, U


def integer_kernel(A: Sequence[Sequence[int]]) -> list[list[int]]:
    """Z-basis of {x in Z^n : A x = 0}, returned in Hermite normal form."""
    A = [list(map(int, r)) for r in A]
    n = len(A[0])
    H, U = hermite_normal_form(transpose(A))
    kernel = [U[i] for i in range(n) if not any(H[i])]
    if not kernel:
        return []
    K, _ = hermite_normal_form(kernel)
    return [row for row in K if any(row)]


def smith_normal_form(rows: Sequence[Sequence[int]]) -> list[int]:
    """Invariant factors d_1 | d_2 | ... of an integer matrix (nonzero ones)."""
    A = [list(map(int, r)) for r in rows]
    m = len(A)
    if m == 0:
        return []
    n = len(A[0])
    diag: list[int] = []
    t = 0
    while t < min(m, n):
        # smallest nonzero entry in the remaining block as pivot
        best = None
        for i in range(t, m):
            for j in range(t, n):
                if A[i][j] and (best is None or abs(A[i][j]) < abs(A[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            break
        i0, j0 = best
        A[t], A[i0] = A[i0], A[t]
        for row in A:
            row[t], row[j0] = row[j0], row[t]
        while True:
            p = A[t][t]
            done = True
            for i in range(t + 1, m):
                q = A[i][t] // p
                if q:
                    A[i] = [u - q * v for u, v in zip(A[i], A[t])]
                if A[i][t]:
                    done = False
            for j in range(t + 1, n):
                q = A[t][j] // p
                if q:
                    for row in A:
                        row[j] -= q * row[t]
                if A[t][j]:
                    done = False
            if done:
                bad = None
                for i in range(t + 1, m):
                    for j in range(t + 1, n):
                        if A[i][j] % p:
                            bad = i
                            break
                    if bad is not None:
                        break
                if bad is None:
                    break
                A[t] = [u + v for u, v in zip(A[t], A[bad])]
                continue
            # move the smallest nonzero entry of row/column t onto the pivot
            best = (t, t)
            for i in range(t, m):
                if A[i][t] and abs(A[i][t]) < abs(A[best[0]][best[1]]):
                    best = (i, t)
            for j in range(t, n):
                if A[t][j] and abs(A[t][j]) < abs(A[best[0]][best[1]]):
                    best = (t, j)
            i1, j1 = best
            A[t], A[i1] = A[i1], A[t]
            for row in A:
                row[t], row[j1] = row[j1], row[t]
        diag.append(abs(A[t][t]))
        t += 1
    return diag


class ExactMatrix:
    """Dense matrix over Q with exact rank, nullspace, determinant and Smith form."""

    __slots__ = ("rows", "ncols")

    def __init__(self, rows: Iterable[Sequence[Number]], ncols: int | None = None):
        self.rows = _as_rows(rows)
        if ncols is None:
            if not self.rows:
                raise ValueError("ncols is required for an empty matrix")
            ncols = len(self.rows[0])
        if any(len(r) != ncols for r in self.rows):
            raise ValueError("ragged rows")
        self.ncols = ncols

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.rows), self.ncols

    def __repr__(self) -> str:
        return f"ExactMatrix({len(self.rows)}x{self.ncols})"

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        return self.shape == other.shape and self.rows == other.rows

    def __matmul__(self, other: "ExactMatrix") -> "ExactMatrix":
        return ExactMatrix(matmul(self.rows, other.rows), other.ncols)

    def transpose(self) -> "ExactMatrix":
        return ExactMatrix(transpose(self.rows), len(self.rows))

    def rank(self) -> int:
        return rank(self.rows)

    def nullspace(self) -> list[list[Fraction]]:
        return nullspace(self.rows, self.ncols)

    def det(self) -> Number:
        return determinant(self.rows)

    def smith_form(self) -> list[int]:
        return smith_normal_form(self.rows)
