"""Exact linear algebra over Z and GF(2).

Matrices are plain lists of rows holding Python ints, so entries never
overflow.  The Smith form uses a smallest-magnitude pivot with a fixed
row-major scan, which makes every transform reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

Matrix = list[list[int]]


def zeros(rows: int, cols: int) -> Matrix:
    return [[0] * cols for _ in range(rows)]


def identity(n: int) -> Matrix:
    m = zeros(n, n)
    for i in range(n):
        m[i][i] = 1
    return m


def shape(m: Sequence[Sequence[int]], cols: Optional[int] = None) -> tuple[int, int]:
    rows = len(m)
    if cols is None:
        cols = len(m[0]) if rows else 0
    return rows, cols


def matmul(a: Sequence[Sequence[int]], b: Sequence[Sequence[int]]) -> Matrix:
    n, k = shape(a)
    k2, m = shape(b)
    if n and k != k2:
        raise ValueError(f"cannot multiply {n}x{k} by {k2}x{m}")
    out = zeros(n, m)
    for i in range(n):
        ai = a[i]
        oi = out[i]
        for t in range(k):
            c = ai[t]
            if c:
                bt = b[t]
                for j in range(m):
                    if bt[j]:
                        oi[j] += c * bt[j]
    return out


def matvec(a: Sequence[Sequence[int]], v: Sequence[int]) -> list[int]:
    return [sum(x * y for x, y in zip(row, v) if x) for row in a]


def transpose(m: Sequence[Sequence[int]], rows: Optional[int] = None) -> Matrix:
    n, k = shape(m)
    if not n:
        return [[] for _ in range(rows or 0)]
    return [[m[i][j] for i in range(n)] for j in range(k)]


def from_columns(columns: Iterable[Sequence[int]], rows: int) -> Matrix:
    """Assemble a ``rows`` x len(columns) matrix; works for zero columns."""
    cols = [list(c) for c in columns]
    for c in cols:
        if len(c) != rows:
            raise ValueError(f"column of length {len(c)}, expected {rows}")
    return [[c[i] for c in cols] for i in range(rows)]


def determinant(m: Sequence[Sequence[int]]) -> int:
    """Bareiss fraction-free determinant."""
    n = len(m)
    if n == 0:
        return 1
    a = [list(r) for r in m]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k]:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


@dataclass
class SmithResult:
    """Outcome of a Smith reduction ``U * M * V = D``.

    ``U``, ``V`` and ``U_inv`` are ``None`` when they were not requested.
    """

    D: Matrix
    diagonal: list[int]
    U: Optional[Matrix] = None
    V: Optional[Matrix] = None
    U_inv: Optional[Matrix] = None

    @property
    def rank(self) -> int:
        return sum(1 for d in self.diagonal if d)


def smith(
    m: Sequence[Sequence[int]],
    cols: Optional[int] = None,
    *,
    left: bool = True,
    right: bool = True,
    left_inverse: bool = False,
) -> SmithResult:
    """Smith normal form with optional transform tracking.

    ``cols`` must be given when ``m`` has no rows.  Skipping the right
    transform is the cheap path for wide relation matrices.
    """
    n, k = shape(m, cols)
    a = [list(r) for r in m]
    for r in a:
        if len(r) != k:
            raise ValueError("ragged matrix")
    U = identity(n) if left else None
    Ui = identity(n) if left_inverse else None
    V = identity(k) if right else None

    def swap_rows(i, j):
        if i == j:
            return
        a[i], a[j] = a[j], a[i]
        if U is not None:
            U[i], U[j] = U[j], U[i]
        if Ui is not None:
            for row in Ui:
                row[i], row[j] = row[j], row[i]

    def swap_cols(i, j):
        if i == j:
            return
        for row in a:
            row[i], row[j] = row[j], row[i]
        if V is not None:
            for row in V:
                row[i], row[j] = row[j], row[i]

    def add_row(dst, src, q):
        # row[dst] += q * row[src]
        rs = a[src]
        rd = a[dst]
        for j in range(k):
            if rs[j]:
                rd[j] += q * rs[j]
        if U is not None:
            us, ud = U[src], U[dst]
            for j in range(n):
                if us[j]:
                    ud[j] += q * us[j]
        if Ui is not None:
            # inverse transform: col[src] -= q * col[dst]
            for row in Ui:
                if row[dst]:
                    row[src] -= q * row[dst]

    def add_col(dst, src, q, lo):
        # col[dst] += q * col[src]; rows above ``lo`` are already clear
        for i in range(lo, n):
            row = a[i]
            if row[src]:
                row[dst] += q * row[src]
        if V is not None:
            for row in V:
                if row[src]:
                    row[dst] += q * row[src]

    def negate_row(i):
        a[i] = [-x for x in a[i]]
        if U is not None:
            U[i] = [-x for x in U[i]]
        if Ui is not None:
            for row in Ui:
                row[i] = -row[i]

    t = 0
    limit = min(n, k)
    while t < limit:
        best = None
        for i in range(t, n):
            row = a[i]
            for j in range(t, k):
                x = row[j]
                if x and (best is None or abs(x) < best[0]):
                    best = (abs(x), i, j)
                    if best[0] == 1:
                        break
            if best is not None and best[0] == 1:
                break
        if best is None:
            break
        swap_rows(t, best[1])
        swap_cols(t, best[2])
        while True:
            p = a[t][t]
            dirty = False
            for i in range(t + 1, n):
                x = a[i][t]
                if x:
                    add_row(i, t, -(x // p))
                    if a[i][t]:
                        dirty = True
            row_t = a[t]
            for j in range(t + 1, k):
                x = row_t[j]
                if x:
                    add_col(j, t, -(x // p), t)
                    if row_t[j]:
                        dirty = True
            if dirty:
                best = None
                for i in range(t, n):
                    x = a[i][t]
                    if x and (best is None or abs(x) < best[0]):
                        best = (abs(x), i, t)
                for j in range(t + 1, k):
                    x = row_t[j]
                    if x and (best is None or abs(x) < best[0]):
                        best = (abs(x), t, j)
                swap_rows(t, best[1])
                swap_cols(t, best[2])
                continue
            if abs(p) != 1:
                bad = None
                for i in range(t + 1, n):
                    row = a[i]
                    for j in range(t + 1, k):
                        if row[j] % p:
                            bad = i
                            break
                    if bad is not None:
                        break
                if bad is not None:
                    add_row(t, bad, 1)
                    continue
            break
        if a[t][t] < 0:
            negate_row(t)
        t += 1
    diagonal = [a[i][i] for i in range(limit)]
    return SmithResult(D=a, diagonal=diagonal, U=U, V=V, U_inv=Ui)


def smith_normal_form(m: Sequence[Sequence[int]], cols: Optional[int] = None):
    """Return ``(U, D, V)`` with ``U * m * V == D`` and D in Smith form."""
    r = smith(m, cols)
    return r.U, r.D, r.V


def cokernel_invariants(m: Sequence[Sequence[int]], cols: Optional[int] = None):
    """Describe Z^n / colspan(m), where n is the number of rows of ``m``.

    Returns ``(free_rank, torsion)`` with torsion coefficients > 1 in
    divisibility order.
    """
    n, _ = shape(m, cols)
    r = smith(m, cols, left=False, right=False)
    nonzero = [d for d in r.diagonal if d]
    return n - len(nonzero), [d for d in nonzero if d > 1]


def rank(m: Sequence[Sequence[int]], cols: Optional[int] = None) -> int:
    return smith(m, cols, left=False, right=False).rank


def kernel_basis(m: Sequence[Sequence[int]], cols: Optional[int] = None) -> list[list[int]]:
    """A Z-basis of {x : m x = 0}, as a list of vectors."""
    _, k = shape(m, cols)
    r = smith(m, cols, left=False)
    V = r.V
    return [[V[i][j] for i in range(k)] for j in range(r.rank, k)]


def column_span_basis(m: Sequence[Sequence[int]], cols: Optional[int] = None) -> list[list[int]]:
    """A Z-basis of the column span of ``m``."""
    n, _ = shape(m, cols)
    r = smith(m, cols, right=False, left_inverse=True)
    Ui = r.U_inv
    return [[Ui[i][j] * r.diagonal[j] for i in range(n)] for j in range(r.rank)]


class IntegerSolver:
    """Repeatedly solve ``m x = b`` over Z for a fixed ``m``."""

    def __init__(self, m: Sequence[Sequence[int]], cols: Optional[int] = None):
        self.rows, self.cols = shape(m, cols)
        self._snf = smith(m, cols)

    def solve(self, b: Sequence[int]) -> Optional[list[int]]:
        if len(b) != self.rows:
            raise ValueError(f"right-hand side has length {len(b)}, expected {self.rows}")
        r = self._snf
        c = matvec(r.U, b) if self.rows else []
        y = [0] * self.cols
        for i, ci in enumerate(c):
            d = r.diagonal[i] if i < len(r.diagonal) else 0
            if d == 0:
                if ci:
                    return None
            else:
                if ci % d:
                    return None
                y[i] = ci // d
        return matvec(r.V, y) if self.cols else []


def solve_integer(m: Sequence[Sequence[int]], b: Sequence[int], cols: Optional[int] = None):
    """Integer solution of ``m x = b`` or ``None`` when there is none."""
    return IntegerSolver(m, cols).solve(b)


# GF(2): rows are packed into Python ints, bit j = column j.

def pack_bits(bits: Iterable[int]) -> int:
    out = 0
    for j, b in enumerate(bits):
        if b & 1:
            out |= 1 << j
    return out


def unpack_bits(word: int, length: int) -> list[int]:
    return [(word >> j) & 1 for j in range(length)]


def _as_words(rows) -> list[int]:
    return [r if isinstance(r, int) else pack_bits(r) for r in rows]


def gf2_echelon(rows) -> dict[int, int]:
    """Reduced basis keyed by pivot bit (the highest set bit of each row)."""
    basis: dict[int, int] = {}
    for w in _as_words(rows):
        w = gf2_reduce(basis, w)
        if w:
            p = w.bit_length() - 1
            for q, v in list(basis.items()):
                if (v >> p) & 1:
                    basis[q] = v ^ w
            basis[p] = w
    return basis


def gf2_reduce(basis: dict[int, int], word: int) -> int:
    """Canonical representative of ``word`` modulo the span of ``basis``."""
    # basis is fully reduced: no row carries another row's pivot bit
    for p, row in basis.items():
        if (word >> p) & 1:
            word ^= row
    return word


def gf2_rank(rows) -> int:
    return len(gf2_echelon(rows))
