# All routines work on lists of fractions.Fraction and never round.
from fractions import Fraction
from typing import List, Optional, Sequence

Vector = List[Fraction]
Matrix = List[List[Fraction]]


def as_fraction_matrix(rows: Sequence[Sequence]) -> Matrix:
    return [[Fraction(x) for x in row] for row in rows]


def dot(v1: Sequence, v2: Sequence) -> Fraction:
    assert len(v1) == len(v2), "Cannot dot product vectors of different dimensions!"
    return sum((Fraction(x1) * x2 for x1, x2 in zip(v1, v2)), Fraction(0))


def sub(v1: Sequence, v2: Sequence) -> Vector:
    assert len(v1) == len(v2), "Cannot subtract vectors of different dimensions!"
    return [Fraction(x1) - x2 for x1, x2 in zip(v1, v2)]


def add(v1: Sequence, v2: Sequence) -> Vector:
    assert len(v1) == len(v2), "Cannot add vectors of different dimensions!"
    return [Fraction(x1) + x2 for x1, x2 in zip(v1, v2)]


def l2_sqr(v: Sequence) -> Fraction:
    return dot(v, v)


def matmul(a: Matrix, b: Matrix) -> Matrix:
    assert len(a[0]) == len(b), "Inner dimensions do not agree!"
    cols = list(zip(*b))
    return [[dot(row, col) for col in cols] for row in a]


def row_echelon(m: Matrix, t: Optional[Vector] = None):
    """
    Reduce `m` (and the right-hand side `t`, if given) in place to row echelon form.

    Returns:
        tuple: (free column indices, number of row swaps performed).
    """
    free_vars = []
    swaps = 0
    n_rows = len(m)
    n_cols = len(m[0]) if n_rows else 0
    piv_r = 0
    for piv_c in range(n_cols):
        if piv_r == n_rows:
            free_vars.extend(range(piv_c, n_cols))
            break
        for i_row in range(piv_r, n_rows):
            if m[i_row][piv_c] != 0:
                break
        else:
            free_vars.append(piv_c)
            continue
        if i_row != piv_r:
            m[piv_r], m[i_row] = m[i_row], m[piv_r]
            swaps += 1
            if t is not None:
                t[piv_r], t[i_row] = t[i_row], t[piv_r]
        fp = m[piv_r][piv_c]
        for r in range(piv_r + 1, n_rows):
            fr = m[r][piv_c]
            if fr == 0:
                continue
            frp = fr / fp
            for c in range(piv_c, n_cols):
                m[r][c] -= m[piv_r][c] * frp
            if t is not None:
                t[r] -= t[piv_r] * frp
        piv_r += 1
    return free_vars, swaps


def determinant(rows: Sequence[Sequence]) -> Fraction:
    m = as_fraction_matrix(rows)
    n = len(m)
    assert all(len(row) == n for row in m), "Determinant needs a square matrix!"
    free_vars, swaps = row_echelon(m)
    if free_vars:
        return Fraction(0)
    det = Fraction(-1 if swaps % 2 else 1)
    for i in range(n):
        det *= m[i][i]
    return det


def solve(rows: Sequence[Sequence], rhs: Sequence) -> Optional[Vector]:
    """
    Solve the square system rows * x = rhs exactly.

    Returns:
        list or None: the unique solution, or None when the system is singular.
    """
    m = as_fraction_matrix(rows)
    t = [Fraction(x) for x in rhs]
    n = len(m)
    free_vars, _ = row_echelon(m, t)
    if free_vars:
        return None
    sol = [Fraction(0)] * n
    for r in range(n - 1, -1, -1):
        s = t[r]
        for c in range(r + 1, n):
            s -= m[r][c] * sol[c]
        sol[r] = s / m[r][r]
    return sol


def inverse(rows: Sequence[Sequence]) -> Optional[Matrix]:
    n = len(rows)
    columns = []
    for j in range(n):
        unit = [Fraction(1 if i == j else 0) for i in range(n)]
        col = solve(rows, unit)
        if col is None:
            return None
        columns.append(col)
    return [list(row) for row in zip(*columns)]
