"""Exact determinants and inverses for small rational matrices.

Plain Gauss-Jordan elimination over `fractions.Fraction`.  The matrices this
package manipulates are tiny (one row per variable of a polynomial), so
exactness matters far more than speed and floating point is never acceptable.
Rows may contain ints or Fractions; the empty matrix has determinant 1 and is
its own inverse.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence


def determinant(rows: Sequence[Sequence[int | Fraction]]) -> Fraction:
    m = [[Fraction(x) for x in row] for row in rows]
    n = len(m)
    det = Fraction(1)
    for col in range(n):
        piv = next((r for r in range(col, n) if m[r][col] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != col:
            m[col], m[piv] = m[piv], m[col]
            det = -det
        det *= m[col][col]
        scale = m[col][col]
        for r in range(col + 1, n):
            if m[r][col] != 0:
                factor = m[r][col] / scale
                for c in range(col, n):
                    m[r][c] -= factor * m[col][c]
    return det


def inverse(rows: Sequence[Sequence[int | Fraction]]) -> tuple[tuple[Fraction, ...], ...]:
    """Exact inverse as a tuple of row tuples; raises ValueError on a singular input."""
    n = len(rows)
    m = [[Fraction(x) for x in row] for row in rows]
    aug = [m[i] + [Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    for col in range(n):
        piv = next((r for r in range(col, n) if aug[r][col] != 0), None)
        if piv is None:
            raise ValueError("matrix is singular")
        if piv != col:
            aug[col], aug[piv] = aug[piv], aug[col]
        scale = aug[col][col]
        aug[col] = [x / scale for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                factor = aug[r][col]
                aug[r] = [a - factor * b for a, b in zip(aug[r], aug[col])]
    return tuple(tuple(row[n:]) for row in aug)
