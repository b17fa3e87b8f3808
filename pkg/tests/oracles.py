"""Slow, independent reference computations.

None of these share code with the Bareiss kernels they check.
"""
from fractions import Fraction
from itertools import product


def cofactor_det(m):
    """Laplace expansion along the first row."""
    n = len(m)
    if n == 0:
        return 1
    if n == 1:
        return m[0][0]
    total = 0
    for j in range(n):
        if m[0][j] == 0:
            continue
        minor = [row[:j] + row[j + 1:] for row in m[1:]]
        total += (-1) ** j * m[0][j] * cofactor_det(minor)
    return total


def gauss_jordan_solve(m, c):
    """Textbook Gauss-Jordan over Fractions; None if singular."""
    n = len(m)
    a = [[Fraction(x) for x in row] + [Fraction(c[i])] for i, row in enumerate(m)]
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col] != 0), None)
        if piv is None:
            return None
        a[col], a[piv] = a[piv], a[col]
        p = a[col][col]
        a[col] = [x / p for x in a[col]]
        for r in range(n):
            if r != col and a[r][col] != 0:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return tuple(row[n] for row in a)


def quadratic_form(m, x):
    n = len(m)
    return sum(m[i][j] * x[i] * x[j] for i in range(n) for j in range(n))


def grid_witness(m, bound=3):
    """A nonzero integer x in [-bound, bound]^r with x.M.x >= 0, or None."""
    r = len(m)
    for x in product(range(-bound, bound + 1), repeat=r):
        if any(x) and quadratic_form(m, x) >= 0:
            return x
    return None


def ldl_negative_definite(m):
    """-M positive definite iff every LDL^T pivot of -M is > 0."""
    n = len(m)
    a = [[Fraction(-x) for x in row] for row in m]
    for k in range(n):
        if a[k][k] <= 0:
            return False
        for i in range(k + 1, n):
            f = a[i][k] / a[k][k]
            for j in range(k, n):
                a[i][j] -= f * a[k][j]
    return True
