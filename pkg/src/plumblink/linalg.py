"""Exact integer/rational linear algebra.

Matrices are tuples of tuples of ints, vectors are tuples of
:class:`fractions.Fraction`.  Nothing here touches floating point.
"""
from fractions import Fraction
from math import lcm

from plumblink._backend import kernels
from plumblink.errors import NotSymmetric, SingularError

__all__ = [
    "as_matrix",
    "as_vector",
    "determinant",
    "solve",
    "leading_minors",
    "is_negative_definite",
    "mat_vec",
]


def as_matrix(rows):
    """Normalize ``rows`` to a square tuple-of-tuples of ints."""
    m = tuple(tuple(int(x) for x in row) for row in rows)
    n = len(m)
    for row in m:
        if len(row) != n:
            raise ValueError(f"matrix is not square: {n} rows, row of length {len(row)}")
    return m


def as_vector(values):
    return tuple(Fraction(v) for v in values)


def _rows(m):
    return [list(row) for row in m]


def determinant(m):
    """Exact determinant by fraction-free (Bareiss) elimination."""
    return kernels.det(_rows(as_matrix(m)))


def leading_minors(m):
    return kernels.leading_minors(_rows(as_matrix(m)))


def solve(m, c):
    """Return the exact x with ``m . x == c``.

    ``c`` may hold rationals; it is cleared to integers first so the
    elimination stays in Z.  Raises SingularError when det(m) == 0.
    """
    m = as_matrix(m)
    c = as_vector(c)
    if len(c) != len(m):
        raise ValueError(f"dimension mismatch: {len(m)}x{len(m)} matrix, vector of length {len(c)}")
    if not m:
        return ()
    scale = lcm(*(x.denominator for x in c))
    rhs = [int(x * scale) for x in c]
    try:
        nums, d = kernels.solve_numerators(_rows(m), rhs)
    except ZeroDivisionError:
        raise SingularError("matrix is singular (det = 0)") from None
    den = d * scale
    return tuple(Fraction(num, den) for num in nums)


def is_symmetric(m):
    n = len(m)
    return all(m[i][j] == m[j][i] for i in range(n) for j in range(i + 1, n))


def is_negative_definite(m):
    """Sylvester test: sign(Delta_k) == (-1)**k for every leading minor."""
    m = as_matrix(m)
    if not is_symmetric(m):
        raise NotSymmetric("negative-definiteness is only defined here for symmetric matrices")
    for k, minor in enumerate(kernels.leading_minors(_rows(m)), start=1):
        if minor == 0 or (minor > 0) != (k % 2 == 0):
            return False
    return True


def mat_vec(m, x):
    return tuple(sum((a * b for a, b in zip(row, x)), Fraction(0)) for row in m)
