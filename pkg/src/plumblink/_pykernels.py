"""Pure-Python fraction-free elimination kernels.

These mirror ``_ckernels.pyx`` line for line; whichever is importable is
picked up by :mod:`plumblink._backend`.  Matrices are lists of lists of
Python ints and are never mutated.
"""


def det(a):
    """Bareiss determinant with row swaps on the first nonzero pivot."""
    n = len(a)
    if n == 0:
        return 1
    m = [list(row) for row in a]
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
        rk = m[k]
        p = rk[k]
        for i in range(k + 1, n):
            ri = m[i]
            mik = ri[k]
            for j in range(k + 1, n):
                ri[j] = (ri[j] * p - mik * rk[j]) // prev
        prev = p
    return sign * m[n - 1][n - 1]


def leading_minors(a):
    """Leading principal minors Delta_1..Delta_n.

    Without pivoting the k-th Bareiss pivot is Delta_k.  Once a zero pivot
    shows up the remaining minors are computed one by one with ``det``.
    """
    n = len(a)
    m = [list(row) for row in a]
    minors = []
    prev = 1
    for k in range(n):
        p = m[k][k]
        if p == 0:
            minors.append(0)
            for size in range(k + 2, n + 1):
                minors.append(det([row[:size] for row in a[:size]]))
            return minors
        minors.append(p)
        rk = m[k]
        for i in range(k + 1, n):
            ri = m[i]
            mik = ri[k]
            for j in range(k + 1, n):
                ri[j] = (ri[j] * p - mik * rk[j]) // prev
        prev = p
    return minors


def solve_numerators(a, rhs):
    """Solve a.x = rhs for integer ``a`` and ``rhs``.

    Returns ``(nums, d)`` with ``x[i] == nums[i] / d`` and ``d == +-det(a)``.
    Raises ZeroDivisionError when ``a`` is singular.
    """
    n = len(a)
    m = [list(row) + [rhs[i]] for i, row in enumerate(a)]
    prev = 1
    for k in range(n):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    break
            else:
                raise ZeroDivisionError("singular matrix")
        rk = m[k]
        p = rk[k]
        for i in range(k + 1, n):
            ri = m[i]
            mik = ri[k]
            for j in range(k + 1, n + 1):
                ri[j] = (ri[j] * p - mik * rk[j]) // prev
        prev = p
    d = m[n - 1][n - 1] if n else 1
    nums = [0] * n
    for i in range(n - 1, -1, -1):
        ri = m[i]
        acc = d * ri[n]
        for j in range(i + 1, n):
            acc -= ri[j] * nums[j]
        # exact: d * x_i is an integer by Cramer's rule
        nums[i] = acc // ri[i]
    return nums, d
