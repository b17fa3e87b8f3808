# cython: boundscheck=False, wraparound=False, language_level=3
"""Compiled fraction-free elimination kernels.

Same algorithms and signatures as ``_pykernels``.  Entries stay Python ints
(arbitrary precision); only the loop bookkeeping is typed.
"""


cpdef object det(list a):
    cdef Py_ssize_t n = len(a)
    cdef Py_ssize_t i, j, k
    cdef list m, ri, rk
    cdef object p, prev, mik
    cdef int sign = 1
    cdef bint found
    if n == 0:
        return 1
    m = [list(row) for row in a]
    prev = 1
    for k in range(n - 1):
        rk = <list>m[k]
        if rk[k] == 0:
            found = False
            for i in range(k + 1, n):
                if (<list>m[i])[k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    found = True
                    break
            if not found:
                return 0
            rk = <list>m[k]
        p = rk[k]
        for i in range(k + 1, n):
            ri = <list>m[i]
            mik = ri[k]
            for j in range(k + 1, n):
                ri[j] = (ri[j] * p - mik * rk[j]) // prev
        prev = p
    return sign * (<list>m[n - 1])[n - 1]


cpdef list leading_minors(list a):
    cdef Py_ssize_t n = len(a)
    cdef Py_ssize_t i, j, k, size
    cdef list m, ri, rk
    cdef list minors = []
    cdef object p, prev, mik
    m = [list(row) for row in a]
    prev = 1
    for k in range(n):
        rk = <list>m[k]
        p = rk[k]
        if p == 0:
            minors.append(0)
            for size in range(k + 2, n + 1):
                minors.append(det([row[:size] for row in a[:size]]))
            return minors
        minors.append(p)
        for i in range(k + 1, n):
            ri = <list>m[i]
            mik = ri[k]
            for j in range(k + 1, n):
                ri[j] = (ri[j] * p - mik * rk[j]) // prev
        prev = p
    return minors


cpdef tuple solve_numerators(list a, list rhs):
    cdef Py_ssize_t n = len(a)
    cdef Py_ssize_t i, j, k
    cdef list m, ri, rk, nums
    cdef object p, prev, mik, d, acc
    cdef bint found
    m = [list(a[i]) + [rhs[i]] for i in range(n)]
    prev = 1
    for k in range(n):
        rk = <list>m[k]
        if rk[k] == 0:
            found = False
            for i in range(k + 1, n):
                if (<list>m[i])[k] != 0:
                    m[k], m[i] = m[i], m[k]
                    found = True
                    break
            if not found:
                raise ZeroDivisionError("singular matrix")
            rk = <list>m[k]
        p = rk[k]
        for i in range(k + 1, n):
            ri = <list>m[i]
            mik = ri[k]
            for j in range(k + 1, n + 1):
                ri[j] = (ri[j] * p - mik * rk[j]) // prev
        prev = p
    d = (<list>m[n - 1])[n - 1] if n else 1
    nums = [0] * n
    for i in range(n - 1, -1, -1):
        ri = <list>m[i]
        acc = d * ri[n]
        for j in range(i + 1, n):
            acc -= ri[j] * nums[j]
        nums[i] = acc // ri[i]
    return nums, d
