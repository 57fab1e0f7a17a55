# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled scan kernels: S(lambda) enumeration, closed-form M(s) and Bareiss in
int64 minors with __int128 products. Inputs outside the safe range go to the
pure-Python kernels."""
from libc.math cimport sqrt, pow

from . import _kernels_py

cdef extern from *:
    ctypedef long long i128 "__int128"

DEF MAXP = 8
DEF MAXN = 61
DEF MAXCELLS = 28

cdef struct Ctx:
    int p
    long long lam[MAXP]
    long long mu[MAXP]
    long long binom[MAXN][MAXN]
    int ncells
    int ci[MAXCELLS]
    int cj[MAXCELLS]
    long long a[MAXP][MAXP]
    long long budget[MAXP]
    long long *out
    long long count
    long long cap


cdef inline long long _binom(Ctx *c, long long n, long long k) nogil:
    if n < 0 or k < 0 or k > n:
        return 0
    return c.binom[n][k]


cdef long long _det(Ctx *c) nogil:
    cdef long long m[MAXP][MAXP]
    cdef int p = c.p, r, col, i, j, k, t
    cdef long long top, shift, tail, prev, piv, tmp
    cdef int sign = 1
    for r in range(1, p):
        top = c.lam[r - 1] - c.a[r][r]
        shift = -c.a[r][r]
        for t in range(1, r):
            shift += c.a[r][t]
        for col in range(1, p + 1):
            m[r - 1][col - 1] = _binom(c, top, c.mu[col - 1] + r - col + shift)
    tail = 0
    for t in range(1, p):
        tail += c.a[t][t]
        for i in range(t + 1, p):
            tail -= c.a[i][t]
    for col in range(1, p + 1):
        m[p - 1][col - 1] = _binom(c, c.lam[p - 1], c.mu[col - 1] + p - col + tail)
    prev = 1
    for k in range(p - 1):
        if m[k][k] == 0:
            for r in range(k + 1, p):
                if m[r][k] != 0:
                    for j in range(p):
                        tmp = m[k][j]; m[k][j] = m[r][j]; m[r][j] = tmp
                    sign = -sign
                    break
            else:
                return 0
        piv = m[k][k]
        for i in range(k + 1, p):
            for j in range(k + 1, p):
                m[i][j] = <long long>((<i128>m[i][j] * piv - <i128>m[i][k] * m[k][j]) / prev)
        prev = piv
    return sign * m[p - 1][p - 1]


cdef void _walk(Ctx *c, int pos) nogil:
    cdef int i, j
    cdef long long v, hi
    if pos == c.ncells:
        if c.count < c.cap:
            c.out[c.count] = _det(c)
        c.count += 1
        return
    i = c.ci[pos]
    j = c.cj[pos]
    hi = c.lam[j] if i == j else (c.lam[j] if c.lam[j] < c.budget[j] else c.budget[j])
    v = 0
    while v <= hi:
        c.a[i][j] = v
        if i == j:
            c.budget[j] = v
        else:
            c.budget[j] -= v
        _walk(c, pos + 1)
        if i != j:
            c.budget[j] += v
        v += 1


cdef long long _count(Ctx *c) nogil:
    cdef long long save = c.cap
    c.cap = 0
    c.count = 0
    _walk(c, 0)
    c.cap = save
    return c.count


cdef bint _setup(Ctx *c, lam, mu) except -1:
    cdef int p = len(lam), n, k, i, j, pos
    cdef double emax, bound
    if p != len(mu):
        raise ValueError("lambda and mu differ in length")
    if p < 1 or p > MAXP or lam[0] >= MAXN:
        return False
    c.p = p
    for i in range(p):
        c.lam[i] = lam[i]
        c.mu[i] = mu[i]
    n = <int>c.lam[0]
    for i in range(n + 1):
        c.binom[i][0] = 1
        c.binom[i][i] = 1
        for k in range(1, i):
            c.binom[i][k] = c.binom[i - 1][k - 1] + c.binom[i - 1][k]
    # every minor is bounded by (emax * sqrt(p)) ** p
    emax = <double>c.binom[n][n // 2]
    bound = pow(emax * sqrt(<double>p), p)
    if bound >= 4.0e18:
        return False
    pos = 0
    for i in range(1, p):
        for j in range(1, i + 1):
            c.ci[pos] = i
            c.cj[pos] = j
            pos += 1
    c.ncells = pos
    return True


def determinant_terms(lam, mu):
    """det M(s) for every s in S(lam), in the same order as the Python enumeration."""
    cdef Ctx c
    cdef long long n, i
    lam = tuple(lam)
    mu = tuple(mu)
    if not _setup(&c, lam, mu):
        return _kernels_py.determinant_terms(lam, mu)
    n = _count(&c)
    buf = bytearray(8 * max(n, 1))
    cdef long long[::1] view = memoryview(buf).cast("q")
    c.out = &view[0]
    c.cap = n
    c.count = 0
    with nogil:
        _walk(&c, 0)
    return [view[i] for i in range(n)]


def coefficient_total(lam, mu):
    """Sum of det M(s) over S(lam)."""
    cdef Ctx c
    cdef long long n, i
    cdef i128 acc = 0
    lam = tuple(lam)
    mu = tuple(mu)
    if not _setup(&c, lam, mu):
        return _kernels_py.coefficient_total(lam, mu)
    n = _count(&c)
    buf = bytearray(8 * max(n, 1))
    cdef long long[::1] view = memoryview(buf).cast("q")
    c.out = &view[0]
    c.cap = n
    c.count = 0
    with nogil:
        _walk(&c, 0)
        for i in range(n):
            acc += view[i]
    if -(<i128>1 << 62) < acc < (<i128>1 << 62):
        return <long long>acc
    return sum(view[i] for i in range(n))


def sequence_count(lam):
    """|S(lam)| (used by the benchmark and cost guards)."""
    cdef Ctx c
    lam = tuple(lam)
    if not _setup(&c, lam, (0,) * len(lam)):
        from .combinatorics import count_triangular_sequences
        return count_triangular_sequences(lam)
    return _count(&c)
