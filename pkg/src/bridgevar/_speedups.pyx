# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled twin of bridgevar._kernels (same API, same semantics).

poly_mul keeps arbitrary-precision Python objects and only strips the
interpreter overhead from the double loop; the mod-p kernels switch to
raw C int64 arithmetic whenever p fits in 31 bits (so products never
overflow), falling back to the pure implementations otherwise.
"""

from libc.stdlib cimport malloc, free

from . import _kernels as _py

DEF P31 = 2147483648  # 2**31


def trim(list c):
    cdef Py_ssize_t n = len(c)
    while n and not c[n - 1]:
        n -= 1
    del c[n:]
    return c


def poly_mul(list a, list b):
    cdef Py_ssize_t na = len(a), nb = len(b), i, j
    if na == 0 or nb == 0:
        return []
    cdef list out = [0] * (na + nb - 1)
    cdef object ai, bj
    for i in range(na):
        ai = a[i]
        if not ai:
            continue
        for j in range(nb):
            bj = b[j]
            if bj:
                out[i + j] = out[i + j] + ai * bj
    return trim(out)


cdef long long* _to_arr(list a, long long p, Py_ssize_t n) except NULL:
    cdef long long* arr = <long long*> malloc(n * sizeof(long long))
    if arr == NULL:
        raise MemoryError()
    cdef Py_ssize_t i
    for i in range(n):
        arr[i] = <long long> (a[i] % p)
    return arr


cdef list _from_arr(long long* arr, Py_ssize_t n):
    cdef list out = []
    while n and arr[n - 1] == 0:
        n -= 1
    cdef Py_ssize_t i
    for i in range(n):
        out.append(arr[i])
    return out


def poly_mul_p(list a, list b, p):
    cdef Py_ssize_t na = len(a), nb = len(b), i, j
    if na == 0 or nb == 0:
        return []
    if p >= P31:
        return _py.poly_mul_p(a, b, p)
    cdef long long cp = p
    cdef long long* x = _to_arr(a, cp, na)
    cdef long long* y = _to_arr(b, cp, nb)
    cdef long long* out = <long long*> malloc((na + nb - 1) * sizeof(long long))
    if out == NULL:
        free(x); free(y)
        raise MemoryError()
    for i in range(na + nb - 1):
        out[i] = 0
    cdef long long ai
    for i in range(na):
        ai = x[i]
        if ai == 0:
            continue
        for j in range(nb):
            out[i + j] = (out[i + j] + ai * y[j]) % cp
    res = _from_arr(out, na + nb - 1)
    free(x); free(y); free(out)
    return res


def poly_rem_p(list a, list m, p):
    if p >= P31:
        return _py.poly_rem_p(a, m, p)
    cdef Py_ssize_t na = len(a), dm = len(m) - 1, i, j, shift
    cdef long long cp = p
    cdef long long* r = _to_arr(a, cp, na)
    cdef long long* mm = _to_arr(m, cp, dm + 1)
    cdef long long inv = <long long> pow(m[dm] % p, p - 2, p)
    cdef long long c
    while na and r[na - 1] == 0:
        na -= 1
    while na - 1 >= dm and na > 0:
        c = (r[na - 1] * inv) % cp
        shift = na - 1 - dm
        if c:
            for j in range(dm):
                r[shift + j] = (r[shift + j] - c * mm[j]) % cp
                if r[shift + j] < 0:
                    r[shift + j] += cp
        na -= 1
        while na and r[na - 1] == 0:
            na -= 1
    res = _from_arr(r, na)
    free(r); free(mm)
    return res


def poly_gcd_p(list a, list b, p):
    if p >= P31:
        return _py.poly_gcd_p(a, b, p)
    a = trim([x % p for x in a])
    b = trim([x % p for x in b])
    while b:
        a, b = b, poly_rem_p(a, b, p)
    cdef object inv
    if a:
        inv = pow(a[len(a) - 1], p - 2, p)
        a = [(x * inv) % p for x in a]
    return a


def poly_powmod_p(list base, e, list m, p):
    result = [1]
    acc = poly_rem_p(base, m, p)
    e = int(e)
    while e:
        if e & 1:
            result = poly_rem_p(poly_mul_p(result, acc, p), m, p)
        e >>= 1
        if e:
            acc = poly_rem_p(poly_mul_p(acc, acc, p), m, p)
    return result
