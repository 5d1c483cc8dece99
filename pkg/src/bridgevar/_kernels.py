"""Pure-Python polynomial kernels.

Dense little-endian coefficient lists.  These are the hot inner loops of
the whole package (bigint convolution; arithmetic mod p for degree
patterns); `bridgevar._speedups` is a compiled twin with identical
semantics, selected at import time by `bridgevar.kernels`.

All functions return *normalized* lists (no trailing zeros); the zero
polynomial is the empty list.
"""


def trim(c):
    """Drop trailing zeros in place and return the list."""
    n = len(c)
    while n and not c[n - 1]:
        n -= 1
    del c[n:]
    return c


def poly_mul(a, b):
    """Convolution product.  Coefficients may be any exact ring elements."""
    na, nb = len(a), len(b)
    if na == 0 or nb == 0:
        return []
    out = [0] * (na + nb - 1)
    for i in range(na):
        ai = a[i]
        if not ai:
            continue
        for j in range(nb):
            bj = b[j]
            if bj:
                out[i + j] += ai * bj
    return trim(out)


def poly_mul_p(a, b, p):
    """Product of int-coefficient lists, reduced mod p."""
    na, nb = len(a), len(b)
    if na == 0 or nb == 0:
        return []
    out = [0] * (na + nb - 1)
    for i in range(na):
        ai = a[i]
        if not ai:
            continue
        for j in range(nb):
            out[i + j] += ai * b[j]
    for i in range(len(out)):
        out[i] %= p
    return trim(out)


def poly_rem_p(a, m, p):
    """Remainder of a modulo m over GF(p).  m must be nonzero mod p."""
    r = [x % p for x in a]
    trim(r)
    dm = len(m) - 1
    inv = pow(m[dm] % p, p - 2, p)
    while len(r) - 1 >= dm and r:
        c = (r[-1] * inv) % p
        shift = len(r) - 1 - dm
        if c:
            for j in range(dm):
                r[shift + j] = (r[shift + j] - c * m[j]) % p
        del r[-1]
        trim(r)
    return r


def poly_gcd_p(a, b, p):
    """Monic gcd over GF(p)."""
    a = trim([x % p for x in a])
    b = trim([x % p for x in b])
    while b:
        a, b = b, poly_rem_p(a, b, p)
    if a:
        inv = pow(a[-1], p - 2, p)
        a = [(x * inv) % p for x in a]
    return a


def poly_powmod_p(base, e, m, p):
    """base**e modulo (m, p) by square and multiply."""
    result = [1]
    acc = poly_rem_p(base, m, p)
    while e:
        if e & 1:
            result = poly_rem_p(poly_mul_p(result, acc, p), m, p)
        e >>= 1
        if e:
            acc = poly_rem_p(poly_mul_p(acc, acc, p), m, p)
    return result
