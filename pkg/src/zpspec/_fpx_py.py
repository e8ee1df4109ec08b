"""Pure-Python F_p[T] kernels.

Polynomials are lists of residues in [0, p), lowest degree first, with no
trailing zeros (``[]`` is the zero polynomial).  ``_fpx.pyx`` implements the
same functions in C; :mod:`zpspec.fpx` picks one at import time.
"""


def trim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def mul(a, b, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return trim([c % p for c in out])


def divmod_(a, b, p):
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    r = list(a)
    db = len(b) - 1
    if len(r) - 1 < db:
        return [], trim(r)
    inv = pow(b[-1], -1, p)
    q = [0] * (len(r) - db)
    for k in range(len(r) - 1 - db, -1, -1):
        c = r[k + db] * inv % p
        q[k] = c
        if c:
            for j in range(db + 1):
                r[k + j] = (r[k + j] - c * b[j]) % p
    return trim(q), trim(r[:db])


def mod(a, b, p):
    return divmod_(a, b, p)[1]


def mulmod(a, b, m, p):
    return mod(mul(a, b, p), m, p)


def powmod(a, e, m, p):
    """``a**e mod m`` by repeated squaring."""
    result = mod([1], m, p)
    base = mod(a, m, p)
    while e:
        if e & 1:
            result = mulmod(result, base, m, p)
        e >>= 1
        if e:
            base = mulmod(base, base, m, p)
    return result


def monic(a, p):
    if not a:
        return []
    inv = pow(a[-1], -1, p)
    return [c * inv % p for c in a]


def gcd(a, b, p):
    a, b = list(a), list(b)
    while b:
        a, b = b, mod(a, b, p)
    return monic(a, p)


def roots(a, p):
    """All x in [0, p) with a(x) = 0, ascending."""
    out = []
    for x in range(p):
        acc = 0
        for c in reversed(a):
            acc = (acc * x + c) % p
        if acc == 0:
            out.append(x)
    return out
