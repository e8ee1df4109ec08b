"""Brute-force reference implementations.

Nothing here imports the algorithms under test; only plain integer
arithmetic on coefficient tuples (lowest degree first).
"""

from __future__ import annotations

from functools import lru_cache
from itertools import product


def trim(c):
    c = list(c)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def mul(a, b, p):
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] = (out[i + j] + x * y) % p
    return trim(out)


def monic_tuples(p, d):
    for tail in product(range(p), repeat=d):
        yield tuple(tail) + (1,)


@lru_cache(maxsize=None)
def products_of_degree(p, d):
    """Every product of two monic polynomials of degrees i and d-i, 1 <= i < d."""
    out = set()
    for i in range(1, d // 2 + 1):
        for a in monic_tuples(p, i):
            for b in monic_tuples(p, d - i):
                out.add(mul(a, b, p))
    return frozenset(out)


def is_irreducible(c, p):
    d = len(c) - 1
    return d >= 1 and c not in products_of_degree(p, d)


@lru_cache(maxsize=None)
def irreducibles(p, d):
    return tuple(c for c in monic_tuples(p, d) if is_irreducible(c, p))


def divides(g, f, p):
    """Whether monic g divides f over F_p, by schoolbook long division."""
    r = list(f)
    dg = len(g) - 1
    for k in range(len(r) - 1 - dg, -1, -1):
        c = r[k + dg] % p
        if c:
            for j in range(dg + 1):
                r[k + j] = (r[k + j] - c * g[j]) % p
    return not any(x % p for x in r[:dg])


def factor_by_trial_division(c, p):
    """Monic irreducible factors with multiplicities, by trial division in degree order."""
    f = list(c)
    out = []
    deg = len(f) - 1
    for d in range(1, deg + 1):
        for g in irreducibles(p, d):
            m = 0
            while len(f) - 1 >= d and divides(g, f, p):
                f = list(quotient(f, g, p))
                m += 1
            if m:
                out.append((g, m))
    return out


def quotient(f, g, p):
    r = list(f)
    dg = len(g) - 1
    q = [0] * (len(r) - dg)
    for k in range(len(r) - 1 - dg, -1, -1):
        c = r[k + dg] % p
        q[k] = c
        for j in range(dg + 1):
            r[k + j] = (r[k + j] - c * g[j]) % p
    return trim(q)


def squares_mod(p, n):
    m = p**n
    return {x * x % m for x in range(m)}


def evaluate(c, x):
    acc = 0
    for a in reversed(c):
        acc = acc * x + a
    return acc


def roots_mod(c, p, n):
    """All r in [0, p^n) with f(r) = 0 mod p^n, by full digit search."""
    level = [r for r in range(p) if evaluate(c, r) % p == 0]
    for k in range(2, n + 1):
        pk, step = p**k, p ** (k - 1)
        level = [r + j * step for r in level for j in range(p) if evaluate(c, r + j * step) % pk == 0]
    return set(level)


def mobius(n):
    result, m, q = 1, n, 2
    while q * q <= m:
        if m % q == 0:
            m //= q
            if m % q == 0:
                return 0
            result = -result
        q += 1
    return -result if m > 1 else result


def necklaces(p, d):
    return sum(mobius(d // k) * p**k for k in range(1, d + 1) if d % k == 0) // d
