# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""C kernels for F_p[T], mirroring ``_fpx_py``.

Coefficients are held as ``long long``; callers guarantee ``p < 2**31`` so
products of two residues cannot overflow.
"""

from libc.stdlib cimport malloc, free

ctypedef long long ll


cdef inline ll _mod(ll x, ll p) nogil:
    x %= p
    return x + p if x < 0 else x


cdef ll _inv(ll a, ll p) except -1:
    cdef ll t = 0, nt = 1, r = p, nr = _mod(a, p), q, tmp
    if nr == 0:
        raise ZeroDivisionError("inverse of zero")
    while nr:
        q = r // nr
        tmp = t - q * nt
        t = nt
        nt = tmp
        tmp = r - q * nr
        r = nr
        nr = tmp
    return _mod(t, p)


cdef ll* _load(list a, Py_ssize_t n) except NULL:
    cdef ll* buf = <ll*> malloc((n if n > 0 else 1) * sizeof(ll))
    if buf == NULL:
        raise MemoryError()
    cdef Py_ssize_t i
    for i in range(n):
        buf[i] = a[i] if i < len(a) else 0
    return buf


cdef list _store(ll* buf, Py_ssize_t n):
    while n > 0 and buf[n - 1] == 0:
        n -= 1
    return [buf[i] for i in range(n)]


cdef Py_ssize_t _mul_into(ll* a, Py_ssize_t na, ll* b, Py_ssize_t nb, ll* out, ll p) nogil:
    cdef Py_ssize_t i, j, n
    if na == 0 or nb == 0:
        return 0
    n = na + nb - 1
    for i in range(n):
        out[i] = 0
    for i in range(na):
        if a[i] == 0:
            continue
        for j in range(nb):
            out[i + j] = (out[i + j] + a[i] * b[j]) % p
    while n > 0 and out[n - 1] == 0:
        n -= 1
    return n


cdef Py_ssize_t _rem_inplace(ll* r, Py_ssize_t nr, ll* b, Py_ssize_t nb, ll inv, ll p, ll* q) nogil:
    # reduces r (length nr) modulo b (length nb, nonzero leading); quotient into q if non-NULL
    cdef Py_ssize_t db = nb - 1, k, j
    cdef ll c
    if nr - 1 < db:
        while nr > 0 and r[nr - 1] == 0:
            nr -= 1
        return nr
    k = nr - 1 - db
    while k >= 0:
        c = r[k + db] * inv % p
        if q != NULL:
            q[k] = c
        if c:
            for j in range(db + 1):
                r[k + j] = _mod(r[k + j] - c * b[j], p)
        k -= 1
    nr = db
    while nr > 0 and r[nr - 1] == 0:
        nr -= 1
    return nr


def trim(list a):
    while a and a[len(a) - 1] == 0:
        a.pop()
    return a


def mul(list a, list b, ll p):
    cdef Py_ssize_t na = len(a), nb = len(b), n
    if na == 0 or nb == 0:
        return []
    cdef ll* x = _load(a, na)
    cdef ll* y = _load(b, nb)
    cdef ll* out = <ll*> malloc((na + nb) * sizeof(ll))
    try:
        n = _mul_into(x, na, y, nb, out, p)
        return _store(out, n)
    finally:
        free(x)
        free(y)
        free(out)


def divmod_(list a, list b, ll p):
    cdef Py_ssize_t na = len(a), nb = len(b), nq, nr
    if nb == 0:
        raise ZeroDivisionError("polynomial division by zero")
    if na < nb:
        return [], trim(list(a))
    cdef ll inv = _inv(b[nb - 1], p)
    cdef ll* r = _load(a, na)
    cdef ll* y = _load(b, nb)
    nq = na - nb + 1
    cdef ll* q = _load([], nq)
    try:
        nr = _rem_inplace(r, na, y, nb, inv, p, q)
        return _store(q, nq), _store(r, nr)
    finally:
        free(r)
        free(y)
        free(q)


def mod(list a, list b, ll p):
    return divmod_(a, b, p)[1]


def mulmod(list a, list b, list m, ll p):
    return mod(mul(a, b, p), m, p)


def powmod(list a, object e, list m, ll p):
    cdef Py_ssize_t nm = len(m), nres, nbase, nt
    if nm == 0:
        raise ZeroDivisionError("polynomial division by zero")
    cdef ll inv = _inv(m[nm - 1], p)
    cdef Py_ssize_t cap = 2 * nm + len(a) + 1
    cdef ll* mm = _load(m, nm)
    cdef ll* res = _load([], cap)
    cdef ll* base = _load(a, cap)
    cdef ll* tmp = _load([], cap)
    cdef Py_ssize_t i
    try:
        res[0] = 1
        nres = _rem_inplace(res, 1, mm, nm, inv, p, NULL)
        nbase = _rem_inplace(base, len(a), mm, nm, inv, p, NULL)
        while e:
            if e & 1:
                nt = _mul_into(res, nres, base, nbase, tmp, p)
                nt = _rem_inplace(tmp, nt, mm, nm, inv, p, NULL)
                for i in range(nt):
                    res[i] = tmp[i]
                nres = nt
            e >>= 1
            if e:
                nt = _mul_into(base, nbase, base, nbase, tmp, p)
                nt = _rem_inplace(tmp, nt, mm, nm, inv, p, NULL)
                for i in range(nt):
                    base[i] = tmp[i]
                nbase = nt
        return _store(res, nres)
    finally:
        free(mm)
        free(res)
        free(base)
        free(tmp)


def monic(list a, ll p):
    if not a:
        return []
    cdef ll inv = _inv(a[len(a) - 1], p)
    return [c * inv % p for c in a]


def gcd(list a, list b, ll p):
    cdef Py_ssize_t na = len(a), nb = len(b), nr, i
    cdef Py_ssize_t cap = (na if na > nb else nb) + 1
    cdef ll* x = _load(a, cap)
    cdef ll* y = _load(b, cap)
    cdef ll* t
    try:
        while na > 0 and x[na - 1] == 0:
            na -= 1
        while nb > 0 and y[nb - 1] == 0:
            nb -= 1
        while nb > 0:
            nr = _rem_inplace(x, na, y, nb, _inv(y[nb - 1], p), p, NULL)
            t = x
            x = y
            y = t
            na = nb
            nb = nr
        return monic(_store(x, na), p)
    finally:
        free(x)
        free(y)


def roots(list a, ll p):
    cdef Py_ssize_t n = len(a), i
    cdef ll x, acc
    cdef ll* c = _load(a, n)
    out = []
    try:
        for x in range(p):
            acc = 0
            i = n - 1
            while i >= 0:
                acc = (acc * x + c[i]) % p
                i -= 1
            if acc == 0:
                out.append(x)
        return out
    finally:
        free(c)
