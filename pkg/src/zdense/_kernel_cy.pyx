# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled hot kernels: distinct-degree factorization degrees mod a
machine-word prime, and row rank mod p.

Same signatures and pivot policy as zdense._kernel_py.  All moduli must be
below 2^63 (the wrappers in zdense.kernels route larger ones to the
pure-Python twin).
"""

from libc.stdint cimport uint64_t
from libc.stdlib cimport calloc, free, malloc
from libc.string cimport memcpy, memset

cdef extern from *:
    ctypedef unsigned long long u128 "unsigned __int128"


cdef inline uint64_t mulmod(uint64_t a, uint64_t b, uint64_t q) nogil:
    return <uint64_t>((<u128>a * b) % q)


cdef inline uint64_t submod(uint64_t a, uint64_t b, uint64_t q) nogil:
    return a + q - b if a < b else a - b


cdef uint64_t invmod(uint64_t a, uint64_t q) nogil:
    # q prime: a^(q-2) by square-and-multiply
    cdef uint64_t result = 1, base = a % q, e = q - 2
    while e:
        if e & 1:
            result = mulmod(result, base, q)
        base = mulmod(base, base, q)
        e >>= 1
    return result


cdef inline int deg(uint64_t* a, int cap) nogil:
    cdef int i = cap
    while i >= 0 and a[i] == 0:
        i -= 1
    return i


cdef void rem_inplace(uint64_t* a, int da, uint64_t* f, int df, uint64_t q) nogil:
    # a mod monic f; degree of a is at most da on entry, below df on exit
    cdef int i, j
    cdef uint64_t c
    for i in range(da, df - 1, -1):
        c = a[i]
        if c:
            a[i] = 0
            for j in range(df):
                a[i - df + j] = submod(a[i - df + j], mulmod(c, f[j], q), q)


cdef void mulmod_poly(uint64_t* a, int da, uint64_t* b, int db,
                      uint64_t* f, int df, uint64_t q,
                      uint64_t* out, uint64_t* scratch) nogil:
    # out <- a*b mod f; out may alias a or b; scratch size >= max(da+db+1, df)
    cdef int i, j, span
    if da < 0 or db < 0:
        memset(out, 0, df * sizeof(uint64_t))
        return
    span = da + db + 1
    if span < df:
        span = df
    memset(scratch, 0, span * sizeof(uint64_t))
    for i in range(da + 1):
        if a[i]:
            for j in range(db + 1):
                scratch[i + j] = (scratch[i + j] + mulmod(a[i], b[j], q)) % q
    rem_inplace(scratch, da + db, f, df, q)
    memcpy(out, scratch, df * sizeof(uint64_t))


cdef int gcd_into(uint64_t* a, int da, uint64_t* b, int db, uint64_t q) nogil:
    # a <- monic gcd(a, b); returns its degree (-1 if both zero); clobbers b
    cdef uint64_t* x = a
    cdef uint64_t* y = b
    cdef uint64_t* t
    cdef int dx = da, dy = db, dt, i
    cdef uint64_t inv
    while dy >= 0:
        if y[dy] != 1:
            inv = invmod(y[dy], q)
            for i in range(dy + 1):
                y[i] = mulmod(y[i], inv, q)
        rem_inplace(x, dx, y, dy, q)
        dx = deg(x, dy - 1)
        t = x; x = y; y = t
        dt = dx; dx = dy; dy = dt
    if dx >= 0 and x[dx] != 1:
        inv = invmod(x[dx], q)
        for i in range(dx + 1):
            x[i] = mulmod(x[i], inv, q)
    if x != a and dx >= 0:
        memcpy(a, x, (dx + 1) * sizeof(uint64_t))
    return dx


cdef void quo_into(uint64_t* a, int da, uint64_t* b, int db, uint64_t q,
                   uint64_t* work) nogil:
    # a <- a/b, exact division by monic b; work size >= da+1
    cdef int i, j
    cdef uint64_t c
    memcpy(work, a, (da + 1) * sizeof(uint64_t))
    for i in range(da, db - 1, -1):
        c = work[i]
        a[i - db] = c
        if c:
            work[i] = 0
            for j in range(db):
                work[i - db + j] = submod(work[i - db + j], mulmod(c, b[j], q), q)
    for i in range(da - db + 1, da + 1):
        a[i] = 0


def ddf_degrees(coeffs, q):
    """Sorted degrees of the irreducible factors of a squarefree polynomial
    mod q, by distinct-degree factorization.  q must be a prime below 2^63.
    """
    cdef uint64_t qq = q
    cdef int n = len(coeffs)
    cdef int cap = n + 2
    cdef uint64_t* f = <uint64_t*> calloc(cap, sizeof(uint64_t))
    cdef uint64_t* h = <uint64_t*> calloc(cap, sizeof(uint64_t))
    cdef uint64_t* g = <uint64_t*> calloc(cap, sizeof(uint64_t))
    cdef uint64_t* tmp = <uint64_t*> calloc(cap, sizeof(uint64_t))
    cdef uint64_t* base = <uint64_t*> calloc(cap, sizeof(uint64_t))
    cdef uint64_t* scratch = <uint64_t*> calloc(2 * cap + 2, sizeof(uint64_t))
    if not (f and h and g and tmp and base and scratch):
        free(f); free(h); free(g); free(tmp); free(base); free(scratch)
        raise MemoryError()
    try:
        return _ddf(coeffs, qq, n, f, h, g, tmp, base, scratch)
    finally:
        free(f); free(h); free(g); free(tmp); free(base); free(scratch)


cdef _ddf(coeffs, uint64_t q, int n,
          uint64_t* f, uint64_t* h, uint64_t* g,
          uint64_t* tmp, uint64_t* base, uint64_t* scratch):
    cdef int i, df, dg, d
    cdef uint64_t inv, e
    for i in range(n):
        f[i] = <uint64_t> (coeffs[i] % q)
    df = deg(f, n - 1)
    if df < 1:
        raise ValueError("polynomial is constant mod q")
    if f[df] != 1:
        inv = invmod(f[df], q)
        for i in range(df + 1):
            f[i] = mulmod(f[i], inv, q)
    # squarefree check: gcd(f, f') must be constant
    for i in range(1, df + 1):
        g[i - 1] = mulmod(f[i], i % q, q)
    for i in range(df, n + 1):
        g[i] = 0
    memcpy(tmp, f, (df + 1) * sizeof(uint64_t))
    if gcd_into(tmp, df, g, deg(g, df - 1), q) != 0:
        raise ValueError("polynomial is not squarefree mod q")

    degrees = []
    # remaining factor lives in f (degree df); h tracks x^(q^d) mod f
    memset(h, 0, (n + 2) * sizeof(uint64_t))
    h[1] = 1
    rem_inplace(h, 1, f, df, q)
    d = 0
    while 2 * (d + 1) <= df:
        d += 1
        # h <- h^q mod f
        memcpy(base, h, df * sizeof(uint64_t))
        memset(tmp, 0, (df + 1) * sizeof(uint64_t))
        tmp[0] = 1
        e = q
        while e:
            if e & 1:
                mulmod_poly(tmp, deg(tmp, df - 1), base, deg(base, df - 1),
                            f, df, q, tmp, scratch)
            e >>= 1
            if e:
                mulmod_poly(base, deg(base, df - 1), base, deg(base, df - 1),
                            f, df, q, base, scratch)
        memcpy(h, tmp, df * sizeof(uint64_t))
        # degree-d part: gcd(f, h - x)
        memcpy(g, h, df * sizeof(uint64_t))
        g[df] = 0
        g[1] = submod(g[1], 1, q)
        memcpy(tmp, f, (df + 1) * sizeof(uint64_t))
        dg = gcd_into(tmp, df, g, deg(g, df - 1), q)
        if dg > 0:
            for i in range(dg // d):
                degrees.append(d)
            quo_into(f, df, tmp, dg, q, scratch)
            df -= dg
            if df == 0:
                break
            rem_inplace(h, df + dg - 1, f, df, q)
    if df > 0:
        degrees.append(df)
    degrees.sort()
    return degrees


def rank_mod(rows, p):
    """Rank of an integer matrix mod p, plus the indices of the rows kept as
    pivots (greedy: a row is kept iff independent of the kept rows before
    it).  p must be a prime below 2^63."""
    cdef uint64_t pp = p
    cdef int nrows = len(rows)
    if nrows == 0:
        return 0, []
    cdef int ncols = len(rows[0])
    cdef uint64_t* piv = <uint64_t*> malloc(ncols * ncols * sizeof(uint64_t))
    cdef int* pivcol = <int*> malloc(ncols * sizeof(int))
    cdef uint64_t* v = <uint64_t*> malloc(ncols * sizeof(uint64_t))
    if not (piv and pivcol and v):
        free(piv); free(pivcol); free(v)
        raise MemoryError()
    kept = []
    cdef int rank = 0, idx, j, k, lead
    cdef uint64_t c, inv
    try:
        for idx in range(nrows):
            row = rows[idx]
            for j in range(ncols):
                v[j] = <uint64_t> (row[j] % p)
            for k in range(rank):
                c = v[pivcol[k]]
                if c:
                    for j in range(ncols):
                        v[j] = submod(v[j], mulmod(c, piv[k * ncols + j], pp), pp)
            lead = -1
            for j in range(ncols):
                if v[j]:
                    lead = j
                    break
            if lead < 0:
                continue
            inv = invmod(v[lead], pp)
            for j in range(ncols):
                piv[rank * ncols + j] = mulmod(v[j], inv, pp)
            pivcol[rank] = lead
            rank += 1
            kept.append(idx)
            if rank == ncols:
                break
        return rank, kept
    finally:
        free(piv); free(pivcol); free(v)
