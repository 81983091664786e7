# cython: boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled twin of ``_pykernels``.

Buffers are int64.  The caller checks that every bounding quantity fits
(``nahm.LatticeData.fits_int64``).  With ``modulus == 0`` series
coefficients are checked on every addition and the call raises
``OverflowError`` instead of wrapping; with a modulus below 2**62 all
coefficient arithmetic is reduced and cannot overflow.
"""

from libc.stdint cimport int64_t
from libc.stdlib cimport malloc, calloc, free
from libc.string cimport memcpy
from libc.math cimport sqrt

cdef int64_t LIMIT = 4611686018427387904  # 2**62


cdef struct Ctx:
    int d
    int order
    int64_t W
    int64_t B
    int64_t* den
    int64_t* a
    int64_t* c
    int64_t* m
    int64_t* bufs      # level i buffer at bufs + i*(order+1)
    int64_t* acc
    char* top_mask
    int64_t ntop_mask
    int64_t points
    int64_t p
    int overflow


cdef inline int64_t floordiv(int64_t p, int64_t q) nogil:
    cdef int64_t r = p / q
    if (p % q != 0) and ((p < 0) != (q < 0)):
        r -= 1
    return r


cdef inline int64_t isqrt64(int64_t v) nogil:
    cdef int64_t r = <int64_t> sqrt(<double> v)
    while r > 0 and r * r > v:
        r -= 1
    while (r + 1) * (r + 1) <= v:
        r += 1
    return r


cdef inline int add_into(Ctx* ctx, int64_t* dst, int64_t v) nogil:
    cdef int64_t u = dst[0]
    if ctx.p:
        u += v
        if u >= ctx.p:
            u -= ctx.p
    else:
        if u > LIMIT - v:
            ctx.overflow = 1
            return 1
        u += v
    dst[0] = u
    return 0


cdef void rec(Ctx* ctx, int i, int64_t P, int64_t plen) nogil:
    cdef int d = ctx.d
    cdef int order = ctx.order
    cdef int64_t stride = order + 1
    cdef int64_t* parent = ctx.bufs + (i + 1) * stride
    cdef int64_t* run
    cdef int64_t Q, s, r, dn, lo, hi, x, j, t, Y, P2, R, ci
    if ctx.overflow:
        return
    if i < 0:
        Q = P / ctx.W
        ctx.points += 1
        for t in range(order - Q + 1):
            if add_into(ctx, ctx.acc + Q + t, parent[t]):
                return
        return
    s = 0
    for j in range(i + 1, d):
        s += ctx.a[i * d + j] * ctx.m[j]
    ci = ctx.c[i]
    r = isqrt64((ctx.B - P) / ci)
    dn = ctx.den[i]
    lo = -floordiv(r + s, dn)
    if lo < 0:
        lo = 0
    hi = floordiv(r - s, dn)
    if hi < lo:
        return
    run = ctx.bufs + i * stride
    memcpy(run, parent, plen * sizeof(int64_t))
    for j in range(1, lo + 1):
        if j >= plen:
            break
        for t in range(j, plen):
            if add_into(ctx, run + t, run[t - j]):
                return
    for x in range(lo, hi + 1):
        if x > lo and x < plen:
            for t in range(x, plen):
                if add_into(ctx, run + t, run[t - x]):
                    return
        if i == d - 1 and ctx.top_mask != NULL:
            if x >= ctx.ntop_mask or not ctx.top_mask[x]:
                continue
        Y = dn * x + s
        P2 = P + ci * Y * Y
        R = order - (-floordiv(-P2, ctx.W))
        ctx.m[i] = x
        # children read their parent from level i's slot, which stays
        # intact below index R+1 <= plen until the next x step
        rec(ctx, i - 1, P2, R + 1)
        if ctx.overflow:
            return
    ctx.m[i] = 0


def nahm_accumulate(int d, den, a, c, W, int order, top_values=None, modulus=0):
    cdef Ctx ctx
    cdef int64_t stride = order + 1
    cdef int64_t i, P
    if d == 0:
        return [1 % modulus if modulus else 1] + [0] * order, 1
    if modulus < 0 or modulus >= LIMIT:
        raise ValueError("modulus must lie in [0, 2**62)")
    ctx.p = modulus
    ctx.d = d
    ctx.order = order
    ctx.W = W
    ctx.B = W * order
    ctx.points = 0
    ctx.overflow = 0
    ctx.den = <int64_t*> malloc(d * sizeof(int64_t))
    ctx.a = <int64_t*> malloc(d * d * sizeof(int64_t))
    ctx.c = <int64_t*> malloc(d * sizeof(int64_t))
    ctx.m = <int64_t*> calloc(d, sizeof(int64_t))
    ctx.bufs = <int64_t*> calloc((d + 1) * stride, sizeof(int64_t))
    ctx.acc = <int64_t*> calloc(stride, sizeof(int64_t))
    ctx.top_mask = NULL
    ctx.ntop_mask = 0
    try:
        for i in range(d):
            ctx.den[i] = den[i]
            ctx.c[i] = c[i]
        for i in range(d * d):
            ctx.a[i] = a[i]
        if top_values is not None:
            ctx.ntop_mask = max(top_values, default=-1) + 1
            ctx.top_mask = <char*> calloc(ctx.ntop_mask + 1, sizeof(char))
            for i in top_values:
                if i >= 0:
                    ctx.top_mask[i] = 1
        ctx.bufs[d * stride] = 1 % modulus if modulus else 1
        with nogil:
            rec(&ctx, d - 1, 0, stride)
        if ctx.overflow:
            raise OverflowError("coefficient exceeded the int64 kernel range")
        return [ctx.acc[i] for i in range(stride)], ctx.points
    finally:
        free(ctx.den)
        free(ctx.a)
        free(ctx.c)
        free(ctx.m)
        free(ctx.bufs)
        free(ctx.acc)
        if ctx.top_mask != NULL:
            free(ctx.top_mask)
