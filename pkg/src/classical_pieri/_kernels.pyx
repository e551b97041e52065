# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled hot kernels; same API and semantics as ``_kernels_py``."""

from libc.stdlib cimport malloc, free

BACKEND = "cython"

cdef enum:
    MAXROWS = 64
    MAXLETTERS = 64


def is_horizontal_strip(tuple inner, tuple outer):
    cdef Py_ssize_t n_out = len(outer), n_in = len(inner), i
    cdef long o, a, nxt
    if n_in > n_out or n_out > n_in + 1:
        return False
    for i in range(n_out):
        o = outer[i]
        a = inner[i] if i < n_in else 0
        if a > o:
            return False
        if i + 1 < n_out:
            nxt = outer[i + 1]
            if nxt > a:
                return False
    return True


def is_vertical_strip(tuple inner, tuple outer):
    cdef Py_ssize_t n_out = len(outer), n_in = len(inner), i
    cdef long d
    if n_in > n_out:
        return False
    for i in range(n_out):
        d = <long>outer[i] - (<long>inner[i] if i < n_in else 0)
        if d < 0 or d > 1:
            return False
    return True


cdef struct LRState:
    int L
    int K
    int *outer
    int *mu
    int *weight
    int *totals      # totals[k], k = 1..K
    int *ends        # ends[row * (K + 1) + k]
    int *before      # before[row * (K + 1) + k]


cdef long long _fill_row(LRState *st, int i) nogil:
    cdef int k
    if i == st.L:
        for k in range(1, st.K + 1):
            if st.totals[k] != st.weight[k - 1]:
                return 0
        return 1
    cdef int base = i * (st.K + 1)
    for k in range(st.K + 1):
        st.before[base + k] = st.totals[k]
        st.ends[base + k] = st.mu[i]
    return _choose(st, i, 1, st.mu[i], st.outer[i] - st.mu[i])


cdef long long _choose(LRState *st, int i, int k, int pos, int remaining) nogil:
    cdef int top = i + 1 if i + 1 < st.K else st.K
    cdef int base = i * (st.K + 1)
    cdef int prev = (i - 1) * (st.K + 1)
    cdef int limit, max_c, c, kk
    cdef long long sub = 0
    if k > top:
        if remaining == 0:
            return _fill_row(st, i + 1)
        return 0
    if i > 0:
        limit = st.ends[prev + k - 1]
    else:
        limit = st.outer[i]
    max_c = remaining
    if limit - pos < max_c:
        max_c = limit - pos
    if st.weight[k - 1] - st.totals[k] < max_c:
        max_c = st.weight[k - 1] - st.totals[k]
    if k > 1 and st.before[base + k - 1] - st.totals[k] < max_c:
        max_c = st.before[base + k - 1] - st.totals[k]
    c = max_c
    while c >= 0:
        st.totals[k] += c
        for kk in range(k, st.K + 1):
            st.ends[base + kk] = pos + c
        sub += _choose(st, i, k + 1, pos + c, remaining - c)
        st.totals[k] -= c
        c -= 1
    return sub


def lr_coefficient(tuple outer, tuple inner, tuple weight):
    cdef int L = len(outer), K = len(weight), i
    cdef long long total_out = 0, total_in = 0, total_w = 0
    cdef LRState st
    cdef long long result
    if len(inner) > L:
        return 0
    for i in range(L):
        total_out += outer[i]
    for i in range(len(inner)):
        total_in += inner[i]
        if inner[i] > outer[i]:
            return 0
    for i in range(K):
        total_w += weight[i]
    if total_out != total_in + total_w:
        return 0
    if K == 0:
        return 1
    if L > MAXROWS or K > MAXLETTERS:
        from ._kernels_py import lr_coefficient as slow
        return slow(outer, inner, weight)
    st.L = L
    st.K = K
    st.outer = <int *>malloc(L * sizeof(int))
    st.mu = <int *>malloc(L * sizeof(int))
    st.weight = <int *>malloc(K * sizeof(int))
    st.totals = <int *>malloc((K + 1) * sizeof(int))
    st.ends = <int *>malloc(L * (K + 1) * sizeof(int))
    st.before = <int *>malloc(L * (K + 1) * sizeof(int))
    try:
        for i in range(L):
            st.outer[i] = outer[i]
            st.mu[i] = inner[i] if i < len(inner) else 0
        for i in range(K):
            st.weight[i] = weight[i]
        for i in range(K + 1):
            st.totals[i] = 0
        with nogil:
            result = _fill_row(&st, 0)
    finally:
        free(st.outer)
        free(st.mu)
        free(st.weight)
        free(st.totals)
        free(st.ends)
        free(st.before)
    return result


def laurent_mul(dict a, dict b):
    cdef dict out = {}
    cdef tuple ea, eb, e
    cdef object ca, cb, v
    cdef Py_ssize_t n, j
    cdef list buf
    if len(a) < len(b):
        a, b = b, a
    if not a or not b:
        return out
    n = len(next(iter(a)))
    for eb, cb in b.items():
        for ea, ca in a.items():
            buf = [None] * n
            for j in range(n):
                buf[j] = <long>ea[j] + <long>eb[j]
            e = tuple(buf)
            v = out.get(e, 0) + ca * cb
            if v:
                out[e] = v
            else:
                del out[e]
    return out


def laurent_add_scaled(dict acc, dict b, object scale, tuple shift=None):
    cdef tuple e, e2
    cdef object c, v
    cdef Py_ssize_t n, j
    cdef list buf
    if not scale:
        return
    if shift is None:
        for e, c in b.items():
            v = acc.get(e, 0) + scale * c
            if v:
                acc[e] = v
            else:
                del acc[e]
        return
    n = len(shift)
    for e, c in b.items():
        buf = [None] * n
        for j in range(n):
            buf[j] = <long>e[j] + <long>shift[j]
        e2 = tuple(buf)
        v = acc.get(e2, 0) + scale * c
        if v:
            acc[e2] = v
        else:
            del acc[e2]
