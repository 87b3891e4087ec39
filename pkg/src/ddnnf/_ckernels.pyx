# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled counting-graph sweeps.

Same contract as ``_pykernels``. Each sweep first runs on 64-bit unsigned
words with overflow checks; on overflow it reruns with Python integers, so
results stay exact for any count.
"""

from libc.stdint cimport uint64_t, int64_t
from libc.stdlib cimport malloc, free

cdef extern from *:
    """
    static inline int u64_mul(unsigned long long a, unsigned long long b, unsigned long long *r) {
        return __builtin_mul_overflow(a, b, r);
    }
    static inline int u64_add(unsigned long long a, unsigned long long b, unsigned long long *r) {
        return __builtin_add_overflow(a, b, r);
    }
    """
    int u64_mul(unsigned long long a, unsigned long long b, unsigned long long *r) nogil
    int u64_add(unsigned long long a, unsigned long long b, unsigned long long *r) nogil

cdef enum:
    AND = 3
    OR = 4

IMPLEMENTATION = "cython"


cdef int _eval_u64(const signed char[:] kind, const int64_t[:] ptr, const int64_t[:] idx,
                   unsigned long long *val) noexcept nogil:
    cdef Py_ssize_t n = kind.shape[0], i, j
    cdef unsigned long long v
    cdef signed char k
    for i in range(n):
        k = kind[i]
        if k == AND:
            v = 1
            for j in range(ptr[i], ptr[i + 1]):
                if u64_mul(v, val[idx[j]], &v):
                    return 1
            val[i] = v
        elif k == OR:
            v = 0
            for j in range(ptr[i], ptr[i + 1]):
                if u64_add(v, val[idx[j]], &v):
                    return 1
            val[i] = v
    return 0


cdef Py_ssize_t _eval_obj(const signed char[:] kind, const int64_t[:] ptr, const int64_t[:] idx,
                          list val):
    cdef Py_ssize_t n = kind.shape[0], i, j
    cdef object v
    cdef signed char k
    for i in range(n):
        k = kind[i]
        if k == AND:
            v = 1
            for j in range(ptr[i], ptr[i + 1]):
                v = v * val[idx[j]]
            val[i] = v
        elif k == OR:
            v = 0
            for j in range(ptr[i], ptr[i + 1]):
                v = v + val[idx[j]]
            val[i] = v
    return n


def evaluate(const signed char[:] kind, const int64_t[:] ptr, const int64_t[:] idx, list val):
    cdef Py_ssize_t n = kind.shape[0], i
    cdef unsigned long long *buf = <unsigned long long *> malloc(max(n, 1) * sizeof(unsigned long long))
    cdef int overflow = 0
    if buf == NULL:
        raise MemoryError()
    try:
        for i in range(n):
            if kind[i] != AND and kind[i] != OR:
                buf[i] = val[i]
        with nogil:
            overflow = _eval_u64(kind, ptr, idx, buf)
        if not overflow:
            for i in range(n):
                val[i] = buf[i]
            return n
    finally:
        free(buf)
    return _eval_obj(kind, ptr, idx, val)


cdef int _diff_u64(const signed char[:] kind, const int64_t[:] ptr, const int64_t[:] idx,
                   const unsigned long long *val, unsigned long long *pd,
                   unsigned long long *suffix) noexcept nogil:
    cdef Py_ssize_t n = kind.shape[0], i, j, lo, hi, m, t
    cdef unsigned long long p, prefix, term
    cdef signed char k
    for i in range(n):
        pd[i] = 0
    pd[n - 1] = 1
    for i in range(n - 1, -1, -1):
        k = kind[i]
        if k == OR:
            p = pd[i]
            for j in range(ptr[i], ptr[i + 1]):
                if u64_add(pd[idx[j]], p, &pd[idx[j]]):
                    return 1
        elif k == AND:
            p = pd[i]
            lo = ptr[i]
            hi = ptr[i + 1]
            m = hi - lo
            suffix[m] = 1
            for t in range(m - 1, -1, -1):
                if u64_mul(suffix[t + 1], val[idx[lo + t]], &suffix[t]):
                    return 1
            prefix = p
            for t in range(m):
                j = idx[lo + t]
                if u64_mul(prefix, suffix[t + 1], &term):
                    return 1
                if u64_add(pd[j], term, &pd[j]):
                    return 1
                if t + 1 < m and u64_mul(prefix, val[j], &prefix):
                    return 1
    return 0


cdef _diff_obj(const signed char[:] kind, const int64_t[:] ptr, const int64_t[:] idx, list val):
    cdef Py_ssize_t n = kind.shape[0], i, j, lo, hi, m, t
    cdef object p, prefix
    cdef list pd = [0] * n
    cdef list suffix
    cdef signed char k
    pd[n - 1] = 1
    for i in range(n - 1, -1, -1):
        k = kind[i]
        if k == OR:
            p = pd[i]
            for j in range(ptr[i], ptr[i + 1]):
                pd[idx[j]] = pd[idx[j]] + p
        elif k == AND:
            p = pd[i]
            lo = ptr[i]
            hi = ptr[i + 1]
            m = hi - lo
            suffix = [1] * (m + 1)
            for t in range(m - 1, -1, -1):
                suffix[t] = suffix[t + 1] * val[idx[lo + t]]
            prefix = p
            for t in range(m):
                j = idx[lo + t]
                pd[j] = pd[j] + prefix * suffix[t + 1]
                prefix = prefix * val[j]
    return pd


def differentiate(const signed char[:] kind, const int64_t[:] ptr, const int64_t[:] idx, list val):
    cdef Py_ssize_t n = kind.shape[0], i, max_arity = 0
    cdef Py_ssize_t edges = idx.shape[0]
    cdef unsigned long long *vbuf
    cdef unsigned long long *pbuf
    cdef unsigned long long *sbuf
    cdef int overflow = 1
    for i in range(n):
        if ptr[i + 1] - ptr[i] > max_arity:
            max_arity = ptr[i + 1] - ptr[i]
    vbuf = <unsigned long long *> malloc(max(n, 1) * sizeof(unsigned long long))
    pbuf = <unsigned long long *> malloc(max(n, 1) * sizeof(unsigned long long))
    sbuf = <unsigned long long *> malloc((max_arity + 1) * sizeof(unsigned long long))
    try:
        if vbuf == NULL or pbuf == NULL or sbuf == NULL:
            raise MemoryError()
        try:
            for i in range(n):
                vbuf[i] = val[i]
        except OverflowError:
            pass
        else:
            with nogil:
                overflow = _diff_u64(kind, ptr, idx, vbuf, pbuf, sbuf)
        if not overflow:
            return [pbuf[i] for i in range(n)], edges
    finally:
        free(vbuf)
        free(pbuf)
        free(sbuf)
    return _diff_obj(kind, ptr, idx, val), edges
