# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=False
"""Compiled versions of the hot kernels in ``_kernels_py``.

Same signatures and results.  Coefficients and packed monomials stay Python
ints (they overflow 64 bits); the gain comes from typed loops and direct
dict/list access.
"""

import heapq

from cpython.dict cimport PyDict_GetItem, PyDict_SetItem, PyDict_DelItem
from cpython.ref cimport PyObject
from libc.stdlib cimport malloc, free


def laurent_mul(dict a, dict b):
    cdef dict out = {}
    cdef tuple ea, eb, e
    cdef object ca, cb, c
    cdef PyObject *old
    cdef Py_ssize_t k, n
    cdef list la, lb
    if len(a) < len(b):
        a, b = b, a
    la = list(a.items())
    lb = list(b.items())
    if not la:
        return out
    n = len(la[0][0])
    cdef long *buf = <long *> malloc((n if n else 1) * sizeof(long))
    try:
        for eb, cb in lb:
            for k in range(n):
                buf[k] = eb[k]
            for ea, ca in la:
                e = tuple([<long> ea[k] + buf[k] for k in range(n)])
                old = PyDict_GetItem(out, e)
                if old is NULL:
                    c = ca * cb
                else:
                    c = <object> old + ca * cb
                if c:
                    PyDict_SetItem(out, e, c)
                elif old is not NULL:
                    PyDict_DelItem(out, e)
    finally:
        free(buf)
    return out


def demazure_terms(dict terms, Py_ssize_t i, root):
    cdef dict out = {}
    cdef Py_ssize_t r = len(root), k, t, count, step
    cdef long n
    cdef object c, cc, v
    cdef tuple lam, e
    cdef PyObject *old
    cdef long *cur = <long *> malloc((r if r else 1) * sizeof(long))
    cdef long *rt = <long *> malloc((r if r else 1) * sizeof(long))
    try:
        for k in range(r):
            rt[k] = root[k]
        for lam, c in terms.items():
            n = lam[i]
            if n >= 0:
                step, count, cc = -1, n + 1, c
                for k in range(r):
                    cur[k] = lam[k]
            elif n == -1:
                continue
            else:
                step, count, cc = 1, -n - 1, -c
                for k in range(r):
                    cur[k] = <long> lam[k] + rt[k]
            for t in range(count):
                e = tuple([cur[k] for k in range(r)])
                old = PyDict_GetItem(out, e)
                if old is NULL:
                    v = cc
                else:
                    v = <object> old + cc
                if v:
                    PyDict_SetItem(out, e, v)
                elif old is not NULL:
                    PyDict_DelItem(out, e)
                for k in range(r):
                    cur[k] += step * rt[k]
    finally:
        free(cur)
        free(rt)
    return out


def reduce_poly(f, list lms, list lcs, list tails, expmask, guard, bint full):
    cdef dict work = dict(f)
    cdef list heap = [-m for m in work]
    cdef dict out = {}
    cdef Py_ssize_t nred = len(lms), k
    cdef object m, c, me, lm, lc, q, rem, shift, tm, tc, nm, v
    cdef PyObject *old
    cdef list masked = [lm & expmask for lm in lms]
    heapq.heapify(heap)
    heappop = heapq.heappop
    heappush = heapq.heappush
    while heap:
        m = -heappop(heap)
        old = PyDict_GetItem(work, m)
        if old is NULL:
            continue
        c = <object> old
        PyDict_DelItem(work, m)
        if not c:
            continue
        me = (m & expmask) | guard
        for k in range(nred):
            if ((me - masked[k]) & guard) == guard:
                lc = lcs[k]
                q, rem = divmod(c, lc)
                if 2 * abs(rem) > abs(lc):
                    rem -= lc
                    q += 1
                if q:
                    shift = m - lms[k]
                    for tm, tc in tails[k]:
                        nm = tm + shift
                        old = PyDict_GetItem(work, nm)
                        if old is NULL:
                            PyDict_SetItem(work, nm, -q * tc)
                            heappush(heap, -nm)
                        else:
                            # zero values stay as markers, popped lazily
                            PyDict_SetItem(work, nm, <object> old - q * tc)
                c = rem
                if not c:
                    break
        if c:
            out[m] = c
            if not full:
                for mm, cc in work.items():
                    if cc:
                        out[mm] = cc
                return out
    return out
