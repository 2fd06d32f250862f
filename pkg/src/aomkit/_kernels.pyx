# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels. Same signatures and results as ``_kernels_py``."""

from libc.stdint cimport uint64_t, int64_t
from libc.stdlib cimport malloc, free, qsort


cdef int _cmp_u64(const void *a, const void *b) noexcept nogil:
    cdef uint64_t x = (<const uint64_t *> a)[0]
    cdef uint64_t y = (<const uint64_t *> b)[0]
    return (x > y) - (x < y)


cdef inline uint64_t _key(uint64_t p, uint64_t m) noexcept nogil:
    return (p << 32) | m


cdef inline bint _member(const uint64_t *keys, Py_ssize_t n, uint64_t k) noexcept nogil:
    cdef Py_ssize_t lo = 0, hi = n, mid
    while lo < hi:
        mid = (lo + hi) >> 1
        if keys[mid] < k:
            lo = mid + 1
        else:
            hi = mid
    return lo < n and keys[lo] == k


cdef class _Buf:
    """Owned C array of masks."""
    cdef uint64_t *data
    cdef Py_ssize_t n

    def __cinit__(self, seq):
        cdef Py_ssize_t i
        self.n = len(seq)
        self.data = <uint64_t *> malloc(max(self.n, 1) * sizeof(uint64_t))
        if self.data == NULL:
            raise MemoryError()
        for i in range(self.n):
            self.data[i] = seq[i]

    def __dealloc__(self):
        free(self.data)


cdef _Buf _target(tp, tm):
    cdef _Buf t = _Buf([(<uint64_t> p << 32) | <uint64_t> m for p, m in zip(tp, tm)])
    qsort(t.data, t.n, sizeof(uint64_t), _cmp_u64)
    return t


def first_composition_failure(lp, lm, rp, rm, tp, tm, negate_right=False):
    cdef _Buf LP = _Buf(lp), LM = _Buf(lm)
    cdef _Buf RP, RM
    if negate_right:
        RP = _Buf(rm)
        RM = _Buf(rp)
    else:
        RP = _Buf(rp)
        RM = _Buf(rm)
    cdef _Buf T = _target(tp, tm)
    cdef Py_ssize_t i, j
    cdef uint64_t xp, xm, fr
    with nogil:
        for i in range(LP.n):
            xp = LP.data[i]
            xm = LM.data[i]
            fr = ~(xp | xm)
            for j in range(RP.n):
                if not _member(T.data, T.n, _key(xp | (RP.data[j] & fr), xm | (RM.data[j] & fr))):
                    with gil:
                        return i, j
    return None


def stabilizer_scan(cp, cm, wp, wm, tp, tm, bint symmetric):
    cdef _Buf CP = _Buf(cp), CM = _Buf(cm), WP = _Buf(wp), WM = _Buf(wm)
    cdef _Buf T = _target(tp, tm)
    cdef Py_ssize_t k, j, nkeep = 0
    cdef uint64_t p, m, fr
    cdef bint ok
    cdef int64_t *keep = <int64_t *> malloc(max(CP.n, 1) * sizeof(int64_t))
    if keep == NULL:
        raise MemoryError()
    try:
        with nogil:
            for k in range(CP.n):
                p = CP.data[k]
                m = CM.data[k]
                fr = ~(p | m)
                ok = True
                for j in range(WP.n):
                    if not _member(T.data, T.n, _key(p | (WP.data[j] & fr), m | (WM.data[j] & fr))):
                        ok = False
                        break
                    if symmetric and not _member(T.data, T.n, _key(m | (WP.data[j] & fr), p | (WM.data[j] & fr))):
                        ok = False
                        break
                if ok:
                    keep[nkeep] = k
                    nkeep += 1
        return [keep[k] for k in range(nkeep)]
    finally:
        free(keep)


cdef inline uint64_t _cover(uint64_t xp, uint64_t xm, uint64_t yp, uint64_t ym,
                            const uint64_t *wp, const uint64_t *wm, Py_ssize_t n) noexcept nogil:
    cdef uint64_t s = (xp & ym) | (xm & yp)
    if s == 0:
        return 0
    cdef uint64_t off = ~s
    cdef uint64_t fr = ~(xp | xm)
    cdef uint64_t cp = (xp | (yp & fr)) & off
    cdef uint64_t cm = (xm | (ym & fr)) & off
    cdef uint64_t cover = 0
    cdef Py_ssize_t k
    for k in range(n):
        if (wp[k] & off) == cp and (wm[k] & off) == cm:
            cover |= s & ~(wp[k] | wm[k])
            if cover == s:
                break
    return cover


def elimination_cover(xp, xm, yp, ym, wp, wm):
    cdef _Buf WP = _Buf(wp), WM = _Buf(wm)
    return _cover(xp, xm, yp, ym, WP.data, WM.data, WP.n)


def first_elimination_failure(wp, wm, bint equal_support, bint per_element):
    cdef _Buf WP = _Buf(wp), WM = _Buf(wm)
    cdef Py_ssize_t n = WP.n, i, j
    cdef uint64_t xp, xm, yp, ym, s, cover, missing
    cdef int e
    with nogil:
        for i in range(n):
            xp = WP.data[i]
            xm = WM.data[i]
            for j in range(n):
                yp = WP.data[j]
                ym = WM.data[j]
                if equal_support and ((xp | xm) != (yp | ym) or i == j):
                    continue
                s = (xp & ym) | (xm & yp)
                if s == 0:
                    continue
                cover = _cover(xp, xm, yp, ym, WP.data, WM.data, n)
                if per_element:
                    missing = s & ~cover
                    if missing:
                        e = 0
                        while not (missing >> e) & 1:
                            e += 1
                        with gil:
                            return i, j, e
                elif cover == 0:
                    with gil:
                        return i, j, -1
    return None


def pair_sums(xp_list, xm_list, wp, wm, bint equal_support):
    cdef _Buf XP = _Buf(xp_list), XM = _Buf(xm_list), WP = _Buf(wp), WM = _Buf(wm)
    cdef Py_ssize_t n = XP.n, i, j
    cdef uint64_t xp, xm, yp, ym, s, fr
    out = []
    for i in range(n):
        xp = XP.data[i]
        xm = XM.data[i]
        fr = ~(xp | xm)
        for j in range(n):
            yp = XP.data[j]
            ym = XM.data[j]
            if equal_support and (xp | xm) != (yp | ym):
                continue
            if _cover(xp, xm, ym, yp, WP.data, WM.data, WP.n):
                continue
            if _cover(xm, xp, yp, ym, WP.data, WM.data, WP.n):
                continue
            s = (xp & yp) | (xm & ym)
            out.append((int((xp | (ym & fr)) & ~s), int((xm | (yp & fr)) & ~s)))
    return out
