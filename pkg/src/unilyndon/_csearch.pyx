# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled candidate search; same algorithm as ``_pysearch``."""

from libc.stdlib cimport malloc, free
from libc.string cimport memset

from math import factorial


cdef int popcount(unsigned int x) nogil:
    cdef int c = 0
    while x:
        x &= x - 1
        c += 1
    return c


cdef class _Search:
    cdef int n, N, npre
    cdef int *w
    cdef int *lcs
    cdef int *hist
    cdef int *ge
    cdef unsigned int *smask
    cdef unsigned int *psm
    cdef long budget[16]
    cdef int prefix[64]
    cdef list out

    def __cinit__(self, int n, tuple prefix):
        cdef int k
        self.n = n
        self.N = factorial(n)
        self.npre = len(prefix)
        for k in range(self.npre):
            self.prefix[k] = prefix[k]
        for k in range(n + 1):
            self.budget[k] = factorial(n - k)
        N = self.N
        self.w = <int *> malloc(N * sizeof(int))
        self.lcs = <int *> malloc(N * N * sizeof(int))
        self.hist = <int *> malloc((N + 3) * sizeof(int))
        self.ge = <int *> malloc((N + 3) * sizeof(int))
        self.smask = <unsigned int *> malloc((N + 3) * sizeof(unsigned int))
        self.psm = <unsigned int *> malloc((N + 3) * sizeof(unsigned int))
        if not (self.w and self.lcs and self.hist and self.ge and self.smask and self.psm):
            raise MemoryError()
        memset(self.w, 0, N * sizeof(int))
        memset(self.lcs, 0, N * N * sizeof(int))
        self.out = []

    def __dealloc__(self):
        free(self.w)
        free(self.lcs)
        free(self.hist)
        free(self.ge)
        free(self.smask)
        free(self.psm)

    cdef bint ok_at(self, int t):
        cdef int *w = self.w
        cdef int N = self.N
        cdef int a = w[t]
        cdef int *row = self.lcs + t * N
        cdef int *prev = self.lcs + (t - 1) * N
        cdef int e, m, L, f
        cdef unsigned int mask, zm
        for e in range(t + 2):
            self.hist[e] = 0
        for e in range(t):
            if w[e] != a:
                m = 0
            elif e:
                m = prev[e - 1] + 1
            else:
                m = 1
            row[e] = m
            self.hist[m] += 1
        self.ge[t + 2] = 0
        self.ge[t + 1] = 0
        L = t + 1
        while L >= 1:
            self.ge[L] = self.ge[L + 1] + self.hist[L]
            L -= 1
        mask = 0
        for L in range(1, t + 2):
            mask |= 1u << w[t - L + 1]
            self.smask[L] = mask
            if 1 + self.ge[L] > self.budget[popcount(mask)]:
                return False
        for e in range(t):
            m = row[e]
            if m and e - m >= 0:
                zm = self.smask[m]
                if (zm >> w[t - m]) & 1 or (zm >> w[e - m]) & 1:
                    return False
        if t:
            mask = 0
            for L in range(1, t + 1):
                mask |= 1u << w[t - L]
                self.psm[L] = mask
            for e in range(t - 1):
                m = prev[e]
                if m:
                    f = w[e + 1]
                    if f != a:
                        zm = self.psm[m]
                        if (zm >> a) & 1 or (zm >> f) & 1:
                            return False
        return True

    cdef void rec(self, int t, int p):
        cdef int a, lo, hi
        cdef int *w = self.w
        if t == self.N:
            if p == self.N:
                self.out.append(tuple([w[k] for k in range(self.N)]))
            return
        lo = w[t - p] if t else 1
        hi = 1 if t == 0 else self.n
        for a in range(lo, hi + 1):
            if t < self.npre and a != self.prefix[t]:
                continue
            w[t] = a
            if self.ok_at(t):
                self.rec(t + 1, p if (t and a == w[t - p]) else t + 1)
        w[t] = 0


def search_candidates(int n, prefix=()):
    prefix = tuple(prefix)
    if n < 1 or n > 5:
        raise ValueError("compiled search supports 1 <= n <= 5")
    if len(prefix) > 64:
        raise ValueError("prefix too long")
    if n == 1:
        return [(1,)] if prefix in ((), (1,)) else []
    s = _Search(n, prefix)
    s.rec(0, 1)
    return s.out
