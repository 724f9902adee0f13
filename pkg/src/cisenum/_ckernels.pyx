# cython: language_level=3, boundscheck=False, wraparound=False, initializedcheck=False, cdivision=True
"""Compiled enumeration kernels; drop-in for ``_pykernels``."""

from libc.stdlib cimport malloc, calloc, free
from libc.stdint cimport int64_t

import numpy as np

NAME = "compiled"


cdef inline void _bump(dict hist, Py_ssize_t gap):
    hist[gap] = hist.get(gap, 0) + 1


cdef class _KDelta:
    cdef const int64_t[:] off
    cdef const int64_t[:] nbr
    cdef Py_ssize_t k
    cdef unsigned char* mark
    cdef unsigned char* mark_t
    cdef Py_ssize_t* S
    cdef Py_ssize_t* N
    cdef Py_ssize_t* F
    cdef Py_ssize_t* T
    cdef Py_ssize_t ns, nn, nf, nt
    cdef Py_ssize_t calls, gap, max_gap, emitted, top_calls, idle, max_tail
    cdef object emit
    cdef object hist

    def __cinit__(self, graph, Py_ssize_t k, emit, hist):
        cdef Py_ssize_t n = graph.n
        self.off = graph.offsets
        self.nbr = graph.neighbors
        self.k = k
        self.emit = emit
        self.hist = hist
        self.mark = <unsigned char*>calloc(n + 1, 1)
        self.mark_t = <unsigned char*>calloc(n + 1, 1)
        self.S = <Py_ssize_t*>malloc((k + 2) * sizeof(Py_ssize_t))
        self.T = <Py_ssize_t*>malloc((k + 2) * sizeof(Py_ssize_t))
        self.N = <Py_ssize_t*>malloc((n + 1) * sizeof(Py_ssize_t))
        self.F = <Py_ssize_t*>malloc((n + 1) * sizeof(Py_ssize_t))
        if not (self.mark and self.mark_t and self.S and self.T and self.N and self.F):
            raise MemoryError()

    def __dealloc__(self):
        free(self.mark)
        free(self.mark_t)
        free(self.S)
        free(self.T)
        free(self.N)
        free(self.F)

    cdef int found(self, bint with_t) except -1:
        cdef Py_ssize_t i
        if self.gap > self.max_gap:
            self.max_gap = self.gap
        if self.hist is not None:
            _bump(self.hist, self.gap)
        self.gap = 0
        self.emitted += 1
        if self.emit is not None:
            sol = [self.S[i] for i in range(self.ns)]
            if with_t:
                sol.extend([self.T[i] for i in range(self.nt)])
            self.emit(tuple(sol))
        return 0

    cdef int rec(self, Py_ssize_t ell) except -1:
        cdef Py_ssize_t depth = self.ns
        cdef Py_ssize_t i, j, u, v, added, ell2
        cdef bint has_solution = False
        cdef bint grow
        cdef int child
        self.calls += 1
        self.gap += 1
        if depth == self.k:
            self.found(False)
            return 1
        if depth + self.nt == self.k:
            self.found(True)
            for i in range(self.nt):
                self.mark_t[self.T[i]] = 0
            self.nt = 0
            has_solution = True
        grow = depth + 1 < self.k
        for i in range(ell):
            self.nf -= 1
            u = self.F[self.nf]
            self.S[self.ns] = u
            self.ns += 1
            added = 0
            ell2 = 0
            if grow:
                for j in range(self.off[u], self.off[u + 1]):
                    v = self.nbr[j]
                    if not self.mark[v]:
                        self.mark[v] = 1
                        added += 1
                        if self.mark_t[v]:
                            self.N[self.nn] = v
                            self.nn += 1
                        else:
                            self.F[self.nf] = v
                            self.nf += 1
                            ell2 += 1
                if has_solution and self.nn:
                    ell2 += self.nn
                    while self.nn:
                        self.nn -= 1
                        self.F[self.nf] = self.N[self.nn]
                        self.nf += 1
            child = self.rec(ell2)
            if child:
                has_solution = True
            else:
                self.T[self.nt] = u
                self.nt += 1
                self.mark_t[u] = 1
            self.ns -= 1
            for j in range(added):
                self.nn -= 1
                self.mark[self.N[self.nn]] = 0
            self.N[self.nn] = u
            self.nn += 1
        return 1 if has_solution else 0

    cdef int run(self, const int64_t[:] order, trace) except -1:
        cdef Py_ssize_t size = order.shape[0]
        cdef Py_ssize_t idx, j, v, w, ell, before
        for idx in range(size - 1, -1, -1):
            v = order[idx]
            self.S[self.ns] = v
            self.ns += 1
            self.mark[v] = 1
            ell = 0
            if self.k > 1:
                for j in range(self.off[v], self.off[v + 1]):
                    w = self.nbr[j]
                    if not self.mark[w]:
                        self.mark[w] = 1
                        self.F[self.nf] = w
                        self.nf += 1
                        ell += 1
            if trace is not None:
                trace((v,), tuple([self.N[j] for j in range(self.nn)]),
                      tuple([self.F[j] for j in range(self.nf)]), ell)
            before = self.emitted
            self.gap = 0
            self.top_calls += 1
            self.rec(ell)
            if self.emitted == before:
                self.idle += 1
            if self.gap > self.max_tail:
                self.max_tail = self.gap
            self.ns -= 1
            for j in range(ell):
                self.nn -= 1
                self.mark[self.N[self.nn]] = 0
            self.F[self.nf] = v
            self.nf += 1
            if size - self.nf < self.k:
                break
        return 0

    def counters(self, dict out):
        out.update(calls=self.calls, max_gap=self.max_gap, top_calls=self.top_calls,
                   idle_top=self.idle, max_tail=self.max_tail, emitted=self.emitted)


def _counters():
    return {"calls": 0, "max_gap": 0, "top_calls": 0, "idle_top": 0, "max_tail": 0, "emitted": 0}


def kdelta_component(graph, order, Py_ssize_t k, emit=None, hist=None, trace=None, out=None):
    out = _counters() if out is None else out
    if len(order) < k:
        return out
    cdef _KDelta kernel = _KDelta(graph, k, emit, hist)
    try:
        kernel.run(np.ascontiguousarray(order, dtype=np.int64), trace)
    finally:
        kernel.counters(out)
    return out


cdef class _Simple:
    cdef const int64_t[:] off
    cdef const int64_t[:] nbr
    cdef Py_ssize_t k
    cdef Py_ssize_t* cnt
    cdef Py_ssize_t* S
    cdef Py_ssize_t* ext
    cdef Py_ssize_t* popped
    cdef Py_ssize_t ns, ne, np_, root
    cdef Py_ssize_t calls, gap, max_gap, emitted, top_calls, idle, max_tail
    cdef object emit
    cdef object hist

    def __cinit__(self, graph, Py_ssize_t k, emit, hist):
        cdef Py_ssize_t n = graph.n
        self.off = graph.offsets
        self.nbr = graph.neighbors
        self.k = k
        self.emit = emit
        self.hist = hist
        self.cnt = <Py_ssize_t*>calloc(n + 1, sizeof(Py_ssize_t))
        self.S = <Py_ssize_t*>malloc((k + 2) * sizeof(Py_ssize_t))
        self.ext = <Py_ssize_t*>malloc((n + 1) * sizeof(Py_ssize_t))
        self.popped = <Py_ssize_t*>malloc((n + 1) * sizeof(Py_ssize_t))
        if not (self.cnt and self.S and self.ext and self.popped):
            raise MemoryError()

    def __dealloc__(self):
        free(self.cnt)
        free(self.S)
        free(self.ext)
        free(self.popped)

    cdef int rec(self, Py_ssize_t lo) except -1:
        cdef Py_ssize_t i, j, u, w, c, base, mine
        cdef bint found = False
        cdef bint grow
        cdef int ok
        self.calls += 1
        self.gap += 1
        if self.ns == self.k:
            if self.gap > self.max_gap:
                self.max_gap = self.gap
            if self.hist is not None:
                _bump(self.hist, self.gap)
            self.gap = 0
            self.emitted += 1
            if self.emit is not None:
                self.emit(tuple([self.S[i] for i in range(self.ns)]))
            return 1
        mine = self.np_
        grow = self.ns + 1 < self.k
        while self.ne > lo:
            self.ne -= 1
            w = self.ext[self.ne]
            self.popped[self.np_] = w
            self.np_ += 1
            self.S[self.ns] = w
            self.ns += 1
            base = self.ne
            if grow:
                for j in range(self.off[w], self.off[w + 1]):
                    u = self.nbr[j]
                    c = self.cnt[u]
                    self.cnt[u] = c + 1
                    if c == 0 and u > self.root:
                        self.ext[self.ne] = u
                        self.ne += 1
            ok = self.rec(lo)
            self.ne = base
            if grow:
                for j in range(self.off[w], self.off[w + 1]):
                    self.cnt[self.nbr[j]] -= 1
            self.ns -= 1
            if not ok:
                break
            found = True
        while self.np_ > mine:
            self.np_ -= 1
            self.ext[self.ne] = self.popped[self.np_]
            self.ne += 1
        return 1 if found else 0

    cdef int run(self, const int64_t[:] vertices) except -1:
        cdef Py_ssize_t idx, j, v, u, before
        for idx in range(vertices.shape[0]):
            v = vertices[idx]
            self.root = v
            self.S[0] = v
            self.ns = 1
            self.ne = 0
            for j in range(self.off[v], self.off[v + 1]):
                u = self.nbr[j]
                self.cnt[u] += 1
                if u > v and self.k > 1:
                    self.ext[self.ne] = u
                    self.ne += 1
            before = self.emitted
            self.gap = 0
            self.top_calls += 1
            self.rec(0)
            if self.emitted == before:
                self.idle += 1
            for j in range(self.off[v], self.off[v + 1]):
                self.cnt[self.nbr[j]] -= 1
            self.ns = 0
        return 0

    def counters(self, dict out):
        out.update(calls=self.calls, max_gap=self.max_gap, top_calls=self.top_calls,
                   idle_top=self.idle, max_tail=0, emitted=self.emitted)


def simple_component(graph, vertices, Py_ssize_t k, emit=None, hist=None, out=None):
    out = _counters() if out is None else out
    if len(vertices) < k:
        return out
    cdef _Simple kernel = _Simple(graph, k, emit, hist)
    try:
        kernel.run(np.ascontiguousarray(vertices, dtype=np.int64))
    finally:
        kernel.counters(out)
    return out
