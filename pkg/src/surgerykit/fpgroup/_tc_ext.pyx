# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled HLT coset enumeration kernel.

Same procedure and definition order as ``_tc_py``; see that module for the
letter encoding.
"""

from libc.stdlib cimport malloc, realloc, free

cdef enum:
    MAX_DEDUCTIONS = 4096


cdef class _Enumerator:
    cdef int ncols
    cdef int n
    cdef int cap
    cdef long budget
    cdef bint exhausted
    cdef int *table
    cdef int *parent
    cdef int *ded_c
    cdef int *ded_x
    cdef int nded
    cdef int *queue
    cdef int qcap
    cdef int qlen
    # cyclic conjugates keyed by first letter
    cdef int *conj_data
    cdef int *conj_start
    cdef int *conj_len
    cdef int *letter_lo
    cdef int *letter_hi

    def __cinit__(self, int ngens, list relators, long budget):
        cdef int x, i, k, total, count, pos
        self.ncols = 2 * ngens
        self.budget = budget
        self.exhausted = False
        self.cap = 1024
        self.table = <int *> malloc(self.cap * self.ncols * sizeof(int))
        self.parent = <int *> malloc(self.cap * sizeof(int))
        self.ded_c = <int *> malloc(MAX_DEDUCTIONS * sizeof(int))
        self.ded_x = <int *> malloc(MAX_DEDUCTIONS * sizeof(int))
        self.qcap = 1024
        self.queue = <int *> malloc(self.qcap * sizeof(int))
        if not (self.table and self.parent and self.ded_c and self.ded_x and self.queue):
            raise MemoryError()
        for i in range(self.ncols):
            self.table[i] = -1
        self.parent[0] = 0
        self.n = 1
        self.nded = 0

        by_letter = [[] for _ in range(self.ncols)]
        for r in relators:
            if not r:
                continue
            inv = [y ^ 1 for y in reversed(r)]
            for w in (list(r), inv):
                for i in range(len(w)):
                    c = w[i:] + w[:i]
                    if c not in by_letter[c[0]]:
                        by_letter[c[0]].append(c)
        count = sum(len(b) for b in by_letter)
        total = sum(len(c) for b in by_letter for c in b)
        self.conj_data = <int *> malloc((total + 1) * sizeof(int))
        self.conj_start = <int *> malloc((count + 1) * sizeof(int))
        self.conj_len = <int *> malloc((count + 1) * sizeof(int))
        self.letter_lo = <int *> malloc((self.ncols + 1) * sizeof(int))
        self.letter_hi = <int *> malloc((self.ncols + 1) * sizeof(int))
        if not (self.conj_data and self.conj_start and self.conj_len and self.letter_lo and self.letter_hi):
            raise MemoryError()
        k = 0
        pos = 0
        for x in range(self.ncols):
            self.letter_lo[x] = k
            for c in by_letter[x]:
                self.conj_start[k] = pos
                self.conj_len[k] = len(c)
                for y in c:
                    self.conj_data[pos] = y
                    pos += 1
                k += 1
            self.letter_hi[x] = k

    def __dealloc__(self):
        free(self.table)
        free(self.parent)
        free(self.ded_c)
        free(self.ded_x)
        free(self.queue)
        free(self.conj_data)
        free(self.conj_start)
        free(self.conj_len)
        free(self.letter_lo)
        free(self.letter_hi)

    cdef inline int rep(self, int c) nogil:
        cdef int r = c, t
        while self.parent[r] != r:
            r = self.parent[r]
        while self.parent[c] != r:
            t = self.parent[c]
            self.parent[c] = r
            c = t
        return r

    cdef int qpush(self, int v) except -1:
        cdef int *q
        if self.qlen >= self.qcap:
            q = <int *> realloc(self.queue, 2 * self.qcap * sizeof(int))
            if not q:
                raise MemoryError()
            self.queue = q
            self.qcap *= 2
        self.queue[self.qlen] = v
        self.qlen += 1
        return 0

    cdef int merge(self, int a, int b) except -1:
        cdef int t
        a = self.rep(a)
        b = self.rep(b)
        if a == b:
            return 0
        if b < a:
            t = a
            a = b
            b = t
        self.parent[b] = a
        self.qpush(b)
        return 0

    cdef inline void push(self, int c, int x) nogil:
        if self.nded < MAX_DEDUCTIONS:
            self.ded_c[self.nded] = c
            self.ded_x[self.nded] = x
            self.nded += 1
        else:
            self.nded = 0

    cdef int coincidence(self, int a, int b) except -1:
        cdef int i = 0, g, x, xi, d, mu, nu, nc = self.ncols
        cdef int *T = self.table
        self.qlen = 0
        self.merge(a, b)
        while i < self.qlen:
            g = self.queue[i]
            i += 1
            for x in range(nc):
                d = T[g * nc + x]
                if d < 0:
                    continue
                xi = x ^ 1
                T[d * nc + xi] = -1
                mu = self.rep(g)
                nu = self.rep(d)
                if T[mu * nc + x] >= 0:
                    self.merge(nu, T[mu * nc + x])
                elif T[nu * nc + xi] >= 0:
                    self.merge(mu, T[nu * nc + xi])
                else:
                    T[mu * nc + x] = nu
                    T[nu * nc + xi] = mu
                    self.push(mu, x)
        return 0

    cdef int define(self, int c, int x) except -1:
        cdef int b, i, nc = self.ncols
        cdef int *t
        cdef int *p
        if self.n >= self.budget:
            self.exhausted = True
            return 1
        if self.n >= self.cap:
            t = <int *> realloc(self.table, 2 * self.cap * nc * sizeof(int))
            if not t:
                raise MemoryError()
            self.table = t
            p = <int *> realloc(self.parent, 2 * self.cap * sizeof(int))
            if not p:
                raise MemoryError()
            self.parent = p
            self.cap *= 2
        b = self.n
        self.n += 1
        for i in range(nc):
            self.table[b * nc + i] = -1
        self.parent[b] = b
        self.table[c * nc + x] = b
        self.table[b * nc + (x ^ 1)] = c
        self.push(c, x)
        return 0

    cdef int scan(self, int a, int *w, int length, bint fill) except -1:
        cdef int f = a, i = 0, b = a, j = length - 1, nc = self.ncols
        cdef int *T
        while True:
            T = self.table
            while i <= j and T[f * nc + w[i]] >= 0:
                f = T[f * nc + w[i]]
                i += 1
            if i > j:
                if f != b:
                    self.coincidence(f, b)
                return 0
            while j >= i and T[b * nc + (w[j] ^ 1)] >= 0:
                b = T[b * nc + (w[j] ^ 1)]
                j -= 1
            if j < i:
                self.coincidence(f, b)
                return 0
            if i == j:
                T[f * nc + w[i]] = b
                T[b * nc + (w[i] ^ 1)] = f
                self.push(f, w[i])
                return 0
            if not fill:
                return 0
            if self.define(f, w[i]):
                return 1

    cdef int process_deductions(self) except -1:
        cdef int c, x, d, k
        while self.nded > 0:
            self.nded -= 1
            c = self.ded_c[self.nded]
            x = self.ded_x[self.nded]
            if self.parent[c] != c:
                continue
            for k in range(self.letter_lo[x], self.letter_hi[x]):
                self.scan(c, self.conj_data + self.conj_start[k], self.conj_len[k], False)
                if self.parent[c] != c:
                    break
            d = self.table[c * self.ncols + x]
            if d >= 0 and self.parent[d] == d:
                for k in range(self.letter_lo[x ^ 1], self.letter_hi[x ^ 1]):
                    self.scan(d, self.conj_data + self.conj_start[k], self.conj_len[k], False)
                    if self.parent[d] != d:
                        break
        return 0

    cdef int run_word(self, int a, list w) except -1:
        cdef int length = len(w), i
        cdef int *buf = <int *> malloc((length + 1) * sizeof(int))
        if not buf:
            raise MemoryError()
        try:
            for i in range(length):
                buf[i] = w[i]
            return self.scan(a, buf, length, True)
        finally:
            free(buf)

    def run(self, list relators, list subgroup):
        cdef int a, x, i, k, nrels = len(relators), total = 0, nc = self.ncols
        cdef int *rdata
        cdef int *rstart
        cdef int *rlen
        for w in subgroup:
            if w:
                if self.run_word(0, w):
                    return False
                self.process_deductions()
        for r in relators:
            total += len(r)
        rdata = <int *> malloc((total + 1) * sizeof(int))
        rstart = <int *> malloc((nrels + 1) * sizeof(int))
        rlen = <int *> malloc((nrels + 1) * sizeof(int))
        if not (rdata and rstart and rlen):
            free(rdata); free(rstart); free(rlen)
            raise MemoryError()
        try:
            total = 0
            for i in range(nrels):
                r = relators[i]
                rstart[i] = total
                rlen[i] = len(r)
                for y in r:
                    rdata[total] = y
                    total += 1
            a = 0
            while a < self.n:
                if self.parent[a] == a:
                    for k in range(nrels):
                        if rlen[k]:
                            if self.scan(a, rdata + rstart[k], rlen[k], True):
                                return False
                            self.process_deductions()
                        if self.parent[a] != a:
                            break
                    if self.parent[a] == a:
                        for x in range(nc):
                            if self.table[a * nc + x] < 0:
                                if self.define(a, x):
                                    return False
                                self.process_deductions()
                                if self.parent[a] != a:
                                    break
                a += 1
        finally:
            free(rdata)
            free(rstart)
            free(rlen)
        return True

    def standardized(self):
        cdef int nc = self.ncols, c, x, d, i = 0
        order = {0: 0}
        queue = [0]
        while i < len(queue):
            c = queue[i]
            i += 1
            for x in range(nc):
                d = self.table[c * nc + x]
                if d >= 0 and d not in order:
                    order[d] = len(queue)
                    queue.append(d)
        return [[order[self.table[c * nc + x]] for x in range(nc)] for c in queue]


def enumerate_cosets(int ngens, list relators, list subgroup, long budget):
    """Return ``(complete, table, defined)`` exactly like the Python kernel."""
    cdef _Enumerator e = _Enumerator(ngens, relators, budget)
    if not e.run(relators, subgroup):
        return False, None, e.n
    return True, e.standardized(), e.n
