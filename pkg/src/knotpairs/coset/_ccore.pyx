# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled Felsch coset enumeration kernel; same contract as ``_pycore.enumerate_flat``."""

from libc.stdlib cimport malloc, realloc, free


cdef struct IntBuf:
    int *data
    Py_ssize_t size
    Py_ssize_t cap


cdef int buf_push(IntBuf *b, int v) except -1:
    cdef int *p
    if b.size == b.cap:
        b.cap = b.cap * 2 if b.cap else 64
        p = <int *> realloc(b.data, b.cap * sizeof(int))
        if p == NULL:
            raise MemoryError()
        b.data = p
    b.data[b.size] = v
    b.size += 1
    return 0


cdef class _Enumerator:
    cdef int ncols
    cdef IntBuf table      # row-major, ncols entries per coset
    cdef IntBuf parent
    cdef IntBuf deductions  # (coset, column) pairs
    cdef IntBuf queue
    cdef int *cyc
    cdef int *cyc_off
    cdef int *col_off
    cdef int *col_cyc
    cdef int *sub
    cdef public long coincidences
    cdef public long steps
    cdef int budget

    def __dealloc__(self):
        free(self.table.data)
        free(self.parent.data)
        free(self.deductions.data)
        free(self.queue.data)
        free(self.cyc)
        free(self.cyc_off)
        free(self.col_off)
        free(self.col_cyc)
        free(self.sub)

    cdef inline int ncosets(self):
        return <int> self.parent.size

    cdef inline int get(self, int c, int x):
        return self.table.data[c * self.ncols + x]

    cdef inline void put(self, int c, int x, int v):
        self.table.data[c * self.ncols + x] = v

    cdef int new_coset(self) except -1:
        cdef int d = self.ncosets()
        cdef int x
        for x in range(self.ncols):
            buf_push(&self.table, -1)
        buf_push(&self.parent, d)
        return d

    cdef int rep(self, int c):
        cdef int r = c
        cdef int nxt
        cdef int *parent = self.parent.data
        while parent[r] != r:
            r = parent[r]
        while parent[c] != r:
            nxt = parent[c]
            parent[c] = r
            c = nxt
        return r

    cdef int push_deduction(self, int c, int x) except -1:
        buf_push(&self.deductions, c)
        buf_push(&self.deductions, x)
        return 0

    cdef int merge(self, int k, int l) except -1:
        cdef int t
        k = self.rep(k)
        l = self.rep(l)
        if k == l:
            return 0
        if l < k:
            t = k
            k = l
            l = t
        self.parent.data[l] = k
        buf_push(&self.queue, l)
        self.coincidences += 1
        return 0

    cdef int coincidence(self, int a, int b) except -1:
        cdef Py_ssize_t qi = 0
        cdef int e, f, x, ix, e1, f1, t
        self.queue.size = 0
        self.merge(a, b)
        while qi < self.queue.size:
            e = self.queue.data[qi]
            qi += 1
            for x in range(self.ncols):
                f = self.get(e, x)
                if f < 0:
                    continue
                ix = x ^ 1
                self.put(f, ix, -1)
                e1 = self.rep(e)
                f1 = self.rep(f)
                t = self.get(e1, x)
                if t >= 0:
                    self.merge(f1, t)
                    continue
                t = self.get(f1, ix)
                if t >= 0:
                    self.merge(e1, t)
                    continue
                self.put(e1, x, f1)
                self.put(f1, ix, e1)
                self.push_deduction(e1, x)
        return 0

    cdef int scan(self, int c, int start, int end) except -1:
        cdef int f = c, i = start, b = c, j, nxt, x
        while i < end:
            nxt = self.get(f, self.cyc[i])
            if nxt < 0:
                break
            f = nxt
            i += 1
        if i == end:
            if f != c:
                self.coincidence(f, c)
            return 0
        j = end - 1
        while j >= i:
            nxt = self.get(b, self.cyc[j] ^ 1)
            if nxt < 0:
                break
            b = nxt
            j -= 1
        if j < i:
            self.coincidence(f, b)
        elif j == i:
            x = self.cyc[i]
            self.put(f, x, b)
            self.put(b, x ^ 1, f)
            self.push_deduction(f, x)
        return 0

    cdef int process(self) except -1:
        cdef int c, x, k, idx
        while self.deductions.size:
            self.deductions.size -= 2
            c = self.deductions.data[self.deductions.size]
            x = self.deductions.data[self.deductions.size + 1]
            if self.parent.data[c] != c:
                continue
            for idx in range(self.col_off[x], self.col_off[x + 1]):
                k = self.col_cyc[idx]
                self.steps += 1
                self.scan(c, self.cyc_off[k], self.cyc_off[k + 1])
                if self.parent.data[c] != c:
                    break
        return 0

    cdef int define(self, int c, int x) except -1:
        # returns 1 on success, 0 when the budget is spent
        cdef int d
        if self.ncosets() >= self.budget:
            return 0
        d = self.new_coset()
        self.put(c, x, d)
        self.put(d, x ^ 1, c)
        self.push_deduction(c, x)
        return 1

    cdef int scan_and_fill(self, int start, int end) except -1:
        cdef int f = 0, i = start, b = 0, j = end - 1, nxt, x
        while True:
            while i <= j:
                nxt = self.get(f, self.sub[i])
                if nxt < 0:
                    break
                f = nxt
                i += 1
            if i > j:
                if f != 0:
                    self.coincidence(f, 0)
                return 1
            while j >= i:
                nxt = self.get(b, self.sub[j] ^ 1)
                if nxt < 0:
                    break
                b = nxt
                j -= 1
            if j < i:
                self.coincidence(f, b)
                return 1
            if j == i:
                x = self.sub[i]
                self.put(f, x, b)
                self.put(b, x ^ 1, f)
                self.push_deduction(f, x)
                return 1
            if not self.define(f, self.sub[i]):
                return 0

    cdef int has_hole(self, int c):
        cdef int x
        for x in range(self.ncols):
            if self.get(c, x) < 0:
                return 1
        return 0

    cdef int run(self, list sub_off) except -1:
        cdef int c, x, s
        for s in range(len(sub_off) - 1):
            if sub_off[s] == sub_off[s + 1]:
                continue
            if not self.scan_and_fill(sub_off[s], sub_off[s + 1]):
                return 0
            self.process()
        c = 0
        while True:
            while c < self.ncosets():
                if self.parent.data[c] == c:
                    for x in range(self.ncols):
                        if self.parent.data[c] != c:
                            break
                        if self.get(c, x) < 0:
                            if not self.define(c, x):
                                return 0
                            self.process()
                c += 1
            c = -1
            for s in range(self.ncosets()):
                if self.parent.data[s] == s and self.has_hole(s):
                    c = s
                    break
            if c < 0:
                return 1


cdef int *_carray(object seq) except? NULL:
    cdef Py_ssize_t n = len(seq), i
    cdef int *p = <int *> malloc((n + 1) * sizeof(int))
    if p == NULL:
        raise MemoryError()
    for i in range(n):
        p[i] = seq[i]
    return p


def enumerate_flat(int ncols, cyc_data, cyc_off, col_off, col_cyc, sub_data, sub_off, int budget):
    cdef _Enumerator en = _Enumerator()
    cdef int k, x, n
    en.ncols = ncols
    en.budget = budget
    en.cyc = _carray(cyc_data)
    en.cyc_off = _carray(cyc_off)
    en.col_off = _carray(col_off)
    en.col_cyc = _carray(col_cyc)
    en.sub = _carray(sub_data)
    en.new_coset()
    if not en.run(list(sub_off)):
        return False, None, en.ncosets(), en.coincidences, en.steps
    n = en.ncosets()
    new_id = {}
    live = []
    for k in range(n):
        if en.parent.data[k] == k:
            new_id[k] = len(live)
            live.append(k)
    compact = [[new_id[en.get(k, x)] for x in range(ncols)] for k in live]
    return True, compact, n, en.coincidences, en.steps
