# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels on 64-bit vertex masks (n <= 64).

Same signatures and results as ``_pykernels``; see there for semantics.
"""

ctypedef unsigned long long u64

cdef extern from *:
    int __builtin_ctzll(unsigned long long) nogil
    int __builtin_popcountll(unsigned long long) nogil

cdef enum:
    MAXN = 64


cdef inline u64 bit(int v) nogil:
    return (<u64>1) << v


cdef int _load(int n, object partner, object masks, int *p, u64 *m) except -1:
    cdef int v
    if n > MAXN:
        raise ValueError("compiled kernels support at most 64 vertices")
    for v in range(n):
        p[v] = partner[v]
        m[v] = masks[v]
    return 0


def alternating_cycle(int n, partner, avail, int limit):
    cdef int p[MAXN]
    cdef u64 av[MAXN]
    cdef u64 cand[MAXN]
    cdef int seq[MAXN]
    cdef int a0, b0, b, c, d, depth
    cdef u64 higher, visited, low
    if limit < 2:
        return None
    _load(n, partner, avail, p, av)
    for a0 in range(n):
        b0 = p[a0]
        if b0 < a0:
            continue
        higher = (~(<u64>0)) << (a0 + 1) if a0 < 63 else 0
        visited = bit(a0) | bit(b0)
        seq[0] = a0
        seq[1] = b0
        depth = 1
        cand[1] = av[b0] & higher & ~visited
        while True:
            if cand[depth] == 0:
                if depth == 1:
                    break
                visited &= ~(bit(seq[2 * depth - 2]) | bit(seq[2 * depth - 1]))
                depth -= 1
                continue
            low = cand[depth] & (~cand[depth] + 1)
            cand[depth] ^= low
            c = __builtin_ctzll(low)
            d = p[c]
            if d < a0:
                continue
            seq[2 * depth] = c
            seq[2 * depth + 1] = d
            visited |= bit(c) | bit(d)
            depth += 1
            if (av[d] >> a0) & 1:
                return [seq[i] for i in range(2 * depth)]
            if depth == limit:
                cand[depth] = 0
            else:
                cand[depth] = av[d] & higher & ~visited
    return None


def count_alternating_4cycles(int n, partner, avail):
    cdef int p[MAXN]
    cdef u64 av[MAXN]
    cdef int x, y, w, pw
    cdef u64 m, low
    cdef long total = 0
    _load(n, partner, avail, p, av)
    for x in range(n):
        y = p[x]
        if y < x:
            continue
        m = av[x]
        while m:
            low = m & (~m + 1)
            m ^= low
            w = __builtin_ctzll(low)
            pw = p[w]
            if w < x or pw < x:
                continue
            if (av[y] >> pw) & 1:
                total += 1
    return total


cdef class _Enum:
    cdef u64 adj[MAXN]
    cdef int partner[MAXN]
    cdef int n
    cdef long limit
    cdef list out

    cdef bint rec(self, u64 free):
        cdef int v, w
        cdef u64 rest, m, low
        if free == 0:
            self.out.append(tuple([self.partner[i] for i in range(self.n)]))
            return self.limit > 0 and len(self.out) >= self.limit
        v = __builtin_ctzll(free)
        rest = free & ~bit(v)
        m = self.adj[v] & rest
        while m:
            low = m & (~m + 1)
            m ^= low
            w = __builtin_ctzll(low)
            self.partner[v] = w
            self.partner[w] = v
            if self.rec(rest & ~low):
                return True
            self.partner[w] = -1
        self.partner[v] = -1
        return False


def perfect_matchings(int n, adj, alive, long limit):
    cdef _Enum st = _Enum()
    cdef int v
    cdef u64 free = alive
    if n > MAXN:
        raise ValueError("compiled kernels support at most 64 vertices")
    st.n = n
    st.limit = limit
    st.out = []
    for v in range(n):
        st.adj[v] = adj[v]
        st.partner[v] = -1
    if __builtin_popcountll(free) % 2:
        return st.out
    st.rec(free)
    return st.out
