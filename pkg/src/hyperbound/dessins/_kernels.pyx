# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled permutation kernels; same API and results as ``_kernels_py``."""

from libc.stdlib cimport malloc, calloc, free

cdef enum:
    MAXD = 12


cdef long long _fact(int n) nogil:
    cdef long long f = 1
    cdef int i
    for i in range(2, n + 1):
        f *= i
    return f


cdef int _load(object seq, int* out, int d) except -1:
    cdef int i
    if len(seq) != d:
        raise ValueError("permutation length mismatch")
    for i in range(d):
        out[i] = seq[i]
    return 0


cdef bint _transitive(const int* a, const int* b, int d) nogil:
    cdef char seen[MAXD]
    cdef int stack[MAXD]
    cdef int top = 0, count = 1, x, y, i
    if d == 0:
        return True
    for i in range(d):
        seen[i] = 0
    seen[0] = 1
    stack[0] = 0
    top = 1
    while top:
        top -= 1
        x = stack[top]
        y = a[x]
        if not seen[y]:
            seen[y] = 1
            count += 1
            stack[top] = y
            top += 1
        y = b[x]
        if not seen[y]:
            seen[y] = 1
            count += 1
            stack[top] = y
            top += 1
    return count == d


cdef long long _rank(const int* p, int d, const long long* fact) nogil:
    cdef long long r = 0
    cdef int i, j, c
    for i in range(d):
        c = 0
        for j in range(i + 1, d):
            if p[j] < p[i]:
                c += 1
        r += c * fact[d - 1 - i]
    return r


cdef bint _next_perm(int* p, int d) nogil:
    cdef int i = d - 2, j, t
    while i >= 0 and p[i] >= p[i + 1]:
        i -= 1
    if i < 0:
        return False
    j = d - 1
    while p[j] <= p[i]:
        j -= 1
    t = p[i]; p[i] = p[j]; p[j] = t
    i += 1
    j = d - 1
    while i < j:
        t = p[i]; p[i] = p[j]; p[j] = t
        i += 1
        j -= 1
    return True


cdef inline void _conj(const int* c, const int* s, int* out, int d) nogil:
    cdef int i
    for i in range(d):
        out[c[i]] = c[s[i]]


cdef long long _orbit_bfs(const int* start, const int* gens, int ngens, int d,
                          char* visited, int* queue, const long long* fact) nogil:
    """Breadth-first orbit of ``start``; fills ``queue`` and marks ``visited``."""
    cdef long long head = 0, tail = 1, r
    cdef int g, i
    cdef int* x
    cdef int* y
    for i in range(d):
        queue[i] = start[i]
    visited[_rank(start, d, fact)] = 1
    while head < tail:
        x = queue + head * d
        for g in range(ngens):
            y = queue + tail * d
            _conj(gens + g * d, x, y, d)
            r = _rank(y, d, fact)
            if not visited[r]:
                visited[r] = 1
                tail += 1
        head += 1
    return tail


cdef int* _load_gens(object gens, int d, int* ngens) except NULL:
    cdef int n = len(gens)
    cdef int* buf = <int*> malloc((n if n else 1) * d * sizeof(int))
    cdef int g
    if buf == NULL:
        raise MemoryError()
    for g in range(n):
        _load(gens[g], buf + g * d, d)
    ngens[0] = n
    return buf


def is_transitive(a, b):
    cdef int d = len(a)
    cdef int pa[MAXD]
    cdef int pb[MAXD]
    if d > MAXD:
        raise ValueError("degree too large for compiled kernel")
    _load(a, pa, d)
    _load(b, pb, d)
    return _transitive(pa, pb, d)


def cycle_type(a):
    cdef int d = len(a)
    cdef int p[MAXD]
    cdef char seen[MAXD]
    cdef int i, j, n
    if d > MAXD:
        raise ValueError("degree too large for compiled kernel")
    _load(a, p, d)
    for i in range(d):
        seen[i] = 0
    lengths = []
    for i in range(d):
        if seen[i]:
            continue
        n = 0
        j = i
        while not seen[j]:
            seen[j] = 1
            j = p[j]
            n += 1
        lengths.append(n)
    lengths.sort(reverse=True)
    return tuple(lengths)


def num_cycles(a):
    return len(cycle_type(a))


def compose(a, b):
    return tuple([a[x] for x in b])


def inverse(a):
    out = [0] * len(a)
    for i, x in enumerate(a):
        out[x] = i
    return tuple(out)


def conjugate(c, s):
    cdef int d = len(s)
    cdef int pc[MAXD]
    cdef int ps[MAXD]
    cdef int out[MAXD]
    if d > MAXD:
        raise ValueError("degree too large for compiled kernel")
    _load(c, pc, d)
    _load(s, ps, d)
    _conj(pc, ps, out, d)
    return tuple([out[i] for i in range(d)])


def orbit_min(s, gens):
    cdef int d = len(s)
    cdef int ngens = 0, i
    cdef long long k, size, total, best
    cdef long long fact[MAXD + 1]
    cdef int start[MAXD]
    cdef int* gbuf
    cdef char* visited
    cdef int* queue
    if d > MAXD:
        raise ValueError("degree too large for compiled kernel")
    for i in range(MAXD + 1):
        fact[i] = _fact(i)
    total = fact[d]
    _load(s, start, d)
    gbuf = _load_gens(gens, d, &ngens)
    visited = <char*> calloc(total, 1)
    queue = <int*> malloc((total + 1) * d * sizeof(int))
    if visited == NULL or queue == NULL:
        free(gbuf); free(visited); free(queue)
        raise MemoryError()
    try:
        size = _orbit_bfs(start, gbuf, ngens, d, visited, queue, fact)
        best = 0
        for k in range(1, size):
            for i in range(d):
                if queue[k * d + i] != queue[best * d + i]:
                    if queue[k * d + i] < queue[best * d + i]:
                        best = k
                    break
        rep = tuple([queue[best * d + i] for i in range(d)])
    finally:
        free(gbuf); free(visited); free(queue)
    return rep, size


def orbit_reps(rho, gens, int d, long long group_order=0):
    """See ``_kernels_py.orbit_reps``; ``group_order`` bounds the orbit buffer."""
    cdef int ngens = 0, i
    cdef long long total, cap, size
    cdef long long fact[MAXD + 1]
    cdef int prho[MAXD]
    cdef int p[MAXD]
    cdef int* gbuf
    cdef char* visited
    cdef int* queue
    if d > MAXD:
        raise ValueError("degree too large for compiled kernel")
    if d == 0:
        return []
    for i in range(MAXD + 1):
        fact[i] = _fact(i)
    total = fact[d]
    cap = group_order if 0 < group_order < total else total
    _load(rho, prho, d)
    gbuf = _load_gens(gens, d, &ngens)
    visited = <char*> calloc(total, 1)
    queue = <int*> malloc((cap + 1) * d * sizeof(int))
    if visited == NULL or queue == NULL:
        free(gbuf); free(visited); free(queue)
        raise MemoryError()
    out = []
    try:
        for i in range(d):
            p[i] = i
        while True:
            if not visited[_rank(p, d, fact)] and _transitive(prho, p, d):
                size = _orbit_bfs(p, gbuf, ngens, d, visited, queue, fact)
                out.append((tuple([p[i] for i in range(d)]), size))
            if not _next_perm(p, d):
                break
    finally:
        free(gbuf); free(visited); free(queue)
    return out
