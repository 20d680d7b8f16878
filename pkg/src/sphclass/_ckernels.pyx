# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled census kernels; same signatures as ``_kernels_py``.

Elements travel as ``bytes`` internally (one residue per byte), so the
matrix size is limited to 8 x 8 and p to primes below 256.
"""

from libc.stdlib cimport malloc, free
from cpython.bytes cimport PyBytes_FromStringAndSize, PyBytes_AS_STRING

MODE_CONJ = 0
MODE_FLAG = 1
MAX_N = 8
MAX_P = 255


cdef inline void _mul(const unsigned char* a, const unsigned char* b, unsigned char* out,
                      int n, int p) noexcept nogil:
    cdef int i, j, k, s
    for i in range(n):
        for j in range(n):
            s = 0
            for k in range(n):
                s += a[i * n + k] * b[k * n + j]
            out[i * n + j] = <unsigned char>(s % p)


cdef inline int _inv(int x, int p) noexcept nogil:
    cdef int r = 1, b = x % p, e = p - 2
    while e > 0:
        if e & 1:
            r = (r * b) % p
        b = (b * b) % p
        e >>= 1
    return r


cdef void _canon(const unsigned char* m, unsigned char* out, int n, int p) noexcept nogil:
    cdef int cols[64]
    cdef int piv[8]
    cdef int i, j, k, r, t, inv
    for j in range(n):
        for i in range(n):
            cols[j * n + i] = m[i * n + j]
    for j in range(n):
        for k in range(j):
            t = cols[j * n + piv[k]]
            if t:
                for i in range(n):
                    cols[j * n + i] = (cols[j * n + i] - t * cols[k * n + i]) % p
                    if cols[j * n + i] < 0:
                        cols[j * n + i] += p
        r = n - 1
        while r > 0 and cols[j * n + r] == 0:
            r -= 1
        inv = _inv(cols[j * n + r], p)
        for i in range(n):
            cols[j * n + i] = (cols[j * n + i] * inv) % p
        piv[j] = r
    for i in range(n):
        for j in range(n):
            out[i * n + j] = <unsigned char>cols[j * n + i]


cdef inline void _act(int mode, const unsigned char* g, const unsigned char* gi,
                      const unsigned char* x, unsigned char* tmp, unsigned char* out,
                      int n, int p) noexcept nogil:
    if mode == 0:
        _mul(g, x, tmp, n, p)
        _mul(tmp, gi, out, n, p)
    else:
        _mul(g, x, tmp, n, p)
        _canon(tmp, out, n, p)


def _check(int n, int p):
    if n > MAX_N or p > MAX_P:
        raise ValueError("compiled kernels support n <= 8 and p < 256")


def matmul(a, b, int n, int p):
    _check(n, p)
    cdef bytes ab = bytes(a), bb = bytes(b)
    cdef unsigned char out[64]
    _mul(<const unsigned char*>PyBytes_AS_STRING(ab), <const unsigned char*>PyBytes_AS_STRING(bb), out, n, p)
    return tuple(out[i] for i in range(n * n))


def flag_canon(m, int n, int p):
    _check(n, p)
    cdef bytes mb = bytes(m)
    cdef unsigned char out[64]
    _canon(<const unsigned char*>PyBytes_AS_STRING(mb), out, n, p)
    return tuple(out[i] for i in range(n * n))


def closure(start, gens, ginvs, int n, int p, long cap, int mode=0):
    _check(n, p)
    cdef int nn = n * n
    cdef unsigned char tmp[64]
    cdef unsigned char out[64]
    cdef list gb = [bytes(g) for g in gens]
    cdef list gib = [bytes(g) for g in (ginvs if ginvs is not None else gens)]
    cdef int ng = len(gb)
    cdef bytes s = bytes(start)
    if mode == 1:
        _canon(<const unsigned char*>PyBytes_AS_STRING(s), out, n, p)
        s = PyBytes_FromStringAndSize(<char*>out, nn)
    cdef dict seen = {s: 0}
    cdef list order = [s]
    cdef Py_ssize_t head = 0
    cdef bytes x, y
    cdef int k
    cdef bint complete = True
    while head < len(order):
        x = order[head]
        head += 1
        for k in range(ng):
            _act(mode, <const unsigned char*>PyBytes_AS_STRING(gb[k]),
                 <const unsigned char*>PyBytes_AS_STRING(gib[k]),
                 <const unsigned char*>PyBytes_AS_STRING(x), tmp, out, n, p)
            y = PyBytes_FromStringAndSize(<char*>out, nn)
            if y not in seen:
                if len(order) >= cap:
                    complete = False
                    break
                seen[y] = len(order)
                order.append(y)
        if not complete:
            break
    return [tuple(b) for b in order], complete


cdef int _find(int* parent, int i) noexcept nogil:
    cdef int root = i, nxt
    while parent[root] != root:
        root = parent[root]
    while parent[i] != root:
        nxt = parent[i]
        parent[i] = root
        i = nxt
    return root


def partition(elems, gens, ginvs, int n, int p, int mode=0):
    _check(n, p)
    cdef int nn = n * n
    cdef Py_ssize_t m = len(elems), i
    cdef list eb = [bytes(x) for x in elems]
    cdef dict index = {key: pos for pos, key in enumerate(eb)}
    cdef list gb = [bytes(g) for g in gens]
    cdef list gib = [bytes(g) for g in (ginvs if ginvs is not None else gens)]
    cdef int ng = len(gb), k, a, b, j
    cdef unsigned char tmp[64]
    cdef unsigned char out[64]
    cdef int* parent = <int*>malloc(m * sizeof(int))
    if parent == NULL:
        raise MemoryError()
    try:
        for i in range(m):
            parent[i] = i
        for i in range(m):
            for k in range(ng):
                _act(mode, <const unsigned char*>PyBytes_AS_STRING(gb[k]),
                     <const unsigned char*>PyBytes_AS_STRING(gib[k]),
                     <const unsigned char*>PyBytes_AS_STRING(eb[i]), tmp, out, n, p)
                j = index[PyBytes_FromStringAndSize(<char*>out, nn)]
                a = _find(parent, i)
                b = _find(parent, j)
                if a != b:
                    if eb[a] < eb[b]:
                        parent[b] = a
                    else:
                        parent[a] = b
        return [_find(parent, i) for i in range(m)]
    finally:
        free(parent)
