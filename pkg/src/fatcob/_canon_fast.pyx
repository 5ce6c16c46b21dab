# cython: boundscheck=False, wraparound=False, cdivision=True, language_level=3
"""Compiled canonical-labeling kernel.

Same contract as :mod:`fatcob._canon_py`; see there for the algorithm.
This version keeps everything in C arrays and is the one worth using
for the graph census, where it runs millions of times.
"""

from libc.string cimport memset

BACKEND = "cython"

DEF MAXN = 255


cdef int _sweep(const int* sigma, int* nl, int* order, int* pos, int h) nogil:
    cdef int cnt = 0
    cdef int cur = h
    while nl[cur] < 0:
        nl[cur] = pos[0]
        order[pos[0]] = cur
        pos[0] += 1
        cur = sigma[cur]
        cnt += 1
    return cnt


cdef int _relabel(const int* sigma, const int* inv, int n, int h0,
                  int* nl, int* order, unsigned char* valences) nogil:
    """Fill nl/order/valences; returns the number of vertices visited,
    or -1 if the graph is disconnected."""
    cdef int pos = 0
    cdef int nv = 0
    cdef int i, p
    memset(nl, 0xff, n * sizeof(int))
    valences[0] = <unsigned char> _sweep(sigma, nl, order, &pos, h0)
    nv = 1
    i = 0
    while i < pos:
        p = inv[order[i]]
        if nl[p] < 0:
            valences[nv] = <unsigned char> _sweep(sigma, nl, order, &pos, p)
            nv += 1
        i += 1
    if pos != n:
        return -1
    return nv


cdef void _emit(const int* inv, int n, int nv, const int* nl,
                const int* order, const unsigned char* valences,
                unsigned char* out) nogil:
    cdef int k
    out[0] = <unsigned char> nv
    for k in range(nv):
        out[1 + k] = valences[k]
    for k in range(n):
        out[1 + nv + k] = <unsigned char> nl[inv[order[k]]]


cdef int _cmp(const unsigned char* a, const unsigned char* b, int m) nogil:
    cdef int k
    for k in range(m):
        if a[k] != b[k]:
            return -1 if a[k] < b[k] else 1
    return 0


def relabel_from(sigma, inv, n, h0):
    # Not a hot path; mirror the pure implementation exactly.
    nl = [-1] * n
    order = []
    valences = []
    stack = [h0]
    while stack:
        h = stack.pop(0)
        if nl[h] >= 0:
            continue
        cnt = 0
        cur = h
        while nl[cur] < 0:
            nl[cur] = len(order)
            order.append(cur)
            stack.append(inv[cur])
            cur = sigma[cur]
            cnt += 1
        valences.append(cnt)
    return nl, order, valences


def code_from(sigma, inv, n, h0):
    cdef int c_n = n
    cdef int c_sigma[MAXN]
    cdef int c_inv[MAXN]
    cdef int nl[MAXN]
    cdef int order[MAXN]
    cdef unsigned char valences[MAXN]
    cdef unsigned char out[2 * MAXN + 1]
    cdef int i, nv
    if c_n > MAXN:
        raise ValueError("graph too large for the compiled kernel")
    for i in range(c_n):
        c_sigma[i] = sigma[i]
        c_inv[i] = inv[i]
    nv = _relabel(c_sigma, c_inv, c_n, h0, nl, order, valences)
    if nv < 0:
        raise ValueError("graph is not connected")
    _emit(c_inv, c_n, nv, nl, order, valences, out)
    return bytes(out[:1 + nv + c_n])


def is_connected(sigma, inv, n):
    cdef int c_n = n
    cdef int c_sigma[MAXN]
    cdef int c_inv[MAXN]
    cdef int nl[MAXN]
    cdef int order[MAXN]
    cdef unsigned char valences[MAXN]
    cdef int i
    if c_n == 0:
        return True
    if c_n > MAXN:
        raise ValueError("graph too large for the compiled kernel")
    for i in range(c_n):
        c_sigma[i] = sigma[i]
        c_inv[i] = inv[i]
    return _relabel(c_sigma, c_inv, c_n, 0, nl, order, valences) >= 0


def min_code(sigma, inv, n):
    cdef int c_n = n
    cdef int c_sigma[MAXN]
    cdef int c_inv[MAXN]
    cdef int nl[MAXN]
    cdef int order[MAXN]
    cdef unsigned char valences[MAXN]
    cdef unsigned char best[2 * MAXN + 1]
    cdef unsigned char cur[2 * MAXN + 1]
    cdef int i, h0, nv, m, aut, best_start, c
    if c_n > MAXN:
        raise ValueError("graph too large for the compiled kernel")
    for i in range(c_n):
        c_sigma[i] = sigma[i]
        c_inv[i] = inv[i]
    nv = _relabel(c_sigma, c_inv, c_n, 0, nl, order, valences)
    if nv < 0:
        raise ValueError("graph is not connected")
    _emit(c_inv, c_n, nv, nl, order, valences, best)
    m = 1 + nv + c_n
    aut = 1
    best_start = 0
    for h0 in range(1, c_n):
        nv = _relabel(c_sigma, c_inv, c_n, h0, nl, order, valences)
        _emit(c_inv, c_n, nv, nl, order, valences, cur)
        c = _cmp(cur, best, m)
        if c < 0:
            for i in range(m):
                best[i] = cur[i]
            aut = 1
            best_start = h0
        elif c == 0:
            aut += 1
    return bytes(best[:m]), aut, best_start


def census_code(sigma, inv, n):
    cdef int c_n = n
    cdef int c_sigma[MAXN]
    cdef int c_inv[MAXN]
    cdef int nl[MAXN]
    cdef int order[MAXN]
    cdef unsigned char valences[MAXN]
    cdef unsigned char best[2 * MAXN + 1]
    cdef unsigned char cur[2 * MAXN + 1]
    cdef int i, h0, nv, m, c
    if c_n == 0:
        return b"\x00"
    if c_n > MAXN:
        raise ValueError("graph too large for the compiled kernel")
    for i in range(c_n):
        c_sigma[i] = sigma[i]
        c_inv[i] = inv[i]
    nv = _relabel(c_sigma, c_inv, c_n, 0, nl, order, valences)
    if nv < 0:
        return None
    _emit(c_inv, c_n, nv, nl, order, valences, best)
    m = 1 + nv + c_n
    for h0 in range(1, c_n):
        nv = _relabel(c_sigma, c_inv, c_n, h0, nl, order, valences)
        _emit(c_inv, c_n, nv, nl, order, valences, cur)
        if _cmp(cur, best, m) < 0:
            for i in range(m):
                best[i] = cur[i]
    return bytes(best[:m])
