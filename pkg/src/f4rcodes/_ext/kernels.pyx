# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled enumeration kernel.

Words are packed F4 symbols, two bits per symbol, ``nw`` uint64 limbs per
word.  A symbol never straddles a limb because 64 is even.
"""

from libc.stdint cimport uint64_t
from libc.stdlib cimport calloc, free

cdef extern from *:
    int __builtin_popcountll(unsigned long long) nogil
    int __builtin_ctzll(unsigned long long) nogil

cdef uint64_t LOW = 0x5555555555555555ULL


def min_weight(const uint64_t[:, ::1] basis):
    """Minimum symbol weight over all nonzero GF(2) combinations of ``basis`` rows.

    Returns ``(weight, combo)`` where ``combo`` has bit t set when row t takes
    part.  Among words of minimum weight the smallest ``combo`` is reported.
    """
    cdef Py_ssize_t m = basis.shape[0]
    cdef Py_ssize_t nw = basis.shape[1]
    if m == 0:
        raise ValueError("empty basis")
    if m > 62:
        raise ValueError("too many rows for exhaustive enumeration")
    cdef uint64_t *cur = <uint64_t *> calloc(nw, sizeof(uint64_t))
    if cur == NULL:
        raise MemoryError()
    cdef unsigned long long i, total = 1ULL << m
    cdef unsigned long long g, best_g = 0
    cdef long wt, best = 1 << 30
    cdef uint64_t w0 = 0
    try:
        with nogil:
            if nw == 1:
                for i in range(1, total):
                    w0 ^= basis[__builtin_ctzll(i), 0]
                    wt = __builtin_popcountll((w0 | (w0 >> 1)) & LOW)
                    if wt <= best:
                        g = i ^ (i >> 1)
                        if wt < best or g < best_g:
                            best = wt
                            best_g = g
            else:
                _general(basis, cur, m, nw, &best, &best_g)
    finally:
        free(cur)
    return int(best), int(best_g)


cdef void _general(const uint64_t[:, ::1] basis, uint64_t *cur, Py_ssize_t m, Py_ssize_t nw,
                   long *best_out, unsigned long long *best_g_out) noexcept nogil:
    cdef unsigned long long i, g, total = 1ULL << m
    cdef unsigned long long best_g = best_g_out[0]
    cdef long wt, best = best_out[0]
    cdef Py_ssize_t t, k
    cdef uint64_t x
    for i in range(1, total):
        t = __builtin_ctzll(i)
        wt = 0
        for k in range(nw):
            cur[k] ^= basis[t, k]
            x = cur[k]
            wt += __builtin_popcountll((x | (x >> 1)) & LOW)
        g = i ^ (i >> 1)
        if wt < best or (wt == best and g < best_g):
            best = wt
            best_g = g
    best_out[0] = best
    best_g_out[0] = best_g
