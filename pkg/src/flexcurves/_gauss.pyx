# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled kernel: residue counts of a Z/4 quadratic form."""

cdef extern from *:
    int __builtin_popcountll(unsigned long long)
    int __builtin_ctzll(unsigned long long)


def residue_counts(rows, phi):
    cdef int b = len(rows)
    if b > 62:
        raise ValueError("rank above 62 is out of reach for exhaustive enumeration")
    cdef unsigned long long r[62]
    cdef int p[62]
    cdef int j
    for j in range(b):
        r[j] = rows[j]
        p[j] = phi[j] & 3
    cdef unsigned long long counts[4]
    counts[0] = 1
    counts[1] = 0
    counts[2] = 0
    counts[3] = 0
    cdef unsigned long long x = 0, i, n = 1ULL << b
    cdef int value = 0
    for i in range(1, n):
        j = __builtin_ctzll(i)
        value = (value + p[j] + 2 * (__builtin_popcountll(x & r[j]) & 1)) & 3
        x ^= 1ULL << j
        counts[value] += 1
    return int(counts[0]), int(counts[1]), int(counts[2]), int(counts[3])
