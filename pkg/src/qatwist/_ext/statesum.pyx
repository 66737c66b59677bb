# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled state-sum kernels."""

from libc.stdlib cimport malloc, free


cdef inline int _find(int* parent, int x) nogil:
    while parent[x] != x:
        parent[x] = parent[parent[x]]
        x = parent[x]
    return x


def state_histogram(list arcs, int n_arcs, int loops):
    """Count Kauffman states by (number of A-smoothings, number of circles).

    ``arcs`` is the flat list of 4*n arc indices (0-based); bit k of a state
    set means crossing k takes its A-smoothing (rays 0-1 and 2-3 joined).
    Returns a list ``h`` with ``h[a][s]`` states.
    """
    cdef int n = len(arcs) // 4
    cdef int i, k, a, b, ra, rb, merges, na, circles
    cdef unsigned long long state, nstates = 1ULL << n
    cdef int* x = <int*>malloc(4 * n * sizeof(int) + 1)
    cdef int* parent = <int*>malloc(n_arcs * sizeof(int) + 1)
    cdef unsigned long long* hist = <unsigned long long*>malloc(
        (n + 1) * (n_arcs + loops + 2) * sizeof(unsigned long long))
    cdef int width = n_arcs + loops + 2
    try:
        for i in range(4 * n):
            x[i] = arcs[i]
        for i in range((n + 1) * width):
            hist[i] = 0
        with nogil:
            for state in range(nstates):
                for i in range(n_arcs):
                    parent[i] = i
                merges = 0
                na = 0
                for k in range(n):
                    if (state >> k) & 1:
                        na += 1
                        a = x[4 * k]; b = x[4 * k + 1]
                    else:
                        a = x[4 * k + 1]; b = x[4 * k + 2]
                    ra = _find(parent, a); rb = _find(parent, b)
                    if ra != rb:
                        parent[ra] = rb
                        merges += 1
                    if (state >> k) & 1:
                        a = x[4 * k + 2]; b = x[4 * k + 3]
                    else:
                        a = x[4 * k + 3]; b = x[4 * k]
                    ra = _find(parent, a); rb = _find(parent, b)
                    if ra != rb:
                        parent[ra] = rb
                        merges += 1
                circles = n_arcs - merges + loops
                hist[na * width + circles] += 1
        return [[hist[a * width + s] for s in range(width)] for a in range(n + 1)]
    finally:
        free(x)
        free(parent)
        free(hist)
