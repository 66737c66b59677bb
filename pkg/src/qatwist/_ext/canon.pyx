# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled canonical labelling kernel."""

from libc.stdlib cimport malloc, free


cdef int _labelling(int* labs, int* oe, int n, int n_arcs, int start,
                    int* new, int* entry, int* order, int* out) nogil:
    cdef int i, c, s, k, r, cnt = 0, norder = 0, ptr = 0
    cdef int a, b, x, y
    for i in range(n_arcs + 1):
        new[i] = 0
    for i in range(n):
        entry[i] = -1
    s = start
    while True:
        c = s >> 2
        if entry[c] < 0:
            entry[c] = s & 3
            order[norder] = c
            norder += 1
        while new[labs[s]] == 0:
            cnt += 1
            new[labs[s]] = cnt
            s = oe[s]
            c = s >> 2
            if entry[c] < 0:
                entry[c] = s & 3
                order[norder] = c
                norder += 1
            s = s ^ 2
        if cnt == n_arcs:
            break
        s = -1
        while ptr < norder:
            c = order[ptr]
            for k in range(4):
                r = 4 * c + ((entry[c] + k) & 3)
                if new[labs[r]] == 0:
                    s = r
                    break
            if s >= 0:
                break
            ptr += 1
        if s < 0:
            for c in range(n):
                if entry[c] < 0:
                    s = 4 * c
                    break
    for i in range(n):
        c = order[i]
        a = new[labs[4 * c]]
        b = new[labs[4 * c + 1]]
        x = new[labs[4 * c + 2]]
        y = new[labs[4 * c + 3]]
        if a < x:
            out[4 * i] = a; out[4 * i + 1] = b; out[4 * i + 2] = x; out[4 * i + 3] = y
        else:
            out[4 * i] = x; out[4 * i + 1] = y; out[4 * i + 2] = a; out[4 * i + 3] = b
    return 0


def best_labelling(list labs_in, int n, int n_arcs):
    """Lexicographically least relabelled PD sequence over all start slots.

    ``labs_in`` is the flat list of 4*n arc labels (1-based).  Returns the
    flat label list and the crossing order that produced it.
    """
    cdef int m = 4 * n
    cdef int i, start, j, better
    cdef int* buf = <int*>malloc((6 * m + 3 * n + 2 * (n_arcs + 1) + 8) * sizeof(int))
    if buf == NULL:
        raise MemoryError()
    cdef int* labs = buf
    cdef int* oe = labs + m
    cdef int* out = oe + m
    cdef int* best = out + m
    cdef int* order = best + m
    cdef int* best_order = order + n
    cdef int* entry = best_order + n
    cdef int* new = entry + n
    cdef int* first = new + n_arcs + 1
    try:
        for i in range(n_arcs + 1):
            first[i] = -1
        for i in range(m):
            labs[i] = labs_in[i]
            j = first[labs[i]]
            if j < 0:
                first[labs[i]] = i
            else:
                oe[i] = j
                oe[j] = i
        with nogil:
            for start in range(m):
                _labelling(labs, oe, n, n_arcs, start, new, entry, order, out)
                better = start == 0
                if not better:
                    for i in range(m):
                        if out[i] != best[i]:
                            better = out[i] < best[i]
                            break
                if better:
                    for i in range(m):
                        best[i] = out[i]
                    for i in range(n):
                        best_order[i] = order[i]
        return [best[i] for i in range(m)], [best_order[i] for i in range(n)]
    finally:
        free(buf)
