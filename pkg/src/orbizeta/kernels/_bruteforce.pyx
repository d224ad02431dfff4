# Compiled inner loop for brute-force point counting.
#
# One call counts the solutions in a single chunk: the leading variable is
# pinned and the remaining n-1 coordinates run over all of F_q via an
# odometer.  All arithmetic is table lookups on encoded elements.

import numpy as np

cimport numpy as cnp


def count_chunk(int q, int n, int lead,
                int[::1] coeffs, int[:, ::1] exps, int[::1] offs,
                int[:, ::1] powt, int[:, ::1] add, int[:, ::1] mul):
    cdef int neq = offs.shape[0] - 1
    cdef long total = 0
    cdef int[::1] point = np.zeros(n, dtype=np.int32)
    cdef int i, j, t, e, acc, v, ok, ex
    point[0] = lead

    while True:
        ok = 1
        for e in range(neq):
            acc = 0
            for t in range(offs[e], offs[e + 1]):
                v = coeffs[t]
                for j in range(n):
                    ex = exps[t, j]
                    if ex:
                        v = mul[v, powt[ex, point[j]]]
                acc = add[acc, v]
            if acc != 0:
                ok = 0
                break
        total += ok

        # odometer over point[1..n-1]
        i = n - 1
        while i >= 1:
            point[i] += 1
            if point[i] < q:
                break
            point[i] = 0
            i -= 1
        if i < 1:
            break
    return total
