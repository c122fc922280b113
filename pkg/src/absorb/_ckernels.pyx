# cython: language_level=3
"""Compiled scan kernels; see absorb._kernels_py for the reference semantics.

Both backends must return identical results on identical inputs; the test
suite cross-checks them and benchmarks/compare_backends.py measures the gap.
"""

from libc.stdlib cimport free, malloc


def find_absorbing_violation(int n, const int[::1] mul, const int[::1] nonunits,
                             const unsigned char[::1] in_i,
                             const unsigned char[::1] in_phi):
    cdef Py_ssize_t k = nonunits.shape[0]
    cdef Py_ssize_t ix, iy, iz
    cdef int x, y, z, w, t, cand
    cdef int *least_z = <int *> malloc(n * sizeof(int))
    if least_z == NULL:
        raise MemoryError()
    try:
        for ix in range(n):
            least_z[ix] = -2
        for ix in range(k):
            x = nonunits[ix]
            for iy in range(k):
                y = nonunits[iy]
                w = mul[x * n + y]
                if in_i[w]:
                    continue
                z = least_z[w]
                if z == -2:
                    z = -1
                    for iz in range(k):
                        cand = nonunits[iz]
                        if in_i[cand]:
                            continue
                        t = mul[w * n + cand]
                        if in_i[t] and not in_phi[t]:
                            z = cand
                            break
                    least_z[w] = z
                if z >= 0:
                    return (x, y, z)
        return None
    finally:
        free(least_z)


def find_pair_violation(int n, const int[::1] mul,
                        const unsigned char[::1] in_i,
                        const unsigned char[::1] in_phi):
    cdef int x, y, t
    for x in range(n):
        if in_i[x]:
            continue
        for y in range(n):
            if in_i[y]:
                continue
            t = mul[x * n + y]
            if in_i[t] and not in_phi[t]:
                return (x, y)
    return None


def find_two_absorbing_violation(int n, const int[::1] mul,
                                 const unsigned char[::1] in_i,
                                 bint require_nonzero):
    cdef int x, y, z, w, t
    for x in range(n):
        for y in range(n):
            w = mul[x * n + y]
            if in_i[w]:
                continue
            for z in range(n):
                t = mul[w * n + z]
                if not in_i[t]:
                    continue
                if require_nonzero and t == 0:
                    continue
                if in_i[mul[x * n + z]] or in_i[mul[y * n + z]]:
                    continue
                return (x, y, z)
    return None


def check_axioms(int n, const int[::1] add, const int[::1] mul, int one):
    cdef int x, y, z, xy_add, xy_mul
    cdef bint has_neg
    for x in range(n):
        if add[x] != x:
            return ("zero", x)
        if mul[one * n + x] != x:
            return ("one", x)
    for x in range(n):
        has_neg = False
        for y in range(n):
            if add[x * n + y] == 0:
                has_neg = True
            if add[x * n + y] != add[y * n + x]:
                return ("add_comm", x, y)
            if mul[x * n + y] != mul[y * n + x]:
                return ("mul_comm", x, y)
        if not has_neg:
            return ("neg", x)
    for x in range(n):
        for y in range(n):
            xy_add = add[x * n + y]
            xy_mul = mul[x * n + y]
            for z in range(n):
                if add[xy_add * n + z] != add[x * n + add[y * n + z]]:
                    return ("add_assoc", x, y, z)
                if mul[xy_mul * n + z] != mul[x * n + mul[y * n + z]]:
                    return ("mul_assoc", x, y, z)
                if mul[x * n + add[y * n + z]] != add[xy_mul * n + mul[x * n + z]]:
                    return ("distrib", x, y, z)
    return None
