"""Pure-Python fallback for the hot scan kernels.

Same contracts as the compiled backend in ``absorb._ckernels``: all four
functions take a flat row-major multiplication table ``mul`` (length n*n),
0/1 membership buffers, and return the lexicographically least violation
(scanning x, then y, then z by element id) or None.

The inner z-scan of the absorbing-triple search is memoized per product
value w = x*y; this changes nothing about which triple is returned because
for a fixed pair the least violating z depends on w only.
"""

BACKEND_NAME = "python"


def find_absorbing_violation(n, mul, nonunits, in_i, in_phi):
    """Least nonunit triple (x, y, z) with x*y*z in I minus phi, x*y not in I
    and z not in I, else None."""
    least_z = [-2] * n  # -2 unknown, -1 no z for this product value
    for x in nonunits:
        row = x * n
        for y in nonunits:
            w = mul[row + y]
            if in_i[w]:
                continue
            z = least_z[w]
            if z == -2:
                z = -1
                wrow = w * n
                for cand in nonunits:
                    if in_i[cand]:
                        continue
                    t = mul[wrow + cand]
                    if in_i[t] and not in_phi[t]:
                        z = cand
                        break
                least_z[w] = z
            if z >= 0:
                return (x, y, z)
    return None


def find_pair_violation(n, mul, in_i, in_phi):
    """Least pair (x, y) over ALL elements with x*y in I minus phi, x not in I
    and y not in I, else None."""
    for x in range(n):
        if in_i[x]:
            continue
        row = x * n
        for y in range(n):
            if in_i[y]:
                continue
            t = mul[row + y]
            if in_i[t] and not in_phi[t]:
                return (x, y)
    return None


def find_two_absorbing_violation(n, mul, in_i, require_nonzero):
    """Least triple (x, y, z) over ALL elements with x*y*z in I (nonzero when
    requested) and none of x*y, x*z, y*z in I, else None."""
    for x in range(n):
        xrow = x * n
        for y in range(n):
            w = mul[xrow + y]
            if in_i[w]:
                continue
            wrow = w * n
            for z in range(n):
                t = mul[wrow + z]
                if not in_i[t]:
                    continue
                if require_nonzero and t == 0:
                    continue
                if in_i[mul[xrow + z]] or in_i[mul[y * n + z]]:
                    continue
                return (x, y, z)
    return None


def check_axioms(n, add, mul, one):
    """First commutative-ring law violation over the given tables, or None.

    Returns ("law", elements...) tuples; zero is assumed to sit at id 0.
    """
    for x in range(n):
        if add[x] != x:  # row 0 of the addition table
            return ("zero", x)
        if mul[one * n + x] != x:
            return ("one", x)
    for x in range(n):
        row = x * n
        has_neg = False
        for y in range(n):
            if add[row + y] == 0:
                has_neg = True
            if add[row + y] != add[y * n + x]:
                return ("add_comm", x, y)
            if mul[row + y] != mul[y * n + x]:
                return ("mul_comm", x, y)
        if not has_neg:
            return ("neg", x)
    for x in range(n):
        row = x * n
        for y in range(n):
            xy_add = add[row + y]
            xy_mul = mul[row + y]
            for z in range(n):
                if add[xy_add * n + z] != add[row + add[y * n + z]]:
                    return ("add_assoc", x, y, z)
                if mul[xy_mul * n + z] != mul[row + mul[y * n + z]]:
                    return ("mul_assoc", x, y, z)
                if mul[row + add[y * n + z]] != add[xy_mul * n + mul[row + z]]:
                    return ("distrib", x, y, z)
    return None
