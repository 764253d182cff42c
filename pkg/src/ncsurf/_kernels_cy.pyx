# cython: language_level=3
"""Compiled hot kernels; signature-compatible with ncsurf._kernels_py."""

def bareiss_rank(rows):
    """Rank of an integer matrix, fraction-free Bareiss over Python ints."""
    cdef list m = [list(row) for row in rows]
    cdef Py_ssize_t nr = len(m)
    cdef Py_ssize_t nc = 0
    if nr:
        nc = len(<list>m[0])
    cdef Py_ssize_t rank = 0, r = 0, c, i, j, piv
    cdef list row_r, row_i
    prev = 1
    for c in range(nc):
        piv = -1
        for i in range(r, nr):
            if (<list>m[i])[c] != 0:
                piv = i
                break
        if piv < 0:
            continue
        if piv != r:
            m[r], m[piv] = m[piv], m[r]
        row_r = <list>m[r]
        pv = row_r[c]
        for i in range(r + 1, nr):
            row_i = <list>m[i]
            mic = row_i[c]
            if mic != 0:
                for j in range(c + 1, nc):
                    row_i[j] = (pv * row_i[j] - mic * row_r[j]) // prev
                row_i[c] = 0
            elif prev != pv:
                for j in range(c + 1, nc):
                    row_i[j] = (pv * row_i[j]) // prev
        prev = pv
        r += 1
        rank += 1
        if r == nr:
            break
    return rank


def modp_rank(rows, p):
    """Rank of an integer matrix mod a prime p (machine arithmetic)."""
    cdef long long lp = p
    cdef list m = [[<long long>(x % p) for x in row] for row in rows]
    cdef Py_ssize_t nr = len(m)
    cdef Py_ssize_t nc = 0
    if nr:
        nc = len(<list>m[0])
    cdef Py_ssize_t rank = 0, r = 0, c, i, j, piv
    cdef long long inv, f, v
    cdef list row_r, row_i
    for c in range(nc):
        piv = -1
        for i in range(r, nr):
            if (<list>m[i])[c] != 0:
                piv = i
                break
        if piv < 0:
            continue
        if piv != r:
            m[r], m[piv] = m[piv], m[r]
        row_r = <list>m[r]
        inv = _inv_mod(<long long>row_r[c], lp)
        for j in range(c, nc):
            row_r[j] = (<long long>row_r[j]) * inv % lp
        for i in range(r + 1, nr):
            row_i = <list>m[i]
            f = <long long>row_i[c]
            if f != 0:
                for j in range(c, nc):
                    v = (<long long>row_i[j]) - f * (<long long>row_r[j])
                    row_i[j] = v % lp
        r += 1
        rank += 1
        if r == nr:
            break
    return rank


cdef long long _inv_mod(long long a, long long p):
    cdef long long result = 1
    cdef long long base = a % p
    cdef long long e = p - 2
    while e > 0:
        if e & 1:
            result = result * base % p
        base = base * base % p
        e >>= 1
    return result


def count_points_p2(terms, p):
    """Zeros in P^2(F_p) of a ternary form given as (e0,e1,e2,c) terms."""
    cdef int lp = <int>p
    cdef list tt = []
    cdef int maxdeg = 0
    for e0, e1, e2, c in terms:
        cm = c % p
        if cm:
            tt.append((e0, e1, e2, cm))
            if e0 > maxdeg:
                maxdeg = <int>e0
            if e1 > maxdeg:
                maxdeg = <int>e1
            if e2 > maxdeg:
                maxdeg = <int>e2
    cdef Py_ssize_t nt = len(tt)
    if nt == 0:
        return p * p + p + 1
    cdef int[64] te0, te1, te2
    cdef long long[64] tc
    if nt > 64:
        raise ValueError("too many terms for compiled kernel")
    cdef Py_ssize_t k
    for k in range(nt):
        te0[k] = tt[k][0]
        te1[k] = tt[k][1]
        te2[k] = tt[k][2]
        tc[k] = tt[k][3]
    # power table
    cdef list pw_py = []
    cdef long long[:, :] pw
    import numpy as _np
    arr = _np.ones((lp, maxdeg + 1), dtype=_np.int64)
    cdef long long[:, :] a = arr
    cdef int v, e
    for v in range(lp):
        for e in range(1, maxdeg + 1):
            a[v, e] = a[v, e - 1] * v % lp
    pw = a
    cdef long long count = 0, s
    cdef int x, y
    for x in range(lp):
        for y in range(lp):
            s = 0
            for k in range(nt):
                s += tc[k] * pw[x, te0[k]] % lp * pw[y, te1[k]] % lp
            if s % lp == 0:
                count += 1
    for x in range(lp):
        s = 0
        for k in range(nt):
            if te2[k] == 0:
                s += tc[k] * pw[x, te0[k]] % lp
        if s % lp == 0:
            count += 1
    s = 0
    for k in range(nt):
        if te1[k] == 0 and te2[k] == 0:
            s += tc[k]
    if s % lp == 0:
        count += 1
    return count


def count_points_p1p1(terms, p):
    """Zeros in (P^1 x P^1)(F_p) of a bihomogeneous form."""
    cdef int lp = <int>p
    cdef list tt = []
    cdef int maxdeg = 0
    for e0, e1, e2, e3, c in terms:
        cm = c % p
        if cm:
            tt.append((e0, e1, e2, e3, cm))
            for ee in (e0, e1, e2, e3):
                if ee > maxdeg:
                    maxdeg = <int>ee
    cdef Py_ssize_t nt = len(tt)
    if nt == 0:
        return (p + 1) * (p + 1)
    if nt > 64:
        raise ValueError("too many terms for compiled kernel")
    cdef int[64] te0, te1, te2, te3
    cdef long long[64] tc
    cdef Py_ssize_t k
    for k in range(nt):
        te0[k] = tt[k][0]
        te1[k] = tt[k][1]
        te2[k] = tt[k][2]
        te3[k] = tt[k][3]
        tc[k] = tt[k][4]
    import numpy as _np
    arr = _np.ones((lp + 1, maxdeg + 1), dtype=_np.int64)
    cdef long long[:, :] pw = arr
    cdef int v, e
    for v in range(lp + 1):
        base = v if v < lp else 0
        for e in range(1, maxdeg + 1):
            pw[v, e] = pw[v, e - 1] * base % lp
    # points: (x,1) for x in 0..p-1 and (1,0)
    cdef long long count = 0, s
    cdef int xi, ui
    cdef int npts = lp + 1
    cdef long long px0, px1, pu0, pu1
    for xi in range(npts):
        for ui in range(npts):
            s = 0
            for k in range(nt):
                if xi < lp:
                    px0 = pw[xi, te0[k]]
                    px1 = 1
                else:
                    px0 = 1 if te0[k] == 0 else 1
                    px1 = 1 if te1[k] == 0 else 0
                if ui < lp:
                    pu0 = pw[ui, te2[k]]
                    pu1 = 1
                else:
                    pu0 = 1
                    pu1 = 1 if te3[k] == 0 else 0
                s += tc[k] * px0 % lp * px1 % lp * pu0 % lp * pu1 % lp
            if s % lp == 0:
                count += 1
    return count
