"""Pure-Python hot kernels.

Integer fraction-free rank, mod-p rank, and brute-force projective point
counts over small prime fields.  ``ncsurf._kernels_cy`` provides a compiled
twin with the same signatures; ``ncsurf.kernels`` picks one at import time.

All functions take plain Python ints.  Matrices are lists of equal-length
rows; forms are flat term lists ``(e_0, ..., e_{n-1}, c)``.
"""


def bareiss_rank(rows):
    """Rank of an integer matrix by fraction-free Bareiss elimination.

    Skips pivotless columns; all intermediate divisions are exact by
    Sylvester's determinant identity, so the computation stays in ZZ.
    """
    m = [list(r) for r in rows]
    nr = len(m)
    nc = len(m[0]) if nr else 0
    rank = 0
    prev = 1
    r = 0
    for c in range(nc):
        piv = -1
        for i in range(r, nr):
            if m[i][c]:
                piv = i
                break
        if piv < 0:
            continue
        if piv != r:
            m[r], m[piv] = m[piv], m[r]
        row_r = m[r]
        pv = row_r[c]
        for i in range(r + 1, nr):
            row_i = m[i]
            mic = row_i[c]
            if mic:
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
    """Rank of an integer matrix reduced mod the prime p."""
    m = [[x % p for x in r] for r in rows]
    nr = len(m)
    nc = len(m[0]) if nr else 0
    rank = 0
    r = 0
    for c in range(nc):
        piv = -1
        for i in range(r, nr):
            if m[i][c]:
                piv = i
                break
        if piv < 0:
            continue
        if piv != r:
            m[r], m[piv] = m[piv], m[r]
        inv = pow(m[r][c], p - 2, p)
        row_r = m[r]
        for j in range(c, nc):
            row_r[j] = row_r[j] * inv % p
        for i in range(r + 1, nr):
            f = m[i][c]
            if f:
                row_i = m[i]
                for j in range(c, nc):
                    row_i[j] = (row_i[j] - f * row_r[j]) % p
        r += 1
        rank += 1
        if r == nr:
            break
    return rank


def _power_table(p, maxdeg):
    pw = [[1] * (maxdeg + 1) for _ in range(p)]
    for v in range(p):
        for e in range(1, maxdeg + 1):
            pw[v][e] = pw[v][e - 1] * v % p
    return pw


def count_points_p2(terms, p):
    """Number of zeros in P^2(F_p) of a ternary form.

    ``terms`` is a list of ``(e0, e1, e2, c)`` with integer coefficients.
    Enumerates the p^2 + p + 1 points chart by chart.
    """
    maxdeg = 0
    tt = []
    for e0, e1, e2, c in terms:
        c %= p
        if c:
            tt.append((e0, e1, e2, c))
            maxdeg = max(maxdeg, e0, e1, e2)
    if not tt:
        return p * p + p + 1
    pw = _power_table(p, maxdeg)
    count = 0
    for x in range(p):
        pwx = pw[x]
        for y in range(p):
            pwy = pw[y]
            s = 0
            for e0, e1, e2, c in tt:
                s += c * pwx[e0] * pwy[e1]
            if s % p == 0:
                count += 1
    for x in range(p):
        pwx = pw[x]
        s = 0
        for e0, e1, e2, c in tt:
            if e2 == 0:
                s += c * pwx[e0]
        if s % p == 0:
            count += 1
    s = 0
    for e0, e1, e2, c in tt:
        if e1 == 0 and e2 == 0:
            s += c
    if s % p == 0:
        count += 1
    return count


def count_points_p1p1(terms, p):
    """Number of zeros in (P^1 x P^1)(F_p) of a bihomogeneous form.

    ``terms`` is a list of ``(e0, e1, e2, e3, c)``; variables (0,1) are the
    first P^1, (2,3) the second.  Enumerates the (p+1)^2 points.
    """
    maxdeg = 0
    tt = []
    for e0, e1, e2, e3, c in terms:
        c %= p
        if c:
            tt.append((e0, e1, e2, e3, c))
            maxdeg = max(maxdeg, e0, e1, e2, e3)
    if not tt:
        return (p + 1) * (p + 1)
    pw = _power_table(p, maxdeg)
    pts = [(x, 1) for x in range(p)] + [(1, 0)]
    count = 0
    for x, y in pts:
        pwx, pwy = pw[x], pw[y]
        for u, v in pts:
            pwu, pwv = pw[u], pw[v]
            s = 0
            for e0, e1, e2, e3, c in tt:
                s += c * pwx[e0] * pwy[e1] * pwu[e2] * pwv[e3]
            if s % p == 0:
                count += 1
    return count
