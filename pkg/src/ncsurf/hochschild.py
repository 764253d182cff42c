"""Hochschild cohomology of the quiver algebra, relative to the vertex span.

The vertex subalgebra E is separable, so the Hochschild cohomology of A is
computed by the complex of E-bimodule maps J^{ox_E n} -> A with J the arrow
radical.  Bidegrees are preserved by such maps, which keeps every term small
(54 resp. 128 at the largest) compared to the bar complex.

Degree-1 cochains vanishing on E are exactly the derivations determined by
their values on the radical; the Gerstenhaber bracket on them is the
commutator, and the cup product is the standard cochain formula.  A second,
independent computation of HH^1 goes through full derivations of A modulo
inner ones, and the two must agree on every input.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from ncsurf.errors import InternalInconsistency, MismatchWithComplex
from ncsurf.exactla import kernel_rows, q_str, rank_rows, rref_rows, solve_coords
from ncsurf.quiveralg import QuiverAlgebra

Q = Fraction

_EXPECTED_TERMS = {"quadratic": (3, 54, 54, 0), "cubic": (4, 80, 128, 48)}


class RelativeComplex:
    """Terms C^0..C^3 and differentials of the E-relative Hochschild complex.

    C^n basis elements are indexed by a chain of composable radical
    components, a domain multi-index into their bases, and a codomain index
    into the target component of A.
    """

    def __init__(self, alg: QuiverAlgebra):
        self.alg = alg
        n = alg.nverts
        self.comps = sorted(alg.radical_components())
        # chains of composable radical components of lengths 1, 2, 3
        self.chains1 = [(c,) for c in self.comps]
        self.chains2 = [
            (c1, c2) for c1 in self.comps for c2 in self.comps if c1[1] == c2[0]
        ]
        self.chains3 = [
            ch + (c3,) for ch in self.chains2 for c3 in self.comps if ch[1][1] == c3[0]
        ]
        self.basis1 = self._enum_basis(self.chains1)
        self.basis2 = self._enum_basis(self.chains2)
        self.basis3 = self._enum_basis(self.chains3)
        self.dims = (n, len(self.basis1), len(self.basis2), len(self.basis3))
        self.pos1 = {b: i for i, b in enumerate(self.basis1)}
        self.pos2 = {b: i for i, b in enumerate(self.basis2)}
        self.pos3 = {b: i for i, b in enumerate(self.basis3)}
        self.d0 = self._build_d0()
        self.d1 = self._build_d1()
        self.d2 = self._build_d2()

    def _enum_basis(self, chains):
        """Basis tuples (chain, domain indices, codomain index)."""
        alg = self.alg
        out = []
        for ch in chains:
            i, k = ch[0][0], ch[-1][1]
            cod = alg.dim(i, k)
            dom_sizes = [alg.dim(*c) for c in ch]
            idx = [0] * len(ch)
            while True:
                for w in range(cod):
                    out.append((ch, tuple(idx), w))
                pos = len(ch) - 1
                while pos >= 0:
                    idx[pos] += 1
                    if idx[pos] < dom_sizes[pos]:
                        break
                    idx[pos] = 0
                    pos -= 1
                if pos < 0:
                    break
        return out

    # -- differentials -------------------------------------------------------

    def _build_d0(self):
        """(d a)(x) = x a - a x for a in the vertex span."""
        n = self.alg.nverts
        rows = []
        for (ch, (u,), w) in self.basis1:
            (i, j) = ch[0]
            row = [Fraction(0)] * n
            if u == w:
                row[j] += 1
                row[i] -= 1
            rows.append(row)
        return rows

    def _build_d1(self):
        """(d f)(x ox y) = x f(y) - f(xy) + f(x) y."""
        alg = self.alg
        rows = [[Fraction(0)] * self.dims[1] for _ in range(self.dims[2])]
        for col, (ch, (u,), w) in enumerate(self.basis1):
            (i, j) = ch[0]
            for ch2 in self.chains2:
                (a1, a2) = ch2
                (p, q), (q2, r) = a1, a2
                for xu in range(alg.dim(p, q)):
                    for yv in range(alg.dim(q, r)):
                        # x f(y): requires (q, r) == (i, j)
                        if (q, r) == (i, j) and yv == u:
                            coords = alg.mult(p, q, r, xu, w)
                            for t, c in enumerate(coords):
                                if c:
                                    rows[self.pos2[(ch2, (xu, yv), t)]][col] += c
                        # -f(xy): requires (p, r) == (i, j)
                        if (p, r) == (i, j):
                            coords = alg.mult(p, q, r, xu, yv)
                            c = coords[u]
                            if c:
                                rows[self.pos2[(ch2, (xu, yv), w)]][col] -= c
                        # f(x) y: requires (p, q) == (i, j)
                        if (p, q) == (i, j) and xu == u:
                            coords = alg.mult(p, q, r, w, yv)
                            for t, c in enumerate(coords):
                                if c:
                                    rows[self.pos2[(ch2, (xu, yv), t)]][col] += c
        return rows

    def _build_d2(self):
        """(d g)(x ox y ox z) = x g(y,z) - g(xy,z) + g(x,yz) - g(x,y) z."""
        alg = self.alg
        rows = [[Fraction(0)] * self.dims[2] for _ in range(self.dims[3])]
        for col, (ch, (u, v), w) in enumerate(self.basis2):
            (a1, a2) = ch
            for ch3 in self.chains3:
                (b1, b2, b3) = ch3
                (p, q), (q_, r), (r_, s) = b1, b2, b3
                for xu in range(alg.dim(p, q)):
                    for yv in range(alg.dim(q, r)):
                        for zt in range(alg.dim(r, s)):
                            # x g(y, z)
                            if (b2, b3) == ch and (yv, zt) == (u, v):
                                coords = alg.mult(p, q, s, xu, w)
                                for t, c in enumerate(coords):
                                    if c:
                                        rows[self.pos3[(ch3, (xu, yv, zt), t)]][col] += c
                            # -g(xy, z)
                            if (b3 == a2) and ((p, r) == a1) and zt == v:
                                coords = alg.mult(p, q, r, xu, yv)
                                c = coords[u]
                                if c:
                                    rows[self.pos3[(ch3, (xu, yv, zt), w)]][col] -= c
                            # +g(x, yz)
                            if (b1 == a1) and ((q, s) == a2) and xu == u:
                                coords = alg.mult(q, r, s, yv, zt)
                                c = coords[v]
                                if c:
                                    rows[self.pos3[(ch3, (xu, yv, zt), w)]][col] += c
                            # -g(x, y) z
                            if (b1, b2) == ch and (xu, yv) == (u, v):
                                coords = alg.mult(p, r, s, w, zt)
                                for t, c in enumerate(coords):
                                    if c:
                                        rows[self.pos3[(ch3, (xu, yv, zt), t)]][col] -= c
        return rows

    # -- checks ---------------------------------------------------------------

    def verify_dd_zero(self) -> bool:
        return _matmul_is_zero(self.d1, self.d0) and _matmul_is_zero(self.d2, self.d1)


def _matmul_is_zero(a, b) -> bool:
    """a @ b == 0 for row-major rational matrices."""
    if not a or not b:
        return True
    cols_b = len(b[0])
    for i in range(len(a)):
        arow = a[i]
        for j in range(cols_b):
            s = Fraction(0)
            for k, c in enumerate(arow):
                if c:
                    s += c * b[k][j]
            if s != 0:
                return False
    return True


def build_complex(alg: QuiverAlgebra) -> RelativeComplex:
    cx = RelativeComplex(alg)
    expected = _EXPECTED_TERMS.get(alg.kind)
    if expected is not None and cx.dims != expected:
        raise InternalInconsistency(f"complex terms {cx.dims}, expected {expected}")
    if not cx.verify_dd_zero():
        raise InternalInconsistency("d о d != 0")
    return cx


def hh_dimensions(cx: RelativeComplex):
    """(h0, h1, h2, h3) from the ranks of the three differentials.

    The identities h0 = 1, h3 = 0 and the Euler characteristic are theorems
    for valid inputs; their failure raises InternalInconsistency.
    """
    n = cx.alg.nverts
    r0 = rank_rows(cx.d0)
    r1 = rank_rows(cx.d1) if cx.d1 else 0
    r2 = rank_rows(cx.d2) if cx.d2 and cx.dims[3] else 0
    h0 = cx.dims[0] - r0
    h1 = (cx.dims[1] - r1) - r0
    h2 = (cx.dims[2] - r2) - r1
    h3 = cx.dims[3] - r2
    if h0 != 1:
        raise InternalInconsistency(f"h0 = {h0} != 1")
    if h3 != 0:
        raise InternalInconsistency(f"h3 = {h3} != 0")
    if h0 - h1 + h2 - h3 != n:
        raise InternalInconsistency("Euler characteristic violates the supertrace identity")
    if h2 != n + h1 - 1:
        raise InternalInconsistency("h2 != #Q0 + h1 - 1")
    return (h0, h1, h2, h3)


# ---------------------------------------------------------------------------
# HH^1 representatives, bracket, cup products
# ---------------------------------------------------------------------------


def hh1_representatives(cx: RelativeComplex):
    """Cocycle representatives of an HH^1 basis (normalized to vanish on E)."""
    cocycles = kernel_rows(cx.d1, ncols=cx.dims[1]) if cx.d1 else []
    im0 = []
    for j in range(cx.dims[0]):
        vec = tuple(cx.d0[i][j] for i in range(cx.dims[1]))
        im0.append(vec)
    aug = _independent(im0)
    reps = []
    for v in cocycles:
        if solve_coords(aug, v) is None:
            aug.append(list(v))
            reps.append(v)
    return reps


def _independent(rows):
    red, pivots = rref_rows(rows) if rows else ([], ())
    return [list(red[i]) for i in range(len(pivots))]


def _as_maps(cx: RelativeComplex, vec):
    """C^1 coordinate vector -> per-component matrices F[comp][u][w]."""
    mats = {}
    for c in cx.comps:
        d = cx.alg.dim(*c)
        mats[c] = [[Fraction(0)] * d for _ in range(d)]
    for pos, (ch, (u,), w) in enumerate(cx.basis1):
        if vec[pos]:
            mats[ch[0]][u][w] += vec[pos]
    return mats


def _from_maps(cx: RelativeComplex, mats):
    vec = [Fraction(0)] * cx.dims[1]
    for pos, (ch, (u,), w) in enumerate(cx.basis1):
        vec[pos] = mats[ch[0]][u][w]
    return tuple(vec)


def lie_bracket_hh1(cx: RelativeComplex, reps=None):
    """Structure constants of the commutator bracket on HH^1.

    Returns (structure constants c[i][j] as coordinate tuples, invariants
    dict with derived-subalgebra dimension, center dimension, Killing rank).
    """
    if reps is None:
        reps = hh1_representatives(cx)
    h1 = len(reps)
    im0 = _independent(
        [tuple(cx.d0[i][j] for i in range(cx.dims[1])) for j in range(cx.dims[0])]
    )
    span = [list(r) for r in reps] + [list(r) for r in im0]
    mats = [_as_maps(cx, r) for r in reps]
    const = [[None] * h1 for _ in range(h1)]
    for i in range(h1):
        for j in range(h1):
            bracket = {}
            for c in cx.comps:
                fi, fj = mats[i][c], mats[j][c]
                d = len(fi)
                m = [[Fraction(0)] * d for _ in range(d)]
                for u in range(d):
                    for t in range(d):
                        a = fj[u][t]
                        b = fi[u][t]
                        if a:
                            for w in range(d):
                                if fi[t][w]:
                                    m[u][w] += a * fi[t][w]
                        if b:
                            for w in range(d):
                                if fj[t][w]:
                                    m[u][w] -= b * fj[t][w]
                bracket[c] = m
            vec = _from_maps(cx, bracket)
            coords = solve_coords(span, vec)
            if coords is None:
                raise InternalInconsistency("bracket of cocycles is not a cocycle")
            const[i][j] = tuple(coords[:h1])
    invariants = _lie_invariants(const)
    return const, invariants


def _lie_invariants(const):
    h1 = len(const)
    derived = rank_rows([list(const[i][j]) for i in range(h1) for j in range(h1)]) if h1 else 0
    # center: x with sum_i x_i c[i][j] = 0 for all j
    rows = []
    for i in range(h1):
        row = []
        for j in range(h1):
            row.extend(const[i][j])
        rows.append(row)
    center = len(kernel_rows([[rows[i][c] for i in range(h1)] for c in range(h1 * h1)], ncols=h1)) if h1 else 0
    # Killing form K[i][j] = tr(ad_i ad_j)
    killing = []
    for i in range(h1):
        row = []
        for j in range(h1):
            s = Fraction(0)
            for k in range(h1):
                for l in range(h1):
                    s += const[i][k][l] * const[j][l][k]
            row.append(s)
        killing.append(row)
    krank = rank_rows(killing) if h1 else 0
    return {"derived_dim": derived, "center_dim": center, "killing_rank": krank}


def cup_products(cx: RelativeComplex, reps=None) -> int:
    """Rank of the span of degree-1 cup products inside HH^2.

    Cochain formula (f cup g)(x ox y) = f(x) g(y); symmetric combinations
    are coboundaries, so this is the rank of the induced pairing on HH^1.
    """
    if reps is None:
        reps = hh1_representatives(cx)
    if not reps:
        return 0
    alg = cx.alg
    mats = [_as_maps(cx, r) for r in reps]
    d1rows = [
        tuple(cx.d1[r][c] for r in range(cx.dims[2])) for c in range(cx.dims[1])
    ]
    base = _independent(d1rows)
    r_im = len(base)
    stacked = [list(b) for b in base]
    for i in range(len(reps)):
        for j in range(len(reps)):
            cup = [Fraction(0)] * cx.dims[2]
            for pos, (ch, (u, v), w) in enumerate(cx.basis2):
                (a1, a2) = ch
                (p, q), (_, r) = a1, a2
                fx = mats[i][a1][u]
                gy = mats[j][a2][v]
                s = Fraction(0)
                for su, cu in enumerate(fx):
                    if cu == 0:
                        continue
                    for sv, cv in enumerate(gy):
                        if cv == 0:
                            continue
                        s += cu * cv * alg.mult(p, q, r, su, sv)[w]
                cup[pos] = s
            stacked.append(cup)
    return rank_rows(stacked) - r_im


# ---------------------------------------------------------------------------
# derivations of A modulo inner derivations (independent HH^1 route)
# ---------------------------------------------------------------------------


def derivation_space(alg: QuiverAlgebra):
    """Dimension data for Der_k(A) via generator values.

    A derivation is determined by its values on the vertex idempotents and
    the arrows.  Values on idempotents are parameterized freely by one
    radical-component vector per component (they are automatically inner);
    for a linear quiver those parameters drop out of the relation
    constraints, which involve only the arrow values.  Returns
    (dim_der, dim_inner, dim_center, d_kernel_basis, n_d).
    """
    n = alg.nverts
    arrows = alg.steps
    dim_j = sum(alg.dim(i, j) for (i, j) in alg.radical_components())
    # unknowns: for each arrow (step s, index a), a vector over A_{s,s+1}
    cols = []
    for s in range(n - 1):
        for a in range(arrows[s]):
            for b in range(alg.dim(s, s + 1)):
                cols.append((s, a, b))
    colpos = {c: i for i, c in enumerate(cols)}
    rows = []
    win = alg.window
    wdim = alg.dim(*win)
    length = win[1] - win[0]
    monos = alg._window_monos
    for r in alg.reducer.red[: alg.reducer.dim] if alg.reducer.dim else []:
        # constraint: sum over words and positions of prefix*d*suffix = 0
        coeffrows = [[Fraction(0)] * len(cols) for _ in range(wdim)]
        for mi, mono in enumerate(monos):
            cm = r[mi]
            if cm == 0:
                continue
            for pos in range(length):
                prefix = mono[:pos]
                suffix = mono[pos + 1 :]
                for b in range(arrows[pos]):
                    red = alg._reduce_window_mono(prefix + (b,) + suffix)
                    col = colpos[(pos, mono[pos], b)]
                    for t, c in enumerate(red):
                        if c:
                            coeffrows[t][col] += cm * c
        rows.extend(coeffrows)
    if rows:
        dker = kernel_rows(rows, ncols=len(cols))
    else:
        dker = [
            tuple(Fraction(1) if t == i else Fraction(0) for t in range(len(cols)))
            for i in range(len(cols))
        ]
    dim_der = dim_j + len(dker)
    dim_center = _center_dim(alg)
    dim_a = alg.total_dim
    dim_inner = dim_a - dim_center
    return dim_der, dim_inner, dim_center, dker, len(cols)


def _center_dim(alg: QuiverAlgebra) -> int:
    """dim Z(A) by solving x g = g x over the full basis against generators."""
    n = alg.nverts
    # coordinates of x: alpha_0..alpha_{n-1}, then radical components
    comps = sorted(alg.radical_components())
    offs = {}
    pos = n
    for c in comps:
        offs[c] = pos
        pos += alg.dim(*c)
    total = pos
    rows = []
    # commute with idempotents: off-diagonal components must vanish
    for c in comps:
        for t in range(alg.dim(*c)):
            row = [Fraction(0)] * total
            row[offs[c] + t] = Fraction(1)
            rows.append(row)
    # commute with arrows: (alpha_s - alpha_{s+1}) * a = 0 for each arrow
    for s in range(n - 1):
        for a in range(alg.steps[s]):
            row = [Fraction(0)] * total
            row[s] = Fraction(1)
            row[s + 1] = Fraction(-1)
            rows.append(row)
    return len(kernel_rows(rows, ncols=total))


def hh1_via_derivations(alg: QuiverAlgebra):
    """dim HH^1 as derivations modulo inner, with dimension diagnostics."""
    dim_der, dim_inner, dim_center, _, _ = derivation_space(alg)
    return dim_der - dim_inner, {
        "dim_der": dim_der,
        "dim_inner": dim_inner,
        "dim_center": dim_center,
    }


# ---------------------------------------------------------------------------
# the full report
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class HHReport:
    h: tuple
    euler: int
    bracket_dim: int
    derived_dim: int
    center_dim: int
    killing_rank: int
    cup_rank: int
    structure_constants: tuple
    derivation_check: dict

    def to_json(self):
        return {
            "h": list(self.h),
            "euler": self.euler,
            "bracket": {
                "dim": self.bracket_dim,
                "derived": self.derived_dim,
                "center": self.center_dim,
                "killing_rank": self.killing_rank,
            },
            "cup_rank": self.cup_rank,
        }


def hochschild_report(alg: QuiverAlgebra, with_bracket: bool = True) -> HHReport:
    """Full HH data for a quiver algebra, with the derivation cross-check."""
    cx = build_complex(alg)
    h = hh_dimensions(cx)
    h1_der, der_diag = hh1_via_derivations(alg)
    if h1_der != h[1]:
        raise MismatchWithComplex(
            f"derivations give h1 = {h1_der}, complex gives {h[1]}"
        )
    if with_bracket:
        reps = hh1_representatives(cx)
        if len(reps) != h[1]:
            raise InternalInconsistency("representative count differs from h1")
        const, inv = lie_bracket_hh1(cx, reps)
        cup = cup_products(cx, reps)
    else:
        const, inv = [], {"derived_dim": 0, "center_dim": 0, "killing_rank": 0}
        cup = 0
    sc = tuple(
        tuple(tuple(q_str(c) for c in const[i][j]) for j in range(len(const)))
        for i in range(len(const))
    )
    return HHReport(
        h=h,
        euler=h[0] - h[1] + h[2] - h[3],
        bracket_dim=h[1],
        derived_dim=inv["derived_dim"],
        center_dim=inv["center_dim"],
        killing_rank=inv["killing_rank"],
        cup_rank=cup,
        structure_constants=sc,
        derivation_check=der_diag,
    )
