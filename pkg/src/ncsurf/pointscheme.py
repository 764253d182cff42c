"""Point schemes and their classification.

Quadratic tensors cut out a plane cubic (the determinant of the contraction
pencil); cubic tensors cut out a (2,2)-divisor on P^1 x P^1 (the determinant
of the 2x2 matrix of third-variable coefficients of the two multilinearized
relations).  Plane cubics are classified into the nine projective types by
an entirely rational decision tree: repeated-factor part, Hessian, then the
singular scheme over the closure -- every component line the tree needs is
rational by Galois stability, so divisibility tests settle each branch.
(2,2)-divisors are classified by the Segre symbol of the quadric pencil cut
by the Segre embedding, computed from determinantal divisors and gcd-free
root grouping, never from an irreducible factorization.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import isqrt

from ncsurf.errors import (
    DegeneratePencil,
    InternalInconsistency,
    NotZeroDimensional,
    SingularPencil,
    UnclassifiedCubic,
    UnknownSymbol,
)
from ncsurf.exactla import Matrix, charpoly
from ncsurf.polyring.dyneval import (
    AlgebraicContext,
    SolPoint,
    dynamic_eval_solve,
    split_run,
)
from ncsurf.polyring.homform import (
    HomForm,
    det2,
    form_gcd_list,
    hessian_det,
    try_divide,
)
from ncsurf.polyring.unipoly import (
    UniPoly,
    gcd_free_basis,
    gcd_uni,
    squarefree_decomposition,
)
from ncsurf.superpot import CUBIC, QUADRATIC, Tensor, pencil_determinant

Q = Fraction


@dataclass(frozen=True)
class CurveClass:
    family: str  # "plane" | "quadric"
    verdict: str  # "P1".."P9" | "Q1".."Q13" | "Linear"
    segre: str | None = None
    diagnostics: dict = field(default_factory=dict)

    def to_json(self):
        out = {"family": self.family, "verdict": self.verdict}
        if self.segre is not None:
            out["segre"] = self.segre
        out["diagnostics"] = {k: str(v) for k, v in sorted(self.diagnostics.items())}
        return out


#: divisor names, Table-style labels for the report
PLANE_NAMES = {
    "P1": "elliptic curve",
    "P2": "cuspidal curve",
    "P3": "nodal curve",
    "P4": "three lines in general position",
    "P5": "three lines through a point",
    "P6": "conic and line in general position",
    "P7": "conic and tangent line",
    "P8": "triple line",
    "P9": "double line and line",
    "Linear": "commutative plane",
}

QUADRIC_NAMES = {
    "Q1": "elliptic curve",
    "Q2": "cuspidal curve",
    "Q3": "nodal curve",
    "Q4": "two conics in general position",
    "Q5": "two tangent conics",
    "Q6": "conic and two lines in a triangle",
    "Q7": "conic and two lines through a point",
    "Q8": "quadrangle",
    "Q9": "twisted cubic and a bisecant",
    "Q10": "twisted cubic and a tangent line",
    "Q11": "double conic",
    "Q12": "two double lines",
    "Q13": "double line and two lines in general position",
    "Linear": "commutative quadric",
}


# ---------------------------------------------------------------------------
# plane cubics
# ---------------------------------------------------------------------------


def plane_cubic(t: Tensor, slot: int = 0) -> HomForm:
    """The point-scheme cubic det W_slot(v); identically zero in the linear case."""
    if t.kind != QUADRATIC:
        raise ValueError("plane_cubic expects a quadratic tensor")
    return pencil_determinant(t, slot)


def classify_plane_cubic(f: HomForm) -> CurveClass:
    """Classify a ternary cubic into Linear / P1..P9.

    Decision tree: zero form -> Linear; repeated-factor part -> P8/P9;
    vanishing Hessian -> P5; empty singular scheme -> P1; else by the number
    of distinct singular points over the closure (3 -> P4, 2 -> P6, 1 ->
    node/cusp analysis distinguishing P3 vs P6 and P2 vs P7 by explicit
    division against rational tangent data).
    """
    if f.nvars != 3 or (not f.is_zero() and f.degree != 3):
        raise ValueError("classify_plane_cubic expects a ternary cubic")
    diag: dict = {}
    if f.is_zero():
        return CurveClass("plane", "Linear", None, {"reason": "zero determinant"})
    partials = [f.partial(i) for i in range(3)]
    rep = form_gcd_list([f] + partials)
    diag["repeated_factor_degree"] = rep.degree
    if rep.degree >= 1:
        return _classify_nonreduced(f, rep, diag)
    hess = hessian_det(f)
    diag["hessian_zero"] = hess.is_zero()
    if hess.is_zero():
        return CurveClass("plane", "P5", None, diag)
    try:
        sol = dynamic_eval_solve([p for p in partials if not p.is_zero()])
    except NotZeroDimensional as exc:
        raise UnclassifiedCubic("squarefree cubic with non-finite singular scheme") from exc
    diag["singular_points"] = sol.count
    if sol.count == 0:
        return CurveClass("plane", "P1", None, diag)
    if sol.count == 3:
        return CurveClass("plane", "P4", None, diag)
    if sol.count == 2:
        line = _line_through_pair(sol.points)
        conic = try_divide(f, HomForm.linear(line))
        if conic is None or _conic_rank(conic) != 3:
            raise UnclassifiedCubic("two singular points but no transversal line factor")
        diag["line"] = line
        return CurveClass("plane", "P6", None, diag)
    if sol.count == 1:
        return _classify_one_singular(f, sol.points[0], diag)
    raise UnclassifiedCubic(f"cubic with {sol.count} singular points")


def _classify_nonreduced(f: HomForm, rep: HomForm, diag) -> CurveClass:
    if rep.degree == 2:
        line = try_divide(f, rep)
        if line is None or line.degree != 1:
            raise UnclassifiedCubic("repeated part of degree 2 without cubic split")
        diag["line"] = _linear_coeffs(line)
        return CurveClass("plane", "P8", None, diag)
    if rep.degree == 1:
        residual = try_divide(f, rep * rep)
        if residual is None or residual.degree != 1:
            raise UnclassifiedCubic("double line without linear residual")
        if _proportional(residual, rep):
            return CurveClass("plane", "P8", None, diag)
        diag["double_line"] = _linear_coeffs(rep)
        diag["line"] = _linear_coeffs(residual)
        return CurveClass("plane", "P9", None, diag)
    raise UnclassifiedCubic(f"repeated-factor part of degree {rep.degree}")


def _classify_one_singular(f: HomForm, pt: SolPoint, diag) -> CurveClass:
    if pt.modulus is not None:
        raise UnclassifiedCubic("unique singular point failed to be rational")
    p = _primitive_int_vec(pt.coords)
    diag["singular_point"] = p
    u = _completion_matrix(p)
    g = f.subs_linear(u)
    if g.coeffs.get((0, 0, 3)) or g.coeffs.get((1, 0, 2)) or g.coeffs.get((0, 1, 2)):
        raise UnclassifiedCubic("claimed singular point is not singular")
    a = g.coeffs.get((2, 0, 1), Q(0))
    b = g.coeffs.get((1, 1, 1), Q(0))
    c = g.coeffs.get((0, 2, 1), Q(0))
    if a == 0 and b == 0 and c == 0:
        raise UnclassifiedCubic("triple point outside the concurrent-lines branch")
    disc = b * b - 4 * a * c
    diag["tangent_cone_disc"] = disc
    uinv = Matrix(u).inverse()
    if disc == 0:
        # rank-1 tangent cone: the double tangent line is rational
        local = (2 * a, b) if a != 0 else (Q(0), 2 * c)
        line = _pullback_line(local, uinv)
        conic = try_divide(f, HomForm.linear(line))
        diag["tangent_line"] = line
        if conic is not None:
            if _conic_rank(conic) != 3:
                raise UnclassifiedCubic("tangent line divides but residual is not a smooth conic")
            return CurveClass("plane", "P7", None, diag)
        return CurveClass("plane", "P2", None, diag)
    # rank-2 cone: nodal; a rational branch line dividing f would mean a
    # conic + line configuration instead (cannot happen with one singular
    # point, but the division test keeps the verdict honest)
    for local in _binary_branches(a, b, c, disc):
        line = _pullback_line(local, uinv)
        if try_divide(f, HomForm.linear(line)) is not None:
            diag["line"] = line
            return CurveClass("plane", "P6", None, diag)
    return CurveClass("plane", "P3", None, diag)


def _binary_branches(a, b, c, disc):
    """Rational root lines of a rank-2 binary quadratic, if any."""
    sq = _fraction_sqrt(disc)
    if sq is None:
        return []
    if a != 0:
        return [(2 * a, b + sq), (2 * a, b - sq)]
    if c != 0:
        return [(b + sq, 2 * c), (b - sq, 2 * c)]
    return [(Q(1), Q(0)), (Q(0), Q(1))]


def _linear_coeffs(l: HomForm):
    vec = [Q(0)] * l.nvars
    for e, c in l.coeffs.items():
        vec[list(e).index(1)] = c
    return tuple(vec)


def _proportional(a: HomForm, b: HomForm) -> bool:
    return a.primitive_int() == b.primitive_int() or a.primitive_int() == (-b).primitive_int()


def _primitive_int_vec(coords):
    from math import gcd, lcm

    m = 1
    for c in coords:
        m = lcm(m, Fraction(c).denominator)
    ints = [int(Fraction(c) * m) for c in coords]
    g = 0
    for v in ints:
        g = gcd(g, v)
    if g:
        ints = [v // g for v in ints]
    for v in ints:
        if v:
            if v < 0:
                ints = [-x for x in ints]
            break
    return tuple(Fraction(v) for v in ints)


def _completion_matrix(p):
    """Invertible integer matrix whose third column is p."""
    best = max(range(3), key=lambda i: abs(p[i]))
    others = [i for i in range(3) if i != best]
    cols = [[Q(0)] * 3 for _ in range(3)]
    for r in range(3):
        cols[r][2] = p[r]
    cols[others[0]][0] = Q(1)
    cols[others[1]][1] = Q(1)
    return cols


def _pullback_line(local, uinv: Matrix):
    """Linear form l(y) in chart coordinates -> coefficients in the original."""
    vec = [Q(0)] * 3
    for j in range(3):
        for i, cl in enumerate(local):
            vec[j] += cl * uinv.data[i][j]
    return tuple(_primitive_int_vec(vec))


def _conic_rank(q: HomForm) -> int:
    m = [[Q(0)] * 3 for _ in range(3)]
    for (e0, e1, e2), c in q.coeffs.items():
        idx = []
        for i, e in enumerate((e0, e1, e2)):
            idx.extend([i] * e)
        i, j = idx
        if i == j:
            m[i][i] += c
        else:
            m[i][j] += c / 2
            m[j][i] += c / 2
    return Matrix(m).rank()


def _fraction_sqrt(x: Fraction):
    if x < 0:
        return None
    n, d = x.numerator, x.denominator
    rn, rd = isqrt(n), isqrt(d)
    if rn * rn == n and rd * rd == d:
        return Fraction(rn, rd)
    return None


def _line_through_pair(points):
    """The rational line through two (possibly conjugate) projective points."""
    rational = [p for p in points if p.modulus is None]
    if len(rational) == 2:
        a, b = rational[0].coords, rational[1].coords
        cross = (
            a[1] * b[2] - a[2] * b[1],
            a[2] * b[0] - a[0] * b[2],
            a[0] * b[1] - a[1] * b[0],
        )
        return _primitive_int_vec(cross)
    grouped = [p for p in points if p.modulus is not None and p.npoints == 2]
    if len(grouped) != 1 or rational:
        raise UnclassifiedCubic("unexpected singular-point arrangement")
    pt = grouped[0]
    m = pt.modulus  # monic squarefree quadratic t^2 + b t + c
    bcoef = m.coeffs[1]
    ctx = AlgebraicContext(m)
    conj = [u.compose_linear(Q(-1), -bcoef) % m for u in pt.coords]
    a = pt.coords
    cross = [
        ctx.reduce(a[1] * conj[2] - a[2] * conj[1]),
        ctx.reduce(a[2] * conj[0] - a[0] * conj[2]),
        ctx.reduce(a[0] * conj[1] - a[1] * conj[0]),
    ]
    # cross is antisymmetric under conjugation, so dividing by t - conj(t)
    # = 2t + b leaves Galois-fixed, i.e. constant, coordinates
    denom_inv = ctx.inverse(UniPoly([bcoef, Q(2)]))
    line = []
    for v in cross:
        r = ctx.mul(v, denom_inv)
        if r.degree() > 0:
            raise UnclassifiedCubic("line through conjugate pair is not rational")
        line.append(r.coeffs[0] if r.coeffs else Q(0))
    return _primitive_int_vec(line)


# ---------------------------------------------------------------------------
# mod-p count profiles for reduced plane types
# ---------------------------------------------------------------------------


def plane_count_ok(verdict: str, count: int, p: int) -> bool:
    """Is a mod-p point count consistent with the verdict's component structure?

    Sets cover the possible Galois splittings of the components; P1 uses the
    Hasse bound.
    """
    if verdict == "P1":
        return (count - p - 1) ** 2 <= 4 * p
    profiles = {
        "P2": {p + 1},
        "P3": {p, p + 2},
        "P4": {3 * p, p + 2, 0},
        "P5": {3 * p + 1, p + 1, 1},
        "P6": {2 * p, 2 * p + 2},
        "P7": {2 * p + 1},
        "P8": {p + 1},
        "P9": {2 * p + 1},
        "Linear": {p * p + p + 1},
    }
    return count in profiles[verdict]


# ---------------------------------------------------------------------------
# (2,2)-divisors and Segre symbols
# ---------------------------------------------------------------------------


def quadric_divisor(t: Tensor) -> HomForm:
    """The (2,2)-form cutting the point scheme in P^1 x P^1.

    For (p, q) fixed, the two relations are linear in the third variable;
    the divisor is the vanishing of the 2x2 determinant of their
    coefficients.  Identically zero in the linear case.
    """
    if t.kind != CUBIC:
        raise ValueError("quadric_divisor expects a cubic tensor")
    entries = []
    for d in range(2):
        row = []
        for c in range(2):
            coeffs = {}
            for a in range(2):
                for b in range(2):
                    v = t[(a, b, c, d)]
                    if v:
                        e = [0, 0, 0, 0]
                        e[a] += 1
                        e[2 + b] += 1
                        coeffs[tuple(e)] = v
            row.append(HomForm(4, 2, coeffs))
        entries.append(row)
    return det2(entries)


_SEGRE_M = Matrix(
    [
        [0, 0, 0, Fraction(1, 2)],
        [0, 0, Fraction(-1, 2), 0],
        [0, Fraction(-1, 2), 0, 0],
        [Fraction(1, 2), 0, 0, 0],
    ]
)

_LIFT_TABLE = {
    (2, 0, 2, 0): (0, 0),
    (2, 0, 1, 1): (0, 1),
    (2, 0, 0, 2): (1, 1),
    (1, 1, 2, 0): (0, 2),
    (1, 1, 1, 1): (0, 3),  # the ambiguous monomial xyuv goes to z1 z4
    (1, 1, 0, 2): (1, 3),
    (0, 2, 2, 0): (2, 2),
    (0, 2, 1, 1): (2, 3),
    (0, 2, 0, 2): (3, 3),
}


def segre_lift(f: HomForm):
    """(M, N): the Segre quadric and a symmetric lift of f to P^3.

    Coordinates z1 = xu, z2 = xv, z3 = yu, z4 = yv; the mixed monomial xyuv
    is assigned to z1 z4 (any other choice shifts N by a multiple of M).
    """
    if f.is_zero():
        raise ValueError("cannot lift the zero form")
    if f.nvars != 4 or f.bidegree() != (2, 2):
        raise ValueError("segre_lift expects a (2,2)-form")
    n = [[Q(0)] * 4 for _ in range(4)]
    for e, c in f.coeffs.items():
        i, j = _LIFT_TABLE[e]
        if i == j:
            n[i][i] += c
        else:
            n[i][j] += c / 2
            n[j][i] += c / 2
    nmat = Matrix(n)
    if _is_multiple(nmat, _SEGRE_M):
        raise DegeneratePencil("lift is a rational multiple of the Segre quadric")
    return _SEGRE_M, nmat


def _is_multiple(a: Matrix, b: Matrix) -> bool:
    ratio = None
    for i in range(a.nrows):
        for j in range(a.ncols):
            x, y = a.data[i][j], b.data[i][j]
            if y == 0:
                if x != 0:
                    return False
            else:
                r = x / y
                if ratio is None:
                    ratio = r
                elif r != ratio:
                    return False
    return True


@dataclass(frozen=True)
class SegreSymbol:
    """Grouped Jordan-block data of a regular symmetric pencil.

    ``groups`` pairs each grouping polynomial (monic, squarefree, pairwise
    coprime) with the descending block-size tuple shared by all of its
    roots; ``expansion`` repeats each group once per root.
    """

    groups: tuple

    @property
    def expansion(self):
        out = []
        for poly, blocks in self.groups:
            out.extend([tuple(blocks)] * poly.degree())
        return tuple(sorted(out, key=_group_order))

    def key(self):
        return tuple(sorted(self.expansion))

    def __str__(self):
        parts = []
        for blocks in self.expansion:
            if len(blocks) == 1:
                parts.append(str(blocks[0]))
            else:
                parts.append("(" + ",".join(str(b) for b in blocks) + ")")
        return "[" + ",".join(parts) + "]"

    def to_json(self):
        return {
            "symbol": str(self),
            "groups": [
                {"poly": poly.to_json(), "blocks": list(blocks)}
                for poly, blocks in self.groups
            ],
        }


def _group_order(blocks):
    return (-sum(blocks), len(blocks), tuple(-b for b in blocks))


def segre_symbol(m: Matrix, n: Matrix) -> SegreSymbol:
    """Segre symbol of the pencil lambda*M + N via determinantal divisors.

    d_k = gcd of all k x k minors, s_k = d_k / d_{k-1}; per gcd-free
    grouping polynomial the positive valuations among s_1..s_4 are the
    block sizes.  No irreducible factorization: Galois-conjugate roots
    share their block data.
    """
    if m.nrows != 4 or n.nrows != 4:
        raise ValueError("segre_symbol expects 4x4 symmetric matrices")
    if m.det() == 0:
        raise SingularPencil("pencil base matrix is singular")
    pencil = [
        [UniPoly([n.data[i][j], m.data[i][j]]) for j in range(4)] for i in range(4)
    ]
    dets = [UniPoly.const(1)]
    from itertools import combinations

    for k in range(1, 5):
        g = UniPoly.zero()
        for rows in combinations(range(4), k):
            for cols in combinations(range(4), k):
                sub = [[pencil[r][c] for c in cols] for r in rows]
                d = _poly_det(sub)
                if not d.is_zero():
                    g = d.monic() if g.is_zero() else gcd_uni(g, d)
        if g.is_zero():
            raise SingularPencil("det(lambda*M + N) vanishes identically")
        dets.append(g)
    invariant = [dets[k].exact_div(dets[k - 1]).monic() for k in range(1, 5)]
    pieces = []  # (poly, multiplicity, which invariant factor)
    for k, s in enumerate(invariant):
        if s.degree() >= 1:
            for g, mult in squarefree_decomposition(s):
                pieces.append((g, mult, k))
    if not pieces:
        raise SingularPencil("pencil has no finite elementary divisors")
    basis, facs = gcd_free_basis([g for g, _, _ in pieces])
    groups = []
    for bi, b in enumerate(basis):
        blocks = []
        for (g, mult, k), idxs in zip(pieces, facs):
            if bi in idxs:
                blocks.append(mult)
        blocks.sort(reverse=True)
        groups.append((b, tuple(blocks)))
    groups.sort(key=lambda gb: (gb[0].degree(), gb[0].coeffs))
    sym = SegreSymbol(tuple(groups))
    total = sum(sum(blocks) for blocks in sym.expansion)
    if total != 4:
        raise InternalInconsistency(f"Segre blocks sum to {total}, not 4")
    return sym


def _poly_det(rows):
    """Determinant of a small matrix of UniPoly (cofactor expansion)."""
    k = len(rows)
    if k == 1:
        return rows[0][0]
    out = UniPoly.zero()
    sign = 1
    for j in range(k):
        if rows[0][j]:
            minor = [[rows[i][c] for c in range(k) if c != j] for i in range(1, k)]
            term = rows[0][j] * _poly_det(minor)
            out = out + term if sign > 0 else out - term
        sign = -sign
    return out


def segre_rank_oracle(m: Matrix, n: Matrix):
    """Independent block data: ranks of (M^-1 N - rho)^k in split contexts.

    Returns the expansion multiset (sorted block tuples, one per eigenvalue)
    computed from rank sequences, for comparison with segre_symbol.
    """
    b = m.inverse() * n
    cp = charpoly(b)
    sq = cp
    g = gcd_uni(sq, sq.derivative())
    if g.degree() >= 1:
        sq = sq.exact_div(g.scale(sq.lc()).monic()).monic()

    bt = [
        [
            UniPoly([b.data[i][j], Q(-1)]) if i == j else UniPoly([b.data[i][j]])
            for j in range(4)
        ]
        for i in range(4)
    ]

    def ranks(ctx):
        out = [4]
        power = [[UniPoly.const(1) if i == j else UniPoly.zero() for j in range(4)] for i in range(4)]
        for _ in range(4):
            power = _poly_matmul(power, bt, ctx)
            out.append(_ctx_rank_single(power, ctx))
        out.append(out[-1])  # rank of the 5th power equals the 4th
        return out

    expansion = []
    for ctx, rk in split_run(sq, ranks):
        blocks = []
        for size in range(1, 5):
            nblocks = rk[size - 1] - 2 * rk[size] + rk[size + 1]
            blocks.extend([size] * nblocks)
        blocks.sort(reverse=True)
        expansion.extend([tuple(blocks)] * ctx.degree)
    return tuple(sorted(expansion))


def _poly_matmul(a, b, ctx):
    k = len(a)
    out = []
    for i in range(k):
        row = []
        for j in range(k):
            s = UniPoly.zero()
            for l in range(k):
                s = s + a[i][l] * b[l][j]
            row.append(ctx.reduce(s))
        out.append(row)
    return out


def _ctx_rank_single(rows, ctx):
    m = [[ctx.reduce(e) for e in row] for row in rows]
    nr = len(m)
    nc = len(m[0])
    rank = 0
    r = 0
    for c in range(nc):
        piv = -1
        for i in range(r, nr):
            if not m[i][c].is_zero():
                ctx.inverse(m[i][c])  # may raise SplitRequired
                piv = i
                break
        if piv < 0:
            continue
        if piv != r:
            m[r], m[piv] = m[piv], m[r]
        inv = ctx.inverse(m[r][c])
        m[r] = [ctx.mul(x, inv) for x in m[r]]
        for i in range(r + 1, nr):
            f = m[i][c]
            if not f.is_zero():
                m[i] = [ctx.reduce(x - f * y) for x, y in zip(m[i], m[r])]
        r += 1
        rank += 1
        if r == nr:
            break
    return rank


_SEGRE_TABLE = {
    ((1,), (1,), (1,), (1,)): "Q1",
    ((1,), (3,)): "Q2",
    ((1,), (1,), (2,)): "Q3",
    ((1,), (1,), (1, 1)): "Q4",
    ((1,), (2, 1)): "Q5",
    ((1, 1), (2,)): "Q6",
    ((3, 1),): "Q7",
    ((1, 1), (1, 1)): "Q8",
    ((2,), (2,)): "Q9",
    ((4,),): "Q10",
    ((1,), (1, 1, 1)): "Q11",
    ((2, 1, 1),): "Q12",
    ((2, 2),): "Q13",
}


def classify_quadric_divisor(f: HomForm) -> CurveClass:
    """Classify a (2,2)-divisor by its Segre symbol (Linear when f = 0)."""
    if f.is_zero():
        return CurveClass("quadric", "Linear", None, {"reason": "zero determinant"})
    try:
        m, n = segre_lift(f)
    except DegeneratePencil:
        raise UnknownSymbol("quadrics coincide: symbol [(1,1,1,1)]")
    sym = segre_symbol(m, n)
    key = sym.key()
    if key == ((1, 1, 1, 1),):
        raise UnknownSymbol("coincident quadrics [(1,1,1,1)]")
    verdict = _SEGRE_TABLE.get(key)
    if verdict is None:
        raise UnknownSymbol(f"Segre symbol {sym} outside the classification table")
    return CurveClass("quadric", verdict, str(sym), {"segre_groups": len(sym.groups)})


def classify(t: Tensor) -> CurveClass:
    """Point-scheme classification of a nondegenerate tensor."""
    if t.kind == QUADRATIC:
        return classify_plane_cubic(plane_cubic(t, 0))
    return classify_quadric_divisor(quadric_divisor(t))
