"""Dynamic evaluation over QQ[t]/(f) and zero-dimensional solving in P^2.

Arithmetic runs in QQ[t]/(f) with f monic squarefree, never factoring into
irreducibles: whenever an inversion hits a zero divisor the context splits
along the offending gcd (D5 style) and the computation re-runs on each
branch.  Conjugate roots that the computation cannot tell apart stay
together, which is exactly the resolution the Segre-symbol and
singular-point machinery needs.

:func:`dynamic_eval_solve` locates the finitely many projective common
zeros of a system of ternary forms: after a unimodular change of
coordinates it eliminates x by resultants against a pivot form, groups the
candidate y-values into split contexts, and back-substitutes.  In generic
position every fiber is a single x, linear over its context, so each group
of conjugate solutions is reported as one :class:`SolPoint`.  A fresh
coordinate change re-runs the count as a guard against projection
collisions.
"""

from __future__ import annotations

import random
from fractions import Fraction
from typing import NamedTuple

from ncsurf.errors import InternalInconsistency, NotZeroDimensional
from ncsurf.polyring.unipoly import (
    UniPoly,
    gcd_uni,
    resultant_x,
    squarefree_part,
    xgcd_uni,
)

Q = Fraction

#: fixed prime list for all mod-p oracles, bad primes skipped
ORACLE_PRIMES = (101, 211, 307, 401, 503)


class SplitRequired(Exception):
    """Raised when an inversion meets a zero divisor; carries the factor."""

    def __init__(self, factor: UniPoly):
        super().__init__(f"context splits along {factor.pretty()}")
        self.factor = factor


class AlgebraicContext:
    """The ring QQ[t]/(modulus) with modulus monic and squarefree."""

    __slots__ = ("modulus",)

    def __init__(self, modulus: UniPoly):
        modulus = modulus.monic()
        if modulus.degree() < 1:
            raise ValueError("modulus must be nonconstant")
        self.modulus = modulus

    def __repr__(self):
        return f"AlgebraicContext({self.modulus.pretty()})"

    @property
    def degree(self) -> int:
        return self.modulus.degree()

    def reduce(self, u: UniPoly) -> UniPoly:
        return u % self.modulus

    def is_zero(self, u: UniPoly) -> bool:
        return self.reduce(u).is_zero()

    def mul(self, u: UniPoly, v: UniPoly) -> UniPoly:
        return (u * v) % self.modulus

    def inverse(self, u: UniPoly) -> UniPoly:
        """Inverse of u, raising SplitRequired on a proper zero divisor."""
        u = self.reduce(u)
        if u.is_zero():
            raise ZeroDivisionError("inverse of zero residue")
        g, s, _ = xgcd_uni(u, self.modulus)
        if g.degree() == 0:
            return self.reduce(s)
        if g.degree() == self.modulus.degree():
            raise ZeroDivisionError("inverse of zero residue")
        raise SplitRequired(g)

    def split(self, factor: UniPoly):
        g = factor.monic()
        h = self.modulus.exact_div(g)
        return AlgebraicContext(g), AlgebraicContext(h)


def split_run(modulus: UniPoly, fn):
    """Run ``fn(ctx)`` over QQ[t]/(modulus), splitting contexts on demand.

    Returns a list of (AlgebraicContext, result), deterministically ordered.
    ``fn`` must be a pure function of the context (it may re-run).
    """
    work = [AlgebraicContext(modulus)]
    out = []
    guard = 0
    while work:
        ctx = work.pop()
        guard += 1
        if guard > 1000:
            raise InternalInconsistency("context splitting did not terminate")
        try:
            out.append((ctx, fn(ctx)))
        except SplitRequired as s:
            c1, c2 = ctx.split(s.factor)
            work.append(c2)
            work.append(c1)
    out.sort(key=lambda pair: (pair[0].degree, pair[0].modulus.coeffs))
    return out


# ---------------------------------------------------------------------------
# polynomials in x over a context (coefficient lists of UniPoly in t)
# ---------------------------------------------------------------------------


def _cp_trim(ctx, poly):
    p = [ctx.reduce(c) for c in poly]
    while p and p[-1].is_zero():
        p.pop()
    return p


def _cp_divmod(ctx, a, b):
    b = _cp_trim(ctx, b)
    if not b:
        raise ZeroDivisionError("context polynomial division by zero")
    inv = ctx.inverse(b[-1])
    rem = _cp_trim(ctx, a)
    db = len(b) - 1
    quo = [UniPoly.zero()] * max(len(rem) - db, 0)
    while len(rem) - 1 >= db and rem:
        f = ctx.mul(rem[-1], inv)
        k = len(rem) - 1 - db
        quo[k] = f
        for j in range(db + 1):
            rem[k + j] = ctx.reduce(rem[k + j] - f * b[j])
        while rem and rem[-1].is_zero():
            rem.pop()
    return quo, rem


def _cp_gcd(ctx, a, b):
    """Monic gcd of two context polynomials (may raise SplitRequired)."""
    a = _cp_trim(ctx, a)
    b = _cp_trim(ctx, b)
    while b:
        _, r = _cp_divmod(ctx, a, b)
        a, b = b, r
    if a:
        inv = ctx.inverse(a[-1])
        a = [ctx.mul(c, inv) for c in a]
    return a


def _cp_derivative(ctx, a):
    return _cp_trim(ctx, [a[i] * i for i in range(1, len(a))])


def context_rank(rows, modulus: UniPoly):
    """Rank of a matrix of t-polynomials over QQ[t]/(modulus), per context.

    Returns a list of (AlgebraicContext, rank) covering all roots.
    """

    def fn(ctx):
        m = [[ctx.reduce(e) for e in row] for row in rows]
        nr = len(m)
        nc = len(m[0]) if nr else 0
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

    return split_run(modulus, fn)


# ---------------------------------------------------------------------------
# zero-dimensional projective solving
# ---------------------------------------------------------------------------


class SolPoint(NamedTuple):
    """A Galois-stable group of projective points.

    ``modulus`` is None for a rational point (coords are Fractions,
    normalized so the last nonzero coordinate is 1); otherwise coords are
    UniPoly residues in QQ[t]/(modulus) and the group stands for one point
    per root of the modulus.
    """

    modulus: UniPoly | None
    coords: tuple
    npoints: int

    def pretty(self) -> str:
        if self.modulus is None:
            return "(" + " : ".join(str(c) for c in self.coords) + ")"
        body = " : ".join(c.pretty() for c in self.coords)
        return f"({body})  where {self.modulus.pretty()} = 0"


class SolveResult(NamedTuple):
    count: int
    points: tuple


class _RetryChange(Exception):
    pass


class _ZeroResultants(Exception):
    pass


def random_unimodular(rng: random.Random, n: int = 3):
    """Random integer matrix of determinant +-1 (product of shears/swaps)."""
    m = [[Fraction(1 if i == j else 0) for j in range(n)] for i in range(n)]
    for _ in range(3 * n):
        i = rng.randrange(n)
        j = rng.randrange(n)
        if i == j:
            continue
        c = rng.choice((-2, -1, 1, 2))
        for k in range(n):
            m[i][k] += c * m[j][k]
    return m


def _mat_vec_poly(u, vec, modulus):
    """Apply an integer matrix to a vector of UniPoly residues."""
    out = []
    for row in u:
        acc = UniPoly.zero()
        for c, v in zip(row, vec):
            acc = acc + v.scale(c)
        out.append(acc % modulus)
    return out


def _dehomog_xy(form):
    """Ternary form -> coefficient list in x of UniPoly in y (z = 1)."""
    rows: dict[int, dict[int, Fraction]] = {}
    for (ex, ey, ez), c in form.coeffs.items():
        rows.setdefault(ex, {})[ey] = c
    if not rows:
        return []
    out = []
    for i in range(max(rows) + 1):
        d = rows.get(i, {})
        ln = max(d) + 1 if d else 0
        out.append(UniPoly([d.get(j, Fraction(0)) for j in range(ln)]))
    while out and out[-1].is_zero():
        out.pop()
    return out


def _restrict_infinity(form):
    """Ternary form restricted to z = 0, as UniPoly in t = x/y plus x^D flag."""
    coeffs: dict[int, Fraction] = {}
    for (ex, ey, ez), c in form.coeffs.items():
        if ez == 0:
            coeffs[ex] = c
    if not coeffs:
        return None
    ln = max(coeffs) + 1
    return UniPoly([coeffs.get(i, Fraction(0)) for i in range(ln)])


def _solve_once(forms, rng):
    """Exact solution count and points for one coordinate chart split.

    Returns (count, points) in the current coordinates.  Raises
    _ZeroResultants when elimination degenerates (positive-dimensional
    input) and _RetryChange when the chart is non-generic.
    """
    degree_total = [f.degree for f in forms]
    points = []
    count = 0

    # line at infinity z = 0
    restr = [_restrict_infinity(f) for f in forms]
    if all(r is None for r in restr):
        raise _ZeroResultants  # the whole line z=0 solves the system
    ginf = None
    for r in restr:
        if r is not None:
            ginf = r.monic() if ginf is None else gcd_uni(ginf, r)
    if ginf.degree() >= 1:
        g = squarefree_part(ginf)
        if g.degree() == 1:
            t0 = -g.coeffs[0]
            points.append(_rational_point((t0, Fraction(1), Fraction(0))))
        else:
            points.append(
                SolPoint(g, (UniPoly.x(), UniPoly.const(1), UniPoly.zero()), g.degree())
            )
        count += g.degree()
    if all(r is None or r.degree() < d for r, d in zip(restr, degree_total)):
        points.append(_rational_point((Fraction(1), Fraction(0), Fraction(0))))
        count += 1

    # affine chart z = 1
    fs = [_dehomog_xy(f) for f in forms]
    pivot = None
    for f, d in zip(fs, degree_total):
        if len(f) - 1 == d and f[-1].degree() == 0:
            pivot = f
            break
    if pivot is None:
        raise _RetryChange
    others = [f for f in fs if f is not pivot]
    if not others:
        raise _ZeroResultants  # single form cuts a curve
    # Pairwise-shared factors can kill every pivot resultant even for a
    # finite zero set, so pad the pool with random combinations from the
    # ideal: their vanishing is still necessary at every common zero, and
    # a nonzero resultant against the pivot survives unless the whole zero
    # set contains a curve.
    dmax = max(degree_total)
    padded = []
    for f, fm in zip(fs, forms):
        g = f
        for _ in range(dmax - fm.degree):
            lin = UniPoly([rng.choice((-2, -1, 1, 2)), rng.choice((-2, -1, 1, 2))])
            g = _bivar_mul_linear(g, rng.choice((-2, -1, 1, 2)), lin)
        padded.append(g)
    combos = []
    for _ in range(3):
        acc = []
        for g in padded:
            c = rng.choice((-3, -2, -1, 1, 2, 3))
            acc = _bivar_add(acc, [q.scale(c) for q in g])
        combos.append(acc)
    resl = []
    for f in others + combos:
        f = list(f)
        while f and f[-1].is_zero():
            f.pop()
        if not f:
            continue
        if len(f) == 1:
            resl.append(f[0])
        else:
            resl.append(resultant_x(pivot, f))
    nonzero = [r for r in resl if not r.is_zero()]
    if not nonzero:
        raise _ZeroResultants
    elim = nonzero[0].monic()
    for r in nonzero[1:]:
        elim = gcd_uni(elim, r)
    if elim.degree() >= 1:
        sq = squarefree_part(elim)

        def fiber(ctx):
            specs = []
            for f in fs:
                spec = _cp_trim(ctx, f)
                if spec:
                    specs.append(spec)
            if not specs:
                return "infinite"
            h = specs[0]
            for s in specs[1:]:
                h = _cp_gcd(ctx, h, s)
                if not h:
                    break
                if len(h) == 1:
                    return None
            if not h or len(h) == 1:
                return None
            hs = _cp_gcd(ctx, h, _cp_derivative(ctx, h))
            if hs and len(hs) > 1:
                h, _ = _cp_divmod(ctx, h, hs)
            if len(h) != 2:
                return "nonlinear"
            xres = ctx.reduce(-h[0])  # monic linear: x + h0 = 0
            return xres

        for ctx, res in split_run(sq, fiber):
            if res is None:
                continue
            if res == "infinite":
                raise _ZeroResultants
            if res == "nonlinear":
                raise _RetryChange
            m = ctx.modulus
            if m.degree() == 1:
                t0 = -m.coeffs[0]
                points.append(_rational_point((res.evaluate(t0), t0, Fraction(1))))
            else:
                points.append(SolPoint(m, (res, UniPoly.x(), UniPoly.const(1)), m.degree()))
            count += m.degree()
    return count, points


def _bivar_add(a, b):
    """Add two x-coefficient lists of UniPoly."""
    n = max(len(a), len(b))
    out = []
    for i in range(n):
        u = a[i] if i < len(a) else UniPoly.zero()
        v = b[i] if i < len(b) else UniPoly.zero()
        out.append(u + v)
    while out and out[-1].is_zero():
        out.pop()
    return out


def _bivar_mul_linear(f, cx, ylin):
    """Multiply an x-coefficient list by (cx * x + ylin(y))."""
    out = [UniPoly.zero()] * (len(f) + 1)
    for i, c in enumerate(f):
        out[i + 1] = out[i + 1] + c.scale(cx)
        out[i] = out[i] + c * ylin
    while out and out[-1].is_zero():
        out.pop()
    return out


def _rational_point(coords):
    v = [Fraction(c) for c in coords]
    scale = None
    for c in reversed(v):
        if c != 0:
            scale = c
            break
    v = [c / scale for c in v]
    return SolPoint(None, tuple(v), 1)


def _apply_change(point: SolPoint, u) -> SolPoint:
    """Map a solution of f(U y) back to a solution of f (p -> U p)."""
    if point.modulus is None:
        new = []
        for row in u:
            new.append(sum(Fraction(c) * v for c, v in zip(row, point.coords)))
        return _rational_point(new)
    coords = _mat_vec_poly(u, point.coords, point.modulus)
    return SolPoint(point.modulus, tuple(coords), point.npoints)


def dynamic_eval_solve(forms, seed: int = 0, max_attempts: int = 10) -> SolveResult:
    """Distinct projective common zeros of ternary forms over QQbar.

    The count sums context degrees, i.e. it is the number of closure
    points.  Raises NotZeroDimensional when elimination keeps collapsing
    (the zero set contains a curve).
    """
    forms = [f for f in forms if not f.is_zero()]
    if not forms:
        raise NotZeroDimensional("empty system cuts out all of P^2")
    if any(f.nvars != 3 for f in forms):
        raise ValueError("dynamic_eval_solve expects ternary forms")
    if any(f.degree == 0 for f in forms):
        return SolveResult(0, ())
    rng = random.Random(0xD5E0 + seed)
    degenerate = 0
    results = []
    for attempt in range(max_attempts):
        if attempt == 0:
            u = [[Fraction(int(i == j)) for j in range(3)] for i in range(3)]
        else:
            u = random_unimodular(rng, 3)
        changed = [f.subs_linear(u) for f in forms] if attempt else forms
        try:
            cnt, pts = _solve_once(changed, rng)
        except _RetryChange:
            continue
        except _ZeroResultants:
            degenerate += 1
            if degenerate >= 3:
                raise NotZeroDimensional(
                    "resultants vanish identically; zero set is positive-dimensional"
                )
            continue
        results.append((cnt, pts, u, attempt))
        if len(results) >= 2:
            if results[0][0] != results[-1][0]:
                raise InternalInconsistency(
                    f"solution counts disagree across charts: "
                    f"{results[0][0]} vs {results[-1][0]}"
                )
            cnt0, pts0, u0, att0 = results[0]
            if att0 == 0:
                mapped = tuple(pts0)
            else:
                mapped = tuple(_apply_change(pt, u0) for pt in pts0)
            return SolveResult(cnt0, mapped)
    raise NotZeroDimensional("no usable coordinate chart found")
