"""Multivariate homogeneous forms with exact rational coefficients.

A :class:`HomForm` is a homogeneous polynomial in 2, 3 or 4 variables,
stored sparsely as exponent-vector -> coefficient.  Ternary forms carry the
plane-cubic machinery (partials, Hessian, form gcd via a primitive PRS over
binary-form coefficients, exact division); 4-variable forms are used
bihomogeneously for (2,2)-divisors on P^1 x P^1.

The mod-p reduction and brute-force projective point counts live here too;
they are the statistical cross-check oracle for the curve classifiers.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm
from typing import NamedTuple

from ncsurf.errors import BadPrime
from ncsurf import kernels
from ncsurf.polyring.unipoly import UniPoly, gcd_uni

Q = Fraction
_ZERO = Fraction(0)


class HomForm:
    __slots__ = ("nvars", "degree", "coeffs")

    def __init__(self, nvars: int, degree: int, coeffs):
        if nvars not in (2, 3, 4):
            raise ValueError("forms live in 2, 3 or 4 variables")
        clean = {}
        for exp, c in dict(coeffs).items():
            exp = tuple(int(e) for e in exp)
            c = Fraction(c)
            if c == 0:
                continue
            if len(exp) != nvars or any(e < 0 for e in exp) or sum(exp) != degree:
                raise ValueError(f"bad exponent {exp} for degree {degree}")
            clean[exp] = clean.get(exp, _ZERO) + c
        self.nvars = nvars
        self.degree = degree
        self.coeffs = {e: c for e, c in clean.items() if c != 0}

    @classmethod
    def zero(cls, nvars: int, degree: int) -> "HomForm":
        return cls(nvars, degree, {})

    @classmethod
    def monomial(cls, nvars: int, exp, c=1) -> "HomForm":
        return cls(nvars, sum(exp), {tuple(exp): c})

    @classmethod
    def linear(cls, vec) -> "HomForm":
        n = len(vec)
        coeffs = {}
        for i, c in enumerate(vec):
            e = [0] * n
            e[i] = 1
            coeffs[tuple(e)] = c
        return cls(n, 1, coeffs)

    def is_zero(self) -> bool:
        return not self.coeffs

    def __eq__(self, other):
        return (
            isinstance(other, HomForm)
            and self.nvars == other.nvars
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.nvars, self.degree, tuple(sorted(self.coeffs.items()))))

    def __repr__(self):
        names = "xyz" if self.nvars == 3 else ("xy" if self.nvars == 2 else "xyuv")
        terms = []
        for exp in sorted(self.coeffs, reverse=True):
            c = self.coeffs[exp]
            mono = "*".join(
                (names[i] if e == 1 else f"{names[i]}^{e}")
                for i, e in enumerate(exp)
                if e
            )
            terms.append(f"{c}*{mono}" if mono else str(c))
        return " + ".join(terms) if terms else "0"

    def __add__(self, other: "HomForm") -> "HomForm":
        out = dict(self.coeffs)
        for e, c in other.coeffs.items():
            out[e] = out.get(e, _ZERO) + c
        return HomForm(self.nvars, self.degree, out)

    def __sub__(self, other: "HomForm") -> "HomForm":
        return self + (-other)

    def __neg__(self) -> "HomForm":
        return HomForm(self.nvars, self.degree, {e: -c for e, c in self.coeffs.items()})

    def scale(self, c) -> "HomForm":
        c = Fraction(c)
        if c == 0:
            return HomForm.zero(self.nvars, self.degree)
        return HomForm(self.nvars, self.degree, {e: x * c for e, x in self.coeffs.items()})

    def __mul__(self, other):
        if not isinstance(other, HomForm):
            return self.scale(other)
        out = {}
        for e1, c1 in self.coeffs.items():
            for e2, c2 in other.coeffs.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, _ZERO) + c1 * c2
        return HomForm(self.nvars, self.degree + other.degree, out)

    __rmul__ = __mul__

    def partial(self, i: int) -> "HomForm":
        out = {}
        for e, c in self.coeffs.items():
            if e[i] == 0:
                continue
            ne = list(e)
            ne[i] -= 1
            out[tuple(ne)] = out.get(tuple(ne), _ZERO) + c * e[i]
        return HomForm(self.nvars, max(self.degree - 1, 0), out)

    def evaluate(self, point) -> Fraction:
        pt = [Fraction(x) for x in point]
        total = _ZERO
        for e, c in self.coeffs.items():
            term = c
            for x, k in zip(pt, e):
                if k:
                    term *= x**k
            total += term
        return total

    def subs_linear(self, m) -> "HomForm":
        """f(M y): substitute x_i = sum_j m[i][j] * y_j."""
        lins = [HomForm.linear([Fraction(c) for c in row]) for row in m]
        powers = []
        for i, lf in enumerate(lins):
            maxe = max((e[i] for e in self.coeffs), default=0)
            pw = [HomForm.monomial(self.nvars, (0,) * self.nvars, 1)]
            for _ in range(maxe):
                pw.append(pw[-1] * lf)
            powers.append(pw)
        out = HomForm.zero(self.nvars, self.degree)
        for e, c in self.coeffs.items():
            term = HomForm.monomial(self.nvars, (0,) * self.nvars, c)
            for i, k in enumerate(e):
                if k:
                    term = term * powers[i][k]
            out = out + term
        return out

    def primitive_int(self) -> "HomForm":
        """Integer-primitive rescaling, first monomial (lex-max) positive."""
        if not self.coeffs:
            return self
        m = 1
        for c in self.coeffs.values():
            m = lcm(m, c.denominator)
        from math import gcd as _gcd

        g = 0
        for c in self.coeffs.values():
            g = _gcd(g, int(c * m))
        f = Fraction(m, g)
        lead = self.coeffs[max(self.coeffs)]
        if lead * f < 0:
            f = -f
        return self.scale(f)

    def to_json(self):
        from ncsurf.exactla import q_str

        return {
            "vars": self.nvars,
            "degree": self.degree,
            "terms": [
                {"exp": list(e), "c": q_str(c)} for e, c in sorted(self.coeffs.items())
            ],
        }

    @classmethod
    def from_json(cls, data) -> "HomForm":
        return cls(
            int(data["vars"]),
            int(data["degree"]),
            {tuple(t["exp"]): Fraction(str(t["c"])) for t in data["terms"]},
        )

    def bidegree(self):
        """(d1, d2) split over variable pairs (0,1) | (2,3); None if mixed."""
        if self.nvars != 4:
            return None
        degs = {(e[0] + e[1], e[2] + e[3]) for e in self.coeffs}
        if len(degs) != 1:
            return None
        return degs.pop()


def det3(rows):
    """Determinant of a 3x3 array of HomForms (cofactor expansion)."""
    a, b, c = rows[0]
    d, e, f = rows[1]
    g, h, i = rows[2]
    return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)


def det2(rows):
    return rows[0][0] * rows[1][1] - rows[0][1] * rows[1][0]


def hessian_det(f: HomForm) -> HomForm:
    """Determinant of the Hessian matrix of a ternary form."""
    if f.nvars != 3:
        raise ValueError("hessian_det expects a ternary form")
    seconds = [[f.partial(i).partial(j) for j in range(3)] for i in range(3)]
    return det3(seconds)


# ---------------------------------------------------------------------------
# ternary form gcd via bivariate primitive PRS
# ---------------------------------------------------------------------------


def _dehomog(f: HomForm):
    """Ternary form -> (bivar poly as x-coeff list of UniPoly in y, z-valuation)."""
    rows: dict[int, dict[int, Fraction]] = {}
    for (ex, ey, ez), c in f.coeffs.items():
        rows.setdefault(ex, {})[ey] = c
    if not rows:
        return [], 0
    dmax = max(rows)
    coeffs = []
    for i in range(dmax + 1):
        d = rows.get(i, {})
        ln = max(d) + 1 if d else 0
        coeffs.append(UniPoly([d.get(j, _ZERO) for j in range(ln)]))
    total = max(i + coeffs[i].degree() for i in range(len(coeffs)) if not coeffs[i].is_zero())
    return coeffs, f.degree - total


def _homog(coeffs, zval: int) -> HomForm:
    """Inverse of :func:`_dehomog`."""
    total = max(i + coeffs[i].degree() for i in range(len(coeffs)) if not coeffs[i].is_zero())
    out = {}
    for i, p in enumerate(coeffs):
        for j, c in enumerate(p.coeffs):
            if c:
                out[(i, j, total - i - j + zval)] = c
    return HomForm(3, total + zval, out)


def _bivar_content(coeffs) -> UniPoly:
    g = UniPoly.zero()
    for p in coeffs:
        if not p.is_zero():
            g = gcd_uni(g, p) if not g.is_zero() else p.monic()
    return g if not g.is_zero() else UniPoly.const(1)


def _lead(coeffs) -> int:
    for i in range(len(coeffs) - 1, -1, -1):
        if not coeffs[i].is_zero():
            return i
    return -1


def _bivar_trim(coeffs):
    n = _lead(coeffs) + 1
    return coeffs[:n]


def _bivar_prem(f, g):
    """Pseudo-remainder of bivariate polys (x-coeff lists of UniPoly)."""
    f = _bivar_trim(list(f))
    g = _bivar_trim(list(g))
    df, dg = len(f) - 1, len(g) - 1
    lg = g[-1]
    while len(f) - 1 >= dg and f:
        dfc = len(f) - 1
        lf = f[-1]
        f = [p * lg for p in f]
        for j in range(dg + 1):
            f[dfc - dg + j] = f[dfc - dg + j] - lf * g[j]
        f = _bivar_trim(f)
        if not f:
            break
        if len(f) - 1 == dfc:
            raise ArithmeticError("pseudo-division failed to reduce degree")
    return f


def _bivar_gcd(f, g):
    """Primitive-PRS gcd of bivariate polys; returns x-coeff list of UniPoly."""
    f = _bivar_trim(list(f))
    g = _bivar_trim(list(g))
    if not f:
        return g
    if not g:
        return f
    cf, cg = _bivar_content(f), _bivar_content(g)
    cont = gcd_uni(cf, cg) if (cf.degree() >= 1 and cg.degree() >= 1) else UniPoly.const(1)
    r0 = [p.exact_div(cf) for p in f]
    r1 = [p.exact_div(cg) for p in g]
    if len(r0) < len(r1):
        r0, r1 = r1, r0
    while r1:
        r = _bivar_prem(r0, r1)
        if r:
            cr = _bivar_content(r)
            r = [p.exact_div(cr) for p in r]
        r0, r1 = r1, r
    if len(r0) == 1:
        r0 = [UniPoly.const(1)]
    return [p * cont for p in r0]


def form_gcd(f: HomForm, g: HomForm) -> HomForm:
    """Gcd of two ternary forms, normalized integer-primitive."""
    if f.nvars != 3 or g.nvars != 3:
        raise ValueError("form_gcd expects ternary forms")
    if f.is_zero():
        return g.primitive_int()
    if g.is_zero():
        return f.primitive_int()
    cf, zf = _dehomog(f)
    cg, zg = _dehomog(g)
    h = _bivar_gcd(cf, cg)
    return _homog(h, min(zf, zg)).primitive_int()


def form_gcd_list(forms) -> HomForm:
    forms = [f for f in forms if not f.is_zero()]
    if not forms:
        raise ValueError("gcd of all-zero family")
    acc = forms[0]
    for f in forms[1:]:
        if acc.degree == 0:
            break
        acc = form_gcd(acc, f)
    return acc.primitive_int()


def try_divide(f: HomForm, g: HomForm):
    """Exact quotient f/g as a HomForm, or None when g does not divide f."""
    if g.is_zero():
        raise ZeroDivisionError("division of forms by zero")
    if f.is_zero():
        return HomForm.zero(f.nvars, max(f.degree - g.degree, 0))
    dq = f.degree - g.degree
    if dq < 0:
        return None
    qmons = sorted(_monomials(f.nvars, dq))
    tmons = sorted(_monomials(f.nvars, f.degree))
    tindex = {m: i for i, m in enumerate(tmons)}
    rows = [[_ZERO] * len(qmons) + [f.coeffs.get(m, _ZERO)] for m in tmons]
    for j, qm in enumerate(qmons):
        for ge, gc in g.coeffs.items():
            m = tuple(a + b for a, b in zip(qm, ge))
            rows[tindex[m]][j] = gc
    from ncsurf.exactla import rref_rows

    red, pivots = rref_rows(rows)
    ncols = len(qmons)
    if ncols in pivots:
        return None
    sol = [_ZERO] * ncols
    for r, pc in enumerate(pivots):
        sol[pc] = red[r][ncols]
    q = HomForm(f.nvars, dq, {qmons[j]: sol[j] for j in range(ncols)})
    return q if (q * g - f).is_zero() else None


def _monomials(nvars: int, degree: int):
    if nvars == 1:
        yield (degree,)
        return
    for k in range(degree + 1):
        for rest in _monomials(nvars - 1, degree - k):
            yield (k,) + rest


# ---------------------------------------------------------------------------
# mod-p reduction and point counts
# ---------------------------------------------------------------------------


class ModpForm(NamedTuple):
    nvars: int
    degree: int
    p: int
    terms: tuple


def reduce_mod_p(form: HomForm, p: int) -> ModpForm:
    """Reduce a form mod p.  BadPrime when p <= 3 or p divides a denominator."""
    if p <= 3:
        raise BadPrime(f"prime {p} too small")
    terms = []
    for e, c in sorted(form.coeffs.items()):
        if c.denominator % p == 0:
            raise BadPrime(f"prime {p} divides a coefficient denominator")
        cm = c.numerator * pow(c.denominator, p - 2, p) % p
        if cm:
            terms.append(e + (cm,))
    return ModpForm(form.nvars, form.degree, p, tuple(terms))


def count_projective_points(mf: ModpForm) -> int:
    """Exact number of projective zeros over F_p by enumeration."""
    if mf.nvars == 3:
        return kernels.count_points_p2(list(mf.terms), mf.p)
    if mf.nvars == 4:
        return kernels.count_points_p1p1(list(mf.terms), mf.p)
    raise ValueError("point counts implemented for P^2 and P^1 x P^1")
