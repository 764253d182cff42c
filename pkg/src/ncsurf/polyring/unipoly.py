"""Dense univariate polynomials over QQ.

Coefficients are stored ascending; the zero polynomial has an empty tuple.
Beyond ring arithmetic this module provides the root-structure toolkit the
rest of the package leans on: monic gcds, Yun's squarefree decomposition,
gcd-free bases (the substitute for irreducible factorization -- conjugate
roots never need to be told apart here), and Sylvester resultants over
either QQ or QQ[t] via fraction-free elimination.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd as int_gcd, lcm

Q = Fraction
_ZERO = Fraction(0)
_ONE = Fraction(1)


class UniPoly:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls) -> "UniPoly":
        return cls(())

    @classmethod
    def const(cls, c) -> "UniPoly":
        return cls((Fraction(c),))

    @classmethod
    def x(cls) -> "UniPoly":
        return cls((0, 1))

    @classmethod
    def from_roots(cls, roots) -> "UniPoly":
        p = cls.const(1)
        for r in roots:
            p = p * cls((-Fraction(r), 1))
        return p

    # -- basics ------------------------------------------------------------

    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def lc(self) -> Fraction:
        if not self.coeffs:
            return _ZERO
        return self.coeffs[-1]

    def __getitem__(self, i):
        return self.coeffs[i] if i < len(self.coeffs) else _ZERO

    def __eq__(self, other):
        return isinstance(other, UniPoly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __bool__(self):
        return bool(self.coeffs)

    def __repr__(self):
        return f"UniPoly({self.pretty()})"

    def pretty(self, var: str = "t") -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for e in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[e]
            if c == 0:
                continue
            if e == 0:
                term = str(c)
            else:
                mag = "" if abs(c) == 1 else f"{abs(c)}*"
                sign = "-" if c < 0 else ""
                pw = var if e == 1 else f"{var}^{e}"
                term = f"{sign}{mag}{pw}"
                if not parts and c < 0:
                    pass
            parts.append(term)
        out = parts[0]
        for t in parts[1:]:
            out += " - " + t[1:] if t.startswith("-") else " + " + t
        return out

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other: "UniPoly") -> "UniPoly":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return UniPoly(out)

    def __sub__(self, other: "UniPoly") -> "UniPoly":
        return self + (-other)

    def __neg__(self) -> "UniPoly":
        return UniPoly(tuple(-c for c in self.coeffs))

    def __mul__(self, other):
        if isinstance(other, UniPoly):
            if not self.coeffs or not other.coeffs:
                return UniPoly(())
            out = [_ZERO] * (len(self.coeffs) + len(other.coeffs) - 1)
            for i, a in enumerate(self.coeffs):
                if a:
                    for j, b in enumerate(other.coeffs):
                        out[i + j] += a * b
            return UniPoly(out)
        return self.scale(other)

    __rmul__ = __mul__

    def scale(self, c) -> "UniPoly":
        c = Fraction(c)
        return UniPoly(tuple(x * c for x in self.coeffs))

    def shift_up(self, k: int) -> "UniPoly":
        """Multiply by t^k."""
        if not self.coeffs:
            return self
        return UniPoly((_ZERO,) * k + self.coeffs)

    def __divmod__(self, other: "UniPoly"):
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        db, lb = other.degree(), other.lc()
        if len(rem) - 1 < db:
            return UniPoly(()), UniPoly(rem)
        quo = [_ZERO] * (len(rem) - db)
        for i in range(len(rem) - 1, db - 1, -1):
            c = rem[i]
            if c == 0:
                continue
            f = c / lb
            quo[i - db] = f
            for j, bc in enumerate(other.coeffs):
                rem[i - db + j] -= f * bc
        return UniPoly(quo), UniPoly(rem)

    def __floordiv__(self, other: "UniPoly") -> "UniPoly":
        return divmod(self, other)[0]

    def __mod__(self, other: "UniPoly") -> "UniPoly":
        return divmod(self, other)[1]

    def exact_div(self, other: "UniPoly") -> "UniPoly":
        q, r = divmod(self, other)
        if not r.is_zero():
            raise ArithmeticError("inexact polynomial division")
        return q

    def monic(self) -> "UniPoly":
        if not self.coeffs or self.coeffs[-1] == 1:
            return self
        return self.scale(1 / self.coeffs[-1])

    def derivative(self) -> "UniPoly":
        return UniPoly(tuple(self.coeffs[i] * i for i in range(1, len(self.coeffs))))

    def evaluate(self, x) -> Fraction:
        x = Fraction(x)
        acc = _ZERO
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def compose_linear(self, a, b) -> "UniPoly":
        """self(a*t + b)."""
        lin = UniPoly((Fraction(b), Fraction(a)))
        acc = UniPoly(())
        for c in reversed(self.coeffs):
            acc = acc * lin + UniPoly.const(c)
        return acc

    def primitive_int(self) -> "UniPoly":
        """Scale to integer coefficients with gcd 1 and positive lc."""
        if not self.coeffs:
            return self
        m = 1
        for c in self.coeffs:
            m = lcm(m, c.denominator)
        ints = [int(c * m) for c in self.coeffs]
        g = 0
        for v in ints:
            g = int_gcd(g, v)
        if g:
            ints = [v // g for v in ints]
        if ints[-1] < 0:
            ints = [-v for v in ints]
        return UniPoly(ints)

    def to_json(self):
        from ncsurf.exactla import q_str

        return [q_str(c) for c in self.coeffs]

    @classmethod
    def from_json(cls, data) -> "UniPoly":
        return cls(tuple(Fraction(str(c)) for c in data))


# ---------------------------------------------------------------------------
# gcd machinery
# ---------------------------------------------------------------------------


def gcd_uni(a: UniPoly, b: UniPoly) -> UniPoly:
    """Monic gcd by the Euclidean algorithm."""
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


def xgcd_uni(a: UniPoly, b: UniPoly):
    """(g, s, t) with s*a + t*b = g, g monic."""
    r0, r1 = a, b
    s0, s1 = UniPoly.const(1), UniPoly.zero()
    t0, t1 = UniPoly.zero(), UniPoly.const(1)
    while not r1.is_zero():
        q, r = divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if r0.is_zero():
        return r0, s0, t0
    c = r0.lc()
    inv = 1 / c
    return r0.monic(), s0.scale(inv), t0.scale(inv)


def squarefree_part(a: UniPoly) -> UniPoly:
    if a.degree() < 1:
        return a.monic()
    return a.exact_div(gcd_uni(a, a.derivative()).scale(a.lc()).monic()).monic()


def squarefree_decomposition(a: UniPoly):
    """Yun's algorithm: a = c * prod g_i^(m_i), g_i monic squarefree coprime.

    Returns [(g_i, m_i)] with the trivial (constant) pieces dropped.
    """
    if a.is_zero():
        raise ValueError("squarefree decomposition of zero")
    a = a.monic()
    if a.degree() < 1:
        return []
    out = []
    u = gcd_uni(a, a.derivative())
    v = a.exact_div(u)
    w = a.derivative().exact_div(u)
    i = 1
    while v.degree() >= 1:
        s = w - v.derivative()
        g = gcd_uni(v, s)
        if g.degree() >= 1:
            out.append((g, i))
        v = v.exact_div(g)
        w = s.exact_div(g)
        i += 1
    return out


def gcd_free_basis(polys):
    """Pairwise-coprime basis multiplicatively generating squarefree inputs.

    Returns (basis, factorizations): ``basis`` is a list of monic pairwise
    coprime nonconstant polynomials and ``factorizations[k]`` lists the basis
    indices whose product is (the monic part of) ``polys[k]``.
    """
    basis: list[UniPoly] = []
    for p in polys:
        queue = [p.monic()]
        while queue:
            q = queue.pop()
            if q.degree() < 1:
                continue
            absorbed = False
            for i, b in enumerate(basis):
                g = gcd_uni(q, b)
                if g.degree() < 1:
                    continue
                if g.degree() < b.degree():
                    basis[i] = g
                    basis.append(b.exact_div(g).monic())
                queue.append(q.exact_div(g))
                absorbed = True
                break
            if not absorbed:
                basis.append(q)
    factorizations = []
    for p in polys:
        q = p.monic()
        idxs = []
        for i, b in enumerate(basis):
            if (q % b).is_zero():
                idxs.append(i)
                q = q.exact_div(b)
        if q.degree() >= 1:
            raise ArithmeticError("gcd-free basis failed to factor an input")
        factorizations.append(idxs)
    return basis, factorizations


# ---------------------------------------------------------------------------
# resultants (Sylvester determinant, fraction-free)
# ---------------------------------------------------------------------------


def _bareiss_det(mat, one, exact_div):
    """Determinant over an integral domain with exact division."""
    n = len(mat)
    if n == 0:
        return one
    m = [list(r) for r in mat]
    sign = 1
    prev = one
    for k in range(n - 1):
        if not m[k][k]:
            piv = next((i for i in range(k + 1, n) if m[i][k]), -1)
            if piv < 0:
                return one - one
            m[k], m[piv] = m[piv], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = exact_div(m[k][k] * m[i][j] - m[i][k] * m[k][j], prev)
            m[i][k] = None
        prev = m[k][k]
    d = m[n - 1][n - 1]
    return d if sign > 0 else -d


def _sylvester(a_coeffs, b_coeffs, zero):
    """Sylvester matrix rows for coefficient sequences (ascending)."""
    da = len(a_coeffs) - 1
    db = len(b_coeffs) - 1
    n = da + db
    rows = []
    a_desc = list(reversed(a_coeffs))
    b_desc = list(reversed(b_coeffs))
    for i in range(db):
        rows.append([zero] * i + a_desc + [zero] * (n - da - 1 - i))
    for i in range(da):
        rows.append([zero] * i + b_desc + [zero] * (n - db - 1 - i))
    return rows


def resultant(a: UniPoly, b: UniPoly) -> Fraction:
    """Res(a, b) over QQ with the standard sign conventions."""
    if a.is_zero() or b.is_zero():
        raise ValueError("resultant of zero polynomial")
    da, db = a.degree(), b.degree()
    if da == 0:
        return a.coeffs[0] ** db
    if db == 0:
        return b.coeffs[0] ** da
    rows = _sylvester(list(a.coeffs), list(b.coeffs), _ZERO)
    return _bareiss_det(rows, _ONE, lambda x, y: x / y)


def resultant_x(a_coeffs, b_coeffs) -> UniPoly:
    """Res_x of two polynomials in x with UniPoly (in t) coefficients.

    Inputs are ascending-in-x lists of UniPoly.  Leading (in x) coefficients
    must be nonzero polynomials.
    """
    a = list(a_coeffs)
    b = list(b_coeffs)
    while a and a[-1].is_zero():
        a.pop()
    while b and b[-1].is_zero():
        b.pop()
    if not a or not b:
        raise ValueError("resultant of zero polynomial")
    da, db = len(a) - 1, len(b) - 1
    if da == 0:
        out = UniPoly.const(1)
        for _ in range(db):
            out = out * a[0]
        return out
    if db == 0:
        out = UniPoly.const(1)
        for _ in range(da):
            out = out * b[0]
        return out
    rows = _sylvester(a, b, UniPoly.zero())
    return _bareiss_det(rows, UniPoly.const(1), lambda x, y: x.exact_div(y))
