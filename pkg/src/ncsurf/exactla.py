"""Exact dense linear algebra over QQ.

Rationals are ``fractions.Fraction`` (arbitrary precision, normalized,
positive denominator -- exactly the invariants we need), matrices are small
dense arrays of them.  Everything here is pure and deterministic: pivots are
always the first nonzero entry, so reduced bases are reproducible bit for
bit.  Rank computations clear denominators and run fraction-free over ZZ
(see ``ncsurf.kernels``); no floating point anywhere.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm

from ncsurf import kernels
from ncsurf.polyring.unipoly import UniPoly

Q = Fraction

_ZERO = Fraction(0)
_ONE = Fraction(1)


def q_str(x: Fraction) -> str:
    """Serialize a rational as ``"p/q"``, or ``"p"`` when q = 1."""
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def q_parse(s) -> Fraction:
    """Inverse of :func:`q_str`; also accepts ints."""
    if isinstance(s, int):
        return Fraction(s)
    return Fraction(str(s))


# ---------------------------------------------------------------------------
# row-level helpers (plain lists of Fractions); Matrix wraps these
# ---------------------------------------------------------------------------


def rows_to_int(rows):
    """Scale each row to a primitive integer row (rank/kernel preserving)."""
    out = []
    for r in rows:
        m = 1
        for x in r:
            m = lcm(m, x.denominator)
        ints = [int(x * m) for x in r]
        g = 0
        for v in ints:
            g = gcd(g, v)
        if g > 1:
            ints = [v // g for v in ints]
        out.append(ints)
    return out


def rank_rows(rows) -> int:
    if not rows:
        return 0
    return kernels.bareiss_rank(rows_to_int(rows))


def rref_rows(rows):
    """Reduced row echelon form; returns (new rows, pivot column tuple)."""
    m = [list(r) for r in rows]
    nr = len(m)
    nc = len(m[0]) if nr else 0
    pivots = []
    r = 0
    for c in range(nc):
        piv = -1
        for i in range(r, nr):
            if m[i][c] != 0:
                piv = i
                break
        if piv < 0:
            continue
        if piv != r:
            m[r], m[piv] = m[piv], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(nr):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                row_r = m[r]
                m[i] = [a - f * b for a, b in zip(m[i], row_r)]
        pivots.append(c)
        r += 1
        if r == nr:
            break
    return m, tuple(pivots)


def kernel_rows(rows, ncols=None):
    """Basis of the right null space, one vector per free column.

    Each vector has a 1 at its free column, so representatives are unique
    and comparable across runs.
    """
    if not rows:
        nc = ncols if ncols is not None else 0
        return [tuple(_ONE if j == k else _ZERO for j in range(nc)) for k in range(nc)]
    nc = len(rows[0])
    red, pivots = rref_rows(rows)
    pivset = set(pivots)
    basis = []
    for free in range(nc):
        if free in pivset:
            continue
        v = [_ZERO] * nc
        v[free] = _ONE
        for r, pc in enumerate(pivots):
            v[pc] = -red[r][free]
        basis.append(tuple(v))
    return basis


def solve_coords(basis_rows, vec):
    """Coordinates of ``vec`` in the span of ``basis_rows``; None if outside."""
    if not basis_rows:
        return None if any(x != 0 for x in vec) else ()
    nb = len(basis_rows)
    nc = len(vec)
    aug = [[basis_rows[r][c] for r in range(nb)] + [vec[c]] for c in range(nc)]
    red, pivots = rref_rows(aug)
    if nb in pivots:
        return None
    coords = [_ZERO] * nb
    for r, pc in enumerate(pivots):
        coords[pc] = red[r][nb]
    return tuple(coords)


class SpanReducer:
    """Precomputed rref of a subspace for repeated membership/reduction.

    ``reduce(v)`` returns the canonical representative of ``v`` modulo the
    span: entries at pivot columns are eliminated, so representatives are
    supported on the complementary (free) monomials.
    """

    def __init__(self, rows, ncols):
        self.ncols = ncols
        if rows:
            self.red, self.pivots = rref_rows(rows)
        else:
            self.red, self.pivots = [], ()
        self.free = tuple(c for c in range(ncols) if c not in set(self.pivots))

    @property
    def dim(self) -> int:
        return len(self.pivots)

    def reduce(self, vec):
        v = list(vec)
        for r, pc in enumerate(self.pivots):
            f = v[pc]
            if f != 0:
                row = self.red[r]
                for j in range(pc, self.ncols):
                    v[j] -= f * row[j]
        return tuple(v)

    def contains(self, vec) -> bool:
        return all(x == 0 for x in self.reduce(vec))


# ---------------------------------------------------------------------------
# Matrix
# ---------------------------------------------------------------------------


class Matrix:
    """Immutable dense matrix over QQ (entries stored row-major)."""

    __slots__ = ("nrows", "ncols", "data")

    def __init__(self, data):
        rows = [tuple(Fraction(x) for x in r) for r in data]
        self.nrows = len(rows)
        self.ncols = len(rows[0]) if rows else 0
        if any(len(r) != self.ncols for r in rows):
            raise ValueError("ragged rows")
        self.data = tuple(rows)

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls([[_ONE if i == j else _ZERO for j in range(n)] for i in range(n)])

    @classmethod
    def zero(cls, nrows: int, ncols: int) -> "Matrix":
        return cls([[_ZERO] * ncols for _ in range(nrows)])

    def __eq__(self, other):
        return isinstance(other, Matrix) and self.data == other.data

    def __hash__(self):
        return hash(self.data)

    def __repr__(self):
        body = "; ".join(" ".join(q_str(x) for x in r) for r in self.data)
        return f"Matrix({self.nrows}x{self.ncols}: {body})"

    def __getitem__(self, ij):
        i, j = ij
        return self.data[i][j]

    def row(self, i):
        return self.data[i]

    def transpose(self) -> "Matrix":
        return Matrix([[self.data[i][j] for i in range(self.nrows)] for j in range(self.ncols)])

    def __add__(self, other: "Matrix") -> "Matrix":
        return Matrix([[a + b for a, b in zip(r, s)] for r, s in zip(self.data, other.data)])

    def __sub__(self, other: "Matrix") -> "Matrix":
        return Matrix([[a - b for a, b in zip(r, s)] for r, s in zip(self.data, other.data)])

    def __neg__(self) -> "Matrix":
        return Matrix([[-a for a in r] for r in self.data])

    def __mul__(self, other):
        if isinstance(other, Matrix):
            if self.ncols != other.nrows:
                raise ValueError("shape mismatch")
            ot = other.transpose().data
            return Matrix(
                [[sum(a * b for a, b in zip(r, c)) for c in ot] for r in self.data]
            )
        f = Fraction(other)
        return Matrix([[a * f for a in r] for r in self.data])

    __rmul__ = __mul__

    def apply(self, vec):
        """Matrix-vector product (vec as column)."""
        return tuple(sum(a * b for a, b in zip(r, vec)) for r in self.data)

    def rank(self) -> int:
        return rank_rows(self.data)

    def det(self) -> Fraction:
        if self.nrows != self.ncols:
            raise ValueError("det of non-square matrix")
        n = self.nrows
        m = [list(r) for r in self.data]
        sign = 1
        prev = _ONE
        for k in range(n - 1):
            if m[k][k] == 0:
                piv = next((i for i in range(k + 1, n) if m[i][k] != 0), -1)
                if piv < 0:
                    return _ZERO
                m[k], m[piv] = m[piv], m[k]
                sign = -sign
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    m[i][j] = (m[k][k] * m[i][j] - m[i][k] * m[k][j]) / prev
                m[i][k] = _ZERO
            prev = m[k][k]
        return sign * m[n - 1][n - 1]

    def inverse(self) -> "Matrix":
        n = self.nrows
        if n != self.ncols:
            raise ValueError("inverse of non-square matrix")
        aug = [list(self.data[i]) + [_ONE if j == i else _ZERO for j in range(n)] for i in range(n)]
        red, pivots = rref_rows(aug)
        if pivots != tuple(range(n)):
            raise ValueError("matrix not invertible")
        return Matrix([r[n:] for r in red])

    def is_unipotent_shift(self) -> bool:
        """True iff (self - I)^n = 0."""
        n = self.nrows
        m = self - Matrix.identity(n)
        acc = m
        for _ in range(n - 1):
            if all(x == 0 for r in acc.data for x in r):
                return True
            acc = acc * m
        return all(x == 0 for r in acc.data for x in r)


def rref(m: Matrix):
    """Reduced row echelon form of ``m``; returns (Matrix, pivot columns)."""
    red, pivots = rref_rows(m.data)
    return Matrix(red), pivots


def kernel_basis(m: Matrix):
    """Basis of the right null space of ``m`` as a list of column vectors."""
    return kernel_rows(m.data, ncols=m.ncols)


def charpoly(m: Matrix) -> UniPoly:
    """Monic characteristic polynomial det(t*I - m), Faddeev-LeVerrier."""
    n = m.nrows
    if n != m.ncols:
        raise ValueError("charpoly of non-square matrix")
    coeffs = [_ZERO] * (n + 1)
    coeffs[n] = _ONE
    mk = m
    ident = Matrix.identity(n)
    for k in range(1, n + 1):
        ck = -sum(mk.data[i][i] for i in range(n)) / k
        coeffs[n - k] = ck
        if k < n:
            mk = m * (mk + ck * ident)
    return UniPoly(coeffs)
