"""Finite-dimensional quiver algebras of the canonical exceptional collection.

The quiver is linear: vertices 0..n-1 with a fixed number of parallel arrows
between consecutive vertices (3 arrows, 3 vertices in the quadratic case;
2 arrows, 4 vertices in the cubic case).  Relations live in the single
outermost window (0 -> n-1); components A_{i,j} are spanned by path
monomials, reduced against the rref of the relation subspace in that window,
so bases and structure constants are reproducible bit for bit.

Paths are written left to right (travel order); the product u * v of
u in A_{i,j} with v in A_{j,k} is concatenation.  The Cartan matrix
C[i][j] = dim A_{i,j} is then upper triangular with unit diagonal.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product

from ncsurf.errors import WrongHilbert
from ncsurf.exactla import (
    Matrix,
    SpanReducer,
    charpoly,
    kernel_rows,
    q_str,
    rref_rows,
    solve_coords,
)
from ncsurf.polyring.unipoly import UniPoly
from ncsurf.superpot import CUBIC, QUADRATIC, RelationSpace

Q = Fraction


@dataclass(frozen=True)
class Quiver:
    kind: str
    nverts: int
    arrows: int  # parallel arrows between consecutive vertices

    @classmethod
    def quadratic(cls) -> "Quiver":
        return cls(QUADRATIC, 3, 3)

    @classmethod
    def cubic(cls) -> "Quiver":
        return cls(CUBIC, 4, 2)

    def arrow_name(self, step: int, idx: int) -> str:
        return "xyz"[idx] + str(step)


_EXPECTED_DIMS = {
    QUADRATIC: {0: 1, 1: 3, 2: 6},
    CUBIC: {0: 1, 1: 2, 2: 4, 3: 6},
}


class QuiverAlgebra:
    """kQ/I with per-component monomial bases and structure constants."""

    def __init__(self, steps, relations_basis, kind="generic", check_hilbert=False):
        self.kind = kind
        self.steps = tuple(int(s) for s in steps)
        self.nverts = len(self.steps) + 1
        n = self.nverts
        self.window = (0, n - 1)
        pathdim = 1
        for s in self.steps:
            pathdim *= s
        if relations_basis:
            if any(len(r) != pathdim for r in relations_basis):
                raise ValueError("relation vectors live in the wrong path space")
            self.reducer = SpanReducer([list(r) for r in relations_basis], pathdim)
        else:
            self.reducer = SpanReducer([], pathdim)
        # component bases: tuples of path monomials (arrow index sequences)
        self.basis: dict[tuple, tuple] = {}
        for i in range(n):
            for j in range(i, n):
                if i == j:
                    self.basis[(i, j)] = ((),)
                    continue
                monos = list(product(*(range(self.steps[s]) for s in range(i, j))))
                if (i, j) == self.window and self.reducer.dim:
                    free = set(self.reducer.free)
                    monos = [m for k, m in enumerate(monos) if k in free]
                self.basis[(i, j)] = tuple(monos)
        if check_hilbert:
            expected = _EXPECTED_DIMS[kind]
            for (i, j), monos in self.basis.items():
                if len(monos) != expected[j - i]:
                    raise WrongHilbert(
                        f"dim A_{{{i},{j}}} = {len(monos)}, expected {expected[j - i]}"
                    )
        self._mono_index = {
            comp: {m: k for k, m in enumerate(monos)} for comp, monos in self.basis.items()
        }
        self._window_monos = list(
            product(*(range(self.steps[s]) for s in range(self.window[0], self.window[1])))
        )
        self._mult: dict = {}
        self._build_mult()

    # -- construction ------------------------------------------------------

    def _reduce_window_mono(self, mono):
        """Coordinates of a full-window path monomial in the quotient basis."""
        idx = self._window_monos.index(mono)
        vec = [Fraction(0)] * len(self._window_monos)
        vec[idx] = Fraction(1)
        red = self.reducer.reduce(vec)
        return tuple(red[k] for k in self.reducer.free)

    def _build_mult(self):
        n = self.nverts
        for i in range(n):
            for j in range(i, n):
                for k in range(j, n):
                    table = {}
                    target = self.basis[(i, k)]
                    tindex = self._mono_index[(i, k)]
                    for u, mu in enumerate(self.basis[(i, j)]):
                        for v, mv in enumerate(self.basis[(j, k)]):
                            mono = mu + mv
                            if (i, k) == self.window and self.reducer.dim:
                                coords = self._reduce_window_mono(mono)
                            else:
                                coords = tuple(
                                    Fraction(1) if t == tindex[mono] else Fraction(0)
                                    for t in range(len(target))
                                )
                            table[(u, v)] = coords
                    self._mult[(i, j, k)] = table

    # -- accessors ----------------------------------------------------------

    def dim(self, i: int, j: int) -> int:
        return len(self.basis.get((i, j), ()))

    @property
    def dims(self):
        return {comp: len(monos) for comp, monos in self.basis.items()}

    @property
    def total_dim(self) -> int:
        return sum(len(m) for m in self.basis.values())

    def mult(self, i: int, j: int, k: int, u: int, v: int):
        """Coordinates of (u-th basis elt of A_{i,j}) * (v-th of A_{j,k})."""
        return self._mult[(i, j, k)][(u, v)]

    def mult_vec(self, i, j, k, uvec, vvec):
        """Product of coordinate vectors, as coordinates in A_{i,k}."""
        out = [Fraction(0)] * self.dim(i, k)
        table = self._mult[(i, j, k)]
        for u, cu in enumerate(uvec):
            if cu == 0:
                continue
            for v, cv in enumerate(vvec):
                if cv == 0:
                    continue
                for t, c in enumerate(table[(u, v)]):
                    if c:
                        out[t] += cu * cv * c
        return tuple(out)

    def radical_components(self):
        return [comp for comp in self.basis if comp[0] < comp[1]]

    def check_associativity(self) -> bool:
        """(uv)w = u(vw) over all basis triples (exhaustive)."""
        n = self.nverts
        for i in range(n):
            for j in range(i, n):
                for k in range(j, n):
                    for l in range(k, n):
                        for u in range(self.dim(i, j)):
                            for v in range(self.dim(j, k)):
                                uv = self.mult(i, j, k, u, v)
                                for w in range(self.dim(k, l)):
                                    wvec = tuple(
                                        Fraction(1) if t == w else Fraction(0)
                                        for t in range(self.dim(k, l))
                                    )
                                    left = self.mult_vec(i, k, l, uv, wvec)
                                    vw = self.mult(j, k, l, v, w)
                                    uvecu = tuple(
                                        Fraction(1) if t == u else Fraction(0)
                                        for t in range(self.dim(i, j))
                                    )
                                    right = self.mult_vec(i, j, l, uvecu, vw)
                                    if left != right:
                                        return False
        return True

    def to_json(self):
        return {
            "kind": self.kind,
            "dims": {f"{i},{j}": self.dim(i, j) for (i, j) in sorted(self.basis)},
            "structure_constants": {
                f"{i},{j},{k}": {
                    f"{u},{v}": [q_str(c) for c in coords]
                    for (u, v), coords in sorted(table.items())
                }
                for (i, j, k), table in sorted(self._mult.items())
                if i < j < k
            },
        }


def build_algebra(quiver: Quiver, relations: RelationSpace) -> QuiverAlgebra:
    """Quotient of the truncated path algebra by the relation subspace.

    WrongHilbert signals component dimensions off the regular pattern
    (1,3,6 / 1,2,4,6), which for this truncation means a degenerate
    relation subspace.
    """
    if relations.kind != quiver.kind:
        raise ValueError("relation space kind does not match the quiver")
    steps = (quiver.arrows,) * (quiver.nverts - 1)
    expected_rel = {QUADRATIC: 3, CUBIC: 2}[quiver.kind]
    if relations.dim != expected_rel:
        raise WrongHilbert(
            f"{quiver.kind} window needs {expected_rel} relations, got {relations.dim}"
        )
    return QuiverAlgebra(steps, relations.basis, kind=quiver.kind, check_hilbert=True)


def build_unchecked(steps, relations_basis=(), kind="generic") -> QuiverAlgebra:
    """Test fixture builder for arbitrary linear quivers (no Hilbert check)."""
    return QuiverAlgebra(steps, relations_basis, kind=kind, check_hilbert=False)


# ---------------------------------------------------------------------------
# Cartan / Coxeter
# ---------------------------------------------------------------------------


def cartan_and_coxeter(a: QuiverAlgebra):
    """Cartan matrix, the K-theory action of the Serre functor, unipotency.

    C[i][j] = dim A_{i,j} is upper triangular with unit diagonal; the Serre
    functor acts on the Grothendieck group by Phi = C^{-T} C, and the
    verdict records whether charpoly(Phi) = (t-1)^n.
    """
    n = a.nverts
    c = Matrix([[Fraction(a.dim(i, j)) if j >= i else Fraction(0) for j in range(n)] for i in range(n)])
    phi = c.inverse().transpose() * c
    cp = charpoly(phi)
    target = UniPoly.from_roots([Fraction(1)] * n)
    return c, phi, cp == target


# ---------------------------------------------------------------------------
# global dimension via projective covers
# ---------------------------------------------------------------------------


class _Module:
    """Right module over a QuiverAlgebra: per-vertex spaces + arrow actions.

    ``spaces[v]`` is a list of basis labels (dim only matters); ``action``
    maps (vertex, arrow index) to a matrix (list of rows) sending row
    vectors at ``vertex`` to row vectors at ``vertex + 1``.
    """

    def __init__(self, alg: QuiverAlgebra, dims, action):
        self.alg = alg
        self.dims = dict(dims)
        self.action = action  # (v, arrowidx) -> list of rows (dims[v] x dims[v+1])

    def dim(self, v: int) -> int:
        return self.dims.get(v, 0)

    def total(self) -> int:
        return sum(self.dims.values())

    def act_arrow(self, v: int, arrow: int, vec):
        mat = self.action.get((v, arrow))
        if mat is None:
            return [Fraction(0)] * self.dim(v + 1)
        out = [Fraction(0)] * self.dim(v + 1)
        for r, c in enumerate(vec):
            if c:
                row = mat[r]
                for t in range(len(out)):
                    if row[t]:
                        out[t] += c * row[t]
        return out

    def act_path(self, v: int, mono, vec):
        for s, arrow in enumerate(mono):
            vec = self.act_arrow(v + s, arrow, vec)
        return list(vec)


def projective_module(alg: QuiverAlgebra, k: int) -> _Module:
    """P_k = e_k A with the right regular action."""
    dims = {}
    for j in range(k, alg.nverts):
        dims[j] = alg.dim(k, j)
    action = {}
    for j in range(k, alg.nverts - 1):
        for arrow in range(alg.steps[j]):
            mat = []
            for u in range(alg.dim(k, j)):
                mat.append(list(alg.mult(k, j, j + 1, u, arrow)))
            action[(j, arrow)] = mat
    return _Module(alg, dims, action)


def radical_submodule(m: _Module, k: int) -> _Module:
    """rad P_k inside P_k (vertex spaces strictly past k)."""
    dims = {v: d for v, d in m.dims.items() if v > k}
    action = {(v, a): mat for (v, a), mat in m.action.items() if v > k}
    return _Module(m.alg, dims, action)


def _top_generators(m: _Module):
    """Unit-vector lifts of a basis of M / M.rad, grouped by vertex.

    M.rad at vertex v is the sum of arrow images from v-1 (longer paths
    factor through the last arrow).
    """
    gens = []
    for v in sorted(m.dims):
        d = m.dim(v)
        if d == 0:
            continue
        radrows = []
        if 0 <= v - 1 < len(m.alg.steps):
            for arrow in range(m.alg.steps[v - 1]):
                mat = m.action.get((v - 1, arrow))
                if mat:
                    radrows.extend(mat)
        aug = [list(r) for r in _independent_rows(radrows)]
        for e in range(d):
            unit = [Fraction(1) if t == e else Fraction(0) for t in range(d)]
            if solve_coords(aug, unit) is None:
                aug.append(unit)
                gens.append((v, unit))
    return gens


def _independent_rows(rows):
    if not rows:
        return []
    red, pivots = rref_rows(rows)
    return [red[i] for i in range(len(pivots))]


def _cover_and_kernel(m: _Module):
    """Projective cover P -> M; returns (multiplicities, kernel module)."""
    alg = m.alg
    gens = _top_generators(m)
    # images of the cover's canonical basis, grouped by target vertex
    cover_basis = {}  # vertex -> list of (gen index, component (j,l) basis idx)
    images = {}  # vertex -> list of image vectors in M_l
    for v in range(alg.nverts):
        cover_basis[v] = []
        images[v] = []
    for gi, (j, lift) in enumerate(gens):
        for l in range(j, alg.nverts):
            for bidx, mono in enumerate(alg.basis[(j, l)]):
                img = m.act_path(j, mono, lift)
                cover_basis[l].append((gi, j, bidx))
                images[l].append(img)
    kern_dims = {}
    kern_basis = {}
    for v in range(alg.nverts):
        if not cover_basis[v]:
            continue
        rows = images[v]
        width = m.dim(v)
        if width:
            ker = kernel_rows(
                [[rows[r][c] for r in range(len(rows))] for c in range(width)],
                ncols=len(rows),
            )
        else:
            ker = [
                tuple(Fraction(1) if t == i else Fraction(0) for t in range(len(rows)))
                for i in range(len(rows))
            ]
        if ker:
            kern_dims[v] = len(ker)
            kern_basis[v] = ker
    # kernel arrow action: act inside the cover, re-express in kernel basis
    action = {}
    for v in sorted(kern_dims):
        if v >= len(alg.steps):
            continue
        for arrow in range(alg.steps[v]):
            # cover action at vertex v: basis (gi, j, bidx of A_{j,v}) -> A_{j,v+1}
            tindex = {}
            for t, (gi, j, bidx) in enumerate(cover_basis.get(v + 1, [])):
                tindex[(gi, j, bidx)] = t
            mat = []
            for kvec in kern_basis[v]:
                out = [Fraction(0)] * len(cover_basis.get(v + 1, []))
                for src, c in enumerate(kvec):
                    if c == 0:
                        continue
                    gi, j, bidx = cover_basis[v][src]
                    coords = alg.mult(j, v, v + 1, bidx, arrow)
                    for tb, cc in enumerate(coords):
                        if cc:
                            out[tindex[(gi, j, tb)]] += c * cc
                mat.append(out)
            # re-express rows in the kernel basis at v+1
            target = kern_basis.get(v + 1, [])
            newmat = []
            for row in mat:
                if all(x == 0 for x in row):
                    newmat.append([Fraction(0)] * len(target))
                    continue
                coords = solve_coords([list(t) for t in target], row)
                if coords is None:
                    raise RuntimeError("kernel is not a submodule (bug)")
                newmat.append(list(coords))
            if target or any(any(x for x in row) for row in mat):
                action[(v, arrow)] = newmat
    kernel = _Module(alg, kern_dims, action)
    mults = {}
    for j, _ in gens:
        mults[j] = mults.get(j, 0) + 1
    return mults, kernel


def pdim_simple(alg: QuiverAlgebra, k: int) -> int:
    """Projective dimension of the simple at vertex k by iterated covers."""
    p = projective_module(alg, k)
    m = radical_submodule(p, k)
    if m.total() == 0:
        return 0
    pd = 0
    while True:
        pd += 1
        _, kernel = _cover_and_kernel(m)
        if kernel.total() == 0:
            return pd
        m = kernel
        if pd > alg.nverts + 2:
            raise RuntimeError("projective resolution did not terminate")


def global_dimension(a: QuiverAlgebra) -> int:
    return max(pdim_simple(a, k) for k in range(a.nverts))
