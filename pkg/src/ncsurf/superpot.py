"""Superpotential tensors and graded presentations.

The classifying linear-algebra data: a rational 3x3x3 tensor (noncommutative
plane) or 2x2x2x2 tensor (noncommutative quadric), its nondegeneracy checks,
the extraction of quiver relations by contracting the last slot, and the
inverse direction recovering the tensor from a graded presentation as the
one-dimensional intersection (V ox R) cap (R ox V).
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import product

from ncsurf.errors import DegenerateRelations, NotPotential, NotZeroDimensional
from ncsurf.exactla import kernel_rows, q_parse, q_str, rank_rows, rref_rows
from ncsurf.polyring.homform import HomForm, det2, det3
from ncsurf.polyring.dyneval import dynamic_eval_solve

Q = Fraction

QUADRATIC = "quadratic"
CUBIC = "cubic"


class Tensor:
    """Dense rational hypermatrix w spanning the one-dimensional W."""

    __slots__ = ("kind", "dims", "entries")

    def __init__(self, kind: str, entries):
        if kind == QUADRATIC:
            dims = (3, 3, 3)
        elif kind == CUBIC:
            dims = (2, 2, 2, 2)
        else:
            raise ValueError(f"unknown tensor kind {kind!r}")
        flat = {}
        for idx in product(*(range(d) for d in dims)):
            v = entries
            for i in idx:
                v = v[i]
            flat[idx] = Fraction(v)
        if all(v == 0 for v in flat.values()):
            raise ValueError("tensor must be nonzero")
        self.kind = kind
        self.dims = dims
        self.entries = flat

    def __getitem__(self, idx):
        return self.entries[tuple(idx)]

    def __eq__(self, other):
        return isinstance(other, Tensor) and self.kind == other.kind and self.entries == other.entries

    def __repr__(self):
        nz = sum(1 for v in self.entries.values() if v)
        return f"Tensor({self.kind}, {nz} nonzero entries)"

    def nested(self):
        def build(prefix, depth):
            d = self.dims[depth]
            if depth == len(self.dims) - 1:
                return [self.entries[prefix + (i,)] for i in range(d)]
            return [build(prefix + (i,), depth + 1) for i in range(d)]

        return build((), 0)

    def scale(self, c) -> "Tensor":
        c = Fraction(c)
        return Tensor(self.kind, _map_nested(self.nested(), lambda v: v * c))

    def transform(self, mats) -> "Tensor":
        """Change basis in each slot: w'[a] = sum_b w[b] prod_s mats[s][b_s][a_s]."""
        dims = self.dims
        out = {}
        for a in product(*(range(d) for d in dims)):
            total = Fraction(0)
            for b, v in self.entries.items():
                if v == 0:
                    continue
                c = v
                for s in range(len(dims)):
                    c *= Fraction(mats[s][b[s]][a[s]])
                    if c == 0:
                        break
                total += c
            out[a] = total
        nested = Tensor(self.kind, _unflatten(out, dims))
        return nested

    def to_json(self):
        return {"kind": self.kind, "w": _map_nested(self.nested(), q_str)}

    @classmethod
    def from_json(cls, data) -> "Tensor":
        return cls(data["kind"], _map_nested(data["w"], q_parse))


def _map_nested(x, f):
    if isinstance(x, (list, tuple)):
        return [_map_nested(v, f) for v in x]
    return f(x)


def _unflatten(flat, dims):
    def build(prefix, depth):
        if depth == len(dims):
            return flat[prefix]
        return [build(prefix + (i,), depth + 1) for i in range(dims[depth])]

    return build((), 0)


def random_tensor(kind: str, height: int, rng: random.Random) -> Tensor:
    dims = (3, 3, 3) if kind == QUADRATIC else (2, 2, 2, 2)
    while True:
        flat = {idx: Fraction(rng.randint(-height, height)) for idx in product(*(range(d) for d in dims))}
        if any(flat.values()):
            return Tensor(kind, _unflatten(flat, dims))


class GradedPresentation:
    """Relations of a graded algebra on 3 (degree-2) or 2 (degree-3) generators."""

    def __init__(self, kind: str, relations):
        if kind == QUADRATIC:
            ngens, degree, nrel = 3, 2, 3
        elif kind == CUBIC:
            ngens, degree, nrel = 2, 3, 2
        else:
            raise ValueError(f"unknown presentation kind {kind!r}")
        vecs = []
        for rel in relations:
            if isinstance(rel, (list, tuple)) and rel and isinstance(rel[0], (list, tuple)) and len(rel[0]) == 2:
                vec = [Fraction(0)] * ngens**degree
                for word, c in rel:
                    if len(word) != degree or any(not 0 <= g < ngens for g in word):
                        raise ValueError(f"bad word {word}")
                    vec[_word_index(word, ngens)] += Fraction(c)
                vecs.append(tuple(vec))
            else:
                vec = tuple(Fraction(c) for c in rel)
                if len(vec) != ngens**degree:
                    raise ValueError("bad relation vector length")
                vecs.append(vec)
        if len(vecs) != nrel:
            raise ValueError(f"{kind} presentation needs {nrel} relations")
        if rank_rows(vecs) != nrel:
            raise ValueError("relations must be linearly independent")
        self.kind = kind
        self.ngens = ngens
        self.degree = degree
        self.relations = tuple(vecs)

    def to_json(self):
        rels = []
        for vec in self.relations:
            terms = []
            for i, c in enumerate(vec):
                if c:
                    terms.append({"word": list(_index_word(i, self.ngens, self.degree)), "c": q_str(c)})
            rels.append(terms)
        return {"kind": self.kind, "relations": rels}

    @classmethod
    def from_json(cls, data) -> "GradedPresentation":
        rels = [[(tuple(t["word"]), q_parse(t["c"])) for t in rel] for rel in data["relations"]]
        return cls(data["kind"], rels)


def _word_index(word, ngens: int) -> int:
    idx = 0
    for g in word:
        idx = idx * ngens + g
    return idx


def _index_word(idx: int, ngens: int, degree: int):
    word = []
    for _ in range(degree):
        word.append(idx % ngens)
        idx //= ngens
    return tuple(reversed(word))


@dataclass(frozen=True)
class RelationSpace:
    """Deterministic rref basis of the relation subspace of the path space."""

    kind: str
    ngens: int
    degree: int
    basis: tuple

    @property
    def dim(self) -> int:
        return len(self.basis)

    def same_subspace(self, other: "RelationSpace") -> bool:
        if self.dim != other.dim:
            return False
        stacked = list(self.basis) + list(other.basis)
        return rank_rows(stacked) == self.dim


@dataclass(frozen=True)
class NondegeneracyVerdict:
    kind: str
    passed: bool
    elliptic: bool | None
    witness: str | None
    details: tuple

    def __bool__(self):
        return self.passed


# ---------------------------------------------------------------------------
# nondegeneracy
# ---------------------------------------------------------------------------


def _pencil_matrix(t: Tensor, slot: int):
    """Linear-form matrix of the contraction along ``slot``.

    Entry (a, b) is the linear HomForm sum_c w[..c..] v_c with (a, b) running
    over the remaining two slots in increasing slot order.
    """
    others = [s for s in range(3) if s != slot]
    mat = []
    for a in range(3):
        row = []
        for b in range(3):
            vec = [Fraction(0)] * 3
            for c in range(3):
                idx = [0, 0, 0]
                idx[slot] = c
                idx[others[0]] = a
                idx[others[1]] = b
                vec[c] = t[tuple(idx)]
            row.append(HomForm.linear(vec))
        mat.append(row)
    return mat


def pencil_determinant(t: Tensor, slot: int) -> HomForm:
    """det W_slot(v): the cubic whose vanishing locus is the point scheme."""
    return det3(_pencil_matrix(t, slot))


def check_quadruple(t: Tensor) -> NondegeneracyVerdict:
    """Rank >= 2 of every contraction W_j(v) over the closure, all slots.

    Implemented as emptiness of the projective zero set cut out by the nine
    2x2 minors.  Also reports whether each slot determinant is a nonzero
    cubic (the elliptic case; it vanishes identically in the linear case).
    """
    if t.kind != QUADRATIC:
        raise ValueError("check_quadruple expects a quadratic tensor")
    details = []
    passed = True
    elliptic = True
    witness = None
    for j in range(3):
        mat = _pencil_matrix(t, j)
        minors = []
        for r1, r2 in ((0, 1), (0, 2), (1, 2)):
            for c1, c2 in ((0, 1), (0, 2), (1, 2)):
                mm = det2([[mat[r1][c1], mat[r1][c2]], [mat[r2][c1], mat[r2][c2]]])
                if not mm.is_zero():
                    minors.append(mm)
        det = det3(mat)
        slot_elliptic = not det.is_zero()
        if not minors:
            passed = False
            if witness is None:
                witness = f"slot {j}: rank <= 1 at every point, e.g. (1 : 0 : 0)"
            details.append({"slot": j, "rank_locus": "everything", "elliptic": slot_elliptic})
            elliptic = elliptic and slot_elliptic
            continue
        try:
            res = dynamic_eval_solve(minors)
            bad = res.count
            pt = res.points[0].pretty() if res.points else None
        except NotZeroDimensional:
            bad = -1  # infinitely many rank-drop directions
            pt = _slice_witness(minors)
        if bad != 0:
            passed = False
            if witness is None:
                witness = f"slot {j}: rank <= 1 at {pt}"
        details.append(
            {"slot": j, "rank_drop_points": bad, "elliptic": slot_elliptic}
        )
        elliptic = elliptic and slot_elliptic
    return NondegeneracyVerdict(QUADRATIC, passed, elliptic if passed else None, witness, tuple(details))


def _slice_witness(minors):
    """A point on a positive-dimensional rank-drop locus, via line sections."""
    rng = random.Random(0xBADD)
    for _ in range(12):
        line = HomForm.linear([rng.randint(-3, 3) for _ in range(3)])
        if line.is_zero():
            continue
        try:
            res = dynamic_eval_solve(minors + [line])
        except NotZeroDimensional:
            continue
        if res.count:
            return res.points[0].pretty()
    return "(witness on a positive-dimensional locus)"


def check_quintuple(t: Tensor) -> NondegeneracyVerdict:
    """Nonvanishing of <phi_j ox phi_{j+1}, w> for nonzero functionals.

    For each j mod 4 the contraction map is a 4x4 matrix; the condition
    fails iff its kernel meets the rank-one quadric.  A kernel of dimension
    >= 2 always does (every projective line meets a quadric surface), so the
    check reduces to a kernel dimension and one 2x2 determinant.
    """
    if t.kind != CUBIC:
        raise ValueError("check_quintuple expects a cubic tensor")
    details = []
    passed = True
    witness = None
    for j in range(4):
        rows = []
        for c in range(2):
            for d in range(2):
                row = []
                for a in range(2):
                    for b in range(2):
                        idx = [0, 0, 0, 0]
                        idx[j] = a
                        idx[(j + 1) % 4] = b
                        idx[(j + 2) % 4] = c
                        idx[(j + 3) % 4] = d
                        row.append(t[tuple(idx)])
                rows.append(row)
        ker = kernel_rows(rows)
        ok = True
        reason = None
        if len(ker) == 1:
            k = ker[0]
            det = k[0] * k[3] - k[1] * k[2]
            if det == 0:
                ok = False
                reason = f"slot {j}: kernel spanned by a decomposable functional"
        elif len(ker) >= 2:
            ok = False
            reason = f"slot {j}: kernel dimension {len(ker)} meets the rank-one quadric"
        details.append({"slot": j, "kernel_dim": len(ker), "ok": ok})
        if not ok:
            passed = False
            if witness is None:
                witness = reason
    return NondegeneracyVerdict(CUBIC, passed, None, witness, tuple(details))


def check(t: Tensor) -> NondegeneracyVerdict:
    return check_quadruple(t) if t.kind == QUADRATIC else check_quintuple(t)


# ---------------------------------------------------------------------------
# relations <-> superpotential
# ---------------------------------------------------------------------------


def extract_relations(t: Tensor) -> RelationSpace:
    """Relation subspace: the span of the last-slot slices of w, rref basis."""
    if t.kind == QUADRATIC:
        n, length, expect = 3, 2, 3
    else:
        n, length, expect = 2, 3, 2
    slices = []
    for c in range(n):
        vec = []
        for idx in product(*(range(n) for _ in range(length))):
            vec.append(t[idx + (c,)])
        slices.append(tuple(vec))
    red, pivots = rref_rows(slices)
    basis = tuple(tuple(red[i]) for i in range(len(pivots)))
    if len(basis) != expect:
        raise DegenerateRelations(
            f"relation space has dimension {len(basis)}, expected {expect}"
        )
    return RelationSpace(t.kind, n, length, basis)


def relation_space_of(p: GradedPresentation) -> RelationSpace:
    red, pivots = rref_rows(p.relations)
    basis = tuple(tuple(red[i]) for i in range(len(pivots)))
    return RelationSpace(p.kind, p.ngens, p.degree, basis)


def recover_superpotential(p: GradedPresentation | RelationSpace) -> Tensor:
    """The spanning tensor of (V ox R) cap (R ox V); NotPotential if dim != 1."""
    rs = relation_space_of(p) if isinstance(p, GradedPresentation) else p
    n = rs.ngens
    length = rs.degree
    amb = n ** (length + 1)
    left = []  # e_i ox r
    right = []  # r ox e_i
    for i in range(n):
        for r in rs.basis:
            lv = [Fraction(0)] * amb
            rv = [Fraction(0)] * amb
            for widx, c in enumerate(r):
                if c:
                    lv[i * n**length + widx] = c
                    rv[widx * n + i] = c
            left.append(tuple(lv))
            right.append(tuple(rv))
    cols = len(left) + len(right)
    rows = [[left[a][r] for a in range(len(left))] + [-right[b][r] for b in range(len(right))] for r in range(amb)]
    ker = kernel_rows(rows, ncols=cols)
    if len(ker) != 1:
        raise NotPotential(f"(V ox R) cap (R ox V) has dimension {len(ker)}")
    coeffs = ker[0][: len(left)]
    wvec = [Fraction(0)] * amb
    for a, c in enumerate(coeffs):
        if c:
            for r in range(amb):
                wvec[r] += c * left[a][r]
    dims = (3, 3, 3) if rs.kind == QUADRATIC else (2, 2, 2, 2)
    flat = {}
    for pos, idx in enumerate(product(*(range(d) for d in dims))):
        flat[idx] = wvec[pos]
    t = Tensor(rs.kind, _unflatten(flat, dims))
    return _normalize_tensor(t)


def _normalize_tensor(t: Tensor) -> Tensor:
    """Integer-primitive rescaling with positive first nonzero entry."""
    from math import gcd, lcm

    m = 1
    for v in t.entries.values():
        m = lcm(m, v.denominator)
    g = 0
    for v in t.entries.values():
        g = gcd(g, int(v * m))
    scale = Fraction(m, g)
    for idx in sorted(t.entries):
        if t.entries[idx]:
            if t.entries[idx] * scale < 0:
                scale = -scale
            break
    return t.scale(scale)
