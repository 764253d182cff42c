"""Preset tensors and presentations with known classifications.

Guaranteed presets: the commutative plane (antisymmetric tensor), skew
planes (generic q and the q-product-1 linear specialization), Sklyanin
planes at small parameters, the commutative quadric presentation, and the
cubic Sklyanin-type family.  Types with no known closed-form presentation
are reached by the discovery harness; found representatives are committed
as data fixtures and swept by verify-tables.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from importlib import resources

from ncsurf.superpot import CUBIC, QUADRATIC, GradedPresentation, Tensor

Q = Fraction


def antisym_tensor() -> Tensor:
    w = [[[0] * 3 for _ in range(3)] for _ in range(3)]
    for (i, j, k), s in {
        (0, 1, 2): 1,
        (1, 2, 0): 1,
        (2, 0, 1): 1,
        (0, 2, 1): -1,
        (2, 1, 0): -1,
        (1, 0, 2): -1,
    }.items():
        w[i][j][k] = s
    return Tensor(QUADRATIC, w)


def sklyanin_tensor(a, b, c) -> Tensor:
    """a(xyz + yzx + zxy) + b(xzy + zyx + yxz) + c(xxx + yyy + zzz)."""
    w = [[[Q(0)] * 3 for _ in range(3)] for _ in range(3)]
    for i, j, k in ((0, 1, 2), (1, 2, 0), (2, 0, 1)):
        w[i][j][k] = Q(a)
    for i, j, k in ((0, 2, 1), (2, 1, 0), (1, 0, 2)):
        w[i][j][k] = Q(b)
    for i in range(3):
        w[i][i][i] = Q(c)
    return Tensor(QUADRATIC, w)


def skew_tensor(alpha, beta, gamma) -> Tensor:
    """Relations yz - alpha zy, zx - beta xz, xy - gamma yx.

    The point scheme is the coordinate triangle for generic parameters and
    the whole plane exactly when alpha*beta*gamma = 1.
    """
    w = [[[Q(0)] * 3 for _ in range(3)] for _ in range(3)]
    w[0][1][2] = Q(1)
    w[2][0][1] = Q(1)
    w[1][2][0] = Q(1)
    w[1][0][2] = -Q(gamma)
    w[0][2][1] = -Q(beta)
    w[2][1][0] = -Q(alpha)
    return Tensor(QUADRATIC, w)


def commutative_quadric_presentation() -> GradedPresentation:
    """k<x,y> / (x^2 y - y x^2, x y^2 - y^2 x)."""
    return GradedPresentation(
        CUBIC,
        [
            [((0, 0, 1), 1), ((1, 0, 0), -1)],
            [((0, 1, 1), 1), ((1, 1, 0), -1)],
        ],
    )


def cubic_sklyanin_presentation(a, b, c) -> GradedPresentation:
    """a y^2 x + b yxy + a x y^2 + c x^3 and the x <-> y swapped relation."""
    return GradedPresentation(
        CUBIC,
        [
            [((1, 1, 0), Q(a)), ((1, 0, 1), Q(b)), ((0, 1, 1), Q(a)), ((0, 0, 0), Q(c))],
            [((0, 0, 1), Q(a)), ((0, 1, 0), Q(b)), ((1, 0, 0), Q(a)), ((1, 1, 1), Q(c))],
        ],
    )


@dataclass(frozen=True)
class Preset:
    name: str
    kind: str
    payload: object  # Tensor | GradedPresentation
    expected_class: str | None
    notes: str


def _builtin_presets():
    return [
        Preset(
            "commutative-plane",
            QUADRATIC,
            antisym_tensor(),
            "Linear",
            "antisymmetric tensor; point scheme is the whole plane",
        ),
        Preset(
            "sklyanin-plane:1,2,3",
            QUADRATIC,
            sklyanin_tensor(1, 2, 3),
            "P1",
            "generic three-dimensional Sklyanin parameters",
        ),
        Preset(
            "sklyanin-plane:1,5,7",
            QUADRATIC,
            sklyanin_tensor(1, 5, 7),
            "P1",
            "second generic Sklyanin point",
        ),
        Preset(
            "skew-plane:q=2",
            QUADRATIC,
            skew_tensor(2, 2, 2),
            "P4",
            "skew polynomial plane, point scheme a coordinate triangle",
        ),
        Preset(
            "skew-plane:q=3",
            QUADRATIC,
            skew_tensor(3, 3, 3),
            "P4",
            "second skew plane",
        ),
        Preset(
            "skew-plane-linear",
            QUADRATIC,
            skew_tensor(2, 3, Fraction(1, 6)),
            "Linear",
            "q-product 1: the point variety is the whole plane",
        ),
        Preset(
            "commutative-quadric",
            CUBIC,
            commutative_quadric_presentation(),
            "Linear",
            "graded presentation of P1 x P1",
        ),
        Preset(
            "cubic-sklyanin:1,2,3",
            CUBIC,
            cubic_sklyanin_presentation(1, 2, 3),
            "Q1",
            "generic cubic Sklyanin-type parameters",
        ),
        Preset(
            "cubic-sklyanin:3,1,2",
            CUBIC,
            cubic_sklyanin_presentation(3, 1, 2),
            "Q1",
            "second generic cubic point",
        ),
    ]


_PRESETS = {p.name: p for p in _builtin_presets()}


def preset_names():
    return sorted(_PRESETS)


def get_preset(name: str) -> Preset:
    if name in _PRESETS:
        return _PRESETS[name]
    # parameterized forms: family:p1,p2,... or family:q=V
    if ":" in name:
        family, _, arg = name.partition(":")
        if family == "sklyanin-plane":
            a, b, c = _parse_params(arg, 3)
            return Preset(name, QUADRATIC, sklyanin_tensor(a, b, c), None, "sklyanin")
        if family == "skew-plane":
            if arg.startswith("q="):
                q = Fraction(arg[2:])
                return Preset(name, QUADRATIC, skew_tensor(q, q, q), None, "skew")
            a, b, c = _parse_params(arg, 3)
            return Preset(name, QUADRATIC, skew_tensor(a, b, c), None, "skew")
        if family == "cubic-sklyanin":
            a, b, c = _parse_params(arg, 3)
            return Preset(name, CUBIC, cubic_sklyanin_presentation(a, b, c), None, "cubic sklyanin")
    raise KeyError(f"unknown preset {name!r}")


def _parse_params(arg: str, n: int):
    parts = [Fraction(p) for p in arg.split(",")]
    if len(parts) != n:
        raise ValueError(f"expected {n} parameters, got {arg!r}")
    return parts


# ---------------------------------------------------------------------------
# committed discovery fixtures
# ---------------------------------------------------------------------------


def load_fixtures(kind: str):
    """Committed discovered representatives for ``kind`` (may be empty)."""
    fname = f"fixtures_{'plane' if kind == QUADRATIC else 'quadric'}.json"
    try:
        raw = resources.files("ncsurf.data").joinpath(fname).read_text()
    except (FileNotFoundError, ModuleNotFoundError):
        return []
    data = json.loads(raw)
    out = []
    for entry in data["entries"]:
        out.append(
            {
                "verdict": entry["verdict"],
                "tensor": Tensor.from_json(entry["tensor"]),
                "hh": tuple(entry["hh"]),
                "origin": entry.get("origin", "discover"),
            }
        )
    return out
