"""Command-line front end.

Subcommands: check, relations, algebra, hh, classify, segre, run,
verify-tables, discover.  Inputs are the tensor / presentation JSON formats
(or ``preset:NAME`` for run).  Output is UTF-8 JSON on stdout, or a
human-readable rendering with --pretty.  Exit code 0 iff all requested
verifications pass.  NCSURF_SEED overrides the default discovery seed.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from ncsurf.errors import NcsurfError
from ncsurf.exactla import Matrix, q_parse
from ncsurf.hochschild import hochschild_report
from ncsurf.pointscheme import classify, segre_symbol
from ncsurf.pipeline import discover, run_pipeline, run_preset, verify_tables
from ncsurf.presets import preset_names
from ncsurf.quiveralg import Quiver, build_algebra
from ncsurf.superpot import (
    CUBIC,
    QUADRATIC,
    GradedPresentation,
    Tensor,
    check,
    extract_relations,
    recover_superpotential,
)


def load_input(path: str):
    """Tensor or GradedPresentation from a JSON file."""
    with open(path, "r", encoding="utf-8") as fh:
        data = json.load(fh)
    if "w" in data:
        return Tensor.from_json(data)
    if "relations" in data:
        return GradedPresentation.from_json(data)
    raise ValueError(f"{path}: neither a tensor ('w') nor presentation ('relations') file")


def _as_tensor(obj):
    if isinstance(obj, GradedPresentation):
        return recover_superpotential(obj)
    return obj


def emit(data, pretty: bool):
    if pretty:
        print(render_pretty(data))
    else:
        json.dump(data, sys.stdout, sort_keys=True)
        sys.stdout.write("\n")


def render_pretty(data, indent: int = 0) -> str:
    pad = "  " * indent
    if isinstance(data, dict):
        lines = []
        for k in data:
            v = data[k]
            if isinstance(v, (dict, list)) and v and not _is_flat(v):
                lines.append(f"{pad}{k}:")
                lines.append(render_pretty(v, indent + 1))
            else:
                lines.append(f"{pad}{k}: {_flat_str(v)}")
        return "\n".join(lines)
    if isinstance(data, list):
        return "\n".join(
            f"{pad}- {_flat_str(v)}"
            if not isinstance(v, dict) and _is_flat(v) or not isinstance(v, (dict, list))
            else render_pretty(v, indent)
            for v in data
        )
    return f"{pad}{data}"


def _is_flat(v):
    if isinstance(v, list):
        return all(not isinstance(x, (dict, list)) for x in v)
    return False


def _flat_str(v):
    if isinstance(v, list):
        return "[" + ", ".join(str(x) for x in v) + "]"
    return str(v)


def cmd_check(args) -> int:
    obj = _as_tensor(load_input(args.file))
    verdict = check(obj)
    emit(
        {
            "kind": obj.kind,
            "passed": verdict.passed,
            "elliptic": verdict.elliptic,
            "witness": verdict.witness,
            "details": list(verdict.details),
        },
        args.pretty,
    )
    return 0 if verdict.passed else 2


def cmd_relations(args) -> int:
    from ncsurf.exactla import q_str

    t = _as_tensor(load_input(args.file))
    rs = extract_relations(t)
    emit(
        {
            "kind": rs.kind,
            "dim": rs.dim,
            "basis": [[q_str(c) for c in row] for row in rs.basis],
        },
        args.pretty,
    )
    return 0


def cmd_algebra(args) -> int:
    t = _as_tensor(load_input(args.file))
    quiver = Quiver.quadratic() if t.kind == QUADRATIC else Quiver.cubic()
    alg = build_algebra(quiver, extract_relations(t))
    emit(alg.to_json(), args.pretty)
    return 0


def cmd_hh(args) -> int:
    t = _as_tensor(load_input(args.file))
    quiver = Quiver.quadratic() if t.kind == QUADRATIC else Quiver.cubic()
    alg = build_algebra(quiver, extract_relations(t))
    rep = hochschild_report(alg)
    emit(rep.to_json(), args.pretty)
    return 0


def cmd_classify(args) -> int:
    t = _as_tensor(load_input(args.file))
    emit(classify(t).to_json(), args.pretty)
    return 0


def cmd_segre(args) -> int:
    with open(args.file, "r", encoding="utf-8") as fh:
        data = json.load(fh)
    m = Matrix([[q_parse(x) for x in row] for row in data["M"]])
    n = Matrix([[q_parse(x) for x in row] for row in data["N"]])
    sym = segre_symbol(m, n)
    emit(sym.to_json(), args.pretty)
    return 0


def cmd_run(args) -> int:
    if args.input.startswith("preset:"):
        report = run_preset(args.input[len("preset:") :])
    else:
        report = run_pipeline(load_input(args.input))
    emit(report, args.pretty)
    ok = report.get("status") == "ok" and report.get("table_check", {}).get("match", False)
    return 0 if ok else 2


def cmd_verify_tables(args) -> int:
    summary = verify_tables()
    emit(summary, args.pretty)
    return 0 if summary["ok"] else 2


def cmd_discover(args) -> int:
    seed = args.seed
    if seed is None:
        seed = int(os.environ.get("NCSURF_SEED", "42"))
    kind = {"plane": QUADRATIC, "quadric": CUBIC}.get(args.kind, args.kind)
    result = discover(kind, trials=args.trials, height=args.height, seed=seed)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            json.dump(result, fh, sort_keys=True, indent=1)
    emit(result, args.pretty)
    return 0


def cmd_presets(args) -> int:
    emit({"presets": preset_names()}, args.pretty)
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="ncsurf",
        description="Exact Hochschild cohomology and point-scheme classification "
        "of noncommutative planes and quadrics.",
    )
    ap.add_argument("--pretty", action="store_true", help="human-readable output")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="nondegeneracy verdict for a tensor/presentation")
    p.add_argument("file")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("relations", help="relation subspace extracted from the tensor")
    p.add_argument("file")
    p.set_defaults(func=cmd_relations)

    p = sub.add_parser("algebra", help="quiver algebra dump (dims, structure constants)")
    p.add_argument("file")
    p.set_defaults(func=cmd_algebra)

    p = sub.add_parser("hh", help="Hochschild cohomology report")
    p.add_argument("file")
    p.set_defaults(func=cmd_hh)

    p = sub.add_parser("classify", help="point-scheme classification")
    p.add_argument("file")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("segre", help="Segre symbol of a pencil {M, N} from JSON")
    p.add_argument("file")
    p.set_defaults(func=cmd_segre)

    p = sub.add_parser("run", help="full pipeline report for a file or preset:NAME")
    p.add_argument("input")
    p.set_defaults(func=cmd_run)

    p = sub.add_parser("verify-tables", help="verify reference tables, presets, fixtures")
    p.set_defaults(func=cmd_verify_tables)

    p = sub.add_parser("discover", help="randomized type-coverage harness")
    p.add_argument("--kind", required=True, choices=["plane", "quadric", QUADRATIC, CUBIC])
    p.add_argument("--trials", type=int, default=200)
    p.add_argument("--height", type=int, default=3)
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--out", default=None, help="also write the catalog to a file")
    p.set_defaults(func=cmd_discover)

    p = sub.add_parser("presets", help="list available presets")
    p.set_defaults(func=cmd_presets)

    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (NcsurfError, ValueError, OSError, KeyError) as exc:
        stage = args.command
        print(json.dumps({"error": f"{stage}: {type(exc).__name__}: {exc}"}), file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
