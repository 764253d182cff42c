"""Acceptance gate: one test per criterion, each printing a pass/fail line.

Run with ``pytest -v -s tests/test_acceptance.py`` to see the per-criterion
lines.  Tolerances are exact integer equality unless a runtime bound is
stated; runtime bounds are asserted with ``time.monotonic``.
"""

import random
import time
from fractions import Fraction as Q

from ncsurf import reference
from ncsurf.hochschild import (
    build_complex,
    hh1_via_derivations,
    hh_dimensions,
    hochschild_report,
    lie_bracket_hh1,
)
from ncsurf.pipeline import discover, run_preset, run_pipeline, verify_tables
from ncsurf.pointscheme import (
    classify_plane_cubic,
    plane_count_ok,
    segre_rank_oracle,
    segre_symbol,
)
from ncsurf.polyring.homform import count_projective_points, reduce_mod_p
from ncsurf.presets import load_fixtures
from ncsurf.quiveralg import Quiver, build_algebra, cartan_and_coxeter, global_dimension
from ncsurf.superpot import CUBIC, QUADRATIC, check, extract_relations, random_tensor

from test_hochschild import _check_antisymmetry_jacobi
from test_pointscheme import GOLDEN_CUBICS, UNIT_PENCILS


def _report(criterion, ok, detail=""):
    print(f"\nACCEPTANCE {criterion}: {'PASS' if ok else 'FAIL'}  {detail}")
    assert ok, f"{criterion}: {detail}"


def _alg(tensor):
    quiver = Quiver.quadratic() if tensor.kind == QUADRATIC else Quiver.cubic()
    return build_algebra(quiver, extract_relations(tensor))


def test_criterion_01_commutative_baselines():
    t0 = time.monotonic()
    plane = run_preset("commutative-plane", with_bracket=False)
    t_plane = time.monotonic() - t0
    t0 = time.monotonic()
    quadric = run_preset("commutative-quadric", with_bracket=False)
    t_quadric = time.monotonic() - t0
    ok = (
        plane["hochschild"]["h"] == [1, 8, 10, 0]
        and quadric["hochschild"]["h"] == [1, 6, 9, 0]
        and t_plane < 5.0
        and t_quadric < 5.0
    )
    _report(
        "1 (commutative baselines)",
        ok,
        f"plane {plane['hochschild']['h']} in {t_plane:.2f}s, "
        f"quadric {quadric['hochschild']['h']} in {t_quadric:.2f}s",
    )


def test_criterion_02_plane_golden_rows():
    details = []
    ok = True
    for name, expect_class, expect_h in (
        ("sklyanin-plane:1,2,3", "P1", (0, 2)),
        ("sklyanin-plane:1,5,7", "P1", (0, 2)),
        ("skew-plane:q=2", "P4", (2, 4)),
        ("skew-plane:q=3", "P4", (2, 4)),
    ):
        rep = run_preset(name, with_bracket=False)
        got = (rep["hochschild"]["h"][1], rep["hochschild"]["h"][2])
        good = rep["point_scheme"]["verdict"] == expect_class and got == expect_h
        ok = ok and good
        details.append(f"{name}->{rep['point_scheme']['verdict']}{got}")
    for fx in load_fixtures(QUADRATIC):
        rep = run_pipeline(fx["tensor"], with_bracket=False)
        expect = reference.PLANE_HH[fx["verdict"]]
        got = (rep["hochschild"]["h"][1], rep["hochschild"]["h"][2])
        good = rep["point_scheme"]["verdict"] == fx["verdict"] and got == expect
        ok = ok and good
    details.append(f"{len(load_fixtures(QUADRATIC))} plane fixtures")
    _report("2 (plane golden rows)", ok, "; ".join(details))


def test_criterion_03_quadric_golden_rows():
    ok = True
    details = []
    for name in ("cubic-sklyanin:1,2,3", "cubic-sklyanin:3,1,2"):
        rep = run_preset(name, with_bracket=False)
        got = (rep["hochschild"]["h"][1], rep["hochschild"]["h"][2])
        good = rep["point_scheme"]["verdict"] == "Q1" and got == (0, 3)
        ok = ok and good
        details.append(f"{name}->{rep['point_scheme']['verdict']}{got}")
    fixtures = load_fixtures(CUBIC)
    for fx in fixtures:
        rep = run_pipeline(fx["tensor"], with_bracket=False)
        expect = reference.QUADRIC_HH[fx["verdict"]]
        got = (rep["hochschild"]["h"][1], rep["hochschild"]["h"][2])
        good = rep["point_scheme"]["verdict"] == fx["verdict"] and got == expect
        ok = ok and good
    details.append(f"{len(fixtures)} quadric fixtures")
    _report("3 (quadric golden rows)", ok, "; ".join(details))


def test_criterion_04_structural_identities():
    rng = random.Random(404)
    checked = 0
    ok = True
    for kind, nverts in ((QUADRATIC, 3), (CUBIC, 4)):
        done = 0
        while done < 8:
            t = random_tensor(kind, 3, rng)
            if not check(t).passed:
                continue
            alg = _alg(t)
            h = hh_dimensions(build_complex(alg))
            _, _, unipotent = cartan_and_coxeter(alg)
            good = (
                h[0] == 1
                and h[3] == 0
                and h[2] == nverts + h[1] - 1
                and h[0] - h[1] + h[2] - h[3] == nverts
                and global_dimension(alg) == 2
                and unipotent
            )
            ok = ok and good
            checked += 1
            done += 1
    _report("4 (structural identities)", ok, f"{checked} random PASS tensors, zero tolerance")


def test_criterion_05_cross_algorithm_consistency():
    rng = random.Random(505)
    worst = 0.0
    ok = True
    for kind in (QUADRATIC, CUBIC):
        done = 0
        while done < 50:
            t = random_tensor(kind, 4, rng)
            t0 = time.monotonic()
            if not check(t).passed:
                continue
            alg = _alg(t)
            h = hh_dimensions(build_complex(alg))
            h1_der, _ = hh1_via_derivations(alg)
            dt = time.monotonic() - t0
            worst = max(worst, dt)
            ok = ok and h1_der == h[1] and dt < 1.0
            done += 1
    _report(
        "5 (complex h1 == derivations h1, 50 per kind)",
        ok,
        f"100 tensors, worst per-tensor time {worst:.3f}s < 1s",
    )


def test_criterion_06_lie_structure():
    from ncsurf.presets import antisym_tensor, commutative_quadric_presentation, skew_tensor
    from ncsurf.superpot import recover_superpotential

    plane = hochschild_report(_alg(antisym_tensor()))
    quadric = hochschild_report(_alg(recover_superpotential(commutative_quadric_presentation())))
    ok = (
        plane.killing_rank == 8
        and plane.derived_dim == 8
        and quadric.killing_rank == 6
        and quadric.derived_dim == 6
    )
    # Jacobi identity exhaustively on every computed bracket
    for alg in (_alg(antisym_tensor()), _alg(skew_tensor(2, 2, 2))):
        cx = build_complex(alg)
        const, _ = lie_bracket_hh1(cx)
        _check_antisymmetry_jacobi(const)
    cx = build_complex(_alg(recover_superpotential(commutative_quadric_presentation())))
    const, _ = lie_bracket_hh1(cx)
    _check_antisymmetry_jacobi(const)
    _report(
        "6 (Lie structure)",
        ok,
        f"plane killing {plane.killing_rank} derived {plane.derived_dim} (sl3); "
        f"quadric killing {quadric.killing_rank} derived {quadric.derived_dim} (sl2+sl2); Jacobi ok",
    )


def test_criterion_07_segre_unit_suite():
    from ncsurf.exactla import Matrix

    rng = random.Random(707)
    needed = {"[4]", "[2,2]", "[(2,2)]", "[1,1,1,1]", "[(1,1),1,1]"}
    got = set()
    congruences = 0
    ok = True
    for expect, (m, n) in UNIT_PENCILS.items():
        sym = segre_symbol(m, n)
        ok = ok and str(sym) == expect and segre_rank_oracle(m, n) == sym.key()
        got.add(str(sym))
        for _ in range(20):
            while True:
                g = Matrix([[Q(rng.randint(-2, 2)) for _ in range(4)] for _ in range(4)])
                if g.det() != 0:
                    break
            a = Q(rng.choice((1, 2, -1, 3)))
            b = Q(rng.randint(-2, 2))
            m2 = g.transpose() * m * g
            n2 = g.transpose() * (a * n + b * m) * g
            ok = ok and segre_symbol(m2, n2).key() == sym.key()
            congruences += 1
    ok = ok and needed <= got
    _report(
        "7 (Segre unit suite)",
        ok,
        f"symbols {sorted(got)}, oracle agreement, {congruences} congruence/pencil changes",
    )


def test_criterion_08_plane_classifier_golden_suite():
    ok = True
    details = []
    for name, f in GOLDEN_CUBICS.items():
        verdict = classify_plane_cubic(f).verdict
        good = verdict == name
        if not f.is_zero():
            for p in (101, 211, 307):
                n = count_projective_points(reduce_mod_p(f, p))
                good = good and plane_count_ok(name, n, p)
        ok = ok and good
        details.append(f"{name}:{verdict}")
    _report("8 (plane golden suite + mod-p oracle)", ok, " ".join(details))


def test_criterion_09_table_consistency_identities():
    failures = reference.verify_reference_tables()
    plane_col = tuple(reference.PLANE_HH[t][0] for t in reference.PLANE_ORDER)
    quadric_col = tuple(reference.QUADRIC_HH[t][0] for t in reference.QUADRIC_ORDER)
    ok = (
        not failures
        and plane_col == (0, 0, 0, 2, 2, 1, 1, 5, 3)
        and quadric_col == (0, 0, 0, 1, 1, 1, 2, 2, 1, 1, 3, 3, 3)
    )
    _report(
        "9 (table cross-identities)",
        ok,
        f"plane h1 col {plane_col}; quadric h1 col {quadric_col}; failures {failures}",
    )


def test_criterion_10_coverage():
    t0 = time.monotonic()
    plane = discover(QUADRATIC, trials=150, height=3, seed=42)
    quadric = discover(CUBIC, trials=250, height=3, seed=42)
    elapsed = time.monotonic() - t0
    t1 = time.monotonic()
    summary = verify_tables(include_fixtures=True)
    verify_time = time.monotonic() - t1
    ok = (
        len(plane["coverage"]) >= 6
        and len(quadric["coverage"]) >= 6
        and elapsed < 300.0
        and summary["ok"]
        and verify_time < 60.0
    )
    _report(
        "10 (coverage + committed fixtures)",
        ok,
        f"plane {len(plane['coverage'])} types {plane['coverage']}, "
        f"quadric {len(quadric['coverage'])} types {quadric['coverage']} "
        f"in {elapsed:.0f}s; verify-tables over fixtures ok={summary['ok']} "
        f"in {verify_time:.0f}s",
    )
