"""Acceptance criteria, one test and one PASS/FAIL line each.

Run ``python tests/test_acceptance.py`` for the lines alone; under pytest
they are repeated in the terminal summary.
"""

import random
import sys
import time
from fractions import Fraction
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from conftest import float_root_count, random_poly, random_rooted_uni  # noqa: E402

from jacpair.certify import (certify_typical, hrc_excludes,  # noqa: E402
                             vertex_parity_sign_change)
from jacpair.enumeration import (CASE_PAPER_IDS, CASES, audit_case,  # noqa: E402
                                 load_paper_polygons)
from jacpair.newton import (LatticePolygon, face, newton_polygon, primitive,  # noqa: E402
                            symbolic_restriction)
from jacpair.pipeline import analyze_pair, generate_tame_pair  # noqa: E402
from jacpair.polyarith import (Poly2, RationalInterval, UniPoly, eval_float,  # noqa: E402
                               jacobian_det, multiple_factor_product, parse_poly,
                               partial_derivative, sturm_count_real_roots, total_degree)

P = parse_poly
RESULTS: list[str] = []


def _record(number: int, title: str, ok: bool, elapsed: float, budget, detail: str) -> bool:
    timed = budget is None or elapsed < budget
    status = "PASS" if ok and timed else "FAIL"
    limit = f" (limit {budget:g} s)" if budget is not None else ""
    line = f"[{status}] {number}. {title}: {detail}; {elapsed:.2f} s{limit}"
    RESULTS.append(line)
    print(line)
    return ok and timed


def _xy_compose(u: UniPoly, shift: tuple[int, int]) -> Poly2:
    a, b = shift
    return Poly2({(k + a, k + b): c for k, c in enumerate(u.coeffs) if c})


# --- 1 ------------------------------------------------------------------------------


def criterion_1() -> bool:
    rng = random.Random(1)
    t0 = time.perf_counter()
    bad = 0
    for _ in range(100):
        F = UniPoly([Fraction(rng.randint(-9, 9), rng.randint(1, 6))
                     for _ in range(rng.randint(1, 4))])
        G = UniPoly([Fraction(rng.randint(-9, 9), rng.randint(1, 6))
                     for _ in range(rng.randint(1, 4))])
        lhs = jacobian_det(_xy_compose(F, (1, 0)), _xy_compose(G, (0, 1)))
        rhs = _xy_compose((UniPoly.t() * F * G).derivative(), (0, 0))
        bad += lhs != rhs
    dt = time.perf_counter() - t0
    return _record(1, "Znak0 identity", bad == 0, dt, 5, f"{100 - bad}/100 exact")


# --- 2 ------------------------------------------------------------------------------


def criterion_2() -> bool:
    rng = random.Random(2)
    t0 = time.perf_counter()
    checked = violations = 0
    for _ in range(200):
        f, g = random_poly(rng, 5), random_poly(rng, 5)
        v = (0, 0)
        while v == (0, 0):
            v = (rng.randint(-4, 4), rng.randint(-4, 4))
        xi = primitive(v)
        if f.is_zero() or g.is_zero():
            continue
        fx = symbolic_restriction(f, face(newton_polygon(f), xi))
        gx = symbolic_restriction(g, face(newton_polygon(g), xi))
        jx = jacobian_det(fx, gx)
        if jx.is_zero():
            continue
        J = jacobian_det(f, g)
        checked += 1
        violations += symbolic_restriction(J, face(newton_polygon(J), xi)) != jx
    dt = time.perf_counter() - t0
    return _record(2, "Face-Jacobian compatibility", violations == 0 and checked > 0, dt, 10,
                   f"{checked} nondegenerate cases, {violations} violations")


# --- 3 ------------------------------------------------------------------------------


def criterion_3() -> bool:
    rng = random.Random(3)
    box = RationalInterval(Fraction(-100), Fraction(100))
    t0 = time.perf_counter()
    mism = []
    for _ in range(100):
        u = random_rooted_uni(rng, 8)
        exact = sturm_count_real_roots(u, box)
        approx = float_root_count(u.coeffs)
        if exact != approx:
            mism.append((u, exact, approx))
    dt = time.perf_counter() - t0
    return _record(3, "Sturm oracle agreement", not mism, dt, 5,
                   f"{100 - len(mism)}/100 counts agree")


# --- 4 ------------------------------------------------------------------------------

EXPECTED_SURVIVORS = {"III": ["D12", "D13"], "IV-x4": ["D20", "D21", "D24"]}


def criterion_4() -> bool:
    paper = load_paper_polygons()
    parts = []
    ok = True
    slowest = 0.0
    for case in ("II", "III", "IV-x4", "IV-x2y2", "THM2"):
        t0 = time.perf_counter()
        rep = audit_case(case, {k: paper[k] for k in CASE_PAPER_IDS[case]}, CASES[case])
        dt = time.perf_counter() - t0
        slowest = max(slowest, dt)
        good = rep.passed and dt < 60
        if case in EXPECTED_SURVIVORS:
            good = good and rep.survivors == EXPECTED_SURVIVORS[case]
        ok = ok and good
        parts.append(f"{case} {'ok' if good else 'FAILED'} "
                     f"(matched {len(rep.matched)}/{len(CASE_PAPER_IDS[case])}, "
                     f"{len(rep.undismissed)} undismissed extras, {dt:.2f} s)")
    return _record(4, "Case audits", ok, slowest, 60, "; ".join(parts))


# --- 5, 6 -----------------------------------------------------------------------------


def criterion_5() -> bool:
    t0 = time.perf_counter()
    r = analyze_pair(P("x+(y+x^2)^2"), P("y+x^2"))
    dt = time.perf_counter() - t0
    certs = r.verdict.certificates
    ok = (r.verdict.tag == "TypicalCertified" and certs[0].kind == "InfTypical"
          and certs[0].payload["candidate"] == {"component": "g"})
    return _record(5, "End-to-end positive", ok, dt, 1,
                   f"{r.verdict.tag} via {certs[0].kind if certs else None}")


def criterion_6() -> bool:
    f, g = P("x^2*y-x"), P("x*y^2-y")
    t0 = time.perf_counter()
    r = analyze_pair(f, g)
    dt = time.perf_counter() - t0
    pay = r.verdict.certificates[0].payload if r.verdict.certificates else {}
    J = jacobian_det(f, g)
    ok = (r.verdict.tag == "NotAJacobianPair"
          and pay.get("positive") == ["0", "0"] and pay.get("negative") == ["1", "1/2"]
          and J(0, 0) == 1 and J(1, Fraction(1, 2)) == Fraction(-1, 4))
    return _record(6, "End-to-end negative", ok, dt, 1,
                   f"{r.verdict.tag}, values {pay.get('values')}")


# --- 7 --------------------------------------------------------------------------------


def criterion_7() -> bool:
    t0 = time.perf_counter()
    nonconst = refuted = 0
    tags: dict[str, int] = {}
    for seed in range(50):
        f, g = generate_tame_pair(seed, steps=1 + seed % 4, coeff_bound=3)
        J = jacobian_det(f, g)
        nonconst += not (J.is_constant() and not J.is_zero())
        v = certify_typical(f, g)
        tags[v.tag] = tags.get(v.tag, 0) + 1
        refuted += v.tag == "NotAJacobianPair"
    dt = time.perf_counter() - t0
    summary = ", ".join(f"{k} {n}" for k, n in sorted(tags.items()))
    return _record(7, "Tame-pair soundness fuzz", nonconst == 0 and refuted == 0, dt, 30,
                   f"50 pairs, {nonconst} non-constant Jacobians, {summary}")


# --- 8 --------------------------------------------------------------------------------


def _hull_poly(points):
    return Poly2({m: 1 for m in LatticePolygon.hull_of(points).lattice_points()})


def _random_form(rng: random.Random) -> Poly2:
    x, y = Poly2.x(), Poly2.y()
    out = Poly2.const(Fraction(rng.choice([-3, -1, 1, 2]), rng.randint(1, 3)))
    target = rng.randint(1, 5)
    while total_degree(out) < target:
        room = target - total_degree(out)
        kind = rng.random()
        if kind < 0.5:
            lin = x * rng.randint(-3, 3) + y * rng.randint(-3, 3)
            if lin.is_zero():
                continue
            out = out * lin ** min(rng.randint(1, 3), room)
        elif room >= 2:
            q = x * x * rng.randint(-2, 2) + x * y * rng.randint(-3, 3) + y * y * rng.randint(-2, 2)
            if q.is_zero():
                continue
            out = out * q ** min(rng.randint(1, 2), room // 2)
        else:
            out = out * (x if rng.random() < 0.5 else y)
    return out


def criterion_8() -> bool:
    t0 = time.perf_counter()
    checks = []
    checks.append(hrc_excludes(_hull_poly([(1, 0), (5, 0), (2, 2)])) is not None)
    checks.append(hrc_excludes(_hull_poly([(1, 0), (5, 0), (2, 1)])) is not None)
    checks.append(hrc_excludes(_hull_poly([(0, 0), (2, 0), (0, 2)])) is None)
    c = vertex_parity_sign_change(P("x^2*y^3+x+y"), P("x^3*y^3+x"), (5, 6))
    checks.append(c is not None and c.payload["alpha"] == [2, 3] and c.payload["beta"] == [3, 3])
    checks.append(vertex_parity_sign_change(P("x+y^2"), P("y+x^2"), (2, -1)) is None)
    rng = random.Random(8)
    deg_one = 0
    for _ in range(500):
        h = multiple_factor_product(_random_form(rng))
        deg_one += total_degree(h) == 1
    checks.append(deg_one == 0)
    dt = time.perf_counter() - t0
    return _record(8, "Unit criteria", all(checks), dt, None,
                   f"{sum(checks)}/{len(checks)} checks, deg h = 1 in {deg_one}/500 forms")


# --- 9 --------------------------------------------------------------------------------


def criterion_9() -> bool:
    rng = random.Random(9)
    t0 = time.perf_counter()
    worst = 0.0
    h = 1e-5
    n = 0
    while n < 20:
        p = random_poly(rng, 5, terms=8, denominators=True)
        if p.is_constant():
            continue
        x0, y0 = rng.uniform(-2, 2), rng.uniform(-2, 2)
        for var, (dx, dy) in (("x", (h, 0)), ("y", (0, h))):
            exact = eval_float(partial_derivative(p, var), x0, y0)
            num = (eval_float(p, x0 + dx, y0 + dy) - eval_float(p, x0 - dx, y0 - dy)) / (2 * h)
            worst = max(worst, abs(num - exact) / abs(exact))
        n += 1
    dt = time.perf_counter() - t0
    return _record(9, "Derivative finite differences", worst <= 1e-6, dt, None,
                   f"worst relative error {worst:.2e}")


CRITERIA = [criterion_1, criterion_2, criterion_3, criterion_4, criterion_5, criterion_6,
            criterion_7, criterion_8, criterion_9]


@pytest.mark.parametrize("criterion", CRITERIA, ids=[f"criterion_{k}" for k in range(1, 10)])
def test_acceptance(criterion):
    assert criterion(), RESULTS[-1]


if __name__ == "__main__":
    outcomes = [c() for c in CRITERIA]
    sys.exit(0 if all(outcomes) else 1)
