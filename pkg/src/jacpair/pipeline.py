"""Pair normalisation, leading-form analysis, the analysis driver and tame pairs."""

from __future__ import annotations

import random
from math import isqrt
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .certify import (Certificate, CertifyConfig, Verdict, _edge_table, certify_typical,
                      jacobian_sign_status, vertex_parity_sign_change)
from .newton import Direction, face, newton_polygon
from .polyarith import (Poly2, form_factor_structure, form_gcd, format_poly, jacobian_det,
                        leading_form, linear_change, multiple_factor_product,
                        rational_roots, split_form, substitute_shear, total_degree)

__all__ = [
    "NormalizationError", "NormalizedPair", "HClassification", "AnalysisReport",
    "St6Result", "normalize_pair", "replay", "leading_gcd_and_h", "analyze_pair",
    "theorem_st6_check", "generate_tame_pair", "MU_SEARCH",
]

MU_SEARCH = tuple(Fraction(m) for m in ("0", "1", "-1", "2", "-2", "1/2", "-1/2", "3"))


class NormalizationError(ValueError):
    pass


@dataclass
class NormalizedPair:
    f: Poly2
    g: Poly2
    applied: list[dict] = field(default_factory=list)

    def as_json(self) -> dict:
        return {"f": format_poly(self.f), "g": format_poly(self.g), "applied": self.applied}


def _apply(f: Poly2, g: Poly2, step: dict) -> tuple[Poly2, Poly2]:
    op, p = step["op"], step["params"]
    if op == "shift":
        return f - Fraction(p["f"]), g - Fraction(p["g"])
    if op == "pencil":
        mu = Fraction(p["mu"])
        if p["target"] == "f":
            return f + g * mu, g
        return f, g + f * mu
    if op == "linear":
        M = [[Fraction(c) for c in row] for row in p["matrix"]]
        return linear_change(f, M), linear_change(g, M)
    if op == "shear":
        b, k, axis = Fraction(p["b"]), int(p["k"]), p.get("axis", "y")
        return substitute_shear(f, b, k, axis), substitute_shear(g, b, k, axis)
    raise ValueError(f"unknown transformation {op!r}")


def replay(f: Poly2, g: Poly2, applied: list[dict]) -> tuple[Poly2, Poly2]:
    for step in applied:
        f, g = _apply(f, g, step)
    return f, g


def _conditions(f: Poly2, g: Poly2) -> bool:
    s = f.support()
    if f.constant_term() != 0 or (1, 0) not in s or (0, 1) not in s:
        return False
    if g.is_zero():
        return True
    pf = newton_polygon(f)
    return all(pf.contains(v) for v in newton_polygon(g).vertices)


def normalize_pair(f: Poly2, g: Poly2, mus=MU_SEARCH, *,
                   check_jacobian: bool = True) -> NormalizedPair:
    """Strip constants and pick ``f + mu1*g`` so that x, y lie in supp(f)
    and the Newton polygon of ``g`` sits inside that of ``f``."""
    applied = [{"op": "shift", "params": {"f": str(f.constant_term()),
                                          "g": str(g.constant_term())}}]
    f, g = _apply(f, g, applied[0])
    if check_jacobian and jacobian_det(f, g).constant_term() == 0:
        raise NormalizationError("Jacobian vanishes at the origin")
    for mu in mus:
        ft = f + g * mu
        if _conditions(ft, g):
            if mu:
                applied.append({"op": "pencil", "params": {"target": "f", "mu": str(mu)}})
            return NormalizedPair(ft, g, applied)
    raise NormalizationError("no mu in the search set satisfies the support conditions")


# --- leading forms ------------------------------------------------------------

H_CASES = ("DegH0", "DegH2", "DegH3", "DegH4_x4", "DegH4_x2y2", "DegH4_irredsq", "DegH5",
           "NonRationalFactor")


@dataclass
class HClassification:
    D: Poly2
    h: Poly2
    case: str

    def as_json(self) -> dict:
        return {"D": format_poly(self.D), "h": format_poly(self.h), "case": self.case}


def _is_square(q: Fraction) -> bool:
    if q < 0:
        return False
    num, den = q.numerator, q.denominator
    return isqrt(num) ** 2 == num and isqrt(den) ** 2 == den


def _classify_deg4(h: Poly2) -> str:
    groups = form_factor_structure(h)
    if len(groups) == 1 and groups[0][1] == 4:
        return "DegH4_x4"
    linear_sq = sum(1 for fac, m in groups if m == 2 and total_degree(fac) == 1)
    quads = [fac for fac, m in groups if m == 2 and total_degree(fac) == 2]
    if linear_sq == 2:
        return "DegH4_x2y2"
    if len(quads) == 1:
        _, _, _, phi = split_form(quads[0])
        c0, c1, c2 = phi.coeffs
        disc = c1 * c1 - 4 * c0 * c2
        if disc < 0:
            return "DegH4_irredsq"
        return "DegH4_x2y2" if _is_square(disc) else "NonRationalFactor"
    raise AssertionError(f"unexpected factor structure of {h}")


def leading_gcd_and_h(f: Poly2, g: Poly2) -> HClassification:
    if f.is_zero() or g.is_zero():
        raise ValueError("zero leading form")
    D = form_gcd(leading_form(f), leading_form(g))
    h = multiple_factor_product(D)
    d = total_degree(h)
    if d == 4:
        case = _classify_deg4(h)
    elif d in (0, 2, 3, 5):
        case = f"DegH{d}"
    else:
        raise ValueError(f"multiple factor product of degree {d}")
    return HClassification(D, h, case)


# --- degree five and six -------------------------------------------------------

@dataclass
class St6Result:
    certificate: Optional[Certificate]
    explanation: str
    k: Optional[int] = None
    l: Optional[int] = None
    matrix: Optional[list] = None


def _x_factor_change(fp: Poly2) -> Optional[list[list[Fraction]]]:
    """A rational linear change after which x divides the form ``fp``."""
    _, a, b, phi = split_form(fp)
    if a:
        return [[Fraction(1), Fraction(0)], [Fraction(0), Fraction(1)]]
    if b:
        return [[Fraction(0), Fraction(1)], [Fraction(1), Fraction(0)]]
    roots = rational_roots(phi)
    if not roots:
        return None
    r = roots[0]
    # y - r*x becomes x under x -> y, y -> x + r*y
    return [[Fraction(0), Fraction(1)], [Fraction(1), r]]


def theorem_st6_check(f: Poly2, g: Poly2, max_n: int = 200) -> St6Result:
    if f.is_zero() or g.is_zero() or total_degree(f) != 5 or total_degree(g) != 6:
        return St6Result(None, "needs deg f = 5 and deg g = 6")
    M = _x_factor_change(leading_form(f))
    if M is None:
        return St6Result(None, "leading form of f has no rational linear factor")
    fl, gl = linear_change(f, M), linear_change(g, M)
    _, k, _, _ = split_form(leading_form(fl))
    mjson = [[str(c) for c in row] for row in M]
    if k == 5:
        return St6Result(None, "k=5: leading form is c*x^5, covered by the x^5 theorem", k,
                         matrix=mjson)
    l = min(i for (i, j) in gl.support() if i + j == 6)
    alpha, beta = (k, 5 - k), (l, 6 - l)
    pf, pg = newton_polygon(fl), newton_polygon(gl)
    for n in range(5, max_n + 1):
        xi = Direction(n, n + 1)
        fa, fb = face(pf, xi), face(pg, xi)
        if fa.points == (alpha,) and fb.points == (beta,):
            cert = vertex_parity_sign_change(fl, gl, xi, polygons=(pf, pg))
            if cert is None:
                break
            cert.payload["linear"] = mjson
            cert.payload["k"], cert.payload["l"] = k, l
            return St6Result(cert, f"vertex parity with xi={tuple(xi)}", k, l, mjson)
    return St6Result(None, "no xi=(n,n+1) isolates both vertices", k, l, mjson)


# --- driver ------------------------------------------------------------------------

@dataclass
class AnalysisReport:
    verdict: Verdict
    report: dict

    def as_json(self) -> dict:
        return {**self.verdict.as_json(), "report": self.report}


def _trusted_deg4(f: Poly2, g: Poly2) -> Certificate:
    return Certificate("TrustedFact", {
        "fact": "deg<=4", "source": "Jacobian pairs with a component of degree <= 4 "
        "are typical (Braun, Orefice-Okamoto)",
        "degrees": [total_degree(f), total_degree(g)]})


def analyze_pair(f: Poly2, g: Poly2, config: CertifyConfig = CertifyConfig()) -> AnalysisReport:
    report: dict = {"f": format_poly(f), "g": format_poly(g)}
    verdict = certify_typical(f, g, config)
    trace = list(verdict.trace)
    J = jacobian_det(f, g)
    report["jacobian"] = format_poly(J)
    report["sign_status"] = jacobian_sign_status(J, config.sampling).as_json()
    nonconst = not (f.is_constant() or g.is_constant())
    if nonconst:
        for name, p in (("f", f), ("g", g)):
            report[f"newton_{name}"] = newton_polygon(p).to_json()
            report[f"edges_{name}"] = _edge_table(p)
    try:
        npair = normalize_pair(f, g)
        report["normalized"] = npair.as_json()
        report["h"] = leading_gcd_and_h(npair.f, npair.g).as_json()
        report["newton_normalized_f"] = newton_polygon(npair.f).to_json()
        report["edges_normalized_f"] = _edge_table(npair.f)
    except (ValueError, AssertionError) as exc:
        trace.append(f"normalization: {exc}")
        npair = None
    if verdict.tag == "Inconclusive" and nonconst:
        verdict = _fallbacks(f, g, J, npair, trace) or Verdict("Inconclusive", [], trace)
    else:
        verdict = Verdict(verdict.tag, verdict.certificates, trace)
    report["config"] = config.as_json()
    return AnalysisReport(verdict, report)


def _fallbacks(f: Poly2, g: Poly2, J: Poly2, npair, trace: list[str]) -> Optional[Verdict]:
    const_j = J.is_constant() and not J.is_zero()
    df, dg = total_degree(f), total_degree(g)
    if const_j and min(df, dg) <= 4:
        trace.append("trusted: a component has degree <= 4")
        return Verdict("TypicalCertified", [_trusted_deg4(f, g)], trace)
    for a, b, swapped in ((f, g, False), (g, f, True)):
        if total_degree(a) == 5 and total_degree(b) == 6:
            res = theorem_st6_check(a, b)
            trace.append(f"degree (5,6) check: {res.explanation}")
            if res.certificate is not None:
                res.certificate.payload["swapped"] = swapped
                return Verdict("NotAJacobianPair", [res.certificate], trace)
    if const_j and df == dg:
        fp, gp = leading_form(f), leading_form(g)
        m = max(fp.support())
        c = gp.coeff(*m) / fp.coeff(*m)
        if c and gp == fp * c and total_degree(g - f * c) <= 4:
            trace.append(f"trusted: g - ({c})*f has degree <= 4")
            return Verdict("TypicalCertified", [Certificate("TrustedFact", {
                "fact": "deg<=4 after pencil", "c": str(c),
                "source": "Jacobian pairs with a component of degree <= 4 are typical "
                          "(Braun, Orefice-Okamoto)"})], trace)
    return None


# --- tame pairs ------------------------------------------------------------------------

def _rand_uni(rng: random.Random, bound: int, degree: int, var: Poly2) -> Poly2:
    out = Poly2.zero()
    for k in range(1, degree + 1):
        c = rng.randint(-bound, bound)
        if k == degree and c == 0:
            c = rng.choice([-1, 1]) * rng.randint(1, max(bound, 1))
        out = out + var ** k * c
    return out


def generate_tame_pair(seed: int, steps: int = 4, coeff_bound: int = 3,
                       max_degree: int = 2) -> tuple[Poly2, Poly2]:
    """Random composition of triangular maps and a rational linear map.

    The Jacobian is a nonzero constant by construction and is checked exactly.
    """
    if not 0 <= steps <= 4:
        raise ValueError("steps must lie in [0, 4]")
    rng = random.Random(seed)
    b = max(coeff_bound, 1)
    while True:
        M = [[Fraction(rng.randint(-b, b), rng.randint(1, 2)) for _ in range(2)]
             for _ in range(2)]
        if M[0][0] * M[1][1] - M[0][1] * M[1][0] != 0:
            break
    x, y = Poly2.x(), Poly2.y()
    f = x * M[0][0] + y * M[0][1] + rng.randint(-b, b)
    g = x * M[1][0] + y * M[1][1] + rng.randint(-b, b)
    for _ in range(steps):
        deg = rng.randint(2, max(2, max_degree))
        if rng.random() < 0.5:
            f = f + _compose_uni_poly(_rand_uni(rng, b, deg, Poly2.x()), g)
        else:
            g = g + _compose_uni_poly(_rand_uni(rng, b, deg, Poly2.x()), f)
    J = jacobian_det(f, g)
    assert J.is_constant() and not J.is_zero(), f"Jacobian {J} is not a nonzero constant"
    return f, g


def _compose_uni_poly(p: Poly2, t: Poly2) -> Poly2:
    """``p(t)`` for ``p`` a polynomial in x alone."""
    out = Poly2.zero()
    for (i, _), c in p.terms.items():
        out = out + t ** i * c
    return out
