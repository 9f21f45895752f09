"""Sign-change exclusions and typicality certificates for polynomial pairs.

Every certificate carries exact data and has a verifier in
:func:`verify_certificate` that re-checks it from the pair alone.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Optional, Sequence

from .edgecheck import is_degenerate_on_edge
from .newton import (Direction, edge_interior_lattice_points, face, face_restriction,
                     is_convenient, newton_polygon, outer_edges, primitive, support_value)
from .polyarith import (Poly2, RationalInterval, UniPoly, format_poly, format_unipoly,
                        isolate_real_roots, jacobian_det, leading_form, linear_change,
                        partial_derivative,
                        rational_roots, refine_root, resultant, split_form,
                        squarefree_decomposition, squarefree_part, sturm_count_real_roots,
                        to_unipoly, total_degree, transpose)

__all__ = [
    "SamplingConfig", "CertifyConfig", "SignStatus", "Certificate", "Verdict",
    "CriticalPointResult", "InfinityPoint", "CERTIFICATE_KINDS",
    "jacobian_sign_status", "znak0_sign_change", "znak_sign_change",
    "vertex_parity_sign_change", "hrc_excludes", "no_critical_points", "inf_typical",
    "infinity_real_points", "one_branch_at_infinity", "certify_typical", "face_witnesses",
    "default_xi_set", "verify_certificate", "verify_critical_evidence", "interval_eval",
]

CERTIFICATE_KINDS = (
    "Znak0", "Znak", "VertexParity", "Hrc", "InfTypical", "OneRealBranchAtInfinity",
    "CriticalPoint", "DirectWitness", "TrustedFact",
)

Point = tuple[Fraction, Fraction]


@dataclass(frozen=True)
class SamplingConfig:
    grid_size: int = 41
    grid_bound: int = 10
    random_points: int = 200
    max_denominator: int = 16
    seed: int = 0x1AC

    def grid(self) -> list[Point]:
        n = self.grid_size
        step = Fraction(2 * self.grid_bound, n - 1) if n > 1 else Fraction(0)
        vals = [-self.grid_bound + k * step for k in range(n)]
        pts = [(x, y) for x in vals for y in vals]
        # nearest the origin first, ties toward larger x then larger y
        pts.sort(key=lambda p: (p[0] * p[0] + p[1] * p[1], -p[0], -p[1]))
        return pts

    def random(self) -> list[Point]:
        rng = random.Random(self.seed)
        out = []
        b = self.grid_bound
        for _ in range(self.random_points):
            d = rng.randint(1, self.max_denominator)
            out.append((Fraction(rng.randint(-b * d, b * d), d),
                        Fraction(rng.randint(-b * d, b * d), d)))
        return out


@dataclass(frozen=True)
class CertifyConfig:
    sampling: SamplingConfig = field(default_factory=SamplingConfig)
    mu_list: tuple[Fraction, ...] = tuple(Fraction(m) for m in
                                          ("0", "1", "-1", "2", "-2", "1/2", "-1/2", "3"))
    xi_bound: int = 12
    refine_depth: int = 64

    def as_json(self) -> dict:
        s = self.sampling
        return {
            "grid_size": s.grid_size, "grid_bound": s.grid_bound,
            "random_points": s.random_points, "max_denominator": s.max_denominator,
            "seed": s.seed, "mu_list": [str(m) for m in self.mu_list],
            "xi_bound": self.xi_bound, "refine_depth": self.refine_depth,
        }


def _pt(p) -> list[str]:
    return [str(p[0]), str(p[1])]


def _unpt(p) -> Point:
    return Fraction(p[0]), Fraction(p[1])


# --- sign status -------------------------------------------------------------

@dataclass(frozen=True)
class SignStatus:
    """Tag is one of PositiveConstant, NegativeConstant, IdenticallyZero,
    SignChanges, Vanishes, UndecidedNonconstant."""

    tag: str
    positive: Optional[Point] = None
    negative: Optional[Point] = None
    zero: Optional[Point] = None
    samples: int = 0

    def as_json(self) -> dict:
        out = {"tag": self.tag}
        for name in ("positive", "negative", "zero"):
            p = getattr(self, name)
            if p is not None:
                out[name] = _pt(p)
        if self.samples:
            out["samples"] = self.samples
        return out


def jacobian_sign_status(J: Poly2, sampling: SamplingConfig = SamplingConfig()) -> SignStatus:
    if J.is_zero():
        return SignStatus("IdenticallyZero")
    if J.is_constant():
        c = J.constant_term()
        return SignStatus("PositiveConstant" if c > 0 else "NegativeConstant")
    pos = neg = zero = None
    n = 0
    for pts in (sampling.grid(), sampling.random()):
        for p in pts:
            v = J(*p)
            n += 1
            if v > 0 and pos is None:
                pos = p
            elif v < 0 and neg is None:
                neg = p
            elif v == 0 and zero is None:
                zero = p
            if pos is not None and neg is not None:
                return SignStatus("SignChanges", pos, neg, samples=n)
    if zero is not None:
        return SignStatus("Vanishes", pos, neg, zero, samples=n)
    return SignStatus("UndecidedNonconstant", pos, neg, samples=n)


# --- certificates ------------------------------------------------------------

@dataclass
class Certificate:
    kind: str
    payload: dict

    def __post_init__(self):
        if self.kind not in CERTIFICATE_KINDS:
            raise ValueError(f"unknown certificate kind {self.kind!r}")

    def as_json(self) -> dict:
        return {"kind": self.kind, "payload": self.payload}


@dataclass
class Verdict:
    tag: str
    certificates: list[Certificate] = field(default_factory=list)
    trace: list[str] = field(default_factory=list)

    def __post_init__(self):
        if self.tag not in ("TypicalCertified", "NotAJacobianPair", "Inconclusive"):
            raise ValueError(f"unknown verdict {self.tag!r}")
        if self.tag != "Inconclusive" and not self.certificates:
            raise ValueError(f"{self.tag} needs a certificate")

    def as_json(self) -> dict:
        return {"verdict": self.tag,
                "certificates": [c.as_json() for c in self.certificates],
                "trace": list(self.trace)}


def _sign_points_univariate(P: UniPoly) -> tuple[Optional[Fraction], Optional[Fraction]]:
    """Rationals where ``P`` is positive and negative, if any."""
    if P.is_zero():
        return None, None
    cands = [Fraction(0)]
    ivs = isolate_real_roots(P) if not P.is_constant() else []
    if ivs:
        cands += [ivs[0].lo - 1, ivs[-1].hi + 1]
        cands += [iv.lo for iv in ivs] + [iv.hi for iv in ivs]
    pos = neg = None
    for t in cands:
        v = P(t)
        if v > 0 and pos is None:
            pos = t
        if v < 0 and neg is None:
            neg = t
    return pos, neg


_FACE_SAMPLES = [Fraction(s) * Fraction(v) for v in ("1", "2", "1/2", "3", "1/3", "3/2", "2/3")
                 for s in (1, -1)]


def face_witnesses(J: Poly2, xi: Sequence[int], max_log_scale: int = 64) -> Optional[dict]:
    """Exact points of opposite sign of ``J`` pushed out along ``xi``.

    Signs of the face polynomial ``J^xi`` at small sample points persist for
    ``J`` at ``(lam^xi1 x, lam^xi2 y)`` once ``lam`` is large.
    """
    if J.is_zero() or J.is_constant():
        return None
    Jxi = face_restriction(J, xi)
    pos = neg = None
    for x in _FACE_SAMPLES:
        for y in _FACE_SAMPLES:
            v = Jxi(x, y)
            if v > 0 and pos is None:
                pos = (x, y)
            if v < 0 and neg is None:
                neg = (x, y)
    if pos is None or neg is None:
        return None
    out = {}
    for name, p, want in (("positive", pos, 1), ("negative", neg, -1)):
        for k in range(max_log_scale + 1):
            lam = Fraction(2) ** k
            q = (p[0] * lam ** xi[0], p[1] * lam ** xi[1])
            v = J(*q)
            if (v > 0) - (v < 0) == want:
                out[name] = _pt(q)
                break
        else:
            return None
    return out


def _witnesses_ok(J: Poly2, w: Optional[dict]) -> bool:
    if w is None:
        return True
    return J(*_unpt(w["positive"])) > 0 and J(*_unpt(w["negative"])) < 0


# --- lemma exclusions ----------------------------------------------------------

def _xy_form(p: Poly2, shift: tuple[int, int]) -> Optional[UniPoly]:
    """``P`` with ``p = x^a y^b P(xy)`` for ``shift = (a, b)``, else None."""
    a, b = shift
    coeffs = {}
    for (i, j), c in p.terms.items():
        if i - a != j - b or i < a:
            return None
        coeffs[i - a] = c
    return UniPoly([coeffs.get(k, 0) for k in range(max(coeffs) + 1)])


def znak0_sign_change(f: Poly2, g: Poly2) -> Optional[Certificate]:
    if f.is_zero() or g.is_zero():
        return None
    F = _xy_form(f, (1, 0))
    G = _xy_form(g, (0, 1))
    if F is None or G is None:
        return None
    FG = F * G
    if FG.is_constant():
        return None
    k = FG.trailing_zeros()
    core = FG.shift_down(k)
    if core.is_constant() or sturm_count_real_roots(core) == 0:
        return None
    iv = isolate_real_roots(core)[0]
    H = UniPoly.t() * FG
    tp, tn = _sign_points_univariate(H.derivative())
    payload = {
        "F": format_unipoly(F), "G": format_unipoly(G), "H": format_unipoly(H),
        "F_coeffs": [str(c) for c in F.coeffs], "G_coeffs": [str(c) for c in G.coeffs],
        "root_interval": iv.as_json(),
    }
    if tp is not None and tn is not None:
        payload["witnesses"] = {"positive": _pt((tp, 1)), "negative": _pt((tn, 1))}
    return Certificate("Znak0", payload)


_ZNAK_XI = Direction(-1, 1)


def _znak_form(f: Poly2) -> Optional[tuple[Fraction, Fraction]]:
    if f.is_zero():
        return None
    r = face_restriction(f, _ZNAK_XI)
    if r.support() != {(2, 3), (1, 2), (0, 1)}:
        return None
    a = r.coeff(2, 3)
    b = -r.coeff(1, 2) / (2 * a)
    if b == 0 or r.coeff(0, 1) != a * b * b:
        return None
    return a, b


def znak_sign_change(f: Poly2, g: Poly2) -> Optional[Certificate]:
    ab = _znak_form(f)
    if ab is None or g.is_zero():
        return None
    if support_value(newton_polygon(g), _ZNAK_XI) != -1:
        return None
    a, b = ab
    payload = {"xi": list(_ZNAK_XI), "a": str(a), "b": str(b)}
    w = face_witnesses(jacobian_det(f, g), _ZNAK_XI)
    if w is not None:
        payload["witnesses"] = w
    return Certificate("Znak", payload)


def _vertex_parity_data(f: Poly2, g: Poly2, xi: Sequence[int], polys=None):
    if f.is_zero() or g.is_zero():
        return None
    pf, pg = polys or (newton_polygon(f), newton_polygon(g))
    fa = face(pf, xi)
    fb = face(pg, xi)
    if fa.is_edge or fb.is_edge:
        return None
    (alpha,), (beta,) = fa.points, fb.points
    if alpha[0] * beta[1] - alpha[1] * beta[0] == 0:
        return None
    s = (alpha[0] + beta[0], alpha[1] + beta[1])
    if s[0] % 2 and s[1] % 2:
        return None
    return alpha, beta


def vertex_parity_sign_change(f: Poly2, g: Poly2, xi: Sequence[int], *,
                              polygons=None) -> Optional[Certificate]:
    xi = Direction(*xi)
    if xi == (0, 0):
        raise ValueError("zero direction")
    data = _vertex_parity_data(f, g, xi, polygons)
    if data is None:
        return None
    alpha, beta = data
    payload = {"xi": list(xi), "alpha": list(alpha), "beta": list(beta)}
    w = face_witnesses(jacobian_det(f, g), xi)
    if w is not None:
        payload["witnesses"] = w
    return Certificate("VertexParity", payload)


def _hrc_edge(f: Poly2):
    poly = newton_polygon(f)
    if len(poly.vertices) < 2:
        return None
    for e in outer_edges(poly):
        pts = set(e.points)
        if (1, 0) not in pts:
            continue
        (a, b), = pts - {(1, 0)}
        if a > 1 and b > 0 and not edge_interior_lattice_points(e):
            return e
    return None


def hrc_excludes(f: Poly2, g: Optional[Poly2] = None, *, label: str = "f") -> Optional[Certificate]:
    """Outer edge from ``(1,0)`` to ``(a,b)``, ``a>1``, ``b>0``, lattice-point free.

    ``g`` is only used to attach sign witnesses.
    """
    if f.is_zero():
        raise ValueError("zero polynomial")
    e = _hrc_edge(f)
    if e is None:
        return None
    payload = {"polynomial": label, "edge": [list(p) for p in e.points],
               "xi": list(e.direction)}
    if g is not None:
        # witnesses refer to Jac(f, g) in argument order
        w = face_witnesses(jacobian_det(f, g), e.direction)
        if w is not None:
            payload["witnesses"] = w
    return Certificate("Hrc", payload)


# --- critical points ----------------------------------------------------------

def _ipow(lo: Fraction, hi: Fraction, k: int) -> tuple[Fraction, Fraction]:
    if k == 0:
        return Fraction(1), Fraction(1)
    a, b = lo ** k, hi ** k
    if k % 2:
        return a, b
    if lo <= 0 <= hi:
        return Fraction(0), max(a, b)
    return min(a, b), max(a, b)


def interval_eval(p: Poly2, X: tuple, Y: tuple) -> tuple[Fraction, Fraction]:
    """Enclosure of ``p`` over the box ``X x Y`` by naive interval arithmetic."""
    lo = hi = Fraction(0)
    xp: dict[int, tuple] = {}
    yp: dict[int, tuple] = {}
    for (i, j), c in p.terms.items():
        if i not in xp:
            xp[i] = _ipow(X[0], X[1], i)
        if j not in yp:
            yp[j] = _ipow(Y[0], Y[1], j)
        a, b = xp[i]
        u, v = yp[j]
        prods = (a * u, a * v, b * u, b * v)
        m0, m1 = min(prods), max(prods)
        if c > 0:
            lo += c * m0
            hi += c * m1
        else:
            lo += c * m1
            hi += c * m0
    return lo, hi


@dataclass
class CriticalPointResult:
    decided: bool
    has_critical_point: Optional[bool]
    evidence: dict

    @property
    def none(self) -> bool:
        return self.decided and self.has_critical_point is False


def _excluded(p: Poly2, X, Y) -> bool:
    lo, hi = interval_eval(p, X, Y)
    return lo > 0 or hi < 0


def no_critical_points(f: Poly2, depth: int = 64) -> CriticalPointResult:
    """Semi-decide whether ``grad f`` has a real zero."""
    if f.is_zero():
        raise ValueError("zero polynomial")
    fx, fy = partial_derivative(f, "x"), partial_derivative(f, "y")
    for name, d in (("x", fx), ("y", fy)):
        if d.is_constant() and not d.is_zero():
            return CriticalPointResult(True, False, {"method": "constant_partial", "var": name})
    if fx.is_zero() and fy.is_zero():
        return CriticalPointResult(True, True, {"method": "constant", "point": ["0", "0"]})
    for name, d, other in (("x", fx, fy), ("y", fy, fx)):
        if d.is_zero():
            # f depends on one variable only
            var = "y" if name == "x" else "x"
            u = to_unipoly(other, var)
            n = sturm_count_real_roots(u)
            ev = {"method": "univariate", "var": var, "poly": format_poly(other), "count": n}
            if n:
                roots = rational_roots(u)
                if roots:
                    ev["point"] = _pt((0, roots[0]) if var == "y" else (roots[0], 0))
                else:
                    ev["interval"] = isolate_real_roots(u)[0].as_json()
            return CriticalPointResult(True, n > 0, ev)
    R = resultant(fx, fy, "y")
    S = resultant(fx, fy, "x")
    base = {"R": format_poly(R), "S": format_poly(S)}
    if R.is_zero() or S.is_zero():
        return CriticalPointResult(False, None, {"method": "common_factor", **base})
    Ru, Su = to_unipoly(R, "x"), to_unipoly(S, "y")
    nR = 0 if Ru.is_constant() else sturm_count_real_roots(Ru)
    nS = 0 if Su.is_constant() else sturm_count_real_roots(Su)
    if nR == 0 or nS == 0:
        return CriticalPointResult(True, False, {"method": "no_real_roots", **base,
                                                 "R_count": nR, "S_count": nS})
    for x0 in rational_roots(Ru):
        for y0 in rational_roots(Su):
            if fx(x0, y0) == 0 and fy(x0, y0) == 0:
                return CriticalPointResult(True, True, {"method": "rational_point", **base,
                                                        "point": _pt((x0, y0))})
    xs, ys = isolate_real_roots(Ru), isolate_real_roots(Su)
    sfR = squarefree_part(Ru)
    sfS = squarefree_part(Su)
    boxes = []
    for i, X in enumerate(xs):
        for j, Y in enumerate(ys):
            bx, by = X, Y
            for _ in range(depth + 1):
                which = ("fx" if _excluded(fx, (bx.lo, bx.hi), (by.lo, by.hi)) else
                         "fy" if _excluded(fy, (bx.lo, bx.hi), (by.lo, by.hi)) else None)
                if which:
                    boxes.append({"i": i, "j": j, "x": bx.as_json(), "y": by.as_json(),
                                  "excluded_by": which})
                    break
                if bx.width == 0 and by.width == 0:
                    break
                bx = refine_root(sfR, bx) if bx.width else bx
                by = refine_root(sfS, by) if by.width else by
            else:
                which = None
            if not which:
                return CriticalPointResult(False, None, {
                    "method": "box_exclusion", **base, "stuck_box": {
                        "x": bx.as_json(), "y": by.as_json()}})
    return CriticalPointResult(True, False, {
        "method": "box_exclusion", **base,
        "x_intervals": [iv.as_json() for iv in xs], "y_intervals": [iv.as_json() for iv in ys],
        "boxes": boxes})


def verify_critical_evidence(f: Poly2, ev: dict, partner: Optional[Poly2] = None) -> bool:
    """Re-check a decided-none critical point result from its evidence.

    The ``jacobian`` method needs ``partner`` with ``Jac(f, partner)`` a
    nonzero constant.
    """
    fx, fy = partial_derivative(f, "x"), partial_derivative(f, "y")
    m = ev.get("method")
    if m == "jacobian":
        if partner is None:
            return False
        J = jacobian_det(f, partner)
        return J.is_constant() and not J.is_zero()
    if m == "constant_partial":
        d = fx if ev["var"] == "x" else fy
        return d.is_constant() and not d.is_zero()
    if m == "univariate":
        var = ev["var"]
        d, other = (fx, fy) if var == "y" else (fy, fx)
        return d.is_zero() and sturm_count_real_roots(to_unipoly(other, var)) == 0
    R = resultant(fx, fy, "y")
    S = resultant(fx, fy, "x")
    if format_poly(R) != ev["R"] or format_poly(S) != ev["S"] or R.is_zero() or S.is_zero():
        return False
    Ru, Su = to_unipoly(R, "x"), to_unipoly(S, "y")
    if m == "no_real_roots":
        return any(u.is_constant() or sturm_count_real_roots(u) == 0 for u in (Ru, Su))
    if m != "box_exclusion" or "boxes" not in ev:
        return False
    xs = [RationalInterval(*map(Fraction, iv)) for iv in ev["x_intervals"]]
    ys = [RationalInterval(*map(Fraction, iv)) for iv in ev["y_intervals"]]
    for u, ivs in ((Ru, xs), (Su, ys)):
        if sum(sturm_count_real_roots(u, iv) for iv in ivs) != sturm_count_real_roots(u):
            return False
        if any(sturm_count_real_roots(u, iv) != 1 for iv in ivs):
            return False
    covered = set()
    for b in ev["boxes"]:
        i, j = b["i"], b["j"]
        X = RationalInterval(*map(Fraction, b["x"]))
        Y = RationalInterval(*map(Fraction, b["y"]))
        if not (xs[i].lo <= X.lo and X.hi <= xs[i].hi and ys[j].lo <= Y.lo and Y.hi <= ys[j].hi):
            return False
        if sturm_count_real_roots(Ru, X) != 1 or sturm_count_real_roots(Su, Y) != 1:
            return False
        d = fx if b["excluded_by"] == "fx" else fy
        if not _excluded(d, (X.lo, X.hi), (Y.lo, Y.hi)):
            return False
        covered.add((i, j))
    return covered == {(i, j) for i in range(len(xs)) for j in range(len(ys))}


# --- typicality ----------------------------------------------------------------

def _edge_table(f: Poly2) -> list[dict]:
    rows = []
    poly = newton_polygon(f)
    if len(poly.vertices) == 1:
        return rows
    for e in outer_edges(poly):
        d = is_degenerate_on_edge(f, e)
        rows.append({"edge": [list(p) for p in e.points], "xi": list(e.direction),
                     "F": format_unipoly(d.reduction.uni, "s"), "degenerate": d.degenerate,
                     "witness": format_unipoly(d.witness, "s") if d.witness else None,
                     "interior_points": len(edge_interior_lattice_points(e))})
    return rows


def inf_typical(f: Poly2, depth: int = 64, *, label: Optional[dict] = None,
                critical: Optional[CriticalPointResult] = None) -> Optional[Certificate]:
    """Convenient, critical-point free and non-degenerate on every outer edge.

    ``critical`` may supply an already decided critical point result.
    """
    if f.is_constant():
        raise ValueError("constant polynomial")
    if not is_convenient(f):
        return None
    table = _edge_table(f)
    if any(row["degenerate"] for row in table):
        return None
    crit = critical or no_critical_points(f, depth)
    if not crit.none:
        return None
    payload = {"candidate": label or {"component": "f"}, "polynomial": format_poly(f),
               "edges": table, "critical_points": crit.evidence}
    return Certificate("InfTypical", payload)


@dataclass(frozen=True)
class InfinityPoint:
    """A real point at infinity: ``[1 : t : 0]`` with ``t`` isolated, or ``[0 : 1 : 0]``."""

    direction: str
    interval: Optional[RationalInterval]
    multiplicity: int

    def as_json(self) -> dict:
        out = {"direction": self.direction, "multiplicity": self.multiplicity}
        if self.interval is not None:
            out["t"] = self.interval.as_json()
        return out


def infinity_real_points(F: Poly2) -> list[InfinityPoint]:
    """Real roots of the form ``F`` on the line at infinity with multiplicities."""
    _, a, b, phi = split_form(F)
    out = []
    if b:
        out.append(InfinityPoint("t", RationalInterval(0, 0), b))
    for fac, m in squarefree_decomposition(phi):
        for iv in isolate_real_roots(fac):
            out.append(InfinityPoint("t", iv, m))
    if a:
        out.append(InfinityPoint("x=0", None, a))
    return out


def one_branch_at_infinity(f: Poly2, depth: int = 64, *, label: Optional[dict] = None,
                           critical: Optional[CriticalPointResult] = None
                           ) -> Optional[Certificate]:
    """Exactly one real point at infinity, of multiplicity one, and no critical points."""
    if f.is_constant():
        raise ValueError("constant polynomial")
    pts = infinity_real_points(leading_form(f))
    if len(pts) != 1 or pts[0].multiplicity != 1:
        return None
    crit = critical or no_critical_points(f, depth)
    if not crit.none:
        return None
    return Certificate("OneRealBranchAtInfinity", {
        "candidate": label or {"component": "f"}, "polynomial": format_poly(f),
        "points": [p.as_json() for p in pts], "critical_points": crit.evidence})


def default_xi_set(bound: int = 12) -> list[Direction]:
    seen = set()
    out = []
    for a in range(-bound, bound + 1):
        for b in range(-bound, bound + 1):
            if (a, b) != (0, 0):
                d = primitive((a, b))
                if d == (a, b) and d not in seen:
                    seen.add(d)
                    out.append(d)
    for n in range(1, bound + 1):
        d = Direction(n, n + 1)
        if d not in seen:
            seen.add(d)
            out.append(d)
    return out


def _candidates(f: Poly2, g: Poly2, mus: Iterable[Fraction]):
    yield {"component": "f"}, f
    yield {"component": "g"}, g
    for mu in mus:
        if mu == 0:
            continue
        yield {"component": "pencil", "mu": str(mu)}, f + g * mu


def _candidate_poly(f: Poly2, g: Poly2, label: dict) -> Poly2:
    comp = label["component"]
    if comp == "f":
        return f
    if comp == "g":
        return g
    return f + g * Fraction(label["mu"])


def exclusions(f: Poly2, g: Poly2, xis: Sequence[Direction]) -> Optional[Certificate]:
    """First lemma-based sign-change certificate, in fixed priority order."""
    for p, q, lab in ((f, g, "f"), (g, f, "g")):
        c = hrc_excludes(p, q, label=lab)
        if c:
            return c
    for p, q, lab in ((transpose(f), transpose(g), "transpose(f)"),
                      (transpose(g), transpose(f), "transpose(g)")):
        c = hrc_excludes(p, None, label=lab)
        if c:
            return c
    for p, q, swapped in ((f, g, False), (g, f, True)):
        c = znak0_sign_change(p, q)
        if c:
            c.payload["swapped"] = swapped
            return c
    for p, q, swapped in ((f, g, False), (g, f, True)):
        c = znak_sign_change(p, q)
        if c:
            c.payload["swapped"] = swapped
            return c
    polys = (newton_polygon(f), newton_polygon(g))
    for xi in xis:
        c = vertex_parity_sign_change(f, g, xi, polygons=polys)
        if c:
            return c
    return None


def certify_typical(f: Poly2, g: Poly2, config: CertifyConfig = CertifyConfig()) -> Verdict:
    trace: list[str] = []
    J = jacobian_det(f, g)
    st = jacobian_sign_status(J, config.sampling)
    trace.append(f"Jac = {format_poly(J)}; sign status {st.tag}")
    if st.tag == "IdenticallyZero":
        return Verdict("NotAJacobianPair",
                       [Certificate("DirectWitness", {"identically_zero": True})], trace)
    if st.tag == "SignChanges":
        return Verdict("NotAJacobianPair", [Certificate("DirectWitness", {
            "positive": _pt(st.positive), "negative": _pt(st.negative),
            "values": [str(J(*st.positive)), str(J(*st.negative))]})], trace)
    if st.tag == "Vanishes":
        return Verdict("NotAJacobianPair", [Certificate("DirectWitness", {
            "zero": _pt(st.zero)})], trace)
    if f.is_constant() or g.is_constant():
        trace.append("constant component")
        return Verdict("Inconclusive", [], trace)
    c = exclusions(f, g, default_xi_set(config.xi_bound))
    if c:
        trace.append(f"excluded by {c.kind}")
        return Verdict("NotAJacobianPair", [c], trace)
    trace.append("no lemma exclusion applies")
    if st.tag == "UndecidedNonconstant":
        for lab, p in (({"component": "f"}, f), ({"component": "g"}, g)):
            r = no_critical_points(p, config.refine_depth)
            if r.decided and r.has_critical_point and "point" in r.evidence:
                pt = r.evidence["point"]
                trace.append(f"critical point of {lab['component']} at {pt}")
                return Verdict("NotAJacobianPair", [Certificate("CriticalPoint", {
                    "candidate": lab, "point": pt})], trace)
        trace.append("Jacobian sign undecided on samples; typicality needs a constant Jacobian")
        return Verdict("Inconclusive", [], trace)
    cands = list(_candidates(f, g, config.mu_list))
    # a zero of grad p is a zero of Jac(p, g) or Jac(f, p)
    crit = CriticalPointResult(True, False, {"method": "jacobian", "J": format_poly(J)})
    for lab, p in cands:
        if p.is_constant():
            continue
        c = inf_typical(p, config.refine_depth, label=lab, critical=crit)
        if c:
            trace.append(f"inf_typical holds for {_label_str(lab)}")
            return Verdict("TypicalCertified", [c], trace)
        trace.append(f"inf_typical fails for {_label_str(lab)}")
    for lab, p in cands:
        if p.is_constant():
            continue
        c = one_branch_at_infinity(p, config.refine_depth, label=lab, critical=crit)
        if c:
            trace.append(f"one real branch at infinity for {_label_str(lab)}")
            return Verdict("TypicalCertified", [c], trace)
    trace.append("no pencil member certified")
    return Verdict("Inconclusive", [], trace)


def _label_str(lab: dict) -> str:
    if lab["component"] == "pencil":
        return f"f + ({lab['mu']})*g"
    return lab["component"]


# --- verification -----------------------------------------------------------------

def verify_certificate(cert: Certificate, f: Poly2, g: Poly2) -> bool:
    """Independent re-check of a certificate against the pair ``(f, g)``."""
    p = cert.payload
    J = jacobian_det(f, g)
    k = cert.kind
    if k == "DirectWitness":
        if p.get("identically_zero"):
            return J.is_zero()
        if "zero" in p:
            return not J.is_constant() and J(*_unpt(p["zero"])) == 0
        return J(*_unpt(p["positive"])) > 0 and J(*_unpt(p["negative"])) < 0
    if k == "CriticalPoint":
        q = _candidate_poly(f, g, p["candidate"])
        pt = _unpt(p["point"])
        return (partial_derivative(q, "x")(*pt) == 0 and partial_derivative(q, "y")(*pt) == 0
                and J(*pt) == 0)
    if k == "Znak0":
        a, b = (g, f) if p.get("swapped") else (f, g)
        F = UniPoly(map(Fraction, p["F_coeffs"]))
        G = UniPoly(map(Fraction, p["G_coeffs"]))
        t = Poly2.monomial(1, 1)
        if a != Poly2.x() * _compose_uni(F, t) or b != Poly2.y() * _compose_uni(G, t):
            return False
        H = UniPoly.t() * F * G
        if jacobian_det(a, b) != _compose_uni(H.derivative(), t):
            return False
        FG = F * G
        core = FG.shift_down(FG.trailing_zeros())
        if core.is_constant() or sturm_count_real_roots(core) == 0:
            return False
        return _witnesses_ok(jacobian_det(a, b), p.get("witnesses"))
    if k == "Znak":
        a, b = (g, f) if p.get("swapped") else (f, g)
        ab = _znak_form(a)
        if ab is None or str(ab[1]) != p["b"]:
            return False
        if support_value(newton_polygon(b), _ZNAK_XI) != -1:
            return False
        return _witnesses_ok(jacobian_det(a, b), p.get("witnesses"))
    if k == "VertexParity":
        a, b = (g, f) if p.get("swapped") else (f, g)
        if "linear" in p:
            M = [[Fraction(c) for c in row] for row in p["linear"]]
            a, b = linear_change(a, M), linear_change(b, M)
        data = _vertex_parity_data(a, b, p["xi"])
        if data is None or [list(data[0]), list(data[1])] != [p["alpha"], p["beta"]]:
            return False
        return _witnesses_ok(jacobian_det(a, b), p.get("witnesses"))
    if k == "Hrc":
        target = {"f": f, "g": g, "transpose(f)": transpose(f),
                  "transpose(g)": transpose(g)}[p["polynomial"]]
        e = _hrc_edge(target)
        if e is None or [list(q) for q in e.points] != p["edge"]:
            return False
        return _witnesses_ok(J if p["polynomial"] == "f" else -J, p.get("witnesses"))
    if k == "InfTypical":
        q = _candidate_poly(f, g, p["candidate"])
        if format_poly(q) != p["polynomial"] or not is_convenient(q):
            return False
        if any(is_degenerate_on_edge(q, e) for e in outer_edges(newton_polygon(q))):
            return False
        return (J.is_constant() and not J.is_zero()
                and verify_critical_evidence(q, p["critical_points"], _partner(f, g, q)))
    if k == "OneRealBranchAtInfinity":
        q = _candidate_poly(f, g, p["candidate"])
        if format_poly(q) != p["polynomial"]:
            return False
        pts = infinity_real_points(leading_form(q))
        if len(pts) != 1 or pts[0].multiplicity != 1:
            return False
        return (J.is_constant() and not J.is_zero()
                and verify_critical_evidence(q, p["critical_points"], _partner(f, g, q)))
    if k == "TrustedFact":
        return _verify_trusted(p, f, g, J)
    return False


def _partner(f: Poly2, g: Poly2, q: Poly2) -> Poly2:
    return f if q == g else g


def _compose_uni(u: UniPoly, t: Poly2) -> Poly2:
    out = Poly2.zero()
    for c in reversed(u.coeffs):
        out = out * t + c
    return out


def _verify_trusted(p: dict, f: Poly2, g: Poly2, J: Poly2) -> bool:
    if not (J.is_constant() and not J.is_zero()):
        return False
    fact = p.get("fact")
    if fact == "deg<=4":
        return min(total_degree(f), total_degree(g)) <= 4
    if fact == "deg<=4 after pencil":
        c = Fraction(p["c"])
        return total_degree(g - f * c) <= 4
    return False
