"""Exhaustive enumeration of candidate Newton polygons and audits of figure lists."""

from __future__ import annotations

import json
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from importlib import resources
from typing import Iterable, Optional

from .newton import LatticePolygon, Monomial, convex_hull, edge_interior_lattice_points, outer_edges

__all__ = [
    "PolygonConstraints", "AuditReport", "RegionTooLarge", "enumerate_polygons",
    "satisfies", "transpose_dedupe", "canonical_key", "audit_case", "lattice_free_rule",
    "load_paper_polygons", "CASES", "CASE_PAPER_IDS", "MAX_REGION_POINTS",
]

MAX_REGION_POINTS = 24


class RegionTooLarge(ValueError):
    pass


@dataclass(frozen=True)
class PolygonConstraints:
    max_degree: int
    required: frozenset = frozenset()
    forbidden: frozenset = frozenset()
    extra_points: frozenset = frozenset()
    top_face: Optional[tuple[Monomial, Monomial]] = None
    x_saturated: bool = False
    transpose_dedupe: bool = False
    no_positive_slope_outer_edge: bool = False

    def __post_init__(self):
        for name in ("required", "forbidden", "extra_points"):
            object.__setattr__(self, name, frozenset(tuple(p) for p in getattr(self, name)))
        if self.top_face is not None:
            object.__setattr__(self, "top_face", tuple(tuple(p) for p in self.top_face))
        if self.required & self.forbidden:
            raise ValueError("required and forbidden points overlap")
        region = set(self.region())
        if not self.required <= region:
            raise ValueError("required points outside the region")
        if self.top_face is not None and not set(self.top_face) <= region:
            raise ValueError("top face outside the region")

    def region(self) -> list[Monomial]:
        d = self.max_degree
        pts = {(i, j) for i in range(d + 1) for j in range(d + 1 - i)} | set(self.extra_points)
        return sorted(pts)

    def top_degree(self) -> int:
        return max(i + j for i, j in self.region())

    def closure(self, p: Monomial) -> set[Monomial]:
        if self.x_saturated:
            return {(k, p[1]) for k in range(p[0] + 1)}
        return {p}

    def to_json(self) -> dict:
        return {
            "max_degree": self.max_degree,
            "required": sorted(map(list, self.required)),
            "forbidden": sorted(map(list, self.forbidden)),
            "extra_points": sorted(map(list, self.extra_points)),
            "top_face": [list(p) for p in self.top_face] if self.top_face else None,
            "x_saturated": self.x_saturated,
            "transpose_dedupe": self.transpose_dedupe,
            "no_positive_slope_outer_edge": self.no_positive_slope_outer_edge,
        }

    @classmethod
    def from_json(cls, obj: dict) -> "PolygonConstraints":
        known = {"max_degree", "required", "forbidden", "extra_points", "top_face",
                 "x_saturated", "transpose_dedupe", "no_positive_slope_outer_edge"}
        unknown = set(obj) - known
        if unknown:
            raise ValueError(f"unknown constraint fields {sorted(unknown)}")
        kw = dict(obj)
        for name in ("required", "forbidden", "extra_points"):
            if name in kw:
                kw[name] = frozenset(tuple(p) for p in kw[name])
        if kw.get("top_face") is not None:
            kw["top_face"] = tuple(tuple(p) for p in kw["top_face"])
        return cls(**kw)


def canonical_key(poly: LatticePolygon) -> tuple:
    return poly.vertices


def _hull_contains(hull: tuple, p: Monomial) -> bool:
    n = len(hull)
    if n == 0:
        return False
    if n == 1:
        return hull[0] == p
    if n == 2:
        a, b = hull
        cr = (b[0] - a[0]) * (p[1] - a[1]) - (b[1] - a[1]) * (p[0] - a[0])
        return (cr == 0 and min(a[0], b[0]) <= p[0] <= max(a[0], b[0])
                and min(a[1], b[1]) <= p[1] <= max(a[1], b[1]))
    for k in range(n):
        a, b = hull[k], hull[(k + 1) % n]
        if (b[0] - a[0]) * (p[1] - a[1]) - (b[1] - a[1]) * (p[0] - a[0]) < 0:
            return False
    return True


def _positive_slope_outer(poly: LatticePolygon) -> bool:
    if len(poly.vertices) < 2:
        return False
    for e in outer_edges(poly):
        (a0, a1), (b0, b1) = e.points
        if (b0 - a0) * (b1 - a1) > 0:
            return True
    return False


def satisfies(poly: LatticePolygon, c: PolygonConstraints) -> bool:
    """Post hoc check of every constraint on a finished polygon."""
    verts = set(poly.vertices)
    region = set(c.region())
    if not verts <= region or verts & c.forbidden:
        return False
    if not all(poly.contains(p) for p in c.required):
        return False
    if c.top_face is not None:
        top = c.top_degree()
        on_line = [p for p in poly.lattice_points() if p[0] + p[1] == top]
        ends = {min(on_line), max(on_line)} if on_line else set()
        if ends != set(c.top_face):
            return False
    if c.x_saturated:
        for p in poly.lattice_points():
            if p[0] > 0 and not poly.contains((p[0] - 1, p[1])):
                return False
    if c.no_positive_slope_outer_edge and _positive_slope_outer(poly):
        return False
    return True


def _free_points(c: PolygonConstraints) -> tuple[list[Monomial], frozenset]:
    region = c.region()
    if len(region) > MAX_REGION_POINTS:
        raise RegionTooLarge(f"region has {len(region)} points, limit {MAX_REGION_POINTS}")
    base: set[Monomial] = set()
    for p in c.required:
        base |= c.closure(p)
    if base & c.forbidden:
        return [], frozenset()
    free = [p for p in region if p not in base and p not in c.forbidden
            and not (c.closure(p) & c.forbidden)]
    return free, frozenset(base)


def _dfs(free: list[Monomial], closures: list[frozenset], start: int, hull: tuple,
         out: set) -> None:
    seen: set = set()
    stack = [(start, hull)]
    while stack:
        idx, h = stack.pop()
        if (idx, h) in seen:
            continue
        seen.add((idx, h))
        if idx == len(free):
            out.add(h)
            continue
        stack.append((idx + 1, h))
        add = closures[idx]
        if all(_hull_contains(h, q) for q in add):
            continue
        stack.append((idx + 1, convex_hull(set(h) | add)))


def _prefix_states(free, closures, base_hull, k):
    states = [(0, base_hull)]
    for idx in range(min(k, len(free))):
        nxt = []
        for _, h in states:
            nxt.append((idx + 1, h))
            if not all(_hull_contains(h, q) for q in closures[idx]):
                nxt.append((idx + 1, convex_hull(set(h) | closures[idx])))
        states = list(dict.fromkeys(nxt))
    return states


def _worker(args):
    free, closures, start, hull = args
    out: set = set()
    _dfs(free, closures, start, hull, out)
    return out


def enumerate_polygons(c: PolygonConstraints, jobs: int = 1) -> list[LatticePolygon]:
    """All distinct hulls of admissible supports, sorted by canonical key."""
    free, base = _free_points(c)
    closures = [frozenset(c.closure(p)) for p in free]
    base_hull = convex_hull(base)
    hulls: set = set()
    if jobs > 1 and free:
        k = min(len(free), max(1, math.ceil(math.log2(jobs)) + 2))
        states = _prefix_states(free, closures, base_hull, k)
        with ProcessPoolExecutor(max_workers=jobs) as ex:
            for part in ex.map(_worker, [(free, closures, i, h) for i, h in states]):
                hulls |= part
    else:
        _dfs(free, closures, 0, base_hull, hulls)
    polys = [LatticePolygon(h) for h in hulls if h]
    polys = [p for p in polys if satisfies(p, c)]
    if c.transpose_dedupe:
        polys = transpose_dedupe(polys)
    return sorted(set(polys), key=canonical_key)


def transpose_dedupe(polys: Iterable[LatticePolygon]) -> list[LatticePolygon]:
    reps = {}
    for p in polys:
        r = min(p, p.transpose(), key=canonical_key)
        reps[canonical_key(r)] = r
    return [reps[k] for k in sorted(reps)]


# --- audit -------------------------------------------------------------------------

def lattice_free_rule(poly: LatticePolygon, top_face=None) -> bool:
    """Every outer edge except the fixed top face lacks interior lattice points."""
    if len(poly.vertices) < 2:
        return True
    skip = set(top_face) if top_face else None
    for e in outer_edges(poly):
        if skip is not None and set(e.points) == skip:
            continue
        if edge_interior_lattice_points(e):
            return False
    return True


RULE_NAME = "lattice_point_free_outer_edges"


@dataclass
class AuditReport:
    case: str
    enumerated: list[LatticePolygon]
    matched: dict[str, LatticePolygon]
    extras: list[tuple[LatticePolygon, Optional[str]]]
    missing: list[str]
    survivors: list[str] = field(default_factory=list)

    @property
    def undismissed(self) -> list[LatticePolygon]:
        return [p for p, rule in self.extras if rule is None]

    @property
    def passed(self) -> bool:
        return not self.missing and not self.undismissed

    def as_json(self) -> dict:
        return {
            "case": self.case,
            "passed": self.passed,
            "enumerated": [p.to_json()["vertices"] for p in self.enumerated],
            "matched": {k: v.to_json()["vertices"] for k, v in self.matched.items()},
            "extras": [{"vertices": p.to_json()["vertices"], "dismissed_by": rule}
                       for p, rule in self.extras],
            "missing": list(self.missing),
            "survivors": list(self.survivors),
        }


def _id_order(name: str):
    return (int(name[1:]) if name[1:].isdigit() else math.inf, name)


def audit_case(case_id: str, paper_list: dict[str, LatticePolygon],
               constraints: Optional[PolygonConstraints] = None, jobs: int = 1) -> AuditReport:
    """Match enumerated polygons against a figure list and dismiss the rest."""
    c = constraints if constraints is not None else CASES[case_id]
    for name, p in paper_list.items():
        if not isinstance(p, LatticePolygon):
            raise ValueError(f"reference polygon {name} is malformed")
    enumerated = enumerate_polygons(c, jobs=jobs)
    by_key = {canonical_key(p): p for p in enumerated}
    matched: dict[str, LatticePolygon] = {}
    used = set()
    missing = []
    for name in sorted(paper_list, key=_id_order):
        p = paper_list[name]
        cands = [p, p.transpose()] if c.transpose_dedupe else [p]
        hit = next((q for q in cands if canonical_key(q) in by_key), None)
        if hit is None:
            missing.append(name)
            continue
        matched[name] = p
        used.add(canonical_key(hit))
    extras = []
    for p in enumerated:
        if canonical_key(p) in used:
            continue
        extras.append((p, RULE_NAME if lattice_free_rule(p, c.top_face) else None))
    survivors = [n for n, p in matched.items() if not lattice_free_rule(p, c.top_face)]
    return AuditReport(case_id, enumerated, matched, extras, missing, survivors)


# --- built-in cases and data ----------------------------------------------------------

def _pts(*ps):
    return frozenset(ps)


CASES: dict[str, PolygonConstraints] = {
    "II": PolygonConstraints(
        5, _pts((1, 0), (0, 1), (5, 0), (2, 3)), _pts((0, 0), (0, 5), (1, 4)),
        top_face=((2, 3), (5, 0))),
    "III": PolygonConstraints(
        5, _pts((1, 0), (0, 1), (5, 0), (3, 2)), _pts((0, 0), (0, 5), (1, 4), (2, 3)),
        top_face=((3, 2), (5, 0))),
    "IV-x4": PolygonConstraints(
        5, _pts((1, 0), (0, 1), (5, 0), (4, 1)),
        _pts((0, 0), (0, 5), (1, 4), (2, 3), (3, 2)), top_face=((4, 1), (5, 0))),
    "IV-x2y2": PolygonConstraints(
        5, _pts((1, 0), (0, 1), (3, 2), (2, 3)),
        _pts((0, 0), (0, 5), (1, 4), (4, 1), (5, 0)), top_face=((2, 3), (3, 2)),
        transpose_dedupe=True),
    "THM2": PolygonConstraints(
        4, _pts((0, 0), (5, 0)), extra_points=_pts((5, 0)), x_saturated=True,
        no_positive_slope_outer_edge=True),
}

CASE_PAPER_IDS: dict[str, list[str]] = {
    "II": [f"D{k}" for k in range(1, 6)],
    "III": [f"D{k}" for k in range(7, 16)],
    "IV-x4": [f"D{k}" for k in range(16, 25)],
    "IV-x2y2": [f"D{k}" for k in list(range(25, 32)) + list(range(33, 37))],
    "THM2": [f"D{k}" for k in range(37, 47)],
}


def load_paper_polygons(path=None) -> dict[str, LatticePolygon]:
    """Figure polygons keyed by ID; vertices are re-canonicalised and checked."""
    if path is None:
        text = resources.files("jacpair").joinpath("data/polygons.json").read_text()
    else:
        with open(path) as fh:
            text = fh.read()
    raw = json.loads(text)
    if not isinstance(raw, dict):
        raise ValueError("polygon file must map IDs to polygons")
    out = {}
    for name, obj in raw.items():
        verts = [tuple(v) for v in obj["vertices"]]
        poly = LatticePolygon.hull_of(verts)
        if set(poly.vertices) != set(verts) or len(poly.vertices) != len(verts):
            raise ValueError(f"{name}: listed points are not the vertices of a convex polygon")
        out[name] = poly
    return out
