"""Newton polygons, support functions, faces and outer edges."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, NamedTuple, Sequence, Union

from .polyarith import Monomial, Poly2, restrict, transpose

__all__ = [
    "Direction", "LatticePolygon", "Face", "support", "newton_polygon", "convex_hull",
    "support_value", "face", "outer_edges", "edges", "edge_interior_lattice_points",
    "symbolic_restriction", "face_restriction", "is_convenient", "transpose",
    "polygon_transpose", "primitive",
]


class Direction(NamedTuple):
    xi1: int
    xi2: int

    def dot(self, m: Monomial) -> int:
        return self.xi1 * m[0] + self.xi2 * m[1]

    def is_outer(self) -> bool:
        return self.xi1 > 0 or self.xi2 > 0


def primitive(v: Sequence[int]) -> Direction:
    g = math.gcd(v[0], v[1])
    if g == 0:
        raise ValueError("zero direction")
    return Direction(v[0] // g, v[1] // g)


def _cross(o: Monomial, a: Monomial, b: Monomial) -> int:
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def convex_hull(points: Iterable[Monomial]) -> tuple[Monomial, ...]:
    """Strictly convex hull, counterclockwise from the lexicographically smallest point."""
    pts = sorted(set((int(p[0]), int(p[1])) for p in points))
    if len(pts) <= 2:
        return tuple(pts)
    lower: list[Monomial] = []
    for p in pts:
        while len(lower) >= 2 and _cross(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    upper: list[Monomial] = []
    for p in reversed(pts):
        while len(upper) >= 2 and _cross(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    hull = lower[:-1] + upper[:-1]
    return tuple(hull)


@dataclass(frozen=True)
class LatticePolygon:
    """Convex lattice polygon in the closed first quadrant.

    ``vertices`` run counterclockwise from the lexicographically smallest one;
    a segment has two vertices and a point has one.
    """

    vertices: tuple[Monomial, ...]

    def __post_init__(self):
        verts = tuple((int(i), int(j)) for i, j in self.vertices)
        if not verts:
            raise ValueError("empty polygon")
        if any(i < 0 or j < 0 for i, j in verts):
            raise ValueError("polygon leaves the first quadrant")
        if convex_hull(verts) != verts:
            raise ValueError(f"vertices {list(verts)} are not a canonical strictly convex chain")
        object.__setattr__(self, "vertices", verts)

    @classmethod
    def hull_of(cls, points: Iterable[Monomial]) -> "LatticePolygon":
        return cls(convex_hull(points))

    @property
    def dimension(self) -> int:
        return min(len(self.vertices) - 1, 2)

    def contains(self, m: Monomial) -> bool:
        v = self.vertices
        if len(v) == 1:
            return tuple(m) == v[0]
        if len(v) == 2:
            a, b = v
            return (_cross(a, b, m) == 0
                    and min(a[0], b[0]) <= m[0] <= max(a[0], b[0])
                    and min(a[1], b[1]) <= m[1] <= max(a[1], b[1]))
        return all(_cross(v[k], v[(k + 1) % len(v)], m) >= 0 for k in range(len(v)))

    def lattice_points(self) -> list[Monomial]:
        xs = [p[0] for p in self.vertices]
        ys = [p[1] for p in self.vertices]
        return [(i, j) for i in range(min(xs), max(xs) + 1)
                for j in range(min(ys), max(ys) + 1) if self.contains((i, j))]

    def transpose(self) -> "LatticePolygon":
        return LatticePolygon.hull_of((j, i) for i, j in self.vertices)

    def to_json(self) -> dict:
        return {"vertices": [list(p) for p in self.vertices]}

    @classmethod
    def from_json(cls, obj) -> "LatticePolygon":
        verts = obj["vertices"] if isinstance(obj, dict) else obj
        return cls.hull_of(tuple(p) for p in verts)

    def __str__(self):
        return "conv{" + ",".join(f"({i},{j})" for i, j in self.vertices) + "}"


@dataclass(frozen=True)
class Face:
    polygon: LatticePolygon
    direction: Direction
    points: tuple[Monomial, ...]
    value: int

    @property
    def is_edge(self) -> bool:
        return len(self.points) == 2

    def contains(self, m: Monomial) -> bool:
        if self.direction.dot(m) != self.value:
            return False
        if not self.is_edge:
            return tuple(m) == self.points[0]
        a, b = self.points
        return (min(a[0], b[0]) <= m[0] <= max(a[0], b[0])
                and min(a[1], b[1]) <= m[1] <= max(a[1], b[1]))

    def to_json(self) -> dict:
        return {"direction": list(self.direction), "points": [list(p) for p in self.points],
                "value": self.value}

    def __str__(self):
        return "–".join(f"({i},{j})" for i, j in self.points)


def support(p: Poly2) -> frozenset[Monomial]:
    if p.is_zero():
        raise ValueError("support of the zero polynomial")
    return p.support()


def newton_polygon(p: Poly2) -> LatticePolygon:
    return LatticePolygon.hull_of(support(p))


def support_value(poly: LatticePolygon, xi: Sequence[int]) -> int:
    xi = Direction(*xi)
    return max(xi.dot(v) for v in poly.vertices)


def face(poly: LatticePolygon, xi: Sequence[int]) -> Face:
    """The face on which ``<xi, .>`` is maximal; a vertex or an edge."""
    xi = Direction(*xi)
    if xi == (0, 0):
        raise ValueError("zero direction")
    value = support_value(poly, xi)
    verts = poly.vertices
    idx = [k for k, v in enumerate(verts) if xi.dot(v) == value]
    if len(idx) == 1:
        pts = (verts[idx[0]],)
    elif len(verts) == 2:
        pts = verts
    else:
        k0, k1 = idx
        # counterclockwise order along the boundary
        pts = (verts[k0], verts[k1]) if k1 == k0 + 1 else (verts[k1], verts[k0])
    return Face(poly, xi, pts, value)


def edges(poly: LatticePolygon) -> list[Face]:
    """All edges with their primitive outward normals, counterclockwise."""
    v = poly.vertices
    if len(v) == 1:
        raise ValueError("a point has no edges")
    if len(v) == 2:
        a, b = v
        out = []
        for s, t in ((a, b), (b, a)):
            n = primitive((t[1] - s[1], s[0] - t[0]))
            out.append(Face(poly, n, (a, b), n.dot(a)))
        return out
    out = []
    for k in range(len(v)):
        a, b = v[k], v[(k + 1) % len(v)]
        n = primitive((b[1] - a[1], a[0] - b[0]))
        out.append(Face(poly, n, (a, b), n.dot(a)))
    return out


def outer_edges(poly: LatticePolygon) -> list[Face]:
    """Edges whose outward normal has a positive coordinate.

    A segment is a single edge with two normals; it is outer when either normal is.
    """
    es = [e for e in edges(poly) if e.direction.is_outer()]
    if len(poly.vertices) == 2:
        return es[:1]
    return es


def edge_interior_lattice_points(e: Face) -> list[Monomial]:
    if not e.is_edge:
        raise ValueError("vertex face has no interior")
    (a0, a1), (b0, b1) = e.points
    g = math.gcd(b0 - a0, b1 - a1)
    di, dj = (b0 - a0) // g, (b1 - a1) // g
    return [(a0 + k * di, a1 + k * dj) for k in range(1, g)]


def symbolic_restriction(p: Poly2, S: Union[Face, Iterable[Monomial]]) -> Poly2:
    """Terms of ``p`` whose exponents lie in the face or point set ``S``."""
    if isinstance(S, Face):
        return Poly2({m: c for m, c in p.terms.items() if S.contains(m)})
    return restrict(p, S)


def face_restriction(p: Poly2, xi: Sequence[int]) -> Poly2:
    """``p^xi``: the restriction of ``p`` to its own ``xi``-face."""
    return symbolic_restriction(p, face(newton_polygon(p), xi))


def is_convenient(p: Poly2) -> bool:
    s = support(p)
    return any(i >= 1 and j == 0 for i, j in s) and any(i == 0 and j >= 1 for i, j in s)


def polygon_transpose(poly: LatticePolygon) -> LatticePolygon:
    return poly.transpose()
