"""Univariate reduction of edge restrictions by a unimodular monomial change.

With ``xi`` the primitive outward normal of an edge and ``nu`` a complement
(``xi1*nu2 - xi2*nu1 = 1``), the substitution ``x = u^xi1 v^nu1``,
``y = u^xi2 v^nu2`` turns an edge restriction into ``u^a v^b F(1/v)``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .newton import Direction, Face, primitive, symbolic_restriction
from .polyarith import (Poly2, UniPoly, divide_exact, squarefree_decomposition,
                        squarefree_part, uni_gcd)

__all__ = [
    "EdgeReduction", "Degeneracy", "primitive_outward_normal", "complementary_unimodular",
    "edge_univariate", "reduce_restriction", "is_degenerate_on_edge", "common_square_factor",
    "lift_univariate",
]


@dataclass(frozen=True)
class EdgeReduction:
    xi: Direction
    nu: Direction
    uni: UniPoly
    monomial_prefactor: tuple[int, int]

    def __post_init__(self):
        assert self.xi[0] * self.nu[1] - self.xi[1] * self.nu[0] == 1
        assert self.uni.coeff(0) != 0

    def expand(self) -> Poly2:
        """Undo the substitution and return the edge restriction."""
        a, b = self.monomial_prefactor
        out = {}
        for k, c in enumerate(self.uni.coeffs):
            if c:
                # u^a v^(b-k) back in x, y
                out[_uv_to_xy(self.xi, self.nu, a, b - k)] = c
        return Poly2(out)


@dataclass(frozen=True)
class Degeneracy:
    degenerate: bool
    witness: Optional[UniPoly]
    reduction: EdgeReduction

    def __bool__(self):
        return self.degenerate


def _uv_to_xy(xi: Direction, nu: Direction, a: int, b: int) -> tuple[int, int]:
    # inverse of (i, j) -> (<xi,(i,j)>, <nu,(i,j)>), unimodular
    i = nu[1] * a - xi[1] * b
    j = -nu[0] * a + xi[0] * b
    if i < 0 or j < 0:
        raise ValueError("substitution leaves the polynomial ring")
    return i, j


def primitive_outward_normal(e: Face) -> Direction:
    if not e.is_edge:
        raise ValueError("vertex face has no edge normal")
    return primitive(e.direction)


def _ext_gcd(a: int, b: int) -> tuple[int, int, int]:
    x0, x1, y0, y1 = 1, 0, 0, 1
    while b:
        q = a // b
        a, b = b, a - q * b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    if a < 0:
        a, x0, y0 = -a, -x0, -y0
    return a, x0, y0


def complementary_unimodular(xi) -> Direction:
    """The ``nu`` of minimal Euclidean norm with ``xi1*nu2 - xi2*nu1 = 1``.

    Ties go to the larger ``nu1``.
    """
    x1, x2 = xi
    g, s, t = _ext_gcd(x1, x2)
    if g != 1:
        raise ValueError(f"direction {tuple(xi)} is not primitive")
    # x1*s + x2*t = 1 -> nu2 = s, nu1 = -t
    n1, n2 = -t, s
    nn = x1 * x1 + x2 * x2
    # nu + k*xi, k near the projection minimiser
    k0 = -(n1 * x1 + n2 * x2) / nn
    best = None
    for k in range(math.floor(k0) - 1, math.ceil(k0) + 2):
        c = (n1 + k * x1, n2 + k * x2)
        key = (c[0] ** 2 + c[1] ** 2, -c[0])
        if best is None or key < best[0]:
            best = (key, c)
    nu = Direction(*best[1])
    assert x1 * nu[1] - x2 * nu[0] == 1
    return nu


def reduce_restriction(r: Poly2, xi, nu=None) -> EdgeReduction:
    """Reduce a ``xi``-quasi-homogeneous polynomial to its univariate ``F``."""
    if r.is_zero():
        raise ValueError("zero restriction")
    xi = Direction(*xi)
    nu = complementary_unimodular(xi) if nu is None else Direction(*nu)
    us = {xi.dot(m) for m in r.support()}
    if len(us) != 1:
        raise ValueError("restriction is not quasi-homogeneous for the direction")
    a = us.pop()
    es = {m: nu.dot(m) for m in r.support()}
    top = max(es.values())
    coeffs = [Fraction(0)] * (top - min(es.values()) + 1)
    for m, c in r.terms.items():
        coeffs[top - es[m]] = c
    return EdgeReduction(xi, nu, UniPoly(coeffs), (a, top))


def edge_univariate(p: Poly2, e: Face) -> EdgeReduction:
    xi = primitive_outward_normal(e)
    r = symbolic_restriction(p, e)
    if r.is_zero():
        raise ValueError(f"restriction to edge {e} is zero")
    return reduce_restriction(r, xi)


def is_degenerate_on_edge(p: Poly2, e: Face) -> Degeneracy:
    """Degenerate iff ``F`` has a repeated nonconstant factor.

    The witness is the square-free part of ``gcd(F, F')``.
    """
    red = edge_univariate(p, e)
    F = red.uni
    d = uni_gcd(F, F.derivative())
    if d.is_constant():
        return Degeneracy(False, None, red)
    return Degeneracy(True, squarefree_part(d), red)


def lift_univariate(H: UniPoly, xi) -> Poly2:
    """``H(x^xi2 y^-xi1)`` times the minimal monomial making it a polynomial."""
    terms = {k: c for k, c in enumerate(H.coeffs) if c}
    exps = {k: (k * xi[1], -k * xi[0]) for k in terms}
    mi = min(e[0] for e in exps.values())
    mj = min(e[1] for e in exps.values())
    return Poly2({(exps[k][0] - mi, exps[k][1] - mj): c for k, c in terms.items()})


def common_square_factor(f: Poly2, g: Poly2, e: Face) -> Optional[Poly2]:
    """The ``h`` with ``h^2`` dividing both edge restrictions, if nonconstant.

    ``h`` is divisible by neither ``x`` nor ``y``, has leading univariate
    coefficient 1 and is checked by exact division.
    """
    xi = primitive_outward_normal(e)
    fe = symbolic_restriction(f, e)
    ge = symbolic_restriction(g, e)
    F = reduce_restriction(fe, xi).uni
    D = F if ge.is_zero() else uni_gcd(F, reduce_restriction(ge, xi).uni)
    H = UniPoly.constant(1)
    for fac, m in squarefree_decomposition(D):
        H = H * fac ** (m // 2)
    if H.is_constant():
        return None
    h = lift_univariate(H, xi)
    h2 = h * h
    for r in (fe, ge):
        if not r.is_zero() and divide_exact(r, h2) is None:
            raise ArithmeticError(f"reconstructed {h} does not square-divide {r}")
    return h
