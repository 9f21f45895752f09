"""Resultants and factor structure of binary forms."""

from __future__ import annotations

from fractions import Fraction

from .poly2 import (Poly2, coefficients_in, from_unipoly, is_homogeneous,
                    monomial_content, total_degree, transpose)
from .unipoly import UniPoly, interpolate, squarefree_decomposition, uni_gcd, uni_resultant


def sylvester_matrix(p: Poly2, q: Poly2, var: str = "y") -> list[list[UniPoly]]:
    """Sylvester matrix in ``var``: p-rows first, columns by ascending power."""
    cp, cq = coefficients_in(p, var), coefficients_in(q, var)
    m = max(cp, default=0)
    n = max(cq, default=0)
    size = m + n
    zero = UniPoly()
    rows = []
    for k in range(n):
        row = [zero] * size
        for e in range(m + 1):
            row[k + e] = cp.get(e, zero)
        rows.append(row)
    for k in range(m):
        row = [zero] * size
        for e in range(n + 1):
            row[k + e] = cq.get(e, zero)
        rows.append(row)
    return rows


def resultant(p: Poly2, q: Poly2, var: str = "y") -> Poly2:
    """Resultant eliminating ``var``.

    Sign convention: determinant of :func:`sylvester_matrix` (p-rows first,
    ascending columns), which equals ``(-1)^(m*n)`` times the textbook
    ``lc(p)^n lc(q)^m prod(a_i - b_j)``.  When ``p`` is constant in ``var``
    the result is ``p^deg(q)``.  Computed by evaluation at rational nodes and
    interpolation in the remaining variable.
    """
    if var == "x":
        return transpose(resultant(transpose(p), transpose(q), "y"))
    if var != "y":
        raise ValueError(f"unknown variable {var!r}")
    if p.is_zero() or q.is_zero():
        return Poly2.zero()
    cp, cq = coefficients_in(p, "y"), coefficients_in(q, "y")
    m, n = max(cp), max(cq)
    if m == 0 and n == 0:
        return Poly2.const(1)
    if m == 0:
        return _uni_pow(cp[0], n)
    if n == 0:
        return _uni_pow(cq[0], m)
    dp = max(u.degree for u in cp.values())
    dq = max(u.degree for u in cq.values())
    bound = n * dp + m * dq
    lcp, lcq = cp[m], cq[n]
    sign = -1 if (m * n) % 2 else 1
    xs, ys = [], []
    node = 0
    while len(xs) < bound + 1:
        a = Fraction(node)
        node = -node if node > 0 else -node + 1
        if lcp(a) == 0 or lcq(a) == 0:
            continue
        pa = UniPoly([cp[e](a) if e in cp else 0 for e in range(m + 1)])
        qa = UniPoly([cq[e](a) if e in cq else 0 for e in range(n + 1)])
        xs.append(a)
        ys.append(sign * uni_resultant(pa, qa))
    return from_unipoly(interpolate(xs, ys), "x")


def _uni_pow(u: UniPoly, k: int) -> Poly2:
    return from_unipoly(u ** k, "x")


# --- binary forms -----------------------------------------------------------

def split_form(D: Poly2) -> tuple[Fraction, int, int, UniPoly]:
    """Write a nonzero form as ``c * x^a * y^b * Phi`` with x, y not dividing Phi.

    Returns ``(c, a, b, phi)`` where ``phi(t) = Phi(1, t)`` is monic of degree
    ``deg Phi`` with nonzero constant term.
    """
    if D.is_zero():
        raise ValueError("zero form")
    if not is_homogeneous(D):
        raise ValueError("polynomial is not homogeneous")
    a, b = monomial_content(D)
    d = total_degree(D)
    coeffs = [Fraction(0)] * (d - a - b + 1)
    for (i, j), c in D.items():
        coeffs[j - b] = c
    phi = UniPoly(coeffs)
    c = phi.lc
    return c, a, b, phi.monic()


def homogenize(phi: UniPoly, degree: int | None = None) -> Poly2:
    """Form ``Phi(x, y) = x^d * phi(y/x)``."""
    d = phi.degree if degree is None else degree
    return Poly2({(d - k, k): c for k, c in enumerate(phi.coeffs)})


def form_gcd(F: Poly2, G: Poly2) -> Poly2:
    """Gcd of two nonzero forms, normalised to ``x^a y^b Phi`` with monic ``phi``."""
    _, a1, b1, p1 = split_form(F)
    _, a2, b2, p2 = split_form(G)
    g = homogenize(uni_gcd(p1, p2))
    return g * Poly2.monomial(min(a1, a2), min(b1, b2))


def form_factor_structure(D: Poly2) -> list[tuple[Poly2, int]]:
    """Square-free factor groups of a form as ``(form, multiplicity)`` pairs.

    The factors ``x`` and ``y`` are reported separately from the rest; each
    returned form is square-free and they are pairwise coprime within a
    multiplicity class.
    """
    _, a, b, phi = split_form(D)
    out = []
    if a:
        out.append((Poly2.x(), a))
    if b:
        out.append((Poly2.y(), b))
    for fac, m in squarefree_decomposition(phi):
        out.append((homogenize(fac), m))
    return out


def multiple_factor_product(D: Poly2) -> Poly2:
    """Product of ``p^m`` over the irreducible factors ``p`` of ``D`` with ``m >= 2``.

    Square-free decomposition groups irreducible factors by multiplicity, so
    no factorisation over the rationals is required.  The degree of the
    result is never 1.
    """
    h = Poly2.const(1)
    for fac, m in form_factor_structure(D):
        if m >= 2:
            h = h * fac ** m
    return h
