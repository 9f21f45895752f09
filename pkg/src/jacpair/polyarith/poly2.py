"""Sparse exact-rational polynomials in x and y."""

from __future__ import annotations

from fractions import Fraction
from types import MappingProxyType
from typing import Iterable, Iterator, Mapping, Optional, Sequence

from .unipoly import UniPoly

Monomial = tuple[int, int]


def _frac(c) -> Fraction:
    if isinstance(c, Fraction):
        return c
    if isinstance(c, float):
        raise TypeError("float coefficients are not allowed; use Fraction")
    return Fraction(c)


def grlex_key(m: Monomial) -> tuple[int, int]:
    """Sort key for the canonical order: total degree, then x-exponent, descending."""
    return (-(m[0] + m[1]), -m[0])


class Poly2:
    """Immutable sparse polynomial; no stored coefficient is zero."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Optional[Mapping[Monomial, object]] = None):
        clean: dict[Monomial, Fraction] = {}
        for (i, j), c in (terms or {}).items():
            if not (isinstance(i, int) and isinstance(j, int)) or i < 0 or j < 0:
                raise ValueError(f"exponents must be non-negative integers, got {(i, j)}")
            c = _frac(c)
            if c:
                clean[(i, j)] = clean.get((i, j), Fraction(0)) + c
        object.__setattr__(self, "_terms", {m: c for m, c in clean.items() if c})
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("Poly2 is immutable")

    @classmethod
    def _raw(cls, terms: dict[Monomial, Fraction]) -> "Poly2":
        obj = object.__new__(cls)
        object.__setattr__(obj, "_terms", {m: c for m, c in terms.items() if c})
        object.__setattr__(obj, "_hash", None)
        return obj

    @classmethod
    def zero(cls) -> "Poly2":
        return cls._raw({})

    @classmethod
    def const(cls, c) -> "Poly2":
        return cls._raw({(0, 0): _frac(c)})

    @classmethod
    def monomial(cls, i: int, j: int, c=1) -> "Poly2":
        return cls({(i, j): c})

    @classmethod
    def x(cls) -> "Poly2":
        return cls._raw({(1, 0): Fraction(1)})

    @classmethod
    def y(cls) -> "Poly2":
        return cls._raw({(0, 1): Fraction(1)})

    # --- inspection ---------------------------------------------------------

    @property
    def terms(self) -> Mapping[Monomial, Fraction]:
        return MappingProxyType(self._terms)

    def items(self) -> Iterator[tuple[Monomial, Fraction]]:
        """Terms in canonical (graded lexicographic, descending) order."""
        for m in sorted(self._terms, key=grlex_key):
            yield m, self._terms[m]

    def support(self) -> frozenset[Monomial]:
        return frozenset(self._terms)

    def coeff(self, i: int, j: int) -> Fraction:
        return self._terms.get((i, j), Fraction(0))

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return all(m == (0, 0) for m in self._terms)

    def constant_term(self) -> Fraction:
        return self.coeff(0, 0)

    def __len__(self) -> int:
        return len(self._terms)

    def degree_in(self, var: str) -> int:
        k = _var_index(var)
        return max((m[k] for m in self._terms), default=-1)

    # --- arithmetic ---------------------------------------------------------

    def _coerce(self, other) -> "Poly2":
        if isinstance(other, Poly2):
            return other
        if isinstance(other, (int, Fraction)):
            return Poly2.const(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for m, c in other._terms.items():
            out[m] = out.get(m, Fraction(0)) + c
        return Poly2._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return Poly2._raw({m: -c for m, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return scale(self, other)
        if not isinstance(other, Poly2):
            return NotImplemented
        out: dict[Monomial, Fraction] = {}
        for (i1, j1), c1 in self._terms.items():
            for (i2, j2), c2 in other._terms.items():
                m = (i1 + i2, j1 + j2)
                out[m] = out.get(m, Fraction(0)) + c1 * c2
        return Poly2._raw(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("only non-negative integer powers")
        result = Poly2.const(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Poly2.const(other)
        if not isinstance(other, Poly2):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            object.__setattr__(self, "_hash", hash(frozenset(self._terms.items())))
        return self._hash

    def __repr__(self):
        from .parsing import format_poly
        return f"Poly2({format_poly(self)!r})"

    def __str__(self):
        from .parsing import format_poly
        return format_poly(self)

    def __call__(self, x0, y0):
        return eval_rational(self, x0, y0)


def _var_index(var: str) -> int:
    if var == "x":
        return 0
    if var == "y":
        return 1
    raise ValueError(f"unknown variable {var!r}")


def add(p: Poly2, q) -> Poly2:
    return p + q


def sub(p: Poly2, q) -> Poly2:
    return p - q


def mul(p: Poly2, q) -> Poly2:
    return p * q


def scale(p: Poly2, c) -> Poly2:
    c = _frac(c)
    if not c:
        return Poly2.zero()
    return Poly2._raw({m: v * c for m, v in p._terms.items()})


def partial_derivative(p: Poly2, var: str) -> Poly2:
    k = _var_index(var)
    out = {}
    for m, c in p._terms.items():
        e = m[k]
        if e:
            out[(m[0] - 1, m[1]) if k == 0 else (m[0], m[1] - 1)] = c * e
    return Poly2._raw(out)


def jacobian_det(f: Poly2, g: Poly2) -> Poly2:
    fx, fy = partial_derivative(f, "x"), partial_derivative(f, "y")
    gx, gy = partial_derivative(g, "x"), partial_derivative(g, "y")
    return fx * gy - fy * gx


def total_degree(p: Poly2) -> int:
    if p.is_zero():
        raise ValueError("degree of the zero polynomial")
    return max(i + j for i, j in p._terms)


def leading_form(p: Poly2) -> Poly2:
    d = total_degree(p)
    return Poly2._raw({m: c for m, c in p._terms.items() if m[0] + m[1] == d})


def is_homogeneous(p: Poly2) -> bool:
    return len({i + j for i, j in p._terms}) <= 1


def eval_rational(p: Poly2, x0, y0) -> Fraction:
    x0, y0 = _frac(x0), _frac(y0)
    xp: dict[int, Fraction] = {}
    yp: dict[int, Fraction] = {}
    total = Fraction(0)
    for (i, j), c in p._terms.items():
        if i not in xp:
            xp[i] = x0 ** i
        if j not in yp:
            yp[j] = y0 ** j
        total += c * xp[i] * yp[j]
    return total


def eval_float(p: Poly2, x0: float, y0: float) -> float:
    return sum(float(c) * x0 ** i * y0 ** j for (i, j), c in p._terms.items())


def compose(p: Poly2, X: Poly2, Y: Poly2) -> Poly2:
    """``p(X, Y)`` with polynomial substitutions for both variables."""
    xpow = [Poly2.const(1)]
    ypow = [Poly2.const(1)]
    out = Poly2.zero()
    for (i, j), c in p._terms.items():
        while len(xpow) <= i:
            xpow.append(xpow[-1] * X)
        while len(ypow) <= j:
            ypow.append(ypow[-1] * Y)
        out = out + scale(xpow[i] * ypow[j], c)
    return out


def linear_change(p: Poly2, M: Sequence[Sequence]) -> Poly2:
    """Substitute ``x -> M00*x + M01*y``, ``y -> M10*x + M11*y``."""
    (a, b), (c, d) = M
    a, b, c, d = map(_frac, (a, b, c, d))
    if a * d - b * c == 0:
        raise ValueError("singular linear change")
    X = Poly2({(1, 0): a, (0, 1): b})
    Y = Poly2({(1, 0): c, (0, 1): d})
    return compose(p, X, Y)


def substitute_affine(p: Poly2, a, b) -> Poly2:
    """Translate: ``x -> x + a``, ``y -> y + b``."""
    return compose(p, Poly2.x() + _frac(a), Poly2.y() + _frac(b))


def substitute_shear(p: Poly2, b, k: int, axis: str = "y") -> Poly2:
    """``y -> y + b*x^k`` for axis "y"; ``x -> x + b*y^k`` for axis "x"."""
    if k < 1:
        raise ValueError("shear exponent must be >= 1")
    if axis == "y":
        return compose(p, Poly2.x(), Poly2.y() + Poly2.monomial(k, 0, b))
    if axis == "x":
        return compose(p, Poly2.x() + Poly2.monomial(0, k, b), Poly2.y())
    raise ValueError(f"unknown shear axis {axis!r}")


def transpose(p: Poly2) -> Poly2:
    return Poly2._raw({(j, i): c for (i, j), c in p._terms.items()})


def restrict(p: Poly2, points: Iterable[Monomial]) -> Poly2:
    keep = set(points)
    return Poly2._raw({m: c for m, c in p._terms.items() if m in keep})


def coefficients_in(p: Poly2, var: str) -> dict[int, UniPoly]:
    """View ``p`` as a polynomial in ``var`` with coefficients univariate in the other variable."""
    k = _var_index(var)
    rows: dict[int, dict[int, Fraction]] = {}
    for m, c in p._terms.items():
        rows.setdefault(m[k], {})[m[1 - k]] = c
    out = {}
    for e, row in rows.items():
        coeffs = [Fraction(0)] * (max(row) + 1)
        for d, c in row.items():
            coeffs[d] = c
        out[e] = UniPoly(coeffs)
    return out


def from_unipoly(u: UniPoly, var: str = "x") -> Poly2:
    k = _var_index(var)
    return Poly2._raw({((e, 0) if k == 0 else (0, e)): c for e, c in enumerate(u.coeffs)})


def to_unipoly(p: Poly2, var: str = "x") -> UniPoly:
    """Interpret a polynomial in a single variable as a UniPoly."""
    k = _var_index(var)
    if any(m[1 - k] for m in p._terms):
        raise ValueError(f"polynomial is not univariate in {var}")
    n = max((m[k] for m in p._terms), default=-1)
    coeffs = [Fraction(0)] * (n + 1)
    for m, c in p._terms.items():
        coeffs[m[k]] = c
    return UniPoly(coeffs)


def divide_exact(p: Poly2, q: Poly2) -> Optional[Poly2]:
    """Quotient ``p / q`` when ``q`` divides ``p`` exactly, else None."""
    if q.is_zero():
        raise ZeroDivisionError("division by zero polynomial")
    lm_q = min(q._terms, key=grlex_key)
    lc_q = q._terms[lm_q]
    rem = dict(p._terms)
    quot: dict[Monomial, Fraction] = {}
    while rem:
        lm = min(rem, key=grlex_key)
        di, dj = lm[0] - lm_q[0], lm[1] - lm_q[1]
        if di < 0 or dj < 0:
            return None
        c = rem[lm] / lc_q
        quot[(di, dj)] = c
        for (i, j), cq in q._terms.items():
            m = (i + di, j + dj)
            v = rem.get(m, Fraction(0)) - c * cq
            if v:
                rem[m] = v
            else:
                rem.pop(m, None)
    return Poly2._raw(quot)


def monomial_content(p: Poly2) -> Monomial:
    """Largest ``(a, b)`` with ``x^a y^b`` dividing ``p``."""
    if p.is_zero():
        raise ValueError("monomial content of the zero polynomial")
    return (min(i for i, _ in p._terms), min(j for _, j in p._terms))


def shift_monomial(p: Poly2, di: int, dj: int) -> Poly2:
    """Multiply by ``x^di y^dj``; negative shifts must stay in the quadrant."""
    out = {}
    for (i, j), c in p._terms.items():
        if i + di < 0 or j + dj < 0:
            raise ValueError("monomial shift leaves the first quadrant")
        out[(i + di, j + dj)] = c
    return Poly2._raw(out)
